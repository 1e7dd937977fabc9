#include "plaus/big_rational.hpp"

#include <cctype>

#include "plaus/error.hpp"

namespace plaus {

std::string to_string(const BigRational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw Error(Errc::parse, "malformed rational '" + std::string(text) + "'");
    BigInteger n(std::string(num), 10);
    BigInteger d(std::string(den), 10);
    if (d == 0) throw Error(Errc::division_by_zero, "division by zero");
    BigRational q(negative ? BigInteger(-n) : n, d);
    q.canonicalize();
    return q;
}

}  // namespace plaus
