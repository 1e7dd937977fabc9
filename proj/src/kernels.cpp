#include "plaus/eps_parser.hpp"
#include "plaus/kernel.hpp"

namespace plaus {

namespace {

BigRational random_rational(Rng& rng, long max_den, bool allow_negative) {
    std::uniform_int_distribution<long> den_dist(1, max_den);
    const long den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(allow_negative ? -den : 0, den);
    BigRational q(num_dist(rng), den);
    q.canonicalize();
    return q;
}

}  // namespace

std::optional<BigRational> RationalKernel::disj(const BigRational& x, const BigRational& y) const {
    if (x > complement(y)) return std::nullopt;
    return BigRational(x + y);
}

BigRational RationalKernel::sample(Rng& rng) const { return random_rational(rng, 100, false); }

BigRational RationalKernel::parse(std::string_view text) const {
    EpsRational v = parse_eps_expr(text);
    if (!v.is_constant()) throw Error(Errc::invalid_argument, "'" + std::string(text) + "' is not a rational constant");
    return standard_part(v);
}

std::optional<EpsRational> EpsKernel::disj(const EpsRational& x, const EpsRational& y) const {
    if (x > complement(y)) return std::nullopt;
    return x + y;
}

EpsRational EpsKernel::sample(Rng& rng) const {
    const EpsRational e = EpsRational::eps();
    EpsRational v = EpsRational(random_rational(rng, 20, false)) + EpsRational(random_rational(rng, 20, true)) * e +
                    EpsRational(random_rational(rng, 20, true)) * e * e;
    if (v.sign() < 0) return EpsRational(0);
    if (v > EpsRational(1)) return EpsRational(1);
    return v;
}

EpsRational EpsKernel::parse(std::string_view text) const { return parse_eps_expr(text); }

std::optional<Truth> BoolKernel::disj(const Truth& x, const Truth& y) const {
    if (x == Truth::top && y == Truth::top) return std::nullopt;
    return x == Truth::top || y == Truth::top ? Truth::top : Truth::bottom;
}

Truth BoolKernel::sample(Rng& rng) const { return std::bernoulli_distribution(0.5)(rng) ? Truth::top : Truth::bottom; }

Truth BoolKernel::parse(std::string_view text) const {
    if (text == "top" || text == "1" || text == "true") return Truth::top;
    if (text == "bottom" || text == "0" || text == "false") return Truth::bottom;
    throw Error(Errc::invalid_argument, "'" + std::string(text) + "' is not a boolean plausibility");
}

std::optional<BigRational> BrokenComplementKernel::disj(const BigRational& x, const BigRational& y) const {
    if (x > complement(y)) return std::nullopt;
    return BigRational(x + y);
}

}  // namespace plaus
