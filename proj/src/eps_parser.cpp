#include "plaus/eps_parser.hpp"

#include <cctype>
#include <limits>

namespace plaus {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::unique_ptr<EpsExpr> parse() {
        auto e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        return e;
    }

private:
    using Node = std::unique_ptr<EpsExpr>;

    static Node binary(EpsExpr::Kind kind, Node lhs, Node rhs) {
        auto n = std::make_unique<EpsExpr>();
        n->kind = kind;
        n->lhs = std::move(lhs);
        n->rhs = std::move(rhs);
        return n;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (peek_digit()) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Node expr() {
        Node lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = binary(EpsExpr::Kind::add, std::move(lhs), term());
            else if (accept('-'))
                lhs = binary(EpsExpr::Kind::sub, std::move(lhs), term());
            else
                return lhs;
        }
    }

    Node term() {
        Node lhs = power();
        for (;;) {
            if (accept('*'))
                lhs = binary(EpsExpr::Kind::mul, std::move(lhs), power());
            else if (accept('/'))
                lhs = binary(EpsExpr::Kind::div, std::move(lhs), power());
            else
                return lhs;
        }
    }

    Node power() {
        Node base = atom();
        if (!accept('^')) return base;
        skip_ws();
        std::size_t at = pos_;
        if (!peek_digit()) throw SyntaxError(at, "expected nonnegative integer exponent");
        std::string d = digits();
        BigInteger e(d, 10);
        if (e > std::numeric_limits<unsigned>::max()) throw SyntaxError(at, "exponent too large");
        auto n = std::make_unique<EpsExpr>();
        n->kind = EpsExpr::Kind::pow;
        n->exponent = static_cast<unsigned>(e.get_ui());
        n->lhs = std::move(base);
        return n;
    }

    Node atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError(pos_, "expected operand");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Node inner = expr();
            if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
            return inner;
        }
        if (text_.substr(pos_, 3) == "eps") {
            pos_ += 3;
            auto n = std::make_unique<EpsExpr>();
            n->kind = EpsExpr::Kind::eps;
            return n;
        }
        if (c == '-') {
            ++pos_;
            if (peek_digit()) return rational(true);
            auto n = std::make_unique<EpsExpr>();
            n->kind = EpsExpr::Kind::neg;
            n->lhs = atom();
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational(false);
        throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
    }

    Node rational(bool negative) {
        BigInteger num(digits(), 10);
        BigInteger den(1);
        // "p/q" is one literal only when q follows the slash directly.
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            std::size_t at = pos_ + 1;
            ++pos_;
            den = BigInteger(digits(), 10);
            if (den == 0) throw Error(Errc::division_by_zero, "division by zero at position " + std::to_string(at));
        }
        auto n = std::make_unique<EpsExpr>();
        n->kind = EpsExpr::Kind::number;
        n->value = BigRational(negative ? BigInteger(-num) : num, den);
        n->value.canonicalize();
        return n;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<EpsExpr> parse_eps_ast(std::string_view text) { return Parser(text).parse(); }

EpsRational evaluate(const EpsExpr& e) {
    switch (e.kind) {
        case EpsExpr::Kind::number: return EpsRational(e.value);
        case EpsExpr::Kind::eps: return EpsRational::eps();
        case EpsExpr::Kind::neg: return -evaluate(*e.lhs);
        case EpsExpr::Kind::add: return evaluate(*e.lhs) + evaluate(*e.rhs);
        case EpsExpr::Kind::sub: return evaluate(*e.lhs) - evaluate(*e.rhs);
        case EpsExpr::Kind::mul: return evaluate(*e.lhs) * evaluate(*e.rhs);
        case EpsExpr::Kind::div: return evaluate(*e.lhs) / evaluate(*e.rhs);
        case EpsExpr::Kind::pow: return pow(evaluate(*e.lhs), e.exponent);
    }
    return {};
}

EpsRational parse_eps_expr(std::string_view text) { return evaluate(*parse_eps_ast(text)); }

}  // namespace plaus
