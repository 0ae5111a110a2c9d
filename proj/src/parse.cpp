#include "mzlab/parse.hpp"

#include <cctype>

namespace mzlab {

namespace {

class Parser {
  public:
    Parser(const std::string& text, const Ring& ring, const std::vector<std::string>& vars,
           bool laurent)
        : text_(text), ring_(ring), vars_(vars), laurent_(laurent) {}

    Poly run() {
        Poly f = expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
        return f;
    }

  private:
    Poly shape() const { return Poly::zero(ring_, vars_, laurent_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) throw parse_error(std::string("expected '") + c + "'", pos_);
    }

    Poly expr() {
        Poly f = term();
        for (;;) {
            if (accept('+'))
                f = f + term();
            else if (accept('-'))
                f = f - term();
            else
                return f;
        }
    }

    Poly term() {
        Poly f = factor();
        while (accept('*')) f = f * factor();
        return f;
    }

    Poly factor() {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error("expected a factor", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly f = expr();
            expect(')');
            return f;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return coefficient();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return var_factor();
        throw parse_error("expected a factor", pos_);
    }

    mpz_class integer() {
        skip_ws();
        size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error("expected an integer", pos_ < text_.size() ? pos_ : start);
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        mpz_class v(digits);
        return neg ? mpz_class(-v) : v;
    }

    long long small_exponent() {
        size_t at = pos_;
        mpz_class v = integer();
        if (v > 1000000 || v < -1000000) throw parse_error("exponent out of range", at);
        return v.get_si();
    }

    Poly coefficient() {
        size_t at = pos_;
        mpz_class num = integer();
        mpq_class v(num);
        if (accept('/')) {
            mpz_class den = integer();
            if (den == 0) throw parse_error("zero denominator", at);
            v = mpq_class(num, den);
            v.canonicalize();
        }
        try {
            return Poly::constant(ring_, vars_, laurent_, Coeff::from_mpq(ring_, v));
        } catch (const error& e) {
            throw parse_error(e.what(), at);
        }
    }

    Poly var_factor() {
        skip_ws();
        size_t at = pos_;
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            name += text_[pos_++];

        long long e = 1;
        bool has_exp = false;
        if (accept('^')) {
            e = small_exponent();
            has_exp = true;
        }
        (void)has_exp;

        if (ring_.tag == Ring::Tag::QLaurent && name == "t") {
            return Poly::constant(ring_, vars_, laurent_, Coeff::t_power(mpq_class(1), e));
        }
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i] != name) continue;
            if (e < 0 && !laurent_) throw negative_exponent_error(at);
            ExpVec ev(vars_.size(), 0);
            ev[i] = static_cast<int>(e);
            return Poly::monomial(ring_, vars_, laurent_, ev, Coeff::one(ring_));
        }
        throw unknown_variable_error(name, at);
    }

    const std::string& text_;
    Ring ring_;
    const std::vector<std::string>& vars_;
    bool laurent_;
    size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const Ring& ring, const std::vector<std::string>& vars,
                bool laurent) {
    if (ring.tag == Ring::Tag::QLaurent) {
        for (const auto& v : vars)
            if (v == "t") throw parse_error("variable name 't' is reserved over qlaurent", 0);
    }
    return Parser(text, ring, vars, laurent).run();
}

}  // namespace mzlab
