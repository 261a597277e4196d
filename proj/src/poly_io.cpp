#include "wstrat/poly_io.hpp"

#include <cctype>

namespace wstrat {

namespace {

std::string coeff_str(const Rational& q) { return q.get_str(); }

std::string monomial_str(const Ring& ring, const Monomial& m) {
    std::string s;
    for (int i = 0; i < ring.arity(); ++i) {
        if (!m[i]) continue;
        if (!s.empty()) s += '*';
        s += ring.var(i);
        if (m[i] > 1) {
            s += '^';
            s += std::to_string(m[i]);
        }
    }
    return s;
}

class Parser {
  public:
    Parser(const std::string& text, RingPtr ring)
        : text_(text), ring_(std::move(ring)) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    const std::string& text_;
    RingPtr ring_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, static_cast<int>(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                // '**' is an exponent operator, handled inside factor();
                // peeking two characters keeps it out of multiplication.
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') break;
                ++pos_;
                acc = acc * factor();
            } else if (c == '/') {
                ++pos_;
                Polynomial d = factor();
                if (!d.is_constant() || d.is_zero())
                    fail("division is only defined by nonzero constants");
                acc = acc.mul_scalar(Rational(1) / d.leading().coeff);
            } else {
                return acc;
            }
        }
        return acc;
    }

    Polynomial factor() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '+') {
            ++pos_;
            return factor();
        }
        Polynomial base = atom();
        c = peek();
        bool has_exp = false;
        if (c == '^') {
            ++pos_;
            has_exp = true;
        } else if (c == '*' && pos_ + 1 < text_.size() &&
                   text_[pos_ + 1] == '*') {
            pos_ += 2;
            has_exp = true;
        }
        if (!has_exp) return base;
        return base.pow(static_cast<unsigned>(integer_literal()));
    }

    Polynomial atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial::constant(ring_, Rational(integer_literal()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
            c == '@') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_' || text_[pos_] == '@'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            int idx = ring_->index_of(name);
            if (idx < 0) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return Polynomial::variable(ring_, idx);
        }
        fail(c ? std::string("unexpected character '") + c + "'"
               : std::string("unexpected end of input"));
    }

    unsigned long integer_literal() {
        skip_ws();
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an integer");
        unsigned long v = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (v > 100000000UL) fail("integer literal too large");
            v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }
};

}  // namespace

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const Ring& ring = *f.ring();
    std::string s;
    bool first = true;
    for (const Term& t : f.terms()) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                s += '-';
                c = -c;
            }
            first = false;
        } else {
            if (c < 0) {
                s += " - ";
                c = -c;
            } else {
                s += " + ";
            }
        }
        std::string mon = monomial_str(ring, t.mon);
        if (mon.empty()) {
            s += coeff_str(c);
        } else if (c == 1) {
            s += mon;
        } else {
            s += coeff_str(c);
            s += '*';
            s += mon;
        }
    }
    return s;
}

std::string to_string(const std::vector<Polynomial>& gens) {
    std::string s;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ", ";
        s += to_string(gens[i]);
    }
    return s;
}

Polynomial parse_poly(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

}  // namespace wstrat
