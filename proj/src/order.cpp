#include "wstrat/order.hpp"

namespace wstrat {

TermOrder TermOrder::elim(std::vector<char> mask) {
    TermOrder o(Kind::elim);
    o.mask_ = std::move(mask);
    return o;
}

namespace {

// grevlex over the masked subset: higher total degree wins; on ties the
// rightmost nonzero entry of a - b being negative makes a greater.
int grevlex_cmp(const Monomial& a, const Monomial& b,
                const std::vector<char>* mask, char want) {
    long long da = 0, db = 0;
    int n = a.arity();
    for (int i = 0; i < n; ++i) {
        if (mask && (*mask)[i] != want) continue;
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = n - 1; i >= 0; --i) {
        if (mask && (*mask)[i] != want) continue;
        long long d = static_cast<long long>(a[i]) - b[i];
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

}  // namespace

int TermOrder::cmp(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::lex: {
            for (int i = 0; i < a.arity(); ++i) {
                long long d = static_cast<long long>(a[i]) - b[i];
                if (d != 0) return d > 0 ? 1 : -1;
            }
            return 0;
        }
        case Kind::grevlex:
            return grevlex_cmp(a, b, nullptr, 0);
        case Kind::elim: {
            int c = grevlex_cmp(a, b, &mask_, 1);
            if (c != 0) return c;
            return grevlex_cmp(a, b, &mask_, 0);
        }
    }
    return 0;
}

std::string TermOrder::key() const {
    switch (kind_) {
        case Kind::lex:
            return "lex";
        case Kind::grevlex:
            return "grevlex";
        case Kind::elim: {
            std::string k = "elim:";
            for (char c : mask_) k += c ? '1' : '0';
            return k;
        }
    }
    return "?";
}

TermOrder order_from_name(const std::string& name) {
    if (name == "lex") return TermOrder::lex();
    if (name == "grevlex") return TermOrder::grevlex();
    throw structural_error("unknown term order: " + name);
}

}  // namespace wstrat
