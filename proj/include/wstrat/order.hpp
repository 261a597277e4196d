#pragma once

#include <string>
#include <vector>

#include "wstrat/monomial.hpp"
#include "wstrat/ring.hpp"

namespace wstrat {

// Monomial orders: lex, grevlex, and block elimination (the eliminated
// variables dominate; grevlex within the eliminated set and within the rest).
class TermOrder {
  public:
    enum class Kind { lex, grevlex, elim };

    static TermOrder lex() { return TermOrder(Kind::lex); }
    static TermOrder grevlex() { return TermOrder(Kind::grevlex); }
    static TermOrder elim(std::vector<char> mask);

    Kind kind() const { return kind_; }
    const std::vector<char>& mask() const { return mask_; }

    // >0 iff a > b, 0 iff equal, <0 iff a < b.
    int cmp(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const {
        return cmp(a, b) > 0;
    }

    // Stable identifier used as the Groebner-cache key.
    std::string key() const;

  private:
    explicit TermOrder(Kind k) : kind_(k) {}
    Kind kind_;
    std::vector<char> mask_;  // elim only: 1 = eliminated variable
};

TermOrder order_from_name(const std::string& name);

}  // namespace wstrat
