#pragma once

#include <cstdint>
#include <vector>

namespace wstrat {

// Exponent vector with cached total degree.  The arity is fixed by the ring.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(int arity) : e_(arity, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    int arity() const { return static_cast<int>(e_.size()); }
    std::uint32_t operator[](int i) const { return e_[i]; }
    std::uint64_t degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    void set(int i, std::uint32_t v);
    const std::vector<std::uint32_t>& exps() const { return e_; }

    Monomial mul(const Monomial& o) const;
    // Quotient this / o; caller must check divisibility first.
    Monomial div(const Monomial& o) const;
    bool divisible_by(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  private:
    std::vector<std::uint32_t> e_;
    std::uint64_t deg_ = 0;
};

}  // namespace wstrat
