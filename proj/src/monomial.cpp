#include "wstrat/monomial.hpp"

#include <numeric>

namespace wstrat {

Monomial::Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {
    deg_ = std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

void Monomial::set(int i, std::uint32_t v) {
    deg_ += v;
    deg_ -= e_[i];
    e_[i] = v;
}

Monomial Monomial::mul(const Monomial& o) const {
    Monomial r(*this);
    for (int i = 0; i < arity(); ++i) r.e_[i] += o.e_[i];
    r.deg_ = deg_ + o.deg_;
    return r;
}

Monomial Monomial::div(const Monomial& o) const {
    Monomial r(*this);
    for (int i = 0; i < arity(); ++i) r.e_[i] -= o.e_[i];
    r.deg_ = deg_ - o.deg_;
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
    if (deg_ < o.deg_) return false;
    for (int i = 0; i < arity(); ++i)
        if (e_[i] < o.e_[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r(*this);
    r.deg_ = 0;
    for (int i = 0; i < arity(); ++i) {
        r.e_[i] = e_[i] > o.e_[i] ? e_[i] : o.e_[i];
        r.deg_ += r.e_[i];
    }
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (int i = 0; i < arity(); ++i)
        if (e_[i] && o.e_[i]) return false;
    return true;
}

}  // namespace wstrat
