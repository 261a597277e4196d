#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "wstrat/poly.hpp"

namespace wstrat {

// Generator list plus a shared cache of reduced Groebner bases, one per term
// order.  Ideals are values: copies share the cache.  The basis for a given
// order is unique, so concurrent fills are idempotent.
class Ideal {
  public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    // Ideal whose generators are already a reduced Groebner basis for ord;
    // the basis is seeded into the cache instead of being recomputed.
    static Ideal from_groebner(RingPtr ring, std::vector<Polynomial> basis,
                               const TermOrder& ord);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    // The zero ideal (no generators) cuts out the whole space.
    bool is_zero() const { return gens_.empty(); }

    // Reduced Groebner basis, integer-primitive with positive leading
    // coefficients; cached per order.
    const std::vector<Polynomial>& groebner(
        const TermOrder& ord = TermOrder::grevlex()) const;

    // True iff the ideal is the whole ring (basis == {1}).
    bool is_unit() const;

    // Deterministic comparison on generator lists (not ideal equality).
    static int cmp(const Ideal& a, const Ideal& b);

  private:
    struct Cache {
        std::mutex mutex;
        std::map<std::string, std::vector<Polynomial>> by_order;
    };
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

// Which variable blocks cut out the irrelevant locus: one block for a single
// projective space, two for a product such as P^n x (P^n)*, none for affine
// space.
struct ProjectiveContext {
    std::vector<std::string> irrelevant_blocks;

    static ProjectiveContext affine() { return {}; }
    static ProjectiveContext all_blocks(const RingPtr& ring);
};

}  // namespace wstrat
