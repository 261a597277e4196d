#pragma once

#include <vector>

#include "wstrat/ideal.hpp"
#include "wstrat/ideal_ops.hpp"

namespace wstrat {

// One primary component together with its prime radical.
struct PrimaryComponent {
    Ideal component;
    Ideal associated_prime;
};

// A full primary decomposition: the components intersect exactly to the
// input ideal, and the associated primes are pairwise distinct.
struct Decomposition {
    Ideal input;
    std::vector<PrimaryComponent> components;
};

// Minimal primes over I, pairwise incomparable, in canonical form and sorted
// deterministically.  The unit ideal yields an empty list; the zero ideal
// yields the zero ideal itself.
std::vector<Ideal> minimal_primes(const Ideal& I);

// Primary decomposition of a proper ideal; throws structural_error on the
// unit ideal.  The set of associated primes is uniquely determined by I.
Decomposition primary_decomposition(const Ideal& I);

// Associated primes of I (the primes of primary_decomposition).
std::vector<Ideal> associated_primes(const Ideal& I);

// Intersection of the minimal primes; the unit ideal maps to itself.
Ideal radical(const Ideal& I);

// Intersection of the minimal primes of the radical ideal I whose dimension
// in ctx equals d; the unit ideal when there are none.
Ideal pure_d(const Ideal& I, int d, const ProjectiveContext& ctx);

// Decomposition with every component whose associated prime has empty
// (multi-)projective variety removed.
Decomposition discard_irrelevant(const Decomposition& D,
                                 const ProjectiveContext& ctx);

// Intersection of a list of ideals; the empty list yields the unit ideal
// over the given ring.
Ideal intersect_many(const RingPtr& ring, const std::vector<Ideal>& ideals);

}  // namespace wstrat
