#pragma once

#include <optional>
#include <vector>

#include "wstrat/ideal.hpp"

namespace wstrat {

// Remainder of f on division by the Groebner basis G: no remainder term is
// divisible by any leading term of G and f - result lies in <G>.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const TermOrder& ord);

bool ideal_membership(const Polynomial& f, const Ideal& I);

// f in the radical of I, decided by adjoining t*f - 1 and testing the unit
// ideal.
bool radical_membership(const Polynomial& f, const Ideal& I);

// I + J as a generator-list sum.
Ideal ideal_sum(const Ideal& I, const Ideal& J);

// I with the named variables projected away; the result lives in the ring
// without those variables.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop_vars);

Ideal intersect(const Ideal& I, const Ideal& J);

// Colon ideal I : g, resp. I : J.
Ideal quotient(const Ideal& I, const Polynomial& g);
Ideal quotient(const Ideal& I, const Ideal& J);

// Saturation I : g^inf, resp. I : J^inf, by iterated quotients.
Ideal saturate(const Ideal& I, const Polynomial& g);
Ideal saturate(const Ideal& I, const Ideal& J);

// Krull dimension of V(I) in affine space (-1 when empty).
int affine_dimension(const Ideal& I);

// Indices of a largest variable set independent modulo the leading terms of
// the grevlex basis (its size is the affine dimension); nullopt for the unit
// ideal.
std::optional<std::vector<int>> independent_set(const Ideal& I);

// Dimension of V(I) inside the (multi-)projective space described by ctx:
// cone dimension minus the number of irrelevant blocks, -1 when empty.
// Requires every generator to be homogeneous in each irrelevant block.
int dimension(const Ideal& I, const ProjectiveContext& ctx);

// True iff V(I) is empty in the (multi-)projective space, decided by
// saturating away every irrelevant block in turn and testing the unit ideal.
bool is_empty_projective(const Ideal& I, const ProjectiveContext& ctx);

// J subseteq I as ideals (every generator of J reduces to zero modulo I).
bool ideal_contains(const Ideal& I, const Ideal& J);
bool ideal_eq(const Ideal& I, const Ideal& J);

// V(J) subseteq V(I), i.e. I subseteq radical(J).
bool variety_contains(const Ideal& J, const Ideal& I);
// Same radical in both directions.
bool same_variety(const Ideal& I, const Ideal& J);

// Generators of I rewritten through the canonical grevlex basis; gives a
// unique representative per ideal, used for deterministic ordering and
// fixture comparison.
Ideal canonical(const Ideal& I);

}  // namespace wstrat
