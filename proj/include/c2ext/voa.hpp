#pragma once

#include <string>
#include <utility>
#include <vector>

#include "c2ext/lie_algebra.hpp"
#include "c2ext/polynomial.hpp"
#include "c2ext/root_system.hpp"

namespace c2ext {

/// Presentation of a C2-algebra: a weighted ring, homogeneous generators and
/// a provenance tag. Valid input for the graded-quotient builder.
struct C2Presentation {
    RingPtr ring;
    std::vector<Polynomial> generators;
    std::string provenance;
};

/// Sym(g) / <U(g) . e_theta^{k+1}>: the ideal subspace is computed by
/// breadth-first adjoint lowering from the highest vector with RREF
/// deduplication, and its dimension is checked against the Weyl value N_k.
C2Presentation affine_c2(LieType type, int rank, int k);

/// Q[x]/<x^{(p-1)(q-1)/2}> with x of weight 2.
C2Presentation virasoro_c2_minimal(int p, int q);
/// Q[x], no relations (generic central charge).
C2Presentation virasoro_c2_generic();

/// c_{p,q} = 1 - 6 (p-q)^2 / (pq); requires gcd(p, q) = 1 and q > p >= 2.
Rational cpq(int p, int q);

/// Disjoint-variable union; name collisions in the second factor are renamed
/// (recorded in the provenance).
C2Presentation tensor_c2(const C2Presentation& a, const C2Presentation& b);

/// Both branches of the direct sum; cohomology at a chosen branch point is
/// that branch's.
std::pair<C2Presentation, C2Presentation> direct_sum_c2(const C2Presentation& a,
                                                        const C2Presentation& b);

}  // namespace c2ext
