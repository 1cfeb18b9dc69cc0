#pragma once

#include <vector>

#include "pignose/poly.hpp"
#include "pignose/signed_perm.hpp"

namespace pignose {

// Generating polynomials over B_n, all computed in one enumeration sweep:
//   b          = sum of y^fwex t^neg q^cro
//   b_k[k]     = [y^k] b                         (k = 0..2n)
//   b_star[k]  = sum over fwex = k of t^{neg + [pi_1 > 0]} q^cro
//   eulerian_b[k] = sum over floor(fwex/2) = k of q^cro   (k = 0..n)
//   des_b_count[k] = #{ pi : des_B(pi) = k }
struct GenTable {
    int n = 0;
    MultiPoly b;
    std::vector<MultiPoly> b_k;
    std::vector<MultiPoly> b_star;
    std::vector<MultiPoly> eulerian_b;
    std::vector<Int> des_b_count;
};

GenTable gen_table(int n, int limit = kDefaultEnumLimit);

// Single-value accessors (each runs its own sweep; use gen_table for bulk work).
MultiPoly b_poly_perms(int n, int limit = kDefaultEnumLimit);
MultiPoly b_nk(int n, int k, int limit = kDefaultEnumLimit);
MultiPoly b_star(int n, int k, int limit = kDefaultEnumLimit);

// Type B q-Eulerian number, computed both from its defining sum and as
// B_{n,2k}(1,q) + B_{n,2k+1}(1,q); throws StructureViolationError if the two
// routes ever disagree. Out-of-range k gives the zero polynomial.
MultiPoly eulerian_b_poly(int n, int k, int limit = kDefaultEnumLimit);

// Number of pi in B_n with des_B(pi) = k.
Int eulerian_b_count(int n, int k, int limit = kDefaultEnumLimit);

}  // namespace pignose
