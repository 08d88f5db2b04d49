#pragma once

#include <vector>

#include "lctkit/qideal.hpp"
#include "lctkit/upoly.hpp"

namespace lctkit {

// Q-ideals in z1..zd attached to the generic monic polynomial y^d + z1 y^{d-1} + ... + zd.

// sum_i (z_i)^{1/i}: its order at a is the least root order.
PolyIdeal build_b(int d);

// sum_l (A_k^{(l)})^{1/l}, A_k^{(l)} the coefficients of the k-fold product polynomial:
// order = least order of a product of k distinct roots.
PolyIdeal build_bk(int d, int k);

// Same for h(y + w) with w = z_{d+1}: order = least sum of k values ord(alpha_j - w).
PolyIdeal build_tilde_bk(int d, int k);

// Explicit monomial form: sum over index tuples of prod_m (z_{i_m})^{j_m}.
PolyIdeal build_bbar_k(int d, int k);

// Exponents j_1..j_k of the monomial attached to an index tuple (1-based indices).
std::vector<Rational> bbar_exponents(const std::vector<int>& indices, int k);
// All admissible index tuples for (d, k).
std::vector<std::vector<int>> bbar_tuples(int d, int k);

// sum_i (z_{d-i})^{1/i} (z_d)^{(i-1)/i} with z_0 = 1: ord(a_d) minus its order is the largest root order.
PolyIdeal build_c(int d);

// sum_{i=2}^d (z_i)^{1/i}.
PolyIdeal build_trace_free_ideal(int d);

}  // namespace lctkit
