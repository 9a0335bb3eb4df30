#pragma once

#include "operm/algebra.hpp"
#include "operm/operads.hpp"
#include "operm/permutation.hpp"

namespace operm {

/// Non-counital deconcatenation coproduct: proper splits only, so degree-1
/// elements map to zero. M-basis input is expanded through the F basis.
TensorCombo coproduct(const PermCombo& x);

/// Delta^(k), with Delta^(k+1) = (Delta (x) id^k) o Delta^(k); arity k+1.
TensorCombo iterated_coproduct(const PermCombo& x, int k);

/// Least k >= 1 with Delta^(k)(x) = 0. Equals 1 plus the maximal number of
/// global descents over the M-basis support.
int filtration_degree(const PermCombo& x);

/// Checks the three-sum expansion of Delta(F_sigma o_i F_tau) term by term.
bool verify_coproduct_composition(const Permutation& sigma, const Permutation& tau,
                                  int i);

/// Global descents of top_t(sigma,tau,i) predicted from sigma, tau, and the
/// insertion profile alone.
SubsetLabel predicted_gdes_of_t(const Permutation& sigma, const Permutation& tau,
                                int i);

/// Graded product of the permutation Hopf algebra (shifted shuffle on the F
/// basis); commutator(x,y) = xy - yx.
PermCombo mr_product(const PermCombo& x, const PermCombo& y);
PermCombo commutator(const PermCombo& x, const PermCombo& y);

/// True iff the M-basis expansion is supported on permutations that are not
/// eventual identities.
bool hopf_kernel_member(const PermCombo& x);

}  // namespace operm
