#pragma once

#include <vector>

#include "operm/algebra.hpp"
#include "operm/operads.hpp"

namespace operm {

/// Twisted bracket {x,y} = F_{sigma/tau} - F_{sigma\tau} bilinearly (F basis).
PermCombo bracket_f(const PermCombo& x, const PermCombo& y);

/// The same bracket computed operadically as (M_{(1,2)} o_2 y) o_1 x.
PermCombo bracket_via_operad(const PermCombo& x, const PermCombo& y);

/// M-basis form: {M_sigma, M_tau} = sum of M_{zeta.(sigma/tau)} over all
/// (n,m)-shuffles zeta except the top one.
PermCombo bracket_m(const PermCombo& x, const PermCombo& y);

/// Twisted antisymmetry and the twisted Jacobi identity on all F-basis
/// triples with n+m+p <= max_total_degree.
CheckReport twisted_lie_check(int max_total_degree);

/// theta_n as n-1 left-nested brackets of F_{(1)} (F basis).
PermCombo dynkin_nested(int n);
/// theta_n = sum of M_sigma over sigma in S_n with sigma(1) = 1.
PermCombo dynkin_m(int n);

/// Acting theta_n on v_1...v_n reproduces the left-nested word commutator.
bool dynkin_word_check(int n);

/// Echelonized spanning set of the degree-n component of the operad generated
/// by M_{(1,2)} under slot compositions and the right group action. Returned
/// in the F basis; its size is (n-1)!.
std::vector<PermCombo> lie_span(int n);

}  // namespace operm
