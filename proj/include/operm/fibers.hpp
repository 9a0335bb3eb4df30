#pragma once

#include <string>
#include <vector>

#include "operm/operads.hpp"
#include "operm/permutation.hpp"

namespace operm {

/// One fiber of P_i over (sigma,tau): a weak-order interval [bottom, top].
struct Fiber {
  Permutation sigma, tau;
  Permutation bottom, top;
  std::vector<Permutation> members;  // canonical ascending
};

/// All fibers of P_i : S_{n+m-1} -> S_n x S_m, ordered by (sigma,tau).
std::vector<Fiber> enumerate_fibers(int n, int m, int i);

std::string fibers_text(int n, int m, int i);

/// Hasse diagram of the weak order on S_{n+m-1} in DOT form; cover edges
/// between members of the same fiber are drawn bold.
std::string fibers_dot(int n, int m, int i);

/// Plain Hasse diagram of one family's order at degree n, DOT form.
std::string hasse_dot(Family family, int n);

}  // namespace operm
