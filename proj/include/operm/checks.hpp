#pragma once

#include <string>
#include <vector>

#include "operm/operads.hpp"

namespace operm {

struct SuiteResult {
  std::string suite;
  bool passed = true;
  long long instances = 0;
  std::vector<std::string> failures;
};

/// Named verification suites. max_degree <= 0 selects each suite's pinned
/// default sweep bound; otherwise it replaces the bound where one applies.
///
///   worked-examples  fixed reference values of the core maps
///   operad-m         interval law vs. basis-conjugated F composition
///   connection       B/P/T order relations, adjunction, inversion oracles
///   axioms           operad axioms for S, Q, Y plus equivariance
///   coradical        global-descent subadditivity, predicted GDes, kernels
///   quotients        descent/tree quotient laws and the Galois connection
///   hopf-kernel      eventual-identity closure and the degree-3 kernel
///   dynkin           brackets, twisted axioms, Dynkin element, Lie dimensions
///   fibers           fiber partition of S_4 and DOT determinism
///   all              everything above
SuiteResult run_suite(const std::string& name, int max_degree = 0);

std::vector<std::string> suite_names();

std::string suite_report_json(const SuiteResult& r);

}  // namespace operm
