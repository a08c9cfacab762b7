#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "albanese/character.hpp"
#include "albanese/decomposition.hpp"

namespace albanese {

struct CaseResult {
  std::string label;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;

  bool passed() const;
  std::vector<CaseResult> failures() const;
};

struct SuiteOptions {
  /// Worker threads; 0 picks min(hardware threads, 4).
  unsigned workers = 0;
  int io_split_max_degree = 4;
  int prop_max_p = 6;
  int prop_max_q = 3;
  int prop_max_degree = 3;
  /// Largest |outer|·|inner| among the plethysm oracle cases.
  int plethysm_max_size = 8;
};

/// omega, prop-match, io-split, johnson, plethysm.
const std::vector<std::string>& suite_names();

/// Runs one named suite or "all"; InputError for an unknown name. A case
/// that throws is recorded as a failure with the exception text.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options = {});

/// Runs independent cases on a bounded pool; results keep input order.
std::vector<CaseResult> run_cases(const std::vector<std::function<CaseResult()>>& cases, unsigned workers);

/// The terms of d with (|λ|, |μ|) equal to the given sizes.
Decomposition restrict_to_sizes(const Decomposition& d, int covariant_size, int contravariant_size);

/// Oracle comparison for s_outer[s_inner] at rank n.
CaseResult check_plethysm_against_characters(const Partition& outer, const Partition& inner, int n);
/// Oracle comparison for the k-th graded-symmetric power of a generator:
/// only the top-size part of the full power is traceless.
CaseResult check_graded_power_against_characters(const Bipartition& generator, int degree, int k, int n);
/// Generic comparison of character_decompose(expr, n) with an expected
/// decomposition truncated at n.
CaseResult check_expression(const std::string& label, const CharExpr& expr, const Decomposition& expected, int n);

}  // namespace albanese
