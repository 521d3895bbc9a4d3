#pragma once

#include "bomc/best_of_many.hpp"
#include "bomc/caps.hpp"
#include "bomc/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bomc {

/// Outcome of one named family of inequalities. Every sub-inequality is
/// normalized to lhs <= rhs. When all pass, lhs/rhs/witness describe the
/// tightest one; otherwise the first failure.
struct CheckResult {
  std::string name;
  bool pass = true;
  bool skipped = false;
  std::size_t evaluated = 0;
  std::optional<Rat> lhs;
  std::optional<Rat> rhs;
  std::string rhs_text;  // set instead of rhs when the bound is irrational
  std::string witness;
  std::string note;
};

struct Certificate {
  Rat beta;
  std::vector<CheckResult> checks;

  /// Every check that ran passed.
  bool all_pass() const;
  const CheckResult& check(std::string_view name) const;
};

/// Check names in report order.
const std::vector<std::string>& certificate_check_names();

/// Exact verification of the analysis inequalities on one solved instance.
/// `opt_length` skips the brute-force optimum when the caller already has it;
/// otherwise it is computed when m <= caps.bruteforce_edges. Checks whose
/// enumeration exceeds a cap are marked skipped.
Certificate verify_certificates(const Instance& inst, const BomReport& report,
                                const Rat& beta = Rat(4, 9), const Caps& caps = {},
                                std::optional<Rat> opt_length = std::nullopt);

}  // namespace bomc
