#pragma once

// Explicit tensors showing that none of I2, I4, I6, I10 is a single-valued
// function of the other three, with their exact invariant values.

#include <string>
#include <vector>

#include "triso/invariants.hpp"

namespace triso {

struct RemarkCase {
  std::string label;
  SymTraceless3 tensor;
  InvariantTuple expected;
  /// Index (0..3 for I2..I10) of the invariant the case's pair separates.
  int separates = 0;
  std::string purpose;
};

inline constexpr double kRemarkTolerance = 1e-12;

/// The six counterexample tensors, in pairs: cases (0,1) share I4, I6, I10
/// and differ in I2; (2,3) differ only in I4; (4,5) only in the sign of I10.
std::vector<RemarkCase> remark_cases();

struct CaseOutcome {
  RemarkCase remark;
  InvariantTuple computed;
  double error = 0.0;
  bool pass = false;
};

std::vector<CaseOutcome> evaluate_remark_cases(double tol = kRemarkTolerance);

/// f(t) = -43 + cos 6t + 84 sin 3t
double f_of_t(double t);

/// Bisection on (0, pi/6) until |f| <= tol or the bracket collapses.
double f_root(double tol = 1e-12);

/// sin(3 t0) = 21 - sqrt(420): the root in [0, 1] of s^2 - 42 s + 21 = 0
/// obtained by substituting cos 6t = 1 - 2 sin^2 3t.
double f_root_sine_closed_form();

/// The tensors sharing I2 = 20, I4 = 176, I10 = 0 while I6 differs.
SymTraceless3 gap_tensor_from_root(double t0);
SymTraceless3 gap_tensor_reference();

struct GapReport {
  double t0 = 0.0;
  double f_at_t0 = 0.0;
  double sine_3t0 = 0.0;
  double sine_closed_form = 0.0;
  InvariantTuple first;
  InvariantTuple second;
  double expected_first_i6 = 0.0;
  /// Largest relative deviation of either tensor from its expected values.
  double max_deviation = 0.0;
  double first_i10_abs = 0.0;
  bool strict_gap = false;
  bool pass = false;
};

inline constexpr double kGapTolerance = 1e-9;

GapReport i6_gap_check();

/// For every pair (0,1), (2,3), (4,5): which invariants agree exactly up to
/// tolerance and which differ, compared against the pair's claim.
struct PairCheck {
  int first = 0;
  int second = 0;
  std::array<bool, 4> shared{};
  bool matches_claim = false;
};

std::vector<PairCheck> check_remark_pairs(double tol = kRemarkTolerance);

}  // namespace triso
