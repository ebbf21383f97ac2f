#include "triso/paper_repro.hpp"

#include <cmath>
#include <numbers>

#include "triso/errors.hpp"

namespace triso {

std::vector<RemarkCase> remark_cases() {
  const double r3 = std::sqrt(3.0);
  const double r2 = std::sqrt(2.0);
  SymTraceless3 c1, c2, c3, c4, c5, c6;
  c1.d111 = std::pow(3.0, 0.25);
  c2.d112 = std::pow(2.0, 0.25);
  c3.d111 = r3;
  c4.d112 = r2;
  c5.d111 = 1.0;
  c5.d112 = 1.0;
  c6.d111 = 1.0;
  c6.d123 = 1.0;
  return {
      {"D111=3^(1/4)", c1, {4.0 * r3, 24.0, 0.0, 0.0}, 0, "I2 varies with I4, I6, I10 fixed"},
      {"D112=2^(1/4)", c2, {6.0 * r2, 24.0, 0.0, 0.0}, 0, "I2 varies with I4, I6, I10 fixed"},
      {"D111=sqrt(3)", c3, {12.0, 72.0, 0.0, 0.0}, 1, "I4 varies with I2, I6, I10 fixed"},
      {"D112=sqrt(2)", c4, {12.0, 48.0, 0.0, 0.0}, 1, "I4 varies with I2, I6, I10 fixed"},
      {"D111=D112=1", c5, {10.0, 44.0, 16.0, 64.0}, 3, "I10 flips sign with I2, I4, I6 fixed"},
      {"D111=D123=1", c6, {10.0, 44.0, 16.0, -64.0}, 3, "I10 flips sign with I2, I4, I6 fixed"},
  };
}

std::vector<CaseOutcome> evaluate_remark_cases(double tol) {
  std::vector<CaseOutcome> out;
  for (auto& rc : remark_cases()) {
    CaseOutcome o;
    o.computed = smith_bao(rc.tensor);
    o.error = relative_error(o.computed, rc.expected);
    o.pass = o.error <= tol;
    o.remark = std::move(rc);
    out.push_back(std::move(o));
  }
  return out;
}

double f_of_t(double t) { return -43.0 + std::cos(6.0 * t) + 84.0 * std::sin(3.0 * t); }

double f_root(double tol) {
  if (!(tol > 0.0)) throw ValidationError("f_root tolerance must be positive");
  double lo = 0.0;
  double hi = std::numbers::pi / 6.0;
  double f_lo = f_of_t(lo);
  double f_hi = f_of_t(hi);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f_of_t(mid);
    if (std::abs(f_mid) <= tol) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  return std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
}

double f_root_sine_closed_form() { return 21.0 - std::sqrt(420.0); }

SymTraceless3 gap_tensor_from_root(double t0) {
  SymTraceless3 s;
  s.d111 = 1.0;
  s.d122 = -0.5 + 0.5 * std::sin(t0);
  s.d123 = 0.5 * std::cos(t0);
  s.d223 = -2.0;
  return s;
}

SymTraceless3 gap_tensor_reference() {
  SymTraceless3 s;
  s.d111 = 1.0;
  s.d112 = 1.0;
  s.d113 = 1.0;
  s.d123 = 1.0;
  return s;
}

GapReport i6_gap_check() {
  GapReport r;
  r.t0 = f_root();
  r.f_at_t0 = f_of_t(r.t0);
  r.sine_3t0 = std::sin(3.0 * r.t0);
  r.sine_closed_form = f_root_sine_closed_form();
  r.first = smith_bao(gap_tensor_from_root(r.t0));
  r.second = smith_bao(gap_tensor_reference());
  r.expected_first_i6 = 104.0 - 24.0 * r.sine_3t0;
  r.first_i10_abs = std::abs(r.first.i10);

  const double dev_first =
      std::max({relative_error(r.first.i2, 20.0), relative_error(r.first.i4, 176.0),
                relative_error(r.first.i6, r.expected_first_i6)});
  const double dev_second = relative_error(r.second, InvariantTuple{20.0, 176.0, 128.0, 0.0});
  r.max_deviation = std::max(dev_first, dev_second);
  r.strict_gap = r.first.i6 < 104.0 && 104.0 < r.second.i6;
  r.pass = r.max_deviation <= kGapTolerance && r.first_i10_abs <= kGapTolerance && r.strict_gap &&
           r.t0 > 0.0 && r.t0 < std::numbers::pi / 6.0;
  return r;
}

std::vector<PairCheck> check_remark_pairs(double tol) {
  const auto cases = remark_cases();
  std::vector<PairCheck> out;
  for (int p = 0; p + 1 < static_cast<int>(cases.size()); p += 2) {
    PairCheck pc;
    pc.first = p;
    pc.second = p + 1;
    const auto x = smith_bao(cases[p].tensor).to_array();
    const auto y = smith_bao(cases[p + 1].tensor).to_array();
    pc.matches_claim = true;
    for (int k = 0; k < 4; ++k) {
      pc.shared[k] = relative_error(x[k], y[k]) <= tol;
      const bool should_share = k != cases[p].separates;
      if (pc.shared[k] != should_share) pc.matches_claim = false;
    }
    out.push_back(pc);
  }
  return out;
}

}  // namespace triso
