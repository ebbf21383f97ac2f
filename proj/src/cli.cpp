#include "triso/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "triso/canonical_form.hpp"
#include "triso/independence.hpp"
#include "triso/json_io.hpp"
#include "triso/orbit_oracle.hpp"
#include "triso/paper_repro.hpp"

namespace triso::cli {

namespace {

enum class Format { kJson, kText };

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_short(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

struct TensorInput {
  std::string file;
  std::array<double, SymTraceless3::kSize> components{};

  void attach(CLI::App& app) {
    app.add_option("--file", file, "Tensor JSON file ({\"D111\":...} or {\"full\":[27]})");
    for (std::size_t n = 0; n < kComponentNames.size(); ++n) {
      std::string flag = "--d" + std::string(kComponentNames[n] + 1);
      app.add_option(flag, components[n], std::string("Component ") + kComponentNames[n]);
    }
  }

  SymTraceless3 resolve() const {
    if (!file.empty()) return tensor_from_file(file);
    const auto s = SymTraceless3::from_array(components);
    if (!s.is_finite()) throw ValidationError("tensor components must be finite");
    return s;
  }
};

std::array<double, SymTraceless3::kSize> parse_components(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::array<double, SymTraceless3::kSize> c{};
  std::size_t n = 0;
  double x;
  while (in >> x) {
    if (n == c.size()) throw ValidationError("expected 7 tensor components, got more");
    c[n++] = x;
  }
  if (!in.eof() || n != c.size())
    throw ValidationError("expected 7 comma-separated tensor components in \"" + text + "\"");
  return c;
}

Mat3 parse_matrix(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::array<double, 9> v{};
  std::size_t n = 0;
  double x;
  while (in >> x) {
    if (n == v.size()) throw ValidationError("expected 9 matrix entries, got more");
    v[n++] = x;
  }
  if (!in.eof() || n != v.size())
    throw ValidationError("expected 9 comma-separated matrix entries (row-major)");
  return {{{v[0], v[1], v[2]}, {v[3], v[4], v[5]}, {v[6], v[7], v[8]}}};
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("TRISO_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw ValidationError("TRISO_SEED is not an unsigned integer");
    return v;
  }
  return 0;
}

void write_tensor(std::ostream& out, const SymTraceless3& s, Format f) {
  if (f == Format::kJson) {
    out << dump(to_json(s)) << '\n';
    return;
  }
  const auto c = s.to_array();
  for (std::size_t n = 0; n < c.size(); ++n) out << kComponentNames[n] << " = " << fmt(c[n]) << '\n';
}

void write_invariants(std::ostream& out, const InvariantTuple& t, Format f) {
  if (f == Format::kJson) {
    out << dump(to_json(t)) << '\n';
    return;
  }
  const auto v = t.to_array();
  for (std::size_t n = 0; n < v.size(); ++n) out << kInvariantNames[n] << " = " << fmt(v[n]) << '\n';
}

int write_repro(std::ostream& out, Format f) {
  const auto outcomes = evaluate_remark_cases();
  const auto pairs = check_remark_pairs();
  const GapReport gap = i6_gap_check();
  const double f0 = f_of_t(0.0);
  const double f6 = f_of_t(std::numbers::pi / 6.0);
  const bool endpoints_ok = f0 == -42.0 && f6 == 40.0;
  const bool root_ok = std::abs(gap.sine_3t0 - gap.sine_closed_form) <= 1e-10;

  bool all = endpoints_ok && root_ok && gap.pass;
  for (const auto& o : outcomes) all = all && o.pass;
  for (const auto& p : pairs) all = all && p.matches_claim;

  if (f == Format::kJson) {
    Json j = Json::object();
    Json cases = Json::array();
    for (const auto& o : outcomes) {
      Json c = Json::object();
      c["label"] = o.remark.label;
      c["tensor"] = to_json(o.remark.tensor);
      c["computed"] = to_json(o.computed);
      c["expected"] = to_json(o.remark.expected);
      c["relative_error"] = o.error;
      c["pass"] = o.pass;
      cases.push_back(c);
    }
    j["cases"] = cases;
    Json pj = Json::array();
    for (const auto& p : pairs) {
      Json e = Json::object();
      e["cases"] = Json{p.first + 1, p.second + 1};
      e["shared"] = Json::array();
      for (std::size_t k = 0; k < 4; ++k)
        if (p.shared[k]) e["shared"].push_back(kInvariantNames[k]);
      e["pass"] = p.matches_claim;
      pj.push_back(e);
    }
    j["pairs"] = pj;
    Json fr = to_json(gap);
    fr["f_0"] = f0;
    fr["f_pi_6"] = f6;
    j["f_root"] = fr;
    j["pass"] = all;
    out << dump(j) << '\n';
  } else {
    char line[256];
    std::snprintf(line, sizeof line, "%-14s %20s %20s %20s %20s  %s\n", "case", "I2", "I4", "I6",
                  "I10", "result");
    out << line;
    for (const auto& o : outcomes) {
      std::snprintf(line, sizeof line, "%-14s %20.15g %20.15g %20.15g %20.15g  %s\n",
                    o.remark.label.c_str(), o.computed.i2, o.computed.i4, o.computed.i6,
                    o.computed.i10, o.pass ? "pass" : "FAIL");
      out << line;
    }
    for (const auto& p : pairs) {
      out << "pair " << p.first + 1 << "&" << p.second + 1 << " shares";
      for (std::size_t k = 0; k < 4; ++k)
        if (p.shared[k]) out << ' ' << kInvariantNames[k];
      out << "  " << (p.matches_claim ? "pass" : "FAIL") << '\n';
    }
    out << "\nf(t) = -43 + cos 6t + 84 sin 3t\n";
    out << "  f(0)      = " << fmt(f0) << '\n';
    out << "  f(pi/6)   = " << fmt(f6) << '\n';
    out << "  t0        = " << fmt(gap.t0) << "   f(t0) = " << fmt_short(gap.f_at_t0) << '\n';
    out << "  sin(3 t0) = " << fmt(gap.sine_3t0) << "   21 - sqrt(420) = "
        << fmt(gap.sine_closed_form) << "  " << (root_ok ? "pass" : "FAIL") << '\n';
    out << "  first  (I2, I4, I6, I10) = (" << fmt_short(gap.first.i2) << ", "
        << fmt_short(gap.first.i4) << ", " << fmt_short(gap.first.i6) << ", "
        << fmt_short(gap.first.i10) << ")   expected I6 = 104 - 24 sin 3t0 = "
        << fmt_short(gap.expected_first_i6) << '\n';
    out << "  second (I2, I4, I6, I10) = (" << fmt_short(gap.second.i2) << ", "
        << fmt_short(gap.second.i4) << ", " << fmt_short(gap.second.i6) << ", "
        << fmt_short(gap.second.i10) << ")\n";
    out << "  I6 gap " << fmt_short(gap.first.i6) << " < 104 < " << fmt_short(gap.second.i6)
        << "  " << (gap.pass ? "pass" : "FAIL") << '\n';
    out << (all ? "all checks passed" : "REPRODUCTION FAILED") << '\n';
  }
  return all ? kOk : kReproFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isotropic invariants of third-order symmetric traceless 3D tensors", "triso"};
  app.require_subcommand(1);

  std::string format_name = "json";
  std::optional<std::uint64_t> seed_opt;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  const auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed_opt, "RNG seed (default: $TRISO_SEED or 0)");
  };

  // invariants
  TensorInput inv_in;
  auto* inv = app.add_subcommand("invariants", "Smith-Bao invariants I2, I4, I6, I10");
  inv_in.attach(*inv);
  add_common(inv);

  // canonicalize
  TensorInput can_in;
  SphereConfig sphere;
  auto* can = app.add_subcommand("canonicalize", "Rotate to D112 = D113 = D222 = 0, D111 >= 0");
  can_in.attach(*can);
  can->add_option("--starts", sphere.lattice_starts, "Quasi-uniform sphere starts")
      ->check(CLI::NonNegativeNumber);
  can->add_option("--random-starts", sphere.random_starts, "Additional random starts")
      ->check(CLI::NonNegativeNumber);
  can->add_option("--max-iter", sphere.max_iterations, "Iterations per start")
      ->check(CLI::PositiveNumber);
  can->add_option("--tol", sphere.stationarity_tolerance, "Stationarity tolerance")
      ->check(CLI::PositiveNumber);
  add_common(can);
  add_seed(can);

  // rotate
  TensorInput rot_in;
  std::string matrix_text;
  bool random_rotation = false;
  bool improper = false;
  double ortho_tol = OrthogonalTransform3::kDefaultTolerance;
  auto* rot = app.add_subcommand("rotate", "Apply an orthogonal matrix to a tensor");
  rot_in.attach(*rot);
  rot->add_option("--matrix", matrix_text, "9 comma-separated entries, row-major");
  rot->add_flag("--random", random_rotation, "Use a Haar-random matrix from --seed");
  rot->add_flag("--improper", improper, "With --random: det = -1");
  rot->add_option("--ortho-tol", ortho_tol, "Orthogonality tolerance")->check(CLI::PositiveNumber);
  add_common(rot);
  add_seed(rot);

  // orbit-compare
  std::string a_text, b_text, a_file, b_file;
  double orbit_tol = kDefaultOrbitTolerance;
  bool no_align = false;
  AlignmentConfig align;
  auto* orb = app.add_subcommand("orbit-compare", "Decide whether two tensors share an O(3)-orbit");
  orb->add_option("--a", a_text, "First tensor: 7 comma-separated components D111..D223");
  orb->add_option("--b", b_text, "Second tensor: 7 comma-separated components");
  orb->add_option("--a-file", a_file, "First tensor JSON file");
  orb->add_option("--b-file", b_file, "Second tensor JSON file");
  orb->add_option("--tol", orbit_tol, "Invariant comparison tolerance")->check(CLI::PositiveNumber);
  orb->add_option("--starts", align.starts, "Alignment starts")->check(CLI::PositiveNumber);
  orb->add_flag("--no-align", no_align, "Skip the brute-force alignment");
  add_common(orb);
  add_seed(orb);

  // independence
  IndependenceConfig indep;
  auto* ind = app.add_subcommand("independence", "Jacobian rank statistics at random points");
  ind->add_option("--samples", indep.sample_count, "Number of sample points");
  add_common(ind);
  add_seed(ind);

  // repro
  auto* rep = app.add_subcommand("repro", "Reproduce the counterexample table and f-root check");
  rep->add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  // rand-tensor
  double scale = 1.0;
  auto* rnd = app.add_subcommand("rand-tensor", "Seeded random tensor");
  rnd->add_option("--scale", scale, "Component spread")->check(CLI::NonNegativeNumber);
  add_common(rnd);
  add_seed(rnd);

  // repro defaults to a table unless --format json is given.
  for (const auto& a : args)
    if (a == "repro") format_name = "text";

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kValidationError;
  }

  const Format format = format_name == "text" ? Format::kText : Format::kJson;

  try {
    const std::uint64_t seed = seed_opt ? *seed_opt : default_seed();

    if (inv->parsed()) {
      write_invariants(out, smith_bao(inv_in.resolve()), format);
      return kOk;
    }

    if (can->parsed()) {
      sphere.seed = seed;
      const CanonicalResult r = canonicalize(can_in.resolve(), sphere);
      if (format == Format::kJson) {
        out << dump(to_json(r)) << '\n';
      } else {
        const auto p = r.params.to_array();
        for (std::size_t n = 0; n < p.size(); ++n)
          out << kCanonicalNames[n] << " = " << fmt(p[n]) << '\n';
        out << "rotation =\n";
        for (const auto& row : r.transform.matrix())
          out << "  " << fmt(row[0]) << ' ' << fmt(row[1]) << ' ' << fmt(row[2]) << '\n';
        out << "max_value = " << fmt(r.max_value) << '\n';
        out << "residual = " << fmt(r.diagnostics.sphere_residual) << '\n';
      }
      return kOk;
    }

    if (rot->parsed()) {
      if (random_rotation == !matrix_text.empty())
        throw ValidationError("rotate needs exactly one of --matrix or --random");
      const OrthogonalTransform3 g = random_rotation
                                         ? random_orthogonal(seed, !improper)
                                         : OrthogonalTransform3::from_matrix(
                                               parse_matrix(matrix_text), ortho_tol);
      write_tensor(out, act(g, rot_in.resolve()), format);
      return kOk;
    }

    if (orb->parsed()) {
      const auto load = [](const std::string& text, const std::string& file, const char* name) {
        if (text.empty() == file.empty())
          throw ValidationError(std::string("orbit-compare needs exactly one of --") + name +
                                " or --" + name + "-file");
        return file.empty() ? SymTraceless3::from_array(parse_components(text))
                            : tensor_from_file(file);
      };
      const SymTraceless3 a = load(a_text, a_file, "a");
      const SymTraceless3 b = load(b_text, b_file, "b");
      align.seed = seed;
      const OrbitComparison c = compare_orbits(a, b, orbit_tol, !no_align, align);
      if (format == Format::kJson) {
        out << dump(to_json(c)) << '\n';
      } else {
        out << "verdict = " << to_string(c.verdict) << '\n';
        out << "invariant_distance = " << fmt(c.invariant_distance) << '\n';
        if (c.alignment_residual)
          out << "alignment_residual = " << fmt(*c.alignment_residual) << '\n';
      }
      return kOk;
    }

    if (ind->parsed()) {
      indep.seed = seed;
      const IndependenceReport r = independence_report(indep);
      if (format == Format::kJson) {
        out << dump(to_json(r)) << '\n';
      } else {
        out << "samples = " << r.samples << " (generic " << r.generic_samples << ", degenerate "
            << r.degenerate_samples << ")\n";
        out << "rank4_fraction = " << fmt(r.rank4_fraction) << '\n';
        out << "min_abs_det = " << fmt(r.min_abs_det) << '\n';
        out << "max_abs_det = " << fmt(r.max_abs_det) << '\n';
        out << "max_fd_deviation = " << fmt(r.max_fd_deviation) << '\n';
        out << "max_det_deviation = " << fmt(r.max_det_deviation) << '\n';
      }
      return kOk;
    }

    if (rep->parsed()) return write_repro(out, format);

    if (rnd->parsed()) {
      write_tensor(out, random_tensor(seed, scale), format);
      return kOk;
    }
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
  err << app.help();
  return kValidationError;
}

}  // namespace triso::cli
