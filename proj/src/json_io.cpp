#include "triso/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace triso {

namespace {

double number_field(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number()) throw ValidationError("tensor field " + key + " is not a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ValidationError("tensor field " + key + " is not finite");
  return x;
}

void dump_to(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::null: out += "null"; return;
    case Json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; return;
    case Json::value_t::number_integer: out += std::to_string(j.get<long long>()); return;
    case Json::value_t::number_unsigned:
      out += std::to_string(j.get<unsigned long long>());
      return;
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out += buf;
      return;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ',';
        first = false;
        dump_to(e, out);
      }
      out += ']';
      return;
    }
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(k).dump();
        out += ':';
        dump_to(v, out);
      }
      out += '}';
      return;
    }
    default: out += j.dump(); return;
  }
}

}  // namespace

SymTraceless3 tensor_from_json(const nlohmann::json& j, double tol) {
  if (!j.is_object()) throw ValidationError("tensor JSON must be an object");
  if (j.contains("full")) {
    if (j.size() != 1) throw ValidationError("tensor JSON with \"full\" must have no other keys");
    const auto& full = j.at("full");
    if (!full.is_array() || full.size() != 27)
      throw ValidationError("\"full\" must be a 27-element array");
    std::array<double, 27> entries{};
    for (std::size_t n = 0; n < 27; ++n) entries[n] = number_field(full[n], "full");
    return compress(FullTensor3(entries), tol);
  }
  std::array<double, SymTraceless3::kSize> c{};
  for (const auto& [key, value] : j.items()) {
    std::size_t slot = kComponentNames.size();
    for (std::size_t n = 0; n < kComponentNames.size(); ++n)
      if (key == kComponentNames[n]) slot = n;
    if (slot == kComponentNames.size()) throw ValidationError("unknown tensor field \"" + key + "\"");
    c[slot] = number_field(value, key);
  }
  return SymTraceless3::from_array(c);
}

SymTraceless3 tensor_from_file(const std::string& path, double tol) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open tensor file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
  return tensor_from_json(j, tol);
}

Json to_json(const SymTraceless3& s) {
  Json j = Json::object();
  const auto c = s.to_array();
  for (std::size_t n = 0; n < c.size(); ++n) j[kComponentNames[n]] = c[n];
  return j;
}

Json to_json(const InvariantTuple& t) {
  Json j = Json::object();
  const auto v = t.to_array();
  for (std::size_t n = 0; n < v.size(); ++n) j[kInvariantNames[n]] = v[n];
  return j;
}

Json to_json(const CanonicalParams& c) {
  Json j = Json::object();
  const auto v = c.to_array();
  for (std::size_t n = 0; n < v.size(); ++n) j[kCanonicalNames[n]] = v[n];
  return j;
}

Json to_json(const Mat3& m) {
  Json j = Json::array();
  for (const auto& row : m) j.push_back(Json{row[0], row[1], row[2]});
  return j;
}

Json to_json(const CanonicalResult& r) {
  Json j = Json::object();
  j["params"] = to_json(r.params);
  j["rotation"] = to_json(r.transform.matrix());
  j["max_value"] = r.max_value;
  j["residual"] = r.diagnostics.sphere_residual;
  return j;
}

Json to_json(const IndependenceReport& r) {
  Json j = Json::object();
  j["samples"] = r.samples;
  j["rank4_fraction"] = r.rank4_fraction;
  j["min_abs_det"] = r.min_abs_det;
  j["max_fd_deviation"] = r.max_fd_deviation;
  j["generic_samples"] = r.generic_samples;
  j["degenerate_samples"] = r.degenerate_samples;
  j["max_abs_det"] = r.max_abs_det;
  j["max_det_deviation"] = r.max_det_deviation;
  return j;
}

Json to_json(const OrbitComparison& c) {
  Json j = Json::object();
  j["verdict"] = std::string(to_string(c.verdict));
  j["invariant_distance"] = c.invariant_distance;
  j["alignment_residual"] = c.alignment_residual ? Json(*c.alignment_residual) : Json(nullptr);
  return j;
}

Json to_json(const GapReport& r) {
  Json j = Json::object();
  j["t0"] = r.t0;
  j["f_t0"] = r.f_at_t0;
  j["sin_3t0"] = r.sine_3t0;
  j["sin_3t0_closed_form"] = r.sine_closed_form;
  j["first"] = to_json(r.first);
  j["second"] = to_json(r.second);
  j["expected_first_I6"] = r.expected_first_i6;
  j["strict_gap"] = r.strict_gap;
  j["pass"] = r.pass;
  return j;
}

std::string dump(const Json& j) {
  std::string out;
  dump_to(j, out);
  return out;
}

}  // namespace triso
