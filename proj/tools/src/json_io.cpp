#include "json_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "exit_codes.hpp"

namespace spinpair::cli {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw CliError(ExitCode::InputValidation, msg); }

double number(const Json& v, const std::string& key) {
  if (!v.is_number()) invalid("'" + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) invalid("'" + key + "' must be finite");
  return x;
}

int integer(const Json& v, const std::string& key) {
  if (!v.is_number_integer()) invalid("'" + key + "' must be an integer");
  return v.get<int>();
}

const Json& member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) invalid(where + ": missing '" + key + "'");
  return j.at(key);
}

double parse_number(std::string_view text, const std::string& key) {
  double x = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), x);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(x)) {
    invalid("override '" + key + "': '" + std::string(text) + "' is not a finite number");
  }
  return x;
}

std::pair<std::string, double> split_override(const std::string& set) {
  const auto eq = set.find('=');
  if (eq == std::string::npos || eq == 0) invalid("override '" + set + "' is not key=value");
  const std::string key = set.substr(0, eq);
  return {key, parse_number(std::string_view(set).substr(eq + 1), key)};
}

// Assigns parameter `idx`, rejecting a second spelling of the same slot.
void assign(std::array<double, 9>& p, std::array<bool, 9>& seen, std::size_t idx,
            double value, const std::string& key) {
  if (seen[idx]) invalid("parameter '" + key + "' given twice (canonical name and alias)");
  seen[idx] = true;
  p[idx] = value;
}

constexpr std::array<std::string_view, 9> kHamiltonianKeys{"Bx", "By", "Bz", "Jx", "Jy",
                                                           "Jz", "mix_a", "mix_b", "mix_c"};

std::optional<std::size_t> hamiltonian_index(std::string_view key, FamilyTag family) {
  for (std::size_t k = 0; k < kHamiltonianKeys.size(); ++k)
    if (kHamiltonianKeys[k] == key) return k;
  const auto legend = mix_legend(family);
  for (std::size_t k = 0; k < 3; ++k) {
    std::string alias(legend[k]);
    alias[0] = static_cast<char>(alias[0] - 'a' + 'A');
    if (alias == key) return 6 + k;
  }
  return std::nullopt;
}

std::string alias_hint(FamilyTag family, bool capitalise) {
  std::string out;
  for (auto name : mix_legend(family)) {
    std::string s(name);
    if (capitalise) s[0] = static_cast<char>(s[0] - 'a' + 'A');
    out += (out.empty() ? "" : ", ") + s;
  }
  return out;
}

AxisRange range_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) invalid(where + " must be an object");
  return {number(member(j, "lo", where), where + ".lo"), number(member(j, "hi", where), where + ".hi"),
          integer(member(j, "steps", where), where + ".steps")};
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(ExitCode::Io, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    invalid("'" + path + "' is not valid JSON: " + e.what());
  }
}

FamilyTag family_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) invalid(where + ": 'family' must be a string");
  const auto tag = parse_family(j.get<std::string>());
  if (!tag) {
    invalid(where + ": unknown family '" + j.get<std::string>() +
            "' (expected P23, P14, P2bar3bar or P1bar4bar)");
  }
  return *tag;
}

BlochState state_from_json(const Json& j, std::optional<FamilyTag> family) {
  if (!j.is_object()) invalid("state must be a JSON object");
  FamilyTag tag = FamilyTag::P23;
  if (j.contains("family")) {
    tag = family_from_json(j.at("family"), "state");
    if (family && *family != tag) {
      invalid("state family " + std::string(to_string(tag)) + " does not match " +
              std::string(to_string(*family)));
    }
  } else if (family) {
    tag = *family;
  } else {
    invalid("state: missing 'family'");
  }
  std::array<double, 9> p{};
  std::array<bool, 9> seen{};
  for (const auto& [key, value] : j.items()) {
    if (key == "family") continue;
    const auto idx = bloch_field_index(key, tag);
    if (!idx) {
      invalid("state: unknown key '" + key + "' for family " + std::string(to_string(tag)) +
              " (mix aliases: " + alias_hint(tag, false) + ")");
    }
    assign(p, seen, *idx, number(value, key), key);
  }
  return BlochState::from_params(tag, p);
}

Json to_json(const BlochState& b) {
  Json j;
  j["family"] = std::string(to_string(b.family));
  const auto p = b.params();
  for (std::size_t k = 0; k < 9; ++k) j[std::string(kBlochFieldNames[k])] = p[k];
  return j;
}

void apply_overrides(BlochState& b, const std::vector<std::string>& sets) {
  auto p = b.params();
  for (const auto& set : sets) {
    const auto [key, value] = split_override(set);
    const auto idx = bloch_field_index(key, b.family);
    if (!idx) invalid("override: unknown state parameter '" + key + "'");
    p[*idx] = value;
  }
  b = BlochState::from_params(b.family, p);
}

HamiltonianInput hamiltonian_from_json(const Json& j) {
  if (!j.is_object()) invalid("hamiltonian must be a JSON object");
  HamiltonianInput in;
  const FamilyTag tag = family_from_json(member(j, "family", "hamiltonian"), "hamiltonian");
  std::array<double, 9> p{};
  std::array<bool, 9> seen{};
  for (const auto& [key, value] : j.items()) {
    if (key == "family") continue;
    if (key == "beta") {
      in.beta = number(value, key);
      continue;
    }
    const auto idx = hamiltonian_index(key, tag);
    if (!idx) {
      invalid("hamiltonian: key '" + key + "' does not belong to family " +
              std::string(to_string(tag)) + " (mix aliases: " + alias_hint(tag, true) + ")");
    }
    assign(p, seen, *idx, number(value, key), key);
  }
  in.spec = {tag, p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8]};
  return in;
}

void apply_overrides(HamiltonianSpec& h, const std::vector<std::string>& sets) {
  auto p = h.params();
  for (const auto& set : sets) {
    const auto [key, value] = split_override(set);
    const auto idx = hamiltonian_index(key, h.family);
    if (!idx) invalid("override: unknown hamiltonian parameter '" + key + "'");
    p[*idx] = value;
  }
  h = {h.family, p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8]};
}

Json to_json(const HamiltonianSpec& h) {
  Json j;
  j["family"] = std::string(to_string(h.family));
  const auto p = h.params();
  for (std::size_t k = 0; k < 9; ++k) j[std::string(kHamiltonianKeys[k])] = p[k];
  return j;
}

ScanConfig scan_config_from_json(const Json& j) {
  if (!j.is_object()) invalid("scan config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "family" && key != "fixed" && key != "axis1" && key != "axis2" &&
        key != "range1" && key != "range2") {
      invalid("scan config: unknown key '" + key + "'");
    }
  }
  ScanConfig cfg;
  cfg.family = family_from_json(member(j, "family", "scan config"), "scan config");
  cfg.fixed = j.contains("fixed") ? state_from_json(j.at("fixed"), cfg.family)
                                  : BlochState{.family = cfg.family};
  const Json& a1 = member(j, "axis1", "scan config");
  const Json& a2 = member(j, "axis2", "scan config");
  if (!a1.is_string() || !a2.is_string()) invalid("scan config: axes must be strings");
  cfg.axis1 = a1.get<std::string>();
  cfg.axis2 = a2.get<std::string>();
  cfg.range1 = range_from_json(member(j, "range1", "scan config"), "range1");
  cfg.range2 = range_from_json(member(j, "range2", "scan config"), "range2");
  return cfg;
}

Json to_json(const ScanConfig& cfg) {
  Json j;
  j["family"] = std::string(to_string(cfg.family));
  j["fixed"] = to_json(cfg.fixed);
  j["axis1"] = cfg.axis1;
  j["axis2"] = cfg.axis2;
  j["range1"] = {{"lo", cfg.range1.lo}, {"hi", cfg.range1.hi}, {"steps", cfg.range1.steps}};
  j["range2"] = {{"lo", cfg.range2.lo}, {"hi", cfg.range2.hi}, {"steps", cfg.range2.steps}};
  return j;
}

Json to_json(const EntanglementReport& r) {
  Json j;
  j["method"] = std::string(to_string(r.method));
  j["lambdas"] = r.lambdas;
  j["concurrence"] = r.concurrence;
  j["eof"] = r.eof;
  return j;
}

Json to_json(const ValidityReport& v) {
  Json minors = Json::array();
  for (const auto& m : v.minors) minors.push_back({{"label", m.label}, {"value", m.value}});
  Json j;
  j["valid"] = v.valid;
  j["min_eigenvalue"] = v.min_eigenvalue;
  j["minors"] = std::move(minors);
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("real")) invalid("matrix file needs a 'real' 4x4 array");
  auto read = [](const Json& a, const char* name, ComplexMatrix& m, bool imag) {
    if (!a.is_array() || a.size() != 4) invalid(std::string("'") + name + "' must have 4 rows");
    for (std::size_t r = 0; r < 4; ++r) {
      if (!a[r].is_array() || a[r].size() != 4) {
        invalid(std::string("'") + name + "' row " + std::to_string(r) + " must have 4 entries");
      }
      for (std::size_t c = 0; c < 4; ++c) {
        const double x = number(a[r][c], name);
        m(r, c) += imag ? cplx(0.0, x) : cplx(x, 0.0);
      }
    }
  };
  ComplexMatrix m(4);
  read(j.at("real"), "real", m, false);
  if (j.contains("imag")) read(j.at("imag"), "imag", m, true);
  return m;
}

}  // namespace spinpair::cli
