#pragma once

// JSON (de)serialisation of the library's input and output types.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinpair/entanglement.hpp"
#include "spinpair/hamiltonians.hpp"
#include "spinpair/separability.hpp"
#include "spinpair/states.hpp"

namespace spinpair::cli {

/// Insertion-ordered so emitted files keep a stable, readable key order.
using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Missing or unreadable files raise exit 5,
/// malformed JSON exit 2.
Json load_json_file(const std::string& path);

FamilyTag family_from_json(const Json& j, const std::string& where);

/// Flat object: family, sx, sy, sz, c1, c2, c3, mix_a, mix_b, mix_c. Absent
/// numeric keys default to zero; the family's legend aliases (gx, dy, ...)
/// are accepted in place of mix_*. When `family` is set the object may omit
/// its own family key, but must not contradict it.
BlochState state_from_json(const Json& j, std::optional<FamilyTag> family = std::nullopt);
Json to_json(const BlochState& b);

/// Applies "key=value" overrides. Keys use the same names as the JSON form.
void apply_overrides(BlochState& b, const std::vector<std::string>& sets);

struct HamiltonianInput {
  HamiltonianSpec spec;
  std::optional<double> beta;
};

/// Keys family, Bx, By, Bz, Jx, Jy, Jz, mix_a, mix_b, mix_c and optional beta;
/// capitalised legend aliases (Gx, Dy, ...) are accepted for mix_*.
HamiltonianInput hamiltonian_from_json(const Json& j);
void apply_overrides(HamiltonianSpec& h, const std::vector<std::string>& sets);
Json to_json(const HamiltonianSpec& h);

/// {"family", "fixed": {state}, "axis1", "axis2", "range1": {lo, hi, steps},
///  "range2": {...}}
ScanConfig scan_config_from_json(const Json& j);
Json to_json(const ScanConfig& cfg);

Json to_json(const EntanglementReport& r);
Json to_json(const ValidityReport& v);

/// {"real": 4x4, "imag": 4x4}; "imag" may be omitted for real matrices.
ComplexMatrix matrix_from_json(const Json& j);

}  // namespace spinpair::cli
