#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json_io.hpp"

namespace spinpair::cli {

/// Provenance record written next to every output file as
/// `<out>.manifest.json`.
struct RunManifest {
  std::string command;
  /// SHA-256 of the canonical (compact) JSON of the effective inputs.
  std::string input_digest;
  std::optional<std::uint64_t> seed;
  std::string version;
  double wall_time_seconds = 0.0;
};

std::string input_digest(const Json& effective_inputs);

Json to_json(const RunManifest& m, const std::string& output_path,
             const std::string& output_digest);

/// Writes `content` to `path` and the manifest sidecar. Any failure to open
/// or write either file raises exit 5.
void write_with_manifest(const std::string& path, const std::string& content,
                         const RunManifest& manifest);

}  // namespace spinpair::cli
