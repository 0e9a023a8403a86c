#include "manifest.hpp"

#include <fstream>

#include "digest.hpp"
#include "exit_codes.hpp"

namespace spinpair::cli {

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CliError(ExitCode::Io, "cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw CliError(ExitCode::Io, "failed writing '" + path + "'");
}

}  // namespace

std::string input_digest(const Json& effective_inputs) {
  return "sha256:" + sha256_hex(effective_inputs.dump());
}

Json to_json(const RunManifest& m, const std::string& output_path,
             const std::string& output_digest) {
  Json j;
  j["command"] = m.command;
  j["input_digest"] = m.input_digest;
  j["seed"] = m.seed ? Json(*m.seed) : Json(nullptr);
  j["version"] = m.version;
  j["wall_time_seconds"] = m.wall_time_seconds;
  j["output"] = output_path;
  j["output_digest"] = output_digest;
  return j;
}

void write_with_manifest(const std::string& path, const std::string& content,
                         const RunManifest& manifest) {
  write_file(path, content);
  const Json side = to_json(manifest, path, "sha256:" + sha256_hex(content));
  write_file(path + ".manifest.json", side.dump(2) + "\n");
}

}  // namespace spinpair::cli
