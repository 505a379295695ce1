#include "manifest.hpp"

#include "c4book/digest.hpp"

namespace c4book::cli {

RunManifest::RunManifest(std::vector<std::string> command_line)
    : command_line_(std::move(command_line)), start_(std::chrono::steady_clock::now()) {}

void RunManifest::add_input(const std::string& name, const std::string& bytes) { inputs_[name] = sha256_hex(bytes); }

void RunManifest::add_output(const std::string& name, const std::string& bytes) { outputs_[name] = sha256_hex(bytes); }

Json RunManifest::to_json() const {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "run_manifest";
  j["tool_version"] = kToolVersion;
  j["command_line"] = command_line_;
  j["seeds"] = seeds_;
  j["input_digests"] = inputs_;
  j["output_digests"] = outputs_;
  j["wall_time_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  return j;
}

}  // namespace c4book::cli
