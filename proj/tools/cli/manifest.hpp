#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace c4book::cli {

inline constexpr const char* kToolVersion = "0.3.0";

/// Provenance record for one invocation. Everything except wall time is a
/// function of the inputs.
class RunManifest {
 public:
  explicit RunManifest(std::vector<std::string> command_line);

  void add_seed(std::uint64_t seed) { seeds_.push_back(seed); }
  void add_input(const std::string& name, const std::string& bytes);
  void add_output(const std::string& name, const std::string& bytes);

  Json to_json() const;

 private:
  std::vector<std::string> command_line_;
  std::vector<std::uint64_t> seeds_;
  std::map<std::string, std::string> inputs_;
  std::map<std::string, std::string> outputs_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace c4book::cli
