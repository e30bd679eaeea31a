#pragma once

#include <stdexcept>
#include <string>

namespace trawlsim {

// Violated model precondition or domain restriction. Messages are
// module-qualified ("stability: ...") so CLI users can tell which model
// rejected the input.
class ModelError : public std::runtime_error {
  public:
    explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed scenario input: missing file, bad JSON, unknown key.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace trawlsim
