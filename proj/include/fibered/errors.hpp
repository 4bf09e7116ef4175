#pragma once

#include <stdexcept>
#include <string>

namespace fibered {

// bad word/endo/statement literal; CLI exit 2
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// (g, k) outside the supported range; CLI exit 3
struct context_error : std::runtime_error {
  explicit context_error(const std::string& what) : std::runtime_error(what) {}
};

// caller broke a documented precondition
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// bounded search exhausted its budget before reaching a verdict
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fibered
