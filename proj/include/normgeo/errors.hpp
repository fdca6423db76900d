#pragma once

#include <stdexcept>
#include <string>

namespace normgeo {

struct unsupported_dimension_error : std::runtime_error {
  explicit unsupported_dimension_error(const std::string& what) : std::runtime_error(what) {}
};

struct degeneracy_error : std::runtime_error {
  explicit degeneracy_error(const std::string& what) : std::runtime_error(what) {}
};

struct size_error : std::runtime_error {
  explicit size_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace normgeo
