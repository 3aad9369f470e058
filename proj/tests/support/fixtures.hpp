#pragma once

#include <string>

#include "hyperring/io.hpp"
#include "hyperring/structure.hpp"
#include "oracles.hpp"

namespace fixtures {

inline hyperring::Hyperring ring(const std::string& file) {
  return hyperring::Hyperring::from(oracle::load_data(file));
}

inline hyperring::Subset members(const hyperring::Hyperring& h, const std::string& text) {
  return hyperring::parse_subset(*h, text);
}

inline std::string names(const hyperring::Hyperring& h, hyperring::Subset s) {
  return hyperring::format_subset(*h, s);
}

}  // namespace fixtures
