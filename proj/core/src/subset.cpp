#include "hyperring/subset.hpp"

#include <algorithm>

namespace hyperring {

bool canonical_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace hyperring
