#pragma once

// Reference implementations used only by the tests. Each follows its
// definition by brute force over table lookups; only the brute-force
// enumerator borrows the engine's axiom validator as its filter.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hyperring/structure.hpp"

namespace oracle {

using hyperring::Element;
using hyperring::KrasnerHyperring;
using hyperring::Subset;
using hyperring::Tuple;

std::filesystem::path data_dir();
KrasnerHyperring load_data(const std::string& file);

/// Z_n with singleton-valued addition, elements named "0".."n-1".
KrasnerHyperring zn(unsigned n);

/// Left fold of g over l(n-1)+1 elements.
Element product(const KrasnerHyperring& h, const Tuple& elems);

bool is_ideal(const KrasnerHyperring& h, Subset s);
/// Every subset tested; sorted by raw mask.
std::vector<Subset> ideals(const KrasnerHyperring& h);
bool is_prime(const KrasnerHyperring& h, Subset s);
/// Intersection of the proper primes containing s, carrier when none.
Subset radical(const KrasnerHyperring& h, Subset s);

/// Ordered-tuple reading of phi-(k,n)-absorbing: every ordered tuple of
/// k(n-1)+1 elements with product in Q minus phi(Q) has some
/// (k-1)(n-1)+1 positions with product in Q. nullopt phi is the empty marker.
bool literal_absorbing(const KrasnerHyperring& h, Subset q, int k, std::optional<Subset> phi);
/// Ordered-tuple reading of phi-(k,n)-absorbing primary: the prefix product
/// is in Q or the product over some other position set is in `rad`.
bool literal_absorbing_primary(const KrasnerHyperring& h, Subset q, int k, std::optional<Subset> phi, Subset rad);

/// Lexicographically least table encoding over permutations fixing 0 and 1.
std::vector<unsigned> canonical_code(const KrasnerHyperring& h);

struct BruteCount {
  std::size_t hypergroups = 0;  // labelled f tables passing the hypergroup axioms
  std::size_t structures = 0;   // labelled full structures passing every axiom
  std::size_t classes = 0;      // isomorphism classes fixing 0 and 1
};

/// Fills every (2,2) table over N <= 3 elements and filters with the axiom
/// validator; no pruning.
BruteCount brute_force_enumerate(std::size_t order);

}  // namespace oracle
