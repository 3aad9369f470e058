#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hyperring/structure.hpp"

namespace hyperring {

/// Reads a structure document:
///
///   { "name": ..., "m": 2, "n": 2, "elements": [...], "zero": "0", "one": "1",
///     "f": [ {"args": [m names], "result": [names]} ... ],
///     "g": [ {"args": [n names], "result": name} ... ] }
///
/// Every sorted tuple must appear exactly once per table; entries are expanded
/// to all permutations. Throws ParseError.
KrasnerHyperring parse_structure(const nlohmann::json& doc);
KrasnerHyperring parse_structure(std::string_view text);
KrasnerHyperring load_structure(const std::filesystem::path& path);

/// Inverse of parse_structure: one entry per sorted tuple, tuples in
/// lexicographic order of declaration indices.
nlohmann::json serialize(const KrasnerHyperring& h);
void save_structure(const KrasnerHyperring& h, const std::filesystem::path& path);

/// "0,x" style listing in declaration order; the empty set is "".
std::string format_subset(const KrasnerHyperring& h, Subset s);
/// "(x,x,1)".
std::string format_tuple(const KrasnerHyperring& h, std::span<const Element> t);
/// Inverse of format_subset. Commas nested inside (), [] or {} belong to the
/// element name, so product and coset names round-trip.
Subset parse_subset(const KrasnerHyperring& h, std::string_view text);

}  // namespace hyperring
