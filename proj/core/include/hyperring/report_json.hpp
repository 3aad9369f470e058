#pragma once

#include <nlohmann/json.hpp>

#include "hyperring/axioms.hpp"
#include "hyperring/classify.hpp"
#include "hyperring/search.hpp"
#include "hyperring/theorems.hpp"

namespace hyperring {

// Structured payloads for the CLI --json mode. Elements and ideals are
// written by name, never by index.

nlohmann::json to_json(const AxiomReport& report);
nlohmann::json to_json(const KrasnerHyperring& h, const Verdict& verdict);
nlohmann::json to_json(const KrasnerHyperring& h, const ClassificationReport& report);
nlohmann::json to_json(const TheoremReport& report);
nlohmann::json to_json(const HuntHit& hit);
nlohmann::json subset_json(const KrasnerHyperring& h, Subset s);

}  // namespace hyperring
