#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperring/ideals.hpp"
#include "hyperring/verdict.hpp"

namespace hyperring {

enum class PhiKind { Empty, Zero, Identity, Power, Omega, Table };

/// A function from the hyperideal lattice to itself plus the empty marker.
/// Table descriptors are keyed by member mask and only make sense on the
/// structure they were built for.
class PhiDescriptor {
 public:
  using TableMap = std::map<std::uint64_t, std::optional<Subset>>;

  static PhiDescriptor empty() { return PhiDescriptor(PhiKind::Empty); }
  static PhiDescriptor zero() { return PhiDescriptor(PhiKind::Zero); }
  static PhiDescriptor identity() { return PhiDescriptor(PhiKind::Identity); }
  /// Throws DomainError for i < 2.
  static PhiDescriptor power(int i);
  static PhiDescriptor omega() { return PhiDescriptor(PhiKind::Omega); }
  static PhiDescriptor table(TableMap entries, std::string name = "table");

  PhiKind kind() const { return kind_; }
  int exponent() const { return exponent_; }
  const TableMap& entries() const { return table_; }
  /// CLI spelling: phi_empty, phi_0, phi_1, phi_<i>, phi_omega, or the table label.
  const std::string& name() const { return name_; }

 private:
  explicit PhiDescriptor(PhiKind kind, int exponent = 0);

  PhiKind kind_;
  int exponent_ = 0;
  std::string name_;
  TableMap table_;
};

/// nullopt is the empty marker. `closed` is set when a raw set product was not
/// a hyperideal and had to be replaced by the hyperideal it generates.
struct PhiValue {
  std::optional<Subset> value;
  bool closed = false;

  bool is_empty_marker() const { return !value.has_value(); }
  /// I minus phi(I); the empty marker removes nothing.
  Subset remove_from(Subset ideal) const { return value ? ideal - *value : ideal; }
};

/// Throws DomainError when a table descriptor has no entry for the ideal.
PhiValue phi_apply(const Hyperring& h, const PhiDescriptor& phi, Subset ideal);
inline PhiValue phi_apply(const PhiDescriptor& phi, const Hyperideal& ideal) {
  return phi_apply(ideal.parent(), phi, ideal.members());
}

/// phi(P) within P, and P within Q implies phi(P) within phi(Q), over all
/// hyperideal pairs. On failure ideal_witness is {P, phi(P)} or {P, Q}.
Verdict is_reduction_function(const Hyperring& h, const PhiDescriptor& phi);

/// phi_empty, phi_0, phi_1, phi_<i> (i >= 2), phi_omega. Throws ParseError.
PhiDescriptor parse_phi(const std::string& name);
/// {"name": ..., "entries": [{"ideal": [names], "value": [names] | null}]}.
/// Every listed ideal and value must be a hyperideal of h. Throws ParseError.
PhiDescriptor phi_table_from_json(const Hyperring& h, const nlohmann::json& doc);

/// empty, zero, omega, power(3), power(2), identity: a chain under pointwise
/// inclusion on every structure.
std::vector<PhiDescriptor> standard_phi_set();

}  // namespace hyperring
