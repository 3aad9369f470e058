#include "hyperring/phi.hpp"

#include "hyperring/error.hpp"
#include "hyperring/io.hpp"

namespace hyperring {

namespace {

std::string kind_name(PhiKind kind, int exponent) {
  switch (kind) {
    case PhiKind::Empty: return "phi_empty";
    case PhiKind::Zero: return "phi_0";
    case PhiKind::Identity: return "phi_1";
    case PhiKind::Power: return "phi_" + std::to_string(exponent);
    case PhiKind::Omega: return "phi_omega";
    case PhiKind::Table: return "table";
  }
  return "?";
}

// Product of `count` copies of the ideal, padded with {1} up to a valid length.
Subset padded_power(const Hyperring& h, Subset ideal, std::size_t count) {
  const std::size_t step = static_cast<std::size_t>(h->n()) - 1;
  std::size_t length = count;
  while ((length - 1) % step != 0) ++length;
  std::vector<Subset> args(count, ideal);
  args.resize(length, Subset::singleton(h->one()));
  return set_g_product(*h, args);
}

PhiValue close(const Hyperring& h, Subset raw) {
  if (is_hyperideal(h, raw).holds) return {raw, false};
  return {generated_hyperideal(h, raw).members(), true};
}

}  // namespace

PhiDescriptor::PhiDescriptor(PhiKind kind, int exponent)
    : kind_(kind), exponent_(exponent), name_(kind_name(kind, exponent)) {}

PhiDescriptor PhiDescriptor::power(int i) {
  if (i < 2) throw DomainError("power descriptor needs an exponent of at least 2");
  return PhiDescriptor(PhiKind::Power, i);
}

PhiDescriptor PhiDescriptor::table(TableMap entries, std::string name) {
  PhiDescriptor d(PhiKind::Table);
  d.table_ = std::move(entries);
  d.name_ = std::move(name);
  return d;
}

PhiValue phi_apply(const Hyperring& h, const PhiDescriptor& phi, Subset ideal) {
  switch (phi.kind()) {
    case PhiKind::Empty: return {std::nullopt, false};
    case PhiKind::Zero: return {Subset::singleton(h->zero()), false};
    case PhiKind::Identity: return {ideal, false};
    case PhiKind::Power:
      return close(h, padded_power(h, ideal, static_cast<std::size_t>(phi.exponent())));
    case PhiKind::Omega: {
      // Successive valid powers form a decreasing chain; once two consecutive
      // terms agree the chain is constant.
      const std::size_t step = static_cast<std::size_t>(h->n()) - 1;
      Subset current = ideal;
      for (std::size_t t = 1 + step;; t += step) {
        Subset next = padded_power(h, ideal, t);
        if (next == current) break;
        current = next;
      }
      return close(h, current);
    }
    case PhiKind::Table: {
      auto it = phi.entries().find(ideal.bits());
      if (it == phi.entries().end()) {
        throw DomainError("phi table '" + phi.name() + "' has no entry for {" +
                          format_subset(*h, ideal) + "}");
      }
      return {it->second, false};
    }
  }
  throw DomainError("unknown phi kind");
}

Verdict is_reduction_function(const Hyperring& h, const PhiDescriptor& phi) {
  const auto& lattice = hyperideal_lattice(h);
  std::vector<PhiValue> values;
  for (Subset p : lattice) values.push_back(phi_apply(h, phi, p));
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& v = values[i].value;
    if (v && !v->subset_of(lattice[i])) {
      return Verdict::fail_ideals({lattice[i], *v}, "phi({" + format_subset(*h, lattice[i]) +
                                                        "}) = {" + format_subset(*h, *v) +
                                                        "} is not contained in the ideal");
    }
  }
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t j = 0; j < lattice.size(); ++j) {
      if (i == j || !lattice[i].subset_of(lattice[j])) continue;
      const auto& vp = values[i].value;
      const auto& vq = values[j].value;
      if (!vp) continue;
      if (!vq || !vp->subset_of(*vq)) {
        return Verdict::fail_ideals({lattice[i], lattice[j]},
                                    "monotonicity fails for {" + format_subset(*h, lattice[i]) +
                                        "} within {" + format_subset(*h, lattice[j]) + "}");
      }
    }
  }
  return Verdict::pass();
}

PhiDescriptor parse_phi(const std::string& name) {
  if (name == "phi_empty") return PhiDescriptor::empty();
  if (name == "phi_0") return PhiDescriptor::zero();
  if (name == "phi_1") return PhiDescriptor::identity();
  if (name == "phi_omega") return PhiDescriptor::omega();
  if (name.rfind("phi_", 0) == 0 && name.size() > 4) {
    const std::string digits = name.substr(4);
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 6) {
      int i = std::stoi(digits);
      if (i >= 2) return PhiDescriptor::power(i);
    }
  }
  throw ParseError("unknown phi descriptor '" + name + "'");
}

PhiDescriptor phi_table_from_json(const Hyperring& h, const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
    throw ParseError("phi table needs an 'entries' array");
  }
  auto read_ideal = [&](const nlohmann::json& names) {
    if (!names.is_array()) throw ParseError("phi table ideals are lists of element names");
    Subset s;
    for (const auto& n : names) {
      if (!n.is_string()) throw ParseError("phi table element names must be strings");
      auto e = h->find_element(n.get<std::string>());
      if (!e) throw ParseError("phi table names undeclared element '" + n.get<std::string>() + "'");
      s.insert(*e);
    }
    if (s.empty() || !is_hyperideal(h, s).holds) {
      throw ParseError("phi table entry {" + format_subset(*h, s) + "} is not a hyperideal");
    }
    return s;
  };
  PhiDescriptor::TableMap entries;
  for (const auto& entry : doc["entries"]) {
    if (!entry.contains("ideal") || !entry.contains("value")) {
      throw ParseError("phi table entries need 'ideal' and 'value'");
    }
    Subset ideal = read_ideal(entry["ideal"]);
    std::optional<Subset> value;
    if (!entry["value"].is_null()) value = read_ideal(entry["value"]);
    if (!entries.emplace(ideal.bits(), value).second) {
      throw ParseError("phi table repeats the ideal {" + format_subset(*h, ideal) + "}");
    }
  }
  for (Subset p : hyperideal_lattice(h)) {
    if (!entries.count(p.bits())) {
      throw ParseError("phi table has no entry for {" + format_subset(*h, p) + "}");
    }
  }
  return PhiDescriptor::table(std::move(entries), doc.value("name", std::string("table")));
}

std::vector<PhiDescriptor> standard_phi_set() {
  return {PhiDescriptor::empty(),    PhiDescriptor::zero(),     PhiDescriptor::omega(),
          PhiDescriptor::power(3),   PhiDescriptor::power(2),   PhiDescriptor::identity()};
}

}  // namespace hyperring
