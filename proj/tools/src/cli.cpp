#include "hyperring_cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hyperring/axioms.hpp"
#include "hyperring/classify.hpp"
#include "hyperring/construct.hpp"
#include "hyperring/io.hpp"
#include "hyperring/report_json.hpp"
#include "hyperring/search.hpp"
#include "hyperring/theorems.hpp"

namespace hyperring::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Globals {
  bool json = false;
  unsigned jobs = 1;
  long long seed = 0;  // accepted for scripting; every command is deterministic
};

/// Raised for argument problems detected after CLI11 parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

fs::path at_file(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') throw UsageError("expected @file, got '" + arg + "'");
  return arg.substr(1);
}

Hyperring load(const std::string& path) { return Hyperring::from(load_structure(path)); }

Hyperideal ideal_arg(const Hyperring& h, const std::string& text) {
  return Hyperideal::make(h, parse_subset(*h, text));
}

PhiDescriptor phi_arg(const Hyperring& h, const std::string& spec) {
  if (!spec.empty() && spec.front() == '@') return phi_table_from_json(h, read_json_file(at_file(spec)));
  return parse_phi(spec);
}

std::vector<PhiDescriptor> builtin_phis(const std::vector<std::string>& specs) {
  if (specs.empty()) return standard_phi_set();
  std::vector<PhiDescriptor> out;
  for (const auto& s : specs) {
    if (!s.empty() && s.front() == '@') throw UsageError("table phi needs a single structure: " + s);
    out.push_back(parse_phi(s));
  }
  return out;
}

std::vector<Hyperring> load_catalog(const std::string& dir, const std::vector<std::string>& files,
                                    std::size_t order, unsigned jobs) {
  std::vector<Hyperring> out;
  if (!dir.empty()) {
    if (!fs::is_directory(dir)) throw ParseError("not a directory: " + dir);
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(dir)) {
      const fs::path& p = entry.path();
      if (p.extension() == ".json" && p.filename() != "index.json") paths.push_back(p);
    }
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) out.push_back(load(p.string()));
  }
  for (const auto& f : files) out.push_back(load(f));
  if (order > 0) {
    SearchConfig config;
    config.order = order;
    config.jobs = jobs;
    Catalog cat = enumerate_up_to(config);
    out.insert(out.end(), cat.structures.begin(), cat.structures.end());
  }
  if (out.empty()) throw UsageError("no structures: give files, --dir or --order");
  return out;
}

std::string kn(int k, int n) { return "(" + std::to_string(k) + "," + std::to_string(n) + ")"; }

std::string predicate_label(const PredicateResult& r, int n) {
  if (r.predicate == "prime") return "prime";
  if (r.predicate == "primary") return "primary";
  if (r.predicate == "primary-strict") return "primary (every failing position)";
  if (r.predicate == "absorbing") return kn(r.k, n) + "-absorbing";
  if (r.predicate == "absorbing-primary") return kn(r.k, n) + "-absorbing primary";
  if (r.predicate == "phi-absorbing") return r.phi + "-" + kn(r.k, n) + "-absorbing";
  if (r.predicate == "phi-absorbing-primary") return r.phi + "-" + kn(r.k, n) + "-absorbing primary";
  if (r.predicate == "strongly-phi-absorbing-primary") return "strongly " + r.phi + "-" + kn(r.k, n) + "-absorbing primary";
  return r.predicate;
}

std::string verdict_text(const KrasnerHyperring& h, const Verdict& v) {
  if (v.holds) return "yes";
  std::string s = "no";
  if (!v.witness.empty()) s += "  witness " + format_tuple(h, v.witness);
  if (!v.ideal_witness.empty()) {
    s += "  ideals";
    for (Subset i : v.ideal_witness) s += " {" + format_subset(h, i) + "}";
  }
  return s;
}

std::string phi_value_text(const KrasnerHyperring& h, const PhiValue& v) {
  if (v.is_empty_marker()) return "empty";
  return "{" + format_subset(h, *v.value) + "}" + (v.closed ? " (closed)" : "");
}

void print_table(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [key, value] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << (key + ":") << value << "\n";
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- commands

int cmd_validate(const Globals& g, const std::string& path, std::ostream& out) {
  KrasnerHyperring h = load_structure(path);
  AxiomReport report = validate_axioms(h);
  if (g.json) {
    json j = to_json(report);
    j["structure"] = h.name();
    print_json(out, j);
  } else {
    out << "structure " << h.name() << ": m=" << h.m() << " n=" << h.n() << " N=" << h.size() << "\n";
    out << "axioms: " << (report.pass() ? "pass" : "fail") << "\n";
    for (const auto& v : report.violations) {
      out << "  " << v.axiom << " witness (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) out << (i ? "," : "") << v.witness[i];
      out << ") observed " << v.observed << " expected " << v.expected << "\n";
    }
    for (const auto& note : report.notes) out << "note: " << note << "\n";
  }
  return report.pass() ? kExitOk : kExitFailed;
}

int cmd_ideals(const Globals& g, const std::string& path, bool full_scan, std::ostream& out) {
  Hyperring h = load(path);
  auto ideals = enumerate_hyperideals(h, full_scan ? EnumerationStrategy::FullScan : EnumerationStrategy::Closure);
  const auto& primes = prime_lattice(h);
  auto is_prime_mask = [&](Subset s) { return std::find(primes.begin(), primes.end(), s) != primes.end(); };
  if (g.json) {
    json list = json::array();
    for (const auto& i : ideals) {
      list.push_back({{"members", subset_json(*h, i.members())}, {"proper", i.proper()}, {"prime", is_prime_mask(i.members())}});
    }
    print_json(out, {{"structure", h->name()}, {"count", ideals.size()}, {"ideals", list}});
    return kExitOk;
  }
  out << "hyperideals of " << h->name() << " (" << ideals.size() << ")\n";
  for (const auto& i : ideals) {
    out << "  {" << format_subset(*h, i.members()) << "}";
    if (!i.proper()) out << "  whole ring";
    else if (is_prime_mask(i.members())) out << "  prime";
    out << "\n";
  }
  return kExitOk;
}

int cmd_classify(const Globals& g, const std::string& path, const std::string& ideal_text, int k,
                 const std::vector<std::string>& phi_specs, std::ostream& out) {
  if (k < 1) throw UsageError("--k must be at least 1");
  Hyperring h = load(path);
  Hyperideal q = ideal_arg(h, ideal_text);
  if (!q.proper()) throw DomainError("ideal {" + format_subset(*h, q.members()) + "} is not proper");
  std::vector<PhiDescriptor> phis;
  if (phi_specs.empty()) phis = standard_phi_set();
  for (const auto& s : phi_specs) phis.push_back(phi_arg(h, s));

  ClassificationReport report = classify_ideal(q, k, phis);
  std::erase_if(report.results, [k](const PredicateResult& r) { return r.k != 0 && r.k != k; });
  std::erase_if(report.primary_tuples, [k](const PrimaryTuple& t) { return t.k != k; });
  if (g.json) {
    json j = to_json(*h, report);
    j["structure"] = h->name();
    j["k"] = k;
    print_json(out, j);
    return kExitOk;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("structure", h->name());
  rows.emplace_back("ideal", "{" + format_subset(*h, report.ideal) + "}");
  rows.emplace_back("radical", "{" + format_subset(*h, *report.radical) + "}");
  if (!report.radicals_agree) rows.emplace_back("radical by powers", "{" + format_subset(*h, *report.radical_by_powers) + "}");
  for (const auto& [name, value] : report.phi_values) rows.emplace_back(name + "(Q)", phi_value_text(*h, value));
  for (const auto& r : report.results) rows.emplace_back(predicate_label(r, h->n()), verdict_text(*h, r.verdict));
  for (const auto& t : report.primary_tuples) {
    rows.emplace_back(t.phi + "-" + kn(t.k, h->n()) + " primary tuple", format_tuple(*h, t.tuple));
  }
  print_table(out, rows);
  return kExitOk;
}

int cmd_radical(const Globals& g, const std::string& path, const std::string& ideal_text, bool powers,
                std::ostream& out) {
  Hyperring h = load(path);
  Hyperideal q = ideal_arg(h, ideal_text);
  Subset r = powers ? radical_by_powers(q).members() : radical(q).members();
  if (g.json) {
    print_json(out, {{"structure", h->name()},
                     {"ideal", subset_json(*h, q.members())},
                     {"method", powers ? "powers" : "primes"},
                     {"radical", subset_json(*h, r)}});
  } else {
    out << format_subset(*h, r) << "\n";
  }
  return kExitOk;
}

void emit_structure(const Globals& g, const KrasnerHyperring& h, const std::string& out_path, std::ostream& out,
                    json extra) {
  if (!out_path.empty()) save_structure(h, out_path);
  if (g.json) {
    extra["structure"] = serialize(h);
    print_json(out, extra);
  } else if (out_path.empty()) {
    out << serialize(h).dump(1) << "\n";
  } else {
    out << "wrote " << h.name() << " (" << h.size() << " elements) to " << out_path << "\n";
  }
}

int cmd_quotient(const Globals& g, const std::string& path, const std::string& ideal_text,
                 const std::string& out_path, std::ostream& out) {
  Hyperring h = load(path);
  Quotient q = quotient(ideal_arg(h, ideal_text));
  json cosets = json::object();
  for (std::size_t i = 0; i < q.cosets.size(); ++i) cosets[q.ring->element_name(i)] = subset_json(*h, q.cosets[i]);
  if (!g.json) {
    for (std::size_t i = 0; i < q.cosets.size(); ++i) {
      out << "coset " << q.ring->element_name(i) << " = {" << format_subset(*h, q.cosets[i]) << "}\n";
    }
  }
  emit_structure(g, *q.ring, out_path, out, {{"cosets", cosets}});
  return kExitOk;
}

int cmd_product(const Globals& g, const std::vector<std::string>& paths, const std::string& out_path,
                std::ostream& out) {
  std::vector<Hyperring> factors;
  for (const auto& p : paths) factors.push_back(load(p));
  Product p = product(factors);
  emit_structure(g, *p.ring, out_path, out, json::object());
  return kExitOk;
}

std::vector<Element> read_map(const Hyperring& source, const Hyperring& target, const std::string& spec) {
  json doc = read_json_file(at_file(spec));
  if (!doc.is_object()) throw ParseError("homomorphism file must be an object of element names");
  std::vector<Element> map(source.size(), KrasnerHyperring::kUnset);
  for (const auto& [from, to] : doc.items()) {
    auto a = source->find_element(from);
    if (!a) throw ParseError("unknown source element '" + from + "'");
    if (!to.is_string()) throw ParseError("image of '" + from + "' must be an element name");
    auto b = target->find_element(to.get<std::string>());
    if (!b) throw ParseError("unknown target element '" + to.get<std::string>() + "'");
    map[*a] = *b;
  }
  for (Element e = 0; e < map.size(); ++e) {
    if (map[e] == KrasnerHyperring::kUnset) throw ParseError("no image for '" + source->element_name(e) + "'");
  }
  return map;
}

int cmd_homcheck(const Globals& g, const std::string& source_path, const std::string& target_path,
                 const std::string& map_spec, const std::string& phi1_spec, const std::string& phi2_spec,
                 std::ostream& out) {
  Hyperring source = load(source_path);
  Hyperring target = load(target_path);
  if ((phi1_spec.empty()) != (phi2_spec.empty())) throw UsageError("--phi1 and --phi2 go together");
  std::vector<Element> map = read_map(source, target, map_spec);
  Verdict hom = is_homomorphism(source, target, map);
  std::optional<Verdict> phi_hom;
  if (hom.holds && !phi1_spec.empty()) {
    Homomorphism h = Homomorphism::make(source, target, map);
    phi_hom = is_phi1_phi2_homomorphism(h, phi_arg(source, phi1_spec), phi_arg(target, phi2_spec));
  }
  bool ok = hom.holds && (!phi_hom || phi_hom->holds);
  if (g.json) {
    json j{{"source", source->name()}, {"target", target->name()}, {"homomorphism", to_json(*source, hom)}};
    if (phi_hom) j["phi_homomorphism"] = to_json(*target, *phi_hom);
    print_json(out, j);
  } else {
    std::vector<std::pair<std::string, std::string>> rows{{"homomorphism", verdict_text(*source, hom)}};
    if (!hom.holds && !hom.detail.empty()) rows.emplace_back("detail", hom.detail);
    if (phi_hom) rows.emplace_back(phi1_spec + "-" + phi2_spec + "-homomorphism", verdict_text(*target, *phi_hom));
    print_table(out, rows);
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_theorems(const Globals& g, const std::vector<Hyperring>& structures, const SuiteOptions& options,
                 std::size_t show, std::ostream& out) {
  auto reports = run_suite(structures, options);
  bool failed = std::any_of(reports.begin(), reports.end(),
                            [](const TheoremReport& r) { return !r.supplementary && !r.failures.empty(); });
  if (g.json) {
    json list = json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    print_json(out, {{"structures", structures.size()}, {"k_max", options.k_max}, {"theorems", list}});
    return failed ? kExitFailed : kExitOk;
  }
  out << "theorem suite: " << structures.size() << " structures, k_max " << options.k_max << "\n";
  out << std::left << std::setw(22) << "theorem" << std::setw(10) << "reading" << std::right << std::setw(8)
      << "holds" << std::setw(9) << "vacuous" << std::setw(9) << "skipped" << std::setw(10) << "failures" << "\n";
  for (const auto& r : reports) {
    std::string id = r.id + (r.supplementary ? "*" : "");
    out << std::left << std::setw(22) << id << std::setw(10) << r.reading << std::right << std::setw(8) << r.holds
        << std::setw(9) << r.vacuous << std::setw(9) << r.skipped << std::setw(10) << r.failures.size() << "\n";
  }
  out << "* supplementary check\n";
  for (const auto& r : reports) {
    for (std::size_t i = 0; i < std::min(show, r.failures.size()); ++i) {
      const auto& f = r.failures[i];
      out << "FAIL " << r.id << " [" << r.reading << "] " << f.structure << " | " << f.instance << " | " << f.detail << "\n";
    }
  }
  return failed ? kExitFailed : kExitOk;
}

int cmd_enumerate(const Globals& g, std::size_t order, bool up_to, const std::string& out_dir, std::ostream& out) {
  SearchConfig config;
  config.order = order;
  config.jobs = g.jobs;
  Catalog cat = up_to ? enumerate_up_to(config) : enumerate_structures(config);
  std::map<std::size_t, std::size_t> counts;
  for (const auto& s : cat.structures) ++counts[s.size()];

  json index{{"m", config.m}, {"n", config.n}, {"orders", json::object()}, {"entries", json::array()}};
  for (const auto& [o, c] : counts) index["orders"][std::to_string(o)] = c;
  index["stats"] = {{"involutions", cat.stats.involutions},
                    {"hypergroups", cat.stats.hypergroups},
                    {"leaves", cat.stats.leaves},
                    {"classes", cat.stats.classes}};
  for (std::size_t i = 0; i < cat.structures.size(); ++i) {
    const auto& s = cat.structures[i];
    index["entries"].push_back({{"file", s->name() + ".json"},
                                {"name", s->name()},
                                {"order", s.size()},
                                {"certificate", cat.certificates[i]}});
  }
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (const auto& s : cat.structures) save_structure(*s, fs::path(out_dir) / (s->name() + ".json"));
    std::ofstream(fs::path(out_dir) / "index.json") << index.dump(1) << "\n";
  }
  if (g.json) {
    print_json(out, index);
  } else {
    for (const auto& [o, c] : counts) out << "order " << o << ": " << c << " structures\n";
    out << "hypergroups " << cat.stats.hypergroups << ", leaves " << cat.stats.leaves << ", classes "
        << cat.stats.classes << "\n";
    if (!out_dir.empty()) out << "wrote " << cat.structures.size() << " files and index.json to " << out_dir << "\n";
  }
  return kExitOk;
}

int cmd_hunt(const Globals& g, const std::vector<Hyperring>& catalog, const std::string& kind, const std::string& phi,
             int k, std::ostream& out) {
  if (k < 1) throw UsageError("--k must be at least 1");
  HuntTarget target{parse_hunt_kind(kind), builtin_phis({phi}).front(), k};
  auto hits = hunt(catalog, target);
  if (g.json) {
    json list = json::array();
    for (const auto& hit : hits) list.push_back(to_json(hit));
    print_json(out, {{"kind", hunt_kind_name(target.kind)}, {"phi", phi}, {"k", k}, {"structures", catalog.size()}, {"hits", list}});
    return kExitOk;
  }
  out << hunt_kind_name(target.kind) << " " << phi << " k=" << k << ": " << hits.size() << " hits over "
      << catalog.size() << " structures\n";
  for (const auto& hit : hits) {
    out << "  " << hit.structure->name() << " Q={" << format_subset(*hit.structure, hit.ideal) << "} witness "
        << format_tuple(*hit.structure, hit.witness) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Krasner (m,n)-hyperrings: validation, hyperideals, classification, theorem checks"};
  app.name("hyperring");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Structured JSON output");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  app.add_option("--seed", g.seed, "Accepted for scripting; results do not depend on it");

  std::string path, target_path, ideal, out_path, dir, map_spec, phi1, phi2, kind = "phi-primary-not-primary";
  std::vector<std::string> paths, phis;
  std::string phi = "phi_0";
  int k = 2;
  bool full_scan = false, powers = false, up_to = false, no_products = false;
  std::size_t order = 0, show = 3;
  SuiteOptions suite;

  auto* validate = app.add_subcommand("validate", "Check every hyperring axiom");
  validate->add_option("file", path)->required();

  auto* ideals = app.add_subcommand("ideals", "List all hyperideals");
  ideals->add_option("file", path)->required();
  ideals->add_flag("--full-scan", full_scan, "Test every subset instead of closing generators");

  auto* classify = app.add_subcommand("classify", "Classify one proper hyperideal");
  classify->add_option("file", path)->required();
  classify->add_option("--ideal", ideal, "Members, e.g. \"0,x\"")->required();
  classify->add_option("--k", k, "k of the (k,n) predicates");
  classify->add_option("--phi", phis, "phi_empty, phi_0, phi_1, phi_<i>, phi_omega or @table.json");

  auto* rad = app.add_subcommand("radical", "Radical of a hyperideal");
  rad->add_option("file", path)->required();
  rad->add_option("--ideal", ideal)->required();
  rad->add_flag("--powers", powers, "Compute from iterated powers instead of primes");

  auto* quot = app.add_subcommand("quotient", "Quotient by a hyperideal");
  quot->add_option("file", path)->required();
  quot->add_option("--ideal", ideal)->required();
  quot->add_option("--out", out_path, "Write the quotient structure here");

  auto* prod = app.add_subcommand("product", "Direct product of structures");
  prod->add_option("files", paths)->required();
  prod->add_option("--out", out_path, "Write the product structure here");

  auto* hom = app.add_subcommand("homcheck", "Check a map between two structures");
  hom->add_option("source", path)->required();
  hom->add_option("target", target_path)->required();
  hom->add_option("--map", map_spec, "@file with a JSON object of element names")->required();
  hom->add_option("--phi1", phi1, "Reduction function on the source");
  hom->add_option("--phi2", phi2, "Reduction function on the target");

  auto* thm = app.add_subcommand("theorems", "Run the theorem harness");
  thm->add_option("files", paths);
  thm->add_option("--dir", dir, "Catalog directory");
  thm->add_option("--order", order, "Also enumerate all structures up to this order");
  thm->add_option("--kmax", suite.k_max)->check(CLI::Range(1, 6));
  thm->add_option("--phi", phis, "Builtin phi functions (default: the standard set)");
  thm->add_option("--max-product", suite.max_product_size, "Largest product carrier formed");
  thm->add_flag("--no-products", no_products, "Skip product-based checks");
  thm->add_option("--show", show, "Failures printed per theorem");

  auto* en = app.add_subcommand("enumerate", "Enumerate (2,2)-hyperrings up to isomorphism");
  en->add_option("--order", order)->required()->check(CLI::Range(std::size_t{1}, kMaxSearchOrder));
  en->add_flag("--up-to", up_to, "All orders from 1");
  en->add_option("--out", out_path, "Catalog directory to write");

  auto* hu = app.add_subcommand("hunt", "Search a catalog for witness configurations");
  hu->add_option("files", paths);
  hu->add_option("--dir", dir);
  hu->add_option("--order", order, "Enumerate all structures up to this order");
  hu->add_option("--kind", kind, "prime-not-primary, phi-absorbing-not-absorbing, phi-primary-not-primary, phi-primary-tuple");
  hu->add_option("--phi", phi);
  hu->add_option("--k", k);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*validate) return cmd_validate(g, path, out);
    if (*ideals) return cmd_ideals(g, path, full_scan, out);
    if (*classify) return cmd_classify(g, path, ideal, k, phis, out);
    if (*rad) return cmd_radical(g, path, ideal, powers, out);
    if (*quot) return cmd_quotient(g, path, ideal, out_path, out);
    if (*prod) return cmd_product(g, paths, out_path, out);
    if (*hom) return cmd_homcheck(g, path, target_path, map_spec, phi1, phi2, out);
    if (*thm) {
      suite.phis = builtin_phis(phis);
      suite.jobs = g.jobs;
      suite.products = !no_products;
      return cmd_theorems(g, load_catalog(dir, paths, order, g.jobs), suite, show, out);
    }
    if (*en) return cmd_enumerate(g, order, up_to, out_path, out);
    if (*hu) return cmd_hunt(g, load_catalog(dir, paths, order, g.jobs), kind, phi, k, out);
  } catch (const InvariantError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace hyperring::cli
