#include "hyperring/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "hyperring/error.hpp"

namespace hyperring {
namespace {

using nlohmann::json;

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

Element lookup(const KrasnerHyperring& h, const json& name, const char* what) {
  if (!name.is_string()) throw ParseError(std::string(what) + " must be an element name");
  auto e = h.find_element(name.get<std::string>());
  if (!e) {
    throw ParseError(std::string(what) + " '" + name.get<std::string>() + "' is not declared");
  }
  return *e;
}

Tuple read_args(const KrasnerHyperring& h, const json& entry, int arity, const char* table) {
  const json& args = field(entry, "args");
  if (!args.is_array() || args.size() != static_cast<std::size_t>(arity)) {
    throw ParseError(std::string(table) + " entry needs " + std::to_string(arity) + " args");
  }
  Tuple t;
  for (const json& a : args) t.push_back(lookup(h, a, "argument"));
  std::sort(t.begin(), t.end());
  return t;
}

std::string args_str(const KrasnerHyperring& h, const Tuple& t) { return format_tuple(h, t); }

std::size_t sorted_tuple_count(std::size_t n, std::size_t k) {
  // C(n+k-1, k)
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n + i - 1) / i;
  return r;
}

}  // namespace

KrasnerHyperring parse_structure(const json& doc) {
  if (!doc.is_object()) throw ParseError("structure document must be an object");
  try {
    const int m = field(doc, "m").get<int>();
    const int n = field(doc, "n").get<int>();
    if (m < 2 || n < 2) throw ParseError("m and n must be at least 2");
    auto names = field(doc, "elements").get<std::vector<std::string>>();
    if (names.empty()) throw ParseError("elements must be nonempty");
    {
      auto sorted = names;
      std::sort(sorted.begin(), sorted.end());
      auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      if (dup != sorted.end()) throw ParseError("element '" + *dup + "' declared twice");
    }
    auto index_of = [&](const json& v, const char* what) -> Element {
      auto s = v.get<std::string>();
      auto it = std::find(names.begin(), names.end(), s);
      if (it == names.end()) throw ParseError(std::string(what) + " '" + s + "' is not declared");
      return static_cast<Element>(it - names.begin());
    };
    Element zero = index_of(field(doc, "zero"), "zero");
    Element one = index_of(field(doc, "one"), "one");
    std::string name = doc.value("name", std::string("unnamed"));

    KrasnerHyperring h(name, m, n, names, zero, one);

    std::map<Tuple, bool> seen_f;
    for (const json& entry : field(doc, "f")) {
      Tuple t = read_args(h, entry, m, "f");
      if (!seen_f.emplace(t, true).second) throw ParseError("duplicate f entry " + args_str(h, t));
      const json& result = field(entry, "result");
      if (!result.is_array() || result.empty()) {
        throw ParseError("f result for " + args_str(h, t) + " must be a nonempty list");
      }
      Subset s;
      for (const json& r : result) s.insert(lookup(h, r, "result element"));
      h.set_f_symmetric(t, s);
    }
    if (seen_f.size() != sorted_tuple_count(names.size(), static_cast<std::size_t>(m))) {
      bool reported = false;
      for_each_multiset(names.size(), static_cast<std::size_t>(m), [&](const Tuple& t) {
        if (!seen_f.count(t)) {
          reported = true;
          throw ParseError("missing f entry " + args_str(h, t));
        }
        return true;
      });
      if (!reported) throw ParseError("f table is incomplete");
    }

    std::map<Tuple, bool> seen_g;
    for (const json& entry : field(doc, "g")) {
      Tuple t = read_args(h, entry, n, "g");
      if (!seen_g.emplace(t, true).second) throw ParseError("duplicate g entry " + args_str(h, t));
      h.set_g_symmetric(t, lookup(h, field(entry, "result"), "result element"));
    }
    if (seen_g.size() != sorted_tuple_count(names.size(), static_cast<std::size_t>(n))) {
      for_each_multiset(names.size(), static_cast<std::size_t>(n), [&](const Tuple& t) {
        if (!seen_g.count(t)) throw ParseError("missing g entry " + args_str(h, t));
        return true;
      });
      throw ParseError("g table is incomplete");
    }
    return h;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed structure document: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  } catch (const CapacityError& e) {
    throw ParseError(e.what());
  }
}

KrasnerHyperring parse_structure(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_structure(doc);
}

KrasnerHyperring load_structure(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_structure(std::string_view(buf.str()));
}

json serialize(const KrasnerHyperring& h) {
  json doc;
  doc["name"] = h.name();
  doc["m"] = h.m();
  doc["n"] = h.n();
  doc["elements"] = h.element_names();
  doc["zero"] = h.element_name(h.zero());
  doc["one"] = h.element_name(h.one());
  auto names = [&](const Tuple& t) {
    json a = json::array();
    for (Element e : t) a.push_back(h.element_name(e));
    return a;
  };
  json f = json::array();
  for_each_multiset(h.size(), static_cast<std::size_t>(h.m()), [&](const Tuple& t) {
    json r = json::array();
    for (Element e : h.f(t)) r.push_back(h.element_name(e));
    f.push_back({{"args", names(t)}, {"result", r}});
    return true;
  });
  json g = json::array();
  for_each_multiset(h.size(), static_cast<std::size_t>(h.n()), [&](const Tuple& t) {
    g.push_back({{"args", names(t)}, {"result", h.element_name(h.g(t))}});
    return true;
  });
  doc["f"] = std::move(f);
  doc["g"] = std::move(g);
  return doc;
}

void save_structure(const KrasnerHyperring& h, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << serialize(h).dump(1) << '\n';
}

std::string format_subset(const KrasnerHyperring& h, Subset s) {
  std::string out;
  for (Element e : s) {
    if (!out.empty()) out += ',';
    out += h.element_name(e);
  }
  return out;
}

std::string format_tuple(const KrasnerHyperring& h, std::span<const Element> t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += h.element_name(t[i]);
  }
  return out + ")";
}

Subset parse_subset(const KrasnerHyperring& h, std::string_view text) {
  Subset s;
  int depth = 0;
  std::string token;
  auto flush = [&] {
    auto b = token.find_first_not_of(" \t");
    auto e = token.find_last_not_of(" \t");
    std::string name = b == std::string::npos ? "" : token.substr(b, e - b + 1);
    token.clear();
    if (name.empty()) return;
    auto el = h.find_element(name);
    if (!el) throw ParseError("element '" + name + "' is not declared in '" + h.name() + "'");
    s.insert(*el);
  };
  for (char c : text) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return s;
}

}  // namespace hyperring
