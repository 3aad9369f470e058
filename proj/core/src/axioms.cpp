#include "hyperring/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace hyperring {

AxiomError::AxiomError(AxiomReport report, const std::string& name)
    : Error("structure '" + name + "' fails " +
            (report.violations.empty() ? std::string("validation")
                                       : "axiom " + report.violations.front().axiom)),
      report_(std::move(report)) {}

namespace {

class Checker {
 public:
  explicit Checker(const KrasnerHyperring& h) : h_(h), n_(h.size()) {}

  AxiomReport run(bool with_g) {
    check_budget(with_g);
    if (!f_complete()) return std::move(report_);
    f_commutative();
    f_associative();
    f_neutral();
    bool inverses = f_inverse();
    if (inverses) {
      f_reversible();
    } else {
      report_.notes.push_back("reversibility not checked: inverses are not unique");
    }
    if (!with_g) return std::move(report_);

    if (!g_complete()) return std::move(report_);
    if (h_.size() > 1 && h_.zero() == h_.one()) {
      add("distinct-constants", {name(h_.zero())}, "zero == one", "zero != one unless N = 1");
    }
    report_.notes.push_back("g commutativity is enforced as the running assumption");
    g_commutative();
    g_associative();
    distributive();
    g_zero_absorbing();
    g_scalar_identity();
    return std::move(report_);
  }

 private:
  const std::string& name(Element e) const { return h_.element_name(e); }

  std::vector<std::string> names(const Tuple& t) const {
    std::vector<std::string> out;
    out.reserve(t.size());
    for (Element e : t) out.push_back(name(e));
    return out;
  }

  std::string set_str(Subset s) const {
    std::string out = "{";
    bool first = true;
    for (Element e : s) {
      if (!first) out += ",";
      out += name(e);
      first = false;
    }
    return out + "}";
  }

  void add(std::string axiom, std::vector<std::string> witness, std::string observed,
           std::string expected) {
    report_.violations.push_back(
        {std::move(axiom), std::move(witness), std::move(observed), std::move(expected)});
  }

  void check_budget(bool with_g) const {
    const double n = static_cast<double>(n_);
    auto over = [&](double exp) { return std::pow(n, exp) > kMaxAxiomEvaluations; };
    if (over(2.0 * h_.m() - 1) || (with_g && (over(2.0 * h_.n() - 1) || over(h_.n() - 1 + h_.m())))) {
      throw CapacityError("structure '" + h_.name() + "' with " + std::to_string(n_) +
                          " elements exceeds the axiom-check budget");
    }
  }

  bool f_complete() {
    bool ok = true;
    for_each_tuple(n_, static_cast<std::size_t>(h_.m()), [&](const Tuple& t) {
      if (ok && h_.f(t).empty()) {
        add("table-complete", names(t), "no f entry", "nonempty f result");
        ok = false;
      }
    });
    return ok;
  }

  bool g_complete() {
    bool ok = true;
    for_each_tuple(n_, static_cast<std::size_t>(h_.n()), [&](const Tuple& t) {
      if (ok && h_.g(t) >= n_) {
        add("table-complete", names(t), "no g entry", "a g result");
        ok = false;
      }
    });
    return ok;
  }

  void f_commutative() {
    bool done = false;
    for_each_tuple(n_, static_cast<std::size_t>(h_.m()), [&](const Tuple& t) {
      if (done) return;
      Tuple p = t;
      std::sort(p.begin(), p.end());
      if (h_.f(p) != h_.f(t)) {
        add("f-commutative", names(t), set_str(h_.f(t)), "equal to f" + tuple_str(p) + " = " + set_str(h_.f(p)));
        done = true;
      }
    });
  }

  std::string tuple_str(const Tuple& t) const {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + name(t[i]);
    return out + ")";
  }

  // f(x_0..x_{i-1}, f(x_i..x_{i+m-1}), x_{i+m}..x_{2m-2})
  Subset f_bracket(const Tuple& x, std::size_t i) const {
    const auto m = static_cast<std::size_t>(h_.m());
    Subset inner = h_.f(std::span<const Element>(x).subspan(i, m));
    std::vector<Subset> args;
    args.reserve(m);
    for (std::size_t j = 0; j < i; ++j) args.push_back(Subset::singleton(x[j]));
    args.push_back(inner);
    for (std::size_t j = i + m; j < x.size(); ++j) args.push_back(Subset::singleton(x[j]));
    return set_f(h_, args);
  }

  Element g_bracket(const Tuple& x, std::size_t i) const {
    const auto n = static_cast<std::size_t>(h_.n());
    Element inner = h_.g(std::span<const Element>(x).subspan(i, n));
    Tuple args;
    args.reserve(n);
    for (std::size_t j = 0; j < i; ++j) args.push_back(x[j]);
    args.push_back(inner);
    for (std::size_t j = i + n; j < x.size(); ++j) args.push_back(x[j]);
    return h_.g(args);
  }

  void f_associative() {
    const auto m = static_cast<std::size_t>(h_.m());
    bool done = false;
    for_each_tuple(n_, 2 * m - 1, [&](const Tuple& x) {
      if (done) return;
      Subset first = f_bracket(x, 0);
      for (std::size_t i = 1; i < m; ++i) {
        Subset other = f_bracket(x, i);
        if (other != first) {
          add("f-associative", names(x),
              "bracket at position " + std::to_string(i + 1) + " gives " + set_str(other),
              "bracket at position 1 value " + set_str(first));
          done = true;
          return;
        }
      }
    });
  }

  void f_neutral() {
    Tuple args(static_cast<std::size_t>(h_.m()), h_.zero());
    for (Element x = 0; x < n_; ++x) {
      args[0] = x;
      if (h_.f(args) != Subset::singleton(x)) {
        add("f-neutral", names(args), set_str(h_.f(args)), "{" + name(x) + "}");
        return;
      }
    }
  }

  bool f_inverse() {
    Tuple args(static_cast<std::size_t>(h_.m()), h_.zero());
    negation_.assign(n_, 0);
    for (Element x = 0; x < n_; ++x) {
      std::size_t count = 0;
      args[0] = x;
      for (Element y = 0; y < n_; ++y) {
        args[1] = y;
        if (h_.f(args).contains(h_.zero())) {
          ++count;
          negation_[x] = y;
        }
      }
      if (count != 1) {
        add("f-inverse", {name(x)}, std::to_string(count) + " elements y with 0 in f(x,y,0..)",
            "exactly one");
        return false;
      }
    }
    return true;
  }

  void f_reversible() {
    bool done = false;
    for_each_tuple(n_, static_cast<std::size_t>(h_.m()), [&](const Tuple& t) {
      if (done) return;
      for (Element x : h_.f(t)) {
        Tuple back = t;
        back[0] = x;
        for (std::size_t j = 1; j < t.size(); ++j) back[j] = negation_[t[j]];
        if (!h_.f(back).contains(t[0])) {
          add("f-reversible", names(t),
              name(x) + " in f" + tuple_str(t) + " but f" + tuple_str(back) + " = " +
                  set_str(h_.f(back)),
              name(t[0]) + " in f" + tuple_str(back));
          done = true;
          return;
        }
      }
    });
  }

  void g_commutative() {
    bool done = false;
    for_each_tuple(n_, static_cast<std::size_t>(h_.n()), [&](const Tuple& t) {
      if (done) return;
      Tuple p = t;
      std::sort(p.begin(), p.end());
      if (h_.g(p) != h_.g(t)) {
        add("g-commutative", names(t), name(h_.g(t)), "g" + tuple_str(p) + " = " + name(h_.g(p)));
        done = true;
      }
    });
  }

  void g_associative() {
    const auto n = static_cast<std::size_t>(h_.n());
    bool done = false;
    for_each_tuple(n_, 2 * n - 1, [&](const Tuple& x) {
      if (done) return;
      Element first = g_bracket(x, 0);
      for (std::size_t i = 1; i < n; ++i) {
        Element other = g_bracket(x, i);
        if (other != first) {
          add("g-associative", names(x),
              "bracket at position " + std::to_string(i + 1) + " gives " + name(other),
              "bracket at position 1 value " + name(first));
          done = true;
          return;
        }
      }
    });
  }

  // g(a_1..a_{i-1}, f(x_1..x_m), a_{i+1}..a_n) = f(g(.., x_1, ..), .., g(.., x_m, ..))
  void distributive() {
    const auto n = static_cast<std::size_t>(h_.n());
    const auto m = static_cast<std::size_t>(h_.m());
    bool done = false;
    for_each_tuple(n_, n - 1 + m, [&](const Tuple& t) {
      if (done) return;
      std::span<const Element> others(t.data(), n - 1);
      std::span<const Element> xs(t.data() + n - 1, m);
      for (std::size_t pos = 0; pos < n && !done; ++pos) {
        auto with = [&](Element v) {
          Tuple args;
          args.reserve(n);
          for (std::size_t j = 0; j < pos; ++j) args.push_back(others[j]);
          args.push_back(v);
          for (std::size_t j = pos; j < n - 1; ++j) args.push_back(others[j]);
          return args;
        };
        Subset lhs;
        for (Element u : h_.f(xs)) lhs.insert(h_.g(with(u)));
        Tuple products;
        products.reserve(m);
        for (Element x : xs) products.push_back(h_.g(with(x)));
        Subset rhs = h_.f(products);
        if (lhs != rhs) {
          Tuple shown(others.begin(), others.end());
          shown.insert(shown.end(), xs.begin(), xs.end());
          add("distributive", names(shown),
              "position " + std::to_string(pos + 1) + ": g(..,f(x),..) = " + set_str(lhs),
              "f(g(..,x_1,..),..) = " + set_str(rhs));
          done = true;
        }
      }
    });
  }

  void g_zero_absorbing() {
    const auto n = static_cast<std::size_t>(h_.n());
    bool done = false;
    for_each_tuple(n_, n, [&](const Tuple& t) {
      if (done) return;
      if (std::find(t.begin(), t.end(), h_.zero()) != t.end() && h_.g(t) != h_.zero()) {
        add("g-zero-absorbing", names(t), name(h_.g(t)), name(h_.zero()));
        done = true;
      }
    });
  }

  void g_scalar_identity() {
    Tuple args(static_cast<std::size_t>(h_.n()), h_.one());
    for (Element x = 0; x < n_; ++x) {
      args[0] = x;
      if (h_.g(args) != x) {
        add("g-scalar-identity", names(args), name(h_.g(args)), name(x));
        return;
      }
    }
  }

  const KrasnerHyperring& h_;
  std::size_t n_;
  std::vector<Element> negation_;
  AxiomReport report_;
};

}  // namespace

AxiomReport validate_axioms(const KrasnerHyperring& h) { return Checker(h).run(true); }

AxiomReport validate_hypergroup(const KrasnerHyperring& h) { return Checker(h).run(false); }

}  // namespace hyperring
