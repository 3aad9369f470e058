#include "hyperring/structure.hpp"

#include <algorithm>

#include "hyperring/axioms.hpp"
#include "hyperring/error.hpp"

namespace hyperring {
namespace {

constexpr std::size_t kMaxCells = std::size_t{1} << 24;

std::size_t checked_power(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > kMaxCells / base) {
      throw CapacityError("table with " + std::to_string(base) + "^" + std::to_string(exp) +
                          " cells exceeds the dense-table bound");
    }
    r *= base;
  }
  return r;
}

}  // namespace

KrasnerHyperring::KrasnerHyperring(std::string name, int m, int n,
                                   std::vector<std::string> elements, Element zero, Element one)
    : name_(std::move(name)), m_(m), n_(n), names_(std::move(elements)), zero_(zero), one_(one) {
  if (m < 2 || n < 2) throw DomainError("arities m and n must be at least 2");
  if (names_.empty()) throw DomainError("carrier must be nonempty");
  if (names_.size() > kMaxCarrier) {
    throw CapacityError("carrier of " + std::to_string(names_.size()) +
                        " elements exceeds the limit of " + std::to_string(kMaxCarrier));
  }
  if (zero >= names_.size() || one >= names_.size()) {
    throw DomainError("zero/one index out of range");
  }
  f_.assign(checked_power(names_.size(), m), Subset{});
  g_.assign(checked_power(names_.size(), n), kUnset);
}

std::optional<Element> KrasnerHyperring::find_element(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

std::size_t KrasnerHyperring::index(std::span<const Element> args, int arity) const {
  if (args.size() != static_cast<std::size_t>(arity)) {
    throw DomainError("expected " + std::to_string(arity) + " arguments, got " +
                      std::to_string(args.size()));
  }
  std::size_t idx = 0;
  for (Element a : args) idx = idx * names_.size() + a;
  return idx;
}

void KrasnerHyperring::set_f_symmetric(std::span<const Element> args, Subset result) {
  Tuple t(args.begin(), args.end());
  std::sort(t.begin(), t.end());
  do {
    set_f(t, result);
  } while (std::next_permutation(t.begin(), t.end()));
}

void KrasnerHyperring::set_g_symmetric(std::span<const Element> args, Element result) {
  Tuple t(args.begin(), args.end());
  std::sort(t.begin(), t.end());
  do {
    set_g(t, result);
  } while (std::next_permutation(t.begin(), t.end()));
}

bool KrasnerHyperring::operator==(const KrasnerHyperring& other) const {
  return m_ == other.m_ && n_ == other.n_ && names_ == other.names_ && zero_ == other.zero_ &&
         one_ == other.one_ && f_ == other.f_ && g_ == other.g_;
}

namespace detail {
const HyperringState& state_of(const Hyperring& h) { return *h.state_; }
}  // namespace detail

Hyperring Hyperring::from(KrasnerHyperring tables) {
  AxiomReport report = validate_axioms(tables);
  if (!report.pass()) throw AxiomError(std::move(report), tables.name());
  auto state = std::make_shared<detail::HyperringState>(std::move(tables));
  const KrasnerHyperring& h = state->tables;
  state->negation.resize(h.size());
  Tuple args(static_cast<std::size_t>(h.m()), h.zero());
  for (Element x = 0; x < h.size(); ++x) {
    args[0] = x;
    for (Element y = 0; y < h.size(); ++y) {
      args[1] = y;
      if (h.f(args).contains(h.zero())) {
        state->negation[x] = y;
        break;
      }
    }
  }
  return Hyperring(std::move(state));
}

std::optional<std::size_t> iteration_depth(std::size_t length, int arity) {
  const std::size_t step = static_cast<std::size_t>(arity) - 1;
  if (length == 0 || (length - 1) % step != 0) return std::nullopt;
  return (length - 1) / step;
}

namespace {

// Union over all choices; `eval` maps an ordered tuple to a subset.
template <class Eval>
Subset union_over_choices(std::span<const Subset> args, Eval&& eval) {
  Subset out;
  Tuple choice(args.size());
  std::vector<Subset::iterator> its(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].empty()) return out;
    its[i] = args[i].begin();
    choice[i] = *its[i];
  }
  while (true) {
    out |= eval(choice);
    std::size_t i = args.size();
    while (i > 0) {
      --i;
      ++its[i];
      if (its[i] != args[i].end()) {
        choice[i] = *its[i];
        break;
      }
      its[i] = args[i].begin();
      choice[i] = *its[i];
      if (i == 0) return out;
    }
  }
}

}  // namespace

Subset set_f(const KrasnerHyperring& h, std::span<const Subset> args) {
  return union_over_choices(args, [&](const Tuple& t) { return h.f(t); });
}

Subset set_g(const KrasnerHyperring& h, std::span<const Subset> args) {
  return union_over_choices(args, [&](const Tuple& t) { return Subset::singleton(h.g(t)); });
}

Subset f_iter(const KrasnerHyperring& h, std::span<const Element> elems) {
  if (!iteration_depth(elems.size(), h.m())) {
    throw DomainError("f_iter needs l(m-1)+1 arguments, got " + std::to_string(elems.size()));
  }
  const std::size_t step = static_cast<std::size_t>(h.m()) - 1;
  Subset acc = Subset::singleton(elems[0]);
  std::vector<Subset> args(static_cast<std::size_t>(h.m()));
  for (std::size_t pos = 1; pos < elems.size(); pos += step) {
    args[0] = acc;
    for (std::size_t j = 0; j < step; ++j) args[j + 1] = Subset::singleton(elems[pos + j]);
    acc = set_f(h, args);
  }
  return acc;
}

Element g_iter(const KrasnerHyperring& h, std::span<const Element> elems) {
  if (!iteration_depth(elems.size(), h.n())) {
    throw DomainError("g_iter needs l(n-1)+1 arguments, got " + std::to_string(elems.size()));
  }
  const std::size_t step = static_cast<std::size_t>(h.n()) - 1;
  Element acc = elems[0];
  Tuple args(static_cast<std::size_t>(h.n()));
  for (std::size_t pos = 1; pos < elems.size(); pos += step) {
    args[0] = acc;
    std::copy_n(elems.begin() + static_cast<std::ptrdiff_t>(pos), step, args.begin() + 1);
    acc = h.g(args);
  }
  return acc;
}

Subset set_g_product(const KrasnerHyperring& h, std::span<const Subset> subsets) {
  if (!iteration_depth(subsets.size(), h.n())) {
    throw DomainError("set_g_product needs l(n-1)+1 arguments, got " +
                      std::to_string(subsets.size()));
  }
  for (Subset s : subsets) {
    if (s.empty()) throw DomainError("set_g_product called with an empty subset");
  }
  // g_(l) is a left fold, so the set of all choice products folds setwise.
  const std::size_t step = static_cast<std::size_t>(h.n()) - 1;
  Subset acc = subsets[0];
  std::vector<Subset> args(static_cast<std::size_t>(h.n()));
  for (std::size_t pos = 1; pos < subsets.size(); pos += step) {
    args[0] = acc;
    std::copy_n(subsets.begin() + static_cast<std::ptrdiff_t>(pos), step, args.begin() + 1);
    acc = set_g(h, args);
  }
  return acc;
}

}  // namespace hyperring
