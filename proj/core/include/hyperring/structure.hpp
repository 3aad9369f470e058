#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperring/subset.hpp"

namespace hyperring {

using Tuple = std::vector<Element>;

/// Finite commutative Krasner (m,n)-hyperring as raw tables.
///
/// The hyperaddition f and the multiplication g are stored densely over all
/// ordered tuples. Nothing here is validated; see validate_axioms() and
/// Hyperring::from() for the checked handle every algebraic operation takes.
class KrasnerHyperring {
 public:
  static constexpr Element kUnset = static_cast<Element>(-1);

  KrasnerHyperring(std::string name, int m, int n, std::vector<std::string> elements,
                   Element zero, Element one);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  int m() const { return m_; }
  int n() const { return n_; }
  std::size_t size() const { return names_.size(); }
  Element zero() const { return zero_; }
  Element one() const { return one_; }
  Subset carrier() const { return Subset::full(size()); }

  const std::vector<std::string>& element_names() const { return names_; }
  const std::string& element_name(Element e) const { return names_.at(e); }
  std::optional<Element> find_element(std::string_view name) const;

  /// Hyperaddition on an ordered m-tuple. Empty result means "unset".
  Subset f(std::span<const Element> args) const { return f_[index(args, m_)]; }
  Subset f(std::initializer_list<Element> args) const { return f({args.begin(), args.size()}); }
  /// Multiplication on an ordered n-tuple. kUnset means "unset".
  Element g(std::span<const Element> args) const { return g_[index(args, n_)]; }
  Element g(std::initializer_list<Element> args) const { return g({args.begin(), args.size()}); }

  /// Set one ordered cell.
  void set_f(std::span<const Element> args, Subset result) { f_[index(args, m_)] = result; }
  void set_g(std::span<const Element> args, Element result) { g_[index(args, n_)] = result; }
  /// Set a cell and every permutation of it.
  void set_f_symmetric(std::span<const Element> args, Subset result);
  void set_g_symmetric(std::span<const Element> args, Element result);

  bool operator==(const KrasnerHyperring& other) const;

 private:
  std::size_t index(std::span<const Element> args, int arity) const;

  std::string name_;
  int m_;
  int n_;
  std::vector<std::string> names_;
  Element zero_;
  Element one_;
  std::vector<Subset> f_;
  std::vector<Element> g_;
};

class Hyperring;

namespace detail {

struct HyperringState {
  explicit HyperringState(KrasnerHyperring t) : tables(std::move(t)) {}

  KrasnerHyperring tables;
  std::vector<Element> negation;

  // Lazily computed lattice data; filled by the ideals module.
  mutable std::once_flag ideals_once;
  mutable std::vector<Subset> ideals;
  mutable std::once_flag primes_once;
  mutable std::vector<Subset> primes;
};

const HyperringState& state_of(const Hyperring& h);

}  // namespace detail

/// A structure that has passed validate_axioms. Immutable and cheap to copy;
/// copies share the tables and lattice caches, so concurrent reads are safe.
class Hyperring {
 public:
  /// Validates and wraps. Throws AxiomError when any axiom fails.
  static Hyperring from(KrasnerHyperring tables);

  const KrasnerHyperring& operator*() const { return state_->tables; }
  const KrasnerHyperring* operator->() const { return &state_->tables; }
  const KrasnerHyperring& tables() const { return state_->tables; }

  std::size_t size() const { return state_->tables.size(); }
  /// Additive inverse, unique by the canonical hypergroup axioms.
  Element negate(Element x) const { return state_->negation[x]; }

  /// Same underlying structure object (not structural equality).
  bool same_as(const Hyperring& other) const { return state_ == other.state_; }

 private:
  explicit Hyperring(std::shared_ptr<const detail::HyperringState> s) : state_(std::move(s)) {}
  friend const detail::HyperringState& detail::state_of(const Hyperring& h);

  std::shared_ptr<const detail::HyperringState> state_;
};

/// Length l(arity-1)+1 check; returns l.
std::optional<std::size_t> iteration_depth(std::size_t length, int arity);

/// f applied to subsets: union of f over every choice of one element per argument.
Subset set_f(const KrasnerHyperring& h, std::span<const Subset> args);
/// g applied to subsets: { g(choice) }.
Subset set_g(const KrasnerHyperring& h, std::span<const Subset> args);

/// Iterated hyperaddition f_(l) as a left-nested fold over l(m-1)+1 elements.
Subset f_iter(const KrasnerHyperring& h, std::span<const Element> elems);
/// Iterated multiplication g_(l) as a left-nested fold over l(n-1)+1 elements.
Element g_iter(const KrasnerHyperring& h, std::span<const Element> elems);
/// { g_iter(choice) } for l(n-1)+1 nonempty subsets.
Subset set_g_product(const KrasnerHyperring& h, std::span<const Subset> subsets);

/// Visit every tuple of the given length over {0..base-1} in lexicographic order.
template <class Fn>
void for_each_tuple(std::size_t base, std::size_t length, Fn&& fn) {
  Tuple t(length, 0);
  if (base == 0 && length > 0) return;
  while (true) {
    fn(static_cast<const Tuple&>(t));
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (++t[i] < base) break;
      t[i] = 0;
      if (i == 0) return;
    }
    if (length == 0) return;
  }
}

/// Visit every nondecreasing tuple (multiset) of the given length, lexicographically.
/// The visitor returns false to stop early.
template <class Fn>
bool for_each_multiset(std::size_t base, std::size_t length, Fn&& fn) {
  Tuple t(length, 0);
  if (base == 0 && length > 0) return true;
  while (true) {
    if (!fn(static_cast<const Tuple&>(t))) return false;
    std::size_t i = length;
    while (i > 0 && t[i - 1] + 1 == base) --i;
    if (i == 0) return true;
    Element v = t[i - 1] + 1;
    for (std::size_t j = i - 1; j < length; ++j) t[j] = v;
  }
}

}  // namespace hyperring
