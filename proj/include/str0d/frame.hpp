#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "str0d/error.hpp"

namespace str0d {

/// Elements are positions into a frame's tables; labels only matter for I/O.
using Elem = std::uint32_t;

/// Sorted, duplicate-free list of element positions.
using ElementSet = std::vector<Elem>;

inline ElementSet normalized(ElementSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

inline bool contains(const ElementSet& set, Elem x) {
  return std::binary_search(set.begin(), set.end(), x);
}

/// A finite partial order over labelled elements. The order table is closed
/// reflexively and transitively on construction, so Hasse-style input works.
class FinitePoset {
 public:
  FinitePoset() = default;

  static FinitePoset from_table(std::vector<std::string> labels, std::vector<std::uint8_t> leq) {
    const std::size_t n = labels.size();
    if (leq.size() != n * n) {
      throw Error(ErrorKind::InvalidInput, "order table has wrong dimensions");
    }
    FinitePoset poset;
    poset.labels_ = std::move(labels);
    poset.leq_ = std::move(leq);
    poset.close_and_check();
    return poset;
  }

  static FinitePoset from_pairs(std::vector<std::string> labels,
                                const std::vector<std::pair<std::string, std::string>>& pairs) {
    const std::size_t n = labels.size();
    std::unordered_map<std::string, Elem> index;
    for (std::size_t i = 0; i < n; ++i) {
      if (!index.emplace(labels[i], static_cast<Elem>(i)).second) {
        throw Error(ErrorKind::InvalidInput, "duplicate element label '" + labels[i] + "'");
      }
    }
    std::vector<std::uint8_t> leq(n * n, 0);
    for (const auto& [lo, hi] : pairs) {
      auto a = index.find(lo);
      auto b = index.find(hi);
      if (a == index.end() || b == index.end()) {
        throw Error(ErrorKind::InvalidInput, "order pair mentions unknown element (" + lo + ", " + hi + ")");
      }
      leq[a->second * n + b->second] = 1;
    }
    return from_table(std::move(labels), std::move(leq));
  }

  std::size_t size() const { return labels_.size(); }
  bool leq(Elem x, Elem y) const { return leq_[x * size() + y] != 0; }
  const std::string& label(Elem x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::uint8_t>& table() const { return leq_; }

 private:
  void close_and_check() {
    const std::size_t n = size();
    {
      std::vector<std::string> sorted = labels_;
      std::sort(sorted.begin(), sorted.end());
      auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      if (dup != sorted.end()) {
        throw Error(ErrorKind::InvalidInput, "duplicate element label '" + *dup + "'");
      }
    }
    for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
    // Warshall
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq_[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq_[k * n + j]) leq_[i * n + j] = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (leq_[i * n + j] && leq_[j * n + i]) {
          throw Error(ErrorKind::NotPoset,
                      "antisymmetry fails for " + labels_[i] + " and " + labels_[j]);
        }
  }

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
};

/// A finite frame, i.e. a finite distributive lattice, with precomputed
/// meet, join and Heyting implication tables.
class Frame {
 public:
  /// Validates that `leq` (already a partial order) is a distributive
  /// lattice. Cost is cubic in the size.
  static Frame from_order(std::string name, std::vector<std::string> labels,
                          std::vector<std::uint8_t> leq) {
    Frame f(std::move(name), std::move(labels), std::move(leq));
    f.compute_lattice_tables();
    f.check_distributive();
    f.finish();
    return f;
  }

  /// Builds a frame whose lattice operations are already known (quotients,
  /// congruence lattices, products). No distributivity check is run.
  template <class MeetFn, class JoinFn>
  static Frame from_operations(std::string name, std::vector<std::string> labels,
                               std::vector<std::uint8_t> leq, MeetFn&& meet, JoinFn&& join) {
    Frame f(std::move(name), std::move(labels), std::move(leq));
    const std::size_t n = f.size();
    f.meet_.resize(n * n);
    f.join_.resize(n * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = x; y < n; ++y) {
        Elem m = meet(x, y);
        Elem j = join(x, y);
        f.meet_[x * n + y] = f.meet_[y * n + x] = m;
        f.join_[x * n + y] = f.join_[y * n + x] = j;
      }
    f.find_bounds();
    f.finish();
    return f;
  }

  const std::string& name() const { return name_; }
  std::size_t size() const { return labels_.size(); }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  bool leq(Elem x, Elem y) const { return leq_[x * size() + y] != 0; }
  bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }
  Elem meet(Elem x, Elem y) const { return meet_[x * size() + y]; }
  Elem join(Elem x, Elem y) const { return join_[x * size() + y]; }
  /// Largest z with z ∧ x ≤ y.
  Elem implies(Elem x, Elem y) const { return implies_[x * size() + y]; }
  /// Pseudocomplement x → 0.
  Elem pseudocomplement(Elem x) const { return implies(x, bottom_); }

  template <class Range>
  Elem join_all(const Range& elems) const {
    Elem acc = bottom_;
    for (Elem e : elems) acc = join(acc, e);
    return acc;
  }
  template <class Range>
  Elem meet_all(const Range& elems) const {
    Elem acc = top_;
    for (Elem e : elems) acc = meet(acc, e);
    return acc;
  }

  const std::string& label(Elem x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::uint8_t>& order_table() const { return leq_; }

  std::optional<Elem> find(const std::string& label) const {
    for (Elem i = 0; i < size(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }
  Elem at(const std::string& label) const {
    auto e = find(label);
    if (!e) throw Error(ErrorKind::InvalidInput, "frame '" + name_ + "' has no element '" + label + "'");
    return *e;
  }

  /// Join-irreducible elements, ascending by position.
  const ElementSet& join_irreducibles() const { return join_irreducibles_; }

  /// Join of the elements strictly below x (for join-irreducible x this is
  /// its unique lower cover).
  Elem join_below(Elem x) const { return join_below_[x]; }

  ElementSet down_set(Elem x) const {
    ElementSet out;
    for (Elem y = 0; y < size(); ++y)
      if (leq(y, x)) out.push_back(y);
    return out;
  }
  ElementSet up_set(Elem x) const {
    ElementSet out;
    for (Elem y = 0; y < size(); ++y)
      if (leq(x, y)) out.push_back(y);
    return out;
  }

  FinitePoset poset() const { return FinitePoset::from_table(labels_, leq_); }

  Frame renamed(std::string name) const {
    Frame copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

 private:
  Frame(std::string name, std::vector<std::string> labels, std::vector<std::uint8_t> leq)
      : name_(std::move(name)), labels_(std::move(labels)), leq_(std::move(leq)) {
    if (labels_.empty()) throw Error(ErrorKind::NotLattice, "empty poset has no top or bottom");
  }

  void compute_lattice_tables() {
    const std::size_t n = size();
    meet_.assign(n * n, 0);
    join_.assign(n * n, 0);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = x; y < n; ++y) {
        auto glb = bound(x, y, /*lower=*/true);
        auto lub = bound(x, y, /*lower=*/false);
        if (!glb || !lub) {
          throw Error(ErrorKind::NotLattice, std::string(glb ? "no join" : "no meet") + " for " +
                                                 labels_[x] + " and " + labels_[y]);
        }
        meet_[x * n + y] = meet_[y * n + x] = *glb;
        join_[x * n + y] = join_[y * n + x] = *lub;
      }
    find_bounds();
  }

  std::optional<Elem> bound(Elem x, Elem y, bool lower) const {
    const std::size_t n = size();
    std::optional<Elem> best;
    for (Elem z = 0; z < n; ++z) {
      bool is_bound = lower ? (leq(z, x) && leq(z, y)) : (leq(x, z) && leq(y, z));
      if (!is_bound) continue;
      if (!best || (lower ? leq(*best, z) : leq(z, *best))) best = z;
    }
    if (!best) return std::nullopt;
    for (Elem z = 0; z < n; ++z) {
      bool is_bound = lower ? (leq(z, x) && leq(z, y)) : (leq(x, z) && leq(y, z));
      if (is_bound && !(lower ? leq(z, *best) : leq(*best, z))) return std::nullopt;
    }
    return best;
  }

  void find_bounds() {
    const std::size_t n = size();
    Elem lo = 0, hi = 0;
    for (Elem x = 1; x < n; ++x) {
      lo = meet(lo, x);
      hi = join(hi, x);
    }
    bottom_ = lo;
    top_ = hi;
  }

  void check_distributive() const {
    const std::size_t n = size();
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = y + 1; z < n; ++z)
          if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) {
            throw Error(ErrorKind::NotDistributive, labels_[x] + " ∧ (" + labels_[y] + " ∨ " +
                                                        labels_[z] + ") fails to distribute");
          }
  }

  void finish() {
    const std::size_t n = size();
    join_below_.assign(n, bottom_);
    join_irreducibles_.clear();
    for (Elem x = 0; x < n; ++x) {
      Elem acc = bottom_;
      for (Elem y = 0; y < n; ++y)
        if (lt(y, x)) acc = join(acc, y);
      join_below_[x] = acc;
      if (x != bottom_ && acc != x) join_irreducibles_.push_back(x);
    }
    implies_.assign(n * n, bottom_);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        Elem acc = bottom_;
        for (Elem j : join_irreducibles_)
          if (leq(meet(j, x), y)) acc = join(acc, j);
        implies_[x * n + y] = acc;
      }
  }

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> meet_, join_, implies_;
  std::vector<Elem> join_below_;
  ElementSet join_irreducibles_;
  Elem bottom_ = 0, top_ = 0;
};

using FramePtr = std::shared_ptr<const Frame>;

inline FramePtr make_frame(Frame f) { return std::make_shared<const Frame>(std::move(f)); }

/// Validates a poset as a finite frame.
inline FramePtr build_frame(const FinitePoset& poset, std::string name = "") {
  return make_frame(Frame::from_order(std::move(name), poset.labels(), poset.table()));
}

/// The complement of x, if x is complemented. Unique by distributivity.
inline std::optional<Elem> complement(const Frame& f, Elem x) {
  for (Elem c = 0; c < f.size(); ++c)
    if (f.meet(x, c) == f.bottom() && f.join(x, c) == f.top()) return c;
  return std::nullopt;
}

inline bool is_boolean(const Frame& f) {
  for (Elem x = 0; x < f.size(); ++x)
    if (!complement(f, x)) return false;
  return true;
}

inline const ElementSet& join_irreducibles(const Frame& f) { return f.join_irreducibles(); }

/// Elements with a complement; they form a Boolean sublattice.
inline ElementSet complemented_elements(const Frame& f) {
  ElementSet out;
  for (Elem x = 0; x < f.size(); ++x)
    if (complement(f, x)) out.push_back(x);
  return out;
}

/// Meet-prime elements p ≠ 1; these correspond to frame homs into 2.
inline ElementSet prime_elements(const Frame& f) {
  ElementSet out;
  for (Elem p = 0; p < f.size(); ++p) {
    if (p == f.top()) continue;
    bool prime = true;
    for (Elem x = 0; x < f.size() && prime; ++x)
      for (Elem y = 0; y < f.size() && prime; ++y)
        if (f.leq(f.meet(x, y), p) && !f.leq(x, p) && !f.leq(y, p)) prime = false;
    if (prime) out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Small named frames used throughout tests and examples.

inline FramePtr chain_frame(std::size_t n, std::string name = "") {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) labels.push_back("0");
    else if (i + 1 == n) labels.push_back("1");
    else labels.push_back(n == 3 ? "a" : "c" + std::to_string(i));
  }
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) leq[i * n + j] = 1;
  if (name.empty()) name = n == 1 ? "trivial" : n == 2 ? "2" : "chain" + std::to_string(n);
  return make_frame(Frame::from_order(std::move(name), std::move(labels), std::move(leq)));
}

/// Boolean algebra 2^k on subsets of k atoms; atoms are labelled a, b, c, ...
inline FramePtr boolean_frame(std::size_t k, std::string name = "") {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (s == 0) labels[s] = "0";
    else if (s == n - 1) labels[s] = "1";
    else {
      std::string l;
      for (std::size_t i = 0; i < k; ++i)
        if (s >> i & 1) l += static_cast<char>('a' + i);
      labels[s] = l;
    }
  }
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) leq[s * n + t] = (s & t) == s;
  if (name.empty()) name = k == 0 ? "trivial" : k == 1 ? "2" : "2^" + std::to_string(k);
  return make_frame(Frame::from_order(std::move(name), std::move(labels), std::move(leq)));
}

}  // namespace str0d
