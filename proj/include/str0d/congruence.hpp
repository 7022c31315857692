#pragma once

#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "str0d/frame.hpp"
#include "str0d/limits.hpp"
#include "str0d/morphism.hpp"

namespace str0d {

/// A frame congruence stored as its nucleus j: x is related to y iff
/// j(x) = j(y). Congruences are ordered by inclusion of relations, which is
/// the pointwise order of nuclei.
struct Congruence {
  FramePtr frame;
  std::vector<Elem> nucleus;

  Elem operator()(Elem x) const { return nucleus[x]; }
  bool related(Elem x, Elem y) const { return nucleus[x] == nucleus[y]; }
  bool operator==(const Congruence& other) const { return nucleus == other.nucleus; }
};

/// Square boolean matrix over a frame's elements.
using Relation = std::vector<std::uint8_t>;

inline std::string nucleus_violation(const Frame& f, const std::vector<Elem>& j) {
  if (j.size() != f.size()) return "table size mismatch";
  for (Elem x = 0; x < f.size(); ++x) {
    if (!f.leq(x, j[x])) return "not inflationary at " + f.label(x);
    if (j[j[x]] != j[x]) return "not idempotent at " + f.label(x);
  }
  for (Elem x = 0; x < f.size(); ++x)
    for (Elem y = x + 1; y < f.size(); ++y)
      if (j[f.meet(x, y)] != f.meet(j[x], j[y]))
        return "meet not preserved at (" + f.label(x) + ", " + f.label(y) + ")";
  return {};
}

inline Congruence make_congruence(FramePtr frame, std::vector<Elem> nucleus) {
  std::string why = nucleus_violation(*frame, nucleus);
  if (!why.empty()) throw Error(ErrorKind::NotCongruence, why);
  return Congruence{std::move(frame), std::move(nucleus)};
}

inline Congruence identity_congruence(const FramePtr& f) {
  std::vector<Elem> j(f->size());
  std::iota(j.begin(), j.end(), Elem{0});
  return Congruence{f, std::move(j)};
}

inline Congruence all_congruence(const FramePtr& f) {
  return Congruence{f, std::vector<Elem>(f->size(), f->top())};
}

/// ∇_a: x ~ y iff x ∨ a = y ∨ a.
inline Congruence nabla(const FramePtr& f, Elem a) {
  std::vector<Elem> j(f->size());
  for (Elem x = 0; x < f->size(); ++x) j[x] = f->join(x, a);
  return Congruence{f, std::move(j)};
}

/// Δ_a, the congruence generated by (a, 1); its nucleus is x ↦ (a → x).
inline Congruence delta(const FramePtr& f, Elem a) {
  std::vector<Elem> j(f->size());
  for (Elem x = 0; x < f->size(); ++x) j[x] = f->implies(a, x);
  return Congruence{f, std::move(j)};
}

inline bool leq(const Congruence& c, const Congruence& d) {
  const Frame& f = *c.frame;
  for (Elem x = 0; x < f.size(); ++x)
    if (!f.leq(c(x), d(x))) return false;
  return true;
}

inline Congruence cong_meet(const Congruence& c, const Congruence& d) {
  const Frame& f = *c.frame;
  std::vector<Elem> j(f.size());
  for (Elem x = 0; x < f.size(); ++x) j[x] = f.meet(c(x), d(x));
  return Congruence{c.frame, std::move(j)};
}

/// Join of two congruences: iterate x ↦ j₁(j₂(x)) to its fixpoint.
inline Congruence cong_join(const Congruence& c, const Congruence& d) {
  const Frame& f = *c.frame;
  std::vector<Elem> j(f.size());
  for (Elem x = 0; x < f.size(); ++x) {
    Elem cur = x;
    for (;;) {
      Elem next = c(d(cur));
      if (next == cur) break;
      cur = next;
    }
    j[x] = cur;
  }
  return Congruence{c.frame, std::move(j)};
}

template <class Range>
Congruence cong_join_all(const FramePtr& f, const Range& cs) {
  Congruence acc = identity_congruence(f);
  for (const Congruence& c : cs) acc = cong_join(acc, c);
  return acc;
}

template <class Range>
Congruence cong_meet_all(const FramePtr& f, const Range& cs) {
  Congruence acc = all_congruence(f);
  for (const Congruence& c : cs) acc = cong_meet(acc, c);
  return acc;
}

inline Relation relation_of(const Congruence& c) {
  const std::size_t n = c.frame->size();
  Relation r(n * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) r[x * n + y] = c.related(x, y);
  return r;
}

/// Equivalence classes, each sorted, listed by least member.
inline std::vector<ElementSet> classes(const Congruence& c) {
  std::vector<ElementSet> out;
  std::vector<int> by_top(c.frame->size(), -1);
  for (Elem x = 0; x < c.frame->size(); ++x) {
    Elem t = c(x);
    if (by_top[t] < 0) {
      by_top[t] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[by_top[t]].push_back(x);
  }
  return out;
}

/// "{0,a}{1}" style label listing the classes.
inline std::string congruence_label(const Congruence& c) {
  std::string out;
  for (const auto& cls : classes(c)) {
    out += "{";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) out += ",";
      out += c.frame->label(cls[i]);
    }
    out += "}";
  }
  return out;
}

/// Reads a congruence off a relation known to be a frame congruence: the
/// nucleus sends each element to the top of its class.
inline Congruence congruence_from_relation(const FramePtr& f, const Relation& r) {
  const std::size_t n = f->size();
  std::vector<Elem> j(n);
  for (Elem x = 0; x < n; ++x) {
    Elem acc = f->bottom();
    for (Elem y = 0; y < n; ++y)
      if (r[x * n + y]) acc = f->join(acc, y);
    j[x] = acc;
  }
  Congruence c = make_congruence(f, std::move(j));
  if (relation_of(c) != r) throw Error(ErrorKind::NotCongruence, "relation is not a frame congruence");
  return c;
}

/// Least congruence containing every pair. Classes are merged with a
/// union-find structure and closed under x ↦ x ∧ z and x ↦ x ∨ z for every
/// z until nothing changes; symmetry and transitivity come for free.
inline Congruence congruence_from_pairs(const FramePtr& fp, const std::vector<std::pair<Elem, Elem>>& pairs) {
  const Frame& f = *fp;
  const std::size_t n = f.size();
  std::vector<Elem> parent(n);
  std::iota(parent.begin(), parent.end(), Elem{0});
  auto find = [&](Elem x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  bool changed = false;
  auto unite = [&](Elem x, Elem y) {
    x = find(x);
    y = find(y);
    if (x != y) {
      parent[std::max(x, y)] = std::min(x, y);
      changed = true;
    }
  };
  for (auto [x, y] : pairs) unite(x, y);
  do {
    changed = false;
    for (Elem x = 0; x < n; ++x) {
      Elem r = find(x);
      if (r == x) continue;
      for (Elem z = 0; z < n; ++z) {
        unite(f.meet(x, z), f.meet(r, z));
        unite(f.join(x, z), f.join(r, z));
      }
    }
  } while (changed);
  std::vector<Elem> top_of(n, f.bottom());
  for (Elem x = 0; x < n; ++x) {
    Elem r = find(x);
    top_of[r] = f.join(top_of[r], x);
  }
  std::vector<Elem> j(n);
  for (Elem x = 0; x < n; ++x) j[x] = top_of[find(x)];
  return make_congruence(fp, std::move(j));
}

/// Kernel {(x, y) : f(x) = f(y)} of a frame homomorphism.
inline Congruence kernel(const FrameHom& h) {
  const Frame& s = *h.source;
  std::vector<Elem> top_of(h.target->size(), s.bottom());
  for (Elem x = 0; x < s.size(); ++x) top_of[h(x)] = s.join(top_of[h(x)], x);
  std::vector<Elem> j(s.size());
  for (Elem x = 0; x < s.size(); ++x) j[x] = top_of[h(x)];
  return Congruence{h.source, std::move(j)};
}

/// A quotient frame L/C (the fixpoints of the nucleus) with its quotient map.
struct Quotient {
  FramePtr frame;
  FrameHom map;
  ElementSet fixpoints;  // element i of `frame` is fixpoints[i] of the base

  /// Position in the quotient of the class of base element x.
  Elem operator()(Elem x) const { return map(x); }
  /// The base element representing quotient element q (top of its class).
  Elem representative(Elem q) const { return fixpoints[q]; }
};

inline Quotient quotient(const Congruence& c, std::string name = "") {
  const Frame& f = *c.frame;
  ElementSet fix;
  for (Elem x = 0; x < f.size(); ++x)
    if (c(x) == x) fix.push_back(x);
  const std::size_t m = fix.size();
  std::vector<Elem> local(f.size(), 0);
  for (std::size_t i = 0; i < m; ++i) local[fix[i]] = static_cast<Elem>(i);
  std::vector<std::string> labels;
  for (Elem x : fix) labels.push_back(f.label(x));
  std::vector<std::uint8_t> leq(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) leq[i * m + k] = f.leq(fix[i], fix[k]);
  if (name.empty()) name = f.name() + "/" + congruence_label(c);
  FramePtr qf = make_frame(Frame::from_operations(
      std::move(name), std::move(labels), std::move(leq),
      [&](Elem x, Elem y) { return local[f.meet(fix[x], fix[y])]; },
      [&](Elem x, Elem y) { return local[c(f.join(fix[x], fix[y]))]; }));
  std::vector<Elem> table(f.size());
  for (Elem x = 0; x < f.size(); ++x) table[x] = local[c(x)];
  return Quotient{qf, FrameHom{c.frame, qf, std::move(table)}, std::move(fix)};
}

/// C f(C): the congruence on the target generated by (f × f)[C]. Pairs
/// (x, j(x)) already generate C, so their images suffice.
inline Congruence cong_image(const FrameHom& f, const Congruence& c) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x = 0; x < f.source->size(); ++x)
    if (c(x) != x) pairs.emplace_back(f(x), f(c(x)));
  return congruence_from_pairs(f.target, pairs);
}

/// C f_*(D): the preimage (f × f)⁻¹[D].
inline Congruence cong_preimage(const FrameHom& f, const Congruence& d) {
  const Frame& s = *f.source;
  const std::size_t n = s.size();
  Relation r(n * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) r[x * n + y] = d.related(f(x), f(y));
  return congruence_from_relation(f.source, r);
}

/// cℓ(C) = ∇_{j(0)}, the largest closed congruence below C.
inline Congruence closure_cl(const Congruence& c) { return nabla(c.frame, c(c.frame->bottom())); }

/// ∂_a = largest congruence whose closure is ∇_a; nucleus x ↦ (x → a) → a.
inline Congruence clear_congruence(const FramePtr& f, Elem a) {
  std::vector<Elem> j(f->size());
  for (Elem x = 0; x < f->size(); ++x) j[x] = f->implies(f->implies(x, a), a);
  return make_congruence(f, std::move(j));
}

/// 𝔇_L, the largest dense congruence.
inline Congruence dense_top(const FramePtr& f) { return clear_congruence(f, f->bottom()); }

inline bool is_dense_congruence(const Congruence& c) { return c(c.frame->bottom()) == c.frame->bottom(); }

// ---------------------------------------------------------------------------
// Oracle: congruences as equivalence relations that are sublattices of L × L.

namespace detail {

inline bool partition_is_congruence(const Frame& f, const std::vector<int>& block) {
  const std::size_t n = f.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (block[x] != block[y]) continue;
      for (Elem u = 0; u < n; ++u)
        for (Elem v = 0; v < n; ++v) {
          if (block[u] != block[v]) continue;
          if (block[f.meet(x, u)] != block[f.meet(y, v)]) return false;
          if (block[f.join(x, u)] != block[f.join(y, v)]) return false;
        }
    }
  return true;
}

}  // namespace detail

/// Every equivalence relation on L closed under coordinatewise meets and
/// joins, found by direct search over set partitions.
inline std::vector<Relation> brute_force_congruences(const FramePtr& fp,
                                                     std::size_t bound = Limits{}.oracle_max) {
  const Frame& f = *fp;
  const std::size_t n = f.size();
  require_within(n, bound, "oracle frame size");
  std::vector<Relation> out;
  std::vector<int> block(n, 0);
  // Restricted growth strings enumerate each partition once.
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int used) {
    if (i == n) {
      if (!detail::partition_is_congruence(f, block)) return;
      Relation r(n * n, 0);
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) r[x * n + y] = block[x] == block[y];
      out.push_back(std::move(r));
      return;
    }
    for (int b = 0; b <= used; ++b) {
      block[i] = b;
      go(i + 1, std::max(used, b + 1));
    }
  };
  if (n > 0) {
    block[0] = 0;
    go(1, 1);
  }
  return out;
}

}  // namespace str0d
