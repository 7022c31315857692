#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "str0d/congruence.hpp"
#include "str0d/enumerate.hpp"
#include "str0d/frame.hpp"

// Slow, independent implementations used to cross-check the main engine.

namespace str0d::oracle {

/// Frames of exactly n elements up to isomorphism, by trying every strict
/// order on 0..n-1 compatible with the natural order (every finite poset
/// has such a labelling) and keeping the distributive lattices.
inline std::vector<FramePtr> frames_of_size(std::size_t n) {
  require_within(n, 6, "oracle frame size");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<FramePtr> out;
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::uint8_t> leq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) leq[slots[s].first * n + slots[s].second] = 1;
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b)
        for (std::size_t c = 0; c < n && transitive; ++c)
          if (leq[a * n + b] && leq[b * n + c] && !leq[a * n + c]) transitive = false;
    if (!transitive) continue;
    FramePtr f;
    try {
      f = make_frame(Frame::from_order("", labels, leq));
    } catch (const Error&) {
      continue;
    }
    bool fresh = true;
    for (const FramePtr& g : out)
      if (isomorphic(*f, *g)) fresh = false;
    if (fresh) out.push_back(f);
  }
  return out;
}

/// Least congruence containing `pairs`, as the meet of every congruence
/// (found by partition search) that contains them.
inline Congruence generated_by_meet(const FramePtr& f, const std::vector<std::pair<Elem, Elem>>& pairs) {
  const std::size_t n = f->size();
  Relation acc(n * n, 1);
  for (const Relation& r : brute_force_congruences(f)) {
    bool contains_all = true;
    for (auto [x, y] : pairs)
      if (!r[x * n + y]) contains_all = false;
    if (!contains_all) continue;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i] && r[i];
  }
  return congruence_from_relation(f, acc);
}

/// ∂_a as the largest congruence whose closure is ∇_a, by direct search.
inline Congruence clear_by_search(const FramePtr& f, Elem a) {
  std::optional<Congruence> best;
  for (const Relation& r : brute_force_congruences(f)) {
    Congruence c = congruence_from_relation(f, r);
    if (c(f->bottom()) != a) continue;
    if (!best || leq(*best, c)) best = c;
  }
  return *best;
}

struct EndoMapResult {
  std::vector<ElementSet> with_maxima;     // fixed-point sets of maps meeting all conditions
  std::vector<ElementSet> without_maxima;  // ... with the fibre-maximum condition dropped
};

/// Searches every map c : M → M that is idempotent, deflationary and
/// preserves finite meets, has complemented fixed points generating M
/// together with their complements, and (optionally) has a maximum in
/// every fibre.
inline EndoMapResult endo_map_search(const FramePtr& m) {
  const Frame& f = *m;
  const std::size_t n = f.size();
  require_within(n, 6, "endo-map search size");
  EndoMapResult out;
  std::vector<Elem> c(n, 0);
  std::function<void(std::size_t)> go = [&](std::size_t x) {
    if (x == n) {
      if (c[f.top()] != f.top()) return;
      for (Elem a = 0; a < n; ++a) {
        if (c[c[a]] != c[a]) return;
        for (Elem b = 0; b < n; ++b)
          if (c[f.meet(a, b)] != f.meet(c[a], c[b])) return;
      }
      ElementSet fixed, gens;
      for (Elem a = 0; a < n; ++a)
        if (c[a] == a) fixed.push_back(a);
      for (Elem a : fixed) {
        auto k = complement(f, a);
        if (!k) return;
        gens.push_back(a);
        gens.push_back(*k);
      }
      if (subframe_generated(f, normalized(gens)).size() != n) return;
      out.without_maxima.push_back(fixed);
      for (Elem v : fixed) {
        Elem top = f.bottom();
        for (Elem a = 0; a < n; ++a)
          if (c[a] == v) top = f.join(top, a);
        if (c[top] != v) return;
      }
      out.with_maxima.push_back(fixed);
      return;
    }
    for (Elem v = 0; v < n; ++v) {
      if (!f.leq(v, x)) continue;
      c[x] = v;
      go(x + 1);
    }
  };
  go(0);
  std::sort(out.with_maxima.begin(), out.with_maxima.end());
  std::sort(out.without_maxima.begin(), out.without_maxima.end());
  return out;
}

}  // namespace str0d::oracle
