#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "str0d/frame.hpp"
#include "str0d/limits.hpp"

namespace str0d {

/// Optional per-element colour that an isomorphism must respect (used for
/// biframe parts). Empty means "no constraint".
using Colouring = std::vector<int>;

namespace detail {

struct Signature {
  std::size_t below = 0, above = 0;
  int colour = 0;
  bool operator==(const Signature&) const = default;
  auto operator<=>(const Signature&) const = default;
};

inline std::vector<Signature> signatures(const Frame& f, const Colouring& colours) {
  std::vector<Signature> out(f.size());
  for (Elem x = 0; x < f.size(); ++x) {
    for (Elem y = 0; y < f.size(); ++y) {
      if (f.leq(y, x)) ++out[x].below;
      if (f.leq(x, y)) ++out[x].above;
    }
    out[x].colour = colours.empty() ? 0 : colours[x];
  }
  return out;
}

}  // namespace detail

/// An order isomorphism f → g (as a table indexed by f's elements), found by
/// degree-pruned backtracking. Lattice operations are preserved
/// automatically by order isomorphisms.
inline std::optional<std::vector<Elem>> find_isomorphism(const Frame& f, const Frame& g,
                                                         const Colouring& colours_f = {},
                                                         const Colouring& colours_g = {}) {
  if (f.size() != g.size()) return std::nullopt;
  const std::size_t n = f.size();
  auto sf = detail::signatures(f, colours_f);
  auto sg = detail::signatures(g, colours_g);
  {
    auto a = sf, b = sg;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<Elem> order(n);
  for (Elem x = 0; x < n; ++x) order[x] = x;
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return sf[a].below < sf[b].below; });
  std::vector<Elem> map(n, 0);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> go = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    Elem x = order[depth];
    for (Elem y = 0; y < n; ++y) {
      if (used[y] || !(sf[x] == sg[y])) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        Elem u = order[k];
        if (f.leq(u, x) != g.leq(map[u], y) || f.leq(x, u) != g.leq(y, map[u])) ok = false;
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = 1;
      if (go(depth + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return map;
}

inline bool isomorphic(const Frame& f, const Frame& g) { return find_isomorphism(f, g).has_value(); }

/// Canonical code of a finite lattice: the lexicographically least
/// upper-triangular order table (read column by column) over all linear
/// extensions. Two frames are isomorphic iff their codes agree.
inline std::vector<std::uint8_t> canonical_code(const Frame& f) {
  const std::size_t n = f.size();
  std::vector<std::uint8_t> best, current;
  std::vector<Elem> perm;
  std::vector<char> placed(n, 0);
  bool have_best = false;
  // -1, 0, 1 as the current prefix compares with the same-length prefix of
  // the best complete code found so far.
  auto compare_prefix = [&]() {
    for (std::size_t i = 0; i < current.size(); ++i)
      if (current[i] != best[i]) return current[i] < best[i] ? -1 : 1;
    return 0;
  };
  std::function<void()> go = [&]() {
    const std::size_t k = perm.size();
    if (k == n) {
      if (!have_best || compare_prefix() < 0) {
        best = current;
        have_best = true;
      }
      return;
    }
    for (Elem x = 0; x < n; ++x) {
      if (placed[x]) continue;
      bool ready = true;
      for (Elem y = 0; y < n && ready; ++y)
        if (!placed[y] && y != x && f.leq(y, x)) ready = false;
      if (!ready) continue;
      const std::size_t mark = current.size();
      for (std::size_t i = 0; i < k; ++i) current.push_back(f.leq(perm[i], x));
      if (!have_best || compare_prefix() <= 0) {
        perm.push_back(x);
        placed[x] = 1;
        go();
        placed[x] = 0;
        perm.pop_back();
      }
      current.resize(mark);
    }
  };
  go();
  std::vector<std::uint8_t> code;
  code.push_back(static_cast<std::uint8_t>(n));
  for (std::uint8_t bit : best) code.push_back(bit);
  return code;
}

namespace detail {

/// Rebuilds a frame from a canonical code (labels e0, e1, ...; bottom is "0"
/// and top is "1").
inline FramePtr frame_from_code(const std::vector<std::uint8_t>& code, const std::string& name) {
  const std::size_t n = code[0];
  std::vector<std::uint8_t> leq(n * n, 0);
  std::size_t pos = 1;
  for (std::size_t k = 0; k < n; ++k) {
    leq[k * n + k] = 1;
    for (std::size_t i = 0; i < k; ++i) leq[i * n + k] = code[pos++];
  }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i);
  labels[0] = "0";
  if (n > 1) labels[n - 1] = "1";
  return make_frame(Frame::from_order(name, std::move(labels), std::move(leq)));
}

/// Down-sets of a poset whose element i has strict down-set mask below[i].
inline std::vector<std::uint32_t> downsets_of(const std::vector<std::uint32_t>& below) {
  const std::size_t k = below.size();
  std::vector<std::uint32_t> downsets;
  for (std::uint32_t s = 0; s < (1u << k); ++s) {
    bool closed = true;
    for (std::size_t i = 0; i < k && closed; ++i)
      if ((s >> i & 1) && (below[i] & ~s)) closed = false;
    if (closed) downsets.push_back(s);
  }
  return downsets;
}

}  // namespace detail

inline bool is_chain(const Frame& f) {
  for (Elem x = 0; x < f.size(); ++x)
    for (Elem y = 0; y < f.size(); ++y)
      if (!f.leq(x, y) && !f.leq(y, x)) return false;
  return true;
}

/// Every finite frame up to isomorphism with at most `max_size` elements,
/// ordered by size and then by canonical code. Frames are produced as
/// lattices of down-sets of finite posets and deduplicated by canonical
/// code.
inline std::vector<FramePtr> enumerate_frames(std::size_t max_size,
                                              std::size_t bound = Limits{}.enumerate_max) {
  require_within(max_size, bound, "enumeration size");
  std::map<std::vector<std::uint8_t>, bool> seen;
  std::vector<std::vector<std::uint8_t>> codes;
  if (max_size == 0) return {};
  // Poset elements are added one at a time; element k's strict down-set is a
  // down-set of the earlier elements. The down-set count never decreases
  // as elements are added, which bounds the search.
  std::vector<std::uint32_t> below;
  std::function<void()> go = [&]() {
    const std::vector<std::uint32_t> downsets = detail::downsets_of(below);
    if (downsets.size() > max_size) return;
    const std::size_t n = downsets.size();
    std::vector<std::uint8_t> leq(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) leq[i * n + j] = (downsets[i] & downsets[j]) == downsets[i];
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    Frame f = Frame::from_operations(
        "", labels, leq,
        [&](Elem x, Elem y) {
          auto m = downsets[x] & downsets[y];
          return static_cast<Elem>(std::find(downsets.begin(), downsets.end(), m) - downsets.begin());
        },
        [&](Elem x, Elem y) {
          auto m = downsets[x] | downsets[y];
          return static_cast<Elem>(std::find(downsets.begin(), downsets.end(), m) - downsets.begin());
        });
    auto code = canonical_code(f);
    if (seen.emplace(code, true).second) codes.push_back(code);
    if (n == max_size) return;
    for (std::uint32_t d : downsets) {
      below.push_back(d);
      go();
      below.pop_back();
    }
  };
  go();
  std::sort(codes.begin(), codes.end());
  std::vector<FramePtr> out;
  for (const auto& code : codes) {
    FramePtr f = detail::frame_from_code(code, "");
    out.push_back(f);
  }
  // Name each frame by its shape.
  std::vector<FramePtr> named;
  std::map<std::size_t, std::size_t> index_by_size;
  for (const auto& f : out) {
    std::size_t idx = index_by_size[f->size()]++;
    std::string name;
    const std::size_t n = f->size();
    if (n == 1) name = "trivial";
    else if (n == 2) name = "2";
    else if (is_chain(*f)) name = "chain" + std::to_string(n);
    else if (is_boolean(*f)) {
      std::size_t k = 0;
      while ((std::size_t{1} << k) < n) ++k;
      name = "2^" + std::to_string(k);
    } else name = "L" + std::to_string(n) + "." + std::to_string(idx);
    named.push_back(make_frame(f->renamed(name)));
  }
  return named;
}

/// Human-readable isomorphism class name ("trivial", "2", "chain3", "2^2",
/// or "L<n>.<i>" for the i-th frame of size n in enumeration order).
inline std::string shape_name(const Frame& f) {
  const std::size_t n = f.size();
  if (n == 1) return "trivial";
  if (n == 2) return "2";
  if (is_chain(f)) return "chain" + std::to_string(n);
  if (is_boolean(f)) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return "2^" + std::to_string(k);
  }
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<FramePtr>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<FramePtr> same;
    for (auto& g : enumerate_frames(n, n))
      if (g->size() == n) same.push_back(g);
    it = cache.emplace(n, std::move(same)).first;
  }
  auto code = canonical_code(f);
  for (const auto& g : it->second)
    if (canonical_code(*g) == code) return g->name();
  return "L" + std::to_string(n) + ".?";
}

}  // namespace str0d
