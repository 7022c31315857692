#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "str0d/biframe.hpp"
#include "str0d/clear.hpp"

namespace str0d {

/// Point sets are bitmasks over the point list.
using PointSet = std::uint32_t;

/// A finite topological space given by its open sets.
struct FiniteSpace {
  std::vector<std::string> points;
  std::vector<PointSet> opens;  // sorted, without duplicates
};

inline std::string point_set_label(const std::vector<std::string>& points, PointSet s) {
  if (s == 0) return "∅";
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (s >> i & 1) {
      out += (first ? "" : ",") + points[i];
      first = false;
    }
  return out + "}";
}

/// Closes a family under binary intersections and then binary unions.
inline std::vector<PointSet> generated_topology(const std::vector<PointSet>& subbasis, PointSet full) {
  std::vector<PointSet> basis{full};
  basis.insert(basis.end(), subbasis.begin(), subbasis.end());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      PointSet s = basis[i] & basis[j];
      if (std::find(basis.begin(), basis.end(), s) == basis.end()) basis.push_back(s);
    }
  std::vector<PointSet> opens{0};
  for (PointSet b : basis)
    if (std::find(opens.begin(), opens.end(), b) == opens.end()) opens.push_back(b);
  for (std::size_t i = 0; i < opens.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      PointSet s = opens[i] | opens[j];
      if (std::find(opens.begin(), opens.end(), s) == opens.end()) opens.push_back(s);
    }
  std::sort(opens.begin(), opens.end());
  return opens;
}

inline FiniteSpace make_space(std::vector<std::string> points, std::vector<PointSet> opens) {
  require_within(points.size(), 31, "space point count");
  {
    std::vector<std::string> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorKind::InvalidInput, "duplicate point label");
    }
  }
  const PointSet full = points.empty() ? 0 : static_cast<PointSet>((std::uint64_t{1} << points.size()) - 1);
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  auto has = [&](PointSet s) { return std::binary_search(opens.begin(), opens.end(), s); };
  for (PointSet u : opens)
    if (u & ~full) throw Error(ErrorKind::InvalidInput, "open set mentions an unknown point");
  if (!has(0) || !has(full)) throw Error(ErrorKind::InvalidInput, "opens must contain ∅ and the whole space");
  for (PointSet u : opens)
    for (PointSet v : opens)
      if (!has(u | v) || !has(u & v)) throw Error(ErrorKind::InvalidInput, "opens are not closed under ∪ and ∩");
  return FiniteSpace{std::move(points), std::move(opens)};
}

inline PointSet all_points(const FiniteSpace& x) {
  return x.points.empty() ? 0 : static_cast<PointSet>((std::uint64_t{1} << x.points.size()) - 1);
}

/// Distinct points are separated by some open set.
inline bool is_t0(const FiniteSpace& x) {
  for (std::size_t p = 0; p < x.points.size(); ++p)
    for (std::size_t q = p + 1; q < x.points.size(); ++q) {
      bool separated = false;
      for (PointSet u : x.opens)
        if ((u >> p & 1) != (u >> q & 1)) separated = true;
      if (!separated) return false;
    }
  return true;
}

namespace detail {

inline FramePtr frame_of_sets(const std::vector<std::string>& points, const std::vector<PointSet>& sets,
                              std::string name) {
  const std::size_t n = sets.size();
  std::vector<std::string> labels;
  for (PointSet s : sets) labels.push_back(point_set_label(points, s));
  std::vector<std::uint8_t> leq(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i * n + j] = (sets[i] & ~sets[j]) == 0;
  auto index = [&](PointSet s) {
    return static_cast<Elem>(std::lower_bound(sets.begin(), sets.end(), s) - sets.begin());
  };
  return make_frame(Frame::from_operations(
      std::move(name), std::move(labels), std::move(leq),
      [&](Elem a, Elem b) { return index(sets[a] & sets[b]); },
      [&](Elem a, Elem b) { return index(sets[a] | sets[b]); }));
}

inline ElementSet positions_in(const std::vector<PointSet>& sets, const std::vector<PointSet>& subset) {
  ElementSet out;
  for (PointSet s : subset)
    out.push_back(static_cast<Elem>(std::lower_bound(sets.begin(), sets.end(), s) - sets.begin()));
  return normalized(std::move(out));
}

}  // namespace detail

/// The frame of open sets ordered by inclusion.
inline FramePtr open_set_frame(const FiniteSpace& x) { return detail::frame_of_sets(x.points, x.opens, "τ"); }

/// Sk X = (σ, τ, υ): υ is generated by the closed sets and σ = τ ∨ υ.
inline Biframe skula(const FiniteSpace& x) {
  if (!is_t0(x)) throw Error(ErrorKind::NotT0, "space is not T0");
  const PointSet full = all_points(x);
  std::vector<PointSet> closed;
  for (PointSet u : x.opens) closed.push_back(full & ~u);
  std::vector<PointSet> upsilon = generated_topology(closed, full);
  std::vector<PointSet> both = x.opens;
  both.insert(both.end(), upsilon.begin(), upsilon.end());
  std::vector<PointSet> sigma = generated_topology(both, full);
  FramePtr total = detail::frame_of_sets(x.points, sigma, "σ");
  return validate_biframe(total, detail::positions_in(sigma, x.opens), detail::positions_in(sigma, upsilon));
}

/// Prime elements p ≠ 1; these correspond to the frame homs F → 2.
inline ElementSet points_of_frame(const Frame& f) { return prime_elements(f); }

/// Points are the primes of the total part; the opens are the sets
/// {p : a ≰ p} for a in the first part.
inline FiniteSpace space_from_biframe(const Biframe& m) {
  require_str0d(m);
  const Frame& t = *m.total;
  ElementSet primes = points_of_frame(t);
  require_within(primes.size(), 31, "space point count");
  std::vector<std::string> points;
  for (Elem p : primes) points.push_back(t.label(p));
  std::vector<PointSet> opens;
  for (Elem a : m.part1) {
    PointSet u = 0;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (!t.leq(a, primes[i])) u |= PointSet{1} << i;
    opens.push_back(u);
  }
  FiniteSpace out = make_space(std::move(points), std::move(opens));
  if (!is_t0(out)) throw Error(ErrorKind::TheoremViolation, "space of a strictly zero-dimensional biframe is not T0");
  return out;
}

/// A bijection of points (indexed by x's points) carrying the opens of x
/// onto the opens of y.
inline std::optional<std::vector<std::size_t>> find_homeomorphism(const FiniteSpace& x, const FiniteSpace& y) {
  if (x.points.size() != y.points.size() || x.opens.size() != y.opens.size()) return std::nullopt;
  std::vector<std::size_t> perm(x.points.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (PointSet u : x.opens) {
      PointSet image = 0;
      for (std::size_t i = 0; i < perm.size(); ++i)
        if (u >> i & 1) image |= PointSet{1} << perm[i];
      if (!std::binary_search(y.opens.begin(), y.opens.end(), image)) {
        ok = false;
        break;
      }
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

inline PointSet closure_of_point(const FiniteSpace& x, std::size_t p) {
  PointSet c = all_points(x);
  for (PointSet u : x.opens)
    if (!(u >> p & 1)) c &= ~u;
  return c;
}

/// Every irreducible closed set is the closure of exactly one point. Cross
/// checked against clarifiability of every prime of the first part of Sk X.
inline bool is_sober(const FiniteSpace& x) {
  if (!is_t0(x)) throw Error(ErrorKind::NotT0, "space is not T0");
  const PointSet full = all_points(x);
  std::vector<PointSet> closed;
  for (PointSet u : x.opens) closed.push_back(full & ~u);
  bool sober = true;
  for (PointSet f : closed) {
    if (f == 0) continue;
    bool irreducible = true;
    for (PointSet a : closed)
      for (PointSet b : closed)
        if (a != f && b != f && (a | b) == f) irreducible = false;
    if (!irreducible) continue;
    std::size_t generic = 0;
    for (std::size_t p = 0; p < x.points.size(); ++p) generic += closure_of_point(x, p) == f;
    if (generic != 1) sober = false;
  }
  Biframe sk = skula(x);
  Coreflection cor = coreflection_chi(sk);
  bool primes_clarifiable = true;
  for (Elem p : points_of_frame(*cor.first.frame))
    if (!clear_element_for(sk, cor.first.members[p], cor)) primes_clarifiable = false;
  if (sober != primes_clarifiable) {
    throw Error(ErrorKind::RemarkViolation, "sobriety disagrees with clarifiability of primes");
  }
  return sober;
}

/// Every T0 space on 1..max_points points up to homeomorphism, ordered by
/// point count and then by number of opens.
inline std::vector<FiniteSpace> enumerate_spaces(std::size_t max_points) {
  require_within(max_points, 4, "space enumeration size");
  static const char* const names[] = {"x", "y", "z", "w"};
  std::vector<FiniteSpace> out;
  for (std::size_t n = 1; n <= max_points; ++n) {
    std::vector<std::string> points(names, names + n);
    const PointSet full = static_cast<PointSet>((1u << n) - 1);
    std::vector<PointSet> middle;
    for (PointSet s = 1; s < full; ++s) middle.push_back(s);
    std::vector<FiniteSpace> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << middle.size()); ++mask) {
      std::vector<PointSet> opens{0, full};
      for (std::size_t i = 0; i < middle.size(); ++i)
        if (mask >> i & 1) opens.push_back(middle[i]);
      std::sort(opens.begin(), opens.end());
      bool closed = true;
      for (std::size_t i = 0; i < opens.size() && closed; ++i)
        for (std::size_t j = 0; j < i && closed; ++j)
          if (!std::binary_search(opens.begin(), opens.end(), opens[i] | opens[j]) ||
              !std::binary_search(opens.begin(), opens.end(), opens[i] & opens[j]))
            closed = false;
      if (!closed) continue;
      FiniteSpace s{points, opens};
      if (!is_t0(s)) continue;
      bool fresh = true;
      for (const FiniteSpace& t : found)
        if (find_homeomorphism(s, t)) fresh = false;
      if (fresh) found.push_back(std::move(s));
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const FiniteSpace& a, const FiniteSpace& b) { return a.opens.size() < b.opens.size(); });
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

inline FiniteSpace sierpinski_space() { return make_space({"x", "y"}, {0b00, 0b01, 0b11}); }

}  // namespace str0d
