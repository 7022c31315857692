#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "str0d/congruence.hpp"
#include "str0d/frame.hpp"
#include "str0d/limits.hpp"
#include "str0d/morphism.hpp"

namespace str0d {

/// A finite diagram of frames: objects plus generating arrows.
struct FrameDiagram {
  struct Arrow {
    std::size_t from, to;
    FrameHom map;
  };
  std::vector<FramePtr> objects;
  std::vector<Arrow> arrows;
};

/// A cone (for limits) or cocone (for colimits) with apex `object`; legs
/// are indexed like the diagram's objects.
struct FrameCone {
  FramePtr object;
  std::vector<FrameHom> legs;
};

/// Cartesian product with coordinatewise order; the empty product is the
/// one-element frame.
inline FrameCone product_frame(const std::vector<FramePtr>& factors) {
  std::size_t n = 1;
  for (const auto& f : factors) n *= f->size();
  auto coords = [&](std::size_t x) {
    std::vector<Elem> c(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      c[i] = static_cast<Elem>(x % factors[i]->size());
      x /= factors[i]->size();
    }
    return c;
  };
  auto encode = [&](const std::vector<Elem>& c) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) x = x * factors[i]->size() + c[i];
    return static_cast<Elem>(x);
  };
  std::vector<std::string> labels(n);
  std::vector<std::uint8_t> leq(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    auto cx = coords(x);
    std::string l = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) l += (i ? "," : "") + factors[i]->label(cx[i]);
    labels[x] = l + ")";
    for (std::size_t y = 0; y < n; ++y) {
      auto cy = coords(y);
      bool le = true;
      for (std::size_t i = 0; i < factors.size() && le; ++i) le = factors[i]->leq(cx[i], cy[i]);
      leq[x * n + y] = le;
    }
  }
  auto pointwise = [&](bool is_meet) {
    return [&, is_meet](Elem x, Elem y) {
      auto cx = coords(x), cy = coords(y);
      for (std::size_t i = 0; i < factors.size(); ++i)
        cx[i] = is_meet ? factors[i]->meet(cx[i], cy[i]) : factors[i]->join(cx[i], cy[i]);
      return encode(cx);
    };
  };
  std::string name;
  for (std::size_t i = 0; i < factors.size(); ++i) name += (i ? "×" : "") + factors[i]->name();
  if (factors.empty()) name = "trivial";
  FramePtr p = make_frame(Frame::from_operations(name, std::move(labels), std::move(leq),
                                                 pointwise(true), pointwise(false)));
  std::vector<FrameHom> legs;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<Elem> table(n);
    for (std::size_t x = 0; x < n; ++x) table[x] = coords(x)[i];
    legs.push_back(FrameHom{p, factors[i], std::move(table)});
  }
  return FrameCone{p, std::move(legs)};
}

/// Limit of a frame diagram: the subframe of the product on which every
/// arrow commutes with the projections.
inline FrameCone frame_limit(const FrameDiagram& d) {
  FrameCone prod = product_frame(d.objects);
  ElementSet members;
  for (Elem x = 0; x < prod.object->size(); ++x) {
    bool ok = true;
    for (const auto& a : d.arrows)
      if (a.map(prod.legs[a.from](x)) != prod.legs[a.to](x)) ok = false;
    if (ok) members.push_back(x);
  }
  Subframe sub = make_subframe(prod.object, members, "lim(" + prod.object->name() + ")");
  std::vector<FrameHom> legs;
  for (const auto& leg : prod.legs) legs.push_back(compose(leg, sub.inclusion));
  return FrameCone{sub.frame, std::move(legs)};
}

/// Coproduct of finite frames. Each factor is the frame of down-sets of its
/// prime elements (a ↦ {p : a ≰ p}); the coproduct is the frame of
/// down-sets of the product of the prime posets, and the injection of a
/// factor is a ↦ U(a) × (all other primes).
inline FrameCone coproduct_frame(const std::vector<FramePtr>& factors) {
  std::vector<ElementSet> primes;
  std::size_t points = 1;
  for (const auto& f : factors) {
    primes.push_back(prime_elements(*f));
    points *= primes.back().size();
  }
  require_within(points, 64, "coproduct point count");
  auto coords = [&](std::size_t p) {
    std::vector<Elem> c(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      c[i] = primes[i][p % primes[i].size()];
      p /= primes[i].size();
    }
    return c;
  };
  const std::uint64_t full = points == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << points) - 1);
  // injection masks
  std::vector<std::vector<std::uint64_t>> inj(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    inj[i].resize(factors[i]->size());
    for (Elem a = 0; a < factors[i]->size(); ++a) {
      std::uint64_t m = 0;
      for (std::size_t p = 0; p < points; ++p)
        if (!factors[i]->leq(a, coords(p)[i])) m |= std::uint64_t{1} << p;
      inj[i][a] = m;
    }
  }
  // Close the generators under ∩ and ∪.
  std::vector<std::uint64_t> elems{0, full};
  std::map<std::uint64_t, Elem> index{{0, 0}, {full, 1}};
  if (full == 0) {
    elems = {0};
    index = {{0, 0}};
  }
  auto add = [&](std::uint64_t m) {
    if (index.emplace(m, static_cast<Elem>(elems.size())).second) elems.push_back(m);
  };
  for (const auto& masks : inj)
    for (std::uint64_t m : masks) add(m);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      add(elems[i] & elems[j]);
      add(elems[i] | elems[j]);
    }
  std::sort(elems.begin(), elems.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  index.clear();
  for (Elem i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  const std::size_t n = elems.size();

  // Label each element as the join of the maximal rectangles a⊗b⊗...
  // below it, each aᵢ a join-irreducible or the top of its factor.
  // Rectangles are distinct as sets, so labels are unique.
  std::vector<std::vector<Elem>> generators(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    generators[i] = factors[i]->join_irreducibles();
    generators[i].push_back(factors[i]->top());
    generators[i] = normalized(std::move(generators[i]));
  }
  std::vector<std::pair<std::vector<Elem>, std::uint64_t>> rects;
  std::vector<Elem> pick(factors.size());
  std::function<void(std::size_t, std::uint64_t)> gen = [&](std::size_t i, std::uint64_t m) {
    if (i == factors.size()) {
      if (m) rects.emplace_back(pick, m);
      return;
    }
    for (Elem g : generators[i]) {
      pick[i] = g;
      gen(i + 1, m & inj[i][g]);
    }
  };
  gen(0, full);
  std::vector<std::string> labels(n);
  for (std::size_t e = 0; e < n; ++e) {
    if (elems[e] == 0) {
      labels[e] = "0";
      continue;
    }
    if (elems[e] == full) {
      labels[e] = "1";
      continue;
    }
    std::vector<std::size_t> inside;
    for (std::size_t r = 0; r < rects.size(); ++r)
      if ((rects[r].second & ~elems[e]) == 0) inside.push_back(r);
    std::string l;
    for (std::size_t r : inside) {
      bool maximal = true;
      for (std::size_t s : inside)
        if ((rects[r].second & ~rects[s].second) == 0 && rects[r].second != rects[s].second)
          maximal = false;
      if (!maximal) continue;
      std::string term;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        term += (i ? "⊗" : "") + factors[i]->label(rects[r].first[i]);
      }
      l += (l.empty() ? "" : "∨") + term;
    }
    labels[e] = l;
  }
  std::vector<std::uint8_t> leq(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) leq[x * n + y] = (elems[x] & ~elems[y]) == 0;
  std::string name;
  for (std::size_t i = 0; i < factors.size(); ++i) name += (i ? "⊕" : "") + factors[i]->name();
  if (factors.empty()) name = "2";
  FramePtr c = make_frame(Frame::from_operations(
      name, std::move(labels), std::move(leq),
      [&](Elem x, Elem y) { return index.at(elems[x] & elems[y]); },
      [&](Elem x, Elem y) { return index.at(elems[x] | elems[y]); }));
  std::vector<FrameHom> legs;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<Elem> table(factors[i]->size());
    for (Elem a = 0; a < factors[i]->size(); ++a) table[a] = index.at(inj[i][a]);
    legs.push_back(validate_hom(factors[i], c, std::move(table)));
  }
  return FrameCone{c, std::move(legs)};
}

/// Colimit of a frame diagram: the coproduct divided by the congruence
/// generated by (ι_Y(f(x)), ι_X(x)) for every arrow f : X → Y.
inline FrameCone frame_colimit(const FrameDiagram& d) {
  FrameCone co = coproduct_frame(d.objects);
  std::vector<std::pair<Elem, Elem>> pairs;
  for (const auto& a : d.arrows)
    for (Elem x = 0; x < a.map.source->size(); ++x)
      pairs.emplace_back(co.legs[a.to](a.map(x)), co.legs[a.from](x));
  Congruence k = congruence_from_pairs(co.object, pairs);
  Quotient q = quotient(k, "colim(" + co.object->name() + ")");
  std::vector<FrameHom> legs;
  for (const auto& leg : co.legs) legs.push_back(compose(q.map, leg));
  return FrameCone{q.frame, std::move(legs)};
}

}  // namespace str0d
