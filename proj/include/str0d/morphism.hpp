#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "str0d/frame.hpp"

namespace str0d {

/// An order-preserving map between frames. Right adjoints (f_*, ∇_*, χ_*)
/// live here since they preserve meets but not joins.
struct MonotoneMap {
  FramePtr source;
  FramePtr target;
  std::vector<Elem> table;

  Elem operator()(Elem x) const { return table[x]; }
};

/// A map preserving 0, 1 and binary meets and joins.
struct FrameHom {
  FramePtr source;
  FramePtr target;
  std::vector<Elem> table;

  Elem operator()(Elem x) const { return table[x]; }
  bool operator==(const FrameHom& other) const { return table == other.table; }
};

namespace detail {

inline std::string hom_failure(const Frame& s, const char* law, Elem x, Elem y) {
  return std::string(law) + " not preserved at (" + s.label(x) + ", " + s.label(y) + ")";
}

/// Returns an empty string when `table` is a frame homomorphism, otherwise a
/// description of the first violated law.
inline std::string hom_violation(const Frame& s, const Frame& t, const std::vector<Elem>& table) {
  if (table.size() != s.size()) return "table size mismatch";
  for (Elem v : table)
    if (v >= t.size()) return "image out of range";
  if (table[s.bottom()] != t.bottom()) return "bottom not preserved";
  if (table[s.top()] != t.top()) return "top not preserved";
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = x + 1; y < s.size(); ++y) {
      if (table[s.meet(x, y)] != t.meet(table[x], table[y])) return hom_failure(s, "meet", x, y);
      if (table[s.join(x, y)] != t.join(table[x], table[y])) return hom_failure(s, "join", x, y);
    }
  return {};
}

}  // namespace detail

inline bool is_hom(const Frame& s, const Frame& t, const std::vector<Elem>& table) {
  return detail::hom_violation(s, t, table).empty();
}

/// Checks every law over all pairs and throws NotHomomorphism on failure.
inline FrameHom validate_hom(FramePtr source, FramePtr target, std::vector<Elem> table) {
  std::string why = detail::hom_violation(*source, *target, table);
  if (!why.empty()) {
    throw Error(ErrorKind::NotHomomorphism, source->name() + " -> " + target->name() + ": " + why);
  }
  return FrameHom{std::move(source), std::move(target), std::move(table)};
}

inline FrameHom identity_hom(const FramePtr& f) {
  std::vector<Elem> table(f->size());
  for (Elem x = 0; x < f->size(); ++x) table[x] = x;
  return FrameHom{f, f, std::move(table)};
}

/// g ∘ f
inline FrameHom compose(const FrameHom& g, const FrameHom& f) {
  std::vector<Elem> table(f.table.size());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = g.table[f.table[x]];
  return FrameHom{f.source, g.target, std::move(table)};
}

/// f_*(b) = ⋁{a : f(a) ≤ b}.
inline MonotoneMap right_adjoint(const FrameHom& f) {
  const Frame& s = *f.source;
  const Frame& t = *f.target;
  std::vector<Elem> table(t.size(), s.bottom());
  for (Elem b = 0; b < t.size(); ++b) {
    Elem acc = s.bottom();
    for (Elem a = 0; a < s.size(); ++a)
      if (t.leq(f(a), b)) acc = s.join(acc, a);
    table[b] = acc;
  }
  return MonotoneMap{f.target, f.source, std::move(table)};
}

inline bool is_dense(const FrameHom& f) {
  for (Elem x = 0; x < f.source->size(); ++x)
    if (f(x) == f.target->bottom() && x != f.source->bottom()) return false;
  return true;
}

inline bool is_codense(const FrameHom& f) {
  for (Elem x = 0; x < f.source->size(); ++x)
    if (f(x) == f.target->top() && x != f.source->top()) return false;
  return true;
}

inline bool is_injective(const FrameHom& f) {
  std::vector<char> seen(f.target->size(), 0);
  for (Elem v : f.table) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

inline bool is_surjective(const FrameHom& f) {
  std::vector<char> seen(f.target->size(), 0);
  for (Elem v : f.table) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

inline ElementSet image(const FrameHom& f, const ElementSet& elems) {
  ElementSet out;
  for (Elem e : elems) out.push_back(f(e));
  return normalized(std::move(out));
}

/// Smallest subset containing S ∪ {0, 1} closed under binary meets and joins.
inline ElementSet subframe_generated(const Frame& f, const ElementSet& generators) {
  std::vector<char> in(f.size(), 0);
  ElementSet members;
  auto add = [&](Elem x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(f.bottom());
  add(f.top());
  for (Elem g : generators) add(g);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      add(f.meet(members[i], members[j]));
      add(f.join(members[i], members[j]));
    }
  return normalized(std::move(members));
}

inline bool is_subframe(const Frame& f, const ElementSet& set) {
  if (!contains(set, f.bottom()) || !contains(set, f.top())) return false;
  for (Elem x : set)
    for (Elem y : set)
      if (!contains(set, f.meet(x, y)) || !contains(set, f.join(x, y))) return false;
  return true;
}

/// A subframe presented as a frame of its own, with the inclusion into the
/// ambient frame. Element i of `frame` is `members[i]` of the ambient frame.
struct Subframe {
  FramePtr frame;
  FrameHom inclusion;
  ElementSet members;

  std::optional<Elem> local(Elem ambient) const {
    auto it = std::lower_bound(members.begin(), members.end(), ambient);
    if (it == members.end() || *it != ambient) return std::nullopt;
    return static_cast<Elem>(it - members.begin());
  }
};

inline Subframe make_subframe(const FramePtr& ambient, const ElementSet& members, std::string name) {
  if (!is_subframe(*ambient, members)) {
    throw Error(ErrorKind::PartNotSubframe, "element set is not a subframe of " + ambient->name());
  }
  const std::size_t n = members.size();
  std::vector<std::string> labels;
  for (Elem m : members) labels.push_back(ambient->label(m));
  std::vector<std::uint8_t> leq(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i * n + j] = ambient->leq(members[i], members[j]);
  auto local = [&](Elem a) {
    return static_cast<Elem>(std::lower_bound(members.begin(), members.end(), a) - members.begin());
  };
  FramePtr frame = make_frame(Frame::from_operations(
      std::move(name), std::move(labels), std::move(leq),
      [&](Elem x, Elem y) { return local(ambient->meet(members[x], members[y])); },
      [&](Elem x, Elem y) { return local(ambient->join(members[x], members[y])); }));
  FrameHom inclusion{frame, ambient, std::vector<Elem>(members.begin(), members.end())};
  return Subframe{frame, std::move(inclusion), members};
}

/// Calls `visit` for every frame homomorphism source → target. A hom is
/// fixed by its values on join-irreducibles, so the search assigns those
/// monotonically and extends by joins.
inline void for_each_hom(const FramePtr& source, const FramePtr& target,
                         const std::function<void(const FrameHom&)>& visit) {
  const Frame& s = *source;
  const Frame& t = *target;
  const ElementSet& irr = s.join_irreducibles();
  // Linear extension of the join-irreducibles by height.
  std::vector<Elem> order(irr.begin(), irr.end());
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) {
    return s.down_set(a).size() < s.down_set(b).size();
  });
  std::vector<Elem> assigned(s.size(), 0);
  std::vector<Elem> table(s.size());
  std::function<void(std::size_t)> go = [&](std::size_t depth) {
    if (depth == order.size()) {
      for (Elem x = 0; x < s.size(); ++x) {
        Elem acc = t.bottom();
        for (Elem j : irr)
          if (s.leq(j, x)) acc = t.join(acc, assigned[j]);
        table[x] = acc;
      }
      if (is_hom(s, t, table)) visit(FrameHom{source, target, table});
      return;
    }
    Elem j = order[depth];
    for (Elem v = 0; v < t.size(); ++v) {
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        Elem i = order[k];
        if (s.leq(i, j) && !t.leq(assigned[i], v)) ok = false;
        if (s.leq(j, i) && !t.leq(v, assigned[i])) ok = false;
      }
      if (!ok) continue;
      assigned[j] = v;
      go(depth + 1);
    }
  };
  go(0);
}

inline std::vector<FrameHom> enumerate_homs(const FramePtr& source, const FramePtr& target) {
  std::vector<FrameHom> out;
  for_each_hom(source, target, [&](const FrameHom& h) { out.push_back(h); });
  return out;
}

}  // namespace str0d
