#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "str0d/congruence.hpp"
#include "str0d/congruence_frame.hpp"
#include "str0d/enumerate.hpp"
#include "str0d/morphism.hpp"

namespace str0d {

/// A biframe (L₀, L₁, L₂) with the parts stored as element subsets of the
/// total frame.
struct Biframe {
  FramePtr total;
  ElementSet part1;
  ElementSet part2;

  bool in_part1(Elem x) const { return contains(part1, x); }
  bool in_part2(Elem x) const { return contains(part2, x); }
};

inline Biframe validate_biframe(FramePtr total, ElementSet part1, ElementSet part2) {
  part1 = normalized(std::move(part1));
  part2 = normalized(std::move(part2));
  for (const ElementSet* part : {&part1, &part2}) {
    for (Elem x : *part)
      if (x >= total->size()) throw Error(ErrorKind::InvalidInput, "part element out of range");
    if (!is_subframe(*total, *part)) {
      throw Error(ErrorKind::PartNotSubframe,
                  std::string(part == &part1 ? "first" : "second") + " part is not a subframe of " +
                      total->name());
    }
  }
  ElementSet both = part1;
  both.insert(both.end(), part2.begin(), part2.end());
  if (subframe_generated(*total, normalized(both)).size() != total->size()) {
    throw Error(ErrorKind::PartsDoNotGenerate, "parts do not generate " + total->name());
  }
  return Biframe{std::move(total), std::move(part1), std::move(part2)};
}

/// Colour 1 for first-part members, 2 for second-part members, 3 for both.
inline Colouring part_colouring(const Biframe& b) {
  Colouring colours(b.total->size(), 0);
  for (Elem x : b.part1) colours[x] |= 1;
  for (Elem x : b.part2) colours[x] |= 2;
  return colours;
}

inline std::optional<std::vector<Elem>> find_biframe_isomorphism(const Biframe& a, const Biframe& b) {
  return find_isomorphism(*a.total, *b.total, part_colouring(a), part_colouring(b));
}

/// Strict zero-dimensionality: each first-part element has a complement in
/// the second part, and those complements generate the second part.
inline bool is_str0d(const Biframe& b) {
  const Frame& t = *b.total;
  ElementSet complements;
  for (Elem a : b.part1) {
    auto c = complement(t, a);
    if (!c || !b.in_part2(*c)) return false;
    complements.push_back(*c);
  }
  return subframe_generated(t, normalized(complements)) == b.part2;
}

inline void require_str0d(const Biframe& b) {
  if (!is_str0d(b)) throw Error(ErrorKind::NotStr0d, "biframe over " + b.total->name() + " is not strictly zero-dimensional");
}

/// P M: the first part as a frame, with its inclusion into the total part.
inline Subframe first_part(const Biframe& b) {
  return make_subframe(b.total, b.part1, "P(" + b.total->name() + ")");
}

/// (C L, ∇L, ΔL): closed congruences first, the subframe generated by the
/// open congruences second.
inline Biframe congruence_biframe(const CongruenceFrame& cf) {
  ElementSet closed(cf.nabla_table().begin(), cf.nabla_table().end());
  ElementSet open(cf.delta_table().begin(), cf.delta_table().end());
  return Biframe{cf.lattice(), normalized(closed), subframe_generated(*cf.lattice(), normalized(open))};
}

inline Biframe congruence_biframe(const FramePtr& l) { return congruence_biframe(*congruence_lattice(l)); }

/// A biframe homomorphism: a frame hom of total parts preserving both parts.
struct BiframeHom {
  Biframe source;
  Biframe target;
  FrameHom total;

  Elem operator()(Elem x) const { return total(x); }
};

inline bool preserves_parts(const Biframe& s, const Biframe& t, const FrameHom& h) {
  for (Elem x : s.part1)
    if (!t.in_part1(h(x))) return false;
  for (Elem x : s.part2)
    if (!t.in_part2(h(x))) return false;
  return true;
}

inline BiframeHom validate_bihom(const Biframe& s, const Biframe& t, std::vector<Elem> table) {
  FrameHom h = validate_hom(s.total, t.total, std::move(table));
  if (!preserves_parts(s, t, h)) {
    throw Error(ErrorKind::NotHomomorphism, "map does not preserve biframe parts");
  }
  return BiframeHom{s, t, std::move(h)};
}

inline BiframeHom identity_bihom(const Biframe& b) { return BiframeHom{b, b, identity_hom(b.total)}; }

inline BiframeHom compose(const BiframeHom& g, const BiframeHom& f) {
  return BiframeHom{f.source, g.target, compose(g.total, f.total)};
}

/// The restriction h₁ of a biframe hom to first parts, as a frame hom
/// between the first-part frames.
inline FrameHom first_part_map(const BiframeHom& h, const Subframe& source_first, const Subframe& target_first) {
  std::vector<Elem> table;
  for (Elem a : source_first.members) table.push_back(*target_first.local(h(a)));
  return FrameHom{source_first.frame, target_first.frame, std::move(table)};
}

inline bool first_part_injective(const BiframeHom& h) {
  ElementSet seen;
  for (Elem a : h.source.part1) seen.push_back(h(a));
  return normalized(seen).size() == h.source.part1.size();
}

inline bool first_part_surjective(const BiframeHom& h) {
  ElementSet seen;
  for (Elem a : h.source.part1) seen.push_back(h(a));
  return normalized(seen) == h.target.part1;
}

inline bool second_part_surjective(const BiframeHom& h) {
  ElementSet seen;
  for (Elem a : h.source.part2) seen.push_back(h(a));
  return normalized(seen) == h.target.part2;
}

/// Dense iff the total part is dense. For a strictly zero-dimensional
/// source this must agree with injectivity of the first part.
inline bool is_dense_bihom(const BiframeHom& h) {
  bool dense = is_dense(h.total);
  if (is_str0d(h.source) && dense != first_part_injective(h)) {
    throw Error(ErrorKind::TheoremViolation, "density disagrees with first-part injectivity");
  }
  return dense;
}

/// Surjection iff both parts are surjective; from a strictly
/// zero-dimensional source the first part alone decides.
inline bool is_biframe_surjection(const BiframeHom& h) {
  bool surjective = first_part_surjective(h) && second_part_surjective(h);
  if (is_str0d(h.source) && surjective != first_part_surjective(h)) {
    throw Error(ErrorKind::TheoremViolation, "surjectivity disagrees with first-part surjectivity");
  }
  return surjective;
}

struct BiframeQuotient {
  Biframe biframe;
  BiframeHom map;
  Quotient quotient;
};

/// Quotient of a biframe induced by a congruence on its total part.
inline BiframeQuotient biframe_quotient(const Biframe& b, const Congruence& theta) {
  Quotient q = quotient(theta);
  Biframe result{q.frame, image(q.map, b.part1), image(q.map, b.part2)};
  BiframeHom map{b, result, q.map};
  return BiframeQuotient{std::move(result), std::move(map), std::move(q)};
}

/// The unique frame hom h : C L → T with h ∘ ∇ = g, for g whose image is
/// complemented. Uses C = ⋁ₓ (∇_{j(x)} ∧ Δₓ), so h(C) = ⋁ₓ (g(j x) ∧ g(x)ᶜ).
inline FrameHom extend_along_nabla(const CongruenceFrame& cf, const FrameHom& g) {
  const Frame& t = *g.target;
  const Frame& l = *cf.base();
  std::vector<Elem> neg(l.size());
  for (Elem x = 0; x < l.size(); ++x) {
    auto c = complement(t, g(x));
    if (!c) throw Error(ErrorKind::InvalidInput, "image of " + l.label(x) + " is not complemented");
    neg[x] = *c;
  }
  std::vector<Elem> table(cf.size());
  for (Elem i = 0; i < cf.size(); ++i) {
    const Congruence& c = cf.congruence(i);
    Elem acc = t.bottom();
    for (Elem x = 0; x < l.size(); ++x) acc = t.join(acc, t.meet(g(c(x)), neg[x]));
    table[i] = acc;
  }
  FrameHom h = validate_hom(cf.lattice(), g.target, std::move(table));
  for (Elem a = 0; a < l.size(); ++a)
    if (h(cf.nabla(a)) != g(a)) {
      throw Error(ErrorKind::UniversalPropertyViolation, "extension does not restrict to g along ∇");
    }
  return h;
}

/// The congruential coreflection χ : C(M₁) → M of a strictly
/// zero-dimensional biframe, with everything needed to use it.
struct Coreflection {
  Biframe target;               // M
  Subframe first;               // P M ↪ M₀
  CongruenceFramePtr congruences;  // C(P M)
  Biframe source;               // congruence biframe of P M
  BiframeHom chi;
  MonotoneMap chi_star;         // right adjoint of χ₀: M₀ → C(P M)

  /// χ_*(m) as a congruence on the first part.
  const Congruence& distinguished(Elem m) const { return congruences->congruence(chi_star(m)); }
  bool is_isomorphism() const { return is_injective(chi.total) && is_surjective(chi.total); }
};

inline Coreflection coreflection_chi(const Biframe& m) {
  require_str0d(m);
  Subframe first = first_part(m);
  CongruenceFramePtr cf = congruence_lattice(first.frame);
  Biframe source = congruence_biframe(*cf);
  FrameHom chi0 = extend_along_nabla(*cf, first.inclusion);
  if (!preserves_parts(source, m, chi0)) {
    throw Error(ErrorKind::UniversalPropertyViolation, "χ does not preserve parts");
  }
  MonotoneMap star = right_adjoint(chi0);
  BiframeHom chi{source, m, std::move(chi0)};
  return Coreflection{m, std::move(first), std::move(cf), std::move(source), std::move(chi), std::move(star)};
}

/// χ_*(m): the distinguished congruence on M₁ realised by m ∈ M₀.
inline Congruence chi_star(const Biframe& m, Elem element) {
  return coreflection_chi(m).distinguished(element);
}

/// Calls `visit` for every biframe hom from a strictly zero-dimensional
/// source. Such a hom is fixed by its first part: totals are generated
/// under joins by the elements a ∧ bᶜ with a, b in the first part.
inline void for_each_bihom(const Biframe& s, const Biframe& t,
                           const std::function<void(const BiframeHom&)>& visit) {
  require_str0d(s);
  const Frame& st = *s.total;
  const Frame& tt = *t.total;
  Subframe sf = first_part(s);
  Subframe tf = make_subframe(t.total, t.part1, "P(" + tt.name() + ")");
  const std::size_t k = sf.members.size();
  std::vector<Elem> neg(k);
  for (std::size_t i = 0; i < k; ++i) neg[i] = *complement(st, sf.members[i]);
  // below[m] lists the pairs (a, b) with a ∧ bᶜ ≤ m.
  std::vector<std::vector<std::pair<Elem, Elem>>> below(st.size());
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b) {
      Elem rect = st.meet(sf.members[a], neg[b]);
      for (Elem m = 0; m < st.size(); ++m)
        if (st.leq(rect, m)) below[m].emplace_back(a, b);
    }
  std::vector<std::optional<Elem>> tneg(tf.members.size());
  for (std::size_t i = 0; i < tf.members.size(); ++i) tneg[i] = complement(tt, tf.members[i]);
  for_each_hom(sf.frame, tf.frame, [&](const FrameHom& h1) {
    for (Elem b = 0; b < k; ++b)
      if (!tneg[h1(b)]) return;
    std::vector<Elem> table(st.size());
    for (Elem m = 0; m < st.size(); ++m) {
      Elem acc = tt.bottom();
      for (auto [a, b] : below[m]) acc = tt.join(acc, tt.meet(tf.members[h1(a)], *tneg[h1(b)]));
      table[m] = acc;
    }
    if (!is_hom(st, tt, table)) return;
    FrameHom h0{s.total, t.total, std::move(table)};
    if (!preserves_parts(s, t, h0)) return;
    for (Elem a = 0; a < k; ++a)
      if (h0(sf.members[a]) != tf.members[h1(a)]) return;
    visit(BiframeHom{s, t, std::move(h0)});
  });
}

inline std::vector<BiframeHom> enumerate_bihoms(const Biframe& s, const Biframe& t) {
  std::vector<BiframeHom> out;
  for_each_bihom(s, t, [&](const BiframeHom& h) { out.push_back(h); });
  return out;
}

/// Biframe homs found by filtering every frame hom of the totals; slower
/// but independent of the first-part argument above.
inline std::vector<BiframeHom> enumerate_bihoms_on_totals(const Biframe& s, const Biframe& t) {
  std::vector<BiframeHom> out;
  for_each_hom(s.total, t.total, [&](const FrameHom& h) {
    if (preserves_parts(s, t, h)) out.push_back(BiframeHom{s, t, h});
  });
  return out;
}

/// Every strictly zero-dimensional biframe structure on the frame M: a
/// first part L of complemented elements, the second part generated by
/// their complements, and L ∪ Lᶜ generating M. Ordered by first part.
inline std::vector<Biframe> str0d_structures(const FramePtr& m, std::size_t bound = Limits{}.recognizer_max) {
  const Frame& f = *m;
  require_within(f.size(), bound, "str0d structure search size");
  ElementSet comp = complemented_elements(f);
  ElementSet free;
  for (Elem x : comp)
    if (x != f.bottom() && x != f.top()) free.push_back(x);
  std::vector<Biframe> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    ElementSet part1{f.bottom(), f.top()};
    for (std::size_t i = 0; i < free.size(); ++i)
      if (mask >> i & 1) part1.push_back(free[i]);
    part1 = normalized(std::move(part1));
    if (!is_subframe(f, part1)) continue;
    ElementSet complements;
    for (Elem a : part1) complements.push_back(*complement(f, a));
    ElementSet part2 = subframe_generated(f, normalized(complements));
    ElementSet both = part1;
    both.insert(both.end(), part2.begin(), part2.end());
    if (subframe_generated(f, normalized(both)).size() != f.size()) continue;
    out.push_back(Biframe{m, std::move(part1), std::move(part2)});
  }
  std::sort(out.begin(), out.end(), [](const Biframe& a, const Biframe& b) {
    return a.part1.size() != b.part1.size() ? a.part1.size() < b.part1.size() : a.part1 < b.part1;
  });
  return out;
}

/// One representative per isomorphism class of strictly zero-dimensional
/// biframes with total of at most `max_total` elements. Totals are
/// Boolean: both parts consist of complemented elements and generate the
/// total, and complemented elements form a sublattice.
inline std::vector<Biframe> str0d_corpus(std::size_t max_total) {
  std::vector<Biframe> out;
  for (std::size_t k = 0; (std::size_t{1} << k) <= max_total; ++k) {
    std::vector<Biframe> classes;
    for (Biframe& b : str0d_structures(boolean_frame(k))) {
      bool fresh = true;
      for (const Biframe& c : classes)
        if (c.part1.size() == b.part1.size() && find_biframe_isomorphism(b, c)) fresh = false;
      if (fresh) classes.push_back(std::move(b));
    }
    out.insert(out.end(), classes.begin(), classes.end());
  }
  return out;
}

/// Descriptive name such as "C(chain3)" for congruential biframes, or
/// "str0d(<total>|<first>)" otherwise.
inline std::string biframe_shape_name(const Biframe& b) {
  Subframe first = first_part(b);
  std::string p = shape_name(*first.frame);
  if (is_str0d(b)) {
    Biframe c = congruence_biframe(first.frame);
    if (find_biframe_isomorphism(b, c)) return "C(" + p + ")";
  }
  return "bi(" + shape_name(*b.total) + "|" + p + ")";
}

}  // namespace str0d
