#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "str0d/biframe.hpp"
#include "str0d/congruence_frame.hpp"
#include "str0d/frame_limits.hpp"

namespace str0d {

// ---------------------------------------------------------------------------
// Fibres: objects (L, C) with C a congruence on C L.

struct FibreObject {
  FramePtr base;
  CongruenceFramePtr congruences;  // C L
  Congruence cong2;                // on congruences->lattice()

  /// The strictly zero-dimensional objects are those with C ≤ 𝔇_{C L}.
  bool is_str0d() const { return leq(cong2, dense_top(congruences->lattice())); }
};

inline FibreObject make_fibre_object(const FramePtr& base, const Congruence& cong2) {
  CongruenceFramePtr cf = congruence_lattice(base);
  if (cong2.frame->size() != cf->size()) {
    throw Error(ErrorKind::InvalidInput, "second-order congruence is not on C(" + base->name() + ")");
  }
  return FibreObject{base, cf, Congruence{cf->lattice(), cong2.nucleus}};
}

/// (L, identity): the object of the congruence biframe of L.
inline FibreObject identity_fibre_object(const FramePtr& base) {
  CongruenceFramePtr cf = congruence_lattice(base);
  return FibreObject{base, cf, identity_congruence(cf->lattice())};
}

/// (P M, ker χ₀).
inline FibreObject to_fibre(const Biframe& m) {
  Coreflection cor = coreflection_chi(m);
  return FibreObject{cor.first.frame, cor.congruences, kernel(cor.chi.total)};
}

/// C L / C with its congruence-biframe parts.
inline Biframe from_fibre(const FibreObject& o) {
  if (!o.is_str0d()) {
    throw Error(ErrorKind::NotDense, "fibre object over " + o.base->name() + " is not below 𝔇");
  }
  return biframe_quotient(congruence_biframe(*o.congruences), o.cong2).biframe;
}

struct FibreMorphismCheck {
  bool morphism = false;  // C²f(C) ≤ C′
  bool final = false;     // C′ = C²f(C)
  bool initial = false;   // C = C²f_*(C′)
};

inline FibreMorphismCheck check_fibre_morphism(const FrameHom& f, const FibreObject& source,
                                               const FibreObject& target) {
  FrameHom cf = cong_functor(*source.congruences, *target.congruences, f);
  Congruence image = cong_image(cf, source.cong2);
  FibreMorphismCheck out;
  out.morphism = leq(image, target.cong2);
  out.final = image == target.cong2;
  out.initial = cong_preimage(cf, target.cong2) == source.cong2;
  return out;
}

struct Reflection {
  FibreObject target;
  Quotient eta;  // L ↠ L/∇_*(C)
};

/// η : (L, C) → (L/∇_*(C), C/cℓ(C)); the second component is obtained as
/// C q(C), which the third isomorphism identifies with C/cℓ(C).
inline Reflection reflect_eta(const FibreObject& o) {
  const CongruenceFrame& cf = *o.congruences;
  const Congruence& a = cf.congruence(o.cong2(cf.identity()));
  Quotient eta = quotient(a);
  CongruenceFramePtr cq = congruence_lattice(eta.frame);
  FrameHom c_eta = cong_functor(cf, *cq, eta.map);
  FibreObject target{eta.frame, cq, cong_image(c_eta, o.cong2)};
  if (!target.is_str0d()) {
    throw Error(ErrorKind::TheoremViolation, "reflection of an object over " + o.base->name() + " is not below 𝔇");
  }
  return Reflection{std::move(target), std::move(eta)};
}

/// Every strictly zero-dimensional biframe with first part L, up to
/// isomorphism: one per congruence on C L below 𝔇_{C L}, finer congruences
/// (larger biframes) first.
inline std::vector<Biframe> fibre_over(const FramePtr& l) {
  CongruenceFramePtr cf = congruence_lattice(l);
  CongruenceFramePtr cf2 = congruence_lattice(cf->lattice());
  Congruence top = dense_top(cf->lattice());
  Biframe whole = congruence_biframe(*cf);
  std::vector<Biframe> out;
  for (const Congruence& e : cf2->congruences())
    if (leq(e, top)) out.push_back(biframe_quotient(whole, e).biframe);
  return out;
}

// ---------------------------------------------------------------------------
// Diagrams of strictly zero-dimensional biframes and their (co)limits.

struct Diagram {
  struct Arrow {
    std::string name;
    std::size_t from, to;
    BiframeHom map;
  };
  /// map(second) ∘ map(first) = map(result), for declared composable pairs.
  struct Composite {
    std::size_t first, second, result;
  };
  std::vector<std::string> names;
  std::vector<Biframe> objects;
  std::vector<Arrow> arrows;
  std::vector<Composite> composites;
};

inline bool same_biframe(const Biframe& a, const Biframe& b) {
  return a.total->size() == b.total->size() && a.total->order_table() == b.total->order_table() &&
         a.part1 == b.part1 && a.part2 == b.part2;
}

inline void validate_diagram(const Diagram& d) {
  if (d.names.size() != d.objects.size()) throw Error(ErrorKind::InvalidInput, "diagram name count mismatch");
  for (const Biframe& b : d.objects) require_str0d(b);
  for (const auto& a : d.arrows) {
    if (a.from >= d.objects.size() || a.to >= d.objects.size()) {
      throw Error(ErrorKind::InvalidInput, "arrow " + a.name + " has an unknown endpoint");
    }
    if (!same_biframe(a.map.source, d.objects[a.from]) || !same_biframe(a.map.target, d.objects[a.to])) {
      throw Error(ErrorKind::InvalidInput, "arrow " + a.name + " does not match its endpoints");
    }
    if (!is_hom(*a.map.source.total, *a.map.target.total, a.map.total.table) ||
        !preserves_parts(a.map.source, a.map.target, a.map.total)) {
      throw Error(ErrorKind::NotHomomorphism, "arrow " + a.name + " is not a biframe homomorphism");
    }
  }
  for (const auto& c : d.composites) {
    const auto& f = d.arrows.at(c.first);
    const auto& g = d.arrows.at(c.second);
    const auto& h = d.arrows.at(c.result);
    if (f.to != g.from || h.from != f.from || h.to != g.to ||
        compose(g.map.total, f.map.total).table != h.map.total.table) {
      throw Error(ErrorKind::InvalidInput, "composite " + h.name + " is not " + g.name + " ∘ " + f.name);
    }
  }
}

/// A (co)limit with its legs (indexed like the diagram's objects) and the
/// frame-level (co)limit of the first parts it was computed from.
struct BiframeCone {
  Biframe object;
  std::vector<BiframeHom> legs;
  FrameCone first_parts;
};

namespace detail {

struct DiagramFirstParts {
  std::vector<Coreflection> chi;
  FrameDiagram frames;
};

inline DiagramFirstParts first_parts(const Diagram& d) {
  validate_diagram(d);
  DiagramFirstParts out;
  for (const Biframe& b : d.objects) {
    out.chi.push_back(coreflection_chi(b));
    out.frames.objects.push_back(out.chi.back().first.frame);
  }
  for (const auto& a : d.arrows) {
    out.frames.arrows.push_back(
        {a.from, a.to, first_part_map(a.map, out.chi[a.from].first, out.chi[a.to].first)});
  }
  return out;
}

}  // namespace detail

/// lim D = C L / ⋀_X (C²β_X)_*(C_X), with L = lim P D and C_X = ker χ_X.
/// The leg at X sends a class to χ_X(Cβ_X(C)).
inline BiframeCone limit(const Diagram& d) {
  detail::DiagramFirstParts fp = detail::first_parts(d);
  FrameCone lim = frame_limit(fp.frames);
  CongruenceFramePtr cf = congruence_lattice(lim.object);
  std::vector<FrameHom> c_beta;
  Congruence k = all_congruence(cf->lattice());
  for (std::size_t x = 0; x < d.objects.size(); ++x) {
    c_beta.push_back(cong_functor(*cf, *fp.chi[x].congruences, lim.legs[x]));
    k = cong_meet(k, cong_preimage(c_beta[x], kernel(fp.chi[x].chi.total)));
  }
  BiframeQuotient q = biframe_quotient(congruence_biframe(*cf), k);
  std::vector<BiframeHom> legs;
  for (std::size_t x = 0; x < d.objects.size(); ++x) {
    std::vector<Elem> table(q.biframe.total->size());
    for (Elem e = 0; e < table.size(); ++e) table[e] = fp.chi[x].chi(c_beta[x](q.quotient.representative(e)));
    legs.push_back(validate_bihom(q.biframe, d.objects[x], std::move(table)));
  }
  return BiframeCone{std::move(q.biframe), std::move(legs), std::move(lim)};
}

/// colim D = C L / ⋁_X C²α_X(C_X), with L = colim P D. The leg at X sends
/// m to the class of Cα_X(χ_*(m)).
inline BiframeCone colimit(const Diagram& d) {
  detail::DiagramFirstParts fp = detail::first_parts(d);
  FrameCone colim = frame_colimit(fp.frames);
  CongruenceFramePtr cf = congruence_lattice(colim.object);
  std::vector<FrameHom> c_alpha;
  Congruence k = identity_congruence(cf->lattice());
  for (std::size_t x = 0; x < d.objects.size(); ++x) {
    c_alpha.push_back(cong_functor(*fp.chi[x].congruences, *cf, colim.legs[x]));
    k = cong_join(k, cong_image(c_alpha[x], kernel(fp.chi[x].chi.total)));
  }
  BiframeQuotient q = biframe_quotient(congruence_biframe(*cf), k);
  std::vector<BiframeHom> legs;
  for (std::size_t x = 0; x < d.objects.size(); ++x) {
    const Coreflection& chi = fp.chi[x];
    std::vector<Elem> table(d.objects[x].total->size());
    for (Elem m = 0; m < table.size(); ++m) table[m] = q.quotient(c_alpha[x](chi.chi_star(m)));
    legs.push_back(validate_bihom(d.objects[x], q.biframe, std::move(table)));
  }
  return BiframeCone{std::move(q.biframe), std::move(legs), std::move(colim)};
}

struct UniversalCheck {
  std::size_t probes = 0;
  std::size_t cones = 0;
};

namespace detail {

/// Every family of legs (one per object) into or out of `apex` that
/// commutes with the diagram's arrows.
inline void for_each_cone(const Diagram& d, const Biframe& apex, bool into_diagram,
                          const std::function<void(const std::vector<BiframeHom>&)>& visit) {
  std::vector<std::vector<BiframeHom>> choices;
  for (const Biframe& x : d.objects)
    choices.push_back(into_diagram ? enumerate_bihoms(apex, x) : enumerate_bihoms(x, apex));
  std::vector<BiframeHom> picked;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == d.objects.size()) {
      visit(picked);
      return;
    }
    for (const BiframeHom& h : choices[i]) {
      picked.push_back(h);
      bool ok = true;
      for (const auto& a : d.arrows) {
        if (a.from > i || a.to > i) continue;
        if (into_diagram ? compose(a.map.total, picked[a.from].total).table != picked[a.to].total.table
                         : compose(picked[a.to].total, a.map.total).table != picked[a.from].total.table)
          ok = false;
      }
      if (ok) go(i + 1);
      picked.pop_back();
    }
  };
  go(0);
}

}  // namespace detail

/// Checks that every cone from a probe factors through the limit exactly
/// once. Throws UniversalPropertyViolation otherwise.
inline UniversalCheck check_limit(const Diagram& d, const BiframeCone& lim, const std::vector<Biframe>& probes) {
  UniversalCheck out;
  for (const Biframe& n : probes) {
    ++out.probes;
    std::vector<BiframeHom> mediators = enumerate_bihoms(n, lim.object);
    detail::for_each_cone(d, n, true, [&](const std::vector<BiframeHom>& cone) {
      ++out.cones;
      std::size_t count = 0;
      for (const BiframeHom& u : mediators) {
        bool ok = true;
        for (std::size_t x = 0; x < cone.size() && ok; ++x)
          ok = compose(lim.legs[x].total, u.total).table == cone[x].total.table;
        count += ok;
      }
      if (count != 1) {
        throw Error(ErrorKind::UniversalPropertyViolation,
                    "cone from " + n.total->name() + " has " + std::to_string(count) + " mediating maps");
      }
    });
  }
  return out;
}

/// Checks that every cocone into a probe factors through the colimit
/// exactly once. Throws UniversalPropertyViolation otherwise.
inline UniversalCheck check_colimit(const Diagram& d, const BiframeCone& colim,
                                    const std::vector<Biframe>& probes) {
  UniversalCheck out;
  for (const Biframe& n : probes) {
    ++out.probes;
    std::vector<BiframeHom> mediators = enumerate_bihoms(colim.object, n);
    detail::for_each_cone(d, n, false, [&](const std::vector<BiframeHom>& cocone) {
      ++out.cones;
      std::size_t count = 0;
      for (const BiframeHom& u : mediators) {
        bool ok = true;
        for (std::size_t x = 0; x < cocone.size() && ok; ++x)
          ok = compose(u.total, colim.legs[x].total).table == cocone[x].total.table;
        count += ok;
      }
      if (count != 1) {
        throw Error(ErrorKind::UniversalPropertyViolation,
                    "cocone into " + n.total->name() + " has " + std::to_string(count) + " mediating maps");
      }
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Monomorphisms and extremal epimorphisms.

/// M/∇_a. Its first part is P M / χ_*(a), which is checked.
inline BiframeQuotient closed_quotient(const Biframe& m, Elem a) {
  Coreflection cor = coreflection_chi(m);
  BiframeQuotient q = biframe_quotient(m, nabla(m.total, a));
  require_str0d(q.biframe);
  Quotient expected = quotient(cor.distinguished(a));
  if (!isomorphic(*first_part(q.biframe).frame, *expected.frame)) {
    throw Error(ErrorKind::TheoremViolation, "first part of M/∇_a is not P M/χ_*(a)");
  }
  return q;
}

/// A biframe surjection whose kernel is closed, i.e. ∇_{h_*(0)}.
inline bool is_closed_quotient(const BiframeHom& h) {
  if (!is_surjective(h.total) || !is_biframe_surjection(h)) return false;
  Elem a = right_adjoint(h.total)(h.target.total->bottom());
  return kernel(h.total) == nabla(h.source.total, a);
}

struct MorphismClassification {
  // concrete side
  bool dense = false;
  bool first_part_injective = false;
  bool closed_quotient = false;
  // categorical side, decided over the probe objects
  bool mono = false;
  bool epi = false;
  bool extremal_epi = false;

  bool agrees() const { return mono == dense && dense == first_part_injective && extremal_epi == closed_quotient; }
};

namespace detail {

inline bool categorical_mono(const BiframeHom& h, const std::vector<Biframe>& probes) {
  for (const Biframe& k : probes) {
    std::map<std::vector<Elem>, int> seen;
    for (const BiframeHom& g : enumerate_bihoms(k, h.source))
      if (seen[compose(h.total, g.total).table]++) return false;
  }
  return true;
}

inline bool categorical_epi(const BiframeHom& h, const std::vector<Biframe>& probes) {
  for (const Biframe& k : probes) {
    std::map<std::vector<Elem>, int> seen;
    for (const BiframeHom& g : enumerate_bihoms(h.target, k))
      if (seen[compose(g.total, h.total).table]++) return false;
  }
  return true;
}

}  // namespace detail

/// Classifies h concretely and categorically. The categorical side
/// quantifies over homs from and to `probes`; extremality asks that every
/// factorisation h = m ∘ g through a probe with m monic has m invertible.
inline MorphismClassification classify_morphism(const BiframeHom& h, const std::vector<Biframe>& probes) {
  MorphismClassification out;
  out.dense = is_dense_bihom(h);
  out.first_part_injective = first_part_injective(h);
  out.closed_quotient = is_closed_quotient(h);
  out.mono = detail::categorical_mono(h, probes);
  out.epi = detail::categorical_epi(h, probes);
  out.extremal_epi = out.epi;
  for (const Biframe& x : probes) {
    if (!out.extremal_epi) break;
    std::vector<BiframeHom> into = enumerate_bihoms(h.source, x);
    if (into.empty()) continue;
    for (const BiframeHom& m : enumerate_bihoms(x, h.target)) {
      bool factors = false;
      for (const BiframeHom& g : into)
        if (compose(m.total, g.total).table == h.total.table) factors = true;
      if (!factors) continue;
      bool invertible = is_injective(m.total) && is_surjective(m.total) && first_part_surjective(m) &&
                        second_part_surjective(m);
      if (!invertible && detail::categorical_mono(m, probes)) {
        out.extremal_epi = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace str0d
