#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "str0d/biframe.hpp"
#include "str0d/category.hpp"

namespace str0d {

/// cℓ(m): the largest first-part element below m. Cross-checked against
/// χ(cℓ(χ_*(m))) computed in the congruence frame of the first part.
inline Elem biframe_cl(const Biframe& m, Elem x, const Coreflection& cor) {
  const Frame& t = *m.total;
  Elem acc = t.bottom();
  for (Elem a : m.part1)
    if (t.leq(a, x)) acc = t.join(acc, a);
  Elem via_chi = cor.chi(closure_via_adjoint(*cor.congruences, cor.chi_star(x)));
  if (via_chi != acc) {
    throw Error(ErrorKind::TheoremViolation, "closure of " + t.label(x) + " disagrees with the route through χ");
  }
  return acc;
}

inline Elem biframe_cl(const Biframe& m, Elem x) { return biframe_cl(m, x, coreflection_chi(m)); }

/// The largest element whose closure is c, if it exists.
inline std::optional<Elem> clear_element_for(const Biframe& m, Elem c, const Coreflection& cor) {
  if (!m.in_part1(c)) throw Error(ErrorKind::InvalidInput, m.total->label(c) + " is not in the first part");
  const Frame& t = *m.total;
  Elem top = t.bottom();
  for (Elem x = 0; x < t.size(); ++x)
    if (biframe_cl(m, x, cor) == c) top = t.join(top, x);
  if (biframe_cl(m, top, cor) != c) return std::nullopt;
  return top;
}

inline std::optional<Elem> clear_element_for(const Biframe& m, Elem c) {
  return clear_element_for(m, c, coreflection_chi(m));
}

struct ClearnessReport {
  Elem element = 0;
  Elem closure = 0;
  bool is_clear = false;
  bool is_clarifiable = false;
  std::optional<Elem> witness_clear;
  /// (1) maximal with its closure; (2) P(M/∇_m) Boolean; (3) χ_*(m) is a
  /// clear congruence; (4) χ_*(m) = ∂_{cℓ(m)}.
  std::array<bool, 4> conditions{};
};

/// Evaluates the four characterisations of clearness independently and
/// throws ConditionDisagreement if they differ.
inline ClearnessReport clearness_report(const Biframe& m, Elem x, const Coreflection& cor) {
  const Frame& t = *m.total;
  ClearnessReport r;
  r.element = x;
  r.closure = biframe_cl(m, x, cor);

  bool maximal = true;
  for (Elem y = 0; y < t.size() && maximal; ++y)
    if (biframe_cl(m, y, cor) == r.closure && !t.leq(y, x)) maximal = false;
  r.conditions[0] = maximal;

  BiframeQuotient q = closed_quotient(m, x);
  r.conditions[1] = is_boolean(*first_part(q.biframe).frame);

  // Clear in C(M₁): the largest congruence sharing its closure, found by
  // scanning the whole congruence frame.
  const CongruenceFrame& cf = *cor.congruences;
  const Frame& lat = *cf.lattice();
  Elem star = cor.chi_star(x);
  Elem closure_star = closure_via_adjoint(cf, star);
  bool largest = true;
  for (Elem d = 0; d < cf.size() && largest; ++d)
    if (closure_via_adjoint(cf, d) == closure_star && !lat.leq(d, star)) largest = false;
  r.conditions[2] = largest;

  Elem c_local = *cor.first.local(r.closure);
  r.conditions[3] = cf.congruence(star) == clear_congruence(cf.base(), c_local);

  if (!(r.conditions[0] == r.conditions[1] && r.conditions[1] == r.conditions[2] &&
        r.conditions[2] == r.conditions[3])) {
    throw Error(ErrorKind::ConditionDisagreement, "clearness conditions disagree at " + t.label(x));
  }
  r.is_clear = r.conditions[0];
  r.witness_clear = clear_element_for(m, r.closure, cor);
  r.is_clarifiable = r.witness_clear.has_value();
  if (r.is_clear && (!r.is_clarifiable || *r.witness_clear != x)) {
    throw Error(ErrorKind::ConditionDisagreement, "clear element is not the clear element for its closure");
  }
  return r;
}

inline ClearnessReport clearness_report(const Biframe& m, Elem x) {
  return clearness_report(m, x, coreflection_chi(m));
}

/// Congruential (χ invertible) exactly when every first-part element is
/// clarifiable; both are computed and compared.
inline bool is_congruential(const Biframe& m, const Coreflection& cor) {
  bool iso = cor.is_isomorphism();
  bool clarifiable = true;
  for (Elem c : m.part1)
    if (!clear_element_for(m, c, cor)) clarifiable = false;
  if (iso != clarifiable) {
    throw Error(ErrorKind::TheoremViolation, "χ invertibility disagrees with clarifiability over " + m.total->name());
  }
  return iso;
}

inline bool is_congruential(const Biframe& m) { return is_congruential(m, coreflection_chi(m)); }

// ---------------------------------------------------------------------------
// Recognising congruence frames.

struct RecognizerWitness {
  ElementSet fixed_points;      // L ⊆ M
  std::vector<Elem> c_map;      // x ↦ largest fixed point below x
  std::vector<Elem> chi;        // C L → M, indexed by the congruence frame
  std::vector<Elem> iso;        // M → C L when χ is invertible, else empty
  FramePtr first_part;
  std::string first_part_class;
  bool fibre_maxima = false;
};

namespace detail {

/// The conditions on c that do not involve fibre maxima: idempotent,
/// deflationary, preserving finite meets, complemented fixed points that
/// generate M together with their complements.
inline bool kernel_map_conditions(const Frame& f, const std::vector<Elem>& c) {
  if (c[f.top()] != f.top()) return false;
  ElementSet fixed;
  for (Elem x = 0; x < f.size(); ++x) {
    if (!f.leq(c[x], x) || c[c[x]] != c[x]) return false;
    if (c[x] == x) fixed.push_back(x);
    for (Elem y = 0; y < f.size(); ++y)
      if (c[f.meet(x, y)] != f.meet(c[x], c[y])) return false;
  }
  ElementSet gens = fixed;
  for (Elem a : fixed) {
    auto k = complement(f, a);
    if (!k) return false;
    gens.push_back(*k);
  }
  return subframe_generated(f, normalized(gens)).size() == f.size();
}

inline bool fibres_have_maxima(const Frame& f, const std::vector<Elem>& c) {
  for (Elem v = 0; v < f.size(); ++v) {
    if (c[v] != v) continue;
    Elem top = f.bottom();
    for (Elem x = 0; x < f.size(); ++x)
      if (c[x] == v) top = f.join(top, x);
    if (c[top] != v) return false;
  }
  return true;
}

inline std::vector<RecognizerWitness> recognize(const FramePtr& m, bool require_fibre_maxima,
                                                const Limits& limits) {
  require_within(m->size(), limits.recognizer_max, "recognizer input size");
  const Frame& f = *m;
  std::vector<RecognizerWitness> out;
  for (const Biframe& b : str0d_structures(m, limits.recognizer_max)) {
    Coreflection cor = coreflection_chi(b);
    RecognizerWitness w;
    w.fixed_points = b.part1;
    for (Elem x = 0; x < f.size(); ++x) w.c_map.push_back(biframe_cl(b, x, cor));
    if (!kernel_map_conditions(f, w.c_map)) {
      throw Error(ErrorKind::TheoremViolation, "closure map of a first part fails the kernel conditions");
    }
    w.fibre_maxima = fibres_have_maxima(f, w.c_map);
    bool congruential = is_congruential(b, cor);
    if (w.fibre_maxima != congruential) {
      throw Error(ErrorKind::TheoremViolation, "fibre maxima disagree with congruentiality");
    }
    if (require_fibre_maxima && !w.fibre_maxima) continue;
    w.chi = cor.chi.total.table;
    if (congruential) {
      w.iso.assign(f.size(), 0);
      for (Elem i = 0; i < w.chi.size(); ++i) w.iso[w.chi[i]] = i;
      for (Elem a = 0; a < b.part1.size(); ++a)
        if (w.iso[b.part1[a]] != cor.congruences->nabla(a)) {
          throw Error(ErrorKind::TheoremViolation, "L ↪ M does not correspond to ∇");
        }
    }
    w.first_part = cor.first.frame;
    w.first_part_class = shape_name(*w.first_part);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace detail

/// One witness per first part L ⊆ M for which M ≅ C L with L ↪ M as ∇.
inline std::vector<RecognizerWitness> recognize_congruence_frame(const FramePtr& m,
                                                                 const Limits& limits = Limits{}) {
  return detail::recognize(m, true, limits);
}

/// As above without the fibre-maximum condition: witnesses that M is a
/// dense quotient of some C L.
inline std::vector<RecognizerWitness> recognize_quotient_of_congruence_frame(const FramePtr& m,
                                                                             const Limits& limits = Limits{}) {
  return detail::recognize(m, false, limits);
}

}  // namespace str0d
