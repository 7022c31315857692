#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "str0d/congruence.hpp"
#include "str0d/limits.hpp"
#include "str0d/morphism.hpp"

namespace str0d {

/// The frame C L of all congruences on L, each lattice element paired with
/// its congruence, together with the closed and open congruence tables.
class CongruenceFrame {
 public:
  CongruenceFrame(FramePtr base, std::vector<Congruence> congruences, std::string name)
      : base_(std::move(base)), congruences_(std::move(congruences)) {
    for (Elem i = 0; i < congruences_.size(); ++i) index_.emplace(congruences_[i].nucleus, i);
    const std::size_t n = congruences_.size();
    std::vector<std::string> labels;
    for (const auto& c : congruences_) labels.push_back(congruence_label(c));
    std::vector<std::uint8_t> order(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) order[i * n + k] = leq(congruences_[i], congruences_[k]);
    lattice_ = make_frame(Frame::from_operations(
        std::move(name), std::move(labels), std::move(order),
        [&](Elem x, Elem y) { return index_of(cong_meet(congruences_[x], congruences_[y])); },
        [&](Elem x, Elem y) { return index_of(cong_join(congruences_[x], congruences_[y])); }));
    for (Elem a = 0; a < base_->size(); ++a) {
      nabla_.push_back(index_of(str0d::nabla(base_, a)));
      delta_.push_back(index_of(str0d::delta(base_, a)));
    }
  }

  const FramePtr& base() const { return base_; }
  const FramePtr& lattice() const { return lattice_; }
  std::size_t size() const { return congruences_.size(); }
  const std::vector<Congruence>& congruences() const { return congruences_; }
  const Congruence& congruence(Elem i) const { return congruences_[i]; }

  Elem index_of(const Congruence& c) const {
    auto it = index_.find(c.nucleus);
    if (it == index_.end()) {
      throw Error(ErrorKind::NotCongruence, "nucleus is not in C(" + base_->name() + ")");
    }
    return it->second;
  }

  Elem nabla(Elem a) const { return nabla_[a]; }
  Elem delta(Elem a) const { return delta_[a]; }
  const std::vector<Elem>& nabla_table() const { return nabla_; }
  const std::vector<Elem>& delta_table() const { return delta_; }

  Elem identity() const { return lattice_->bottom(); }
  Elem all() const { return lattice_->top(); }

  /// ∇_L as a frame homomorphism L → C L.
  FrameHom nabla_hom() const { return FrameHom{base_, lattice_, nabla_}; }

 private:
  FramePtr base_;
  FramePtr lattice_;
  std::vector<Congruence> congruences_;
  std::map<std::vector<Elem>, Elem> index_;
  std::vector<Elem> nabla_, delta_;
};

using CongruenceFramePtr = std::shared_ptr<const CongruenceFrame>;

namespace detail {

/// Smallest subset containing `seed` and 1 that is closed under binary
/// meets and under x → s for every x in the frame and s in the subset.
/// These sets are exactly the fixpoint sets of nuclei.
inline std::vector<char> sublocale_closure(const Frame& f, std::vector<char> in) {
  in[f.top()] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem s = 0; s < f.size(); ++s) {
      if (!in[s]) continue;
      for (Elem x = 0; x < f.size(); ++x) {
        Elem i = f.implies(x, s);
        if (!in[i]) in[i] = 1, changed = true;
        if (in[x]) {
          Elem m = f.meet(x, s);
          if (!in[m]) in[m] = 1, changed = true;
        }
      }
    }
  }
  return in;
}

inline std::vector<Elem> nucleus_of_sublocale(const Frame& f, const std::vector<char>& in) {
  std::vector<Elem> j(f.size());
  for (Elem x = 0; x < f.size(); ++x) {
    Elem acc = f.top();
    for (Elem s = 0; s < f.size(); ++s)
      if (in[s] && f.leq(x, s)) acc = f.meet(acc, s);
    j[x] = acc;
  }
  return j;
}

}  // namespace detail

/// Enumerates every congruence of L through the fixpoint sets of nuclei,
/// listed with Ganter's NextClosure, and assembles them into the frame C L.
/// Congruences are indexed from the identity (bottom) to the all-relation
/// (top), coarser ones later.
inline CongruenceFramePtr congruence_lattice(const FramePtr& fp, const Limits& limits = Limits{}) {
  const Frame& f = *fp;
  require_within(f.join_irreducibles().size(), limits.max_join_irreducibles,
                 "join-irreducible count of congruence base");
  const std::size_t n = f.size();
  std::vector<Congruence> found;
  auto emit = [&](const std::vector<char>& in) {
    std::vector<Elem> j = detail::nucleus_of_sublocale(f, in);
    found.push_back(make_congruence(fp, std::move(j)));
  };
  std::vector<char> current = detail::sublocale_closure(f, std::vector<char>(n, 0));
  emit(current);
  for (;;) {
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (current[i]) continue;
      std::vector<char> seed(n, 0);
      for (std::size_t k = 0; k < i; ++k) seed[k] = current[k];
      seed[i] = 1;
      std::vector<char> next = detail::sublocale_closure(f, seed);
      bool same_prefix = true;
      for (std::size_t k = 0; k < i && same_prefix; ++k)
        if (next[k] != current[k]) same_prefix = false;
      if (!same_prefix) continue;
      current = std::move(next);
      emit(current);
      advanced = true;
      break;
    }
    if (!advanced) break;
  }
  std::sort(found.begin(), found.end(), [&](const Congruence& a, const Congruence& b) {
    auto fixcount = [&](const Congruence& c) {
      std::size_t k = 0;
      for (Elem x = 0; x < n; ++x) k += c(x) == x;
      return k;
    };
    std::size_t ka = fixcount(a), kb = fixcount(b);
    if (ka != kb) return ka > kb;
    return a.nucleus < b.nucleus;
  });
  return std::make_shared<const CongruenceFrame>(fp, std::move(found), "C(" + f.name() + ")");
}

/// C f : C L → C M as a frame homomorphism.
inline FrameHom cong_functor(const CongruenceFrame& cl, const CongruenceFrame& cm, const FrameHom& f) {
  std::vector<Elem> table(cl.size());
  for (Elem i = 0; i < cl.size(); ++i) table[i] = cm.index_of(cong_image(f, cl.congruence(i)));
  return FrameHom{cl.lattice(), cm.lattice(), std::move(table)};
}

/// C f_* : C M → C L as a monotone map.
inline MonotoneMap cong_functor_adjoint(const CongruenceFrame& cl, const CongruenceFrame& cm,
                                        const FrameHom& f) {
  std::vector<Elem> table(cm.size());
  for (Elem i = 0; i < cm.size(); ++i) table[i] = cl.index_of(cong_preimage(f, cm.congruence(i)));
  return MonotoneMap{cm.lattice(), cl.lattice(), std::move(table)};
}

/// cℓ through the lattice route ∇ ∘ ∇_*; agrees with closure_cl.
inline Elem closure_via_adjoint(const CongruenceFrame& cf, Elem c) {
  MonotoneMap lower = right_adjoint(cf.nabla_hom());
  return cf.nabla(lower(c));
}

/// Regular elements of C L (equal to their double pseudocomplement).
inline bool is_smooth(const CongruenceFrame& cf, const Congruence& c) {
  const Frame& lat = *cf.lattice();
  Elem x = cf.index_of(c);
  return lat.pseudocomplement(lat.pseudocomplement(x)) == x;
}

/// Congruences D ≥ C on L paired with D/C on L/C.
struct ThirdIsomorphism {
  Quotient quotient;                      // L → L/C
  CongruenceFramePtr quotient_congruences;  // C(L/C)
  std::vector<Elem> above;                // indices in C L of the D ≥ C
  std::vector<Elem> image;                // matching indices in C(L/C)
};

/// D ↦ D/C = C q_C(D). Bijectivity and order reflection are checked.
inline ThirdIsomorphism third_iso(const CongruenceFrame& cf, const Congruence& c) {
  ThirdIsomorphism iso{quotient(c), nullptr, {}, {}};
  iso.quotient_congruences = congruence_lattice(iso.quotient.frame);
  const CongruenceFrame& cq = *iso.quotient_congruences;
  for (Elem i = 0; i < cf.size(); ++i) {
    if (!leq(c, cf.congruence(i))) continue;
    iso.above.push_back(i);
    iso.image.push_back(cq.index_of(cong_image(iso.quotient.map, cf.congruence(i))));
  }
  std::vector<Elem> sorted = iso.image;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() != cq.size() || std::unique(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::TheoremViolation, "third isomorphism map is not bijective");
  }
  const Frame& la = *cf.lattice();
  const Frame& lb = *cq.lattice();
  for (std::size_t p = 0; p < iso.above.size(); ++p)
    for (std::size_t q = 0; q < iso.above.size(); ++q)
      if (la.leq(iso.above[p], iso.above[q]) != lb.leq(iso.image[p], iso.image[q])) {
        throw Error(ErrorKind::TheoremViolation, "third isomorphism map is not an order isomorphism");
      }
  return iso;
}

}  // namespace str0d
