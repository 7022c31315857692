#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "str0d/category.hpp"
#include "str0d/clear.hpp"
#include "str0d/json_io.hpp"
#include "str0d/oracle.hpp"
#include "str0d/skula.hpp"

namespace str0d {

struct Violation {
  std::string check;
  json counterexample;
};

struct VerifyReport {
  std::string suite;
  std::size_t max_size = 0;
  std::size_t instances = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  double elapsed_ms = 0;

  bool passed() const { return violations.empty(); }

  json to_json() const {
    json v = json::array();
    for (const Violation& x : violations) v.push_back(json{{"check", x.check}, {"counterexample", x.counterexample}});
    return json{{"suite", suite},     {"maxSize", max_size}, {"instances", instances},
                {"violations", v},    {"notes", notes},      {"elapsedMs", elapsed_ms},
                {"passed", passed()}};
  }
};

/// Collects checks for one suite. Library errors raised inside a guarded
/// block count as violations of that block.
class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  void check(bool ok, const std::string& what, const json& counterexample = json::object()) {
    ++report_.instances;
    if (!ok && report_.violations.size() < kMaxViolations) report_.violations.push_back({what, counterexample});
    else if (!ok) ++dropped_;
  }

  void guard(const std::string& what, const json& counterexample, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      json ce = counterexample;
      ce["error"] = e.what();
      check(false, what, ce);
    }
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  ~Recorder() {
    if (dropped_) report_.notes.push_back(std::to_string(dropped_) + " further violations not listed");
  }

 private:
  static constexpr std::size_t kMaxViolations = 20;
  VerifyReport& report_;
  std::size_t dropped_ = 0;
};

namespace detail {

inline json frame_case(const Frame& f) { return json{{"frame", frame_to_json(f)}}; }

inline json hom_case(const FrameHom& h) { return json{{"hom", hom_to_json(h)}}; }

inline std::vector<FramePtr> frames_up_to(std::size_t n) { return enumerate_frames(n, std::max<std::size_t>(n, 1)); }

inline std::size_t clamp(Recorder& r, std::size_t requested, std::size_t cap, const char* what) {
  if (requested <= cap) return requested;
  r.note(std::string(what) + " clamped from " + std::to_string(requested) + " to " + std::to_string(cap));
  return cap;
}

inline std::size_t corpus_total_for(std::size_t n) {
  std::size_t t = 1;
  while (t * 2 <= std::size_t{1} << std::min<std::size_t>(n, 4)) t *= 2;
  return t;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// oracle: the engine against independent slow implementations.

inline void verify_oracle(Recorder& r, std::size_t n) {
  n = detail::clamp(r, n, Limits{}.oracle_max, "oracle size");
  std::map<std::size_t, std::size_t> counts;
  for (const FramePtr& f : detail::frames_up_to(n)) {
    ++counts[f->size()];
    json ce = detail::frame_case(*f);
    r.guard("congruence enumeration", ce, [&] {
      CongruenceFramePtr cf = congruence_lattice(f);
      std::set<Relation> engine, brute;
      for (const Congruence& c : cf->congruences()) engine.insert(relation_of(c));
      for (const Relation& rel : brute_force_congruences(f)) brute.insert(rel);
      r.check(engine == brute, "nucleus enumeration equals partition search", ce);
      for (Elem x = 0; x < f->size(); ++x)
        for (Elem y = 0; y < f->size(); ++y) {
          std::vector<std::pair<Elem, Elem>> pairs{{x, y}};
          r.check(congruence_from_pairs(f, pairs) == oracle::generated_by_meet(f, pairs),
                  "generated congruence equals meet of containing congruences", ce);
        }
      for (Elem a = 0; a < f->size(); ++a) {
        r.check(clear_congruence(f, a) == oracle::clear_by_search(f, a), "∂_a closed form equals search maximum", ce);
        r.check(delta(f, a) == congruence_from_pairs(f, {{a, f->top()}}), "Δ_a is generated by (a, 1)", ce);
        r.check(nabla(f, a) == congruence_from_pairs(f, {{f->bottom(), a}}), "∇_a is generated by (0, a)", ce);
      }
    });
  }
  // Distributive lattices with k elements: 1, 1, 1, 2, 3 for k = 1..5.
  const std::size_t expected[] = {0, 1, 1, 1, 2, 3};
  for (std::size_t k = 1; k <= n; ++k)
    r.check(counts[k] == expected[k], "frame count at size " + std::to_string(k));
  std::size_t oracle_n = std::min<std::size_t>(n + 1, 6);
  for (std::size_t k = 1; k <= oracle_n; ++k) {
    std::vector<FramePtr> slow = oracle::frames_of_size(k);
    std::vector<FramePtr> fast;
    for (const FramePtr& f : detail::frames_up_to(k))
      if (f->size() == k) fast.push_back(f);
    bool same = slow.size() == fast.size();
    for (const FramePtr& f : fast) {
      bool found = false;
      for (const FramePtr& g : slow) found = found || isomorphic(*f, *g);
      same = same && found;
    }
    r.check(same, "frame enumeration equals poset search at size " + std::to_string(k));
  }
  CongruenceFramePtr c3 = congruence_lattice(chain_frame(3));
  r.check(c3->size() == 4 && is_boolean(*c3->lattice()), "C(chain3) has 4 elements and is Boolean");
}

// ---------------------------------------------------------------------------
// structure: finite laws of frames, homs and congruence frames.

inline void verify_structure(Recorder& r, std::size_t n) {
  n = detail::clamp(r, n, Limits{}.enumerate_max, "structure size");
  std::vector<FramePtr> frames = detail::frames_up_to(n);
  for (const FramePtr& fp : frames) {
    const Frame& f = *fp;
    json ce = detail::frame_case(f);
    r.guard("structure", ce, [&] {
      for (Elem x = 0; x < f.size(); ++x) {
        Elem below = f.bottom();
        for (Elem j : f.join_irreducibles())
          if (f.leq(j, x)) below = f.join(below, j);
        r.check(below == x, "every element is the join of the join-irreducibles below it", ce);
        std::size_t complements = 0;
        for (Elem c = 0; c < f.size(); ++c) complements += f.meet(x, c) == f.bottom() && f.join(x, c) == f.top();
        r.check(complements == (complement(f, x) ? 1u : 0u), "complements are unique", ce);
        for (Elem y = 0; y < f.size(); ++y)
          for (Elem z = 0; z < f.size(); ++z)
            r.check(f.leq(f.meet(z, x), y) == f.leq(z, f.implies(x, y)), "Heyting residuation", ce);
      }
      CongruenceFramePtr cf = congruence_lattice(fp);
      const Frame& lat = *cf->lattice();
      r.check(cf->size() == (std::size_t{1} << f.join_irreducibles().size()), "|C L| = 2^|J(L)|", ce);
      r.check(is_boolean(lat), "C L is Boolean", ce);
      FrameHom nab = cf->nabla_hom();
      r.check(is_hom(f, lat, nab.table) && is_injective(nab), "∇ is an injective frame hom", ce);
      ElementSet gens;
      for (Elem a = 0; a < f.size(); ++a) {
        r.check(lat.join(cf->nabla(a), cf->delta(a)) == lat.top() && lat.meet(cf->nabla(a), cf->delta(a)) == lat.bottom(),
                "∇_a and Δ_a are complements", ce);
        gens.push_back(cf->nabla(a));
        gens.push_back(cf->delta(a));
        Quotient up = quotient(nabla(fp, a));
        Quotient down = quotient(delta(fp, a));
        r.check(up.fixpoints == f.up_set(a), "L/∇_a is ↑a", ce);
        r.check(down.fixpoints.size() == f.down_set(a).size(), "L/Δ_a has the size of ↓a", ce);
      }
      r.check(subframe_generated(lat, normalized(gens)).size() == lat.size(), "closed and open congruences generate C L", ce);
      MonotoneMap lower = right_adjoint(nab);
      for (Elem i = 0; i < cf->size(); ++i) {
        const Congruence& c = cf->congruence(i);
        r.check(is_smooth(*cf, c), "every congruence is smooth", ce);
        r.check(cf->index_of(closure_cl(c)) == closure_via_adjoint(*cf, i), "cℓ = ∇ ∘ ∇_*", ce);
        r.check(lower(i) == c(f.bottom()), "∇_*(C) = j_C(0)", ce);
        r.check(kernel(quotient(c).map) == c, "kernel of the quotient map is C", ce);
        r.check(leq(closure_cl(c), c) && closure_cl(closure_cl(c)) == closure_cl(c), "cℓ deflationary and idempotent", ce);
        for (Elem k = 0; k < cf->size(); ++k) {
          const Congruence& d = cf->congruence(k);
          if (leq(c, d)) r.check(leq(closure_cl(c), closure_cl(d)), "cℓ monotone", ce);
          r.check(closure_cl(cong_meet(c, d)) == cong_meet(closure_cl(c), closure_cl(d)), "cℓ preserves meets", ce);
        }
        for (Elem a = 0; a < f.size(); ++a)
          for (Elem b = 0; b < f.size(); ++b)
            r.check(c.related(a, b) == (lat.join(cf->nabla(a), i) == lat.join(cf->nabla(b), i)),
                    "(a,b) ∈ C iff ∇_a ∨ C = ∇_b ∨ C", ce);
        if (f.size() <= 5) third_iso(*cf, c);
      }
      for (Elem a = 0; a < f.size(); ++a) {
        ElementSet one{a};
        ElementSet gen = subframe_generated(f, one);
        r.check(subframe_generated(f, gen) == gen && contains(gen, a), "subframe generation is a closure", ce);
      }
    });
  }
  for (std::size_t i = 0; i < frames.size(); ++i)
    for (std::size_t k = 0; k < frames.size(); ++k)
      r.check(isomorphic(*frames[i], *frames[k]) == (i == k), "enumerated frames are pairwise non-isomorphic");
}

// ---------------------------------------------------------------------------
// lemmas-1.x: quotients, closure and the functor C on homs.

inline void verify_lemmas(Recorder& r, std::size_t n) {
  n = detail::clamp(r, n, 5, "lemma size");
  std::vector<FramePtr> frames = detail::frames_up_to(n);
  std::map<const Frame*, CongruenceFramePtr> cfs;
  for (const FramePtr& f : frames) cfs[f.get()] = congruence_lattice(f);

  // Closure of C ∨ ∇_a, computed through the quotient by C.
  for (const FramePtr& fp : frames) {
    const CongruenceFrame& cf = *cfs[fp.get()];
    for (const Congruence& c : cf.congruences()) {
      Quotient q = quotient(c);
      MonotoneMap q_star = right_adjoint(q.map);
      for (Elem a = 0; a < fp->size(); ++a) {
        json ce = {{"frame", frame_to_json(*fp)}, {"congruence", congruence_to_json(c)}, {"a", fp->label(a)}};
        r.check(closure_cl(cong_join(c, nabla(fp, a))) == nabla(fp, q_star(q(a))), "cℓ(C ∨ ∇_a) = ∇_{q_* q(a)}", ce);
      }
    }
  }

  for (const FramePtr& l : frames)
    for (const FramePtr& m : frames) {
      const CongruenceFrame& cl = *cfs[l.get()];
      const CongruenceFrame& cm = *cfs[m.get()];
      for (const FrameHom& f : enumerate_homs(l, m)) {
        json ce = detail::hom_case(f);
        r.guard("lemmas", ce, [&] {
          MonotoneMap f_star = right_adjoint(f);
          for (Elem a = 0; a < l->size(); ++a) r.check(l->leq(a, f_star(f(a))), "f_* ∘ f inflationary", ce);
          for (Elem b = 0; b < m->size(); ++b) r.check(m->leq(f(f_star(b)), b), "f ∘ f_* deflationary", ce);
          bool zero_dim = true;
          for (Elem a = 0; a < l->size(); ++a) {
            Elem acc = l->bottom();
            for (Elem c : complemented_elements(*l))
              if (l->leq(c, a)) acc = l->join(acc, c);
            zero_dim = zero_dim && acc == a;
          }
          if (zero_dim && is_codense(f)) r.check(is_injective(f), "codense homs from zero-dimensional frames are injective", ce);

          FrameHom cf = cong_functor(cl, cm, f);
          r.check(is_hom(*cl.lattice(), *cm.lattice(), cf.table), "C f is a frame hom", ce);
          for (Elem a = 0; a < l->size(); ++a) r.check(cf(cl.nabla(a)) == cm.nabla(f(a)), "C f(∇_a) = ∇_{f(a)}", ce);
          for (const Congruence& c : cl.congruences()) {
            Congruence fc = cong_image(f, c);
            r.check(leq(cong_image(f, closure_cl(c)), closure_cl(fc)), "C f(cℓ(C)) ≤ cℓ(C f(C))", ce);
            Quotient qc = quotient(c);
            for (const Congruence& d : cm.congruences()) {
              r.check(leq(fc, d) == leq(c, cong_preimage(f, d)), "C f ⊣ C f_*", ce);
              // A hom L/C → M/D commuting with the quotient maps, built
              // directly from the tables.
              Quotient qd = quotient(d);
              std::vector<Elem> g(qc.frame->size(), 0);
              std::vector<char> set(qc.frame->size(), 0);
              bool well_defined = true;
              for (Elem x = 0; x < l->size(); ++x) {
                Elem v = qd(f(x));
                if (set[qc(x)] && g[qc(x)] != v) well_defined = false;
                g[qc(x)] = v;
                set[qc(x)] = 1;
              }
              bool exists = well_defined && is_hom(*qc.frame, *qd.frame, g);
              r.check(exists == leq(fc, d), "a hom L/C → M/D over f exists iff C f(C) ≤ D", ce);
            }
          }
          // ∇-universal property for maps with complemented image.
          bool complemented = true;
          for (Elem a = 0; a < l->size(); ++a) complemented = complemented && complement(*m, f(a)).has_value();
          if (complemented) {
            std::size_t extensions = 0;
            for_each_hom(cl.lattice(), m, [&](const FrameHom& h) {
              bool ok = true;
              for (Elem a = 0; a < l->size(); ++a) ok = ok && h(cl.nabla(a)) == f(a);
              extensions += ok;
            });
            r.check(extensions == 1, "exactly one extension along ∇", ce);
            if (extensions == 1) extend_along_nabla(cl, f);
          }
        });
      }
    }

  // Functoriality of C and the pushout square, on the smaller frames.
  std::vector<FramePtr> small;
  for (const FramePtr& f : frames)
    if (f->size() <= std::min<std::size_t>(n, 3)) small.push_back(f);
  for (const FramePtr& l : small) {
    const CongruenceFrame& cl = *cfs[l.get()];
    FrameHom id = identity_hom(l);
    r.check(cong_functor(cl, cl, id) == identity_hom(cl.lattice()), "C id = id", detail::frame_case(*l));
    for (const FramePtr& m : small)
      for (const FrameHom& f : enumerate_homs(l, m)) {
        for (const FramePtr& k : small)
          for (const FrameHom& g : enumerate_homs(m, k)) {
            FrameHom lhs = cong_functor(cl, *cfs[k.get()], compose(g, f));
            FrameHom rhs = compose(cong_functor(*cfs[m.get()], *cfs[k.get()], g), cong_functor(cl, *cfs[m.get()], f));
            r.check(lhs == rhs, "C(g ∘ f) = C g ∘ C f", detail::hom_case(compose(g, f)));
          }
        for (const Congruence& c : cl.congruences()) {
          Quotient q = quotient(c);
          Congruence fc = cong_image(f, c);
          Quotient q2 = quotient(fc);
          std::vector<Elem> gt(q.frame->size());
          for (Elem x = 0; x < l->size(); ++x) gt[q(x)] = q2(f(x));
          for (const FramePtr& nf : small) {
            std::vector<FrameHom> from_q = enumerate_homs(q.frame, nf);
            std::vector<FrameHom> from_m = enumerate_homs(m, nf);
            std::vector<FrameHom> from_q2 = enumerate_homs(q2.frame, nf);
            for (const FrameHom& u : from_q)
              for (const FrameHom& v : from_m) {
                if (compose(u, q.map).table != compose(v, f).table) continue;
                std::size_t count = 0;
                for (const FrameHom& w : from_q2) {
                  bool ok = compose(w, q2.map).table == v.table;
                  for (Elem x = 0; x < q.frame->size() && ok; ++x) ok = w(gt[x]) == u(x);
                  count += ok;
                }
                r.check(count == 1, "C f computes the pushout along f",
                        json{{"hom", hom_to_json(f)}, {"congruence", congruence_to_json(c)}});
              }
          }
        }
      }
  }
}

// ---------------------------------------------------------------------------
// adjunction: C ⊣ P with counit χ.

inline void verify_adjunction(Recorder& r, std::size_t n, std::size_t max_total = 8) {
  n = detail::clamp(r, n, 5, "adjunction frame size");
  std::vector<Biframe> corpus = str0d_corpus(max_total);
  std::vector<Coreflection> chis;
  for (const Biframe& m : corpus) chis.push_back(coreflection_chi(m));
  for (const FramePtr& l : detail::frames_up_to(n)) {
    CongruenceFramePtr cl = congruence_lattice(l);
    Biframe cb = congruence_biframe(*cl);
    json lce = detail::frame_case(*l);
    r.guard("adjunction", lce, [&] {
      // Triangle: χ_{C L} ∘ C(η_L) = id, with η_L = ∇ onto the first part.
      Coreflection self = coreflection_chi(cb);
      std::vector<Elem> eta(l->size());
      for (Elem a = 0; a < l->size(); ++a) eta[a] = *self.first.local(cl->nabla(a));
      FrameHom eta_hom = validate_hom(l, self.first.frame, eta);
      FrameHom c_eta = cong_functor(*cl, *self.congruences, eta_hom);
      r.check(compose(self.chi.total, c_eta) == identity_hom(cl->lattice()), "χ_{C L} ∘ C η_L = id", lce);
      r.check(self.is_isomorphism(), "χ of a congruence biframe is invertible", lce);

      for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Biframe& m = corpus[i];
        const Coreflection& chi = chis[i];
        json ce = {{"frame", frame_to_json(*l)}, {"biframe", biframe_to_json(m)}};
        // Triangle: P χ_M ∘ η_{P M} = id.
        if (i == 0 || l->size() == 1) {
          for (Elem a = 0; a < chi.first.frame->size(); ++a)
            r.check(chi.chi(chi.congruences->nabla(a)) == chi.first.members[a], "P χ ∘ η = id", ce);
        }
        std::set<std::vector<Elem>> transposed;
        std::size_t homs = 0;
        for_each_hom(l, chi.first.frame, [&](const FrameHom& f) {
          ++homs;
          FrameHom cf = cong_functor(*cl, *chi.congruences, f);
          FrameHom total = compose(chi.chi.total, cf);
          r.check(is_hom(*cl->lattice(), *m.total, total.table) && preserves_parts(cb, m, total),
                  "χ ∘ C f is a biframe hom", ce);
          transposed.insert(total.table);
        });
        std::set<std::vector<Elem>> direct;
        for (const BiframeHom& h : enumerate_bihoms_on_totals(cb, m)) direct.insert(h.total.table);
        r.check(transposed.size() == homs && transposed == direct, "Frm(L, M₁) ≅ Str0DBiFrm(C L, M)", ce);
      }
    });
  }
  // Every corpus biframe is a dense quotient of the congruence biframe of
  // its first part, and χ is onto.
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    json ce = {{"biframe", biframe_to_json(corpus[i])}};
    r.check(is_surjective(chis[i].chi.total) && is_biframe_surjection(chis[i].chi), "χ is a biframe surjection", ce);
    r.check(is_dense_bihom(chis[i].chi), "χ is dense", ce);
  }
  // A biframe hom factors through a quotient iff its total part does.
  std::vector<Biframe> small = str0d_corpus(4);
  for (const Biframe& b : small)
    for (const Biframe& t : small) {
      std::vector<BiframeHom> homs = enumerate_bihoms_on_totals(b, t);
      for (const Relation& rel : brute_force_congruences(b.total, 16)) {
        Congruence theta = congruence_from_relation(b.total, rel);
        BiframeQuotient q = biframe_quotient(b, theta);
        std::vector<BiframeHom> from_q = enumerate_bihoms_on_totals(q.biframe, t);
        for (const BiframeHom& h : homs) {
          bool total_factors = leq(theta, kernel(h.total));
          bool bi_factors = false;
          for (const BiframeHom& g : from_q) bi_factors = bi_factors || compose(g.total, q.map.total) == h.total;
          r.check(total_factors == bi_factors, "factoring through a biframe quotient",
                  json{{"biframe", biframe_to_json(b)}, {"congruence", congruence_to_json(theta)}});
        }
      }
    }
}

// ---------------------------------------------------------------------------
// fibres: fibres over a frame, reflection, compactness.

inline void verify_fibres(Recorder& r, std::size_t n, std::size_t max_total = 16) {
  n = detail::clamp(r, n, 6, "fibre frame size");
  for (const FramePtr& l : detail::frames_up_to(n)) {
    json ce = detail::frame_case(*l);
    r.guard("fibre_over", ce, [&] {
      std::vector<Biframe> fibre = fibre_over(l);
      r.check(fibre.size() == 1, "the fibre over a finite frame is a singleton", ce);
      for (const Biframe& b : fibre) {
        r.check(is_str0d(b) && isomorphic(*first_part(b).frame, *l), "fibre members are str0d over L", ce);
        r.check(bool(find_biframe_isomorphism(b, congruence_biframe(l))), "the fibre contains the congruence biframe", ce);
      }
    });
  }
  for (const Biframe& m : str0d_corpus(max_total)) {
    json ce = {{"biframe", biframe_to_json(m)}};
    r.guard("compactness", ce, [&] {
      Coreflection chi = coreflection_chi(m);
      r.check(chi.is_isomorphism(), "χ is an isomorphism for finite str0d biframes", ce);
      Biframe back = from_fibre(to_fibre(m));
      r.check(bool(find_biframe_isomorphism(back, m)), "from_fibre ∘ to_fibre ≅ id", ce);
    });
  }
  // Reflection η on every object (L, C) with C ∈ C²L.
  std::vector<FramePtr> small = detail::frames_up_to(std::min<std::size_t>(n, 4));
  std::vector<FibreObject> str0d_targets;
  for (const FramePtr& l : small) {
    CongruenceFramePtr cf = congruence_lattice(l);
    CongruenceFramePtr cf2 = congruence_lattice(cf->lattice());
    for (const Congruence& c : cf2->congruences()) {
      FibreObject o{l, cf, c};
      if (o.is_str0d()) str0d_targets.push_back(o);
    }
  }
  for (const FramePtr& l : small) {
    CongruenceFramePtr cf = congruence_lattice(l);
    CongruenceFramePtr cf2 = congruence_lattice(cf->lattice());
    FibreObject id_obj{l, cf, identity_congruence(cf->lattice())};
    FibreMorphismCheck idc = check_fibre_morphism(identity_hom(l), id_obj, id_obj);
    r.check(idc.morphism && idc.final && idc.initial, "identity is a final and initial morphism", detail::frame_case(*l));
    for (const Congruence& c : cf2->congruences()) {
      FibreObject o{l, cf, c};
      json ce = {{"frame", frame_to_json(*l)}, {"cong2", congruence_to_json(c)}};
      r.guard("reflection", ce, [&] {
        Reflection eta = reflect_eta(o);
        FibreMorphismCheck fc = check_fibre_morphism(eta.eta.map, o, eta.target);
        r.check(fc.morphism && fc.final, "η is a final morphism", ce);
        r.check(eta.target.is_str0d(), "the reflection lies below 𝔇", ce);
        if (o.is_str0d()) r.check(eta.eta.frame->size() == l->size(), "η is the identity on str0d objects", ce);
        for (const FibreObject& t : str0d_targets)
          for (const FrameHom& f : enumerate_homs(l, t.base)) {
            if (!check_fibre_morphism(f, o, t).morphism) continue;
            std::size_t factorisations = 0;
            for (const FrameHom& g : enumerate_homs(eta.eta.frame, t.base))
              if (compose(g, eta.eta.map) == f && check_fibre_morphism(g, eta.target, t).morphism) ++factorisations;
            r.check(factorisations == 1, "morphisms to str0d objects factor uniquely through η", ce);
          }
      });
    }
  }
}

// ---------------------------------------------------------------------------
// category: classification of monos and extremal epis; (co)limits.

inline void verify_classification(Recorder& r, std::size_t max_total = 8) {
  std::vector<Biframe> corpus = str0d_corpus(max_total);
  std::size_t monos = 0, extremal = 0, total = 0;
  for (const Biframe& a : corpus)
    for (const Biframe& b : corpus)
      for (const BiframeHom& h : enumerate_bihoms(a, b)) {
        json ce = {{"source", biframe_to_json(a)}, {"target", biframe_to_json(b)}, {"map", bihom_table_to_json(h)}};
        r.guard("classification", ce, [&] {
          MorphismClassification c = classify_morphism(h, corpus);
          r.check(c.mono == c.dense && c.dense == c.first_part_injective, "mono ⟺ dense ⟺ injective first part", ce);
          r.check(c.extremal_epi == c.closed_quotient, "extremal epi ⟺ closed quotient", ce);
          ++total;
          monos += c.mono;
          extremal += c.extremal_epi;
        });
      }
  r.note("classified " + std::to_string(total) + " homs: " + std::to_string(monos) + " monic, " +
         std::to_string(extremal) + " extremal epic");
  // Closed quotients are in bijection with elements of the total part.
  for (const Biframe& m : corpus) {
    json ce = {{"biframe", biframe_to_json(m)}};
    r.guard("closed quotients", ce, [&] {
      std::set<std::vector<Elem>> kernels;
      for (Elem a = 0; a < m.total->size(); ++a) {
        BiframeQuotient q = closed_quotient(m, a);
        kernels.insert(kernel(q.map.total).nucleus);
        r.check(is_closed_quotient(q.map), "M → M/∇_a is a closed quotient", ce);
      }
      r.check(kernels.size() == m.total->size(), "closed quotients ↔ elements of the total part", ce);
      BiframeQuotient zero = closed_quotient(m, m.total->bottom());
      BiframeQuotient one = closed_quotient(m, m.total->top());
      r.check(zero.biframe.total->size() == m.total->size() && one.biframe.total->size() == 1,
              "M/∇_0 = M and M/∇_1 is trivial", ce);
    });
  }
}

/// Diagrams {•,•}, {•→•} and {•⇉•} over congruence biframes of frames with
/// at most n elements, checked against probes with total ≤ probe_total.
inline void verify_limits(Recorder& r, std::size_t n, std::size_t probe_total = 8) {
  n = detail::clamp(r, n, 4, "diagram frame size");
  std::vector<Biframe> probes = str0d_corpus(probe_total);
  std::vector<FramePtr> frames = detail::frames_up_to(n);
  std::vector<Biframe> objects;
  for (const FramePtr& l : frames) objects.push_back(congruence_biframe(l));
  std::size_t diagrams = 0;
  auto run = [&](const Diagram& d, const json& ce) {
    ++diagrams;
    r.guard("limit", ce, [&] {
      BiframeCone lim = limit(d);
      require_str0d(lim.object);
      UniversalCheck u = check_limit(d, lim, probes);
      r.check(true, "limit universal property", ce);
      (void)u;
    });
    r.guard("colimit", ce, [&] {
      BiframeCone colim = colimit(d);
      require_str0d(colim.object);
      check_colimit(d, colim, probes);
      r.check(true, "colimit universal property", ce);
    });
  };
  {
    Diagram empty;
    run(empty, json{{"shape", "empty"}});
    BiframeCone colim = colimit(empty);
    BiframeCone lim = limit(empty);
    r.check(bool(find_biframe_isomorphism(colim.object, congruence_biframe(chain_frame(2)))), "empty colimit is C(2)");
    r.check(lim.object.total->size() == 1, "empty limit is trivial");
  }
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t k = 0; k < objects.size(); ++k) {
      json ce = {{"objects", {frames[i]->name(), frames[k]->name()}}};
      if (i <= k) {
        Diagram pair;
        pair.names = {"X", "Y"};
        pair.objects = {objects[i], objects[k]};
        run(pair, json{{"shape", "pair"}, {"objects", ce["objects"]}});
      }
      std::vector<BiframeHom> homs = enumerate_bihoms(objects[i], objects[k]);
      for (std::size_t p = 0; p < homs.size(); ++p) {
        Diagram arrow;
        arrow.names = {"X", "Y"};
        arrow.objects = {objects[i], objects[k]};
        arrow.arrows = {{"f", 0, 1, homs[p]}};
        run(arrow, json{{"shape", "arrow"}, {"objects", ce["objects"]}, {"f", bihom_table_to_json(homs[p])}});
        for (std::size_t q = p + 1; q < homs.size(); ++q) {
          Diagram parallel = arrow;
          parallel.arrows.push_back({"g", 0, 1, homs[q]});
          run(parallel, json{{"shape", "parallel"},
                             {"objects", ce["objects"]},
                             {"f", bihom_table_to_json(homs[p])},
                             {"g", bihom_table_to_json(homs[q])}});
        }
      }
    }
  {
    Biframe c2 = congruence_biframe(chain_frame(2));
    Diagram pair;
    pair.names = {"X", "Y"};
    pair.objects = {c2, c2};
    BiframeCone p = limit(pair);
    r.check(isomorphic(*p.first_parts.object, *boolean_frame(2)) && is_str0d(p.object),
            "C(2) × C(2) is str0d over 2 × 2");
  }
  r.note(std::to_string(diagrams) + " diagrams checked against " + std::to_string(probes.size()) + " probes");
}

// ---------------------------------------------------------------------------
// clear: clear and clarifiable elements.

inline void verify_clear(Recorder& r, std::size_t max_total = 16) {
  for (const Biframe& m : str0d_corpus(max_total)) {
    json ce = {{"biframe", biframe_to_json(m)}};
    r.guard("clear", ce, [&] {
      Coreflection cor = coreflection_chi(m);
      const Frame& t = *m.total;
      std::vector<bool> clear(t.size());
      for (Elem x = 0; x < t.size(); ++x) {
        ClearnessReport rep = clearness_report(m, x, cor);
        clear[x] = rep.is_clear;
        r.check(!rep.is_clear || rep.is_clarifiable, "clear elements are clarifiable", ce);
        Elem star = cor.chi_star(x);
        Elem lhs = cor.chi_star(rep.closure);
        r.check(lhs == closure_via_adjoint(*cor.congruences, star), "χ_*(cℓ(a)) = cℓ(χ_*(a))", ce);
      }
      for (Elem x = 0; x < t.size(); ++x)
        for (Elem y = 0; y < t.size(); ++y)
          if (clear[x] && t.leq(x, y)) r.check(clear[y], "clear elements are upward closed", ce);
      for (Elem a = 0; a < m.part1.size(); ++a) {
        auto w = clear_element_for(m, m.part1[a], cor);
        r.check(w.has_value() && cor.chi_star(*w) == cor.congruences->index_of(clear_congruence(cor.first.frame, a)),
                "the clear element for c realises ∂_c", ce);
        r.check(cor.distinguished(m.part1[a]) == nabla(cor.first.frame, a), "χ_* preserves first parts", ce);
      }
      r.check(is_congruential(m, cor), "finite str0d biframes are congruential", ce);
      // Every smooth congruence is distinguished.
      std::set<Elem> distinguished;
      for (Elem x = 0; x < t.size(); ++x) distinguished.insert(cor.chi_star(x));
      for (Elem i = 0; i < cor.congruences->size(); ++i)
        if (is_smooth(*cor.congruences, cor.congruences->congruence(i)))
          r.check(distinguished.count(i) == 1, "smooth congruences are distinguished", ce);
    });
  }
  Biframe cb = congruence_biframe(chain_frame(3));
  CongruenceFramePtr cf = congruence_lattice(chain_frame(3));
  Elem a = *chain_frame(3)->find("a");
  auto for0 = clear_element_for(cb, cf->nabla(0));
  auto for_a = clear_element_for(cb, cf->nabla(a));
  r.check(for0 && *for0 == cf->delta(a), "on C(chain3) the clear element for ∇_0 is Δ_a");
  r.check(for_a && *for_a == cf->nabla(a), "on C(chain3) the clear element for ∇_a is ∇_a");
  r.check(biframe_cl(cb, cf->delta(a)) == cf->nabla(0), "on C(chain3) cℓ(Δ_a) = ∇_0");
}

// ---------------------------------------------------------------------------
// skula: the Skula biframe of finite T0 spaces.

inline void verify_skula(Recorder& r, std::size_t n) {
  n = detail::clamp(r, n, 4, "space size");
  std::vector<FiniteSpace> spaces = enumerate_spaces(n);
  for (const FiniteSpace& x : spaces) {
    json ce = {{"space", space_to_json(x)}};
    r.guard("skula", ce, [&] {
      Biframe sk = skula(x);
      r.check(is_str0d(sk), "Sk X is str0d", ce);
      r.check(bool(find_homeomorphism(space_from_biframe(sk), x)), "space of Sk X is X", ce);
      r.check(is_sober(x), "finite T0 spaces are sober", ce);
      r.check(coreflection_chi(sk).is_isomorphism(), "χ : C(τ) → Sk X is invertible", ce);
      r.check(isomorphic(*open_set_frame(x), *first_part(sk).frame), "first part of Sk X is τ", ce);
    });
  }
  const std::size_t expected[] = {0, 1, 3, 8, 24};
  r.check(spaces.size() == expected[n], "T0 space count up to homeomorphism");
  Biframe sier = skula(sierpinski_space());
  Biframe c3 = congruence_biframe(chain_frame(3));
  r.check(sier.total->size() == 4 && c3.total->size() == 4 && find_biframe_isomorphism(sier, c3),
          "Sk(Sierpiński) ≅ C(chain3)");
}

// ---------------------------------------------------------------------------
// recognizer: congruence frames among all frames.

inline void verify_recognizer(Recorder& r, std::size_t n) {
  n = detail::clamp(r, n, 8, "recognizer size");
  std::vector<FramePtr> frames = enumerate_frames(n, 8);
  std::vector<FramePtr> congruence_frames;
  for (const FramePtr& l : frames)
    if ((std::size_t{1} << l->join_irreducibles().size()) <= n) congruence_frames.push_back(congruence_lattice(l)->lattice());
  std::vector<std::string> yes;
  for (const FramePtr& m : frames) {
    json ce = detail::frame_case(*m);
    r.guard("recognizer", ce, [&] {
      std::vector<RecognizerWitness> full = recognize_congruence_frame(m);
      std::vector<RecognizerWitness> weak = recognize_quotient_of_congruence_frame(m);
      r.check(weak.size() >= full.size(), "dropping fibre maxima only adds witnesses", ce);
      bool matched = false;
      for (const FramePtr& c : congruence_frames) matched = matched || isomorphic(*c, *m);
      r.check(matched == !full.empty(), "recognizer agrees with matching against C L", ce);
      for (const RecognizerWitness& w : full)
        r.check(isomorphic(*congruence_lattice(w.first_part)->lattice(), *m), "M ≅ C(first part)", ce);
      if (m->size() <= 6) {
        oracle::EndoMapResult slow = oracle::endo_map_search(m);
        std::vector<ElementSet> a, b;
        for (const RecognizerWitness& w : full) a.push_back(w.fixed_points);
        for (const RecognizerWitness& w : weak) b.push_back(w.fixed_points);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        r.check(a == slow.with_maxima, "subframe search equals endo-map search", ce);
        r.check(b == slow.without_maxima, "subframe search equals endo-map search without fibre maxima", ce);
      }
      if (!full.empty()) yes.push_back(m->name());
    });
  }
  bool chain3 = !recognize_congruence_frame(chain_frame(3)).empty();
  r.check(!chain3, "chain3 is not a congruence frame");
  r.note(std::string("chain3: ") + (chain3 ? "YES" : "NO"));
  for (std::size_t k = 0; k <= 3; ++k) {
    bool yes = !recognize_congruence_frame(boolean_frame(k)).empty();
    r.check(yes, "2^" + std::to_string(k) + " is a congruence frame");
    r.note("2^" + std::to_string(k) + (yes ? ": YES" : ": NO"));
  }
  std::vector<RecognizerWitness> sq = recognize_congruence_frame(boolean_frame(2));
  std::set<std::string> classes;
  for (const RecognizerWitness& w : sq) classes.insert(w.first_part_class);
  r.check(sq.size() == 3 && classes == std::set<std::string>{"chain3", "2^2"}, "2^2 has three witnesses over chain3 and 2^2");
  std::string list;
  for (const std::string& s : yes) list += (list.empty() ? "" : ", ") + s;
  r.note("congruence frames: " + list);
}

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracle", "structure", "lemmas-1.x", "adjunction", "fibres",
                                              "category", "clear", "skula", "recognizer"};
  return names;
}

/// Runs one named suite with frames (or spaces) of at most `max_size`
/// elements. Each suite clamps the size to its own cap and says so.
inline VerifyReport run_suite(const std::string& name, std::size_t max_size) {
  VerifyReport report;
  report.suite = name;
  report.max_size = max_size;
  auto start = std::chrono::steady_clock::now();
  {
    Recorder r(report);
    const std::size_t corpus_total = detail::corpus_total_for(max_size);
    if (name == "oracle") verify_oracle(r, max_size);
    else if (name == "structure") verify_structure(r, max_size);
    else if (name == "lemmas-1.x") verify_lemmas(r, max_size);
    else if (name == "adjunction") verify_adjunction(r, max_size, std::min<std::size_t>(corpus_total, 8));
    else if (name == "fibres") verify_fibres(r, max_size, corpus_total);
    else if (name == "category") {
      verify_classification(r, std::min<std::size_t>(corpus_total, 8));
      verify_limits(r, max_size, std::min<std::size_t>(corpus_total, 8));
    } else if (name == "clear") verify_clear(r, corpus_total);
    else if (name == "skula") verify_skula(r, max_size);
    else if (name == "recognizer") verify_recognizer(r, max_size);
    else throw Error(ErrorKind::InvalidInput, "unknown suite \"" + name + "\"");
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace str0d
