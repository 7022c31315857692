// str0d: command-line front end. Reads JSON, writes JSON (--json) or a
// short text summary. Exit codes: 0 success, 1 domain failure or
// violation, 2 usage, I/O or parse error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "str0d/str0d.hpp"
#include "str0d/json_io.hpp"
#include "str0d/verify.hpp"

namespace {

using str0d::json;

enum class Kind { Frame, Biframe, Space, Diagram };

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Frame: return "frame";
    case Kind::Biframe: return "biframe";
    case Kind::Space: return "space";
    case Kind::Diagram: return "diagram";
  }
  return "?";
}

Kind kind_of(const json& j) {
  if (j.is_string()) return j.get<std::string>().rfind("C(", 0) == 0 ? Kind::Biframe : Kind::Frame;
  if (!j.is_object()) throw str0d::Error(str0d::ErrorKind::InvalidInput, "input must be a JSON object or a name");
  if (j.contains("objects")) return Kind::Diagram;
  if (j.contains("points")) return Kind::Space;
  if (j.contains("part1")) return Kind::Biframe;
  if (j.contains("elements")) return Kind::Frame;
  throw str0d::Error(str0d::ErrorKind::InvalidInput, "cannot tell what the input describes");
}

struct Options {
  bool json = false;
  bool brute_force = false;
  bool check = false;
  std::optional<std::size_t> max_size;
  std::string path;
  std::string suite = "all";
  std::string kind = "frames";
};

/// A report plus its one-screen text rendering; `ok` selects the exit code.
struct Outcome {
  json report;
  std::string text;
  bool ok = true;
};

void emit(const Options& o, const Outcome& out) {
  if (o.json) std::cout << out.report.dump(2) << "\n";
  else std::cout << out.text;
}

std::string join_labels(const json& list) {
  std::string s;
  for (const json& x : list) s += (s.empty() ? "" : ", ") + x.get<std::string>();
  return "{" + s + "}";
}

str0d::FramePtr load_frame(const json& j) {
  if (kind_of(j) != Kind::Frame) throw str0d::Error(str0d::ErrorKind::InvalidInput, "expected a frame");
  return str0d::frame_from_json(j);
}

str0d::Biframe load_biframe(const json& j) {
  if (kind_of(j) != Kind::Biframe) throw str0d::Error(str0d::ErrorKind::InvalidInput, "expected a biframe");
  return str0d::biframe_from_json(j);
}

// ---------------------------------------------------------------------------

Outcome cmd_validate(const json& j) {
  Kind k = kind_of(j);
  try {
    switch (k) {
      case Kind::Frame: str0d::frame_from_json(j); break;
      case Kind::Biframe: str0d::biframe_from_json(j); break;
      case Kind::Space: str0d::space_from_json(j); break;
      case Kind::Diagram: str0d::diagram_from_json(j); break;
    }
  } catch (const str0d::Error& e) {
    return {json{{"kind", kind_name(k)}, {"valid", false}, {"error", e.what()}},
            std::string("invalid ") + kind_name(k) + ": " + e.what() + "\n", false};
  }
  return {json{{"kind", kind_name(k)}, {"valid", true}}, std::string("valid ") + kind_name(k) + "\n", true};
}

json frame_summary(const str0d::Frame& f) {
  auto labels = [&](const str0d::ElementSet& s) {
    json out = json::array();
    for (str0d::Elem x : s) out.push_back(f.label(x));
    return out;
  };
  return json{{"name", f.name()},
              {"size", f.size()},
              {"shape", str0d::shape_name(f)},
              {"joinIrreducibles", labels(f.join_irreducibles())},
              {"primes", labels(str0d::prime_elements(f))},
              {"complemented", labels(str0d::complemented_elements(f))},
              {"boolean", str0d::is_boolean(f)},
              {"congruenceFrameSize", std::size_t{1} << f.join_irreducibles().size()}};
}

Outcome cmd_analyze(const json& j) {
  Outcome out;
  switch (kind_of(j)) {
    case Kind::Frame: {
      str0d::FramePtr f = str0d::frame_from_json(j);
      out.report = frame_summary(*f);
      out.report["kind"] = "frame";
      out.text = "frame " + f->name() + ": " + std::to_string(f->size()) + " elements, shape " +
                 out.report["shape"].get<std::string>() + ", J = " + join_labels(out.report["joinIrreducibles"]) +
                 ", |C L| = " + std::to_string(out.report["congruenceFrameSize"].get<std::size_t>()) + "\n";
      break;
    }
    case Kind::Biframe: {
      str0d::Biframe b = str0d::biframe_from_json(j);
      bool s = str0d::is_str0d(b);
      out.report = json{{"kind", "biframe"},
                        {"total", frame_summary(*b.total)},
                        {"part1Size", b.part1.size()},
                        {"part2Size", b.part2.size()},
                        {"str0d", s}};
      out.text = "biframe on " + std::to_string(b.total->size()) + " elements, parts " +
                 std::to_string(b.part1.size()) + " and " + std::to_string(b.part2.size()) +
                 (s ? ", strictly zero-dimensional" : ", not strictly zero-dimensional");
      if (s) {
        str0d::Coreflection cor = str0d::coreflection_chi(b);
        json clear = json::array();
        for (str0d::Elem x = 0; x < b.total->size(); ++x)
          if (str0d::clearness_report(b, x, cor).is_clear) clear.push_back(b.total->label(x));
        out.report["shape"] = str0d::biframe_shape_name(b);
        out.report["firstPart"] = str0d::shape_name(*cor.first.frame);
        out.report["congruential"] = str0d::is_congruential(b, cor);
        out.report["clearElements"] = clear;
        out.text += ", first part " + out.report["firstPart"].get<std::string>() + ", clear elements " +
                    join_labels(clear);
      }
      out.text += "\n";
      break;
    }
    case Kind::Space: {
      str0d::FiniteSpace x = str0d::space_from_json(j);
      bool t0 = str0d::is_t0(x);
      out.report = json{{"kind", "space"}, {"points", x.points.size()}, {"opens", x.opens.size()}, {"t0", t0}};
      out.text = "space with " + std::to_string(x.points.size()) + " points and " + std::to_string(x.opens.size()) +
                 " opens" + (t0 ? ", T0" : ", not T0");
      if (t0) {
        bool sober = str0d::is_sober(x);
        out.report["sober"] = sober;
        out.text += sober ? ", sober" : ", not sober";
      }
      out.text += "\n";
      break;
    }
    case Kind::Diagram: {
      str0d::Diagram d = str0d::diagram_from_json(j);
      json objects = json::object();
      for (std::size_t i = 0; i < d.objects.size(); ++i) objects[d.names[i]] = d.objects[i].total->size();
      json arrows = json::array();
      for (const auto& a : d.arrows) arrows.push_back(json{{"name", a.name}, {"from", d.names[a.from]}, {"to", d.names[a.to]}});
      out.report = json{{"kind", "diagram"}, {"objects", objects}, {"arrows", arrows}};
      out.text = "diagram with " + std::to_string(d.objects.size()) + " objects and " + std::to_string(d.arrows.size()) +
                 " arrows\n";
      break;
    }
  }
  return out;
}

Outcome cmd_cong(const json& j, bool brute_force) {
  str0d::FramePtr f = load_frame(j);
  str0d::CongruenceFramePtr cf = str0d::congruence_lattice(f);
  const str0d::Frame& lat = *cf->lattice();
  json congruences = json::array();
  for (const str0d::Congruence& c : cf->congruences()) {
    json entry = str0d::congruence_to_json(c);
    entry["label"] = str0d::congruence_label(c);
    congruences.push_back(entry);
  }
  json nab = json::object(), del = json::object(), clear = json::object();
  for (str0d::Elem a = 0; a < f->size(); ++a) {
    nab[f->label(a)] = lat.label(cf->nabla(a));
    del[f->label(a)] = lat.label(cf->delta(a));
    clear[f->label(a)] = str0d::congruence_label(str0d::clear_congruence(f, a));
  }
  Outcome out;
  out.report = json{{"frame", str0d::frame_to_json(*f)},
                    {"size", cf->size()},
                    {"boolean", str0d::is_boolean(lat)},
                    {"congruences", congruences},
                    {"nabla", nab},
                    {"delta", del},
                    {"clear", clear}};
  out.text = "C(" + f->name() + ") has " + std::to_string(cf->size()) + " congruences" +
             (str0d::is_boolean(lat) ? " and is Boolean" : "") + "\n";
  for (const json& c : congruences) out.text += "  " + c["label"].get<std::string>() + "\n";
  if (brute_force) {
    std::set<str0d::Relation> engine, brute;
    for (const str0d::Congruence& c : cf->congruences()) engine.insert(str0d::relation_of(c));
    for (const str0d::Relation& r : str0d::brute_force_congruences(f)) brute.insert(r);
    if (engine != brute) {
      throw str0d::Error(str0d::ErrorKind::OracleDisagreement,
                         "nucleus enumeration found " + std::to_string(engine.size()) + " congruences, brute force " +
                             std::to_string(brute.size()));
    }
    out.report["bruteForce"] = json{{"agrees", true}, {"count", brute.size()}};
    out.text += "brute force agrees\n";
  }
  return out;
}

Outcome cmd_str0d(const json& j) {
  str0d::Biframe b = load_biframe(j);
  try {
    str0d::require_str0d(b);
  } catch (const str0d::Error& e) {
    return {json{{"str0d", false}, {"reason", e.what()}}, std::string("not strictly zero-dimensional: ") + e.what() + "\n",
            false};
  }
  std::string first = str0d::shape_name(*str0d::first_part(b).frame);
  return {json{{"str0d", true}, {"firstPart", first}}, "strictly zero-dimensional, first part " + first + "\n", true};
}

Outcome cmd_coreflect(const json& j) {
  str0d::Biframe b = load_biframe(j);
  str0d::Coreflection cor = str0d::coreflection_chi(b);
  const str0d::Frame& src = *cor.congruences->lattice();
  const str0d::Frame& t = *b.total;
  json chi = json::object(), star = json::object();
  for (str0d::Elem i = 0; i < src.size(); ++i) chi[src.label(i)] = t.label(cor.chi(i));
  for (str0d::Elem x = 0; x < t.size(); ++x) star[t.label(x)] = src.label(cor.chi_star(x));
  bool iso = cor.is_isomorphism();
  bool congruential = str0d::is_congruential(b, cor);
  Outcome out;
  out.report = json{{"firstPart", str0d::frame_to_json(*cor.first.frame)},
                    {"chi", chi},
                    {"chiStar", star},
                    {"isIsomorphism", iso},
                    {"congruential", congruential}};
  out.text = "χ : C(" + str0d::shape_name(*cor.first.frame) + ") → M " +
             (iso ? "is an isomorphism" : "is not an isomorphism") + "\n";
  return out;
}

Outcome cmd_recognize(const json& j) {
  str0d::FramePtr m = load_frame(j);
  std::vector<str0d::RecognizerWitness> w = str0d::recognize_congruence_frame(m);
  Outcome out;
  out.report = str0d::recognizer_to_json(*m, w);
  out.text = m->name() + (w.empty() ? " is not a congruence frame\n" : " is a congruence frame\n");
  for (const auto& x : w) out.text += "  first part " + x.first_part_class + "\n";
  return out;
}

Outcome cmd_skula(const json& j) {
  if (kind_of(j) != Kind::Space) throw str0d::Error(str0d::ErrorKind::InvalidInput, "expected a space");
  str0d::FiniteSpace x = str0d::space_from_json(j);
  str0d::Biframe sk = str0d::skula(x);
  bool sober = str0d::is_sober(x);
  bool round_trip = str0d::find_homeomorphism(str0d::space_from_biframe(sk), x).has_value();
  Outcome out;
  out.report = json{{"biframe", str0d::biframe_to_json(sk)},
                    {"str0d", str0d::is_str0d(sk)},
                    {"sober", sober},
                    {"roundTrip", round_trip}};
  out.text = "Sk X: total size " + std::to_string(sk.total->size()) + ", part sizes " + std::to_string(sk.part1.size()) +
             " and " + std::to_string(sk.part2.size()) + (sober ? ", sober" : ", not sober") + "\n";
  out.ok = round_trip;
  return out;
}

Outcome cmd_cone(const json& j, bool is_limit, const Options& o) {
  if (kind_of(j) != Kind::Diagram) throw str0d::Error(str0d::ErrorKind::InvalidInput, "expected a diagram");
  str0d::Diagram d = str0d::diagram_from_json(j);
  str0d::BiframeCone cone = is_limit ? str0d::limit(d) : str0d::colimit(d);
  Outcome out;
  out.report = str0d::cone_to_json(d, cone);
  out.text = std::string(is_limit ? "limit" : "colimit") + ": total size " + std::to_string(cone.object.total->size()) +
             ", first part " + str0d::shape_name(*cone.first_parts.object) + "\n";
  if (o.check) {
    std::vector<str0d::Biframe> probes = str0d::str0d_corpus(o.max_size.value_or(8));
    str0d::UniversalCheck u = is_limit ? str0d::check_limit(d, cone, probes) : str0d::check_colimit(d, cone, probes);
    out.report["universal"] = json{{"probes", u.probes}, {"cones", u.cones}};
    out.text += "universal against " + std::to_string(u.probes) + " probes, " + std::to_string(u.cones) + " cones\n";
  }
  return out;
}

Outcome cmd_fibre(const json& j) {
  str0d::FramePtr l = load_frame(j);
  std::vector<str0d::Biframe> members = str0d::fibre_over(l);
  json list = json::array();
  for (const str0d::Biframe& b : members) list.push_back(str0d::biframe_to_json(b));
  Outcome out;
  out.report = json{{"base", str0d::frame_to_json(*l)}, {"members", list}};
  out.text = "fibre over " + l->name() + " has " + std::to_string(members.size()) + " member" +
             (members.size() == 1 ? "" : "s") + "\n";
  return out;
}

std::size_t default_suite_size(const std::string& suite) {
  if (suite == "oracle") return 5;
  if (suite == "structure" || suite == "fibres") return 6;
  if (suite == "recognizer") return 8;
  return 4;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> suites;
  if (o.suite == "all") suites = str0d::suite_names();
  else suites = {o.suite};
  bool all_passed = true;
  for (const std::string& s : suites) {
    str0d::VerifyReport r = str0d::run_suite(s, o.max_size.value_or(default_suite_size(s)));
    all_passed = all_passed && r.passed();
    if (o.json) {
      std::cout << r.to_json().dump() << "\n";
      continue;
    }
    std::cout << (r.passed() ? "PASS " : "FAIL ") << s << " (max size " << r.max_size << "): " << r.instances
              << " checks, " << r.violations.size() << " violations, " << static_cast<long>(r.elapsed_ms) << " ms\n";
    for (const std::string& n : r.notes) std::cout << "  note: " << n << "\n";
    for (const str0d::Violation& v : r.violations) std::cout << "  violation: " << v.check << "\n    " << v.counterexample.dump() << "\n";
  }
  return all_passed ? 0 : 1;
}

int cmd_enumerate(const Options& o) {
  const std::size_t n = o.max_size.value_or(4);
  std::vector<json> items;
  std::vector<std::string> lines;
  if (o.kind == "frames") {
    for (const str0d::FramePtr& f : str0d::enumerate_frames(n)) {
      items.push_back(str0d::frame_to_json(*f));
      lines.push_back(f->name() + " (" + std::to_string(f->size()) + ")");
    }
  } else if (o.kind == "biframes") {
    for (const str0d::Biframe& b : str0d::str0d_corpus(n)) {
      items.push_back(str0d::biframe_to_json(b));
      lines.push_back(str0d::biframe_shape_name(b));
    }
  } else if (o.kind == "spaces") {
    for (const str0d::FiniteSpace& x : str0d::enumerate_spaces(n)) {
      items.push_back(str0d::space_to_json(x));
      std::string opens;
      for (str0d::PointSet u : x.opens) opens += (opens.empty() ? "" : " ") + str0d::point_set_label(x.points, u);
      lines.push_back(std::to_string(x.points.size()) + " points: " + opens);
    }
  }
  for (std::size_t i = 0; i < items.size(); ++i) std::cout << (o.json ? items[i].dump() : lines[i]) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite frames, congruence frames and strictly zero-dimensional biframes"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit JSON instead of text");
  app.add_option("--max-size", o.max_size, "Size bound for verify, enumerate and universal-property probes");
  app.add_flag("--brute-force", o.brute_force, "Cross-check cong against partition search");

  auto with_path = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("path", o.path, "JSON input file")->required();
    sub->fallthrough();
    return sub;
  };
  CLI::App* validate = with_path("validate", "Check a frame, biframe, space or diagram file");
  CLI::App* analyze = with_path("analyze", "Summarise a frame, biframe, space or diagram");
  CLI::App* cong = with_path("cong", "Congruence frame of a frame with ∇, Δ and ∂ tables");
  CLI::App* str0d_cmd = with_path("str0d", "Check strict zero-dimensionality of a biframe");
  CLI::App* coreflect = with_path("coreflect", "The coreflection χ of a str0d biframe");
  CLI::App* recognize = with_path("recognize", "Decide whether a frame is a congruence frame");
  CLI::App* skula_cmd = with_path("skula", "Skula biframe of a finite T0 space");
  CLI::App* limit_cmd = with_path("limit", "Limit of a diagram of str0d biframes");
  CLI::App* colimit_cmd = with_path("colimit", "Colimit of a diagram of str0d biframes");
  CLI::App* fibre = with_path("fibre", "Str0d biframes with the given first part");
  for (CLI::App* sub : {limit_cmd, colimit_cmd})
    sub->add_flag("--check", o.check, "Check the universal property against the biframe corpus");

  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  verify->fallthrough();
  std::vector<std::string> suite_choices = str0d::suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", o.suite, "Suite name or all")->check(CLI::IsMember(suite_choices));

  CLI::App* enumerate = app.add_subcommand("enumerate", "List isomorphism classes up to --max-size");
  enumerate->fallthrough();
  enumerate->add_option("--kind", o.kind, "frames, biframes or spaces")
      ->check(CLI::IsMember({"frames", "biframes", "spaces"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return cmd_verify(o);
    if (*enumerate) return cmd_enumerate(o);
    json input = str0d::read_json_file(o.path);
    Outcome out;
    if (*validate) out = cmd_validate(input);
    else if (*analyze) out = cmd_analyze(input);
    else if (*cong) out = cmd_cong(input, o.brute_force);
    else if (*str0d_cmd) out = cmd_str0d(input);
    else if (*coreflect) out = cmd_coreflect(input);
    else if (*recognize) out = cmd_recognize(input);
    else if (*skula_cmd) out = cmd_skula(input);
    else if (*limit_cmd) out = cmd_cone(input, true, o);
    else if (*colimit_cmd) out = cmd_cone(input, false, o);
    else if (*fibre) out = cmd_fibre(input);
    emit(o, out);
    return out.ok ? 0 : 1;
  } catch (const str0d::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 2;
  }
}
