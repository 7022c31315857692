#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "str0d/biframe.hpp"
#include "str0d/category.hpp"
#include "str0d/clear.hpp"
#include "str0d/skula.hpp"

namespace str0d {

using json = nlohmann::json;

namespace detail {

inline const json& required(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::InvalidInput, std::string("missing key \"") + key + "\"");
  return j.at(key);
}

inline std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const json& e : j) {
    if (!e.is_string()) throw Error(ErrorKind::InvalidInput, std::string(what) + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline Elem element(const Frame& f, const json& j) {
  if (!j.is_string()) throw Error(ErrorKind::InvalidInput, "element references must be strings");
  auto x = f.find(j.get<std::string>());
  if (!x) throw Error(ErrorKind::InvalidInput, "unknown element \"" + j.get<std::string>() + "\" of " + f.name());
  return *x;
}

inline ElementSet element_set(const Frame& f, const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "element sets must be arrays");
  ElementSet out;
  for (const json& e : j) out.push_back(element(f, e));
  return normalized(std::move(out));
}

inline std::vector<Elem> element_map(const Frame& s, const Frame& t, const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "maps must be objects from labels to labels");
  std::vector<Elem> table(s.size());
  std::vector<char> seen(s.size(), 0);
  for (auto it = j.begin(); it != j.end(); ++it) {
    Elem x = element(s, json(it.key()));
    table[x] = element(t, it.value());
    seen[x] = 1;
  }
  for (Elem x = 0; x < s.size(); ++x)
    if (!seen[x]) throw Error(ErrorKind::InvalidInput, "map is undefined at " + s.label(x));
  return table;
}

inline json label_list(const Frame& f, const ElementSet& elems) {
  json out = json::array();
  for (Elem x : elems) out.push_back(f.label(x));
  return out;
}

inline json label_map(const Frame& s, const Frame& t, const std::vector<Elem>& table) {
  json out = json::object();
  for (Elem x = 0; x < s.size(); ++x) out[s.label(x)] = t.label(table[x]);
  return out;
}

}  // namespace detail

/// Frames named "trivial", "2", "chain<n>" or "2^<k>".
inline FramePtr builtin_frame(const std::string& name) {
  auto number = [&](std::size_t from) -> std::size_t {
    std::string digits = name.substr(from);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 3) {
      throw Error(ErrorKind::InvalidInput, "unknown frame name \"" + name + "\"");
    }
    return std::stoul(digits);
  };
  if (name == "trivial") return chain_frame(1);
  if (name == "2") return chain_frame(2);
  if (name.rfind("chain", 0) == 0) {
    std::size_t n = number(5);
    if (n == 0) throw Error(ErrorKind::InvalidInput, "chain0 is not a frame");
    require_within(n, default_limits().hard_cap, "frame size");
    return chain_frame(n);
  }
  if (name.rfind("2^", 0) == 0) {
    std::size_t k = number(2);
    require_within(std::size_t{1} << std::min<std::size_t>(k, 31), default_limits().hard_cap, "frame size");
    return boolean_frame(k);
  }
  throw Error(ErrorKind::InvalidInput, "unknown frame name \"" + name + "\"");
}

/// A frame object {"name", "elements", "order"} or a built-in frame name.
inline FramePtr frame_from_json(const json& j, const Limits& limits = default_limits()) {
  if (j.is_string()) return builtin_frame(j.get<std::string>());
  std::vector<std::string> labels = detail::string_list(detail::required(j, "elements"), "elements");
  require_within(labels.size(), limits.hard_cap, "frame size");
  if (labels.empty()) throw Error(ErrorKind::InvalidInput, "a frame needs at least one element");
  const json& order = detail::required(j, "order");
  if (!order.is_array()) throw Error(ErrorKind::InvalidInput, "order must be an array of pairs");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const json& p : order) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      throw Error(ErrorKind::InvalidInput, "order entries must be [lower, upper] label pairs");
    }
    pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "L";
  return build_frame(FinitePoset::from_pairs(labels, pairs), name);
}

/// Covering pairs only; their reflexive-transitive closure is the order.
inline json frame_to_json(const Frame& f) {
  json order = json::array();
  for (Elem x = 0; x < f.size(); ++x)
    for (Elem y = 0; y < f.size(); ++y) {
      if (!f.lt(x, y)) continue;
      bool cover = true;
      for (Elem z = 0; z < f.size() && cover; ++z)
        if (f.lt(x, z) && f.lt(z, y)) cover = false;
      if (cover) order.push_back({f.label(x), f.label(y)});
    }
  return json{{"name", f.name()}, {"elements", f.labels()}, {"order", order}};
}

inline FrameHom hom_from_json(const json& j, const Limits& limits = default_limits()) {
  FramePtr s = frame_from_json(detail::required(j, "source"), limits);
  FramePtr t = frame_from_json(detail::required(j, "target"), limits);
  return validate_hom(s, t, detail::element_map(*s, *t, detail::required(j, "map")));
}

inline json hom_to_json(const FrameHom& h) {
  return json{{"source", frame_to_json(*h.source)},
              {"target", frame_to_json(*h.target)},
              {"map", detail::label_map(*h.source, *h.target, h.table)}};
}

/// A biframe object {"frame", "part1", "part2"}, or "C(<frame name>)" for
/// a congruence biframe.
inline Biframe biframe_from_json(const json& j, const Limits& limits = default_limits()) {
  if (j.is_string()) {
    std::string ref = j.get<std::string>();
    if (ref.size() < 4 || ref.rfind("C(", 0) != 0 || ref.back() != ')') {
      throw Error(ErrorKind::InvalidInput, "biframe references must look like C(<frame>)");
    }
    return congruence_biframe(builtin_frame(ref.substr(2, ref.size() - 3)));
  }
  FramePtr total = frame_from_json(detail::required(j, "frame"), limits);
  return validate_biframe(total, detail::element_set(*total, detail::required(j, "part1")),
                          detail::element_set(*total, detail::required(j, "part2")));
}

inline json biframe_to_json(const Biframe& b) {
  return json{{"frame", frame_to_json(*b.total)},
              {"part1", detail::label_list(*b.total, b.part1)},
              {"part2", detail::label_list(*b.total, b.part2)}};
}

inline json bihom_table_to_json(const BiframeHom& h) {
  return detail::label_map(*h.source.total, *h.target.total, h.total.table);
}

inline FiniteSpace space_from_json(const json& j) {
  std::vector<std::string> points = detail::string_list(detail::required(j, "points"), "points");
  require_within(points.size(), 31, "space point count");
  const json& opens = detail::required(j, "opens");
  if (!opens.is_array()) throw Error(ErrorKind::InvalidInput, "opens must be an array of point lists");
  std::vector<PointSet> sets;
  for (const json& u : opens) {
    PointSet s = 0;
    for (const std::string& p : detail::string_list(u, "open set")) {
      auto it = std::find(points.begin(), points.end(), p);
      if (it == points.end()) throw Error(ErrorKind::InvalidInput, "unknown point \"" + p + "\"");
      s |= PointSet{1} << (it - points.begin());
    }
    sets.push_back(s);
  }
  return make_space(std::move(points), std::move(sets));
}

inline json space_to_json(const FiniteSpace& x) {
  json opens = json::array();
  for (PointSet u : x.opens) {
    json set = json::array();
    for (std::size_t i = 0; i < x.points.size(); ++i)
      if (u >> i & 1) set.push_back(x.points[i]);
    opens.push_back(set);
  }
  return json{{"points", x.points}, {"opens", opens}};
}

/// {"objects": {"X": <biframe>}, "arrows": [{"name", "from", "to", "map"}],
///  "composites": [{"first", "second", "result"}]}. An arrow between two
/// C(<frame>) references may give "frameMap" on the frames instead, which
/// denotes C f.
inline Diagram diagram_from_json(const json& j, const Limits& limits = default_limits()) {
  Diagram d;
  const json& objects = detail::required(j, "objects");
  if (!objects.is_object()) throw Error(ErrorKind::InvalidInput, "objects must map names to biframes");
  std::map<std::string, std::size_t> index;
  std::map<std::size_t, FramePtr> bases;
  for (auto it = objects.begin(); it != objects.end(); ++it) {
    index[it.key()] = d.objects.size();
    d.names.push_back(it.key());
    d.objects.push_back(biframe_from_json(it.value(), limits));
    if (it.value().is_string()) {
      std::string ref = it.value().get<std::string>();
      bases[d.objects.size() - 1] = builtin_frame(ref.substr(2, ref.size() - 3));
    }
  }
  std::map<std::string, std::size_t> arrow_index;
  if (j.contains("arrows")) {
    for (const json& a : j.at("arrows")) {
      auto endpoint = [&](const char* key) {
        const json& v = detail::required(a, key);
        if (!v.is_string() || !index.count(v.get<std::string>())) {
          throw Error(ErrorKind::InvalidInput, std::string("arrow ") + key + " names an unknown object");
        }
        return index.at(v.get<std::string>());
      };
      std::string name = a.contains("name") ? a.at("name").get<std::string>() : "f" + std::to_string(d.arrows.size());
      std::size_t from = endpoint("from"), to = endpoint("to");
      const Biframe& s = d.objects[from];
      const Biframe& t = d.objects[to];
      BiframeHom map{s, t, {}};
      if (a.contains("frameMap")) {
        if (!bases.count(from) || !bases.count(to)) {
          throw Error(ErrorKind::InvalidInput, "frameMap needs C(<frame>) endpoints");
        }
        FramePtr l = bases.at(from), m = bases.at(to);
        FrameHom f = validate_hom(l, m, detail::element_map(*l, *m, a.at("frameMap")));
        CongruenceFramePtr cl = congruence_lattice(l), cm = congruence_lattice(m);
        map = validate_bihom(s, t, cong_functor(*cl, *cm, f).table);
      } else {
        map = validate_bihom(s, t, detail::element_map(*s.total, *t.total, detail::required(a, "map")));
      }
      arrow_index[name] = d.arrows.size();
      d.arrows.push_back({name, from, to, std::move(map)});
    }
  }
  if (j.contains("composites")) {
    for (const json& c : j.at("composites")) {
      auto arrow = [&](const char* key) {
        const json& v = detail::required(c, key);
        if (!v.is_string() || !arrow_index.count(v.get<std::string>())) {
          throw Error(ErrorKind::InvalidInput, std::string("composite ") + key + " names an unknown arrow");
        }
        return arrow_index.at(v.get<std::string>());
      };
      d.composites.push_back({arrow("first"), arrow("second"), arrow("result")});
    }
  }
  validate_diagram(d);
  return d;
}

inline json cone_to_json(const Diagram& d, const BiframeCone& cone) {
  json legs = json::object();
  for (std::size_t x = 0; x < d.objects.size(); ++x) legs[d.names[x]] = bihom_table_to_json(cone.legs[x]);
  return json{{"object", biframe_to_json(cone.object)},
              {"firstPart", frame_to_json(*cone.first_parts.object)},
              {"legs", legs}};
}

inline json congruence_to_json(const Congruence& c) {
  const Frame& f = *c.frame;
  json classes_out = json::array();
  for (const ElementSet& cls : classes(c)) classes_out.push_back(detail::label_list(f, cls));
  json nucleus = json::object();
  for (Elem x = 0; x < f.size(); ++x) nucleus[f.label(x)] = f.label(c(x));
  return json{{"frame", f.name()}, {"nucleus", nucleus}, {"classes", classes_out}};
}

inline json recognizer_to_json(const Frame& m, const std::vector<RecognizerWitness>& witnesses) {
  json list = json::array();
  for (const RecognizerWitness& w : witnesses) {
    list.push_back(json{{"fixedPoints", detail::label_list(m, w.fixed_points)},
                        {"cMap", detail::label_map(m, m, w.c_map)},
                        {"firstPartIsoClass", w.first_part_class},
                        {"fibreMaxima", w.fibre_maxima}});
  }
  return json{{"isCongruenceFrame", !witnesses.empty()}, {"witnesses", list}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return json::parse(buffer.str());
}

}  // namespace str0d
