#pragma once

#include <string>
#include <utility>
#include <vector>

#include "str0d/str0d.hpp"

namespace str0d::test {

inline FramePtr chain3() { return chain_frame(3); }
inline FramePtr square() { return boolean_frame(2); }

inline FramePtr frame_from(std::vector<std::string> labels, std::vector<std::pair<std::string, std::string>> order,
                           std::string name = "L") {
  return build_frame(FinitePoset::from_pairs(std::move(labels), order), std::move(name));
}

/// A hom given as images of labels in source order.
inline std::vector<Elem> table(const Frame& s, const Frame& t, const std::vector<std::pair<std::string, std::string>>& m) {
  std::vector<Elem> out(s.size());
  for (const auto& [x, y] : m) out[s.at(x)] = t.at(y);
  return out;
}

inline FrameHom hom(const FramePtr& s, const FramePtr& t, const std::vector<std::pair<std::string, std::string>>& m) {
  return validate_hom(s, t, table(*s, *t, m));
}

inline ElementSet elems(const Frame& f, const std::vector<std::string>& labels) {
  ElementSet out;
  for (const std::string& l : labels) out.push_back(f.at(l));
  return normalized(out);
}

/// chain3 → 2 sending a to `a_image`.
inline FrameHom chain3_to_2(const std::string& a_image) {
  return hom(chain3(), chain_frame(2), {{"0", "0"}, {"a", a_image}, {"1", "1"}});
}

}  // namespace str0d::test
