#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

#include "str0d/error.hpp"

namespace str0d {

/// Size caps shared by every module. Flags override the defaults; the
/// global hard cap comes from STR0D_HARD_CAP.
struct Limits {
  std::size_t hard_cap = 20;            // frames accepted from input
  std::size_t enumerate_max = 7;        // enumerate_frames
  std::size_t oracle_max = 5;           // brute_force_congruences
  std::size_t recognizer_max = 16;      // recognize_congruence_frame
  std::size_t max_join_irreducibles = 12;  // |J(L)| allowed when building C L
};

inline std::size_t hard_cap_from_env() {
  if (const char* raw = std::getenv("STR0D_HARD_CAP")) {
    try {
      long value = std::stol(raw);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
  }
  return 20;
}

inline Limits default_limits() {
  Limits limits;
  limits.hard_cap = hard_cap_from_env();
  return limits;
}

inline void require_within(std::size_t value, std::size_t bound, const char* what) {
  if (value > bound) {
    throw Error(ErrorKind::BoundExceeded,
                std::string(what) + " " + std::to_string(value) + " exceeds bound " +
                    std::to_string(bound));
  }
}

}  // namespace str0d
