#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace edtop {

enum class violation_kind {
  missing_empty_or_full,
  not_closed_under_union,
  not_closed_under_intersection,
  universe_mismatch,
  not_reflexive,
  not_transitive,
};

inline const char* to_string(violation_kind k) {
  switch (k) {
    case violation_kind::missing_empty_or_full: return "MissingEmptyOrFull";
    case violation_kind::not_closed_under_union: return "NotClosedUnderUnion";
    case violation_kind::not_closed_under_intersection: return "NotClosedUnderIntersection";
    case violation_kind::universe_mismatch: return "UniverseMismatch";
    case violation_kind::not_reflexive: return "NotReflexive";
    case violation_kind::not_transitive: return "NotTransitive";
  }
  return "?";
}

// One broken axiom, with the offending sets/points spelled out.
struct violation {
  violation_kind kind;
  std::string detail;
};

// Construction-time validation failure. Carries every violation found in one
// pass, so a family missing X *and* not closed under union reports both.
class topology_error : public std::runtime_error {
 public:
  explicit topology_error(std::vector<violation> vs)
      : std::runtime_error(format(vs)), violations_(std::move(vs)) {}

  const std::vector<violation>& violations() const noexcept { return violations_; }

  bool has(violation_kind k) const noexcept {
    for (const auto& v : violations_)
      if (v.kind == k) return true;
    return false;
  }

 private:
  static std::string format(const std::vector<violation>& vs) {
    std::string msg = "invalid topology:";
    for (const auto& v : vs) {
      msg += " [";
      msg += to_string(v.kind);
      msg += "] ";
      msg += v.detail;
      msg += ";";
    }
    return msg;
  }

  std::vector<violation> violations_;
};

class universe_mismatch : public std::invalid_argument {
 public:
  universe_mismatch(int expected, int got)
      : std::invalid_argument("universe mismatch: expected a set over " +
                              std::to_string(expected) + " points, got " +
                              std::to_string(got)),
        expected_(expected),
        got_(got) {}

  int expected() const noexcept { return expected_; }
  int got() const noexcept { return got_; }

 private:
  int expected_;
  int got_;
};

class cap_exceeded : public std::invalid_argument {
 public:
  explicit cap_exceeded(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace edtop
