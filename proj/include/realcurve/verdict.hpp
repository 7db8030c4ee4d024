#pragma once

#include <optional>
#include <string>
#include <utility>

#include "realcurve/bipoly.hpp"

namespace realcurve {

/// Three-valued decision, plus NotApplicable for flags whose theory does
/// not cover the input (components without real points of dimension one).
enum class Tri { False, True, Unknown, NotApplicable };

inline Tri tri(bool b) { return b ? Tri::True : Tri::False; }

/// Conjunction: False dominates, then Unknown.
inline Tri tri_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  if (a == Tri::NotApplicable || b == Tri::NotApplicable) return Tri::NotApplicable;
  return Tri::True;
}

inline std::string to_string(Tri t) {
  switch (t) {
    case Tri::False:
      return "no";
    case Tri::True:
      return "yes";
    case Tri::Unknown:
      return "unknown";
    default:
      return "not_applicable";
  }
}

/// Outcome of a membership test. Yes comes with a witness, No with a
/// certificate, Unknown with the bounds that were exhausted.
struct MembershipVerdict {
  Tri status = Tri::Unknown;
  std::string witness;
  std::string certificate;
  std::string bound_used;
  /// For regularity: a representation p'/q' of the function with q'
  /// nonvanishing on the real points of X.
  std::optional<std::pair<BiPoly, BiPoly>> representation;

  static MembershipVerdict yes(std::string w) { return {Tri::True, std::move(w), {}, {}, {}}; }
  static MembershipVerdict no(std::string c) { return {Tri::False, {}, std::move(c), {}, {}}; }
  static MembershipVerdict unknown(std::string b) { return {Tri::Unknown, {}, {}, std::move(b), {}}; }
};

}  // namespace realcurve
