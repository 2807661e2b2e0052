#ifndef TERRACINI_CLASSIFY_HPP
#define TERRACINI_CLASSIFY_HPP

#include <string>
#include <vector>

#include "terracini/report.hpp"

namespace terracini {

// One row of the fourfold classification table. A row matches a report when
// every populated constraint is satisfied; -1 leaves a constraint open.
// Several rows may share a label (a case reachable from different invariant
// buckets). The classifier asserts consistency with the computed invariants;
// it does not decide structural conditions like "sits in a cone over a
// curve", which is why a candidate set is a legitimate answer.
struct CaseRule {
  std::string label;
  std::string description;
  int f_min = 1, f_max = 3;
  int gamma_min = -1, gamma_max = -1;
  int r_min = -1, r_max = -1;
  int require_epsilon = -1;
  int cone = 0; // 0: free, 1: must be a cone, -1: must not be a cone
  bool smooth_possible = false;
  bool scroll_case = false;
  std::string note;
};

inline const std::vector<CaseRule> &fourfold_case_table() {
  static const std::vector<CaseRule> table = {
      {"(i)", "a cone", 1, 3, -1, -1, -1, -1, -1, 1, false, true, ""},
      {"(ii)", "sits in a 5- or 6-dimensional cone over a curve", 2, 2, -1,
       -1, -1, -1, -1, 0, false, false, ""},
      {"(ii)", "sits in a 5- or 6-dimensional cone over a curve", 1, 1, 3, 3,
       -1, -1, -1, 0, false, false, ""},
      {"(iii)", "sits in a 5-dimensional cone over a surface", 2, 2, -1, -1,
       -1, -1, -1, 0, false, false, ""},
      {"(iii)", "sits in a 5-dimensional cone over a surface", 1, 1, 2, 3,
       -1, -1, -1, 0, false, false, ""},
      {"(iv)", "the Segre product of two projective planes in P^8", 2, 2, 2,
       2, 8, 8, -1, -1, true, false, ""},
      {"(v)",
       "scroll in 3-spaces joining a rational normal scroll surface to the "
       "moving line of a dual conic",
       1, 1, 1, 2, 9, -1, -1, -1, false, true, ""},
      {"(vi)",
       "scroll in 3-spaces joining a curve to a one-dimensional family of "
       "pairwise meeting planes in a 5-space",
       1, 1, 1, 2, 9, -1, -1, -1, false, true, ""},
      {"(vii)",
       "scroll in 3-spaces swept out by spans of a one-dimensional family "
       "of curves on a surface in P^9",
       1, 1, 1, 2, 9, 9, -1, -1, false, true, ""},
      {"(viii)",
       "internal projection of the quadric Veronese fourfold from finitely "
       "many points",
       1, 1, 1, 1, 9, 14, 1, -1, true, false, ""},
      {"(ix)",
       "projection of the quadric Veronese fourfold from the plane of a "
       "conic on it",
       1, 1, 1, 1, 11, 11, 2, -1, true, false, ""},
      {"(x)",
       "projection of the quadric Veronese fourfold from the 4-space of a "
       "rational normal quartic on it",
       1, 1, 1, 1, 9, 9, -1, -1, true, false, ""},
      {"(xi)", "hyperplane section of the Segre product P^2 x P^3", 1, 1, 1,
       1, 10, 10, 2, -1, true, false, ""},
      {"(xii)",
       "sits in a cone with vertex a line over a hyperplane section of the "
       "Segre product of two planes, or with vertex a point over that Segre "
       "product",
       1, 1, 2, 2, 9, 9, -1, 0, true, false, ""},
      {"(xiii)",
       "sits in a cone with vertex a line over a projection of the quadric "
       "Veronese threefold",
       1, 1, 2, 2, 9, 11, -1, 0, false, false, ""},
      {"(xiv)",
       "sits in a 6-dimensional cone over the quadric Veronese surface", 1,
       1, 3, 3, 9, 9, -1, 0, false, false, ""},
      {"(xv)",
       "sits in a cone with vertex a line over a defective threefold lying "
       "in a cone over the quadric Veronese surface",
       1, 1, 2, 2, 9, 9, -1, 0, false, false, ""},
      {"(xvi)",
       "swept out by a 3-dimensional family of lines and singular along a "
       "linear space",
       1, 1, 2, 2, 9, 13, -1, 0, false, false, ""},
      {"(xvii)",
       "swept out by a 4-dimensional family of surfaces spanning 4-spaces, "
       "two general ones meeting at a point",
       1, 1, 2, 2, -1, -1, -1, 0, true, false, "no known example"},
      {"(xviii)",
       "its generic projection to P^9 sits in a 6-dimensional cone with "
       "vertex a 3-space over the quadric Veronese surface",
       1, 1, 3, 3, -1, -1, -1, 0, false, false, ""},
  };
  return table;
}

struct CaseHit {
  std::string label;
  std::string description;
  std::string note;
};

struct CaseMatch {
  std::vector<CaseHit> cases;
  std::string confidence; // "determined" | "candidate set"
  std::vector<std::string> rationale;

  bool contains(const std::string &label) const {
    for (const CaseHit &h : cases)
      if (h.label == label)
        return true;
    return false;
  }
};

// Maps a defective fourfold report to the set of classification cases
// consistent with its invariants and structural flags.
inline CaseMatch classify_fourfold(const InvariantReport &rep) {
  if (rep.n != 4)
    throw Error("classify_fourfold: report is not about a fourfold");
  if (rep.delta <= 0)
    throw Error("classify_fourfold: variety is not defective");
  if (rep.f < 1 || rep.f > 3)
    throw Error("classify_fourfold: fibre defect out of range");
  if (rep.epsilon == 3 && rep.gamma >= 0 && rep.gamma < 3)
    throw Error("classify_fourfold: report inconsistent (a bitangent "
                "contact locus of dimension n-1 forces the tangential one)");
  if (rep.gamma == 3 && rep.epsilon >= 0 && rep.epsilon < 3)
    throw Error("classify_fourfold: report inconsistent (epsilon >= gamma "
                "violated)");

  CaseMatch match;
  bool smooth = rep.tags.count("smooth-claimed") > 0;
  bool scroll = rep.tags.count("scroll") > 0;
  if (rep.f == 3)
    match.rationale.push_back(
        "f = 3 forces a cone over a curve or over the quadric Veronese "
        "surface");
  for (const CaseRule &rule : fourfold_case_table()) {
    if (match.contains(rule.label))
      continue; // an earlier row already admitted this case
    if (rep.f < rule.f_min || rep.f > rule.f_max)
      continue;
    if (rule.gamma_min >= 0 && rep.gamma >= 0 &&
        (rep.gamma < rule.gamma_min || rep.gamma > rule.gamma_max))
      continue;
    if (rule.r_min >= 0 && rep.r < rule.r_min)
      continue;
    if (rule.r_max >= 0 && rep.r > rule.r_max)
      continue;
    if (rule.require_epsilon >= 0 && rep.epsilon >= 0 &&
        rep.epsilon != rule.require_epsilon) {
      match.rationale.push_back("excluded " + rule.label +
                                ": epsilon mismatch");
      continue;
    }
    if (rule.cone == 1 && !(rep.is_cone || rep.f == 3)) {
      // a cone must actually have a common tangent intersection, except
      // that f = n - 1 forces the cone shape even if sampling missed it
      continue;
    }
    if (rule.cone == -1 && rep.is_cone) {
      match.rationale.push_back("excluded " + rule.label +
                                ": the variety is a cone");
      continue;
    }
    if (smooth && !rule.smooth_possible) {
      match.rationale.push_back("excluded " + rule.label +
                                ": no smooth member exists");
      continue;
    }
    if (scroll && rep.f == 1 && !rule.scroll_case) {
      match.rationale.push_back(
          "excluded " + rule.label +
          ": a scroll in 3-spaces with f = 1 is a cone or one of the three "
          "scroll families");
      continue;
    }
    match.cases.push_back({rule.label, rule.description, rule.note});
  }
  match.confidence = match.cases.size() == 1 ? "determined" : "candidate set";
  if (match.cases.empty())
    throw Error("classify_fourfold: no case matches; the report contradicts "
                "the classification");
  return match;
}

} // namespace terracini

#endif // TERRACINI_CLASSIFY_HPP
