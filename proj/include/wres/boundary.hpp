#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "wres/symbols.hpp"
#include "wres/units.hpp"

namespace wres {

// One term of the boundary correction: orders r, l of the two symbols,
// derivative counts k, j and the tangential multi-index size |alpha|.
struct CaseIndex {
  int r = -1;
  int l = -1;
  int k = 0;
  int j = 0;
  int alpha = 0;

  std::string str() const;
  friend bool operator==(const CaseIndex& a, const CaseIndex& b) {
    return std::tie(a.r, a.l, a.k, a.j, a.alpha) == std::tie(b.r, b.l, b.k, b.j, b.alpha);
  }
};

// All cases with r - k - |alpha| + l - j - 1 = -n, r <= -p1, l <= -p2.
// Order: highest r + l first; within it |alpha|, j, k descending, then r descending.
// Reports reorder cases to follow the scenario's label list.
std::vector<CaseIndex> enumerate_cases(int n, int p1, int p2);

enum class TracePath { Symbolic, Matrix };

// General: weight (-i)^{|alpha|+j+k+1} / (alpha! (j+k+1)!).
// Displayed: the weight is dropped (unit coefficient), as in the displayed
// single-case formulas of the dimension 3 and 5 computations.
enum class WeightConvention { General, Displayed };

struct EvalOptions {
  TracePath trace = TracePath::Symbolic;
  WeightConvention weight = WeightConvention::General;
  // Cosphere measure; empty means the true measure of S^{n-2}.
  std::optional<ScalarPoly> cosphere_measure;
  // Replace dx' by Vol_dM (integration over a flat boundary).
  bool integrate_boundary = false;
  // Apply the normal-coordinate identity to connection placeholders.
  bool normal_coordinates = true;
};

GaussianRational case_weight(const CaseIndex& c, WeightConvention w);

// The integrand before the xi_n integration: trace, cosphere integral and the
// normal-coordinate reduction applied; coefficients free of a_j, b_u.
RationalXi case_integrand(const BoundaryModel& m, const CaseIndex& c, int p1, int p2,
                          const EvalOptions& opt = {});
UnitValue eval_case(const BoundaryModel& m, const CaseIndex& c, int p1, int p2,
                    const EvalOptions& opt = {});

struct Check {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct ExpectedValue {
  UnitValue value;
  std::string source;
};

struct Scenario {
  std::string name;
  int n = 4;
  int p1 = 1;
  int p2 = 1;
  AlgebraSignature sig;
  EvalOptions options;
  std::map<std::string, ExpectedValue> expected_cases;  // keyed by case label
  std::optional<ExpectedValue> expected_total;
  // Extra label per case; cases not listed use CaseIndex::str().
  std::vector<std::pair<CaseIndex, std::string>> labels;
  // When set, the report also evaluates every case under this weight convention.
  std::optional<WeightConvention> alternative_weight;

  std::string label_of(const CaseIndex& c) const;
  BoundaryModel model() const;
};

// Scenario registry; throws "unregistered scenario" for unknown (n, p1, p2).
Scenario find_scenario(int n, int p1, int p2);
std::vector<Scenario> all_scenarios();
// Scenario with an overridden signature (p + q must equal n).
Scenario with_signature(Scenario s, int p, int q);

struct CaseResult {
  CaseIndex index;
  std::string label;
  UnitValue value;
  std::optional<UnitValue> alternative;
};

struct BoundaryReport {
  std::string scenario;
  int n = 0;
  int p1 = 0;
  int p2 = 0;
  int p = 0;
  int q = 0;
  std::vector<CaseResult> cases;
  UnitValue total;
  std::optional<UnitValue> alternative_total;
  std::vector<Check> checks;

  bool all_pass() const;
};

// Sum of per-case values (merged in enumeration order).
BoundaryReport phi_total(const Scenario& s);
BoundaryReport phi_total(const Scenario& s, TracePath path);

enum class ResKind { Res11, Res21, Res22, Res23, Res21_51, Res22_51 };

std::optional<ResKind> parse_res_kind(const std::string& name);
std::string res_kind_name(ResKind k);

struct ResPartial {
  ResKind kind;
  UnitValue value;        // integrated over dM
  UnitValue igrb_multiple;  // value = multiple * I_Gr,b with I_Gr,b = -(n-1) h'(0) Vol_dM
};

ResPartial res_partial(ResKind kind);
// Unit carried by the I_Gr,b multiple.
inline const std::string igrb_unit = "I_Gr,b";

}  // namespace wres
