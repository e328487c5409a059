#pragma once

// Cremona equivalence of simpler multiple planes via De Jonquieres maps.

#include <string>
#include <tuple>
#include <vector>

#include "multiplane/checked.hpp"

namespace multiplane::cremona {

/// A degree-m multiple plane whose branch curve has degree 2e and a point of
/// multiplicity 2e - 2m + 2 at the pencil center.
struct MultiplaneClass {
  Int m;
  Int e;

  /// Enforces m >= 3 and e >= m - 1.
  MultiplaneClass(Int m, Int e);

  Int branch_degree() const { return 2 * e; }
  Int center_multiplicity() const { return 2 * e - 2 * m + 2; }
};

/// Points of intersection absorbed by the simple base points of a degree-d
/// De Jonquieres map sending the e' plane to the e plane. Requires d >= 1 and
/// e_prime >= e; both closed forms are evaluated and must agree.
Int dejonquieres_x(Int m, Int e, Int e_prime, Int d);

/// 0 <= x <= 2d - 2; cross-checked against e >= e' + (m-2)(d-1).
bool dejonquieres_feasible(Int m, Int e, Int e_prime, Int d);

enum class Verdict { equivalent_iff_isomorphic, not_equivalent };
std::string to_string(Verdict v);

struct FeasibilityRow {
  Int d;
  Int x;
  bool feasible;
};

struct CremonaResult {
  Int m = 0;
  Int e = 0;        // normalized: e <= e_prime
  Int e_prime = 0;
  Int d_max = 0;
  std::vector<FeasibilityRow> table;
  std::vector<Int> feasible_degrees;
  Verdict verdict = Verdict::not_equivalent;
};

/// Sweeps d = 1..d_max. Throws std::invalid_argument on degree mismatch and
/// std::logic_error if the sweep disagrees with the closed-form criterion.
CremonaResult cremona_equivalent(const MultiplaneClass& a, const MultiplaneClass& b, Int d_max = 1000);

/// (degree, multiplicity at p, simple points) of the contracted curve of a
/// degree-d De Jonquieres map; d >= 2.
std::tuple<Int, Int, Int> delta_check(Int d);

/// True when the classes e0, e0+1, ..., e0+n of degree m are pairwise not
/// equivalent.
bool pairwise_distinct_family(Int m, Int e0, Int n, Int d_max = 1000);

}  // namespace multiplane::cremona
