#pragma once

// Triple covers of F_1 from a split Tschirnhausen bundle: the structure
// polynomials, the discriminant curve, and exact certificates for the
// generality conditions on it.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "multiplane/affine.hpp"
#include "multiplane/coxring.hpp"
#include "multiplane/invariants.hpp"

namespace multiplane::branch {

using affine::AffinePoly;
using affine::Chart;
using coxring::BiPoly;
using invariants::TschirnhausenSplit;

struct TripleCoverSections {
  TschirnhausenSplit split;
  BiPoly a, b, c, d;
  std::uint64_t seed = 0;
  std::int64_t coeff_bound = 0;

  /// Validates the four classes (1,x), (1,2x-y), (1,2y-x), (1,y) and a, d != 0.
  TripleCoverSections(TschirnhausenSplit split, BiPoly a, BiPoly b, BiPoly c, BiPoly d, std::uint64_t seed = 0,
                      std::int64_t coeff_bound = 0);
};

/// Classes of a, b, c, d for the split.
std::vector<picard::DivisorClass> section_classes(const TschirnhausenSplit& t);

TripleCoverSections sample_sections(const TschirnhausenSplit& t, std::uint64_t seed, std::int64_t coeff_bound);

struct StructurePolys {
  BiPoly A, B, C;
};

/// A = a^2 - bd, B = ad - bc, C = d^2 - ac.
StructurePolys structure_polys(const TripleCoverSections& t);

/// B^2 - 4AC; requires class(A) + class(C) = 2 class(B).
BiPoly discriminant(const BiPoly& A, const BiPoly& B, const BiPoly& C);
BiPoly discriminant(const TripleCoverSections& t);

/// No repeated component, decided in all four charts.
bool is_squarefree(const BiPoly& D);

/// Chart-level test: v-content squarefree and the primitive part has a
/// nonzero discriminant in v.
bool is_squarefree(const AffinePoly& f);

enum class SingularityKind { node, cusp, other };
SingularityKind kind_of(int milnor);
std::string to_string(SingularityKind k);

/// A group of singular points sharing one Milnor number: the roots of
/// `factor` (in the census coordinate u' = u + lambda v of `chart`, after the
/// base shear) with v = -sigma0/sigma1 at each root.
struct EliminantFactor {
  Chart chart = Chart::t1_w1;
  UPoly factor;
  UPoly sigma0, sigma1;
  Rational lambda;
  int milnor = 0;

  int point_count() const { return factor.degree(); }
};

struct SingularPoint {
  Chart chart = Chart::t1_w1;
  std::size_t factor_index = 0;  // into CensusResult::factors
  int root_index = 0;            // which root of that factor
  int milnor = 0;
  SingularityKind kind = SingularityKind::other;
};

struct CensusOptions {
  int max_shear_attempts = 8;
  bool all_charts = false;
};

struct CensusResult {
  std::vector<EliminantFactor> factors;
  std::vector<std::string> charts;  // charts that were searched
  int shear_attempts = 0;            // fiber-mixing shears tried in the main chart

  int n_points() const;
  /// One entry per point, sorted.
  std::vector<int> milnor_profile() const;
  std::vector<SingularPoint> points() const;
};

class ShapePositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Singular points of f = 0 inside one chart. The sheared coordinate is
/// u' = u + lambda v; attempt 0 uses lambda = 0, later attempts draw lambda
/// from `shear_seed`. Throws ShapePositionError after max_attempts.
std::vector<EliminantFactor> census_affine(const AffinePoly& f, std::uint64_t shear_seed, int max_attempts,
                                           int* attempts_used = nullptr);

/// Singular points of the curve D = 0 on F_h. D must be squarefree.
CensusResult singularity_census(const BiPoly& D, std::uint64_t shear_seed, const CensusOptions& opts = {});

struct EIntersection {
  int count = 0;
  bool distinct = false;
};

class ContainsEError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Restriction of D to the negative section. Throws ContainsEError when D
/// vanishes there.
EIntersection check_on_E(const BiPoly& D);

/// True iff every sampled fiber restriction is a squarefree binary form of
/// degree sigma with sigma distinct roots. Fibers are drawn from `seed`.
bool check_fibers(const BiPoly& D, int n_samples, std::uint64_t seed);

/// Fiber content is trivial in the charts t=1,w=1 and s=1,w=1, and D does not
/// vanish on z=0 or on w=0: no fiber, E, or w=0 component splits off.
bool irreducibility_proxy(const BiPoly& D);

struct BranchReport {
  int e = 0;
  picard::DivisorClass discriminant_class;
  bool discriminant_class_ok = false;
  bool squarefree = false;
  std::string census_status;  // "ok", "skipped", or the failure message
  int n_singular_points = 0;
  std::vector<int> milnor_profile;
  bool all_cusps = false;
  int expected_cusps = 0;
  bool cusp_count_matches = false;
  int E_intersection_count = 0;
  bool E_intersection_distinct = false;
  int fiber_samples = 0;
  bool fiber_branch_ok = false;
  bool irreducible_proxy = false;
  std::string irreducibility = "proxy";
  bool general = false;

  friend bool operator==(const BranchReport&, const BranchReport&) = default;
};

struct VerifyOptions {
  int fiber_samples = 5;
  CensusOptions census;
};

/// Runs every check. The shear and fiber seeds derive from t.seed, so the
/// report is a function of the stored sections and seed alone.
BranchReport verify_general_cover(const TripleCoverSections& t, const VerifyOptions& opts = {});

class RetryExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GeneralCover {
  TripleCoverSections sections;
  BranchReport report;
  int attempts = 0;
};

/// Samples with seed, seed+1, ... until the report is general.
GeneralCover construct_general_cover(const TschirnhausenSplit& t, std::uint64_t seed, std::int64_t coeff_bound,
                                     int retries, const VerifyOptions& opts = {});

}  // namespace multiplane::branch
