#pragma once

// The degree-m construction on F_h: a curve Gbar of class (m, l), a general
// Hbar of class (m, l+1), the complete intersection Z = Gbar . Hbar, and the
// net of curves through Z spanned by Hbar and the fiber pencil times Gbar.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "multiplane/branch.hpp"
#include "multiplane/coxring.hpp"
#include "multiplane/picard.hpp"

namespace multiplane::construct {

using coxring::BiPoly;
using picard::DivisorClass;
using picard::HirzebruchSurface;

struct ConstructionParams {
  Int m;
  Int h;
  Int ell;

  /// Enforces m >= 3, h >= 0, ell >= m*h.
  ConstructionParams(Int m, Int h, Int ell);

  HirzebruchSurface surface() const { return HirzebruchSurface(h); }
  DivisorClass gbar_class() const { return {m, ell}; }
  DivisorClass hbar_class() const { return {m, ell + 1}; }
};

struct ParamSolution {
  Int h;
  Int ell;
  Int k;

  friend bool operator==(const ParamSolution&, const ParamSolution&) = default;
};

/// All (h, ell) with e = 2 ell - 3h + 2, ell >= 3h, h >= 0, sorted by h;
/// k = (h - e)/2. Requires e >= 4.
std::vector<ParamSolution> params_for_e(Int e);

Int gbar_selfintersection(const ConstructionParams& p);
Int z_length(const ConstructionParams& p);
/// Hbar^2 - length(Z).
Int map_degree(const ConstructionParams& p);
/// h0(Hbar) - length(Z), reported as computed.
Int expected_net_dim(const ConstructionParams& p);
/// Number of monomial sections of a class.
Int h0(DivisorClass d, const HirzebruchSurface& s);

struct NetOptions {
  std::int64_t coeff_bound = 20;
  int retries = 32;
  branch::CensusOptions census;
};

struct NetDescription {
  NetDescription(ConstructionParams p, BiPoly g, BiPoly h) : params(p), gbar(std::move(g)), h0bar(std::move(h)) {}

  ConstructionParams params;
  BiPoly gbar;
  BiPoly h0bar;
  Int z_length = 0;
  Int map_degree = 0;
  Int expected_net_dim = 0;
  Int gbar_genus = 0;
  std::vector<BiPoly> net_basis;
  int net_rank = 0;
  bool smooth_gbar = false;
  bool z_reduced = false;
  bool members_contain_z = false;
  int gbar_attempts = 0;
  int hbar_attempts = 0;
};

class NetRetryExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Smoothness of a curve on F_h: squarefree with an empty singular census.
bool is_smooth(const BiPoly& g, std::uint64_t shear_seed, const branch::CensusOptions& opts = {});

struct Transversality {
  bool boundary_disjoint = false;  // no common point on t=0 or w=0
  bool reduced = false;            // eliminant squarefree of full degree
  UPoly eliminant;                 // in the base coordinate of chart t=1,w=1
  UPoly sigma0, sigma1;            // common point v = -sigma0/sigma1
};

/// Certifies that g and h meet in deg = g.h distinct transverse points, all
/// inside the chart t=1,w=1.
Transversality check_transversal(const BiPoly& g, const BiPoly& h);

/// True iff p vanishes at every point of the reduced scheme described by tr.
bool contains_scheme(const BiPoly& p, const Transversality& tr);

NetDescription build_net(const ConstructionParams& p, std::uint64_t seed, const NetOptions& opts = {});

struct TripleConsistencyRow {
  ParamSolution params;
  Int z_length = 0;
  Int gbar_sq = 0;
  Int hbar_dot_gbar = 0;
  Int map_degree = 0;
  bool ok = false;
};

struct TripleConsistency {
  Int e = 0;
  std::vector<TripleConsistencyRow> rows;
  bool ok = false;
};

/// Links the split (x, y) to the m = 3 construction for e = x + y.
TripleConsistency triple_consistency(Int x, Int y);

}  // namespace multiplane::construct
