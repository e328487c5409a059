#pragma once

#include <utility>

#include "multiplane/picard.hpp"

namespace multiplane::invariants {

/// Split Tschirnhausen bundle O(-E-xF) + O(-E-yF) on F_1.
/// The constructor enforces x >= 2, y >= 2, 2x > y, 2y > x.
class TschirnhausenSplit {
 public:
  TschirnhausenSplit(Int x, Int y);

  Int x() const { return x_; }
  Int y() const { return y_; }
  Int e() const { return x_ + y_; }

 private:
  Int x_;
  Int y_;
};

/// Numerical invariants of the triple cover S -> F_1 and of the curves
/// G = pi^*(E), M = pi^*(H) on it.
struct CoverInvariants {
  Int e = 0;
  picard::DivisorClass c1;
  Int c1_sq = 0;
  Int c1_dot_K = 0;
  Int c2 = 0;
  Int chi = 0;
  Int K2 = 0;
  Int euler_top = 0;
  Int cusps = 0;
  Int pa_B = 0;
  Int g_B = 0;
  Int g_R = 0;
  Int g_G = 0;
  Int G_sq = 0;
  Int g_M = 0;
  Int M_sq = 0;
  Int h0_M = 0;
  Int h1_M = 0;
  Int chi_M = 0;

  friend bool operator==(const CoverInvariants&, const CoverInvariants&) = default;
};

std::pair<picard::DivisorClass, Int> chern_of_split(const TschirnhausenSplit& t);

CoverInvariants cover_invariants(const TschirnhausenSplit& t);

/// Genus g of a degree-`degree` cover of a genus-`base_genus` curve with total
/// branching `branch_count`: 2g-2 = degree*(2*base_genus-2) + branch_count.
/// Throws std::invalid_argument("inconsistent ramification data") when g is
/// not a non-negative integer.
Int riemann_hurwitz_genus(Int degree, Int base_genus, Int branch_count);

/// The c_2 forced by chi(O_S) = 1 and c_1 = -2E-eF.
Int converse_c2(Int e);

}  // namespace multiplane::invariants
