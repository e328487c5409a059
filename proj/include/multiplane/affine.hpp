#pragma once

// Affine charts of F_h and resultant elimination on them.
//
// Each chart sets one base coordinate (s or t) and one fiber coordinate (z or
// w) to 1. The remaining base coordinate is called u and the remaining fiber
// coordinate v; a chart polynomial is stored as a polynomial in v whose
// coefficients are polynomials in u.

#include <string>
#include <utility>
#include <vector>

#include "multiplane/coxring.hpp"
#include "multiplane/upoly.hpp"

namespace multiplane::affine {

using coxring::BiPoly;
using picard::DivisorClass;
using picard::HirzebruchSurface;

enum class Chart { t1_w1, s1_w1, t1_z1, s1_z1 };

inline constexpr Chart kAllCharts[] = {Chart::t1_w1, Chart::s1_w1, Chart::t1_z1, Chart::s1_z1};

/// "t=1,w=1" style label.
std::string chart_name(Chart c);
/// The boundary curves of F_h not visible in the chart.
std::string points_missed(Chart c);

enum class Var { u, v };

struct AffinePoly {
  Chart chart = Chart::t1_w1;
  std::vector<UPoly> coeffs;  // coeffs[k] multiplies v^k

  AffinePoly() = default;
  AffinePoly(Chart c, std::vector<UPoly> cs);

  int degree_v() const { return static_cast<int>(coeffs.size()) - 1; }
  int degree_u() const;
  bool is_zero() const { return coeffs.empty(); }
  UPoly coeff_v(int k) const;
  UPoly leading_v() const;
  Rational coeff(int a, int b) const;  // coefficient of u^a v^b

  friend bool operator==(const AffinePoly&, const AffinePoly&) = default;
};

AffinePoly operator+(const AffinePoly& a, const AffinePoly& b);
AffinePoly operator-(const AffinePoly& a, const AffinePoly& b);
AffinePoly operator*(const AffinePoly& a, const AffinePoly& b);

/// Builds a chart polynomial from explicit terms {u-exponent, v-exponent, c}.
struct AffineTerm {
  int a;
  int b;
  Rational c;
};
AffinePoly from_terms(Chart chart, const std::vector<AffineTerm>& terms);

AffinePoly dehomogenize(const BiPoly& p, Chart chart);
/// Inverse of dehomogenize for the given class. Throws std::invalid_argument
/// when a term does not fit the class.
BiPoly rehomogenize(const AffinePoly& p, const HirzebruchSurface& s, DivisorClass klass);

AffinePoly partial(const AffinePoly& p, Var var);

/// p(u - lambda v, v): in the new coordinate u' = u + lambda v.
AffinePoly shear(const AffinePoly& p, const Rational& lambda);

/// Exchanges the roles of u and v.
AffinePoly swap_vars(const AffinePoly& p);

/// p(u, v0) and p(u0, v).
UPoly substitute_v(const AffinePoly& p, const Rational& v0);
UPoly substitute_u(const AffinePoly& p, const Rational& u0);

/// Integer form: every coefficient polynomial scaled by one common positive
/// rational so that all entries are integral (not made primitive).
std::vector<zpoly::ZPoly> integer_coeffs(const AffinePoly& p, Rational* scale = nullptr);

/// Sylvester resultant eliminating `var`; returns a polynomial in the other
/// variable. Zero iff p and q share a factor of positive degree in `var`
/// (or one of them is zero).
UPoly resultant(const AffinePoly& p, const AffinePoly& q, Var var = Var::v);

/// Degree-one subresultant sigma1 * v + sigma0 of p and q with respect to v.
/// At a value u0 where the leading v-coefficient of p does not vanish and
/// sigma1(u0) != 0, gcd(p(u0,v), q(u0,v)) has degree at most one and its
/// root (when res(u0) = 0) is -sigma0(u0)/sigma1(u0). Returns {0, 0} when no
/// degree-one subresultant exists.
std::pair<UPoly, UPoly> first_subresultant(const AffinePoly& p, const AffinePoly& q);

/// sigma1^d * p(u, -sigma0/sigma1) where d = degree_v(p).
UPoly substitute_rational(const AffinePoly& p, const UPoly& sigma0, const UPoly& sigma1);

/// gcd over Q[u] of the v-coefficients (monic; zero for p = 0).
UPoly content_v(const AffinePoly& p);

}  // namespace multiplane::affine
