#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "multiplane/zpoly.hpp"

namespace multiplane {

using Rational = mpq_class;

/// Dense univariate polynomial over Q, low degree first, trimmed.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, int degree);
  /// The polynomial u - root.
  static UPoly linear_root(const Rational& root);
  static UPoly from_integer(const zpoly::ZPoly& p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& c);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
  friend UPoly operator*(const Rational& c, UPoly a) { return a *= c; }
  UPoly operator-() const;
  friend bool operator==(const UPoly&, const UPoly&) = default;

  UPoly derivative() const;
  UPoly monic() const;
  UPoly pow(unsigned n) const;

  /// Common denominator and primitive integer form: *this = scale * result.
  zpoly::ZPoly primitive_integer(Rational* scale = nullptr) const;

  std::string to_string(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);
UPoly rem(const UPoly& a, const UPoly& b);
/// a/b when b divides a; throws std::domain_error otherwise.
UPoly exact_div(const UPoly& a, const UPoly& b);
bool divides(const UPoly& b, const UPoly& a);

/// Monic gcd over Q; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly gcd_univariate(const UPoly& a, const UPoly& b);
/// Monic product of the distinct irreducible factors.
UPoly squarefree_part(const UPoly& a);
bool is_squarefree(const UPoly& a);

/// Splits the roots of the squarefree `radical` by their multiplicity in
/// `target`: returns monic (multiplicity, factor) pairs with increasing
/// multiplicity whose product is `radical`. Every root of `radical` must be a
/// root of `target`.
std::vector<std::pair<int, UPoly>> multiplicity_strata(const UPoly& radical, const UPoly& target);

/// Number of roots in the complex plane counted without multiplicity.
int distinct_root_count(const UPoly& a);

}  // namespace multiplane
