#pragma once

// Bigraded section algebra of F_h in the homogeneous coordinates s, t, z, w.
//
// Grading: deg s = deg t = f, deg z = e, deg w = e + h f. A monomial
// s^i t^j z^k w^l therefore has class (k + l, i + j + h l), and z = 0 cuts out
// the negative section.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "multiplane/picard.hpp"
#include "multiplane/upoly.hpp"

namespace multiplane::coxring {

using picard::DivisorClass;
using picard::HirzebruchSurface;

struct Exponent {
  int i = 0;  // s
  int j = 0;  // t
  int k = 0;  // z
  int l = 0;  // w

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

DivisorClass class_of(const Exponent& m, const HirzebruchSurface& s);

enum class CoxVar { s, t, z, w };

/// Raised when a coefficient list does not match its declared class.
class HomogeneityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BiPoly {
 public:
  using Terms = std::map<Exponent, Rational>;

  /// The zero section of the given class.
  BiPoly(HirzebruchSurface surface, DivisorClass klass);
  /// Validates homogeneity; zero coefficients are dropped.
  BiPoly(HirzebruchSurface surface, DivisorClass klass, Terms terms);

  static BiPoly monomial(const HirzebruchSurface& surface, const Exponent& m, const Rational& c = 1);
  /// The coordinate function s, t, z or w as a section of its class.
  static BiPoly variable(const HirzebruchSurface& surface, CoxVar v);

  const HirzebruchSurface& surface() const { return surface_; }
  const DivisorClass& klass() const { return klass_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Exponent& m) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  void require_compatible(const BiPoly& o, const char* op) const;

  HirzebruchSurface surface_;
  DivisorClass klass_;
  Terms terms_;
};

BiPoly mul(const BiPoly& a, const BiPoly& b);
BiPoly scalar_mul(const BiPoly& a, const Rational& c);

/// Monomials of the given class, ordered by l ascending then by descending
/// power of s. Empty when sigma < 0.
std::vector<Exponent> monomial_basis(DivisorClass d, const HirzebruchSurface& s);

/// Formal partial derivative; the class drops by the class of the variable.
BiPoly partial(const BiPoly& p, CoxVar v);

/// Every basis monomial gets a nonzero integer coefficient drawn uniformly
/// from [-coeff_bound, coeff_bound]. Deterministic in `seed`.
BiPoly random_section(DivisorClass d, const HirzebruchSurface& s, std::uint64_t seed, std::int64_t coeff_bound);

/// Binary form sum coeffs[k] x^k y^(n-k) of formal degree n = coeffs.size()-1.
struct BinaryForm {
  std::vector<Rational> coeffs;

  int formal_degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const;
  /// Dehomogenization y = 1.
  UPoly affine() const;
  /// Multiplicity of the root y = 0 (the point x/y = infinity).
  int multiplicity_at_infinity() const;
  /// No repeated root on P^1 (false for the zero form).
  bool is_squarefree() const;
  int distinct_root_count() const;
};

/// Resultant of two binary forms with their formal degrees; zero iff they
/// share a root on P^1 (or a form is zero).
Rational binary_resultant(const BinaryForm& f, const BinaryForm& g);

/// Restriction to the fiber over (s0 : t0): a binary form in (z, w) of degree
/// sigma, coeffs[k] the coefficient of z^k w^(sigma-k).
BinaryForm restrict_to_fiber(const BiPoly& p, const Rational& s0, const Rational& t0);

/// Restriction to the negative section z = 0: a form in (s, t) of degree
/// phi - h sigma, coeffs[i] the coefficient of s^i t^(n-i).
BinaryForm restrict_to_negative_section(const BiPoly& p);

/// Restriction to the section w = 0 (class e + h f): a form in (s, t) of
/// degree phi.
BinaryForm restrict_to_positive_section(const BiPoly& p);

/// Linear change of base coordinates s -> a s + b t, t -> c s + d t. The
/// matrix must be invertible; the class is unchanged.
using BaseMatrix = std::array<std::int64_t, 4>;
BiPoly base_change(const BiPoly& p, const BaseMatrix& m);

/// Rank over Q of the coefficient vectors of sections of one class.
int coefficient_rank(const std::vector<BiPoly>& polys);

}  // namespace multiplane::coxring
