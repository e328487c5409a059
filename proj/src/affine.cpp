#include "multiplane/affine.hpp"

#include <map>
#include <stdexcept>

namespace multiplane::affine {

namespace {

bool base_is_s(Chart c) { return c == Chart::t1_w1 || c == Chart::t1_z1; }
bool fiber_is_z(Chart c) { return c == Chart::t1_w1 || c == Chart::s1_w1; }

void trim(std::vector<UPoly>& cs) {
  while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
}

using ZRowPoly = std::vector<zpoly::ZPoly>;

// Writes v^shift * p into one matrix row; cols[c] is the v-degree of column c.
void put_shifted(zpoly::ZMatrix& mat, std::size_t row, const ZRowPoly& p, int shift,
                 const std::vector<std::size_t>& cols) {
  for (std::size_t c = 0; c < cols.size(); ++c) {
    int k = static_cast<int>(cols[c]) - shift;
    if (k >= 0 && k < static_cast<int>(p.size())) mat[row][c] = p[static_cast<std::size_t>(k)];
  }
}

zpoly::ZPoly minor_with(const ZRowPoly& zp, const ZRowPoly& zq, int m, int n, std::size_t last_col_degree) {
  const std::size_t N = static_cast<std::size_t>(m + n - 2);
  std::vector<std::size_t> cols;
  for (int d = m + n - 2; d >= 2; --d) cols.push_back(static_cast<std::size_t>(d));
  cols.push_back(last_col_degree);
  zpoly::ZMatrix mat(N, std::vector<zpoly::ZPoly>(N));
  std::size_t row = 0;
  for (int r = n - 2; r >= 0; --r) put_shifted(mat, row++, zp, r, cols);
  for (int r = m - 2; r >= 0; --r) put_shifted(mat, row++, zq, r, cols);
  return zpoly::determinant(std::move(mat));
}

UPoly scaled(const zpoly::ZPoly& z, const Rational& s) { return UPoly::from_integer(z) * s; }

Rational rpow(const Rational& b, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

std::string chart_name(Chart c) {
  switch (c) {
    case Chart::t1_w1: return "t=1,w=1";
    case Chart::s1_w1: return "s=1,w=1";
    case Chart::t1_z1: return "t=1,z=1";
    case Chart::s1_z1: return "s=1,z=1";
  }
  return "?";
}

std::string points_missed(Chart c) {
  std::string base = base_is_s(c) ? "the fiber t=0" : "the fiber s=0";
  std::string fib = fiber_is_z(c) ? "the section w=0" : "the negative section z=0";
  return base + " and " + fib;
}

AffinePoly::AffinePoly(Chart c, std::vector<UPoly> cs) : chart(c), coeffs(std::move(cs)) { trim(coeffs); }

int AffinePoly::degree_u() const {
  int d = -1;
  for (const auto& c : coeffs) d = std::max(d, c.degree());
  return d;
}

UPoly AffinePoly::coeff_v(int k) const {
  if (k < 0 || k > degree_v()) return {};
  return coeffs[static_cast<std::size_t>(k)];
}

UPoly AffinePoly::leading_v() const { return coeffs.empty() ? UPoly{} : coeffs.back(); }

Rational AffinePoly::coeff(int a, int b) const { return coeff_v(b).coeff(a); }

AffinePoly operator+(const AffinePoly& a, const AffinePoly& b) {
  if (a.chart != b.chart) throw std::invalid_argument("chart mismatch");
  std::vector<UPoly> r(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff_v(static_cast<int>(k)) + b.coeff_v(static_cast<int>(k));
  return AffinePoly(a.chart, std::move(r));
}

AffinePoly operator-(const AffinePoly& a, const AffinePoly& b) {
  if (a.chart != b.chart) throw std::invalid_argument("chart mismatch");
  std::vector<UPoly> r(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff_v(static_cast<int>(k)) - b.coeff_v(static_cast<int>(k));
  return AffinePoly(a.chart, std::move(r));
}

AffinePoly operator*(const AffinePoly& a, const AffinePoly& b) {
  if (a.chart != b.chart) throw std::invalid_argument("chart mismatch");
  if (a.is_zero() || b.is_zero()) return AffinePoly(a.chart, {});
  std::vector<UPoly> r(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r[i + j] += a.coeffs[i] * b.coeffs[j];
  return AffinePoly(a.chart, std::move(r));
}

AffinePoly from_terms(Chart chart, const std::vector<AffineTerm>& terms) {
  std::map<int, std::map<int, Rational>> grid;
  int maxb = -1;
  for (const auto& t : terms) {
    if (t.a < 0 || t.b < 0) throw std::invalid_argument("negative exponent");
    grid[t.b][t.a] += t.c;
    maxb = std::max(maxb, t.b);
  }
  std::vector<UPoly> cs(static_cast<std::size_t>(maxb + 1));
  for (const auto& [b, row] : grid) {
    int maxa = row.rbegin()->first;
    std::vector<Rational> v(static_cast<std::size_t>(maxa + 1));
    for (const auto& [a, c] : row) v[static_cast<std::size_t>(a)] = c;
    cs[static_cast<std::size_t>(b)] = UPoly(std::move(v));
  }
  return AffinePoly(chart, std::move(cs));
}

AffinePoly dehomogenize(const BiPoly& p, Chart chart) {
  std::vector<AffineTerm> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms())
    terms.push_back({base_is_s(chart) ? m.i : m.j, fiber_is_z(chart) ? m.k : m.l, c});
  return from_terms(chart, terms);
}

BiPoly rehomogenize(const AffinePoly& p, const HirzebruchSurface& s, DivisorClass klass) {
  BiPoly::Terms out;
  for (int b = 0; b <= p.degree_v(); ++b) {
    const UPoly& cu = p.coeffs[static_cast<std::size_t>(b)];
    for (int a = 0; a <= cu.degree(); ++a) {
      const Rational& c = cu.coeffs()[static_cast<std::size_t>(a)];
      if (c == 0) continue;
      coxring::Exponent e;
      Int k = fiber_is_z(p.chart) ? b : klass.sigma - b;
      Int l = klass.sigma - k;
      Int n = checked_sub(klass.phi, checked_mul(s.h(), l));
      Int i = base_is_s(p.chart) ? a : n - a;
      Int j = n - i;
      if (k < 0 || l < 0 || i < 0 || j < 0) throw std::invalid_argument("term does not fit the target class");
      e.i = static_cast<int>(i);
      e.j = static_cast<int>(j);
      e.k = static_cast<int>(k);
      e.l = static_cast<int>(l);
      out.emplace(e, c);
    }
  }
  return BiPoly(s, klass, std::move(out));
}

AffinePoly partial(const AffinePoly& p, Var var) {
  if (var == Var::u) {
    std::vector<UPoly> r;
    r.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) r.push_back(c.derivative());
    return AffinePoly(p.chart, std::move(r));
  }
  if (p.coeffs.size() <= 1) return AffinePoly(p.chart, {});
  std::vector<UPoly> r(p.coeffs.size() - 1);
  for (std::size_t k = 1; k < p.coeffs.size(); ++k) r[k - 1] = p.coeffs[k] * Rational(static_cast<long>(k));
  return AffinePoly(p.chart, std::move(r));
}

AffinePoly shear(const AffinePoly& p, const Rational& lambda) {
  if (lambda == 0) return p;
  // (u - lambda v) as a polynomial in v with u-polynomial coefficients.
  const AffinePoly lin(p.chart, {UPoly({Rational(0), Rational(1)}), UPoly::constant(-lambda)});
  AffinePoly out(p.chart, {});
  for (int b = 0; b <= p.degree_v(); ++b) {
    const UPoly& cu = p.coeffs[static_cast<std::size_t>(b)];
    if (cu.is_zero()) continue;
    std::vector<UPoly> vb(static_cast<std::size_t>(b) + 1);
    vb.back() = UPoly::constant(1);
    const AffinePoly vpow(p.chart, std::move(vb));
    // Horner in the sheared linear form.
    AffinePoly acc(p.chart, {});
    for (int a = cu.degree(); a >= 0; --a)
      acc = acc * lin + AffinePoly(p.chart, {UPoly::constant(cu.coeffs()[static_cast<std::size_t>(a)])});
    out = out + acc * vpow;
  }
  return out;
}

AffinePoly swap_vars(const AffinePoly& p) {
  std::vector<AffineTerm> terms;
  for (int b = 0; b <= p.degree_v(); ++b) {
    const UPoly& cu = p.coeffs[static_cast<std::size_t>(b)];
    for (int a = 0; a <= cu.degree(); ++a)
      if (cu.coeffs()[static_cast<std::size_t>(a)] != 0) terms.push_back({b, a, cu.coeffs()[static_cast<std::size_t>(a)]});
  }
  return from_terms(p.chart, terms);
}

UPoly substitute_v(const AffinePoly& p, const Rational& v0) {
  UPoly r;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) r = r * v0 + *it;
  return r;
}

UPoly substitute_u(const AffinePoly& p, const Rational& u0) {
  std::vector<Rational> r;
  r.reserve(p.coeffs.size());
  for (const auto& c : p.coeffs) r.push_back(c(u0));
  return UPoly(std::move(r));
}

std::vector<zpoly::ZPoly> integer_coeffs(const AffinePoly& p, Rational* scale) {
  mpz_class den = 1;
  for (const auto& cu : p.coeffs)
    for (const auto& c : cu.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<zpoly::ZPoly> out;
  out.reserve(p.coeffs.size());
  for (const auto& cu : p.coeffs) {
    zpoly::ZPoly z(cu.coeffs().size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = cu.coeffs()[i].get_num() * (den / cu.coeffs()[i].get_den());
    zpoly::trim(z);
    out.push_back(std::move(z));
  }
  if (scale) *scale = Rational(1, den);
  return out;
}

UPoly resultant(const AffinePoly& p, const AffinePoly& q, Var var) {
  if (var == Var::u) return resultant(swap_vars(p), swap_vars(q), Var::v);
  if (p.chart != q.chart) throw std::invalid_argument("resultant of polynomials in different charts");
  if (p.is_zero() || q.is_zero()) return {};
  const int m = p.degree_v();
  const int n = q.degree_v();
  Rational sp, sq;
  const auto zp = integer_coeffs(p, &sp);
  const auto zq = integer_coeffs(q, &sq);
  const std::size_t N = static_cast<std::size_t>(m + n);
  if (N == 0) return UPoly::constant(1);
  std::vector<std::size_t> cols;
  for (int d = m + n - 1; d >= 0; --d) cols.push_back(static_cast<std::size_t>(d));
  zpoly::ZMatrix mat(N, std::vector<zpoly::ZPoly>(N));
  std::size_t row = 0;
  for (int r = n - 1; r >= 0; --r) put_shifted(mat, row++, zp, r, cols);
  for (int r = m - 1; r >= 0; --r) put_shifted(mat, row++, zq, r, cols);
  return scaled(zpoly::determinant(std::move(mat)), rpow(sp, n) * rpow(sq, m));
}

std::pair<UPoly, UPoly> first_subresultant(const AffinePoly& p, const AffinePoly& q) {
  if (p.chart != q.chart) throw std::invalid_argument("subresultant of polynomials in different charts");
  if (p.is_zero() || q.is_zero()) return {};
  const int m = p.degree_v();
  const int n = q.degree_v();
  if (m == 0 || n == 0) {
    const AffinePoly& other = m == 0 ? q : p;
    if (other.degree_v() == 1) return {other.coeff_v(1), other.coeff_v(0)};
    return {};
  }
  if (m == 1 && n == 1) return {p.coeff_v(1), p.coeff_v(0)};
  Rational sp, sq;
  const auto zp = integer_coeffs(p, &sp);
  const auto zq = integer_coeffs(q, &sq);
  // Constant scale factors are irrelevant: only the ratio and the roots matter.
  return {UPoly::from_integer(minor_with(zp, zq, m, n, 1)), UPoly::from_integer(minor_with(zp, zq, m, n, 0))};
}

UPoly substitute_rational(const AffinePoly& p, const UPoly& sigma0, const UPoly& sigma1) {
  const int d = p.degree_v();
  if (d < 0) return {};
  const UPoly neg0 = -sigma0;
  // Horner: sum f_k (-s0)^k s1^(d-k)
  UPoly acc = p.coeffs[static_cast<std::size_t>(d)];
  for (int k = d - 1; k >= 0; --k) acc = acc * neg0 + p.coeffs[static_cast<std::size_t>(k)] * sigma1.pow(static_cast<unsigned>(d - k));
  return acc;
}

UPoly content_v(const AffinePoly& p) {
  UPoly g;
  for (const auto& c : p.coeffs) {
    g = gcd(g, c);
    if (g.degree() == 0) return g;
  }
  return g;
}

}  // namespace multiplane::affine
