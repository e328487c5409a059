#include "multiplane/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace multiplane {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

UPoly UPoly::linear_root(const Rational& root) { return UPoly({-root, Rational(1)}); }

UPoly UPoly::from_integer(const zpoly::ZPoly& p) {
  std::vector<Rational> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[i] = Rational(p[i]);
  return UPoly(std::move(v));
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational UPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational UPoly::operator()(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

UPoly UPoly::operator-() const {
  UPoly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return {};
  return *this * Rational(1 / c_.back());
}

UPoly UPoly::pow(unsigned n) const {
  UPoly r = constant(1);
  UPoly b = *this;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

zpoly::ZPoly UPoly::primitive_integer(Rational* scale) const {
  if (c_.empty()) {
    if (scale) *scale = 0;
    return {};
  }
  mpz_class den = 1;
  for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  zpoly::ZPoly z(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    mpz_class t = den / c_[i].get_den();
    z[i] = c_[i].get_num() * t;
  }
  mpz_class g = zpoly::content(z);
  if (z.back() < 0) g = -g;
  for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  if (scale) {
    *scale = Rational(g, den);
    scale->canonicalize();
  }
  return z;
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    if (i == 0 || a != 1) os << a;
    if (i > 0) os << (i == 0 || a != 1 ? "*" : "") << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.degree() < b.degree()) return {UPoly{}, a};
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational t = r[static_cast<std::size_t>(k)] * inv;
    if (t == 0) continue;
    q[static_cast<std::size_t>(k - db)] = t;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + k - db)] -= t * b.coeffs()[static_cast<std::size_t>(i)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly rem(const UPoly& a, const UPoly& b) { return divrem(a, b).second; }

UPoly exact_div(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  Rational sa, sb;
  zpoly::ZPoly za = a.primitive_integer(&sa);
  zpoly::ZPoly zb = b.primitive_integer(&sb);
  zpoly::ZPoly q = zpoly::divexact(za, zb);  // Gauss: exact over Q iff over Z
  return UPoly::from_integer(q) * Rational(sa / sb);
}

bool divides(const UPoly& b, const UPoly& a) {
  if (b.is_zero()) return a.is_zero();
  if (a.is_zero()) return true;
  return zpoly::divides(b.primitive_integer(), a.primitive_integer());
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  return UPoly::from_integer(zpoly::gcd(a.primitive_integer(), b.primitive_integer())).monic();
}

UPoly gcd_univariate(const UPoly& a, const UPoly& b) { return gcd(a, b); }

UPoly squarefree_part(const UPoly& a) {
  if (a.is_zero()) return {};
  if (a.degree() == 0) return UPoly::constant(1);
  zpoly::ZPoly za = a.primitive_integer();
  zpoly::ZPoly g = zpoly::gcd(za, zpoly::derivative(za));
  return UPoly::from_integer(zpoly::divexact(za, g)).monic();
}

bool is_squarefree(const UPoly& a) {
  if (a.is_zero()) return false;
  if (a.degree() <= 1) return true;
  zpoly::ZPoly za = a.primitive_integer();
  return zpoly::degree(zpoly::gcd(za, zpoly::derivative(za))) == 0;
}

std::vector<std::pair<int, UPoly>> multiplicity_strata(const UPoly& radical, const UPoly& target) {
  std::vector<std::pair<int, UPoly>> out;
  if (radical.degree() <= 0) return out;
  if (target.is_zero()) throw std::invalid_argument("multiplicity of roots in the zero polynomial");
  zpoly::ZPoly active = radical.primitive_integer();
  zpoly::ZPoly current = target.primitive_integer();
  for (int k = 1; zpoly::degree(active) > 0; ++k) {
    current = zpoly::divexact(current, active);
    zpoly::ZPoly next = zpoly::gcd(active, current);
    zpoly::ZPoly exact_k = zpoly::divexact(active, next);
    if (zpoly::degree(exact_k) > 0) out.emplace_back(k, UPoly::from_integer(exact_k).monic());
    active = std::move(next);
  }
  return out;
}

int distinct_root_count(const UPoly& a) {
  if (a.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  return squarefree_part(a).degree();
}

}  // namespace multiplane
