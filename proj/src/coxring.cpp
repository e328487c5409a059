#include "multiplane/coxring.hpp"

#include <sstream>

#include "multiplane/rng.hpp"

namespace multiplane::coxring {

DivisorClass class_of(const Exponent& m, const HirzebruchSurface& s) {
  return {checked_add(m.k, m.l), checked_add(checked_add(m.i, m.j), checked_mul(s.h(), m.l))};
}

BiPoly::BiPoly(HirzebruchSurface surface, DivisorClass klass) : surface_(surface), klass_(klass) {}

BiPoly::BiPoly(HirzebruchSurface surface, DivisorClass klass, Terms terms)
    : surface_(surface), klass_(klass) {
  for (auto& [m, c] : terms) {
    if (m.i < 0 || m.j < 0 || m.k < 0 || m.l < 0) throw HomogeneityError("homogeneity violation: negative exponent");
    if (class_of(m, surface_) != klass_) {
      std::ostringstream os;
      os << "homogeneity violation: monomial [" << m.i << "," << m.j << "," << m.k << "," << m.l
         << "] has class " << class_of(m, surface_) << ", declared " << klass_;
      throw HomogeneityError(os.str());
    }
    c.canonicalize();
    if (c != 0) terms_.emplace(m, std::move(c));
  }
}

BiPoly BiPoly::monomial(const HirzebruchSurface& surface, const Exponent& m, const Rational& c) {
  return BiPoly(surface, class_of(m, surface), Terms{{m, c}});
}

BiPoly BiPoly::variable(const HirzebruchSurface& surface, CoxVar v) {
  switch (v) {
    case CoxVar::s: return monomial(surface, {1, 0, 0, 0});
    case CoxVar::t: return monomial(surface, {0, 1, 0, 0});
    case CoxVar::z: return monomial(surface, {0, 0, 1, 0});
    case CoxVar::w: return monomial(surface, {0, 0, 0, 1});
  }
  throw std::logic_error("unknown variable");
}

Rational BiPoly::coeff(const Exponent& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::require_compatible(const BiPoly& o, const char* op) const {
  if (surface_ != o.surface_) throw std::invalid_argument(std::string(op) + " of sections on different surfaces");
  if (klass_ != o.klass_) {
    std::ostringstream os;
    os << "class mismatch in " << op << ": " << klass_ << " vs " << o.klass_;
    throw std::invalid_argument(os.str());
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  require_compatible(o, "addition");
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  require_compatible(o, "subtraction");
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.surface_ != b.surface_) throw std::invalid_argument("product of sections on different surfaces");
  BiPoly r(a.surface_, a.klass_ + b.klass_);
  Rational t;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Exponent m{ma.i + mb.i, ma.j + mb.j, ma.k + mb.k, ma.l + mb.l};
      t = ca * cb;
      auto [it, inserted] = r.terms_.emplace(m, t);
      if (!inserted) it->second += t;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

BiPoly mul(const BiPoly& a, const BiPoly& b) { return a * b; }

BiPoly scalar_mul(const BiPoly& a, const Rational& c) { return a * c; }

std::vector<Exponent> monomial_basis(DivisorClass d, const HirzebruchSurface& s) {
  std::vector<Exponent> out;
  if (d.sigma < 0) return out;
  for (Int l = 0; l <= d.sigma; ++l) {
    const Int n = checked_sub(d.phi, checked_mul(s.h(), l));
    for (Int i = n; i >= 0; --i)
      out.push_back({static_cast<int>(i), static_cast<int>(n - i), static_cast<int>(d.sigma - l), static_cast<int>(l)});
  }
  return out;
}

BiPoly partial(const BiPoly& p, CoxVar v) {
  const HirzebruchSurface& S = p.surface();
  const DivisorClass vc = BiPoly::variable(S, v).klass();
  BiPoly::Terms out;
  for (const auto& [m, c] : p.terms()) {
    Exponent d = m;
    int* e = nullptr;
    switch (v) {
      case CoxVar::s: e = &d.i; break;
      case CoxVar::t: e = &d.j; break;
      case CoxVar::z: e = &d.k; break;
      case CoxVar::w: e = &d.l; break;
    }
    if (*e == 0) continue;
    Rational coeff = c * *e;
    --*e;
    out.emplace(d, coeff);
  }
  return BiPoly(S, p.klass() - vc, std::move(out));
}

BiPoly random_section(DivisorClass d, const HirzebruchSurface& s, std::uint64_t seed, std::int64_t coeff_bound) {
  const auto basis = monomial_basis(d, s);
  if (basis.empty()) {
    std::ostringstream os;
    os << "class " << d << " has no sections on F_" << s.h();
    throw std::invalid_argument(os.str());
  }
  Rng rng(seed);
  BiPoly::Terms terms;
  for (const auto& m : basis) terms.emplace(m, Rational(rng.uniform_nonzero(coeff_bound)));
  return BiPoly(s, d, std::move(terms));
}

bool BinaryForm::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

UPoly BinaryForm::affine() const { return UPoly(coeffs); }

int BinaryForm::multiplicity_at_infinity() const {
  if (is_zero()) throw std::invalid_argument("multiplicity of a root of the zero form");
  return formal_degree() - affine().degree();
}

bool BinaryForm::is_squarefree() const {
  if (is_zero()) return false;
  return multiplicity_at_infinity() <= 1 && multiplane::is_squarefree(affine());
}

int BinaryForm::distinct_root_count() const {
  if (is_zero()) throw std::invalid_argument("root count of the zero form");
  UPoly a = affine();
  int finite = a.degree() > 0 ? multiplane::distinct_root_count(a) : 0;
  return finite + (multiplicity_at_infinity() > 0 ? 1 : 0);
}

Rational binary_resultant(const BinaryForm& f, const BinaryForm& g) {
  const int m = f.formal_degree();
  const int n = g.formal_degree();
  if (m < 0 || n < 0) throw std::invalid_argument("binary form without coefficients");
  Rational sf, sg;
  zpoly::ZPoly zf = f.affine().primitive_integer(&sf);
  zpoly::ZPoly zg = g.affine().primitive_integer(&sg);
  if (zf.empty() || zg.empty()) return 0;
  const std::size_t N = static_cast<std::size_t>(m + n);
  zpoly::ZMatrix mat(N, std::vector<zpoly::ZPoly>(N));
  // Columns indexed by x-degree from m+n-1 down to 0.
  auto put = [&](std::size_t row, const zpoly::ZPoly& p, int shift) {
    for (std::size_t d = 0; d < p.size(); ++d) {
      std::size_t col = N - 1 - (d + static_cast<std::size_t>(shift));
      if (p[d] != 0) mat[row][col] = {p[d]};
    }
  };
  for (int r = 0; r < n; ++r) put(static_cast<std::size_t>(r), zf, n - 1 - r);
  for (int r = 0; r < m; ++r) put(static_cast<std::size_t>(n + r), zg, m - 1 - r);
  zpoly::ZPoly det = zpoly::determinant(std::move(mat));
  if (det.empty()) return 0;
  Rational scale = 1;
  for (int i = 0; i < n; ++i) scale *= sf;
  for (int i = 0; i < m; ++i) scale *= sg;
  return Rational(det[0]) * scale;
}

namespace {

Rational power(const Rational& b, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

BinaryForm restrict_to_fiber(const BiPoly& p, const Rational& s0, const Rational& t0) {
  if (s0 == 0 && t0 == 0) throw std::invalid_argument("(0:0) is not a point of the base line");
  if (p.klass().sigma < 0) throw std::invalid_argument("restriction of a class with negative section coefficient");
  BinaryForm f;
  f.coeffs.assign(static_cast<std::size_t>(p.klass().sigma) + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) f.coeffs[static_cast<std::size_t>(m.k)] += c * power(s0, m.i) * power(t0, m.j);
  return f;
}

BinaryForm restrict_to_negative_section(const BiPoly& p) {
  const Int n = checked_sub(p.klass().phi, checked_mul(p.surface().h(), p.klass().sigma));
  if (n < 0) throw std::invalid_argument("class meets the negative section negatively; it contains it");
  BinaryForm f;
  f.coeffs.assign(static_cast<std::size_t>(n) + 1, Rational(0));
  for (const auto& [m, c] : p.terms())
    if (m.k == 0) f.coeffs[static_cast<std::size_t>(m.i)] += c;
  return f;
}

BinaryForm restrict_to_positive_section(const BiPoly& p) {
  if (p.klass().phi < 0) throw std::invalid_argument("negative fiber degree");
  BinaryForm f;
  f.coeffs.assign(static_cast<std::size_t>(p.klass().phi) + 1, Rational(0));
  for (const auto& [m, c] : p.terms())
    if (m.l == 0) f.coeffs[static_cast<std::size_t>(m.i)] += c;
  return f;
}

namespace {

// Coefficients of (a s + b t)^n, index = power of s.
std::vector<mpz_class> linear_power(std::int64_t a, std::int64_t b, int n) {
  std::vector<mpz_class> out(static_cast<std::size_t>(n) + 1);
  for (int r = 0; r <= n; ++r) {
    mpz_class binom, pa, pb;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    mpz_class av(static_cast<long>(a)), bv(static_cast<long>(b));
    mpz_pow_ui(pa.get_mpz_t(), av.get_mpz_t(), static_cast<unsigned long>(r));
    mpz_pow_ui(pb.get_mpz_t(), bv.get_mpz_t(), static_cast<unsigned long>(n - r));
    out[static_cast<std::size_t>(r)] = binom * pa * pb;
  }
  return out;
}

}  // namespace

BiPoly base_change(const BiPoly& p, const BaseMatrix& mtx) {
  const auto [a, b, c, d] = mtx;
  if (checked_sub(checked_mul(a, d), checked_mul(b, c)) == 0)
    throw std::invalid_argument("base change matrix is singular");
  BiPoly::Terms out;
  for (const auto& [m, coeff] : p.terms()) {
    auto ps = linear_power(a, b, m.i);
    auto pt = linear_power(c, d, m.j);
    for (std::size_t r = 0; r < ps.size(); ++r) {
      if (ps[r] == 0) continue;
      for (std::size_t q = 0; q < pt.size(); ++q) {
        if (pt[q] == 0) continue;
        int si = static_cast<int>(r + q);
        Exponent e{si, m.i + m.j - si, m.k, m.l};
        Rational term = coeff * Rational(ps[r] * pt[q]);
        auto [it, inserted] = out.emplace(e, term);
        if (!inserted) it->second += term;
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return BiPoly(p.surface(), p.klass(), std::move(out));
}

int coefficient_rank(const std::vector<BiPoly>& polys) {
  if (polys.empty()) return 0;
  std::map<Exponent, std::size_t> column;
  for (const auto& p : polys) {
    if (p.klass() != polys.front().klass() || p.surface() != polys.front().surface())
      throw std::invalid_argument("rank of sections of different classes");
    for (const auto& [m, c] : p.terms()) column.emplace(m, column.size());
  }
  std::vector<std::vector<Rational>> rows(polys.size(), std::vector<Rational>(column.size()));
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& [m, c] : polys[r].terms()) rows[r][column[m]] = c;
  int rank = 0;
  for (std::size_t col = 0; col < column.size() && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    const auto& pr = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rational f = rows[r][col] / pr[col];
      for (std::size_t j = col; j < column.size(); ++j) rows[r][j] -= f * pr[j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace multiplane::coxring
