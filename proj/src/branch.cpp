#include "multiplane/branch.hpp"

#include <algorithm>
#include <sstream>

#include "multiplane/rng.hpp"

namespace multiplane::branch {

using affine::Var;
using picard::DivisorClass;
using picard::HirzebruchSurface;

namespace {

const HirzebruchSurface kF1{1};

void require_class(const BiPoly& p, DivisorClass want, const char* name) {
  if (p.surface() != kF1 || p.klass() != want) {
    std::ostringstream os;
    os << "section " << name << " has class " << p.klass() << ", expected " << want;
    throw std::invalid_argument(os.str());
  }
}

// Seed tags for the derived streams.
constexpr std::uint64_t kTagCensus = 0xce5;
constexpr std::uint64_t kTagFibers = 0xf1b;
constexpr std::uint64_t kTagBaseShear = 0xba5e;

}  // namespace

std::vector<DivisorClass> section_classes(const TschirnhausenSplit& t) {
  const Int x = t.x(), y = t.y();
  return {{1, x}, {1, 2 * x - y}, {1, 2 * y - x}, {1, y}};
}

TripleCoverSections::TripleCoverSections(TschirnhausenSplit split_, BiPoly a_, BiPoly b_, BiPoly c_, BiPoly d_,
                                         std::uint64_t seed_, std::int64_t coeff_bound_)
    : split(split_), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)), seed(seed_),
      coeff_bound(coeff_bound_) {
  const auto cls = section_classes(split);
  require_class(a, cls[0], "a");
  require_class(b, cls[1], "b");
  require_class(c, cls[2], "c");
  require_class(d, cls[3], "d");
  if (a.is_zero() || d.is_zero()) throw std::invalid_argument("sections a and d must be nonzero");
}

TripleCoverSections sample_sections(const TschirnhausenSplit& t, std::uint64_t seed, std::int64_t coeff_bound) {
  const auto cls = section_classes(t);
  std::vector<BiPoly> s;
  for (std::uint64_t i = 0; i < 4; ++i) s.push_back(coxring::random_section(cls[i], kF1, derive_seed(seed, i), coeff_bound));
  return TripleCoverSections(t, s[0], s[1], s[2], s[3], seed, coeff_bound);
}

StructurePolys structure_polys(const TripleCoverSections& t) {
  StructurePolys r{t.a * t.a - t.b * t.d, t.a * t.d - t.b * t.c, t.d * t.d - t.a * t.c};
  const Int x = t.split.x(), y = t.split.y();
  if (r.A.klass() != DivisorClass{2, 2 * x} || r.B.klass() != DivisorClass{2, x + y} ||
      r.C.klass() != DivisorClass{2, 2 * y})
    throw std::logic_error("structure polynomial class violation");
  return r;
}

BiPoly discriminant(const BiPoly& A, const BiPoly& B, const BiPoly& C) {
  if (A.klass() + C.klass() != 2 * B.klass()) {
    std::ostringstream os;
    os << "class mismatch: " << A.klass() << " + " << C.klass() << " != 2 * " << B.klass();
    throw std::invalid_argument(os.str());
  }
  return B * B - Rational(4) * (A * C);
}

BiPoly discriminant(const TripleCoverSections& t) {
  const auto [A, B, C] = structure_polys(t);
  return discriminant(A, B, C);
}

bool is_squarefree(const AffinePoly& f) {
  if (f.is_zero()) return false;
  const UPoly content = affine::content_v(f);
  if (!multiplane::is_squarefree(content)) return false;
  std::vector<UPoly> cs;
  cs.reserve(f.coeffs.size());
  for (const auto& c : f.coeffs) cs.push_back(exact_div(c, content));
  const AffinePoly pp(f.chart, std::move(cs));
  if (pp.degree_v() <= 0) return true;
  // A squarefree specialization of full degree certifies a nonzero discriminant.
  const UPoly lc = pp.leading_v();
  for (int u0 = 0, tried = 0; tried < 4; ++u0) {
    for (int sign : {1, -1}) {
      const Rational at(sign * u0);
      if (lc(at) == 0) continue;
      ++tried;
      if (multiplane::is_squarefree(affine::substitute_u(pp, at))) return true;
      if (u0 == 0) break;
    }
  }
  return !affine::resultant(pp, affine::partial(pp, Var::v)).is_zero();
}

bool is_squarefree(const BiPoly& D) {
  if (D.is_zero()) return false;
  for (Chart c : affine::kAllCharts)
    if (!is_squarefree(affine::dehomogenize(D, c))) return false;
  return true;
}

SingularityKind kind_of(int milnor) {
  if (milnor == 1) return SingularityKind::node;
  if (milnor == 2) return SingularityKind::cusp;
  return SingularityKind::other;
}

std::string to_string(SingularityKind k) {
  switch (k) {
    case SingularityKind::node: return "node";
    case SingularityKind::cusp: return "cusp";
    case SingularityKind::other: return "other";
  }
  return "other";
}

int CensusResult::n_points() const {
  int n = 0;
  for (const auto& f : factors) n += f.point_count();
  return n;
}

std::vector<int> CensusResult::milnor_profile() const {
  std::vector<int> out;
  for (const auto& f : factors) out.insert(out.end(), static_cast<std::size_t>(f.point_count()), f.milnor);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SingularPoint> CensusResult::points() const {
  std::vector<SingularPoint> out;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (int r = 0; r < factors[i].point_count(); ++r)
      out.push_back({factors[i].chart, i, r, factors[i].milnor, kind_of(factors[i].milnor)});
  return out;
}

namespace {

// One census attempt with a fixed fiber-mixing shear. Returns false (with a
// reason) when the coordinate is not in shape position.
bool census_attempt(const AffinePoly& f, const Rational& lambda, std::vector<EliminantFactor>& out, std::string& why) {
  const AffinePoly g = affine::shear(f, lambda);
  const AffinePoly P = affine::partial(g, Var::v);
  const AffinePoly Q = affine::partial(g, Var::u);
  if (P.is_zero() || Q.is_zero()) {
    why = "a partial derivative vanishes identically";
    return false;
  }
  const UPoly R = affine::resultant(P, Q);
  if (R.is_zero()) {
    why = "critical locus is not finite";
    return false;
  }
  if (R.degree() == 0) return true;
  const UPoly r = squarefree_part(R);
  if (gcd(r, P.leading_v()).degree() > 0) {
    why = "critical point escapes to infinity along a fiber";
    return false;
  }
  const auto [s1, s0] = affine::first_subresultant(P, Q);
  if (s1.is_zero() || gcd(r, s1).degree() > 0) {
    why = "two critical points share a base coordinate";
    return false;
  }
  const UPoly H = affine::substitute_rational(g, s0, s1);
  const UPoly g1 = H.is_zero() ? r : gcd(r, H);
  for (auto& [k, fac] : multiplicity_strata(g1, R)) out.push_back({f.chart, fac, s0, s1, lambda, k});
  return true;
}

}  // namespace

std::vector<EliminantFactor> census_affine(const AffinePoly& f, std::uint64_t shear_seed, int max_attempts,
                                           int* attempts_used) {
  if (max_attempts < 1) throw std::invalid_argument("shear attempts must be positive");
  std::string why;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Rational lambda = 0;
    if (attempt > 0) lambda = Rng(derive_seed(shear_seed, static_cast<std::uint64_t>(attempt))).uniform_nonzero(16);
    std::vector<EliminantFactor> out;
    if (census_attempt(f, lambda, out, why)) {
      if (attempts_used) *attempts_used = attempt + 1;
      return out;
    }
  }
  std::ostringstream os;
  os << "shape position failure in chart " << affine::chart_name(f.chart) << " after " << max_attempts
     << " shears (" << why << "); increase shear attempts";
  throw ShapePositionError(os.str());
}

namespace {

// Keeps the roots of each factor at which `cond` vanishes.
std::vector<EliminantFactor> restrict_factors(const std::vector<EliminantFactor>& in, bool need_v0, bool need_u0) {
  std::vector<EliminantFactor> out;
  const UPoly u = UPoly::monomial(1, 1);
  for (const auto& f : in) {
    UPoly g = f.factor;
    if (need_v0) g = gcd(g, f.sigma0);
    // original u = u' - lambda v, times sigma1
    if (need_u0 && g.degree() > 0) g = gcd(g, u * f.sigma1 + f.sigma0 * f.lambda);
    if (g.degree() > 0) {
      EliminantFactor k = f;
      k.factor = g;
      out.push_back(std::move(k));
    }
  }
  return out;
}

std::vector<int> profile_of(const std::vector<EliminantFactor>& fs) {
  CensusResult r;
  r.factors = fs;
  return r.milnor_profile();
}

bool is_submultiset(const std::vector<int>& small, const std::vector<int>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

CensusResult singularity_census(const BiPoly& D, std::uint64_t shear_seed, const CensusOptions& opts) {
  if (D.is_zero()) throw std::invalid_argument("census of the zero section");
  Rng base_rng(derive_seed(shear_seed, kTagBaseShear));
  const std::int64_t b = base_rng.uniform(-4, 4), c = base_rng.uniform(-4, 4);
  const BiPoly Dp = coxring::base_change(D, {1, b, c, 1 + b * c});

  CensusResult result;
  const auto run = [&](Chart chart, std::uint64_t tag, int* used = nullptr) {
    result.charts.push_back(affine::chart_name(chart));
    return census_affine(affine::dehomogenize(Dp, chart), derive_seed(shear_seed, tag), opts.max_shear_attempts, used);
  };

  result.factors = run(Chart::t1_w1, 1, &result.shear_attempts);
  const auto w_form = coxring::restrict_to_positive_section(Dp);
  const auto t_form = coxring::restrict_to_fiber(Dp, 1, 0);
  const bool w_bad = opts.all_charts || !w_form.is_squarefree();
  const bool t_bad = opts.all_charts || !t_form.is_squarefree();

  std::vector<std::vector<EliminantFactor>> full;
  if (w_bad) {
    auto fs = run(Chart::t1_z1, 2);
    for (auto& k : restrict_factors(fs, true, false)) result.factors.push_back(k);
    full.push_back(std::move(fs));
  }
  if (t_bad) {
    auto fs = run(Chart::s1_w1, 3);
    for (auto& k : restrict_factors(fs, false, true)) result.factors.push_back(k);
    full.push_back(std::move(fs));
  }
  if (w_bad && t_bad) {
    auto fs = run(Chart::s1_z1, 4);
    for (auto& k : restrict_factors(fs, true, true)) result.factors.push_back(k);
    full.push_back(std::move(fs));
  }
  if (opts.all_charts) {
    const auto total = result.milnor_profile();
    for (const auto& fs : full)
      if (!is_submultiset(profile_of(fs), total)) throw std::runtime_error("inconsistent chart dedup");
  }
  return result;
}

EIntersection check_on_E(const BiPoly& D) {
  const auto form = coxring::restrict_to_negative_section(D);
  if (form.is_zero()) throw ContainsEError("branch contains E");
  return {form.formal_degree(), form.is_squarefree()};
}

bool check_fibers(const BiPoly& D, int n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("fiber sample count must be positive");
  Rng rng(seed);
  bool ok = true;
  for (int i = 0; i < n_samples; ++i) {
    const Rational s0(rng.uniform(-1000, 1000));
    const Rational t0(rng.uniform(1, 1000));
    const auto form = coxring::restrict_to_fiber(D, s0, t0);
    if (form.formal_degree() != D.klass().sigma || !form.is_squarefree()) ok = false;
  }
  return ok;
}

bool irreducibility_proxy(const BiPoly& D) {
  if (D.is_zero()) return false;
  const auto& k = D.klass();
  if (k.phi - D.surface().h() * k.sigma < 0) return false;
  if (coxring::restrict_to_negative_section(D).is_zero()) return false;
  if (coxring::restrict_to_positive_section(D).is_zero()) return false;
  for (Chart c : {Chart::t1_w1, Chart::s1_w1})
    if (affine::content_v(affine::dehomogenize(D, c)).degree() > 0) return false;
  return true;
}

BranchReport verify_general_cover(const TripleCoverSections& t, const VerifyOptions& opts) {
  BranchReport r;
  const Int e = t.split.e();
  r.e = static_cast<int>(e);
  const BiPoly D = discriminant(t);
  r.discriminant_class = D.klass();
  r.discriminant_class_ok = D.klass() == DivisorClass{4, 2 * e};
  r.squarefree = is_squarefree(D);

  try {
    const auto ei = check_on_E(D);
    r.E_intersection_count = ei.count;
    r.E_intersection_distinct = ei.distinct;
  } catch (const ContainsEError&) {
    r.E_intersection_count = 0;
    r.E_intersection_distinct = false;
  }

  r.fiber_samples = opts.fiber_samples;
  r.fiber_branch_ok = check_fibers(D, opts.fiber_samples, derive_seed(t.seed, kTagFibers));
  r.irreducible_proxy = irreducibility_proxy(D);
  r.expected_cusps = static_cast<int>(3 * e - 3);

  bool census_ok = false;
  if (r.squarefree) {
    try {
      const auto census = singularity_census(D, derive_seed(t.seed, kTagCensus), opts.census);
      r.milnor_profile = census.milnor_profile();
      r.n_singular_points = census.n_points();
      r.census_status = "ok";
      census_ok = true;
    } catch (const std::runtime_error& ex) {
      r.census_status = ex.what();
    }
  } else {
    r.census_status = "skipped: discriminant not squarefree";
  }
  r.all_cusps = census_ok && std::all_of(r.milnor_profile.begin(), r.milnor_profile.end(), [](int m) { return m == 2; });
  r.cusp_count_matches = census_ok && r.n_singular_points == r.expected_cusps;
  r.general = r.discriminant_class_ok && r.squarefree && census_ok && r.all_cusps && r.cusp_count_matches &&
              r.E_intersection_count == 2 * e - 4 && r.E_intersection_distinct && r.fiber_branch_ok &&
              r.irreducible_proxy;
  return r;
}

GeneralCover construct_general_cover(const TschirnhausenSplit& t, std::uint64_t seed, std::int64_t coeff_bound,
                                     int retries, const VerifyOptions& opts) {
  if (retries < 1) throw std::invalid_argument("retries must be positive");
  for (int attempt = 0; attempt < retries; ++attempt) {
    auto sections = sample_sections(t, seed + static_cast<std::uint64_t>(attempt), coeff_bound);
    auto report = verify_general_cover(sections, opts);
    if (report.general) return {std::move(sections), std::move(report), attempt + 1};
  }
  std::ostringstream os;
  os << "no general cover for (x,y)=(" << t.x() << "," << t.y() << ") in " << retries << " attempts from seed " << seed;
  throw RetryExhausted(os.str());
}

}  // namespace multiplane::branch
