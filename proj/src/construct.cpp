#include "multiplane/construct.hpp"

#include <sstream>

#include "multiplane/invariants.hpp"
#include "multiplane/rng.hpp"

namespace multiplane::construct {

using affine::Chart;

ConstructionParams::ConstructionParams(Int m_, Int h_, Int ell_) : m(m_), h(h_), ell(ell_) {
  std::vector<std::string> bad;
  if (m < 3) bad.push_back("constraint m >= 3 violated");
  if (h < 0) bad.push_back("constraint h >= 0 violated");
  if (ell < checked_mul(m, h)) bad.push_back("constraint ell >= m*h violated");
  if (!bad.empty()) {
    std::string msg = bad.front();
    for (std::size_t i = 1; i < bad.size(); ++i) msg += "; " + bad[i];
    throw std::invalid_argument(msg);
  }
}

std::vector<ParamSolution> params_for_e(Int e) {
  if (e < 4) throw std::invalid_argument("constraint e >= 4 violated");
  std::vector<ParamSolution> out;
  // ell >= 3h  <=>  3h <= e - 2
  for (Int h = 0; 3 * h <= e - 2; ++h) {
    const Int twice = checked_add(e - 2, 3 * h);
    if (twice % 2 != 0) continue;
    out.push_back({h, twice / 2, exact_half(h - e)});
  }
  return out;
}

Int gbar_selfintersection(const ConstructionParams& p) {
  return picard::intersect(p.gbar_class(), p.gbar_class(), p.surface());
}

Int z_length(const ConstructionParams& p) {
  return checked_mul(p.m, checked_sub(checked_add(2 * p.ell, 1), checked_mul(p.m, p.h)));
}

Int map_degree(const ConstructionParams& p) {
  return checked_sub(picard::intersect(p.hbar_class(), p.hbar_class(), p.surface()), z_length(p));
}

Int h0(DivisorClass d, const HirzebruchSurface& s) {
  if (d.sigma < 0) return 0;
  Int n = 0;
  for (Int l = 0; l <= d.sigma; ++l) n = checked_add(n, std::max<Int>(0, d.phi - s.h() * l + 1));
  return n;
}

Int expected_net_dim(const ConstructionParams& p) { return checked_sub(h0(p.hbar_class(), p.surface()), z_length(p)); }

bool is_smooth(const BiPoly& g, std::uint64_t shear_seed, const branch::CensusOptions& opts) {
  if (!branch::is_squarefree(g)) return false;
  return branch::singularity_census(g, shear_seed, opts).n_points() == 0;
}

Transversality check_transversal(const BiPoly& g, const BiPoly& h) {
  Transversality tr;
  const Rational fiber_res =
      coxring::binary_resultant(coxring::restrict_to_fiber(g, 1, 0), coxring::restrict_to_fiber(h, 1, 0));
  const Rational section_res = coxring::binary_resultant(coxring::restrict_to_positive_section(g),
                                                         coxring::restrict_to_positive_section(h));
  tr.boundary_disjoint = fiber_res != 0 && section_res != 0;
  if (!tr.boundary_disjoint) return tr;

  const auto G = affine::dehomogenize(g, Chart::t1_w1);
  const auto H = affine::dehomogenize(h, Chart::t1_w1);
  tr.eliminant = affine::resultant(G, H);
  const Int expected = picard::intersect(g.klass(), h.klass(), g.surface());
  if (tr.eliminant.is_zero() || tr.eliminant.degree() != expected) return tr;
  if (!multiplane::is_squarefree(tr.eliminant)) return tr;
  if (gcd(tr.eliminant, G.leading_v()).degree() > 0) return tr;
  auto [s1, s0] = affine::first_subresultant(G, H);
  if (s1.is_zero() || gcd(tr.eliminant, s1).degree() > 0) return tr;
  tr.sigma0 = std::move(s0);
  tr.sigma1 = std::move(s1);
  tr.reduced = true;
  return tr;
}

bool contains_scheme(const BiPoly& p, const Transversality& tr) {
  if (!tr.reduced) throw std::invalid_argument("scheme membership needs a certified reduced intersection");
  const auto P = affine::dehomogenize(p, Chart::t1_w1);
  return rem(affine::substitute_rational(P, tr.sigma0, tr.sigma1), tr.eliminant).is_zero();
}

NetDescription build_net(const ConstructionParams& p, std::uint64_t seed, const NetOptions& opts) {
  if (opts.retries < 1) throw std::invalid_argument("retries must be positive");
  const HirzebruchSurface S = p.surface();
  NetDescription net(p, BiPoly(S, p.gbar_class()), BiPoly(S, p.hbar_class()));
  net.z_length = z_length(p);
  net.map_degree = map_degree(p);
  net.expected_net_dim = expected_net_dim(p);
  net.gbar_genus = picard::arithmetic_genus(p.gbar_class(), S);

  for (int i = 0;; ++i) {
    if (i == opts.retries) {
      std::ostringstream os;
      os << "no smooth curve of class " << p.gbar_class() << " in " << opts.retries << " attempts";
      throw NetRetryExhausted(os.str());
    }
    const auto tag = static_cast<std::uint64_t>(i);
    BiPoly g = coxring::random_section(p.gbar_class(), S, derive_seed(seed, 1000 + tag), opts.coeff_bound);
    bool smooth = false;
    try {
      smooth = is_smooth(g, derive_seed(seed, 3000 + tag), opts.census);
    } catch (const branch::ShapePositionError&) {
      // undecided; resample
    }
    if (smooth) {
      net.gbar = std::move(g);
      net.gbar_attempts = i + 1;
      break;
    }
  }
  net.smooth_gbar = true;

  Transversality tr;
  for (int j = 0;; ++j) {
    if (j == opts.retries) {
      std::ostringstream os;
      os << "no transversal curve of class " << p.hbar_class() << " in " << opts.retries << " attempts";
      throw NetRetryExhausted(os.str());
    }
    BiPoly h =
        coxring::random_section(p.hbar_class(), S, derive_seed(seed, 2000 + static_cast<std::uint64_t>(j)), opts.coeff_bound);
    tr = check_transversal(net.gbar, h);
    if (tr.reduced) {
      net.h0bar = std::move(h);
      net.hbar_attempts = j + 1;
      break;
    }
  }
  net.z_reduced = tr.eliminant.degree() == net.z_length;

  net.net_basis = {net.h0bar, BiPoly::variable(S, coxring::CoxVar::s) * net.gbar,
                   BiPoly::variable(S, coxring::CoxVar::t) * net.gbar};
  net.net_rank = coxring::coefficient_rank(net.net_basis);
  net.members_contain_z = true;
  for (const auto& b : net.net_basis)
    if (!contains_scheme(b, tr)) net.members_contain_z = false;
  return net;
}

TripleConsistency triple_consistency(Int x, Int y) {
  const invariants::TschirnhausenSplit split(x, y);
  TripleConsistency out;
  out.e = split.e();
  const Int e = out.e;
  out.ok = true;
  const auto sols = params_for_e(e);
  if (sols.empty()) out.ok = false;
  for (const auto& s : sols) {
    const ConstructionParams p(3, s.h, s.ell);
    TripleConsistencyRow row;
    row.params = s;
    row.z_length = z_length(p);
    row.gbar_sq = gbar_selfintersection(p);
    row.hbar_dot_gbar = picard::intersect(p.hbar_class(), p.gbar_class(), p.surface());
    row.map_degree = map_degree(p);
    row.ok = row.z_length == 3 * e - 3 && row.gbar_sq == 3 * e - 6 && row.hbar_dot_gbar == 3 * e - 3 &&
             row.map_degree == 3;
    out.ok = out.ok && row.ok;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace multiplane::construct
