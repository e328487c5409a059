// One line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "multiplane/cli.hpp"
#include "multiplane/serialize.hpp"

using namespace multiplane;
using serialize::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string str(Int v) { return std::to_string(v); }

Outcome invariant_identities() {
  Outcome o;
  const auto t0 = Clock::now();
  for (Int e = 4; e <= 200; ++e) {
    const auto v = invariants::cover_invariants(invariants::TschirnhausenSplit(e / 2, e - e / 2));
    const std::string at = " at e=" + str(e);
    o.require(v.chi == 1, "chi" + at);
    o.require(v.K2 == 11 - 3 * e, "K2" + at);
    o.require(v.cusps == 3 * e - 3, "cusps" + at);
    o.require(v.pa_B == 6 * e - 9, "pa(B)" + at);
    o.require(v.g_B == 3 * e - 6 && v.g_R == 3 * e - 6, "g(B), g(R)" + at);
    o.require(v.g_G == e - 4 && v.G_sq == -3, "G" + at);
    o.require(v.g_M == e - 2 && v.M_sq == 3, "M" + at);
    o.require(v.h0_M == 3 && v.h1_M == e - 4 && v.chi_M == 7 - e, "cohomology of M" + at);
    o.require(12 * v.chi == v.K2 + v.euler_top, "Noether" + at);
  }
  o.require(seconds_since(t0) < 1.0, "runtime over 1 s");
  return o;
}

Outcome witness_covers() {
  Outcome o;
  int n = 0;
  for (auto [x, y] : {std::pair<int, int>{2, 2}, {2, 3}, {3, 3}}) {
    const Int e = x + y;
    for (int seed : {1, 2, 3}) {
      const auto t0 = Clock::now();
      const std::vector<std::string> args{"multiplane", "construct", "--x", std::to_string(x), "--y", std::to_string(y),
                                          "--seed", std::to_string(seed)};
      std::vector<const char*> argv;
      for (const auto& a : args) argv.push_back(a.c_str());
      std::ostringstream out, err;
      const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
      const std::string at = " for (x,y)=(" + std::to_string(x) + "," + std::to_string(y) + ") seed " +
                             std::to_string(seed);
      o.require(code == cli::kExitOk, "construct failed" + at + ": " + err.str());
      if (code != cli::kExitOk) continue;
      const json r = json::parse(out.str())["report"];
      o.require(r["discriminant_class"] == json::array({4, 2 * e}), "class(D)" + at);
      o.require(r["squarefree"] == true, "squarefree" + at);
      o.require(r["census_status"] == "ok", "census" + at);
      o.require(r["n_singular_points"] == 3 * e - 3, "singular point count" + at);
      o.require(r["milnor_profile"] == json(std::vector<int>(static_cast<std::size_t>(3 * e - 3), 2)),
                "Milnor numbers" + at);
      o.require(r["E_intersection_count"] == 2 * e - 4 && r["E_intersection_distinct"] == true, "D.E" + at);
      o.require(r["fiber_samples"].get<int>() >= 5 && r["fiber_branch_ok"] == true, "fibers" + at);
      o.require(seconds_since(t0) < 300.0, "runtime" + at);
      ++n;
    }
  }
  o.detail = o.ok ? std::to_string(n) + " covers certified" : o.detail;
  return o;
}

Outcome normal_forms() {
  Outcome o;
  using affine::from_terms;
  const auto chart = affine::Chart::t1_w1;
  struct Case {
    std::vector<affine::AffineTerm> terms;
    int milnor;
    branch::SingularityKind kind;
    const char* name;
  };
  const std::vector<Case> cases{
      {{{0, 2, Rational(1)}, {3, 0, Rational(-1)}}, 2, branch::SingularityKind::cusp, "z^2-s^3"},
      {{{0, 2, Rational(1)}, {2, 0, Rational(-1)}, {3, 0, Rational(-1)}}, 1, branch::SingularityKind::node,
       "z^2-s^2-s^3"},
      {{{0, 2, Rational(1)}, {4, 0, Rational(-1)}}, 3, branch::SingularityKind::other, "z^2-s^4"},
  };
  for (const auto& c : cases) {
    const auto f = branch::census_affine(from_terms(chart, c.terms), 1, 8);
    o.require(f.size() == 1 && f[0].point_count() == 1, std::string(c.name) + ": expected one singular point");
    if (f.size() != 1) continue;
    o.require(f[0].milnor == c.milnor && branch::kind_of(f[0].milnor) == c.kind,
              std::string(c.name) + ": got mu=" + std::to_string(f[0].milnor));
  }
  return o;
}

Outcome parameter_solver() {
  Outcome o;
  const auto t0 = Clock::now();
  for (Int e = 4; e <= 100; ++e) {
    std::vector<construct::ParamSolution> brute;
    for (Int h = 0; h <= e; ++h)
      for (Int ell = 3 * h; ell <= e; ++ell)
        if (2 * ell - 3 * h + 2 == e) brute.push_back({h, ell, (h - e) / 2});
    o.require(construct::params_for_e(e) == brute, "mismatch at e=" + str(e));
  }
  const auto e4 = construct::params_for_e(4), e10 = construct::params_for_e(10);
  o.require(e4.size() == 1 && e4[0].h == 0 && e4[0].ell == 1, "e=4");
  o.require(e10.size() == 2 && e10[0].h == 0 && e10[0].ell == 4 && e10[1].h == 2 && e10[1].ell == 7, "e=10");
  o.require(seconds_since(t0) < 1.0, "runtime over 1 s");
  return o;
}

Outcome construction_identities() {
  Outcome o;
  const auto t0 = Clock::now();
  for (Int m = 3; m <= 8; ++m)
    for (Int h = 0; h <= 4; ++h)
      for (Int ell = m * h; ell <= 20; ++ell) {
        const construct::ConstructionParams p(m, h, ell);
        const std::string at = " at (" + str(m) + "," + str(h) + "," + str(ell) + ")";
        o.require(construct::map_degree(p) == m, "map degree" + at);
        if (m == 3) {
          const Int e = 2 * ell - 3 * h + 2;
          o.require(construct::z_length(p) == 3 * e - 3, "length(Z)" + at);
          o.require(construct::gbar_selfintersection(p) == 3 * e - 6, "Gbar^2" + at);
        }
      }
  o.require(seconds_since(t0) < 1.0, "runtime over 1 s");
  return o;
}

Outcome net_witnesses() {
  Outcome o;
  struct Case {
    Int m, h, ell;
    std::uint64_t seed;
  };
  for (const Case c : {Case{3, 0, 1, 1}, Case{3, 1, 3, 1}, Case{4, 1, 5, 1}}) {
    const auto t0 = Clock::now();
    const construct::ConstructionParams p(c.m, c.h, c.ell);
    const std::string at = " at (" + str(c.m) + "," + str(c.h) + "," + str(c.ell) + ")";
    try {
      const auto net = construct::build_net(p, c.seed);
      o.require(net.smooth_gbar, "Gbar not smooth" + at);
      o.require(net.z_reduced && net.z_length == construct::z_length(p), "Z not reduced of predicted length" + at);
      o.require(net.net_rank == 3, "net rank" + at);
      o.require(net.members_contain_z, "member misses Z" + at);
    } catch (const std::exception& ex) {
      o.require(false, ex.what() + at);
    }
    o.require(seconds_since(t0) < 120.0, "runtime" + at);
  }
  return o;
}

Outcome cremona_classifier() {
  Outcome o;
  const auto t0 = Clock::now();
  for (Int m = 3; m <= 6; ++m) {
    // the class requires e >= m - 1
    const Int lo = std::max<Int>(4, m - 1);
    for (Int e = lo; e <= 30; ++e)
      for (Int ep = lo; ep <= 30; ++ep) {
        const std::string at = " at m=" + str(m) + " e=" + str(e) + " e'=" + str(ep);
        try {
          const auto r = cremona::cremona_equivalent({m, e}, {m, ep}, 1000);
          o.require((r.verdict == cremona::Verdict::equivalent_iff_isomorphic) == (e == ep), "verdict" + at);
          bool analytic = false;
          const Int a = std::min(e, ep), b = std::max(e, ep);
          for (Int d = 1; d <= 1000; ++d)
            if (a >= b + (m - 2) * (d - 1)) analytic = true;
          o.require(analytic == !r.feasible_degrees.empty(), "sweep vs inequality" + at);
        } catch (const std::exception& ex) {
          o.require(false, ex.what() + at);
        }
      }
    o.require(cremona::pairwise_distinct_family(m, lo, 19, 1000), "family of 20 for m=" + str(m));
  }
  o.require(seconds_since(t0) < 10.0, "runtime over 10 s");
  return o;
}

Outcome determinism_round_trip() {
  Outcome o;
  for (auto [x, y] : {std::pair<Int, Int>{2, 2}, {2, 3}, {3, 3}}) {
    const invariants::TschirnhausenSplit t(x, y);
    const auto g = branch::construct_general_cover(t, 1, 20, 32);
    const std::string text = serialize::cover_to_json(g.sections).dump(2);
    const auto reloaded = serialize::cover_from_json(json::parse(text));
    const auto again = branch::verify_general_cover(reloaded);
    const std::string at = " for (x,y)=(" + str(x) + "," + str(y) + ")";
    o.require(again == g.report, "report differs after reload" + at);
    o.require(serialize::report_to_json(again).dump() == serialize::report_to_json(g.report).dump(),
              "serialized report differs" + at);
    o.require(serialize::cover_to_json(reloaded).dump(2) == text, "cover text differs" + at);
    const auto twice = branch::construct_general_cover(t, 1, 20, 32);
    o.require(twice.report == g.report && twice.sections.a == g.sections.a, "construction not deterministic" + at);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"invariant identities for e in 4..200", invariant_identities},
      {"witness covers (2,2), (2,3), (3,3) x 3 seeds", witness_covers},
      {"normal-form fixtures cusp/node/other", normal_forms},
      {"parameter solver vs brute force", parameter_solver},
      {"construction identities m in 3..8", construction_identities},
      {"net witnesses (3,0,1), (3,1,3), (4,1,5)", net_witnesses},
      {"Cremona classifier m in 3..6", cremona_classifier},
      {"determinism and round-trip", determinism_round_trip},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = Clock::now();
    Outcome r;
    try {
      r = fn();
    } catch (const std::exception& ex) {
      r.ok = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    std::ostringstream line;
    line << (r.ok ? "PASS" : "FAIL") << " [" << index++ << "] " << name << " (" << seconds_since(t0) << " s)";
    if (!r.detail.empty()) line << ": " << r.detail;
    std::cout << line.str() << "\n";
    if (!r.ok) ++failures;
  }
  std::cout << (failures ? "FAILED " + std::to_string(failures) + " criteria" : std::string("all criteria passed"))
            << "\n";
  return failures ? 1 : 0;
}
