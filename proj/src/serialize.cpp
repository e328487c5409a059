#include "multiplane/serialize.hpp"

namespace multiplane::serialize {

using coxring::BiPoly;
using coxring::Exponent;
using picard::DivisorClass;
using picard::HirzebruchSurface;

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) throw FormatError("rational \"" + s + "\" is not of the form p/q");
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw FormatError("rational \"" + s + "\" does not parse");
  if (rational_to_string(q) != s) throw FormatError("rational \"" + s + "\" is not in lowest terms");
  return q;
}

json class_to_json(const DivisorClass& d) { return json::array({d.sigma, d.phi}); }

json bipoly_to_json(const BiPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) out.push_back(json::array({m.i, m.j, m.k, m.l, rational_to_string(c)}));
  return out;
}

BiPoly bipoly_from_json(const json& j, const HirzebruchSurface& s, DivisorClass klass) {
  if (!j.is_array()) throw FormatError("section must be a list of [i,j,k,l,\"p/q\"] records");
  BiPoly::Terms terms;
  for (const auto& rec : j) {
    if (!rec.is_array() || rec.size() != 5) throw FormatError("term record must have five entries");
    int e[4];
    for (std::size_t i = 0; i < 4; ++i) {
      if (!rec[i].is_number_integer() || rec[i].get<long long>() < 0 || rec[i].get<long long>() > 1000000)
        throw FormatError("exponents must be non-negative integers");
      e[i] = rec[i].get<int>();
    }
    if (!rec[4].is_string()) throw FormatError("coefficient must be a \"p/q\" string");
    const Exponent m{e[0], e[1], e[2], e[3]};
    if (!terms.emplace(m, rational_from_string(rec[4].get<std::string>())).second)
      throw FormatError("duplicate monomial in section");
  }
  return BiPoly(s, klass, std::move(terms));
}

json cover_to_json(const branch::TripleCoverSections& t) {
  json j;
  j["schema"] = kCoverSchema;
  j["x"] = t.split.x();
  j["y"] = t.split.y();
  j["seed"] = t.seed;
  j["coeff_bound"] = t.coeff_bound;
  j["sections"] = {{"a", bipoly_to_json(t.a)}, {"b", bipoly_to_json(t.b)}, {"c", bipoly_to_json(t.c)},
                   {"d", bipoly_to_json(t.d)}};
  return j;
}

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Int require_int(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer()) throw FormatError(std::string("field \"") + key + "\" must be an integer");
  return v.get<Int>();
}

}  // namespace

branch::TripleCoverSections cover_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("cover file must be a JSON object");
  if (j.contains("schema") && j["schema"] != kCoverSchema) throw FormatError("unsupported cover schema");
  const invariants::TschirnhausenSplit split(require_int(j, "x"), require_int(j, "y"));
  const json& seed = require(j, "seed");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0))
    throw FormatError("field \"seed\" must be a non-negative integer");
  const Int bound = require_int(j, "coeff_bound");
  const json& secs = require(j, "sections");
  const auto cls = branch::section_classes(split);
  const HirzebruchSurface F1(1);
  const char* names[] = {"a", "b", "c", "d"};
  std::vector<BiPoly> s;
  for (std::size_t i = 0; i < 4; ++i) s.push_back(bipoly_from_json(require(secs, names[i]), F1, cls[i]));
  return branch::TripleCoverSections(split, s[0], s[1], s[2], s[3], seed.get<std::uint64_t>(), bound);
}

json report_to_json(const branch::BranchReport& r) {
  json j;
  j["schema"] = kReportSchema;
  j["e"] = r.e;
  j["discriminant_class"] = class_to_json(r.discriminant_class);
  j["discriminant_class_ok"] = r.discriminant_class_ok;
  j["squarefree"] = r.squarefree;
  j["census_status"] = r.census_status;
  j["n_singular_points"] = r.n_singular_points;
  j["milnor_profile"] = r.milnor_profile;
  j["all_cusps"] = r.all_cusps;
  j["expected_cusps"] = r.expected_cusps;
  j["cusp_count_matches"] = r.cusp_count_matches;
  j["E_intersection_count"] = r.E_intersection_count;
  j["E_intersection_distinct"] = r.E_intersection_distinct;
  j["fiber_samples"] = r.fiber_samples;
  j["fiber_branch_ok"] = r.fiber_branch_ok;
  j["irreducible_proxy"] = r.irreducible_proxy;
  j["irreducibility"] = r.irreducibility;
  j["general"] = r.general;
  return j;
}

json invariants_to_json(const invariants::CoverInvariants& v, Int x, Int y) {
  json j;
  j["schema"] = kInvariantsSchema;
  j["x"] = x;
  j["y"] = y;
  j["e"] = v.e;
  j["c1"] = class_to_json(v.c1);
  j["c1_sq"] = v.c1_sq;
  j["c1_dot_K"] = v.c1_dot_K;
  j["c2"] = v.c2;
  j["chi"] = v.chi;
  j["K2"] = v.K2;
  j["euler_top"] = v.euler_top;
  j["noether_ok"] = 12 * v.chi == v.K2 + v.euler_top;
  j["cusps"] = v.cusps;
  j["pa_B"] = v.pa_B;
  j["g_B"] = v.g_B;
  j["g_R"] = v.g_R;
  j["g_G"] = v.g_G;
  j["G_sq"] = v.G_sq;
  j["g_M"] = v.g_M;
  j["M_sq"] = v.M_sq;
  j["h0_M"] = v.h0_M;
  j["h1_M"] = v.h1_M;
  j["chi_M"] = v.chi_M;
  return j;
}

json params_to_json(Int e, const std::vector<construct::ParamSolution>& sols) {
  json j;
  j["schema"] = kParamsSchema;
  j["e"] = e;
  json arr = json::array();
  for (const auto& s : sols) {
    const construct::ConstructionParams p(3, s.h, s.ell);
    arr.push_back({{"h", s.h},
                   {"ell", s.ell},
                   {"k", s.k},
                   {"z_length", construct::z_length(p)},
                   {"gbar_sq", construct::gbar_selfintersection(p)},
                   {"map_degree", construct::map_degree(p)}});
  }
  j["solutions"] = std::move(arr);
  return j;
}

json net_to_json(const construct::NetDescription& n, std::uint64_t seed) {
  json j;
  j["schema"] = kNetSchema;
  j["m"] = n.params.m;
  j["h"] = n.params.h;
  j["ell"] = n.params.ell;
  j["seed"] = seed;
  j["gbar_class"] = class_to_json(n.params.gbar_class());
  j["hbar_class"] = class_to_json(n.params.hbar_class());
  j["z_length"] = n.z_length;
  j["degree"] = n.map_degree;
  j["expected_net_dim"] = n.expected_net_dim;
  j["gbar_genus"] = n.gbar_genus;
  j["net_rank"] = n.net_rank;
  j["smooth_gbar"] = n.smooth_gbar;
  j["z_reduced"] = n.z_reduced;
  j["members_contain_z"] = n.members_contain_z;
  j["gbar_attempts"] = n.gbar_attempts;
  j["hbar_attempts"] = n.hbar_attempts;
  j["gbar"] = bipoly_to_json(n.gbar);
  j["h0bar"] = bipoly_to_json(n.h0bar);
  json basis = json::array();
  for (const auto& b : n.net_basis) basis.push_back(bipoly_to_json(b));
  j["net_basis"] = std::move(basis);
  return j;
}

json cremona_to_json(const cremona::CremonaResult& r) {
  json j;
  j["schema"] = kCremonaSchema;
  j["m"] = r.m;
  j["e"] = r.e;
  j["e_prime"] = r.e_prime;
  j["d_max"] = r.d_max;
  j["verdict"] = cremona::to_string(r.verdict);
  j["feasible_degrees"] = r.feasible_degrees;
  json table = json::array();
  for (const auto& row : r.table) table.push_back({{"d", row.d}, {"x", row.x}, {"feasible", row.feasible}});
  j["table"] = std::move(table);
  return j;
}

}  // namespace multiplane::serialize
