#include "multiplane/cremona.hpp"

#include <stdexcept>
#include <utility>

namespace multiplane::cremona {

MultiplaneClass::MultiplaneClass(Int m_, Int e_) : m(m_), e(e_) {
  if (m < 3) throw std::invalid_argument("constraint m >= 3 violated");
  if (e < m - 1) throw std::invalid_argument("constraint e >= m-1 violated");
}

Int dejonquieres_x(Int m, Int e, Int e_prime, Int d) {
  if (d < 1) throw std::invalid_argument("constraint d >= 1 violated");
  if (e_prime < e) throw std::invalid_argument("constraint e' >= e violated (normalize the pair first)");
  // multiplicity balance at the center
  const Int mult_p = checked_sub(checked_mul(2, e), checked_sub(checked_mul(2, m), 2));
  const Int mult_p_prime = checked_sub(checked_mul(2, e_prime), checked_sub(checked_mul(2, m), 2));
  const Int direct = checked_sub(checked_sub(checked_mul(checked_mul(2, e_prime), d - 1), checked_mul(mult_p_prime, d - 2)),
                                 mult_p);
  const Int closed = checked_add(checked_mul(2, e_prime - e), checked_mul(checked_mul(2, m) - 2, d - 1));
  if (direct != closed) throw std::logic_error("De Jonquieres balance: closed form disagrees");
  return closed;
}

bool dejonquieres_feasible(Int m, Int e, Int e_prime, Int d) {
  const Int x = dejonquieres_x(m, e, e_prime, d);
  const bool feasible = x >= 0 && x <= checked_mul(2, d) - 2;
  const bool analytic = e >= checked_add(e_prime, checked_mul(m - 2, d - 1));
  if (feasible != analytic) throw std::logic_error("feasibility disagrees with the degree inequality");
  return feasible;
}

std::string to_string(Verdict v) {
  return v == Verdict::equivalent_iff_isomorphic ? "equivalent_iff_isomorphic" : "not_equivalent";
}

CremonaResult cremona_equivalent(const MultiplaneClass& a, const MultiplaneClass& b, Int d_max) {
  if (a.m != b.m) throw std::invalid_argument("degree mismatch: m=" + std::to_string(a.m) + " vs m=" + std::to_string(b.m));
  if (d_max < 1) throw std::invalid_argument("constraint d_max >= 1 violated");
  CremonaResult r;
  r.m = a.m;
  r.e = std::min(a.e, b.e);
  r.e_prime = std::max(a.e, b.e);
  r.d_max = d_max;
  r.table.reserve(static_cast<std::size_t>(d_max));
  for (Int d = 1; d <= d_max; ++d) {
    const bool f = dejonquieres_feasible(r.m, r.e, r.e_prime, d);
    r.table.push_back({d, dejonquieres_x(r.m, r.e, r.e_prime, d), f});
    if (f) r.feasible_degrees.push_back(d);
  }
  r.verdict = r.feasible_degrees.empty() ? Verdict::not_equivalent : Verdict::equivalent_iff_isomorphic;
  const bool analytic_equivalent = r.e == r.e_prime;
  const bool only_projectivity = r.feasible_degrees == std::vector<Int>{1};
  if (analytic_equivalent != (r.verdict == Verdict::equivalent_iff_isomorphic) ||
      (analytic_equivalent && !only_projectivity))
    throw std::logic_error("feasibility sweep disagrees with the closed-form criterion");
  return r;
}

std::tuple<Int, Int, Int> delta_check(Int d) {
  if (d < 2) throw std::invalid_argument("constraint d >= 2 violated (no contracted curve for a projectivity)");
  return {d - 1, d - 2, checked_mul(2, d) - 2};
}

bool pairwise_distinct_family(Int m, Int e0, Int n, Int d_max) {
  for (Int i = 0; i <= n; ++i)
    for (Int j = i + 1; j <= n; ++j)
      if (cremona_equivalent({m, e0 + i}, {m, e0 + j}, d_max).verdict != Verdict::not_equivalent) return false;
  return true;
}

}  // namespace multiplane::cremona
