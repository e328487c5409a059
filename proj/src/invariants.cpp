#include "multiplane/invariants.hpp"

#include <stdexcept>
#include <string>

namespace multiplane::invariants {

using picard::DivisorClass;
using picard::HirzebruchSurface;

namespace {

const HirzebruchSurface kF1{1};

// chi(O_Y), K_Y^2 and e(Y) for Y = F_1.
constexpr Int kChiY = 1;
constexpr Int kEulerY = 4;

// chi(O_S) = 3 chi(O_Y) + c1^2/2 - c1.K_Y/2 - c2
Int chi_from_chern(Int c1_sq, Int c1_dot_K, Int c2) {
  Int half = exact_half(checked_sub(c1_sq, c1_dot_K));
  return checked_sub(checked_add(checked_mul(3, kChiY), half), c2);
}

}  // namespace

TschirnhausenSplit::TschirnhausenSplit(Int x, Int y) : x_(x), y_(y) {
  std::string violated;
  auto require = [&](bool ok, const char* what) {
    if (ok) return;
    if (!violated.empty()) violated += "; ";
    violated += std::string("constraint ") + what + " violated";
  };
  require(x >= 2, "x >= 2");
  require(y >= 2, "y >= 2");
  require(checked_mul(2, x) > y, "2x > y");
  require(checked_mul(2, y) > x, "2y > x");
  if (!violated.empty()) throw std::invalid_argument(violated);
  (void)checked_add(x, y);
}

std::pair<DivisorClass, Int> chern_of_split(const TschirnhausenSplit& t) {
  // c(O(-E-xF)) c(O(-E-yF)): c1 is the sum, c2 the product of the two classes.
  DivisorClass lx{-1, -t.x()};
  DivisorClass ly{-1, -t.y()};
  return {lx + ly, picard::intersect(lx, ly, kF1)};
}

CoverInvariants cover_invariants(const TschirnhausenSplit& t) {
  CoverInvariants inv;
  inv.e = t.e();
  auto [c1, c2] = chern_of_split(t);
  const DivisorClass K = picard::canonical(kF1);
  const Int K_sq = picard::intersect(K, K, kF1);

  inv.c1 = c1;
  inv.c2 = c2;
  inv.c1_sq = picard::intersect(c1, c1, kF1);
  inv.c1_dot_K = picard::intersect(c1, K, kF1);

  inv.chi = chi_from_chern(inv.c1_sq, inv.c1_dot_K, c2);
  // K_S^2 = 3K_Y^2 - 4 c1.K_Y + 2 c1^2 - 3 c2
  inv.K2 = checked_sub(checked_add(checked_sub(checked_mul(3, K_sq), checked_mul(4, inv.c1_dot_K)),
                                   checked_mul(2, inv.c1_sq)),
                       checked_mul(3, c2));

  // e(S) = 3 e(Y) - 2 c1.K_Y + 4 c1^2 - 9 c2, cross-checked against Noether.
  Int euler = checked_sub(checked_add(checked_sub(checked_mul(3, kEulerY), checked_mul(2, inv.c1_dot_K)),
                                      checked_mul(4, inv.c1_sq)),
                          checked_mul(9, c2));
  Int noether = checked_sub(checked_mul(12, inv.chi), inv.K2);
  if (euler != noether) throw std::logic_error("topological Euler number disagrees with Noether's formula");
  inv.euler_top = euler;

  const DivisorClass branch = -2 * c1;  // 4E + 2eF
  inv.pa_B = picard::arithmetic_genus(branch, kF1);
  inv.cusps = checked_mul(3, c2);
  // g(R) = 2 c1^2 - c1.K_Y + 1 - 3 c2
  inv.g_R = checked_sub(checked_add(checked_sub(checked_mul(2, inv.c1_sq), inv.c1_dot_K), 1),
                        checked_mul(3, c2));
  inv.g_B = inv.g_R;
  if (inv.g_B != checked_sub(inv.pa_B, inv.cusps))
    throw std::logic_error("geometric genus of the branch curve disagrees with the cusp count");

  // G = pi^*(E): triple cover of E branched at B.E points.
  inv.g_G = riemann_hurwitz_genus(3, 0, picard::intersect(branch, picard::kSection, kF1));
  inv.G_sq = checked_mul(3, picard::intersect(picard::kSection, picard::kSection, kF1));

  // M = pi^*(H), H = E + F the pullback of a line.
  const DivisorClass H = picard::kSection + picard::kFiber;
  inv.g_M = riemann_hurwitz_genus(3, 0, picard::intersect(branch, H, kF1));
  inv.M_sq = checked_mul(3, picard::intersect(H, H, kF1));
  const Int M_dot_K = checked_sub(checked_sub(checked_mul(2, inv.g_M), 2), inv.M_sq);
  inv.chi_M = checked_add(inv.chi, exact_half(checked_sub(inv.M_sq, M_dot_K)));

  // 0 -> O_S(C) -> O_S(M) -> O_G -> 0 with h^0(O_S(C)) = 2 and h^1 = h^2 = 0.
  constexpr Int h0_pencil = 2;
  inv.h0_M = h0_pencil + 1;
  inv.h1_M = inv.g_G;
  if (checked_sub(inv.h0_M, inv.h1_M) != inv.chi_M)
    throw std::logic_error("h^0(M) - h^1(M) disagrees with Riemann-Roch");
  return inv;
}

Int riemann_hurwitz_genus(Int degree, Int base_genus, Int branch_count) {
  if (degree < 1) throw std::invalid_argument("cover degree must be positive");
  Int rhs = checked_add(checked_mul(degree, checked_sub(checked_mul(2, base_genus), 2)), branch_count);
  if (rhs % 2 != 0 || rhs < -2) throw std::invalid_argument("inconsistent ramification data");
  return checked_add(rhs / 2, 1);
}

Int converse_c2(Int e) {
  if (e < 4) throw std::invalid_argument("converse_c2 requires e >= 4");
  const DivisorClass c1{-2, -e};
  const DivisorClass K = picard::canonical(kF1);
  const Int c1_sq = picard::intersect(c1, c1, kF1);
  const Int c1_dot_K = picard::intersect(c1, K, kF1);
  // 1 = 3 chi(O_Y) + c1^2/2 - c1.K/2 - c2, solved for c2.
  return checked_sub(chi_from_chern(c1_sq, c1_dot_K, 0), 1);
}

}  // namespace multiplane::invariants
