#pragma once

#include <compare>
#include <iosfwd>

#include "multiplane/checked.hpp"

namespace multiplane::picard {

/// The rational ruled surface F_h. Its negative section has self-intersection -h.
/// F_1 is the blowup of the plane at a point; there the negative section is the
/// exceptional curve E and the fiber is F.
class HirzebruchSurface {
 public:
  explicit HirzebruchSurface(Int h);

  Int h() const { return h_; }

  friend bool operator==(const HirzebruchSurface&, const HirzebruchSurface&) = default;

 private:
  Int h_;
};

/// A class sigma*e + phi*f in the Picard lattice, e the negative section and
/// f the fiber.
struct DivisorClass {
  Int sigma = 0;
  Int phi = 0;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass operator+(DivisorClass a, DivisorClass b);
DivisorClass operator-(DivisorClass a, DivisorClass b);
DivisorClass operator-(DivisorClass a);
DivisorClass operator*(Int k, DivisorClass a);
std::ostream& operator<<(std::ostream& os, const DivisorClass& d);

inline constexpr DivisorClass kSection{1, 0};
inline constexpr DivisorClass kFiber{0, 1};

/// Intersection pairing: e^2 = -h, e.f = 1, f^2 = 0.
Int intersect(DivisorClass a, DivisorClass b, const HirzebruchSurface& s);

/// K = -2e - (h+2)f.
DivisorClass canonical(const HirzebruchSurface& s);

/// p_a(D) = D.(D+K)/2 + 1.
Int arithmetic_genus(DivisorClass d, const HirzebruchSurface& s);

/// chi(O(D)) = 1 + D.(D-K)/2.
Int riemann_roch_chi(DivisorClass d, const HirzebruchSurface& s);

/// True when sigma >= 0 and phi >= h*sigma, the range where every monomial
/// count agrees with Riemann-Roch.
bool is_nef(DivisorClass d, const HirzebruchSurface& s);

}  // namespace multiplane::picard
