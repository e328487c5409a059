#include "multiplane/picard.hpp"

#include <ostream>
#include <stdexcept>

namespace multiplane::picard {

HirzebruchSurface::HirzebruchSurface(Int h) : h_(h) {
  if (h < 0) throw std::invalid_argument("Hirzebruch surface index must be non-negative");
}

DivisorClass operator+(DivisorClass a, DivisorClass b) {
  return {checked_add(a.sigma, b.sigma), checked_add(a.phi, b.phi)};
}

DivisorClass operator-(DivisorClass a, DivisorClass b) {
  return {checked_sub(a.sigma, b.sigma), checked_sub(a.phi, b.phi)};
}

DivisorClass operator-(DivisorClass a) { return DivisorClass{} - a; }

DivisorClass operator*(Int k, DivisorClass a) {
  return {checked_mul(k, a.sigma), checked_mul(k, a.phi)};
}

std::ostream& operator<<(std::ostream& os, const DivisorClass& d) {
  return os << "(" << d.sigma << "," << d.phi << ")";
}

Int intersect(DivisorClass a, DivisorClass b, const HirzebruchSurface& s) {
  Int ss = checked_mul(checked_mul(-s.h(), a.sigma), b.sigma);
  return checked_add(ss, checked_add(checked_mul(a.sigma, b.phi), checked_mul(b.sigma, a.phi)));
}

DivisorClass canonical(const HirzebruchSurface& s) {
  return {-2, -checked_add(s.h(), 2)};
}

Int arithmetic_genus(DivisorClass d, const HirzebruchSurface& s) {
  // D.(D+K) is always even: adjunction on a smooth rational surface.
  return checked_add(exact_half(intersect(d, d + canonical(s), s)), 1);
}

Int riemann_roch_chi(DivisorClass d, const HirzebruchSurface& s) {
  return checked_add(1, exact_half(intersect(d, d - canonical(s), s)));
}

bool is_nef(DivisorClass d, const HirzebruchSurface& s) {
  return d.sigma >= 0 && d.phi >= checked_mul(s.h(), d.sigma);
}

}  // namespace multiplane::picard
