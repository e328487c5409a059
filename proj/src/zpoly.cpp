#include "multiplane/zpoly.hpp"

#include <algorithm>
#include <climits>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace multiplane::zpoly {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using ModPoly = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These bases are a deterministic witness set for all 64-bit integers.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 reduce(const mpz_class& c, u64 p) {
  static_assert(sizeof(unsigned long) == sizeof(u64));
  return mpz_fdiv_ui(c.get_mpz_t(), p);
}

ModPoly reduce(const ZPoly& a, u64 p) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = reduce(a[i], p);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

void mod_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b in place, b nonzero.
void mod_rem(ModPoly& a, const ModPoly& b, u64 p) {
  const std::size_t db = b.size() - 1;
  const u64 inv = invmod(b.back(), p);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const u64 q = mulmod(a.back(), inv, p);
    for (std::size_t i = 0; i <= db; ++i) {
      u64 t = mulmod(q, b[i], p);
      u64& x = a[i + shift];
      x = x >= t ? x - t : x + p - t;
    }
    mod_trim(a);
  }
}

ModPoly mod_gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    mod_rem(a, b, p);
    std::swap(a, b);
  }
  if (a.empty()) return a;
  const u64 inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

mpz_class symmetric(const mpz_class& c, const mpz_class& m) {
  mpz_class r = c % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

}  // namespace

const std::vector<u64>& word_primes(std::size_t count) {
  static std::mutex mu;
  static std::vector<u64> primes;
  std::lock_guard<std::mutex> lock(mu);
  u64 candidate = primes.empty() ? (1ULL << 62) - 1 : primes.back() - 2;
  if (candidate % 2 == 0) --candidate;
  while (primes.size() < count) {
    if (is_prime_u64(candidate)) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes;
}

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

bool is_zero(const ZPoly& p) { return p.empty(); }

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

ZPoly scale(const ZPoly& a, const mpz_class& c) {
  if (c == 0) return {};
  ZPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

namespace {

// Long division over Z. Returns false as soon as a quotient coefficient is not
// an integer or the remainder is nonzero.
bool try_divexact(const ZPoly& a, const ZPoly& b, ZPoly* quotient) {
  if (b.empty()) throw std::domain_error("division by the zero polynomial");
  if (a.empty()) {
    if (quotient) quotient->clear();
    return true;
  }
  if (a.size() < b.size()) return false;
  ZPoly r(a);
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db);
  mpz_class t;
  for (std::size_t k = a.size(); k-- > db;) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_divexact(t.get_mpz_t(), r[k].get_mpz_t(), b.back().get_mpz_t());
    const std::size_t shift = k - db;
    for (std::size_t i = 0; i <= db; ++i) mpz_submul(r[i + shift].get_mpz_t(), t.get_mpz_t(), b[i].get_mpz_t());
    q[shift] = t;
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  trim(q);
  if (quotient) *quotient = std::move(q);
  return true;
}

}  // namespace

ZPoly divexact(const ZPoly& a, const ZPoly& b) {
  ZPoly q;
  if (!try_divexact(a, b, &q)) throw std::domain_error("inexact polynomial division");
  return q;
}

bool divides(const ZPoly& b, const ZPoly& a) { return try_divexact(a, b, nullptr); }

mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& a) {
  if (a.empty()) return {};
  mpz_class g = content(a);
  if (a.back() < 0) g = -g;
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

ZPoly gcd(const ZPoly& a_in, const ZPoly& b_in) {
  if (a_in.empty()) return primitive_part(b_in);
  if (b_in.empty()) return primitive_part(a_in);
  const ZPoly a = primitive_part(a_in);
  const ZPoly b = primitive_part(b_in);
  if (degree(a) == 0 || degree(b) == 0) return {mpz_class(1)};

  mpz_class gamma;
  mpz_gcd(gamma.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

  int best = INT_MAX;
  ZPoly image;      // residues in [0, modulus)
  ZPoly previous;   // symmetric representative after the last prime
  mpz_class modulus;
  std::size_t index = 0;
  for (;;) {
    const u64 p = word_primes(index + 1)[index];
    ++index;
    if (reduce(a.back(), p) == 0 || reduce(b.back(), p) == 0) continue;
    ModPoly g = mod_gcd(reduce(a, p), reduce(b, p), p);
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg == 0) return {mpz_class(1)};
    if (dg > best) continue;  // unlucky prime
    const u64 gp = reduce(gamma, p);
    for (auto& c : g) c = mulmod(c, gp, p);
    if (dg < best) {
      best = dg;
      image.assign(g.size(), 0);
      for (std::size_t i = 0; i < g.size(); ++i) image[i] = static_cast<unsigned long>(g[i]);
      modulus = static_cast<unsigned long>(p);
      previous.clear();
      continue;
    }
    // CRT: image + modulus * ((g - image) * modulus^{-1} mod p)
    const u64 minv = invmod(reduce(modulus, p), p);
    for (std::size_t i = 0; i < g.size(); ++i) {
      u64 r = reduce(image[i], p);
      u64 diff = g[i] >= r ? g[i] - r : g[i] + p - r;
      u64 k = mulmod(diff, minv, p);
      image[i] += modulus * static_cast<unsigned long>(k);
    }
    modulus *= static_cast<unsigned long>(p);
    ZPoly sym(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) sym[i] = symmetric(image[i], modulus);
    if (sym == previous) {
      ZPoly candidate = primitive_part(sym);
      if (divides(candidate, a) && divides(candidate, b)) return candidate;
    }
    previous = std::move(sym);
  }
}

ZPoly determinant(ZMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return {mpz_class(1)};
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  bool negate = false;
  ZPoly prev{mpz_class(1)};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].empty()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].empty()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        ZPoly t = sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j]));
        m[i][j] = divexact(t, prev);
      }
      m[i][k].clear();
    }
    prev = m[k][k];
  }
  ZPoly d = std::move(m[n - 1][n - 1]);
  if (negate)
    for (auto& c : d) c = -c;
  return d;
}

}  // namespace multiplane::zpoly
