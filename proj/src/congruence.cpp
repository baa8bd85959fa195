#include "su2free/congruence.hpp"

#include <numeric>

namespace su2free {

namespace {

long long ext_gcd(long long a, long long b, long long& u, long long& v) {
  if (b == 0) {
    u = a >= 0 ? 1 : -1;
    v = 0;
    return a >= 0 ? a : -a;
  }
  long long u1, v1;
  long long g = ext_gcd(b, a % b, u1, v1);
  u = v1;
  v = u1 - (a / b) * v1;
  return g;
}

long long mod_pos(long long a, long long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

}  // namespace

std::optional<SolutionLattice> solve_linear(long long a, long long b, long long c) {
  if (a == 0 || b == 0) throw DomainError("solve_linear requires nonzero coefficients");
  long long u, v;
  long long g = ext_gcd(a, b, u, v);
  if (c % g != 0) return std::nullopt;
  SolutionLattice s;
  s.x0 = u * (c / g);
  s.y0 = v * (c / g);
  s.step_x = b / g;
  s.step_y = -a / g;
  return s;
}

long long neg_congruence(long long n, long long r) {
  if (n < 2) throw DomainError("modulus must be >= 2");
  if (std::gcd(mod_pos(r, n), n) != 1) throw DomainError("r must be a unit mod n");
  long long k = std::gcd(mod_pos(1 + r, n), n);
  if (k == 0) k = n;
  return n / k;
}

CosLattice cos_equality_lattice(long long n, long long m) {
  if (n < 2 || m < 2) throw DomainError("moduli must be >= 2");
  CosLattice c;
  c.n = n;
  c.m = m;
  c.k = std::gcd(n, m);
  c.n1 = n / c.k;
  c.m1 = m / c.k;
  return c;
}

bool res_solvable(long long n, int residue, int target_sign) {
  if (n < 2) throw DomainError("n must be >= 2");
  if (residue != 1 && residue != 2) throw DomainError("residue class must be 1 or 2");
  if (target_sign != 1 && target_sign != -1) throw DomainError("target must be +-1/2");
  if (residue == 1 && target_sign == 1) return (n - 2) % 6 == 0 || (n + 2) % 6 == 0;
  if (residue == 1 && target_sign == -1) return (n - 1) % 3 == 0 || (n + 1) % 3 == 0;
  if (residue == 2 && target_sign == 1) return (n - 4) % 6 == 0 || (n + 4) % 6 == 0;
  return (n - 2) % 3 == 0 || (n + 2) % 3 == 0;
}

bool simple_system_trivial_only(long long p, long long r, long long s) {
  if (p < 2) throw DomainError("p must be a prime");
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0) throw DomainError("p must be a prime");
  r = mod_pos(r, p);
  s = mod_pos(s, p);
  if (std::gcd(r, p) != 1 || std::gcd(s, p) != 1)
    throw DomainError("r and s must be units mod p");
  for (long long x = 1; x < p; ++x) {
    bool first = mod_pos((1 - r) * x, p) == 0 || mod_pos((1 + r) * x, p) == 0;
    bool second = mod_pos((r - s) * x, p) == 0 || mod_pos((r + s) * x, p) == 0;
    if (first && second) return false;
  }
  return true;
}

}  // namespace su2free
