#pragma once

#include <optional>

#include "su2free/errors.hpp"

namespace su2free {

// General solution of a x + b y = c: (x, y) = (x0, y0) + t (step_x, step_y).
// The step is (b/g, -a/g) with g = gcd(a, b), which describes the complete
// solution lattice.
struct SolutionLattice {
  long long x0 = 0, y0 = 0;
  long long step_x = 0, step_y = 0;
  bool contains(long long x, long long y) const {
    if (step_x != 0) {
      if ((x - x0) % step_x != 0) return false;
      long long t = (x - x0) / step_x;
      return y == y0 + t * step_y;
    }
    if (step_y != 0) return x == x0 && (y - y0) % step_y == 0;
    return x == x0 && y == y0;
  }
};

// a, b nonzero; empty when gcd(a, b) does not divide c.
std::optional<SolutionLattice> solve_linear(long long a, long long b, long long c);

// Solution set of x = -r x (mod n) is n1 Z with n1 = n / gcd(1 + r, n);
// requires gcd(r, n) = 1.
long long neg_congruence(long long n, long long r);

// Solutions of cos(2 pi x / n) = cos(2 pi y / m): the two-parameter family
// {(n q + eps l n1, l m1)} with k = gcd(m, n), n1 = n/k, m1 = m/k.
struct CosLattice {
  long long n = 0, m = 0, k = 0, n1 = 0, m1 = 0;
  bool contains(long long x, long long y) const {
    if (y % m1 != 0) return false;
    long long l = y / m1;
    long long r1 = ((x - l * n1) % n + n) % n;
    long long r2 = ((x + l * n1) % n + n) % n;
    return r1 == 0 || r2 == 0;
  }
};
CosLattice cos_equality_lattice(long long n, long long m);

// cos(2 pi x / (3n)) = target/2 with x constrained to residue (1 or 2) mod 3:
//   (a) residue 1, +1/2: 6 | (n-2) or 6 | (n+2)
//   (b) residue 1, -1/2: 3 | (n-1) or 3 | (n+1)
//   (c) residue 2, +1/2: 6 | (n-4) or 6 | (n+4)
//   (d) residue 2, -1/2: 3 | (n-2) or 3 | (n+2)
bool res_solvable(long long n, int residue, int target_sign);

// The system (1 +- r) x = 0, r x = +- s x (mod p) admits only x = 0; p prime,
// r and s units.
bool simple_system_trivial_only(long long p, long long r, long long s);

}  // namespace su2free
