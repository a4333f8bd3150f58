#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace delone {

using Int = mpz_class;
using Rat = mpq_class;

// Reduced rational with positive denominator. Throws std::invalid_argument on den == 0.
Rat rat(long num, long den = 1);
Rat rat(const Int& num, const Int& den);

// Accepts "p", "-p", "p/q" (optionally "-p/q"). Anything else throws.
Rat parse_rat(const std::string& s);

// Canonical text form: "p" or "p/q", denominator positive.
std::string rat_str(const Rat& x);

// Rendering only; numeric code never round-trips through double.
double rat_double(const Rat& x);

Int floor_int(const Rat& x);
Int ceil_int(const Rat& x);
// floor(x + 1/2); any fixed tie rule works for nearest-lattice-point scans.
Int round_nearest(const Rat& x);

// Largest n >= 0 with n*n <= v. Requires v >= 0.
Int isqrt(const Int& v);

// Rational bracket lb <= sqrt(x) <= ub for x >= 0.
Rat sqrt_lb(const Rat& x);
Rat sqrt_ub(const Rat& x);

// Tight bracket with hi - lo <= 2^-bits.
void sqrt_interval(const Rat& x, unsigned bits, Rat& lo, Rat& hi);

// Sign of (s + t*sqrt(D)) - q with all arguments rational, D >= 0.
int cmp_surd(const Rat& q, const Rat& s, const Rat& t, const Rat& D);

// Number of prime factors counted with multiplicity. Requires n >= 1.
int omega_with_multiplicity(const Int& n);

// n = root^2 * squarefree; extracts all square factors with a small prime
// sweep plus a perfect-square fold of the remainder. Requires n >= 0.
void split_square(const Int& n, Int& root, Int& squarefree);

// Fast structural hashes; used only for bucket lookup, never for ordering or output.
std::uint64_t rat_hash(const Rat& x);
std::uint64_t vec_hash(const std::vector<Rat>& v);

}  // namespace delone
