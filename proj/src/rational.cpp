#include "delone/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace delone {

Rat rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& s) {
  // Strict shape check first; mpq_set_str is permissive about whitespace and bases.
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::size_t slash = s.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = is_int(s);
  } else {
    std::string den = s.substr(slash + 1);
    ok = is_int(s.substr(0, slash)) && is_int(den) && den.find('-') == std::string::npos &&
         den.find('+') == std::string::npos;
  }
  if (!ok) throw std::invalid_argument("bad rational literal: '" + s + "'");
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

double rat_double(const Rat& x) { return x.get_d(); }

Int floor_int(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int ceil_int(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int round_nearest(const Rat& x) { return floor_int(x + Rat(1, 2)); }

Int isqrt(const Int& v) {
  if (v < 0) throw std::invalid_argument("isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

Rat sqrt_lb(const Rat& x) {
  if (x < 0) throw std::invalid_argument("sqrt bound of negative value");
  // sqrt(p/q) = sqrt(p*q)/q, bracketed by the integer sqrt of p*q.
  Int pq = x.get_num() * x.get_den();
  return rat(isqrt(pq), x.get_den());
}

Rat sqrt_ub(const Rat& x) {
  if (x < 0) throw std::invalid_argument("sqrt bound of negative value");
  Int pq = x.get_num() * x.get_den();
  Int s = isqrt(pq);
  if (s * s == pq) return rat(s, x.get_den());
  return rat(s + 1, x.get_den());
}

void sqrt_interval(const Rat& x, unsigned bits, Rat& lo, Rat& hi) {
  if (x < 0) throw std::invalid_argument("sqrt interval of negative value");
  // Scale by 4^bits so the integer sqrt carries the extra precision.
  Int scale = Int(1) << bits;
  Int pq = x.get_num() * x.get_den() * scale * scale;
  Int s = isqrt(pq);
  Int den = x.get_den() * scale;
  lo = rat(s, den);
  hi = (s * s == pq) ? lo : rat(s + 1, den);
}

int cmp_surd(const Rat& q, const Rat& s, const Rat& t, const Rat& D) {
  if (D < 0) throw std::invalid_argument("cmp_surd with negative radicand");
  Rat u = s - q;  // sign of u + t*sqrt(D)
  int su = sgn(u), st = sgn(t);
  if (st == 0) return su;
  if (st > 0) {
    if (su >= 0) return (su == 0 && sgn(D) == 0) ? 0 : 1;
    // u < 0: compare t^2 D against u^2
    return sgn(t * t * D - u * u);
  }
  // t < 0: mirror case
  if (su <= 0) return (su == 0 && sgn(D) == 0) ? 0 : -1;
  return sgn(u * u - t * t * D);
}

int omega_with_multiplicity(const Int& n) {
  if (n < 1) throw std::invalid_argument("omega of non-positive integer");
  Int m = n;
  int count = 0;
  for (Int p = 2; p * p <= m;) {
    if (m % p == 0) {
      m /= p;
      ++count;
    } else {
      p += (p == 2) ? 1 : 2;
    }
  }
  if (m > 1) ++count;
  return count;
}

void split_square(const Int& n, Int& root, Int& squarefree) {
  if (n < 0) throw std::invalid_argument("split_square of negative value");
  if (sgn(n) == 0) {
    root = 0;
    squarefree = 0;
    return;
  }
  root = 1;
  Int m = n;
  for (Int p = 2; p <= 1000; p += (p == 2) ? 1 : 2) {
    Int pp = p * p;
    while (mpz_divisible_p(m.get_mpz_t(), pp.get_mpz_t())) {
      m /= pp;
      root *= p;
    }
  }
  Int s = isqrt(m);
  if (s * s == m) {
    root *= s;
    m = 1;
  }
  squarefree = m;
}

namespace {
std::uint64_t mpz_mod_hash(const mpz_srcptr z) {
  // Residue mod a Mersenne prime keeps equal values colliding-equal and is cheap.
  const unsigned long p = (1UL << 61) - 1;
  unsigned long r = mpz_fdiv_ui(z, p);
  return static_cast<std::uint64_t>(r);
}
}  // namespace

std::uint64_t rat_hash(const Rat& x) {
  std::uint64_t h = mpz_mod_hash(x.get_num_mpz_t());
  h = h * 0x9e3779b97f4a7c15ULL + mpz_mod_hash(x.get_den_mpz_t());
  return h;
}

std::uint64_t vec_hash(const std::vector<Rat>& v) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const Rat& x : v) {
    h ^= rat_hash(x);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace delone
