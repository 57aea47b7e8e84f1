#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace esfrac {

/// Arbitrary-precision signed integer (canonical zero, no leading redundancy:
/// guaranteed by the GMP representation).
using Integer = mpz_class;

/// Exact rational. All code constructs rationals through make_rational() or
/// arithmetic on already-canonical values, so gcd(|num|, den) = 1 and den >= 1
/// hold everywhere.
using Rational = mpq_class;

/// Precondition violations (bad arguments, out-of-domain requests).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Rational make_rational(Integer num, Integer den);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// gcd of a and b, positive. Rejects (0, 0).
Integer gcd(const Integer& a, const Integer& b);

/// lcm of two positive integers.
Integer lcm(const Integer& a, const Integer& b);

/// lcm of a non-empty list of positive integers.
Integer lcm_many(std::span<const Integer> xs);
Integer lcm_many(const std::vector<Integer>& xs);

struct PrimalityResult {
  bool is_prime = false;
  /// true below 2^64 (fixed Miller-Rabin witness set); false means the verdict
  /// is probabilistic with error probability below 2^-128.
  bool deterministic = true;
};

PrimalityResult primality(const Integer& n);
bool is_prime(const Integer& n);

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
};

struct Factorization {
  std::vector<PrimePower> factors;  // primes strictly increasing, exponents >= 1

  Integer value() const;

  bool operator==(const Factorization&) const = default;
};

/// Canonical prime-power decomposition of n >= 1. Trial division through 10^6,
/// then Miller-Rabin plus Pollard-Brent with a fixed seed for larger cofactors.
Factorization factorize(const Integer& n);

/// All positive divisors of n, ascending.
std::vector<Integer> divisors(const Integer& n);
std::vector<Integer> divisors(const Factorization& f);

Integer tau(const Integer& n);
Integer sigma(const Integer& n);
Integer phi(const Integer& n);
Integer tau(const Factorization& f);
Integer sigma(const Factorization& f);
Integer phi(const Factorization& f);

Integer pow_ui(const Integer& base, unsigned long exp);

/// Integer square root of a perfect square; throws DomainError otherwise.
Integer exact_sqrt(const Integer& n);

inline long to_long(const Integer& n) {
  if (!n.fits_slong_p()) throw DomainError("integer does not fit in long");
  return n.get_si();
}

}  // namespace esfrac
