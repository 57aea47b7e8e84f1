#pragma once

#include <string>
#include <vector>

#include "esfrac/arith.hpp"

namespace esfrac::lcmfn {

/// Count / sum / product of all x >= 1 with lcm(x, b) = a.
struct QTriple {
  Integer a, b;
  Integer q;   // count (0 when b does not divide a)
  Integer sq;  // sum
  Integer mq;  // product (1 for the empty set)
};

/// Definitional enumeration over the divisors of a.
QTriple q_brute(const Integer& a, const Integer& b);

/// Closed forms from the exponent structure: with F = product of p^{v_p(a)}
/// over primes where v_p(b) = v_p(a) >= 1 and D = a/F, the solution set is
/// {D*y : y | F}, so Q = tau(F), SQ = D*sigma(F), MQ = D^tau(F) * F^(tau(F)/2).
/// Requires b | a; always equals q_brute.
QTriple q_closed(const Integer& a, const Integer& b);

/// sum over x | n of Q_n[x], computed by brute force; equals tau(n^2).
Integer sum_q_over_divisors(const Integer& n);

struct Finding {
  std::string identity;
  std::string inputs;
  std::string lhs, rhs;
};

struct SuiteReport {
  long checks = 0;
  std::vector<Finding> findings;  // mismatches between brute force and a printed closed form
  bool ok() const { return findings.empty(); }
};

/// The series/product identities for one prime p: partial sums of Q_{pk}[p],
/// divisor sums over m^k, the prime-power ladder with a coprime t, the
/// tau/Q ratio sums, and the Euler relation. Left sides are brute force.
SuiteReport series_suite(const Integer& p, long s_max, long k_max, const Integer& t);

/// Restricted divisor sums: sum over xt | n of Q_n[xt]; requires x | n.
/// The closed form is the multiplicative product of (2 alpha_p - a_p + 1)
/// with alpha_p = v_p(n), a_p = v_p(x); always equals brute force.
Integer restricted_sum_brute(const Integer& n, const Integer& x);
Integer restricted_sum_closed(const Integer& n, const Integer& x);

/// The printed form tau(x) * tau(n^2 / prod p^(alpha+a)). It agrees with brute
/// force exactly when every exponent of x is either 1 or full; disagreements
/// are suite findings.
Integer restricted_sum_printed(const Integer& n, const Integer& x);

/// sum over p_j^d t | n of Q_n[p_j^d t] = tau(n^2) - d*tau(n^2/p_j^(2 alpha_j));
/// requires p_j^d | n with 1 <= d <= alpha_j.
Integer restricted_sum_prime_brute(const Integer& n, const Integer& pj, unsigned d);
Integer restricted_sum_prime_closed(const Integer& n, const Integer& pj, unsigned d);

/// Fermat quotient q_p(k) = (k^(p-1) - 1)/p for odd prime p, p does not divide k.
Integer fermat_quotient(const Integer& p, const Integer& k);

struct FermatCheck {
  Integer p, d, k;
  Integer quotient;     // q_p(k)
  Integer sq;           // SQ_{k-1}[p]
  bool holds = false;   // dp | q_p(k) + SQ_{k-1}[p]
};

/// The congruence q_p(k) === -SQ_{k-1}[p] (mod dp) with k = dp + 1.
FermatCheck fermat_congruence(const Integer& p, const Integer& d);

/// Paper-printed per-case formulas, evaluated for comparison against brute
/// force (their disagreements are reported, never silently preferred).
QTriple q_printed(const Integer& a, const Integer& b);

}  // namespace esfrac::lcmfn
