#include "esfrac/lcmfn.hpp"

#include <sstream>

namespace esfrac::lcmfn {
namespace {

unsigned valuation(Integer n, const Integer& p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::string str(const Integer& v) { return v.get_str(); }

}  // namespace

QTriple q_brute(const Integer& a, const Integer& b) {
  if (a < 1 || b < 1) throw DomainError("q_brute needs a, b >= 1");
  QTriple t{a, b, 0, 0, 1};
  for (const Integer& x : divisors(a)) {
    if (lcm(x, b) != a) continue;
    t.q += 1;
    t.sq += x;
    t.mq *= x;
  }
  return t;
}

QTriple q_closed(const Integer& a, const Integer& b) {
  if (a < 1 || b < 1) throw DomainError("q_closed needs a, b >= 1");
  if (a % b != 0) throw DomainError("q_closed needs b | a");
  Factorization fa = factorize(a);
  Integer F = 1;
  for (const auto& [prime, exp] : fa.factors)
    if (valuation(b, prime) == exp) F *= pow_ui(prime, exp);
  Integer D = a / F;
  Factorization ff = factorize(F);
  Integer tF = tau(ff);
  QTriple t{a, b, tF, D * sigma(ff), 0};
  // product of divisors of F is F^(tau/2); odd tau means F is a square
  Integer prod_divs;
  if (tF % 2 == 0) {
    prod_divs = pow_ui(F, mpz_get_ui(Integer(tF / 2).get_mpz_t()));
  } else {
    prod_divs = pow_ui(exact_sqrt(F), mpz_get_ui(tF.get_mpz_t()));
  }
  Integer Dq;
  mpz_pow_ui(Dq.get_mpz_t(), D.get_mpz_t(), mpz_get_ui(tF.get_mpz_t()));
  t.mq = Dq * prod_divs;
  return t;
}

QTriple q_printed(const Integer& a, const Integer& b) {
  if (a < 1 || b < 1 || a % b != 0) throw DomainError("q_printed needs b | a");
  // k = product of p^{v_p(a)} over p | b, d = a/k (the paper's split)
  Factorization fa = factorize(a);
  Integer K = 1;
  for (const auto& [prime, exp] : fa.factors)
    if (b % prime == 0) K *= pow_ui(prime, exp);
  Integer D = a / K;
  Factorization fk = factorize(K);
  Integer tK = tau(fk);
  QTriple t{a, b, tK, D * sigma(fk), 0};
  Integer prod_divs = tK % 2 == 0 ? pow_ui(K, mpz_get_ui(Integer(tK / 2).get_mpz_t()))
                                  : pow_ui(exact_sqrt(K), mpz_get_ui(tK.get_mpz_t()));
  Integer Dq;
  mpz_pow_ui(Dq.get_mpz_t(), D.get_mpz_t(), mpz_get_ui(tK.get_mpz_t()));
  t.mq = Dq * prod_divs;
  return t;
}

Integer sum_q_over_divisors(const Integer& n) {
  if (n < 1) throw DomainError("sum_q_over_divisors needs n >= 1");
  Integer total = 0;
  for (const Integer& x : divisors(n)) total += q_brute(n, x).q;
  return total;
}

SuiteReport series_suite(const Integer& p, long s_max, long k_max, const Integer& t) {
  if (!is_prime(p)) throw DomainError("series_suite needs p prime");
  SuiteReport rep;
  auto record = [&](const std::string& id, const std::string& in, const Integer& lhs,
                    const Integer& rhs) {
    ++rep.checks;
    if (lhs != rhs) rep.findings.push_back({id, in, str(lhs), str(rhs)});
  };

  // partial sums/products of Q_{pk}[p]
  {
    Integer sum = 0, prod = 1;
    for (long k = 1; k <= s_max; ++k) {
      QTriple q = q_brute(p * k, p);
      sum += q.q;
      prod *= q.q;
      record("sum Q_pk[p] = 2s - floor(s/p)", "p=" + str(p) + " s=" + std::to_string(k), sum,
             Integer(2 * k) - Integer(k) / p);
      record("prod Q_pk[p] = 2^(s - floor(s/p))", "p=" + str(p) + " s=" + std::to_string(k), prod,
             Integer(1) << mpz_get_ui(Integer(Integer(k) - Integer(k) / p).get_mpz_t()));
    }
  }

  // sums over divisors of p^k
  for (long k = 0; k <= k_max; ++k) {
    Integer pk = pow_ui(p, k);
    Integer sum = 0, prod = 1;
    for (const Integer& x : divisors(pk)) {
      QTriple q = q_brute(pk, x);
      sum += q.q;
      prod *= q.q;
    }
    record("sum_{x|m^k} Q = 2k+1", "m=" + str(p) + " k=" + std::to_string(k), sum,
           Integer(2 * k + 1));
    record("prod_{x|m^k} Q = k+1", "m=" + str(p) + " k=" + std::to_string(k), prod,
           Integer(k + 1));
  }

  // the ladder sum_{r=0..k} Q_{t p^r}[p^r]
  if (gcd(t, p) == 1) {
    Integer sum = 0, prod = 1;
    for (long r = 0; r <= k_max; ++r) {
      QTriple q = q_brute(t * pow_ui(p, r), pow_ui(p, r));
      sum += q.q;
      prod *= q.q;
      record("sum_{r<=k} Q_{t p^r}[p^r] = C(k+2,2)",
             "p=" + str(p) + " t=" + str(t) + " k=" + std::to_string(r), sum,
             Integer((r + 2) * (r + 1) / 2));
      Integer fact = 1;
      for (long i = 2; i <= r + 1; ++i) fact *= i;
      record("prod_{r<=k} Q_{t p^r}[p^r] = (k+1)!",
             "p=" + str(p) + " t=" + str(t) + " k=" + std::to_string(r), prod, fact);
    }
  }

  // sum/prod of tau(b)/Q_{p^k}[b] over b | p^k (exact rationals, integer total)
  for (long k = 0; k <= k_max; ++k) {
    Integer pk = pow_ui(p, k);
    Rational sum(0), prod(1);
    for (const Integer& x : divisors(pk)) {
      Rational ratio = make_rational(tau(x), q_brute(pk, x).q);
      sum += ratio;
      prod *= ratio;
    }
    ++rep.checks;
    if (!is_integral(sum) || sum.get_num() != Integer(k * (k + 1) / 2 + 1))
      rep.findings.push_back({"sum tau(b)/Q = C(k+1,2)+1", "p=" + str(p) + " k=" + std::to_string(k),
                              sum.get_str(), Integer(k * (k + 1) / 2 + 1).get_str()});
    Integer fact = 1;
    for (long i = 2; i <= k; ++i) fact *= i;
    ++rep.checks;
    if (!is_integral(prod) || prod.get_num() != fact)
      rep.findings.push_back({"prod tau(b)/Q = k!", "p=" + str(p) + " k=" + std::to_string(k),
                              prod.get_str(), fact.get_str()});
  }

  // Euler relation: s = p
  {
    Integer sum = 0, prod = 1;
    for (Integer k = 1; k <= p; ++k) {
      QTriple q = q_brute(p * k, p);
      sum += q.q;
      prod *= q.q;
    }
    record("sum_{k<=p} Q_pk[p] = p + phi(p)", "p=" + str(p), sum, p + phi(p));
    Integer pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, mpz_get_ui(phi(p).get_mpz_t()));
    record("prod_{k<=p} Q_pk[p] = 2^phi(p)", "p=" + str(p), prod, pow2);
  }
  return rep;
}

Integer restricted_sum_brute(const Integer& n, const Integer& x) {
  if (n < 1 || x < 1 || n % x != 0) throw DomainError("restricted_sum needs x | n");
  Integer total = 0;
  for (const Integer& d : divisors(n))
    if (d % x == 0) total += q_brute(n, d).q;
  return total;
}

Integer restricted_sum_closed(const Integer& n, const Integer& x) {
  if (n < 1 || x < 1 || n % x != 0) throw DomainError("restricted_sum needs x | n");
  // Per prime with alpha = v_p(n), a = v_p(x): pairs (j, i) with a <= j <= alpha
  // and max(i, j) = alpha number 2*alpha - a + 1. The sum is multiplicative.
  Integer total = 1;
  for (const auto& [prime, exp] : factorize(n).factors)
    total *= 2 * Integer(exp) - valuation(x, prime) + 1;
  return total;
}

Integer restricted_sum_printed(const Integer& n, const Integer& x) {
  if (n < 1 || x < 1 || n % x != 0) throw DomainError("restricted_sum needs x | n");
  Integer denom = 1;
  for (const auto& [prime, exp] : factorize(x).factors)
    denom *= pow_ui(prime, exp + valuation(n, prime));
  return tau(x) * tau(n * n / denom);
}

Integer restricted_sum_prime_brute(const Integer& n, const Integer& pj, unsigned d) {
  Integer pd = pow_ui(pj, d);
  if (n % pd != 0) throw DomainError("restricted_sum_prime needs p^d | n");
  return restricted_sum_brute(n, pd);
}

Integer restricted_sum_prime_closed(const Integer& n, const Integer& pj, unsigned d) {
  if (!is_prime(pj)) throw DomainError("restricted_sum_prime needs a prime");
  unsigned alpha = valuation(n, pj);
  if (d < 1 || d > alpha) throw DomainError("restricted_sum_prime needs 1 <= d <= alpha");
  Integer reduced = n * n / pow_ui(pj, 2 * alpha);
  return tau(n * n) - Integer(d) * tau(reduced);
}

Integer fermat_quotient(const Integer& p, const Integer& k) {
  if (!is_prime(p) || p == 2) throw DomainError("fermat_quotient needs an odd prime");
  if (k % p == 0) throw DomainError("fermat_quotient needs p coprime to k");
  Integer num = pow_ui(k, mpz_get_ui(Integer(p - 1).get_mpz_t())) - 1;
  return num / p;
}

FermatCheck fermat_congruence(const Integer& p, const Integer& d) {
  if (!is_prime(p) || p == 2) throw DomainError("fermat_congruence needs an odd prime");
  if (d < 1) throw DomainError("fermat_congruence needs d >= 1");
  FermatCheck chk;
  chk.p = p;
  chk.d = d;
  chk.k = d * p + 1;
  chk.quotient = fermat_quotient(p, chk.k);
  chk.sq = q_brute(chk.k - 1, p).sq;
  chk.holds = (chk.quotient + chk.sq) % (d * p) == 0;
  return chk;
}

}  // namespace esfrac::lcmfn
