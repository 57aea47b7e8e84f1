#include <doctest.h>

#include <numeric>

#include "esfrac/arith.hpp"

using namespace esfrac;

namespace {

uint64_t mix(uint64_t& s) {
  uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

TEST_CASE("gcd basics") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(7, 1) == 1);
  CHECK(gcd(5, 17) == 1);
  CHECK(lcm(5, 17) == 85);
  CHECK(gcd(0, 5) == 5);
  CHECK(gcd(-12, 18) == 6);
  CHECK_THROWS_AS(gcd(0, 0), DomainError);
}

TEST_CASE("lcm_many") {
  CHECK(lcm_many(std::vector<Integer>{1, 2, 21}) == 42);
  CHECK(lcm_many(std::vector<Integer>{7}) == 7);
  CHECK(lcm_many(std::vector<Integer>{2, 3, 4}) == 12);
  CHECK_THROWS_AS(lcm_many(std::vector<Integer>{}), DomainError);
  CHECK_THROWS_AS(lcm_many(std::vector<Integer>{2, 0}), DomainError);
}

TEST_CASE("gcd*lcm = a*b on random pairs") {
  uint64_t s = 42;
  for (int i = 0; i < 2000; ++i) {
    Integer a = Integer(1 + mix(s) % 1000000);
    Integer b = Integer(1 + mix(s) % 1000000);
    CHECK(gcd(a, b) * lcm(a, b) == a * b);
  }
}

TEST_CASE("lcm of a triple via the gcd identity") {
  uint64_t s = 7;
  for (int i = 0; i < 1000; ++i) {
    Integer a = Integer(1 + mix(s) % 10000);
    Integer b = Integer(1 + mix(s) % 10000);
    Integer c = Integer(1 + mix(s) % 10000);
    Integer l = lcm_many(std::vector<Integer>{a, b, c});
    Integer g = gcd(gcd(a * b, a * c), b * c);
    CHECK(l * g == a * b * c);
  }
}

TEST_CASE("primality") {
  CHECK(is_prime(5569));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4095));
  CHECK(is_prime(2));
  CHECK(is_prime(Integer("18446744073709551557")));  // largest prime below 2^64
  CHECK(primality(1009).deterministic);
  // beyond 2^64 the verdict is flagged probabilistic
  Integer big = (Integer(1) << 89) - 1;  // Mersenne prime 2^89 - 1
  PrimalityResult r = primality(big);
  CHECK(r.is_prime);
  CHECK_FALSE(r.deterministic);
}

TEST_CASE("factorize") {
  auto f = factorize(451);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].prime == 11);
  CHECK(f.factors[0].exponent == 1);
  CHECK(f.factors[1].prime == 41);
  CHECK(factorize(1).factors.empty());
  auto g = factorize(144);
  REQUIRE(g.factors.size() == 2);
  CHECK(g.factors[0].prime == 2);
  CHECK(g.factors[0].exponent == 4);
  CHECK(g.factors[1].prime == 3);
  CHECK(g.factors[1].exponent == 2);
  CHECK_THROWS_AS(factorize(0), DomainError);
}

TEST_CASE("factorize round-trips below 1e5") {
  for (long n = 1; n <= 100000; ++n) CHECK(factorize(n).value() == n);
}

TEST_CASE("factorize splits a large semiprime") {
  Integer a("1000003"), b("10000019");
  auto f = factorize(a * b);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].prime == a);
  CHECK(f.factors[1].prime == b);
}

TEST_CASE("divisors") {
  CHECK(divisors(12) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(13) == std::vector<Integer>{1, 13});
  CHECK(divisors(144).size() == 15);
  CHECK(divisors(1) == std::vector<Integer>{1});
}

TEST_CASE("tau sigma phi closed forms vs brute scans") {
  CHECK(tau(144) == 15);
  CHECK(sigma(3) == 4);
  CHECK(phi(97) == 96);
  for (long n = 1; n <= 10000; ++n) {
    Integer t = 0, s = 0, ph = 0;
    for (long d = 1; d <= n; ++d) {
      if (n % d == 0) {
        t += 1;
        s += d;
      }
    }
    for (long a = 1; a <= n; ++a)
      if (std::gcd(a, n) == 1) ph += 1;
    CHECK(tau(n) == t);
    CHECK(sigma(n) == s);
    CHECK(phi(n) == ph);
  }
}

TEST_CASE("rationals are always reduced and exact") {
  Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  uint64_t s = 11;
  for (int i = 0; i < 500; ++i) {
    Rational a = make_rational(long(mix(s) % 1000) - 500, 1 + long(mix(s) % 60));
    Rational b = make_rational(long(mix(s) % 1000) - 500, 1 + long(mix(s) % 60));
    Rational sum = a + b;
    CHECK(sum.get_den() >= 1);
    CHECK(gcd(Integer(sum.get_num() == 0 ? 1 : sum.get_num()), Integer(sum.get_den())) == 1);
    CHECK(sum - b == a);
    Rational prod = a * b;
    if (b != 0) CHECK(prod / b == a);
  }
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("exact_sqrt") {
  CHECK(exact_sqrt(144) == 12);
  CHECK_THROWS_AS(exact_sqrt(2), DomainError);
}
