#include "esfrac/egyptian.hpp"

#include <algorithm>

namespace esfrac {

UnitTerm::UnitTerm(int s, Integer d) : sign(s), den(std::move(d)) {
  if (sign != 1 && sign != -1) throw DomainError("unit term sign must be +1 or -1");
  if (den < 1) throw DomainError("unit term denominator must be >= 1");
}

Rational UnitTerm::value() const { return make_rational(sign, den); }

bool verify_sum(const UnitFractionSum& s) {
  Rational acc(0);
  for (const UnitTerm& t : s.terms) {
    if (t.den < 1) return false;
    acc += t.value();
  }
  return acc == s.target;
}

UnitFractionSum canonicalize(UnitFractionSum s) {
  std::stable_sort(s.terms.begin(), s.terms.end(), [](const UnitTerm& a, const UnitTerm& b) {
    if (a.sign != b.sign) return a.sign > b.sign;
    return a.den < b.den;
  });
  return s;
}

std::vector<UnitFractionSum> solve_two(const Rational& target) {
  if (target.get_num() != 1) throw DomainError("solve_two needs a unit fraction target");
  const Integer n = target.get_den();
  std::vector<UnitFractionSum> out;
  for (const Integer& v : divisors(n * n)) {
    if (v > n) break;
    UnitFractionSum s;
    s.target = target;
    s.terms = {UnitTerm(+1, n + v), UnitTerm(+1, n + n * n / v)};
    s.provenance = "oracle";
    out.push_back(std::move(s));
  }
  return out;
}

Integer count_two(const Integer& n) {
  if (n < 1) throw DomainError("count_two requires n >= 1");
  Integer t = tau(n * n);
  return (t + 1) / 2;  // ceil(tau(n^2) / 2); tau(n^2) is odd anyway
}

std::vector<std::pair<Integer, Integer>> two_term_splits(const Rational& target) {
  if (target <= 0) throw DomainError("two_term_splits needs a positive target");
  const Integer kk = target.get_num();
  const Integer nn = target.get_den();
  std::vector<std::pair<Integer, Integer>> out;
  for (const Integer& d : divisors(nn * nn)) {
    if (d > nn) break;
    if ((nn + d) % kk != 0) continue;
    Integer big = nn + nn * nn / d;
    if (big % kk != 0) continue;
    out.emplace_back((nn + d) / kk, big / kk);
  }
  return out;
}

std::vector<Triple> solve_three_triples(const Integer& k, const Integer& n, bool find_all) {
  if (k < 1 || n < 1) throw DomainError("solve_three requires k, n >= 1");
  if (k > 3 * n) throw DomainError("solve_three requires k/n <= 3");

  std::vector<Triple> out;
  // x in (n/k, 3n/k]; bounds by exact integer division.
  Integer x = n / k + 1;
  const Integer x_max = 3 * n / k;
  for (; x <= x_max; ++x) {
    Rational residual = make_rational(k, n) - make_rational(1, x);
    if (residual <= 0) continue;
    const Integer kr = residual.get_num();
    const Integer nr = residual.get_den();
    if (kr * x > 2 * nr) continue;  // no y >= x can exist
    for (const Integer& d : divisors(nr * nr)) {
      if (d > nr) break;
      if ((nr + d) % kr != 0) continue;
      Integer y = (nr + d) / kr;
      if (y < x) continue;
      Integer znum = nr + nr * nr / d;
      if (znum % kr != 0) continue;
      out.push_back({x, y, znum / kr});
      if (!find_all) return out;
    }
  }
  return out;
}

UnitFractionSum sum_from_triple(const Integer& k, const Integer& n, const Triple& t,
                                std::string provenance) {
  UnitFractionSum s;
  s.target = make_rational(k, n);
  s.terms = {UnitTerm(+1, t.x), UnitTerm(+1, t.y), UnitTerm(+1, t.z)};
  s.provenance = std::move(provenance);
  return s;
}

std::vector<UnitFractionSum> solve_three(const Integer& k, const Integer& n, bool find_all) {
  std::vector<UnitFractionSum> out;
  for (const Triple& t : solve_three_triples(k, n, find_all))
    out.push_back(sum_from_triple(k, n, t));
  return out;
}

}  // namespace esfrac
