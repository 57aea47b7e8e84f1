#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "esfrac/arith.hpp"

namespace esfrac {

/// One signed unit fraction sign/den with den >= 1.
struct UnitTerm {
  int sign = +1;  // +1 or -1
  Integer den = 1;

  UnitTerm() = default;
  UnitTerm(int s, Integer d);

  Rational value() const;
  bool operator==(const UnitTerm&) const = default;
};

/// A target fraction together with a finite list of signed unit terms that is
/// claimed (and, once checked, verified) to sum to it exactly.
struct UnitFractionSum {
  Rational target;
  std::vector<UnitTerm> terms;
  std::string provenance = "oracle";  // registry entry id or "oracle"
};

/// UnitFractionSum plus the metadata the CLI and table emitters carry around.
struct DecompRecord {
  Integer k;
  Integer n;
  UnitFractionSum sum;
  std::string family = "oracle";
  std::map<std::string, std::string> params;
  bool verified = false;
};

/// true iff the exact rational sum of the signed terms equals the target.
bool verify_sum(const UnitFractionSum& s);

/// Terms sorted by (sign descending, denominator ascending); duplicates kept.
UnitFractionSum canonicalize(UnitFractionSum s);

/// Sorted positive triple x <= y <= z.
struct Triple {
  Integer x, y, z;

  bool operator==(const Triple&) const = default;
  bool operator<(const Triple& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return z < o.z;
  }
};

/// All unordered pairs {x <= y} with 1/x + 1/y = 1/n, via the divisors of n^2.
/// The target must be a unit fraction.
std::vector<UnitFractionSum> solve_two(const Rational& target);

/// ceil(tau(n^2) / 2); equals |solve_two(1/n)|.
Integer count_two(const Integer& n);

/// Brute-force three-term oracle: all (or the lexicographically smallest, when
/// find_all is false) sorted triples x <= y <= z of positive integers with
/// k/n = 1/x + 1/y + 1/z. Requires k/n <= 3. Enumeration is by ascending x,
/// with the residual two-term equation solved exactly through the divisors of
/// the reduced residual denominator squared.
std::vector<Triple> solve_three_triples(const Integer& k, const Integer& n, bool find_all);
std::vector<UnitFractionSum> solve_three(const Integer& k, const Integer& n, bool find_all);

UnitFractionSum sum_from_triple(const Integer& k, const Integer& n, const Triple& t,
                                std::string provenance = "oracle");

/// All {y <= z} with target = 1/y + 1/z for a positive rational target.
std::vector<std::pair<Integer, Integer>> two_term_splits(const Rational& target);

}  // namespace esfrac
