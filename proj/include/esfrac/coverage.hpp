#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esfrac/coverage_types.hpp"
#include "esfrac/families.hpp"

namespace esfrac::coverage {

/// Splits c into `factor` disjoint subclasses of modulus c.modulus * factor
/// whose union is c, offsets ascending.
std::vector<ResidueClass> split(const ResidueClass& c, const Integer& factor);

struct CoverEntry {
  std::string family;   // registry entry id
  std::string binding;  // fixed non-free parameters
  ResidueClass signature;
};

struct ResidueStatus {
  Integer residue;           // n === residue (mod modulus)
  Integer offset;            // the same class written as modulus*t - offset
  std::vector<CoverEntry> covered_by;
};

struct CoverageReport {
  Integer modulus;
  Integer k = 4;   // only instances with this (unreduced) target numerator count
  long grid = 12;  // non-free parameters were drawn from [1, grid]
  std::vector<ResidueStatus> residues;  // ascending residue 0..modulus-1

  const ResidueStatus& at(const Integer& residue) const;
  bool covered(const Integer& residue) const;
};

/// A residue class r (mod M) is covered by a family instance when every member
/// of the class from the instance's start onward is served: the instance's
/// progression modulus divides M, offsets agree, and the progression starts at
/// or below the class's first member.
CoverageReport covers(const std::vector<std::string>& family_ids, const Integer& modulus,
                      const Integer& k = 4, long grid = 12);

struct MordellReport {
  bool squares = true;  // residues read as squares {1,121,169,289,361,529}
  std::vector<ResidueStatus> residues;
};

/// Coverage status of the six Mordell residues mod 840. `raw_digits` switches
/// to the literal printed values {12,112,132,172,192,232}.
MordellReport mordell_check(const std::vector<std::string>& family_ids, bool raw_digits = false,
                            const Integer& k = 4, long grid = 12);

struct IntegerWitness {
  Integer c, d, t;
};

struct RationalWitness {
  Integer e, u, f, t;
};

/// Smallest (c, d, t), c <= d, with k*lcm(c,d)*t = n + c + d, searched
/// exhaustively with max(c,d) <= ceil(n/(k-2)) for k >= 3 (ceil(n/2) for
/// k = 4); nullopt is a proof of nonexistence within that derived bound.
std::optional<IntegerWitness> integer_size_reachable(const Integer& n, const Integer& k);

/// Smallest (e, u, f, t), e <= u <= bound, f | e+u, with
/// k*lcm(e,u)*t = n + (e+u)/f. nullopt is only a bounded verdict.
std::optional<RationalWitness> rational_size_reachable(const Integer& n, const Integer& k,
                                                       const Integer& bound);

}  // namespace esfrac::coverage
