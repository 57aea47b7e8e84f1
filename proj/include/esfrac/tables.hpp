#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esfrac/coverage.hpp"
#include "esfrac/egyptian.hpp"

namespace esfrac::tables {

/// A (b, r, v, s) witness for the key-equation decomposition of 4/w.
struct BrvsRow {
  Integer w;  // prime, w === 1 (mod 4)
  Integer b, r, v, s;
  Integer third_den;  // rvws / ((4rv-1)s - rw)
  bool verified = false;
};

struct BrvsCaps {
  long b_max = 64;
  long s_max = 10000;
};

/// Smallest witness under the documented order: s-cap rounds doubling from 16
/// up to caps.s_max, and lexicographic (b, r, s) within a round (v = rv/r).
/// nullopt means none-within-bounds.
std::optional<BrvsRow> search_brvs(const Integer& w, const BrvsCaps& caps = {});

/// Recomputes every invariant of a row: rv = ((4b-1)w+1)/4, the divisor is
/// positive and divides rvws, and the key-equation evaluation verifies.
bool verify_brvs_row(const BrvsRow& row);

/// Builds a row from a printed tuple and verifies it.
BrvsRow make_brvs_row(const Integer& w, const Integer& b, const Integer& r, const Integer& v,
                      const Integer& s);

struct WitnessRow {
  Integer n;
  std::optional<coverage::IntegerWitness> integer_witness;
  std::optional<coverage::RationalWitness> rational_witness;
};

/// Integer-size witness for k = 4 with the rational-size fallback.
WitnessRow search_integer_witness(const Integer& n, const Integer& rational_bound = 200);

struct AbcRow {
  Integer m, a, b, c;
  int variant;  // which of the two pair equations the tuple satisfies first
};

/// Tuples (m, a, b, c) with m === 1 (mod 840), m <= m_max, c < c_max,
/// b < b_max, a < (m+c)/4, satisfying the pair preconditions; ascending
/// (m, c, a, b) order. Every returned tuple re-verifies through evaluation.
std::vector<AbcRow> search_abc_mod840(const Integer& m_max, long c_max, long b_max);

/// Byte-stable CSV: fixed column order, LF endings, decimal-string integers.
std::string brvs_csv(const std::vector<BrvsRow>& rows);
std::string witness_csv(const std::vector<WitnessRow>& rows);
std::string abc_csv(const std::vector<AbcRow>& rows);

}  // namespace esfrac::tables
