#include <doctest.h>

#include "esfrac/coverage.hpp"

using namespace esfrac;
using namespace esfrac::coverage;

TEST_CASE("residue class normalization and membership") {
  ResidueClass c(8, 7, 1);
  CHECK(c.contains(1));
  CHECK(c.contains(9));
  CHECK_FALSE(c.contains(3));
  CHECK(c.residue() == 1);
  CHECK(c.min_member() == 1);

  // offset normalizes into [0, m) and t0 shifts to keep the same set
  ResidueClass d(8, 31, 4);  // {8t-31 : t >= 4} = {1, 9, 17, ...}
  CHECK(d.offset == 7);
  CHECK(d.contains(1));
  CHECK(d.min_member() == 1);
}

TEST_CASE("split is an ascending-offset partition") {
  ResidueClass odd(2, 1, 1);
  auto parts = split(odd, 2);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == ResidueClass(4, 1, 1));
  CHECK(parts[1] == ResidueClass(4, 3, 1));

  ResidueClass c(24, 23, 1);
  auto five = split(c, 5);
  REQUIRE(five.size() == 5);
  for (long i = 0; i < 5; ++i) CHECK(five[i] == ResidueClass(120, 23 + 24 * i, 1));

  auto eleven = split(ResidueClass(120, 119, 1), 11);
  REQUIRE(eleven.size() == 11);
  CHECK(eleven.front() == ResidueClass(1320, 119, 1));
  CHECK(eleven.back() == ResidueClass(1320, 1319, 1));
}

TEST_CASE("split partitions the parent set") {
  for (long f : {2, 3, 5}) {
    ResidueClass parent(6, 5, 2);
    auto parts = split(parent, f);
    for (long n = 1; n <= 10000; ++n) {
      int in_parts = 0;
      for (const auto& p : parts) in_parts += p.contains(n) ? 1 : 0;
      CHECK(in_parts == (parent.contains(n) ? 1 : 0));
    }
  }
}

TEST_CASE("covers: F32 instances mod 8") {
  auto rep = covers({"F32"}, 8);
  // classes 8t-1, 8t-3, 8t-5 (residues 7, 5, 3) covered; 8t-7 (residue 1) not
  CHECK(rep.covered(7));
  CHECK(rep.covered(5));
  CHECK(rep.covered(3));
  CHECK_FALSE(rep.covered(1));
}

TEST_CASE("covers is sound: residue-class members lie in the progression") {
  auto rep = covers({"F32", "F31", "F43"}, 8);
  for (const auto& st : rep.residues) {
    for (const auto& entry : st.covered_by) {
      // 100 consecutive members of the residue class, from the progression's
      // start onward, must lie in the family progression
      Integer first = st.residue == 0 ? Integer(8) : st.residue;
      for (long i = 0; i < 100; ++i) CHECK(entry.signature.contains(first + 8 * i));
    }
  }
}

TEST_CASE("covers: F31 with k=4 covers exactly n === 3 (mod 4)") {
  auto rep = covers({"F31"}, 4);
  CHECK(rep.covered(3));
  CHECK_FALSE(rep.covered(0));
  CHECK_FALSE(rep.covered(1));
  CHECK_FALSE(rep.covered(2));
}

TEST_CASE("empty family set covers nothing") {
  auto rep = covers({}, 8);
  for (const auto& st : rep.residues) CHECK(st.covered_by.empty());
}

TEST_CASE("integer size reachability") {
  CHECK_FALSE(integer_size_reachable(7, 4).has_value());
  CHECK_FALSE(integer_size_reachable(3, 4).has_value());
  auto w = integer_size_reachable(3049, 4);
  REQUIRE(w.has_value());
  CHECK(4 * lcm(w->c, w->d) * w->t == 3049 + w->c + w->d);
  // n = 11 (=== 3 mod 4) has a witness: exhaustive search decides
  auto w11 = integer_size_reachable(11, 4);
  REQUIRE(w11.has_value());
  CHECK(4 * lcm(w11->c, w11->d) * w11->t == 11 + w11->c + w11->d);
}

TEST_CASE("rational size reachability finds the quoted witnesses") {
  auto w7 = rational_size_reachable(7, 4, 10);
  REQUIRE(w7.has_value());
  CHECK(w7->e == 1);
  CHECK(w7->u == 1);
  CHECK(w7->f == 2);
  CHECK(w7->t == 2);

  auto w409 = rational_size_reachable(409, 4, 20);
  REQUIRE(w409.has_value());
  CHECK(w409->e == 1);
  CHECK(w409->u == 13);
  CHECK(w409->f == 2);
  CHECK(w409->t == 8);

  auto w5569 = rational_size_reachable(5569, 4, 200);
  REQUIRE(w5569.has_value());
  CHECK(4 * lcm(w5569->e, w5569->u) * w5569->t * w5569->f ==
        (5569 + (w5569->e + w5569->u) / w5569->f) * w5569->f);
}

TEST_CASE("multiple-chain identities x(at-(a-1))+1 = a(xt-b)") {
  // prime x+1: a = x+1, b = x-1
  for (long x : {2, 4, 10}) {
    long a = x + 1;
    for (long t = 1; t <= 50; ++t) CHECK(x * (a * t - (a - 1)) + 1 == a * (x * t - (x - 1)));
  }
  // the three concrete factorizations from the splitting tree
  for (long t = 1; t <= 50; ++t) {
    CHECK(3 * (8 * t - 5) == 24 * t - 15);
    CHECK(5 * (24 * t - 19) == 120 * t - 95);
    CHECK(11 * (120 * t - 109) == 1320 * t - 1199);
  }
}

TEST_CASE("mordell check is diagnostic") {
  auto rep = mordell_check({}, false);
  REQUIRE(rep.residues.size() == 6);
  for (const auto& st : rep.residues) CHECK(st.covered_by.empty());
  auto raw = mordell_check({}, true);
  CHECK(raw.residues[0].residue == 12);
}
