#include <doctest.h>

#include <set>

#include "esfrac/families.hpp"

using namespace esfrac;
using namespace esfrac::families;

namespace {

Binding bind(std::initializer_list<std::pair<const char*, long>> kv) {
  Binding b;
  for (auto& [name, value] : kv) b.set(name, value);
  return b;
}

std::multiset<Integer> dens(const DecompRecord& rec) {
  std::multiset<Integer> out;
  for (const auto& t : rec.sum.terms) out.insert(t.den);
  return out;
}

}  // namespace

TEST_CASE("registry shape") {
  const auto& reg = Registry::instance();
  // every catalog id F01..F53 resolves to at least one entry
  for (int i = 1; i <= 53; ++i) {
    char id[8];
    snprintf(id, sizeof id, "F%02d", i);
    CHECK(!reg.resolve(id).empty());
  }
  CHECK(reg.resolve("F32").size() == 6);
  CHECK(reg.resolve("F48").size() == 5);
  CHECK(reg.resolve("F42").size() == 3);
  CHECK(reg.resolve("F17").size() == 2);
  CHECK_THROWS_AS(reg.resolve("F99"), DomainError);
}

TEST_CASE("F31 pins") {
  auto rec = evaluate("F31", bind({{"k", 4}, {"b", 2}}));
  CHECK(rec.n == 7);
  CHECK(dens(rec) == std::multiset<Integer>{2, 16, 112});
  CHECK(rec.verified);
}

TEST_CASE("F43 pins") {
  auto rec = evaluate("F43", bind({{"n", 7}}));
  CHECK(dens(rec) == std::multiset<Integer>{2, 28, 28});
}

TEST_CASE("F51 and F52 pins: 4/13") {
  auto rec = evaluate("F51", bind({{"w", 13}, {"b", 1}, {"r", 1}, {"v", 10}, {"s", 1}}));
  CHECK(dens(rec) == std::multiset<Integer>{5, 10, 130});
  auto rec2 = evaluate("F52", bind({{"w", 13}, {"b", 1}, {"r", 1}, {"v", 10}, {"s", 1}}));
  CHECK(dens(rec2) == std::multiset<Integer>{5, 10, 130});
  // second printed partition: s = 2
  auto rec3 = evaluate("F52", bind({{"w", 13}, {"b", 1}, {"r", 1}, {"v", 10}, {"s", 2}}));
  CHECK(dens(rec3) == std::multiset<Integer>{4, 20, 130});
  // the b=3 witness giving 1/4 + 1/18 + 1/468
  auto rec4 = evaluate("F52", bind({{"w", 13}, {"b", 3}, {"r", 9}, {"v", 4}, {"s", 1}}));
  CHECK(dens(rec4) == std::multiset<Integer>{4, 18, 468});
}

TEST_CASE("F13 pins: the two 4/5569 partitions") {
  auto r1 = evaluate("F13", bind({{"k", 4}, {"z", 1}, {"d", 1}, {"v", 71}, {"n", 5569},
                                  {"alpha", 282}}));
  CHECK(dens(r1) == std::multiset<Integer>{1410, 111380, 15704580});
  auto r2 = evaluate("F13", bind({{"k", 4}, {"z", 2}, {"d", 3}, {"v", 7}, {"n", 5569},
                                  {"alpha", 41}}));
  CHECK(dens(r2) == std::multiset<Integer>{1394, 1136076, 46579116});
}

TEST_CASE("F45 pins: the two 4/1801 modular partitions") {
  auto r1 = evaluate("F45", bind({{"t", 450}, {"s", 4}}));
  CHECK(dens(r1) == std::multiset<Integer>{451, 295364, 3249004});
  auto r2 = evaluate("F45", bind({{"t", 450}, {"s", 14}}));
  CHECK(dens(r2) == std::multiset<Integer>{451, 277354, 11371514});
}

TEST_CASE("F53 pin from small triples") {
  auto rec = evaluate("F53.1", bind({{"a", 1}, {"b", 1}, {"c", 2}, {"d", 1}}));
  CHECK(rec.k == 4);
  CHECK(rec.n == 2);
  CHECK(dens(rec) == std::multiset<Integer>{1, 2, 2});
  // out of domain: a+b+c = 6 not divisible by 4
  CHECK_FALSE(check_domain(Registry::instance().entry("F53.1"),
                           bind({{"a", 1}, {"b", 2}, {"c", 3}, {"d", 1}}))
                  .ok);
}

TEST_CASE("check_domain reports the violated predicate") {
  const auto& f02 = Registry::instance().entry("F02");
  auto rep = check_domain(f02, bind({{"k", 4}, {"m", 3}, {"v", 2}, {"t", 2}}));
  CHECK(rep.ok);
  auto rep2 = check_domain(f02, bind({{"k", 4}, {"m", 3}, {"v", 2}, {"t", 3}}));
  CHECK_FALSE(rep2.ok);
  REQUIRE(!rep2.violated.empty());
  CHECK(rep2.violated[0] == "v | t");

  // F51 with a zero divisor: (4rv-1)s = rw
  const auto& f51 = Registry::instance().entry("F51");
  auto rep3 = check_domain(f51, bind({{"w", 13}, {"r", 1}, {"v", 1}, {"s", 13}}));
  CHECK_FALSE(rep3.ok);

  // incomplete binding is an error, not a report
  CHECK_THROWS_AS(check_domain(f02, bind({{"k", 4}})), DomainError);
}

TEST_CASE("F48.5 z-range guard") {
  const auto& f = Registry::instance().entry("F48.5");
  // t=1: z must lie in [7, 12]; y = 6 gives z = 13 > 12
  auto rep = check_domain(f, bind({{"t", 1}, {"y", 6}, {"v", 1}, {"m", 1}}));
  CHECK_FALSE(rep.ok);
}

TEST_CASE("residue signatures") {
  const auto& reg = Registry::instance();
  CHECK(residue_signature(reg.entry("F33"), bind({{"w", 1}})) == ResidueClass(8, 3, 1));
  CHECK(residue_signature(reg.entry("F34"), bind({{"w", 1}})) == ResidueClass(16, 13, 1));
  CHECK(residue_signature(reg.entry("F41"), bind({{"k", 4}, {"r", 1}})) == ResidueClass(12, 7, 1));
  CHECK(residue_signature(reg.entry("F31"), bind({{"k", 4}})) == ResidueClass(4, 1, 1));
  CHECK(residue_signature(reg.entry("F32.1"), {}) == ResidueClass(8, 1, 1));
  CHECK(residue_signature(reg.entry("F49.1"), {}) == ResidueClass(120, 23, 1));
  // F50 with b = 1: admissible t are 1, 4, 7, ... so n = 8t+1 runs over 24x-15
  CHECK(residue_signature(reg.entry("F50"), bind({{"b", 1}})) == ResidueClass(24, 15, 1));
  // no free variable
  CHECK_THROWS_AS(residue_signature(reg.entry("F53.1"), bind({{"a", 1}, {"b", 1}, {"c", 2}})),
                  NotAProgression);
}

TEST_CASE("signature soundness: evaluate matches the progression") {
  struct Case {
    const char* id;
    Binding partial;
  };
  std::vector<Case> cases = {
      {"F31", bind({{"k", 4}})},          {"F33", bind({{"w", 2}})},
      {"F34", bind({{"w", 3}})},          {"F41", bind({{"k", 4}, {"r", 2}})},
      {"F32.3", {}},                      {"F46", {}},
      {"F47", {}},                        {"F49.2", {}},
      {"F50", bind({{"b", 2}})},          {"F35", bind({{"k", 4}, {"w", 1}})},
      {"F44", bind({{"r", 2}, {"s", 1}})},
  };
  const auto& reg = Registry::instance();
  for (const auto& cs : cases) {
    const auto& f = reg.entry(cs.id);
    ResidueClass sig = residue_signature(f, cs.partial);
    REQUIRE(f.free_var.has_value());
    long found = 0;
    for (long t = 1; t <= 4000 && found < 100; ++t) {
      Binding b = cs.partial;
      b.set(*f.free_var, t);
      if (!check_domain(f, b).ok) continue;
      auto rec = evaluate(f, b);
      CHECK(sig.contains(rec.n));
      CHECK(rec.n == sig.member(found));
      ++found;
    }
    CHECK(found == 100);
  }
}

TEST_CASE("F42 shifted form matches the rational-point form term for term") {
  const auto& reg = Registry::instance();
  for (long t = 1; t <= 50; ++t) {
    Binding bx;
    bx.scalars["x"] = make_rational(2 * t - 1, 2);  // x = t - 1/2
    auto a = evaluate(reg.entry("F42.1"), bx);
    auto b = evaluate(reg.entry("F42.2"), bind({{"t", t}}));
    CHECK(a.n == b.n);
    REQUIRE(a.sum.terms.size() == b.sum.terms.size());
    for (size_t i = 0; i < a.sum.terms.size(); ++i) CHECK(a.sum.terms[i].den == b.sum.terms[i].den);
  }
}

TEST_CASE("F32/F30 consistency with the mod-8 progressions") {
  // For q === 1,-1,-3,-5 (mod 8) the printed progressions give qv+1 === 0
  // (mod 8) for every t; a t <= 100 with (q-1) | (qv+1)/4 exists for each q.
  auto v_of = [](long qmod8, long t) -> long {
    switch (qmod8) {
      case 1: return 8 * t - 1;
      case 7: return 24 * t - 7;
      case 5: return 8 * t - 5;
      case 3: return 24 * t - 19;
    }
    return 0;
  };
  for (long q = 3; q <= 41; q += 2) {
    long cls = q % 8;
    bool exists = false;
    for (long t = 1; t <= 100; ++t) {
      long v = v_of(cls, t);
      long qv1 = q * v + 1;
      CHECK(qv1 % 8 == 0);
      if ((qv1 / 4) % (q - 1) == 0) exists = true;
    }
    CHECK(exists);
  }
}

TEST_CASE("F35/F36 divisibility lemmas") {
  // F35: B = ((k^2 w - 2k)t - (kw-1))(kw-1) + 1 has k(kw-2) | B with quotient
  // (kw-1)t - w. F36: B = (k^2 w t - ((k-1)kw+1))(kw+1) + 1 has k^2 w | B with
  // quotient (kw+1)t - ((k-1)w+1).
  for (long k = 1; k <= 5; ++k) {
    for (long w = 1; w <= 5; ++w) {
      for (long t = 1; t <= 20; ++t) {
        if (k * w >= 3) {
          Integer n = Integer(k * k * w - 2 * k) * t - (k * w - 1);
          Integer B = n * (k * w - 1) + 1;
          Integer d = Integer(k) * (k * w - 2);
          CHECK(B % d == 0);
          CHECK(B / d == Integer(k * w - 1) * t - w);
        }
        Integer n2 = Integer(k * k * w) * t - ((k - 1) * k * w + 1);
        Integer B2 = n2 * (k * w + 1) + 1;
        CHECK(B2 % (Integer(k * k) * w) == 0);
        CHECK(B2 / (Integer(k * k) * w) == Integer(k * w + 1) * t - ((k - 1) * w + 1));
      }
    }
  }
}

TEST_CASE("verify_identity smoke: every entry reaches in-domain samples") {
  const auto& reg = Registry::instance();
  for (const auto& f : reg.entries()) {
    auto rep = verify_identity(f, 25, 1234);
    INFO(f.id);
    CHECK(rep.failures.empty());
    CHECK_FALSE(rep.gave_up);
  }
}

TEST_CASE("verify_identity is deterministic for a fixed seed") {
  const auto& f31 = Registry::instance().entry("F31");
  auto a = verify_identity(f31, 100, 7);
  auto b = verify_identity(f31, 100, 7);
  CHECK(a.draws == b.draws);
  CHECK(a.evaluated == b.evaluated);
}

TEST_CASE("grid sweep smoke on a few families") {
  const auto& reg = Registry::instance();
  for (const char* id : {"F01", "F04", "F15", "F21", "F31", "F43", "F53.1"}) {
    auto rep = grid_sweep(reg.entry(id), 6, 100000);
    INFO(id);
    CHECK(rep.failures.empty());
    CHECK(rep.evaluated > 0);
  }
}

TEST_CASE("evaluate rejects out-of-domain bindings with named predicates") {
  CHECK_THROWS_AS(evaluate("F31", bind({{"k", 1}, {"b", 1}})), DomainError);
  CHECK_THROWS_AS(evaluate("F43", bind({{"n", 8}})), DomainError);
}
