// Acceptance suite: one test case per criterion, each printing a single
// summary line. Runtime-sensitive cases also print their elapsed time.

#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <map>
#include <set>

#include "esfrac/coverage.hpp"
#include "esfrac/decompose.hpp"
#include "esfrac/families.hpp"
#include "esfrac/lcmfn.hpp"
#include "esfrac/tables.hpp"
#include "oracle_alt.hpp"
#include "paper_rows.hpp"

using namespace esfrac;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("[criterion %d] %s: %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
}

std::multiset<Integer> dens(const DecompRecord& rec) {
  std::multiset<Integer> out;
  for (const auto& t : rec.sum.terms) out.insert(t.den);
  return out;
}

families::Binding bind(std::initializer_list<std::pair<const char*, long>> kv) {
  families::Binding b;
  for (auto& [name, value] : kv) b.set(name, value);
  return b;
}

}  // namespace

TEST_CASE("criterion 1: identity soundness sweep") {
  Timer timer;
  long failures = 0, evaluated = 0;
  std::string first_failure;
  const auto& reg = families::Registry::instance();
  for (const auto& f : reg.entries()) {
    auto rep = families::verify_identity(f, 1000, 0);
    evaluated += rep.evaluated;
    failures += long(rep.failures.size());
    if (rep.gave_up) {
      ++failures;
      if (first_failure.empty()) first_failure = f.id + " (sampler gave up)";
    }
    if (!rep.failures.empty() && first_failure.empty())
      first_failure = f.id + ": " + rep.failures.front().reason;
    auto grid = families::grid_sweep(f, 6, 200000);
    evaluated += grid.evaluated;
    failures += long(grid.failures.size());
    if (!grid.failures.empty() && first_failure.empty())
      first_failure = f.id + " (grid): " + grid.failures.front().reason;
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%zu entries, %ld verified evaluations (1000 seeded samples + grid <= 6 each), "
                "%ld failures%s%s in %.1fs",
                reg.entries().size(), evaluated, failures, first_failure.empty() ? "" : "; first: ",
                first_failure.c_str(), timer.seconds());
  report(1, failures == 0, buf);
  CHECK(failures == 0);
  CHECK(timer.seconds() < 60.0);
}

TEST_CASE("criterion 2: cascade totality to 1e5") {
  Timer timer;
  long bad = 0;
  std::map<std::string, long> routes;
  for (long n = 2; n <= 100000; ++n) {
    auto rec = decompose::cascade(4, n);
    if (!rec.verified || !verify_sum(rec.sum)) {
      ++bad;
      continue;
    }
    ++routes[rec.family];
  }
  char buf[256];
  std::snprintf(buf, sizeof buf, "2..100000 all verified (%ld bad), oracle fallbacks: %ld, in %.1fs",
                bad, routes["oracle"], timer.seconds());
  report(2, bad == 0 && timer.seconds() < 300.0, buf);
  CHECK(bad == 0);
  CHECK(timer.seconds() < 300.0);
}

TEST_CASE("criterion 3: paper-example regressions, exact denominators") {
  bool ok = true;

  // 4/5569: both distributive partitions, exact
  auto r1 = families::evaluate(
      "F13", bind({{"k", 4}, {"z", 1}, {"d", 1}, {"v", 71}, {"n", 5569}, {"alpha", 282}}));
  ok = ok && dens(r1) == std::multiset<Integer>{1410, 111380, 15704580};
  auto r2 = families::evaluate(
      "F13", bind({{"k", 4}, {"z", 2}, {"d", 3}, {"v", 7}, {"n", 5569}, {"alpha", 41}}));
  ok = ok && dens(r2) == std::multiset<Integer>{1394, 1136076, 46579116};
  // the cascade reproduces the first one
  ok = ok && dens(decompose::cascade(4, 5569)) == std::multiset<Integer>{1410, 111380, 15704580};

  // 4/7: oracle superset of the seven quoted triples
  {
    std::set<std::multiset<Integer>> found;
    for (const auto& t : solve_three_triples(4, 7, true)) found.insert({t.x, t.y, t.z});
    for (std::multiset<Integer> want : std::vector<std::multiset<Integer>>{
             {2, 28, 28}, {4, 4, 14}, {2, 21, 42}, {3, 6, 14}, {2, 16, 112}, {2, 18, 63},
             {2, 15, 210}})
      ok = ok && found.count(want) == 1;
  }

  // 4/19: oracle superset of the eleven quoted triples
  {
    std::set<std::multiset<Integer>> found;
    for (const auto& t : solve_three_triples(4, 19, true)) found.insert({t.x, t.y, t.z});
    for (std::multiset<Integer> want : std::vector<std::multiset<Integer>>{
             {5, 190, 190}, {10, 10, 95}, {5, 114, 570}, {5, 100, 1900}, {5, 120, 456},
             {5, 96, 9120}, {6, 38, 57}, {6, 24, 456}, {8, 12, 456}, {6, 30, 95}, {6, 23, 2622}})
      ok = ok && found.count(want) == 1;
  }

  // 4/13: the three key-equation partitions. The third is asserted in its
  // arithmetically valid form {4, 18, 468}; as printed (1/468 + 1/18 + 1/18)
  // it sums to 53/468, not 4/13.
  {
    auto a = families::evaluate("F52", bind({{"w", 13}, {"b", 1}, {"r", 1}, {"v", 10}, {"s", 1}}));
    auto b = families::evaluate("F52", bind({{"w", 13}, {"b", 1}, {"r", 1}, {"v", 10}, {"s", 2}}));
    auto c = families::evaluate("F52", bind({{"w", 13}, {"b", 3}, {"r", 9}, {"v", 4}, {"s", 1}}));
    ok = ok && dens(a) == std::multiset<Integer>{130, 10, 5};
    ok = ok && dens(b) == std::multiset<Integer>{130, 20, 4};
    ok = ok && dens(c) == std::multiset<Integer>{468, 18, 4};
    UnitFractionSum printed;
    printed.target = make_rational(4, 13);
    printed.terms = {UnitTerm(1, 468), UnitTerm(1, 18), UnitTerm(1, 18)};
    ok = ok && !verify_sum(printed);
  }

  // 4/1801: both modular partitions
  {
    auto a = families::evaluate("F45", bind({{"t", 450}, {"s", 4}}));
    auto b = families::evaluate("F45", bind({{"t", 450}, {"s", 14}}));
    ok = ok && dens(a) == std::multiset<Integer>{451, 295364, 3249004};
    ok = ok && dens(b) == std::multiset<Integer>{451, 277354, 11371514};
  }

  report(3, ok, "5569 (2 partitions + cascade), 4/7 (7), 4/19 (11), 4/13 (3), 4/1801 (2)");
  CHECK(ok);
}

TEST_CASE("criterion 4: table verification and search coverage") {
  Timer timer;
  long printed_ok = 0, printed_bad = 0, unexpected = 0;
  auto run_table = [&](const std::vector<PaperBrvs>& rows) {
    for (const auto& row : rows) {
      bool v = tables::make_brvs_row(row.w, row.b, row.r, row.v, row.s).verified;
      if (v)
        ++printed_ok;
      else {
        ++printed_bad;
        if (!is_known_misprint(row)) ++unexpected;
      }
    }
  };
  run_table(paper_rows_4a1());
  run_table(paper_rows_120a1());
  bool repairs_ok = true;
  for (const auto& [bad, fix] : brvs_misprint_repairs())
    repairs_ok = repairs_ok && tables::make_brvs_row(fix.w, fix.b, fix.r, fix.v, fix.s).verified;

  // a verified witness exists for every prime w === 1 (mod 4) up to 25000
  long searched = 0, misses = 0;
  for (long w = 5; w <= 25000; w += 4) {
    if (!is_prime(Integer(w))) continue;
    ++searched;
    auto row = tables::search_brvs(w);
    if (!row || !row->verified) ++misses;
  }

  bool pass = unexpected == 0 && printed_bad == 2 && repairs_ok && misses == 0;
  char buf[300];
  std::snprintf(buf, sizeof buf,
                "printed rows: %ld verify, %ld fail (both known misprints, s=2 repairs verify: "
                "%s); search_brvs: %ld primes <= 25000, %ld without a row; %.1fs",
                printed_ok, printed_bad, repairs_ok ? "yes" : "no", searched, misses,
                timer.seconds());
  report(4, pass, buf);
  CHECK(unexpected == 0);
  CHECK(printed_ok == 157);
  CHECK(printed_bad == 2);
  CHECK(repairs_ok);
  CHECK(misses == 0);
  CHECK(timer.seconds() < 120.0);
}

TEST_CASE("criterion 5: reachability classification") {
  Timer timer;
  bool ok = true;
  for (long n : {3, 7, 31, 127, 409, 5569})
    ok = ok && !coverage::integer_size_reachable(n, 4).has_value();
  auto w3049 = coverage::integer_size_reachable(3049, 4);
  ok = ok && w3049.has_value();
  if (w3049) ok = ok && 4 * lcm(w3049->c, w3049->d) * w3049->t == 3049 + w3049->c + w3049->d;

  // every n === 3 (mod 4) up to 200 for which the bounded search succeeds:
  // the oracle decides; each witness must satisfy its equation exactly
  long with_witness = 0, without = 0;
  for (long n = 3; n <= 200; n += 4) {
    auto w = coverage::integer_size_reachable(n, 4);
    if (w) {
      ++with_witness;
      ok = ok && 4 * lcm(w->c, w->d) * w->t == n + w->c + w->d;
    } else {
      ++without;
    }
  }

  // rational witnesses for the quoted examples (equation-satisfaction)
  for (long n : {7, 409, 5569, 3049}) {
    auto w = coverage::rational_size_reachable(n, 4, 200);
    ok = ok && w.has_value();
    if (w) {
      ok = ok && (w->e + w->u) % w->f == 0;
      ok = ok && 4 * lcm(w->e, w->u) * w->t == n + (w->e + w->u) / w->f;
    }
  }

  char buf[256];
  std::snprintf(buf, sizeof buf,
                "None for {3,7,31,127,409,5569}, witness for 3049; n===3 (4) <= 200: %ld "
                "witnesses / %ld none; rational witnesses for 7,409,5569,3049; %.1fs",
                with_witness, without, timer.seconds());
  report(5, ok, buf);
  CHECK(ok);
  CHECK(timer.seconds() < 120.0);
}

TEST_CASE("criterion 6: coverage reports") {
  Timer timer;
  std::vector<std::string> all_ids;
  for (const auto& f : families::Registry::instance().entries()) all_ids.push_back(f.id);

  auto rep8 = coverage::covers(all_ids, 8);
  // classes 8t-1, 8t-3, 8t-5 (residues 7, 5, 3) covered; 8t-7 (residue 1) not
  bool ok = rep8.covered(7) && rep8.covered(5) && rep8.covered(3) && !rep8.covered(1);

  auto rep120 = coverage::covers(all_ids, 120);
  // 120t-71 is the residue 49 class
  bool ok120 = !rep120.covered(49);

  // soundness: 100 consecutive members of each covered residue class lie in
  // the serving progression
  for (const auto& st : rep8.residues) {
    for (const auto& e : st.covered_by) {
      Integer first = st.residue == 0 ? Integer(8) : st.residue;
      while (first < e.signature.min_member()) first += 8;
      for (long i = 0; i < 100; ++i) ok = ok && e.signature.contains(first + 8 * i);
    }
  }

  char buf[256];
  std::snprintf(buf, sizeof buf,
                "mod 8: {8t-1, 8t-3, 8t-5} covered, 8t-7 uncovered: %s; mod 120: 120t-71 "
                "uncovered: %s; %.1fs",
                ok ? "yes" : "no", ok120 ? "yes" : "no", timer.seconds());
  report(6, ok && ok120, buf);
  CHECK(ok);
  CHECK(ok120);
}

TEST_CASE("criterion 7: lcm-function suite") {
  Timer timer;
  long gate_failures = 0;  // brute-force-internal identities
  long printed_findings = 0;

  // q_closed = q_brute for all b | a <= 2000
  for (long a = 1; a <= 2000; ++a) {
    auto ds = divisors(Integer(a));
    for (const Integer& b : ds) {
      auto brute = lcmfn::q_brute(a, b);
      auto closed = lcmfn::q_closed(a, b);
      if (brute.q != closed.q || brute.sq != closed.sq || brute.mq != closed.mq) ++gate_failures;
      // paper-printed split: drift is a finding, not a gate failure
      auto printed = lcmfn::q_printed(a, b);
      if (printed.q != brute.q || printed.sq != brute.sq || printed.mq != brute.mq)
        ++printed_findings;
    }
  }

  // sum_{x|n} Q_n[x] = tau(n^2) for n <= 5000 (batched: one divisor list per n)
  for (long n = 1; n <= 5000; ++n) {
    auto ds = divisors(Integer(n));
    Integer total = 0;
    for (const Integer& x : ds) {
      long q = 0;
      for (const Integer& y : ds)
        if (lcm(y, x) == n) ++q;
      total += q;
    }
    if (total != tau(Integer(n) * n)) ++gate_failures;
  }

  // series/product identities for p < 50, s <= 500, k <= 8, t <= 50 coprime
  for (long pl : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    Integer p(pl);
    auto rep = lcmfn::series_suite(p, 500, 8, 1);
    gate_failures += long(rep.findings.size());
    for (long t = 2; t <= 50; ++t) {
      if (gcd(Integer(t), p) != 1) continue;
      // ladder identities only; reuse the suite with small k to keep runtime sane
      Integer sum = 0, prod = 1;
      for (long r = 0; r <= 8; ++r) {
        auto q = lcmfn::q_brute(Integer(t) * pow_ui(p, r), pow_ui(p, r));
        sum += q.q;
        prod *= q.q;
      }
      Integer fact = 1;
      for (long i = 2; i <= 9; ++i) fact *= i;
      if (sum != Integer(10 * 9 / 2)) ++gate_failures;
      if (prod != fact) ++gate_failures;
    }
  }

  // restricted sums for n <= 2000 (batched brute vs closed; printed -> findings)
  for (long n = 1; n <= 2000; ++n) {
    auto ds = divisors(Integer(n));
    std::vector<long> qv(ds.size());
    for (size_t i = 0; i < ds.size(); ++i) {
      long q = 0;
      for (const Integer& y : ds)
        if (lcm(y, ds[i]) == n) ++q;
      qv[i] = q;
    }
    for (size_t i = 0; i < ds.size(); ++i) {
      Integer brute = 0;
      for (size_t j = 0; j < ds.size(); ++j)
        if (ds[j] % ds[i] == 0) brute += qv[j];
      if (brute != lcmfn::restricted_sum_closed(n, ds[i])) ++gate_failures;
      if (brute != lcmfn::restricted_sum_printed(n, ds[i])) ++printed_findings;
    }
    for (const auto& [prime, exp] : factorize(n).factors)
      for (unsigned d = 1; d <= exp; ++d) {
        if (lcmfn::restricted_sum_prime_brute(n, prime, d) !=
            lcmfn::restricted_sum_prime_closed(n, prime, d))
          ++gate_failures;
      }
  }

  // Fermat quotient congruence for odd p < 100, d <= 30; failures are findings
  long fermat_holds = 0, fermat_findings = 0;
  for (long pl : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                  83, 89, 97}) {
    for (long d = 1; d <= 30; ++d) {
      auto chk = lcmfn::fermat_congruence(pl, d);
      if (chk.holds)
        ++fermat_holds;
      else
        ++fermat_findings;
    }
  }
  printed_findings += fermat_findings;

  char buf[300];
  std::snprintf(buf, sizeof buf,
                "brute-internal gate: %ld failures; paper-printed findings: %ld (printed q-split, "
                "printed restricted tau-form, Fermat congruence misses: %ld of 720); %.1fs",
                gate_failures, printed_findings, fermat_findings, timer.seconds());
  report(7, gate_failures == 0, buf);
  CHECK(gate_failures == 0);
  CHECK(timer.seconds() < 180.0);
}

TEST_CASE("criterion 8: the two-part counting formula") {
  Timer timer;
  long failures = 0;
  for (long n = 1; n <= 2000; ++n) {
    auto sums = solve_two(make_rational(1, n));
    Integer expect = (tau(Integer(n) * n) + 1) / 2;
    if (count_two(n) != expect || Integer(long(sums.size())) != expect) ++failures;
    for (const auto& s : sums)
      if (!verify_sum(s)) ++failures;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "count_two(n) = |solve_two(1/n)| = ceil(tau(n^2)/2), n <= 2000, "
                                 "%ld failures; %.1fs",
                failures, timer.seconds());
  report(8, failures == 0, buf);
  CHECK(failures == 0);
}

TEST_CASE("criterion 9: oracle equivalence, two enumeration orders") {
  Timer timer;
  long mismatches = 0;
  auto compare = [&](long k, long n) {
    std::multiset<std::array<long, 3>> a, b;
    for (const auto& t : solve_three_triples(k, n, true))
      a.insert({to_long(t.x), to_long(t.y), to_long(t.z)});
    for (const auto& t : solve_three_alt(k, n)) b.insert({long(t.x), long(t.y), long(t.z)});
    if (a != b) ++mismatches;
  };
  for (long n = 2; n <= 500; ++n) compare(4, n);
  for (long k = 1; k <= 3; ++k)
    for (long n = 1; n <= 200; ++n)
      if (k <= 3 * n) compare(k, n);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "multiset agreement for k=4, n<=500 and k in {1,2,3}, n<=200: %ld mismatches; %.1fs",
                mismatches, timer.seconds());
  report(9, mismatches == 0, buf);
  CHECK(mismatches == 0);
}
