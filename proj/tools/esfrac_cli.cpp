// esfrac: exact Egyptian-fraction engine for Erdos-Straus style equations.
//
// Subcommands: decompose, verify, families, cover, reach, tables, lcmfn.
// Exit codes: 0 success, 1 verification failure, 2 usage error. Errors are
// single-line on stderr. Identical argv + seed give byte-identical stdout.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "esfrac/coverage.hpp"
#include "esfrac/decompose.hpp"
#include "esfrac/families.hpp"
#include "esfrac/json_io.hpp"
#include "esfrac/lcmfn.hpp"
#include "esfrac/tables.hpp"

using nlohmann::ordered_json;
using namespace esfrac;

namespace {

constexpr const char* kRegistryVersion = "registry/1";

struct Out {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << text;
  }
};

void print_header(uint64_t seed) {
  std::cout << "# " << kRegistryVersion << " seed=" << seed << "\n";
}

families::Binding parse_binding(const std::vector<std::string>& kvs) {
  families::Binding b;
  for (const std::string& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw DomainError("bad binding (want name=value): " + kv);
    std::string name = kv.substr(0, eq);
    std::string val = kv.substr(eq + 1);
    if (val.find(',') != std::string::npos) {
      std::vector<Rational> xs;
      size_t pos = 0;
      while (pos != std::string::npos) {
        size_t next = val.find(',', pos);
        xs.emplace_back(Integer(val.substr(pos, next - pos)));
        pos = next == std::string::npos ? next : next + 1;
      }
      b.lists[name] = std::move(xs);
    } else if (val.find('/') != std::string::npos) {
      auto slash = val.find('/');
      b.scalars[name] =
          make_rational(Integer(val.substr(0, slash)), Integer(val.substr(slash + 1)));
    } else {
      b.scalars[name] = Rational(Integer(val));
    }
  }
  return b;
}

int cmd_decompose(const std::string& k, const std::string& n, const std::string& strategy,
                  bool all, uint64_t seed, const Out& out) {
  print_header(seed);
  auto recs = decompose::decompose(Integer(k), Integer(n), strategy, all);
  ordered_json j = ordered_json::array();
  for (auto& rec : recs) {
    if (!rec.verified || !verify_sum(rec.sum)) {
      std::cerr << "error: unverified decomposition produced\n";
      return 1;
    }
    j.push_back(json_io::to_json(rec));
  }
  out.write(j.dump(2) + "\n");
  return 0;
}

int cmd_verify(const std::string& in_path) {
  std::ifstream is(in_path);
  if (!is) {
    std::cerr << "error: cannot read " << in_path << "\n";
    return 2;
  }
  ordered_json j = ordered_json::parse(is);
  if (!j.is_array()) j = ordered_json::array({j});
  bool ok = true;
  for (const auto& item : j) {
    DecompRecord rec = json_io::record_from_json(item);
    bool good = verify_sum(rec.sum);
    std::cout << rec.k << "/" << rec.n << " " << rec.family << " "
              << (good ? "verified" : "FAILED") << "\n";
    ok = ok && good;
  }
  return ok ? 0 : 1;
}

int cmd_families_list(uint64_t seed) {
  print_header(seed);
  for (const auto& f : families::Registry::instance().entries()) {
    std::cout << f.id << " | ";
    bool first = true;
    for (const auto& ps : f.params) {
      if (!first) std::cout << ",";
      first = false;
      std::cout << ps.name;
      if (ps.derive) std::cout << "*";
      if (ps.kind == families::ParamKind::IntList || ps.kind == families::ParamKind::RatList)
        std::cout << "[]";
    }
    std::cout << " | " << f.anchor << " | "
              << (f.class_template.empty() ? "-" : f.class_template) << "\n";
  }
  return 0;
}

int cmd_families_verify(const std::string& id, int samples, uint64_t seed, const Out& out) {
  print_header(seed);
  ordered_json j = ordered_json::array();
  bool ok = true;
  std::vector<const families::FamilyDef*> defs;
  if (id == "all") {
    for (const auto& f : families::Registry::instance().entries()) defs.push_back(&f);
  } else {
    defs = families::Registry::instance().resolve(id);
  }
  for (const auto* f : defs) {
    auto rep = families::verify_identity(*f, samples, seed);
    ordered_json r;
    r["id"] = rep.id;
    r["requested"] = rep.requested;
    r["evaluated"] = rep.evaluated;
    r["draws"] = rep.draws;
    r["gave_up"] = rep.gave_up;
    r["failures"] = ordered_json::array();
    for (const auto& fail : rep.failures)
      r["failures"].push_back({{"binding", fail.binding}, {"reason", fail.reason}});
    j.push_back(std::move(r));
    ok = ok && rep.failures.empty() && !rep.gave_up;
  }
  out.write(j.dump(2) + "\n");
  return ok ? 0 : 1;
}

int cmd_families_eval(const std::string& id, const std::vector<std::string>& binding,
                      uint64_t seed, const Out& out) {
  print_header(seed);
  auto rec = families::evaluate(id, parse_binding(binding));
  out.write(json_io::to_json(rec).dump(2) + "\n");
  return 0;
}

int cmd_cover(const std::string& mod, const std::string& fams, const std::string& k, long grid,
              uint64_t seed, const Out& out) {
  print_header(seed);
  std::vector<std::string> ids;
  if (fams == "all") {
    for (const auto& f : families::Registry::instance().entries()) ids.push_back(f.id);
  } else {
    size_t pos = 0;
    while (pos != std::string::npos) {
      size_t next = fams.find(',', pos);
      ids.push_back(fams.substr(pos, next - pos));
      pos = next == std::string::npos ? next : next + 1;
    }
  }
  auto rep = coverage::covers(ids, Integer(mod), Integer(k), grid);
  ordered_json j;
  j["modulus"] = rep.modulus.get_si();
  j["k"] = rep.k.get_si();
  j["grid"] = rep.grid;
  j["residues"] = ordered_json::array();
  for (const auto& st : rep.residues) {
    ordered_json r;
    r["residue"] = st.residue.get_si();
    r["class"] = (rep.modulus.get_str() + "t-") + st.offset.get_str();
    r["covered"] = !st.covered_by.empty();
    r["covered_by"] = ordered_json::array();
    for (const auto& e : st.covered_by)
      r["covered_by"].push_back(
          {{"family", e.family}, {"binding", e.binding}, {"signature", e.signature.str()}});
    j["residues"].push_back(std::move(r));
  }
  out.write(j.dump(2) + "\n");
  return 0;
}

int cmd_reach(const std::string& n, const std::string& k, bool rational, const std::string& bound,
              uint64_t seed, const Out& out) {
  print_header(seed);
  ordered_json j;
  j["n"] = n;
  j["k"] = k;
  if (rational) {
    auto w = coverage::rational_size_reachable(Integer(n), Integer(k), Integer(bound));
    j["kind"] = "rational";
    j["bound"] = bound;
    if (w) {
      j["witness"] = {{"e", w->e.get_str()}, {"u", w->u.get_str()}, {"f", w->f.get_str()},
                      {"t", w->t.get_str()}};
    } else {
      j["witness"] = nullptr;  // bounded verdict, not a proof of nonexistence
    }
  } else {
    auto w = coverage::integer_size_reachable(Integer(n), Integer(k));
    j["kind"] = "integer";
    if (w) {
      j["witness"] = {{"c", w->c.get_str()}, {"d", w->d.get_str()}, {"t", w->t.get_str()}};
    } else {
      j["witness"] = nullptr;  // exhaustive within the derived bound
    }
  }
  out.write(j.dump(2) + "\n");
  return 0;
}

int cmd_tables_brvs(const std::string& which, long max_w, long b_max, long s_max, uint64_t seed,
                    const Out& out) {
  print_header(seed);
  tables::BrvsCaps caps{b_max, s_max};
  std::vector<tables::BrvsRow> rows;
  long step = which == "120a1" ? 120 : 4;
  for (long w = step + 1; w <= max_w; w += step) {
    if (!is_prime(Integer(w))) continue;
    auto row = tables::search_brvs(w, caps);
    if (row) rows.push_back(*row);
  }
  out.write(tables::brvs_csv(rows));
  return 0;
}

int cmd_tables_witness(const std::string& range, long bound, uint64_t seed, const Out& out) {
  print_header(seed);
  auto dots = range.find("..");
  if (dots == std::string::npos) {
    std::cerr << "error: --range wants A..B\n";
    return 2;
  }
  long a = std::stol(range.substr(0, dots));
  long b = std::stol(range.substr(dots + 2));
  std::vector<tables::WitnessRow> rows;
  for (long n = a; n <= b; ++n) rows.push_back(tables::search_integer_witness(n, bound));
  out.write(tables::witness_csv(rows));
  return 0;
}

int cmd_tables_mod840(long m_max, long c_max, long b_max, uint64_t seed, const Out& out) {
  print_header(seed);
  out.write(tables::abc_csv(tables::search_abc_mod840(m_max, c_max, b_max)));
  return 0;
}

int cmd_lcmfn_q(const std::string& a, const std::string& b, bool closed, uint64_t seed) {
  print_header(seed);
  auto t = closed ? lcmfn::q_closed(Integer(a), Integer(b)) : lcmfn::q_brute(Integer(a), Integer(b));
  std::cout << "Q=" << t.q << " SQ=" << t.sq << " MQ=" << t.mq << "\n";
  return 0;
}

int cmd_lcmfn_suite(long max_n, uint64_t seed, const Out& out) {
  print_header(seed);
  ordered_json j;
  j["max_n"] = max_n;
  ordered_json findings = ordered_json::array();
  long checks = 0;
  for (long n = 1; n <= max_n; ++n) {
    ++checks;
    if (lcmfn::sum_q_over_divisors(n) != tau(Integer(n) * n))
      findings.push_back({{"identity", "sum Q = tau(n^2)"}, {"n", n}});
    for (const Integer& x : divisors(Integer(n))) {
      ++checks;
      auto brute = lcmfn::q_brute(n, x);
      auto closed = lcmfn::q_closed(n, x);
      if (brute.q != closed.q || brute.sq != closed.sq || brute.mq != closed.mq)
        findings.push_back({{"identity", "q_closed = q_brute"}, {"a", n}, {"b", x.get_str()}});
      ++checks;
      if (lcmfn::restricted_sum_brute(n, x) != lcmfn::restricted_sum_closed(n, x))
        findings.push_back({{"identity", "restricted sum"}, {"n", n}, {"x", x.get_str()}});
      if (lcmfn::restricted_sum_brute(n, x) != lcmfn::restricted_sum_printed(n, x))
        findings.push_back(
            {{"identity", "restricted sum (printed tau-form)"}, {"n", n}, {"x", x.get_str()}});
    }
  }
  j["checks"] = checks;
  j["findings"] = findings;
  out.write(j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Egyptian-fraction engine: families, oracles, coverage, tables"};
  app.require_subcommand(1);
  uint64_t seed = 0;
  long jobs = 1;
  app.add_option("--seed", seed, "seed for randomized procedures (default 0)");
  app.add_option("--jobs", jobs, "worker count; output is order-independent");

  std::string out_path;

  // decompose
  auto* dec = app.add_subcommand("decompose", "decompose k/n into unit fractions");
  std::string k = "4", n, strategy = "cascade";
  bool all = false;
  dec->add_option("--k", k, "numerator")->capture_default_str();
  dec->add_option("--n", n, "denominator")->required();
  dec->add_option("--strategy", strategy, "cascade | oracle | family:F##");
  dec->add_flag("--all", all, "return all decompositions (oracle strategy)");
  dec->add_option("--out", out_path, "write to file instead of stdout");

  // verify
  auto* ver = app.add_subcommand("verify", "re-verify records from a JSON file");
  std::string in_path;
  ver->add_option("--in", in_path, "JSON file with a record or array of records")->required();

  // families
  auto* fam = app.add_subcommand("families", "inspect the identity catalog");
  auto* fam_list = fam->add_subcommand("list", "one line per registered entry");
  auto* fam_verify = fam->add_subcommand("verify", "seeded identity verification");
  std::string fam_id = "all";
  int samples = 100;
  fam_verify->add_option("--id", fam_id, "catalog or entry id, or all");
  fam_verify->add_option("--samples", samples, "in-domain samples per entry");
  fam_verify->add_option("--out", out_path, "write report to file");
  auto* fam_eval = fam->add_subcommand("eval", "evaluate an entry at a binding");
  std::string eval_id;
  std::vector<std::string> eval_binding;
  fam_eval->add_option("--id", eval_id, "entry id")->required();
  fam_eval->add_option("--bind", eval_binding, "name=value (lists as v1,v2; rationals as p/q)");
  fam_eval->add_option("--out", out_path, "write record to file");

  // cover
  auto* cov = app.add_subcommand("cover", "residue coverage report");
  std::string mod, cov_fams = "all", cov_k = "4";
  long grid = 12;
  cov->add_option("--mod", mod, "modulus")->required();
  cov->add_option("--families", cov_fams, "all or comma-separated ids");
  cov->add_option("--k", cov_k, "target numerator filter");
  cov->add_option("--grid", grid, "non-free parameter grid bound");
  cov->add_option("--out", out_path, "write report to file");

  // reach
  auto* reach = app.add_subcommand("reach", "integer/rational size reachability");
  std::string reach_n, reach_k = "4", bound = "200";
  bool rational = false;
  reach->add_option("--n", reach_n, "target n")->required();
  reach->add_option("--k", reach_k, "k");
  reach->add_flag("--rational", rational, "rational-size search");
  reach->add_option("--bound", bound, "cap on e, u for the rational search");
  reach->add_option("--out", out_path, "write to file");

  // tables
  auto* tab = app.add_subcommand("tables", "witness table generation");
  auto* tab_brvs = tab->add_subcommand("brvs", "(b,r,v,s) rows for primes");
  std::string primes_kind = "4a1";
  long max_w = 1009, b_max = 64, s_max = 10000;
  tab_brvs->add_option("--primes", primes_kind, "4a1 | 120a1");
  tab_brvs->add_option("--max", max_w, "largest w");
  tab_brvs->add_option("--b-max", b_max, "cap on b");
  tab_brvs->add_option("--s-max", s_max, "cap on s");
  tab_brvs->add_option("--out", out_path, "write CSV to file");
  auto* tab_wit = tab->add_subcommand("witness", "integer/rational size witnesses");
  std::string range;
  long wit_bound = 200;
  tab_wit->add_option("--range", range, "A..B")->required();
  tab_wit->add_option("--bound", wit_bound, "rational fallback cap");
  tab_wit->add_option("--out", out_path, "write CSV to file");
  auto* tab_abc = tab->add_subcommand("mod840", "the (m,a,b,c) search");
  long m_max = 594000, c_max = 100, abc_b_max = 11;
  tab_abc->add_option("--m-max", m_max, "largest m");
  tab_abc->add_option("--c-max", c_max, "cap on c (exclusive)");
  tab_abc->add_option("--b-max", abc_b_max, "cap on b (exclusive)");
  tab_abc->add_option("--out", out_path, "write CSV to file");

  // lcmfn
  auto* lq = app.add_subcommand("lcmfn", "lcm-counting functions");
  auto* lq_q = lq->add_subcommand("q", "Q/SQ/MQ at one point");
  std::string qa, qb;
  bool closed = false;
  lq_q->add_option("--a", qa, "a")->required();
  lq_q->add_option("--b", qb, "b")->required();
  lq_q->add_flag("--closed", closed, "use the closed forms (requires b | a)");
  auto* lq_suite = lq->add_subcommand("suite", "identity sweep up to max-n");
  long max_n = 500;
  lq_suite->add_option("--max-n", max_n, "sweep bound");
  lq_suite->add_option("--out", out_path, "write JSON report to file");

  CLI11_PARSE(app, argc, argv);
  (void)jobs;

  Out out{out_path};
  try {
    if (*dec) return cmd_decompose(k, n, strategy, all, seed, out);
    if (*ver) return cmd_verify(in_path);
    if (*fam) {
      if (*fam_list) return cmd_families_list(seed);
      if (*fam_verify) return cmd_families_verify(fam_id, samples, seed, out);
      if (*fam_eval) return cmd_families_eval(eval_id, eval_binding, seed, out);
      std::cerr << "error: families wants list, verify, or eval\n";
      return 2;
    }
    if (*cov) return cmd_cover(mod, cov_fams, cov_k, grid, seed, out);
    if (*reach) return cmd_reach(reach_n, reach_k, rational, bound, seed, out);
    if (*tab) {
      if (*tab_brvs) return cmd_tables_brvs(primes_kind, max_w, b_max, s_max, seed, out);
      if (*tab_wit) return cmd_tables_witness(range, wit_bound, seed, out);
      if (*tab_abc) return cmd_tables_mod840(m_max, c_max, abc_b_max, seed, out);
      std::cerr << "error: tables wants brvs, witness, or mod840\n";
      return 2;
    }
    if (*lq) {
      if (*lq_q) return cmd_lcmfn_q(qa, qb, closed, seed);
      if (*lq_suite) return cmd_lcmfn_suite(max_n, seed, out);
      std::cerr << "error: lcmfn wants q or suite\n";
      return 2;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
