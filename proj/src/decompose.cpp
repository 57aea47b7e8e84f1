#include "esfrac/decompose.hpp"

#include "esfrac/families.hpp"

namespace esfrac::decompose {

using families::Binding;

namespace {

std::optional<DecompRecord> try_eval(const std::string& id, const Binding& b) {
  try {
    return families::evaluate(id, b);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Binding bind(std::initializer_list<std::pair<const char*, Integer>> kv) {
  Binding b;
  for (const auto& [name, value] : kv) b.scalars[name] = Rational(value);
  return b;
}

// F13 search: v === -n (mod 4), alpha + beta = 4v with both dividing n(n+v).
std::optional<DecompRecord> f13_search(const Integer& n) {
  Integer v0 = ((-n) % 4 + 4) % 4;
  if (v0 == 0) v0 = 4;
  for (Integer v = v0; v <= 400; v += 4) {
    Integer A = n + v;
    Integer T = n * A;
    std::vector<Integer> small;
    for (const Integer& d : divisors(T)) {
      if (d >= 4 * v) break;
      small.push_back(d);
    }
    for (const Integer& alpha : small) {
      Integer beta = 4 * v - alpha;
      if (beta < 1 || T % beta != 0) continue;
      Binding b = bind({{"k", 4}, {"z", 1}, {"d", 1}, {"v", v}, {"n", n}, {"alpha", alpha}});
      if (auto rec = try_eval("F13", b)) return rec;
    }
  }
  return std::nullopt;
}

std::optional<DecompRecord> f50_search(const Integer& n) {
  if (n % 8 != 1) return std::nullopt;
  Integer t = (n - 1) / 8;
  for (Integer b = 1; b <= 64; ++b) {
    if ((2 * t + b) % (4 * b - 1) != 0) continue;
    if (auto rec = try_eval("F50", bind({{"b", b}, {"t", t}}))) return rec;
  }
  return std::nullopt;
}

std::optional<DecompRecord> f45_search(const Integer& n) {
  if (n % 4 != 1) return std::nullopt;
  Integer t = (n - 1) / 4;
  for (Integer s = 1; s <= 2000; ++s) {
    if (((t + 1) * s * n) % (3 * s - 1) != 0) continue;
    if (auto rec = try_eval("F45", bind({{"t", t}, {"s", s}}))) return rec;
  }
  return std::nullopt;
}

std::optional<DecompRecord> f48_5_search(const Integer& n) {
  if (n % 24 != 1 || n < 25) return std::nullopt;
  Integer t = (n - 1) / 24;
  for (Integer y = 0; y <= 6 * t - 1 && y <= 64; ++y) {
    Integer z = 6 * t + 1 + y;
    for (Integer v = 1; v <= 4; ++v) {
      Integer S = v * (4 * y + 3);
      Integer T = v * z * n;
      for (const Integer& m : divisors(T)) {
        if (m >= S) break;
        if (T % (S - m) != 0) continue;
        Binding b = bind({{"t", t}, {"y", y}, {"v", v}, {"m", m}});
        if (auto rec = try_eval("F48.5", b)) return rec;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<DecompRecord> match_family(const std::string& entry_id, const Integer& k,
                                         const Integer& n) {
  if (entry_id == "F31" && (n + 1) % k == 0)
    return try_eval("F31", bind({{"k", k}, {"b", (n + 1) / k}}));
  if (k != 4) return std::nullopt;
  if (entry_id == "F32.1" && n % 8 == 7) return try_eval(entry_id, bind({{"t", (n + 1) / 8}}));
  if (entry_id == "F32.2" && n % 8 == 3) return try_eval(entry_id, bind({{"t", (n + 5) / 8}}));
  if (entry_id == "F32.6" && n % 8 == 5) return try_eval(entry_id, bind({{"t", (n + 3) / 8}}));
  if (entry_id == "F32.3" && n % 24 == 17) return try_eval(entry_id, bind({{"t", (n + 7) / 24}}));
  if (entry_id == "F32.5" && n % 24 == 5) return try_eval(entry_id, bind({{"t", (n + 19) / 24}}));
  if (entry_id == "F43" && n % 4 == 3) return try_eval("F43", bind({{"n", n}}));
  if (entry_id == "F21" && n % 2 == 0) {
    Binding b;
    b.scalars["k"] = Rational(4);
    b.lists["c"] = {Rational(n / 2), Rational(n / 2)};
    return try_eval("F21", b);
  }
  if (entry_id == "F49.1" && n % 120 == 97) return try_eval(entry_id, bind({{"t", (n + 23) / 120}}));
  if (entry_id == "F49.2" && n % 40 == 33) return try_eval(entry_id, bind({{"v", (n + 7) / 40}}));
  if (entry_id == "F50") return f50_search(n);
  if (entry_id == "F45") return f45_search(n);
  if (entry_id == "F13") return f13_search(n);
  if (entry_id == "F48.5") return f48_5_search(n);
  return std::nullopt;
}

DecompRecord cascade(const Integer& k, const Integer& n) {
  if (n < 2) throw DomainError("cascade needs n >= 2");
  static const char* kOrder[] = {"F31", "F32.1", "F32.6", "F32.2", "F32.3", "F32.5", "F43",
                                 "F21", "F49.1", "F49.2", "F50",  "F45",   "F13",   "F48.5"};
  for (const char* id : kOrder) {
    if (auto rec = match_family(id, k, n)) {
      rec->sum = canonicalize(std::move(rec->sum));
      return *rec;
    }
  }
  auto sums = solve_three(k, n, false);
  if (sums.empty()) throw DomainError("oracle found no three-term decomposition");
  DecompRecord rec;
  rec.k = k;
  rec.n = n;
  rec.sum = canonicalize(std::move(sums.front()));
  rec.family = "oracle";
  rec.verified = verify_sum(rec.sum);
  return rec;
}

std::vector<DecompRecord> decompose(const Integer& k, const Integer& n, const std::string& strategy,
                                    bool all) {
  std::vector<DecompRecord> out;
  if (strategy == "cascade") {
    out.push_back(cascade(k, n));
  } else if (strategy == "oracle") {
    for (auto& s : solve_three(k, n, all)) {
      DecompRecord rec;
      rec.k = k;
      rec.n = n;
      rec.sum = canonicalize(std::move(s));
      rec.family = "oracle";
      rec.verified = verify_sum(rec.sum);
      out.push_back(std::move(rec));
    }
  } else if (strategy.rfind("family:", 0) == 0) {
    std::string id = strategy.substr(7);
    auto rec = match_family(id, k, n);
    if (!rec) throw DomainError("family " + id + " has no binding for this n");
    rec->sum = canonicalize(std::move(rec->sum));
    out.push_back(*rec);
  } else {
    throw DomainError("unknown strategy: " + strategy);
  }
  return out;
}

}  // namespace esfrac::decompose
