#include "esfrac/families.hpp"

#include <algorithm>
#include <sstream>

namespace esfrac::families {

using formula::eval;
using formula::eval_cond;
using formula::EvalError;

uint64_t Rng::next() {
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw DomainError("empty sampling range");
  return lo + long(next() % uint64_t(hi - lo + 1));
}

bool FamilyDef::has_param(const std::string& name) const {
  return std::any_of(params.begin(), params.end(),
                     [&](const ParamSpec& p) { return p.name == name; });
}

const ParamSpec& FamilyDef::param(const std::string& name) const {
  for (const ParamSpec& p : params)
    if (p.name == name) return p;
  throw DomainError("no such parameter: " + name);
}

const Registry& Registry::instance() {
  static const Registry reg;
  return reg;
}

const FamilyDef* Registry::find(const std::string& entry_id) const {
  for (const FamilyDef& f : entries_)
    if (f.id == entry_id) return &f;
  return nullptr;
}

const FamilyDef& Registry::entry(const std::string& entry_id) const {
  const FamilyDef* f = find(entry_id);
  if (!f) throw DomainError("unknown family entry: " + entry_id);
  return *f;
}

std::vector<const FamilyDef*> Registry::resolve(const std::string& id) const {
  std::vector<const FamilyDef*> out;
  for (const FamilyDef& f : entries_)
    if (f.id == id || f.catalog_id == id) out.push_back(&f);
  if (out.empty()) throw DomainError("unknown family id: " + id);
  return out;
}

namespace {

/// Fills derived parameters in declaration order. Returns false when a derived
/// value is not a positive integer (Int kind) or cannot be computed.
bool fill_derived(const FamilyDef& f, Binding& b) {
  for (const ParamSpec& p : f.params) {
    if (!p.derive) continue;
    try {
      Rational v = eval(p.derive, b);
      if (p.kind == ParamKind::Int && !is_integral(v)) return false;
      b.scalars[p.name] = v;
    } catch (const EvalError&) {
      return false;
    }
  }
  return true;
}

bool is_list_kind(ParamKind k) { return k == ParamKind::IntList || k == ParamKind::RatList; }

void require_complete(const FamilyDef& f, const Binding& b) {
  for (const ParamSpec& p : f.params) {
    if (p.derive) continue;
    if (is_list_kind(p.kind)) {
      if (b.lists.find(p.name) == b.lists.end())
        throw DomainError(f.id + ": missing list parameter " + p.name);
    } else if (b.scalars.find(p.name) == b.scalars.end()) {
      throw DomainError(f.id + ": missing parameter " + p.name);
    }
  }
}

}  // namespace

DomainReport check_domain(const FamilyDef& f, Binding b) {
  require_complete(f, b);
  DomainReport rep;
  if (!fill_derived(f, b)) {
    rep.violated.push_back("derived parameter is not a positive integer");
    return rep;
  }
  for (const Constraint& c : f.domain)
    if (!eval_cond(c.cond, b)) rep.violated.push_back(c.label);
  // Structural guards shared by every family.
  try {
    Integer num = formula::eval_int(f.target_num, b);
    Integer den = formula::eval_int(f.target_den, b);
    if (num < 1) rep.violated.push_back("target numerator must be >= 1");
    if (den < 1) rep.violated.push_back("target denominator must be >= 1");
  } catch (const EvalError& e) {
    rep.violated.push_back(std::string("target: ") + e.what());
  }
  rep.ok = rep.violated.empty();
  return rep;
}

std::string binding_to_string(const FamilyDef& f, const Binding& b) {
  std::ostringstream os;
  bool first = true;
  for (const ParamSpec& p : f.params) {
    if (!first) os << ", ";
    first = false;
    os << p.name << "=";
    if (is_list_kind(p.kind)) {
      auto it = b.lists.find(p.name);
      os << "[";
      if (it != b.lists.end()) {
        for (size_t i = 0; i < it->second.size(); ++i) {
          if (i) os << " ";
          os << it->second[i];
        }
      }
      os << "]";
    } else {
      auto it = b.scalars.find(p.name);
      if (it != b.scalars.end())
        os << it->second;
      else
        os << "?";
    }
  }
  return os.str();
}

DecompRecord evaluate(const FamilyDef& f, const Binding& original) {
  Binding b = original;
  require_complete(f, b);
  DomainReport dom = check_domain(f, b);
  if (!dom.ok) {
    std::string msg = f.id + ": binding rejected:";
    for (const std::string& v : dom.violated) msg += " [" + v + "]";
    throw DomainError(msg);
  }
  fill_derived(f, b);

  DecompRecord rec;
  rec.family = f.id;
  rec.k = formula::eval_int(f.target_num, b);
  rec.n = formula::eval_int(f.target_den, b);
  rec.sum.target = make_rational(rec.k, rec.n);
  rec.sum.provenance = f.id;

  auto emit = [&](const DenomSpec& spec, long spread_index) {
    Rational v;
    try {
      v = eval(spec.expr, b, spread_index);
    } catch (const EvalError& e) {
      throw DomainError(f.id + ": denominator: " + e.what());
    }
    if (v == 0) throw DomainError(f.id + ": divisor is zero");
    int sign = spec.sign;
    if (v < 0) {  // 1/(-d) is -1/d; signed families rely on this
      sign = -sign;
      v = -v;
    }
    if (!is_integral(v))
      throw IdentityViolation(f.id + ": denominator is not an integer at binding " +
                              binding_to_string(f, b));
    rec.sum.terms.emplace_back(sign, v.get_num());
  };

  for (const DenomSpec& spec : f.denoms) {
    if (spec.spread_list.empty()) {
      emit(spec, 0);
    } else {
      auto it = b.lists.find(spec.spread_list);
      if (it == b.lists.end()) throw DomainError(f.id + ": missing spread list");
      long len = long(it->second.size()) - spec.spread_drop;
      for (long i = 1; i <= len; ++i) emit(spec, i);
    }
  }

  if (!verify_sum(rec.sum))
    throw IdentityViolation(f.id + ": sum is not exact at binding " + binding_to_string(f, b));
  rec.verified = true;

  for (const ParamSpec& p : f.params) {
    std::ostringstream os;
    if (is_list_kind(p.kind)) {
      const auto& xs = b.lists.at(p.name);
      for (size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
    } else {
      os << b.scalars.at(p.name);
    }
    rec.params[p.name] = os.str();
  }
  return rec;
}

DecompRecord evaluate(const std::string& entry_id, const Binding& b) {
  return evaluate(Registry::instance().entry(entry_id), b);
}

ResidueClass residue_signature(const FamilyDef& f, const Binding& partial) {
  if (!f.free_var)
    throw NotAProgression(f.id + ": not-a-progression (family has no free variable)");
  const std::string& tname = *f.free_var;
  constexpr long kScanLimit = 20000;
  constexpr int kNeeded = 8;

  // Constraints not touching the free variable (directly or through a derived
  // parameter) hold or fail for every t; reject dead instances with one check.
  std::vector<std::string> tainted{tname};
  for (const ParamSpec& ps : f.params)
    if (ps.derive && formula::mentions(ps.derive, tainted)) tainted.push_back(ps.name);
  {
    Binding probe = partial;
    probe.set(tname, f.param(tname).lo);
    if (fill_derived(f, probe)) {
      for (const Constraint& c : f.domain) {
        if (formula::mentions(c.cond, tainted)) continue;
        if (!formula::eval_cond(c.cond, probe))
          throw NotAProgression(f.id + ": not-a-progression (instance out of domain: " + c.label +
                                ")");
      }
    }
  }

  std::vector<long> ts;
  std::vector<Integer> ns;
  for (long t = f.param(tname).lo; t <= kScanLimit && long(ts.size()) < kNeeded; ++t) {
    Binding b = partial;
    b.set(tname, t);
    DomainReport rep = check_domain(f, b);
    if (!rep.ok) continue;
    fill_derived(f, b);
    ts.push_back(t);
    ns.push_back(formula::eval_int(f.target_den, b));
  }
  if (long(ts.size()) < kNeeded)
    throw NotAProgression(f.id + ": not-a-progression (too few admissible values)");

  long dt = ts[1] - ts[0];
  for (size_t i = 2; i < ts.size(); ++i)
    if (ts[i] - ts[i - 1] != dt)
      throw NotAProgression(f.id + ": not-a-progression (free variable is not an AP)");
  Integer dn = ns[1] - ns[0];
  for (size_t i = 2; i < ns.size(); ++i)
    if (ns[i] - ns[i - 1] != dn)
      throw NotAProgression(f.id + ": not-a-progression (target is not linear)");
  if (dn <= 0) throw NotAProgression(f.id + ": not-a-progression (non-increasing)");

  // Members are ns[0] + k * dn; express as {dn * t - g : t >= t0}.
  Integer m = dn;
  Integer g = ((-ns[0]) % m + m) % m;
  Integer t0 = (ns[0] + g) / m;
  return ResidueClass(m, g, t0);
}

bool default_sample(const FamilyDef& f, Binding& b, Rng& rng) {
  for (const ParamSpec& p : f.params) {
    if (p.derive) continue;
    switch (p.kind) {
      case ParamKind::Int:
        b.set(p.name, rng.uniform(p.lo, p.hi));
        break;
      case ParamKind::Rat: {
        long num = rng.uniform(p.lo, p.hi);
        long den = rng.uniform(1, p.rat_den_hi);
        b.scalars[p.name] = make_rational(num, den);
        break;
      }
      case ParamKind::IntList: {
        long len = rng.uniform(p.len_lo, p.len_hi);
        std::vector<Rational> xs;
        for (long i = 0; i < len; ++i) xs.emplace_back(rng.uniform(p.lo, p.hi));
        b.lists[p.name] = std::move(xs);
        break;
      }
      case ParamKind::RatList: {
        long len = rng.uniform(p.len_lo, p.len_hi);
        std::vector<Rational> xs;
        for (long i = 0; i < len; ++i)
          xs.push_back(make_rational(rng.uniform(p.lo, p.hi), rng.uniform(1, p.rat_den_hi)));
        b.lists[p.name] = std::move(xs);
        break;
      }
    }
  }
  return true;
}

VerifyReport verify_identity(const FamilyDef& f, int samples, uint64_t seed) {
  VerifyReport rep;
  rep.id = f.id;
  rep.requested = samples;
  constexpr long kDrawCap = 100000;
  for (long draw = 0; draw < kDrawCap && rep.evaluated < samples; ++draw) {
    ++rep.draws;
    // Deterministic per-draw derivation, independent of any parallel split.
    Rng rng(seed * 0x100000001b3ULL + uint64_t(draw) * 0x9e3779b9ULL +
            std::hash<std::string>{}(f.id));
    Binding b;
    bool made = f.sampler ? f.sampler(b, rng) : default_sample(f, b, rng);
    if (!made) continue;
    if (!check_domain(f, b).ok) continue;
    ++rep.evaluated;
    try {
      DecompRecord rec = evaluate(f, b);
      if (!rec.verified) rep.failures.push_back({binding_to_string(f, b), "not verified"});
    } catch (const std::exception& e) {
      rep.failures.push_back({binding_to_string(f, b), e.what()});
    }
  }
  rep.gave_up = rep.evaluated < samples;
  return rep;
}

namespace {

/// Odometer over the grid values of all non-derived parameters.
class GridIter {
 public:
  GridIter(const FamilyDef& f, long cap) : f_(f) {
    for (const ParamSpec& p : f.params) {
      if (p.derive) continue;
      Axis ax;
      ax.spec = &p;
      switch (p.kind) {
        case ParamKind::Int:
          for (long v = std::max(p.lo, 1L); v <= std::min(p.hi, cap); ++v)
            ax.values.push_back(Rational(v));
          if (p.lo < 1)
            for (long v = p.lo; v < 1; ++v) ax.values.insert(ax.values.begin(), Rational(v));
          break;
        case ParamKind::Rat:
          for (long num = 1; num <= std::min(p.hi, cap); ++num)
            for (long den = 1; den <= 2; ++den) ax.values.push_back(make_rational(num, den));
          break;
        case ParamKind::IntList:
          ax.is_list = true;
          break;
        case ParamKind::RatList:
          ax.is_list = true;
          ax.rat_entries = true;
          break;
      }
      axes_.push_back(std::move(ax));
    }
  }

  template <typename Fn>
  void run(long max_candidates, Fn&& fn) {
    Binding b;
    long budget = max_candidates;
    recurse(0, b, budget, fn);
  }

 private:
  struct Axis {
    const ParamSpec* spec;
    std::vector<Rational> values;
    bool is_list = false;
    bool rat_entries = false;
  };

  template <typename Fn>
  void recurse(size_t i, Binding& b, long& budget, Fn& fn) {
    if (budget <= 0) return;
    if (i == axes_.size()) {
      --budget;
      fn(b);
      return;
    }
    const Axis& ax = axes_[i];
    if (!ax.is_list) {
      for (const Rational& v : ax.values) {
        if (budget <= 0) return;
        b.scalars[ax.spec->name] = v;
        recurse(i + 1, b, budget, fn);
      }
      b.scalars.erase(ax.spec->name);
      return;
    }
    std::vector<Rational> entries;
    for (long v = 1; v <= 4; ++v) entries.emplace_back(v);
    if (ax.rat_entries)
      for (long v = 1; v <= 3; v += 2) entries.push_back(make_rational(v, 2));
    const long entry_hi = long(entries.size());
    for (long len = std::max(ax.spec->len_lo, 1L); len <= std::min(ax.spec->len_hi, 2L); ++len) {
      std::vector<long> idx(len, 1);
      while (true) {
        if (budget <= 0) return;
        std::vector<Rational> xs;
        for (long v : idx) xs.push_back(entries[v - 1]);
        b.lists[ax.spec->name] = xs;
        recurse(i + 1, b, budget, fn);
        long pos = len - 1;
        while (pos >= 0 && idx[pos] == entry_hi) idx[pos--] = 1;
        if (pos < 0) break;
        ++idx[pos];
      }
    }
    b.lists.erase(ax.spec->name);
  }

  const FamilyDef& f_;
  std::vector<Axis> axes_;
};

}  // namespace

VerifyReport grid_sweep(const FamilyDef& f, long cap, long max_candidates) {
  VerifyReport rep;
  rep.id = f.id;
  GridIter iter(f, cap);
  iter.run(max_candidates, [&](const Binding& b) {
    ++rep.draws;
    if (!check_domain(f, b).ok) return;
    ++rep.evaluated;
    try {
      evaluate(f, b);
    } catch (const std::exception& e) {
      rep.failures.push_back({binding_to_string(f, b), e.what()});
    }
  });
  return rep;
}

}  // namespace esfrac::families
