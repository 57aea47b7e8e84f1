#include "esfrac/coverage.hpp"

#include <algorithm>
#include <sstream>

namespace esfrac {

ResidueClass::ResidueClass(Integer m, Integer g, Integer start) : modulus(std::move(m)), t0(std::move(start)) {
  if (modulus < 1) throw DomainError("residue class needs modulus >= 1");
  // normalize offset into [0, modulus) keeping the member set
  Integer g_norm = ((g % modulus) + modulus) % modulus;
  t0 += (g_norm - g) / modulus;
  offset = g_norm;
  if (t0 < 1) t0 = 1;
}

bool ResidueClass::contains(const Integer& n) const {
  if (((n + offset) % modulus) != 0) return false;
  return n >= min_member();
}

Integer ResidueClass::residue() const { return ((-offset) % modulus + modulus) % modulus; }

std::string ResidueClass::str() const {
  std::ostringstream os;
  os << modulus << "t-" << offset;
  if (t0 != 1) os << " (t >= " << t0 << ")";
  return os.str();
}

}  // namespace esfrac

namespace esfrac::coverage {

using families::Binding;
using families::FamilyDef;
using families::ParamKind;
using families::Registry;

std::vector<ResidueClass> split(const ResidueClass& c, const Integer& factor) {
  if (factor < 2) throw DomainError("split needs factor >= 2");
  std::vector<ResidueClass> out;
  for (Integer j = 0; j < factor; ++j) {
    // t = factor*t' - j in the parent gives modulus*factor*t' - (modulus*j + offset)
    Integer g = c.modulus * j + c.offset;
    Integer t0 = (c.t0 + j + factor - 1) / factor;
    out.emplace_back(c.modulus * factor, g, std::max(Integer(1), t0));
  }
  std::sort(out.begin(), out.end(),
            [](const ResidueClass& a, const ResidueClass& b) { return a.offset < b.offset; });
  return out;
}

namespace {

/// Enumerates grid assignments of the non-free parameters of f and reports the
/// residue signature of each instance whose free variable scan succeeds.
void for_each_instance(const FamilyDef& f, const Integer& k, long grid,
                       const std::function<void(const Binding&, const ResidueClass&)>& fn) {
  if (!f.free_var) return;
  std::vector<const families::ParamSpec*> axes;
  for (const auto& ps : f.params) {
    if (ps.derive || ps.name == *f.free_var) continue;
    if (ps.kind == ParamKind::IntList || ps.kind == ParamKind::RatList) return;  // no grid
    if (ps.kind == ParamKind::Rat) return;
    axes.push_back(&ps);
  }
  std::vector<long> idx(axes.size());
  std::vector<long> lo(axes.size()), hi(axes.size());
  for (size_t i = 0; i < axes.size(); ++i) {
    lo[i] = std::max(axes[i]->lo, 1L);
    hi[i] = std::min(axes[i]->hi, grid);
    if (hi[i] < lo[i]) return;
    idx[i] = lo[i];
  }
  while (true) {
    Binding b;
    for (size_t i = 0; i < axes.size(); ++i) b.set(axes[i]->name, idx[i]);
    try {
      ResidueClass sig = residue_signature(f, b);
      // Only instances producing the requested target numerator count; the
      // numerator is free-variable independent, so the first admissible point
      // decides.
      bool num_ok = false;
      for (long t = 1; t <= 4000; ++t) {
        Binding pb = b;
        pb.set(*f.free_var, t);
        if (!families::check_domain(f, pb).ok) continue;
        try {
          num_ok = families::evaluate(f, pb).k == k;
        } catch (const std::exception&) {
        }
        break;
      }
      if (num_ok) fn(b, sig);
    } catch (const std::exception&) {
      // instance with no valid progression; skip
    }
    if (axes.empty()) break;
    size_t carry = 0;
    for (; carry < axes.size(); ++carry) {
      if (idx[carry] < hi[carry]) {
        ++idx[carry];
        break;
      }
      idx[carry] = lo[carry];
    }
    if (carry == axes.size()) break;
  }
}

bool serves(const ResidueClass& sig, const Integer& modulus, const Integer& residue) {
  if (modulus % sig.modulus != 0) return false;
  if (((residue + sig.offset) % sig.modulus) != 0) return false;
  // the class's first positive member must already be inside the progression
  Integer first = residue == 0 ? modulus : residue;
  return first >= sig.min_member();
}

}  // namespace

const ResidueStatus& CoverageReport::at(const Integer& residue) const {
  for (const auto& r : residues)
    if (r.residue == residue) return r;
  throw DomainError("residue out of range");
}

bool CoverageReport::covered(const Integer& residue) const { return !at(residue).covered_by.empty(); }

CoverageReport covers(const std::vector<std::string>& family_ids, const Integer& modulus,
                      const Integer& k, long grid) {
  if (modulus < 2) throw DomainError("covers needs modulus >= 2");
  CoverageReport rep;
  rep.modulus = modulus;
  rep.k = k;
  rep.grid = grid;
  for (Integer r = 0; r < modulus; ++r) {
    ResidueStatus st;
    st.residue = r;
    st.offset = ((modulus - r) % modulus + modulus) % modulus;
    rep.residues.push_back(std::move(st));
  }
  const Registry& reg = Registry::instance();
  for (const std::string& id : family_ids) {
    for (const FamilyDef* f : reg.resolve(id)) {
      for_each_instance(*f, k, grid, [&](const Binding& b, const ResidueClass& sig) {
        for (auto& st : rep.residues) {
          if (serves(sig, modulus, st.residue))
            st.covered_by.push_back({f->id, families::binding_to_string(*f, b), sig});
        }
      });
    }
  }
  return rep;
}

MordellReport mordell_check(const std::vector<std::string>& family_ids, bool raw_digits,
                            const Integer& k, long grid) {
  MordellReport rep;
  rep.squares = !raw_digits;
  std::vector<long> rs = raw_digits ? std::vector<long>{12, 112, 132, 172, 192, 232}
                                    : std::vector<long>{1, 121, 169, 289, 361, 529};
  CoverageReport cov = covers(family_ids, 840, k, grid);
  for (long r : rs) rep.residues.push_back(cov.at(Integer(r)));
  return rep;
}

std::optional<IntegerWitness> integer_size_reachable(const Integer& n, const Integer& k) {
  if (n < 1 || k < 1) throw DomainError("integer_size_reachable needs n, k >= 1");
  // k*max <= k*lcm*t = n + c + d <= n + 2*max gives max <= n/(k-2) for k >= 3.
  Integer bound = k >= 3 ? Integer((n + (k - 2) - 1) / (k - 2)) : Integer((n + 1) / 2 + 2);
  for (Integer c = 1; c <= bound; ++c) {
    for (Integer d = c; d <= bound; ++d) {
      Integer L = k * lcm(c, d);
      Integer rhs = n + c + d;
      if (rhs % L == 0) return IntegerWitness{c, d, rhs / L};
    }
  }
  return std::nullopt;
}

std::optional<RationalWitness> rational_size_reachable(const Integer& n, const Integer& k,
                                                       const Integer& bound) {
  if (n < 1 || k < 1 || bound < 1) throw DomainError("rational_size_reachable needs n, k, bound >= 1");
  for (Integer e = 1; e <= bound; ++e) {
    for (Integer u = e; u <= bound; ++u) {
      Integer L = k * lcm(e, u);
      for (const Integer& fdiv : divisors(e + u)) {
        Integer rhs = n + (e + u) / fdiv;
        if (rhs % L == 0) return RationalWitness{e, u, fdiv, rhs / L};
      }
    }
  }
  return std::nullopt;
}

}  // namespace esfrac::coverage
