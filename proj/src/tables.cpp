#include "esfrac/tables.hpp"

#include <sstream>

#include "esfrac/families.hpp"

namespace esfrac::tables {

namespace {

Integer rv_for(const Integer& w, const Integer& b) { return ((4 * b - 1) * w + 1) / 4; }

}  // namespace

std::optional<BrvsRow> search_brvs(const Integer& w, const BrvsCaps& caps) {
  if (w % 4 != 1 || !is_prime(w)) throw DomainError("search_brvs needs a prime w === 1 (mod 4)");
  for (long s_cap = 16; s_cap / 2 < caps.s_max; s_cap *= 2) {
    long cap = std::min<long>(s_cap, caps.s_max);
    long floor_prev = s_cap == 16 ? 0 : s_cap / 2;
    for (Integer b = 1; b <= caps.b_max; ++b) {
      Integer rv = rv_for(w, b);
      for (const Integer& r : divisors(rv)) {
        Integer v = rv / r;
        for (long s = floor_prev + 1; s <= cap; ++s) {
          Integer D = (4 * rv - 1) * s - r * w;
          if (D < 1) continue;
          Integer num = rv * w * s;
          if (num % D != 0) continue;
          BrvsRow row{w, b, r, v, Integer(s), num / D, true};
          if (verify_brvs_row(row)) return row;
        }
      }
    }
  }
  return std::nullopt;
}

bool verify_brvs_row(const BrvsRow& row) {
  if (row.w % 4 != 1 || !is_prime(row.w)) return false;
  if (((4 * row.b - 1) * row.w + 1) % 4 != 0) return false;
  if (row.r * row.v != rv_for(row.w, row.b)) return false;
  Integer D = (4 * row.r * row.v - 1) * row.s - row.r * row.w;
  if (D < 1) return false;
  if ((row.r * row.v * row.w * row.s) % D != 0) return false;
  families::Binding bnd;
  bnd.scalars["w"] = Rational(row.w);
  bnd.scalars["b"] = Rational(row.b);
  bnd.scalars["r"] = Rational(row.r);
  bnd.scalars["v"] = Rational(row.v);
  bnd.scalars["s"] = Rational(row.s);
  try {
    DecompRecord rec = families::evaluate("F51", bnd);
    DecompRecord rec2 = families::evaluate("F52", bnd);
    return rec.verified && rec2.verified;
  } catch (const std::exception&) {
    return false;
  }
}

BrvsRow make_brvs_row(const Integer& w, const Integer& b, const Integer& r, const Integer& v,
                      const Integer& s) {
  BrvsRow row{w, b, r, v, s, 0, false};
  Integer D = (4 * r * v - 1) * s - r * w;
  if (D > 0 && (r * v * w * s) % D == 0) row.third_den = r * v * w * s / D;
  row.verified = verify_brvs_row(row);
  return row;
}

WitnessRow search_integer_witness(const Integer& n, const Integer& rational_bound) {
  if (n < 2) throw DomainError("search_integer_witness needs n >= 2");
  WitnessRow row;
  row.n = n;
  row.integer_witness = coverage::integer_size_reachable(n, 4);
  if (!row.integer_witness)
    row.rational_witness = coverage::rational_size_reachable(n, 4, rational_bound);
  return row;
}

std::vector<AbcRow> search_abc_mod840(const Integer& m_max, long c_max, long b_max) {
  if (m_max < 1 || c_max < 1 || b_max < 1) throw DomainError("search_abc_mod840 needs positive caps");
  std::vector<AbcRow> out;
  for (Integer m = 841; m <= m_max; m += 840) {
    for (long c = 1; c < c_max; ++c) {
      Integer a_hi = (m + c) / 4;
      for (Integer a = 1; a < a_hi; ++a) {
        for (long b = 1; b < b_max; ++b) {
          // pair-1 preconditions
          Integer W1 = (m + c) * (a + b) * m;
          bool ok1 = (m + c) % 4 == 0 && W1 % (4 * a * c) == 0 && W1 % (4 * Integer(b) * c) == 0;
          Integer W2 = (m * c + 1) * (a + b);
          bool ok2 = (m * c + 1) % 4 == 0 && W2 % (4 * a * c) == 0 && W2 % (4 * Integer(b) * c) == 0;
          if (!ok1 && !ok2) continue;
          families::Binding bnd;
          bnd.scalars["m"] = Rational(m);
          bnd.scalars["a"] = Rational(a);
          bnd.scalars["b"] = Rational(b);
          bnd.scalars["c"] = Rational(c);
          try {
            families::evaluate(ok1 ? "F17.1" : "F17.2", bnd);
          } catch (const std::exception&) {
            continue;  // precondition matched but evaluation rejected; not a row
          }
          out.push_back({m, a, Integer(b), Integer(c), ok1 ? 1 : 2});
        }
      }
    }
  }
  return out;
}

std::string brvs_csv(const std::vector<BrvsRow>& rows) {
  std::ostringstream os;
  os << "w,b,r,v,s\n";
  for (const auto& r : rows)
    os << r.w << "," << r.b << "," << r.r << "," << r.v << "," << r.s << "\n";
  return os.str();
}

std::string witness_csv(const std::vector<WitnessRow>& rows) {
  std::ostringstream os;
  os << "n,c,d,t,e,u,f,t2\n";
  for (const auto& r : rows) {
    os << r.n << ",";
    if (r.integer_witness)
      os << r.integer_witness->c << "," << r.integer_witness->d << "," << r.integer_witness->t;
    else
      os << ",,";
    os << ",";
    if (r.rational_witness)
      os << r.rational_witness->e << "," << r.rational_witness->u << "," << r.rational_witness->f
         << "," << r.rational_witness->t;
    else
      os << ",,,";
    os << "\n";
  }
  return os.str();
}

std::string abc_csv(const std::vector<AbcRow>& rows) {
  std::ostringstream os;
  os << "m,a,b,c,variant\n";
  for (const auto& r : rows)
    os << r.m << "," << r.a << "," << r.b << "," << r.c << "," << r.variant << "\n";
  return os.str();
}

}  // namespace esfrac::tables
