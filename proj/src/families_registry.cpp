#include <algorithm>

#include "esfrac/families.hpp"

// The family catalog. Each entry is data: parameter signature, domain
// predicate, target and denominator formulas, covered-class form. The single
// generic evaluator in families.cpp interprets all of them, so a transcription
// error here is caught by the soundness sweeps rather than hidden in
// per-family code.

namespace esfrac::families {

using namespace formula;  // NOLINT

namespace {

ParamSpec ip(std::string name, long lo, long hi) {
  ParamSpec s;
  s.name = std::move(name);
  s.kind = ParamKind::Int;
  s.lo = lo;
  s.hi = hi;
  return s;
}

ParamSpec ipd(std::string name, ExprPtr derive) {
  ParamSpec s;
  s.name = std::move(name);
  s.kind = ParamKind::Int;
  s.derive = std::move(derive);
  return s;
}

ParamSpec rp(std::string name, long num_hi, long den_hi) {
  ParamSpec s;
  s.name = std::move(name);
  s.kind = ParamKind::Rat;
  s.lo = 1;
  s.hi = num_hi;
  s.rat_den_hi = den_hi;
  return s;
}

ParamSpec il(std::string name, long len_lo, long len_hi, long lo, long hi) {
  ParamSpec s;
  s.name = std::move(name);
  s.kind = ParamKind::IntList;
  s.len_lo = len_lo;
  s.len_hi = len_hi;
  s.lo = lo;
  s.hi = hi;
  return s;
}

ParamSpec rl(std::string name, long len_lo, long len_hi, long num_hi, long den_hi) {
  ParamSpec s;
  s.name = std::move(name);
  s.kind = ParamKind::RatList;
  s.len_lo = len_lo;
  s.len_hi = len_hi;
  s.lo = 1;
  s.hi = num_hi;
  s.rat_den_hi = den_hi;
  return s;
}

Constraint c(CondPtr cond, std::string label) { return {std::move(cond), std::move(label)}; }

DenomSpec dn(ExprPtr e) { return {std::move(e), +1, "", 0}; }

DenomSpec dn_spread(ExprPtr e, std::string list, long drop = 0) {
  return {std::move(e), +1, std::move(list), drop};
}

long uround(Rng& rng, long lo, long hi) { return rng.uniform(lo, hi); }

void set_int(Binding& b, const std::string& name, const Integer& v) { b.scalars[name] = Rational(v); }

// sign expression 2*plus - 1 for the +/- families
ExprPtr sig_of(const ExprPtr& plus) { return 2 * plus - 1; }

}  // namespace

Registry::Registry() {
  auto add = [&](FamilyDef f) { entries_.push_back(std::move(f)); };

  // ---- F01: two-part partition base -------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F01";
    f.title = "two-part base k/((kq-1)b) = 1/(bq) + 1/((kq-1)bq)";
    f.anchor = "two-part partition base";
    f.class_template = "k*b*q - b (q free)";
    f.params = {ip("k", 1, 6), ip("b", 1, 12), ip("q", 1, 12)};
    auto k = p("k"), b = p("b"), q = p("q");
    f.domain = {c(gt(k * q, cst(1)), "k*q > 1")};
    f.target_num = k;
    f.target_den = (k * q - 1) * b;
    f.denoms = {dn(b * q), dn((k * q - 1) * b * q)};
    f.free_var = "q";
    add(std::move(f));
  }

  // ---- F02: auxiliary identity (1) ---------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F02";
    f.title = "k/(mt-v) with (k-m) | v and v | t";
    f.anchor = "auxiliary identity (1)";
    f.class_template = "m*t - v over t in v*q*N";
    f.params = {ip("k", 2, 8), ip("m", 1, 7), ip("v", 1, 12), ip("t", 1, 96)};
    auto k = p("k"), m = p("m"), v = p("v"), t = p("t");
    auto n = m * t - v;
    f.domain = {
        c(le(m, k - 1), "m <= k-1"),
        c(divides(k - m, v), "(k-m) | v"),
        c(divides(v, t), "v | t"),
        c(any_of({ge(m, cst(2)), ge(t, 2 * v)}), "m >= 2 or t >= 2v (mq > 1)"),
    };
    f.target_num = k;
    f.target_den = n;
    f.denoms = {dn((m * t - v) / (k - m)), dn(t), dn(t * (m * t - v) / v)};
    f.free_var = "t";
    f.sampler = [](Binding& b, Rng& rng) {
      long k_ = uround(rng, 2, 8);
      long m_ = uround(rng, 1, k_ - 1);
      long v_ = (k_ - m_) * uround(rng, 1, 4);
      long j = m_ == 1 ? uround(rng, 2, 8) : uround(rng, 1, 8);
      b.set("k", k_);
      b.set("m", m_);
      b.set("v", v_);
      b.set("t", v_ * j);
      return true;
    };
    add(std::move(f));
  }

  // ---- F03: auxiliary identity (2) ---------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F03";
    f.title = "k/(kt-v) with z + (v-z) split, t multiple of lcm(z, v-z)";
    f.anchor = "auxiliary identity (2)";
    f.class_template = "k*l*x - v, l = lcm(z, v-z)";
    f.params = {ip("k", 2, 8), ip("v", 2, 8), ip("z", 1, 7), ip("x", 1, 12),
                ipd("l", lcm2(p("z"), p("v") - p("z"))), ipd("t", p("l") * p("x"))};
    auto k = p("k"), v = p("v"), z = p("z"), t = p("t");
    f.domain = {c(le(v, k), "v <= k"), c(le(z, v - 1), "z <= v-1")};
    f.target_num = k;
    f.target_den = k * t - v;
    f.denoms = {dn(t), dn(t * (k * t - v) / z), dn(t * (k * t - v) / (v - z))};
    f.free_var = "x";
    add(std::move(f));
  }

  // ---- F04: auxiliary identity (3) ---------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F04";
    f.title = "(m/v)/(mt-v) two-term form, v | m";
    f.anchor = "auxiliary identity (3)";
    f.class_template = "m*t - v";
    f.params = {ip("m", 1, 12), ip("v", 1, 12), ip("t", 1, 24)};
    auto m = p("m"), v = p("v"), t = p("t");
    f.domain = {
        c(divides(v, m), "v | m"),
        c(any_of({all_of({eq(v, m), ge(t, cst(2))}), all_of({ne(v, m), ge(t, cst(1))})}),
          "t table (t >= 2 when v = m)"),
    };
    f.target_num = m / v;
    f.target_den = m * t - v;
    f.denoms = {dn(t * v), dn(t * (m * t - v))};
    f.free_var = "t";
    add(std::move(f));
  }

  // ---- F05: auxiliary identity (4) ---------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F05";
    f.title = "(m/r)/(mt-(l+d)) with r = l*d | m";
    f.anchor = "auxiliary identity (4)";
    f.class_template = "m*t - (l+d)";
    f.params = {ip("m", 1, 12), ip("l", 1, 4), ip("d", 1, 4), ip("t", 1, 24),
                ipd("r", p("l") * p("d"))};
    auto m = p("m"), l = p("l"), d = p("d"), t = p("t"), r = p("r");
    auto n = m * t - (l + d);
    f.domain = {
        c(divides(r, m), "r = l*d | m"),
        c(any_of({all_of({eq(r, m), eq(l + d, m), ge(t, cst(2))}),
                  all_of({ne(r, m), ge(t, cst(1))})}),
          "t table (r = m, l+d = m -> t >= 2; r != m -> all t)"),
    };
    f.target_num = m / r;
    f.target_den = n;
    f.denoms = {dn(l * t * n), dn(r * t), dn(d * t * n)};
    f.free_var = "t";
    add(std::move(f));
  }

  // ---- F06: auxiliary identity (5) ---------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F06";
    f.title = "k/((kw-1)t + (k-1)w - 1)";
    f.anchor = "auxiliary identity (5)";
    f.class_template = "(k*w-1)t + (k-1)w - 1";
    f.params = {ip("k", 1, 6), ip("w", 1, 8), ip("t", 0, 24)};
    auto k = p("k"), w = p("w"), t = p("t");
    auto n = (k * w - 1) * t + ((k - 1) * w - 1);
    auto tw = (2 * k - 1) * w;
    f.domain = {
        c(ne(tw, cst(1)), "(2k-1)w != 1"),
        c(any_of({all_of({eq(tw, cst(2)), ge(t, cst(2))}),
                  all_of({gt(tw, cst(2)), le(k, cst(2)), ge(t, cst(1))}),
                  all_of({gt(tw, cst(2)), gt(k, cst(2)), ge(t, cst(0))})}),
          "t table for (2k-1)w"),
    };
    f.target_num = k;
    f.target_den = n;
    f.denoms = {dn(w * (t + 1)), dn(w * n), dn((t + 1) * n)};
    f.free_var = "t";
    add(std::move(f));
  }

  // ---- F07: auxiliary identity (6) ---------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F07";
    f.title = "k/((kw-1)(t-w)), t > w";
    f.anchor = "auxiliary identity (6)";
    f.class_template = "(k*w-1)*(t-w)";
    f.params = {ip("k", 1, 6), ip("w", 1, 8), ip("t", 1, 24)};
    auto k = p("k"), w = p("w"), t = p("t");
    f.domain = {c(gt(k * w, cst(1)), "k*w > 1"), c(gt(t, w), "t > w")};
    f.target_num = k;
    f.target_den = (k * w - 1) * (t - w);
    f.denoms = {dn(w * (t - w)), dn(w * t * (k * w - 1)), dn(t * (k * w - 1) * (t - w))};
    f.free_var = "t";
    add(std::move(f));
  }

  // ---- F08: auxiliary identity (7) ---------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F08";
    f.title = "k/((kw-1)(v-1)), v >= 2";
    f.anchor = "auxiliary identity (7)";
    f.class_template = "(k*w-1)*(v-1)";
    f.params = {ip("k", 1, 6), ip("w", 1, 8), ip("v", 2, 24)};
    auto k = p("k"), w = p("w"), v = p("v");
    f.domain = {c(gt(k * w, cst(1)), "k*w > 1"), c(ge(v, cst(2)), "v >= 2")};
    f.target_num = k;
    f.target_den = (k * w - 1) * (v - 1);
    f.denoms = {dn(w * (v - 1)), dn(v * w * (k * w - 1)), dn(v * w * (k * w - 1) * (v - 1))};
    f.free_var = "v";
    add(std::move(f));
  }

  // ---- F09: auxiliary identity (8), prime-power form ----------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F09";
    f.title = "A^b/(A(A^b - A1^c - n)n), A1 = rad(A)";
    f.anchor = "auxiliary identity (8)";
    f.params = {ip("A", 2, 12), ip("b", 1, 4), ip("c", 1, 2), ip("n", 1, 12),
                ipd("A1", rad(p("A"))),
                ipd("M", pw(p("A"), p("b")) - pw(p("A1"), p("c")) - p("n"))};
    auto A = p("A"), b_ = p("b"), cc = p("c"), n = p("n"), A1 = p("A1"), M = p("M");
    f.domain = {
        c(any_of({all_of({eq(A, A1), gt(b_, cc), ne(b_, cst(1))}),
                  all_of({ne(A, A1), ge(b_, cc)})}),
          "b/c table (b > c, b != 1 when A squarefree)"),
        c(divides(pw(A1, cc), A), "A1^c | A"),
        c(ge(M, cst(1)), "A^b - A1^c - n >= 1"),
    };
    f.target_num = pw(A, b_);
    f.target_den = A * M * n;
    f.denoms = {dn(A * n), dn((A / pw(A1, cc)) * M * n), dn(A * M)};
    add(std::move(f));
  }

  // ---- F10: auxiliary identity (9) ---------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F10";
    f.title = "k/(wl) = 1/(rvw) + 1/(vls) + 1/(rvwls/((krv-l)s-rw))";
    f.anchor = "auxiliary identity (9)";
    f.params = {ip("k", 1, 6), ip("r", 1, 6), ip("v", 1, 6), ip("w", 1, 6), ip("l", 1, 6),
                ip("s", 1, 300)};
    auto k = p("k"), r = p("r"), v = p("v"), w = p("w"), l = p("l"), s = p("s");
    auto D = (k * r * v - l) * s - r * w;
    f.domain = {c(ge(D, cst(1)), "(krv-l)s - rw >= 1"),
                c(divides(D, r * v * w * l * s), "(krv-l)s - rw | rvwls")};
    f.target_num = k;
    f.target_den = w * l;
    f.denoms = {dn(r * v * w), dn(v * l * s), dn(r * v * w * l * s / D)};
    f.sampler = [](Binding& b, Rng& rng) {
      long k_ = uround(rng, 1, 4), r_ = uround(rng, 1, 6), v_ = uround(rng, 1, 6);
      long w_ = uround(rng, 1, 6), l_ = uround(rng, 1, 6);
      for (long s_ = 1; s_ <= 300; ++s_) {
        long D_ = (k_ * r_ * v_ - l_) * s_ - r_ * w_;
        if (D_ >= 1 && (r_ * v_ * w_ * l_ * s_) % D_ == 0) {
          b.set("k", k_);
          b.set("r", r_);
          b.set("v", v_);
          b.set("w", w_);
          b.set("l", l_);
          b.set("s", s_);
          return true;
        }
      }
      return false;
    };
    add(std::move(f));
  }

  // ---- F11: auxiliary identity (10), signed ------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F11";
    f.title = "k/(kmv +- b) signed form";
    f.anchor = "auxiliary identity (10)";
    f.params = {ip("k", 1, 6), ip("m", 1, 6), ip("v", 1, 6), ip("b", 1, 6), ip("s", 1, 300),
                ip("plus", 0, 1)};
    auto k = p("k"), m = p("m"), v = p("v"), bb = p("b"), s = p("s");
    auto sig = sig_of(p("plus"));
    auto X = k * m * v + sig * bb;
    auto E = sig * (v - s * bb);
    f.domain = {c(ge(X, cst(1)), "k*m*v > -+b"),
                c(divides(E, m * v * s * X), "-+sb+-v | mvs(kmv+-b)")};
    f.target_num = k;
    f.target_den = X;
    f.denoms = {dn(m * v), dn((0 - sig) * m * s * X), dn(m * v * s * X / E)};
    f.sampler = [](Binding& b, Rng& rng) {
      long k_ = uround(rng, 1, 5), m_ = uround(rng, 1, 6), v_ = uround(rng, 1, 6);
      long b_ = uround(rng, 1, 6), pl = uround(rng, 0, 1);
      long sig = 2 * pl - 1;
      long X_ = k_ * m_ * v_ + sig * b_;
      if (X_ < 1) return false;
      for (long s_ = 1; s_ <= 300; ++s_) {
        long E_ = sig * (v_ - s_ * b_);
        if (E_ != 0 && (long long)(m_)*v_ * s_ * X_ % E_ == 0) {
          b.set("k", k_);
          b.set("m", m_);
          b.set("v", v_);
          b.set("b", b_);
          b.set("s", s_);
          b.set("plus", pl);
          return true;
        }
      }
      return false;
    };
    add(std::move(f));
  }

  // ---- F12: signed corollary with f + g = ry ------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F12";
    f.title = "(k/g)/(kx +- y), f + g = ry";
    f.anchor = "signed split f+g=ry";
    f.params = {ip("k", 1, 6), ip("x", 1, 8), ip("y", 1, 8), ip("r", 1, 6), ip("f", 1, 47),
                ip("plus", 0, 1), ipd("g", p("r") * p("y") - p("f"))};
    auto k = p("k"), x = p("x"), y = p("y"), r = p("r"), ff = p("f"), g = p("g");
    auto sig = sig_of(p("plus"));
    auto X = k * x + sig * y;
    f.domain = {c(ge(g, cst(1)), "g = ry - f >= 1"), c(ge(X, cst(1)), "kx > -+y"),
                c(divides(ff, x * r * g * X), "f | xrg(kx+-y)")};
    f.target_num = k;
    f.target_den = g * X;
    f.denoms = {dn(x * g), dn((0 - sig) * x * r * X), dn((0 - sig) * x * r * g * X / ff)};
    f.sampler = [](Binding& b, Rng& rng) {
      long k_ = uround(rng, 1, 5), x_ = uround(rng, 1, 8), y_ = uround(rng, 1, 8);
      long r_ = uround(rng, 1, 6), pl = uround(rng, 0, 1);
      long sig = 2 * pl - 1;
      long X_ = k_ * x_ + sig * y_;
      if (X_ < 1 || r_ * y_ < 2) return false;
      long start = uround(rng, 1, r_ * y_ - 1);
      for (long off = 0; off < r_ * y_ - 1; ++off) {
        long f_ = 1 + (start - 1 + off) % (r_ * y_ - 1);
        long g_ = r_ * y_ - f_;
        if ((long long)(x_)*r_ * g_ * X_ % f_ == 0) {
          b.set("k", k_);
          b.set("x", x_);
          b.set("y", y_);
          b.set("r", r_);
          b.set("f", f_);
          b.set("plus", pl);
          return true;
        }
      }
      return false;
    };
    add(std::move(f));
  }

  // ---- F13: distributive split -------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F13";
    f.title = "k/n = 1/((n+v)/k) + 1/(dn(n+v)/(z a)) + 1/(dn(n+v)/(z b))";
    f.anchor = "distributive split";
    f.params = {ip("k", 1, 8), ip("z", 1, 8), ip("d", 1, 3), ip("v", 1, 12), ip("n", 1, 240),
                ip("alpha", 1, 96), ipd("beta", (p("k") / p("z")) * p("d") * p("v") - p("alpha"))};
    auto k = p("k"), z = p("z"), d = p("d"), v = p("v"), n = p("n");
    auto al = p("alpha"), be = p("beta");
    auto T = d * n * (n + v);
    f.domain = {c(divides(z, k), "z | k"), c(divides(k, n + v), "k | n+v"),
                c(ge(be, cst(1)), "beta >= 1"), c(divides(z * al, T), "z*alpha | dn(n+v)"),
                c(divides(z * be, T), "z*beta | dn(n+v)")};
    f.target_num = k;
    f.target_den = n;
    f.denoms = {dn((n + v) / k), dn(T / (z * al)), dn(T / (z * be))};
    f.sampler = [](Binding& b, Rng& rng) {
      static const long ks[] = {1, 2, 3, 4, 6, 8};
      long k_ = ks[uround(rng, 0, 5)];
      auto zdiv = divisors(Integer(k_));
      long z_ = to_long(zdiv[uround(rng, 0, long(zdiv.size()) - 1)]);
      long d_ = uround(rng, 1, 3);
      long v_ = uround(rng, 1, 12);
      long n_ = k_ * uround(rng, 1, 30) - v_;
      while (n_ < 1) n_ += k_;
      Integer T = Integer(d_) * n_ * (n_ + v_);
      long S = (k_ / z_) * d_ * v_;
      std::vector<long> ok;
      for (const Integer& a : divisors(T)) {
        if (a >= S) break;
        long a_ = to_long(a);
        if (T % (z_ * a_) == 0 && T % (Integer(z_) * (S - a_)) == 0) ok.push_back(a_);
      }
      if (ok.empty()) return false;
      b.set("k", k_);
      b.set("z", z_);
      b.set("d", d_);
      b.set("v", v_);
      b.set("n", n_);
      b.set("alpha", ok[uround(rng, 0, long(ok.size()) - 1)]);
      return true;
    };
    add(std::move(f));
  }

  // ---- F14: distributive split, progression form --------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F14";
    f.title = "k/(mt-v), m = k*alpha*beta/gcd(k,alpha,beta)";
    f.anchor = "distributive, progression form";
    f.class_template = "m*t - v, m = k*a*b/gcd(k,a,b), v = z(a+b)/(kd)";
    f.params = {ip("k", 1, 6), ip("z", 1, 6), ip("d", 1, 3), ip("alpha", 1, 12), ip("beta", 1, 12),
                ip("t", 1, 24),
                ipd("v", p("z") * (p("alpha") + p("beta")) / (p("k") * p("d"))),
                ipd("m", p("k") * p("alpha") * p("beta") / gcd2(p("k"), gcd2(p("alpha"), p("beta"))))};
    auto k = p("k"), z = p("z"), d = p("d"), al = p("alpha"), be = p("beta"), t = p("t");
    auto v = p("v"), m = p("m");
    auto G = gcd2(k, gcd2(al, be));
    f.domain = {c(divides(z, k), "z | k"), c(ge(v, cst(1)), "v >= 1"),
                c(any_of({all_of({gt(m, v), ge(t, cst(1))}), all_of({eq(m, v), ge(t, cst(2))}),
                          all_of({lt(m, v), gt(t, v - m)})}),
                  "t table for m vs v")};
    f.target_num = k;
    f.target_den = m * t - v;
    f.denoms = {dn(al * be * t / G), dn((m * t - v) * (d * k * be * t / (z * G))),
                dn((m * t - v) * (d * k * al * t / (z * G)))};
    f.free_var = "t";
    f.sampler = [](Binding& b, Rng& rng) {
      long k_ = uround(rng, 1, 6);
      auto zdiv = divisors(Integer(k_));
      long z_ = to_long(zdiv[uround(rng, 0, long(zdiv.size()) - 1)]);
      long d_ = uround(rng, 1, 3);
      long vv = uround(rng, 1, 3);
      long S = k_ * d_ * vv;  // alpha + beta = S, so v = z*vv
      if (S < 2) return false;
      long al_ = uround(rng, 1, S - 1);
      b.set("k", k_);
      b.set("z", z_);
      b.set("d", d_);
      b.set("alpha", al_);
      b.set("beta", S - al_);
      b.set("t", uround(rng, 1, 24));
      return true;
    };
    add(std::move(f));
  }

  // ---- F15: two-part v-split ----------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F15";
    f.title = "1/n = 1/(n+v) + 1/(n(n+v)/v), v | n^2";
    f.anchor = "two-part v-split";
    f.class_template = "n with v | n^2";
    f.params = {ip("n", 1, 500), ip("v", 1, 12)};
    auto n = p("n"), v = p("v");
    f.domain = {c(divides(v, n * n), "v | n^2")};
    f.target_num = cst(1);
    f.target_den = n;
    f.denoms = {dn(n + v), dn(n * (n + v) / v)};
    f.free_var = "n";
    add(std::move(f));
  }

  // ---- F16: product rule ---------------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F16";
    f.title = "k/n via a/n = sum m_i/u_i and a partition of z into rationals";
    f.anchor = "product rule";
    f.params = {ip("k", 1, 6), ip("a", 1, 12), ip("n", 1, 120),
                il("m", 2, 2, 1, 24), il("u", 2, 2, 1, 120), rl("al", 1, 2, 4, 2),
                ipd("q", p("a") * elem("u", list_len("u")) * list_sum("al") /
                             (p("k") * elem("m", list_len("m")) * list_lcm("al")))};
    auto k = p("k"), a = p("a"), n = p("n"), q = p("q");
    f.domain = {
        c(eq(list_len("m"), list_len("u")), "len(m) = len(u)"),
        c(eq(a / n, spread_reduce(AggOp::Sum, "m", elem_i("m") / elem_i("u"))),
          "a/n = sum m_i/u_i"),
        c(forall("m", 1, divides(k * elem_i("m"), a * elem_i("u"))), "k*m_i | a*u_i (i < l)"),
        c(ge(q, cst(1)), "a*u_l*sum(al) = k*m_l*lcm(al)*q"),
    };
    f.target_num = k;
    f.target_den = n;
    f.denoms = {dn_spread(a * elem_i("u") / (k * elem_i("m")), "m", 1),
                dn_spread(a * elem("u", list_len("u")) * list_sum("al") /
                              (k * elem("m", list_len("m")) * elem_i("al")),
                          "al", 0)};
    f.sampler = [](Binding& b, Rng& rng) {
      long a_ = uround(rng, 1, 8), n_ = uround(rng, 2, 10), u1 = uround(rng, 1, 10);
      long hi = (a_ * u1 - 1) / n_;
      if (hi < 1) return false;
      long m1 = uround(rng, 1, hi);
      long m2 = a_ * u1 - m1 * n_;
      long u2 = n_ * u1;
      long k_ = uround(rng, 1, 5);
      if ((a_ * u1) % (k_ * m1) != 0) return false;
      b.set("k", k_);
      b.set("a", a_);
      b.set("n", n_);
      b.lists["m"] = {Rational(m1), Rational(m2)};
      b.lists["u"] = {Rational(u1), Rational(u2)};
      long len = uround(rng, 1, 2);
      std::vector<Rational> al;
      for (long i = 0; i < len; ++i)
        al.push_back(make_rational(uround(rng, 1, 4), uround(rng, 1, 2)));
      b.lists["al"] = std::move(al);
      return true;
    };
    add(std::move(f));
  }

  // ---- F17: Elsholtz-Tao pair ----------------------------------------------
  {
    FamilyDef f;
    f.id = "F17.1";
    f.catalog_id = "F17";
    f.title = "4/m = 1/((m+c)/4) + 1/((m+c)(a+b)m/(4ac)) + 1/((m+c)(a+b)m/(4bc))";
    f.anchor = "Elsholtz-Tao pair (1)";
    f.params = {ip("m", 1, 800), ip("a", 1, 8), ip("b", 1, 8), ip("c", 1, 16)};
    auto m = p("m"), a = p("a"), bb = p("b"), cc = p("c");
    auto W = (m + cc) * (a + bb) * m;
    f.domain = {c(divides(cst(4), m + cc), "m + c === 0 (mod 4)"),
                c(divides(4 * a * cc, W), "4ac | (m+c)(a+b)m"),
                c(divides(4 * bb * cc, W), "4bc | (m+c)(a+b)m")};
    f.target_num = cst(4);
    f.target_den = m;
    f.denoms = {dn((m + cc) / 4), dn(W / (4 * a * cc)), dn(W / (4 * bb * cc))};
    f.sampler = [](Binding& b, Rng& rng) {
      long a_ = uround(rng, 1, 6), b_ = uround(rng, 1, 6);
      auto cd = divisors(Integer(a_ + b_));
      long c_ = to_long(cd[uround(rng, 0, long(cd.size()) - 1)]);
      long m_ = 4 * a_ * b_ * uround(rng, 1, 8) - c_;
      if (m_ < 1) return false;
      b.set("m", m_);
      b.set("a", a_);
      b.set("b", b_);
      b.set("c", c_);
      return true;
    };
    add(std::move(f));
  }
  {
    FamilyDef f;
    f.id = "F17.2";
    f.catalog_id = "F17";
    f.title = "4/m = 1/((mc+1)m/4) + 1/((mc+1)(a+b)/(4ac)) + 1/((mc+1)(a+b)/(4bc))";
    f.anchor = "Elsholtz-Tao pair (2)";
    f.params = {ip("m", 1, 800), ip("a", 1, 8), ip("b", 1, 8), ip("c", 1, 16)};
    auto m = p("m"), a = p("a"), bb = p("b"), cc = p("c");
    auto W = (m * cc + 1) * (a + bb);
    f.domain = {c(divides(cst(4), m * cc + 1), "mc + 1 === 0 (mod 4)"),
                c(divides(4 * a * cc, W), "4ac | (mc+1)(a+b)"),
                c(divides(4 * bb * cc, W), "4bc | (mc+1)(a+b)")};
    f.target_num = cst(4);
    f.target_den = m;
    f.denoms = {dn((m * cc + 1) * m / 4), dn(W / (4 * a * cc)), dn(W / (4 * bb * cc))};
    f.sampler = [](Binding& b, Rng& rng) {
      long a_ = uround(rng, 1, 6), b_ = uround(rng, 1, 6);
      auto cd = divisors(Integer(a_ + b_));
      long c_ = to_long(cd[uround(rng, 0, long(cd.size()) - 1)]);
      Integer mod = 4 * a_ * b_;
      Integer inv;
      if (mpz_invert(inv.get_mpz_t(), Integer(c_).get_mpz_t(), mod.get_mpz_t()) == 0) return false;
      Integer m0 = ((-inv) % mod + mod) % mod;
      if (m0 == 0) m0 = mod;
      Integer m_ = m0 + mod * uround(rng, 0, 6);
      b.scalars["m"] = Rational(m_);
      b.set("a", a_);
      b.set("b", b_);
      b.set("c", c_);
      return true;
    };
    add(std::move(f));
  }

  // ---- F18: lcm partition (rational sizes) ---------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F18";
    f.title = "k/(kw - (e+u)/f), w = lcm(e,u), f | e+u";
    f.anchor = "lcm partition";
    f.params = {ip("k", 1, 6), ip("e", 1, 12), ip("u", 1, 12), ip("f", 1, 6),
                ipd("w", lcm2(p("e"), p("u")))};
    auto k = p("k"), e = p("e"), u = p("u"), ff = p("f"), w = p("w");
    auto N = k * w - (e + u) / ff;
    f.domain = {c(divides(ff, e + u), "f | e+u")};
    f.target_num = k;
    f.target_den = N;
    f.denoms = {dn(w), dn(w * ff * N / e), dn(w * ff * N / u)};
    add(std::move(f));
  }

  // ---- F19: lcm partition, t form ------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F19";
    f.title = "k/(kwt - (e+u)/f)";
    f.anchor = "lcm partition, t form";
    f.class_template = "k*lcm(e,u)*t - (e+u)/f";
    f.params = {ip("k", 1, 6), ip("e", 1, 12), ip("u", 1, 12), ip("f", 1, 6), ip("t", 1, 24),
                ipd("w", lcm2(p("e"), p("u")))};
    auto k = p("k"), e = p("e"), u = p("u"), ff = p("f"), t = p("t"), w = p("w");
    auto E = (e + u) / ff;
    auto N = k * w * t - E;
    f.domain = {c(divides(ff, e + u), "f | e+u"),
                c(any_of({all_of({gt(k * w, E), ge(t, cst(1))}),
                          all_of({eq(k * w, E), ge(t, cst(2))}),
                          all_of({lt(k * w, E), gt(t, E - k * w)})}),
                  "t table for kw vs (e+u)/f")};
    f.target_num = k;
    f.target_den = N;
    f.denoms = {dn(w * t), dn(w * t * ff * N / e), dn(w * t * ff * N / u)};
    f.free_var = "t";
    add(std::move(f));
  }

  // ---- F20: lcm partition, two-offset t form -------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F20";
    f.title = "k/((kw-c)t - d), w = lcm(c,d)";
    f.anchor = "lcm partition, two-offset form";
    f.class_template = "(k*lcm(c,d)-c)*t - d";
    f.params = {ip("k", 1, 6), ip("c", 1, 12), ip("d", 1, 12), ip("t", 1, 24),
                ipd("w", lcm2(p("c"), p("d")))};
    auto k = p("k"), cc = p("c"), dd = p("d"), t = p("t"), w = p("w");
    auto N = (k * w - cc) * t - dd;
    f.domain = {c(ge(k * w - cc, cst(1)), "k*w - c >= 1"),
                c(any_of({all_of({gt(k * w, cc + dd), ge(t, cst(1))}),
                          all_of({eq(k * w, cc + dd), ge(t, cst(2))}),
                          all_of({lt(k * w, cc + dd), gt(t, cc + dd - k * w)})}),
                  "t table for kw vs c+d")};
    f.target_num = k;
    f.target_den = N;
    f.denoms = {dn((w / cc) * N), dn(w * t), dn((w * t / dd) * N)};
    f.free_var = "t";
    add(std::move(f));
  }

  // ---- F21: multi-size lcm partition ---------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F21";
    f.title = "k/v = 1/w + sum 1/(vw/c_i), w = lcm(c_1..c_s)";
    f.anchor = "multi-size lcm partition";
    f.params = {ip("k", 1, 6), il("c", 1, 3, 1, 12), ipd("w", list_lcm("c")),
                ipd("v", p("k") * list_lcm("c") - list_sum("c"))};
    auto k = p("k"), w = p("w"), v = p("v");
    f.domain = {};
    f.target_num = k;
    f.target_den = v;
    f.denoms = {dn(w), dn_spread(v * w / elem_i("c"), "c")};
    add(std::move(f));
  }

  // ---- F22: m-power form -----------------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F22";
    f.title = "k/(m^(d-1)(mt-e) - (e+1))";
    f.anchor = "m-power form";
    f.class_template = "m^d*t - (e*m^(d-1)+e+1)";
    f.params = {ip("k", 1, 6), ip("m", 1, 8), ip("l", 1, 4), ip("e", 1, 4), ip("d", 1, 3),
                ip("t", 1, 24), ipd("A", (p("m") + 2 * p("l")) / p("k"))};
    auto k = p("k"), m = p("m"), l = p("l"), e = p("e"), d = p("d"), t = p("t"), A = p("A");
    auto M = pw(m, d - 1) * (m * t - e) - (e + 1);
    f.domain = {
        c(divides(k, m + 2 * l), "k | m+2l"),
        c(divides(e + 1, A), "e+1 | (m+2l)/k"),
        c(divides(e + 2 * l, A), "e+2l | (m+2l)/k"),
        c(divides(2 * l * t + e, A * M * t), "2lt+e | A*M*t"),
        c(any_of({all_of({gt(pw(m, d) - 1, e * (pw(m, d - 1) + 1)), ge(t, cst(1))}),
                  all_of({le(pw(m, d) - 1, e * (pw(m, d - 1) + 1)),
                          gt(pw(m, d) * t, e * (pw(m, d - 1) + 1) + 1)})}),
          "t table for m^d - 1 vs e(m^(d-1)+1)"),
    };
    f.target_num = k;
    f.target_den = M;
    f.denoms = {dn(A * pw(m, d - 1) * t), dn(A * M * t / (2 * l * t + e)),
                dn(A * pw(m, d - 1) * M * t / (e + 1))};
    f.free_var = "t";
    f.sampler = [](Binding& b, Rng& rng) {
      long e_ = uround(rng, 1, 3), l_ = uround(rng, 1, 3), d_ = uround(rng, 1, 3);
      long base = to_long(lcm(Integer(e_ + 1), Integer(e_ + 2 * l_)));
      long A_ = base * uround(rng, 1, 2);
      long k_ = uround(rng, 1, 4);
      long m_ = k_ * A_ - 2 * l_;
      if (m_ < 1 || m_ > 40) return false;
      long t0 = uround(rng, 1, 10);
      for (long t_ = t0; t_ < t0 + 40; ++t_) {
        Integer M = pow_ui(Integer(m_), unsigned(d_ - 1)) * (m_ * t_ - e_) - (e_ + 1);
        if (M < 1) continue;
        if ((Integer(A_) * M * t_) % (2 * l_ * t_ + e_) != 0) continue;
        b.set("k", k_);
        b.set("m", m_);
        b.set("l", l_);
        b.set("e", e_);
        b.set("d", d_);
        b.set("t", t_);
        return true;
      }
      return false;
    };
    add(std::move(f));
  }

  // ---- F23: q-form partition -------------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F23";
    f.title = "k/v = 1/w + 1/b + 1/(vb/c), b = (qv+c)/k, w = b/(q-1)";
    f.anchor = "q-form partition";
    f.params = {ip("k", 1, 6), ip("c", 1, 6), ip("q", 2, 12), ip("w", 1, 12),
                ipd("b", p("w") * (p("q") - 1)),
                ipd("v", (p("k") * p("b") - p("c")) / p("q"))};
    auto k = p("k"), cc = p("c"), q = p("q"), w = p("w"), bb = p("b"), v = p("v");
    f.domain = {c(divides(cc, q - 1), "c | q-1"), c(ge(v, cst(1)), "v >= 1"),
                c(divides(cc, v * bb), "c | v*b")};
    f.target_num = k;
    f.target_den = v;
    f.denoms = {dn(w), dn(bb), dn(v * bb / cc)};
    f.sampler = [](Binding& b, Rng& rng) {
      long k_ = uround(rng, 1, 6), c_ = uround(rng, 1, 6), w_ = uround(rng, 1, 12);
      long q_ = c_ * uround(rng, 1, 4) + 1;
      if (q_ < 2) q_ += c_;
      b.set("k", k_);
      b.set("c", c_);
      b.set("q", q_);
      b.set("w", w_);
      return true;
    };
    add(std::move(f));
  }

  // ---- F24: congruence shift (1) ----------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F24";
    f.title = "k/(k(kw-1)t - (2(kw-1)+(kz-(k-1))))";
    f.anchor = "congruence shift (1)";
    f.class_template = "k*(k*w-1)*t - (2*(k*w-1)+k*z-k+1)";
    f.params = {ip("k", 1, 6), ip("w", 1, 4), ip("z", 1, 12), ip("t", 1, 48)};
    auto k = p("k"), om = p("w"), z = p("z"), t = p("t");
    auto vv = k * (k * om - 1) * t - (2 * (k * om - 1) + (k * z - (k - 1)));
    auto eta = (k * om - 1) * t - (z + om - 1);
    auto cq = k * z - (k - 1);
    auto m = k * t - 2;
    f.domain = {
        c(any_of({all_of({ge(k, cst(3)), le(z, (k - 2) * om),
                          any_of({all_of({eq(z, cst(1)), ge(t, cst(1))}),
                                  all_of({ge(z, cst(2)),
                                          divides(k * (z - 1) + 1, t + 2 * (z - 1)),
                                          ge(t + 2 * (z - 1), k * (z - 1) + 1)})})}),
                  all_of({eq(k, cst(2)), le(z, 2 * om - 1), ge(t, cst(2))}),
                  all_of({eq(k, cst(1)), ge(om, cst(2)), divides(om - 1, z),
                          gt(t * (om - 1), 2 * (om - 1) + z)})}),
          "k/z/t table"),
        c(ge(eta, cst(1)), "eta >= 1"),
        c(ge(m, cst(1)), "kt-2 >= 1"),
        c(divides(cq, vv * eta * m), "kz-(k-1) | v*eta*(kt-2)"),
    };
    f.target_num = k;
    f.target_den = vv;
    f.denoms = {dn(eta), dn(eta * m), dn(eta * m * vv / cq)};
    f.free_var = "t";
    f.sampler = [](Binding& b, Rng& rng) {
      long k_ = uround(rng, 1, 5);
      long om_, z_, t_;
      if (k_ >= 3) {
        om_ = uround(rng, 1, 3);
        z_ = uround(rng, 1, (k_ - 2) * om_);
        if (z_ == 1) {
          t_ = uround(rng, 1, 16);
        } else {
          long y = uround(rng, 1, 6);
          if (k_ * y - 2 < 1) return false;
          t_ = (k_ * y - 2) * (z_ - 1) + y;
        }
      } else if (k_ == 2) {
        om_ = uround(rng, 1, 4);
        z_ = uround(rng, 1, 2 * om_ - 1);
        t_ = uround(rng, 2, 20);
      } else {
        om_ = uround(rng, 2, 4);
        z_ = (om_ - 1) * uround(rng, 1, 3);
        t_ = 3 + z_ / (om_ - 1) + uround(rng, 0, 12);
      }
      b.set("k", k_);
      b.set("w", om_);
      b.set("z", z_);
      b.set("t", t_);
      return true;
    };
    add(std::move(f));
  }

  // ---- F25: congruence shift (2) ----------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F25";
    f.title = "k/(k(kw-l)t - k(w+c) + l)";
    f.anchor = "congruence shift (2)";
    f.class_template = "k*(k*w-l)*t - k*(w+c) + l";
    f.params = {ip("k", 1, 6), ip("w", 1, 6), ip("l", 1, 6), ip("c", 1, 6), ip("t", 1, 36)};
    auto k = p("k"), om = p("w"), l = p("l"), cq = p("c"), t = p("t");
    auto vv = k * (k * om - l) * t - k * (om + cq) + l;
    auto R = (k * om - l) * t - cq;
    f.domain = {
        c(any_of({all_of({ge(k, cst(4)), ge(om, cst(1))}), all_of({eq(k, cst(3)), ge(om, cst(2))}),
                  all_of({eq(k, cst(2)), ge(om, cst(3))}), all_of({eq(k, cst(1)), ge(om, cst(3))})}),
          "omega table"),
        c(any_of({all_of({ge(k, cst(2)), gt(om * (k - 1), l + cq)}),
                  all_of({eq(k, cst(1)), gt(om, l + cq)})}),
          "omega(k-1) > l+c"),
        c(any_of({eq(cq, cst(1)), divides(cq, t)}), "t multiple of c when c != 1"),
        c(any_of({ge(k, cst(2)), ge(t, cst(2))}), "t >= 2 when k = 1"),
        c(ge(R, cst(1)), "(kw-l)t - c >= 1"),
    };
    f.target_num = k;
    f.target_den = vv;
    f.denoms = {dn(R), dn(vv * t), dn(R * vv * t / cq)};
    f.free_var = "t";
    f.sampler = [](Binding& b, Rng& rng) {
      long k_ = uround(rng, 1, 5);
      long om_ = k_ >= 4 ? uround(rng, 1, 4) : (k_ == 3 ? uround(rng, 2, 4) : uround(rng, 3, 5));
      long budget = k_ >= 2 ? om_ * (k_ - 1) - 1 : om_ - 1;
      if (budget < 2) return false;
      long l_ = uround(rng, 1, budget - 1);
      long c_ = uround(rng, 1, budget - l_);
      long t_ = c_ * uround(rng, 1, 10);
      if (k_ == 1 && t_ < 2) t_ += c_;
      b.set("k", k_);
      b.set("w", om_);
      b.set("l", l_);
      b.set("c", c_);
      b.set("t", t_);
      return true;
    };
    add(std::move(f));
  }

  // ---- F26: b | k form ----------------------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F26";
    f.title = "(k/b)/((kw-b)t - kv), b | k, v | w";
    f.anchor = "b | k form";
    f.class_template = "(k*w-b)*t - k*v";
    f.params = {ip("k", 1, 12), ip("v", 1, 4), ip("b", 1, 6), ip("w", 2, 16), ip("t", 1, 24)};
    auto k = p("k"), v = p("v"), bp = p("b"), w = p("w"), t = p("t");
    auto V = (k * w - bp) * t - k * v;
    f.domain = {
        c(divides(bp, k), "b | k"),
        c(divides(v, w), "v | w"),
        c(gt(k * w, bp), "k*w > b"),
        c(gt(w, v), "w > v"),
        c(any_of({all_of({gt(k * (w - v), bp), ge(t, cst(1))}),
                  all_of({lt(k * (w - v), bp), gt((k * w - bp) * t, k * v)})}),
          "t table for k(w-v) vs b"),
    };
    f.target_num = k / bp;
    f.target_den = V;
    f.denoms = {dn(bp * (w * t - v)), dn(w * V), dn(w * (w * t - v) * V / v)};
    f.free_var = "t";
    f.sampler = [](Binding& b, Rng& rng) {
      long b_ = uround(rng, 1, 3);
      long k_ = b_ * uround(rng, 1, 4);
      long v_ = uround(rng, 1, 4);
      long w_ = v_ * uround(rng, 2, 4);
      b.set("k", k_);
      b.set("v", v_);
      b.set("b", b_);
      b.set("w", w_);
      b.set("t", uround(rng, 1, 24));
      return true;
    };
    add(std::move(f));
  }

  // ---- F27: s-set fold ------------------------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F27";
    f.title = "k/v, v = (..((k*lcm(b)-b1)a1-b2)a2-..)-bs";
    f.anchor = "s-set fold";
    f.params = {ip("k", 1, 6), il("b", 2, 4, 1, 6), il("a", 1, 3, 1, 6),
                ipd("w", list_lcm("b")), ipd("v", set_fold(p("k") * list_lcm("b"), "b", "a"))};
    auto k = p("k"), w = p("w"), v = p("v");
    f.domain = {c(eq(list_len("b"), list_len("a") + 1), "len(b) = len(a)+1")};
    f.target_num = k;
    f.target_den = v;
    f.denoms = {dn(w * list_prod("a")),
                dn_spread(v * w * prefix_prod("a", spread_i() - 1) / elem_i("b"), "b")};
    f.sampler = [](Binding& b, Rng& rng) {
      long k_ = uround(rng, 2, 6);
      long s = uround(rng, 2, 4);
      std::vector<Rational> bs, as;
      for (long i = 0; i < s; ++i) bs.emplace_back(uround(rng, 1, 6));
      for (long i = 0; i < s - 1; ++i) as.emplace_back(uround(rng, 1, 6));
      b.set("k", k_);
      b.lists["b"] = std::move(bs);
      b.lists["a"] = std::move(as);
      return true;
    };
    add(std::move(f));
  }

  // ---- F28: a^b form ------------------------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F28";
    f.title = "a^b/(a^v t - (sum a^c_i + 1))";
    f.anchor = "a^b form";
    f.class_template = "a^v*t - (sum(a^c_i)+1)";
    f.params = {ip("a", 1, 5), ip("b", 1, 3), ip("v", 2, 9), ip("t", 1, 24), il("c", 1, 2, 1, 3)};
    auto a = p("a"), bp = p("b"), v = p("v"), t = p("t");
    auto S = spread_reduce(AggOp::Sum, "c", pw(p("a"), elem_i("c"))) + 1;
    auto M = pw(a, v) * t - S;
    f.domain = {
        c(forall("c", 0, gt(p("v"), p("b") + elem_i("c"))), "v > b + c_i"),
        c(any_of({all_of({gt(pw(a, v), S), ge(t, cst(1))}),
                  all_of({le(pw(a, v), S), gt(pw(a, v) * t, S)})}),
          "t table for a^v vs sum+1"),
    };
    f.target_num = pw(a, bp);
    f.target_den = M;
    f.denoms = {dn(pw(a, v - bp) * t), dn_spread(pw(a, v - (bp + elem_i("c"))) * t * M, "c"),
                dn(pw(a, v - bp) * t * M)};
    f.free_var = "t";
    f.sampler = [](Binding& b, Rng& rng) {
      long a_ = uround(rng, 1, 4), b_ = uround(rng, 1, 3);
      long len = uround(rng, 1, 2);
      std::vector<Rational> cs;
      long cmax = 0;
      for (long i = 0; i < len; ++i) {
        long ci = uround(rng, 1, 3);
        cmax = std::max(cmax, ci);
        cs.emplace_back(ci);
      }
      b.set("a", a_);
      b.set("b", b_);
      b.set("v", b_ + cmax + uround(rng, 1, 3));
      b.set("t", uround(rng, 1, 12));
      b.lists["c"] = std::move(cs);
      return true;
    };
    add(std::move(f));
  }

  // ---- F29: kb-1 rational split ---------------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F29";
    f.title = "k/lcm(l1,l2), g(kb-1) = l1 + l2";
    f.anchor = "kb-1 rational split";
    f.params = {ip("k", 1, 6), ip("b", 1, 8), ip("g", 1, 6), ip("l1", 1, 94),
                ipd("l2", p("g") * (p("k") * p("b") - 1) - p("l1"))};
    auto k = p("k"), bp = p("b"), g = p("g"), l1 = p("l1"), l2 = p("l2");
    auto L = lcm2(l1, l2);
    f.domain = {c(gt(k * bp, cst(1)), "k*b > 1"), c(ge(l2, cst(1)), "l2 >= 1")};
    f.target_num = k;
    f.target_den = L;
    f.denoms = {dn(L * g * bp / l1), dn(L * g * bp / l2), dn(L * bp)};
    f.sampler = [](Binding& b, Rng& rng) {
      long k_ = uround(rng, 1, 6), b_ = uround(rng, 1, 8), g_ = uround(rng, 1, 6);
      long total = g_ * (k_ * b_ - 1);
      if (total < 2) return false;
      b.set("k", k_);
      b.set("b", b_);
      b.set("g", g_);
      b.set("l1", uround(rng, 1, total - 1));
      return true;
    };
    add(std::move(f));
  }

  // ---- F30: kb-1 product ------------------------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F30";
    f.title = "k/v = 1/(b/(q-1)) + 1/b + 1/(bv), qv = kb-1";
    f.anchor = "kb-1 product";
    f.class_template = "v = (k(q-1)w - 1)/q over admissible w";
    f.params = {ip("k", 1, 8), ip("q", 2, 12), ip("w", 1, 48), ipd("b", p("w") * (p("q") - 1)),
                ipd("v", (p("k") * p("b") - 1) / p("q"))};
    auto k = p("k"), q = p("q"), w = p("w"), bb = p("b"), v = p("v");
    f.domain = {c(ge(v, cst(1)), "v >= 1")};
    f.target_num = k;
    f.target_den = v;
    f.denoms = {dn(bb / (q - 1)), dn(bb), dn(bb * v)};
    f.free_var = "w";
    add(std::move(f));
  }

  // ---- F31: kb-1 closed form ---------------------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F31";
    f.title = "k/(kb-1) = 1/b + 1/(kb^2) + 1/(kb^2(kb-1))";
    f.anchor = "kb-1 closed form";
    f.class_template = "k*b - 1 (b free)";
    f.params = {ip("k", 1, 8), ip("b", 1, 48)};
    auto k = p("k"), bp = p("b");
    f.domain = {c(any_of({all_of({ge(k, cst(2)), ge(bp, cst(1))}),
                          all_of({eq(k, cst(1)), ge(bp, cst(2))})}),
                  "b table (b >= 2 when k = 1)")};
    f.target_num = k;
    f.target_den = k * bp - 1;
    f.denoms = {dn(bp), dn(k * bp * bp), dn(k * bp * bp * (k * bp - 1))};
    f.free_var = "b";
    add(std::move(f));
  }

  // ---- F32: the six mod-8 q-family equations ------------------------------------------
  {
    struct Mod8 {
      const char* id;
      const char* cls;
      // n(t) and B(t) builders
      std::function<ExprPtr(ExprPtr)> n_of, q_of;
      std::function<ExprPtr(ExprPtr)> mid_div;  // B / mid_div(t) is the middle term
    };
    auto t = p("t");
    const std::vector<Mod8> defs = {
        {"F32.1", "8t-1", [](ExprPtr t) { return 8 * t - 1; }, [](ExprPtr t) { return 8 * t + 1; },
         [](ExprPtr t) { return 32 * t; }},
        {"F32.2", "8t-5", [](ExprPtr t) { return 8 * t - 5; }, [](ExprPtr t) { return 8 * t - 3; },
         [](ExprPtr t) { return 4 * (8 * t - 4); }},
        {"F32.3", "24t-7", [](ExprPtr t) { return 24 * t - 7; }, [](ExprPtr t) { return 8 * t - 1; },
         [](ExprPtr t) { return 4 * (8 * t - 2); }},
        {"F32.4", "24t-7", [](ExprPtr t) { return 24 * t - 7; }, [](ExprPtr) { return cst(7); },
         [](ExprPtr) { return cst(24); }},
        {"F32.5", "24t-19", [](ExprPtr t) { return 24 * t - 19; },
         [](ExprPtr t) { return 8 * t - 5; }, [](ExprPtr t) { return 4 * (8 * t - 6); }},
        {"F32.6", "8t-3", [](ExprPtr t) { return 8 * t - 3; }, [](ExprPtr) { return cst(3); },
         [](ExprPtr) { return cst(8); }},
    };
    int i = 0;
    for (const auto& dfn : defs) {
      FamilyDef f;
      f.id = dfn.id;
      f.catalog_id = "F32";
      f.title = std::string("4/(") + dfn.cls + ") via q-form, B = n*q + 1";
      f.anchor = "mod-8 q-family (" + std::to_string(++i) + ")";
      f.class_template = dfn.cls;
      f.params = {ip("t", 1, 200)};
      auto n = dfn.n_of(t);
      auto B = n * dfn.q_of(t) + 1;
      f.target_num = cst(4);
      f.target_den = n;
      f.denoms = {dn(B / 4), dn(B / dfn.mid_div(t)), dn(n * B / 4)};
      f.free_var = "t";
      add(std::move(f));
    }
  }

  // ---- F33 / F34: Schinzel generalization ----------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F33";
    f.title = "4/(8(2w-1)t - (4w-1))";
    f.anchor = "Schinzel generalization (odd)";
    f.class_template = "8*(2*w-1)*t - (4*w-1)";
    f.params = {ip("w", 1, 12), ip("t", 1, 48)};
    auto om = p("w"), t = p("t");
    auto n = 8 * (2 * om - 1) * t - (4 * om - 1);
    auto B = n * (4 * om - 1) + 1;
    f.target_num = cst(4);
    f.target_den = n;
    f.denoms = {dn(B / 4), dn(B / (4 * (4 * om - 2))), dn(n * B / 4)};
    f.free_var = "t";
    add(std::move(f));
  }
  {
    FamilyDef f;
    f.id = f.catalog_id = "F34";
    f.title = "4/(16wt - (12w+1))";
    f.anchor = "Schinzel generalization (even)";
    f.class_template = "16*w*t - (12*w+1)";
    f.params = {ip("w", 1, 12), ip("t", 1, 48)};
    auto om = p("w"), t = p("t");
    auto n = 16 * om * t - (12 * om + 1);
    auto B = n * (4 * om + 1) + 1;
    f.target_num = cst(4);
    f.target_den = n;
    f.denoms = {dn(B / 4), dn(B / (16 * om)), dn(n * B / 4)};
    f.free_var = "t";
    add(std::move(f));
  }

  // ---- F35 / F36: k-generalizations of F33/F34 ------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F35";
    f.title = "k/((k^2 w - 2k)t - (kw-1))";
    f.anchor = "Schinzel k-generalization (1)";
    f.class_template = "(k^2*w-2*k)*t - (k*w-1)";
    f.params = {ip("k", 1, 6), ip("w", 1, 8), ip("t", 1, 48)};
    auto k = p("k"), om = p("w"), t = p("t");
    auto n = (k * k * om - 2 * k) * t - (k * om - 1);
    auto B = n * (k * om - 1) + 1;
    f.domain = {
        c(any_of({ge(k, cst(3)),
                  all_of({eq(k, cst(2)), ge(om, cst(2)), gt(4 * (om - 1) * t, 2 * om - 1)}),
                  all_of({eq(k, cst(1)), ge(om, cst(3)), gt((om - 2) * t, om - 1)})}),
          "k/omega/t table"),
    };
    f.target_num = k;
    f.target_den = n;
    f.denoms = {dn(B / k), dn(B / (k * (k * om - 2))), dn(n * B / k)};
    f.free_var = "t";
    add(std::move(f));
  }
  {
    FamilyDef f;
    f.id = f.catalog_id = "F36";
    f.title = "k/(k^2 w t - ((k-1)kw + 1))";
    f.anchor = "Schinzel k-generalization (2)";
    f.class_template = "k^2*w*t - ((k-1)*k*w+1)";
    f.params = {ip("k", 1, 6), ip("w", 1, 8), ip("t", 1, 48)};
    auto k = p("k"), om = p("w"), t = p("t");
    auto n = k * k * om * t - ((k - 1) * k * om + 1);
    auto B = n * (k * om + 1) + 1;
    f.domain = {c(any_of({ge(k, cst(2)), gt(om * t, cst(1))}), "k table (wt > 1 when k = 1)")};
    f.target_num = k;
    f.target_den = n;
    f.denoms = {dn(B / k), dn(B / (k * k * om)), dn(n * B / k)};
    f.free_var = "t";
    add(std::move(f));
  }

  // ---- F37 / F38: triangle specials -------------------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F37";
    f.title = "4/(4(4w-1)t - (2(4w-1)+1))";
    f.anchor = "triangle special (1)";
    f.class_template = "4*(4*w-1)*t - (8*w-1)";
    f.params = {ip("w", 1, 12), ip("t", 1, 48)};
    auto om = p("w"), t = p("t");
    auto V = 4 * (4 * om - 1) * t - (2 * (4 * om - 1) + 1);
    auto R = (4 * om - 1) * t - om;
    auto m = 4 * t - 2;
    f.target_num = cst(4);
    f.target_den = V;
    f.denoms = {dn(R), dn(R * m), dn(V * R * m)};
    f.free_var = "t";
    add(std::move(f));
  }
  {
    FamilyDef f;
    f.id = f.catalog_id = "F38";
    f.title = "4/(4(4w-1)t - (4w+3))";
    f.anchor = "triangle special (2)";
    f.class_template = "4*(4*w-1)*t - (4*w+3)";
    f.params = {ip("w", 1, 12), ip("t", 1, 48)};
    auto om = p("w"), t = p("t");
    auto V = 4 * (4 * om - 1) * t - (4 * om + 3);
    auto R = (4 * om - 1) * t - 1;
    f.target_num = cst(4);
    f.target_den = V;
    f.denoms = {dn(R), dn(V * t), dn(V * R * t)};
    f.free_var = "t";
    add(std::move(f));
  }

  // ---- F39 / F40: triangle generalizations -------------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F39";
    f.title = "k/(k(kw-1)t - (2(kw-1)+1))";
    f.anchor = "triangle generalization (1)";
    f.class_template = "k*(k*w-1)*t - (2*(k*w-1)+1)";
    f.params = {ip("k", 1, 6), ip("w", 1, 8), ip("t", 1, 48)};
    auto k = p("k"), om = p("w"), t = p("t");
    auto V = k * (k * om - 1) * t - (2 * (k * om - 1) + 1);
    auto R = (k * om - 1) * t - om;
    auto m = k * t - 2;
    f.domain = {
        c(any_of({ge(k, cst(2)), ge(om, cst(2))}), "omega >= 2 when k = 1"),
        c(any_of({ge(k, cst(3)), all_of({eq(k, cst(2)), ge(t, cst(2))}),
                  all_of({eq(k, cst(1)), gt((om - 1) * t, 2 * om - 1)})}),
          "t table"),
    };
    f.target_num = k;
    f.target_den = V;
    f.denoms = {dn(R), dn(R * m), dn(V * R * m)};
    f.free_var = "t";
    add(std::move(f));
  }
  {
    FamilyDef f;
    f.id = f.catalog_id = "F40";
    f.title = "k/(k(aw+b)t - (aw+c)), k = c - b";
    f.anchor = "triangle generalization (2)";
    f.class_template = "(c-b)*(a*w+b)*t - (a*w+c)";
    f.params = {ip("a", 1, 8), ip("w", 1, 8), ip("b", 1, 8), ip("c", 2, 12), ip("t", 1, 48),
                ipd("k", p("c") - p("b"))};
    auto a = p("a"), om = p("w"), bp = p("b"), cp = p("c"), t = p("t"), k = p("k");
    auto V = k * (a * om + bp) * t - (a * om + cp);
    auto R = (a * om + bp) * t - 1;
    f.domain = {c(gt(cp, bp), "c > b"),
                c(gt(k * (a * om + bp) * t, a * om + cp), "t > (aw+c)/(k(aw+b))")};
    f.target_num = k;
    f.target_den = V;
    f.denoms = {dn(R), dn(V * t), dn(V * R * t)};
    f.free_var = "t";
    add(std::move(f));
  }

  // ---- F41: triangle j-form ------------------------------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F41";
    f.title = "k/(k(kr-1)t - (kr+(k-1)))";
    f.anchor = "triangle j-form";
    f.class_template = "k*(k*r-1)*t - (k*r+k-1)";
    f.params = {ip("k", 1, 6), ip("r", 1, 8), ip("t", 1, 48)};
    auto k = p("k"), r = p("r"), t = p("t");
    auto V = k * (k * r - 1) * t - (k * r + (k - 1));
    auto R = (k * r - 1) * t - 1;
    f.domain = {
        c(any_of({ge(k, cst(2)), ge(r, cst(2))}), "r >= 2 when k = 1"),
        c(any_of({ge(k, cst(3)), all_of({eq(k, cst(2)), ge(r, cst(2))}),
                  all_of({eq(k, cst(2)), eq(r, cst(1)), ge(t, cst(2))}),
                  all_of({eq(k, cst(1)), gt((r - 1) * t, r)})}),
          "t table"),
    };
    f.target_num = k;
    f.target_den = V;
    f.denoms = {dn(R), dn(V * t), dn(V * R * t)};
    f.free_var = "t";
    add(std::move(f));
  }

  // ---- F42: real-domain family at rational points ----------------------------------------------
  {
    FamilyDef f;
    f.id = "F42.1";
    f.catalog_id = "F42";
    f.title = "4/(8x-1) = 1/(2x) + 1/(16x^2) + 1/(16x^2(8x-1)) at rational x";
    f.anchor = "real-domain family, rational points";
    f.params = {rp("x", 24, 2)};
    auto x = p("x");
    f.domain = {c(is_int(2 * x), "2x is a positive integer"), c(ge(2 * x, cst(1)), "2x >= 1")};
    f.target_num = cst(4);
    f.target_den = 8 * x - 1;
    f.denoms = {dn(2 * x), dn(16 * x * x), dn(16 * x * x * (8 * x - 1))};
    add(std::move(f));
  }
  {
    FamilyDef f;
    f.id = "F42.2";
    f.catalog_id = "F42";
    f.title = "4/(8t-5) = 1/(2t-1) + 1/(4(2t-1)^2) + 1/(4(2t-1)^2(8t-5))";
    f.anchor = "real-domain family, x = t - 1/2";
    f.class_template = "8t-5";
    f.params = {ip("t", 1, 200)};
    auto t = p("t");
    auto n = 8 * t - 5;
    f.target_num = cst(4);
    f.target_den = n;
    f.denoms = {dn(2 * t - 1), dn(4 * (2 * t - 1) * (2 * t - 1)),
                dn(4 * (2 * t - 1) * (2 * t - 1) * n)};
    f.free_var = "t";
    add(std::move(f));
  }
  {
    FamilyDef f;
    f.id = "F42.3";
    f.catalog_id = "F42";
    f.title = "4/(40t-23) = 1/(5(2t-1)) + 1/(2(2t-1)(40t-23)) + 1/(10(2t-1)(40t-23))";
    f.anchor = "real-domain family, 20(2t-1)-3 form";
    f.class_template = "40t-23";
    f.params = {ip("t", 1, 200)};
    auto t = p("t");
    auto n = 40 * t - 23;
    f.target_num = cst(4);
    f.target_den = n;
    f.denoms = {dn(5 * (2 * t - 1)), dn(2 * (2 * t - 1) * n), dn(10 * (2 * t - 1) * n)};
    f.free_var = "t";
    add(std::move(f));
  }

  // ---- F43: triangular numbers ------------------------------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F43";
    f.title = "4/n = 1/((n+1)/4) + 2/C(n+1,2), n === -1 (mod 4)";
    f.anchor = "triangular numbers";
    f.class_template = "4t-1";
    f.params = {ip("n", 3, 1000)};
    auto n = p("n");
    f.domain = {c(divides(cst(4), n + 1), "n === -1 (mod 4)")};
    f.target_num = cst(4);
    f.target_den = n;
    f.denoms = {dn((n + 1) / 4), dn(n * (n + 1) / 2), dn(n * (n + 1) / 2)};
    f.free_var = "n";
    f.sampler = [](Binding& b, Rng& rng) {
      b.set("n", 4 * uround(rng, 1, 200) - 1);
      return true;
    };
    add(std::move(f));
  }

  // ---- F44: natural sizes -------------------------------------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F44";
    f.title = "4/(4r'(2r-(r'-1))t - (2r+1))";
    f.anchor = "natural sizes";
    f.class_template = "4*s*(2*r-s+1)*t - (2*r+1)";
    f.params = {ip("r", 1, 8), ip("s", 1, 8), ip("t", 1, 48)};
    auto r = p("r"), rp_ = p("s"), t = p("t");
    auto V = 4 * rp_ * (2 * r - (rp_ - 1)) * t - (2 * r + 1);
    f.domain = {c(le(rp_, r), "r' <= r")};
    f.target_num = cst(4);
    f.target_den = V;
    f.denoms = {dn(rp_ * (2 * r - (rp_ - 1)) * t), dn(rp_ * t * V),
                dn((2 * r - (rp_ - 1)) * t * V)};
    f.free_var = "t";
    add(std::move(f));
  }

  // ---- F45: modular ladder for 4/(4t+1) -----------------------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F45";
    f.title = "4/(4t+1) = 1/(t+1) + 1/((t+1)s(4t+1)) + 1/((t+1)s(4t+1)/(3s-1))";
    f.anchor = "modular ladder 4t+1";
    f.class_template = "4t+1 over admissible t";
    f.params = {ip("t", 1, 96), ip("s", 1, 48)};
    auto t = p("t"), s = p("s");
    auto n = 4 * t + 1;
    auto E = 3 * s - 1;
    f.domain = {c(divides(E, (t + 1) * s * n), "3s-1 | (t+1)s(4t+1)")};
    f.target_num = cst(4);
    f.target_den = n;
    f.denoms = {dn(t + 1), dn((t + 1) * s * n), dn((t + 1) * s * n / E)};
    f.free_var = "t";
    f.sampler = [](Binding& b, Rng& rng) {
      long t_ = uround(rng, 1, 60);
      long s0 = uround(rng, 1, 6);
      for (long s_ = s0; s_ < s0 + 120; ++s_) {
        if (((long long)(t_ + 1) * s_ * (4 * t_ + 1)) % (3 * s_ - 1) == 0) {
          b.set("t", t_);
          b.set("s", s_);
          return true;
        }
      }
      return false;
    };
    add(std::move(f));
  }

  // ---- F46 / F47: the 40r-23 / 40t-3 pair ----------------------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F46";
    f.title = "4/(40r-23) = 1/(5(2r-1)) + 1/(2(2r-1)(40r-23)) + 1/(10(2r-1)(40r-23))";
    f.anchor = "modular 40r-23";
    f.class_template = "40r-23";
    f.params = {ip("r", 1, 200)};
    auto r = p("r");
    auto n = 40 * r - 23;
    f.target_num = cst(4);
    f.target_den = n;
    f.denoms = {dn(5 * (2 * r - 1)), dn(2 * (2 * r - 1) * n), dn(10 * (2 * r - 1) * n)};
    f.free_var = "r";
    add(std::move(f));
  }
  {
    FamilyDef f;
    f.id = f.catalog_id = "F47";
    f.title = "4/(40t-3) = 1/(10t) + 1/(5t(40t-3)) + 1/(10t(40t-3))";
    f.anchor = "modular 40t-3";
    f.class_template = "40t-3";
    f.params = {ip("t", 1, 200)};
    auto t = p("t");
    auto n = 40 * t - 3;
    f.target_num = cst(4);
    f.target_den = n;
    f.denoms = {dn(10 * t), dn(5 * t * n), dn(10 * t * n)};
    f.free_var = "t";
    add(std::move(f));
  }

  // ---- F48: mod-4 split kit --------------------------------------------------------------------------
  {
    FamilyDef f;
    f.id = "F48.1";
    f.catalog_id = "F48";
    f.title = "4/(4j-2) = 2/l with l = 2j-1 odd: 1/j + 1/(j(2j-1))";
    f.anchor = "mod-4 split kit (even, l odd)";
    f.class_template = "4j-2";
    f.params = {ip("j", 1, 500)};
    auto j = p("j");
    f.target_num = cst(4);
    f.target_den = 4 * j - 2;
    f.denoms = {dn(j), dn(j * (2 * j - 1))};
    f.free_var = "j";
    add(std::move(f));
  }
  {
    FamilyDef f;
    f.id = "F48.2";
    f.catalog_id = "F48";
    f.title = "4/(4j) = 1/j two-part split via v | j^2";
    f.anchor = "mod-4 split kit (even, l even)";
    f.class_template = "4j with v | j^2";
    f.params = {ip("j", 1, 500), ip("v", 1, 12)};
    auto j = p("j"), v = p("v");
    f.domain = {c(divides(v, j * j), "v | j^2")};
    f.target_num = cst(4);
    f.target_den = 4 * j;
    f.denoms = {dn(j + v), dn(j * (j + v) / v)};
    f.free_var = "j";
    add(std::move(f));
  }
  {
    FamilyDef f;
    f.id = "F48.3";
    f.catalog_id = "F48";
    f.title = "4/(4z-1) = 1/z + (c-1)/(cnz) + 1/(cnz)";
    f.anchor = "mod-4 split kit (n === -1)";
    f.class_template = "4z-1";
    f.params = {ip("z", 1, 200), ip("c", 2, 12)};
    auto z = p("z"), cq = p("c");
    auto n = 4 * z - 1;
    f.domain = {c(divides(cq - 1, cq * n * z), "c-1 | cnz")};
    f.target_num = cst(4);
    f.target_den = n;
    f.denoms = {dn(z), dn(cq * n * z / (cq - 1)), dn(cq * n * z)};
    f.free_var = "z";
    add(std::move(f));
  }
  {
    FamilyDef f;
    f.id = "F48.4";
    f.catalog_id = "F48";
    f.title = "4/(4z-3) = 1/z + f/(nzg) + h/(nzg), f + h = 3g";
    f.anchor = "mod-4 split kit (n === -3)";
    f.class_template = "4z-3";
    f.params = {ip("z", 1, 200), ip("g", 1, 8), ip("j", 1, 3)};
    auto z = p("z"), g = p("g"), j = p("j");
    auto n = 4 * z - 3;
    auto ff = j;               // f in {1, 2, 3}
    auto hh = 3 * g - j;       // h = 3g - f
    f.domain = {c(ge(hh, cst(1)), "h >= 1"), c(divides(ff, n * z * g), "f | nzg"),
                c(divides(hh, n * z * g), "h | nzg")};
    f.target_num = cst(4);
    f.target_den = n;
    f.denoms = {dn(z), dn(n * z * g / ff), dn(n * z * g / hh)};
    f.free_var = "z";
    add(std::move(f));
  }
  {
    FamilyDef f;
    f.id = "F48.5";
    f.catalog_id = "F48";
    f.title = "4/(24t+1) = 1/z + m/(vz(24t+1)) + n'/(vz(24t+1)), z in [6t+1, 12t]";
    f.anchor = "mod-4 split kit (24t+1)";
    f.class_template = "24t+1 over admissible t";
    f.params = {ip("t", 1, 96), ip("y", 0, 48), ip("v", 1, 8), ip("m", 1, 300),
                ipd("z", 6 * p("t") + 1 + p("y")),
                ipd("np", p("v") * (4 * p("y") + 3) - p("m"))};
    auto t = p("t"), y = p("y"), v = p("v"), m = p("m");
    auto z = p("z"), np = p("np");
    auto N = 24 * t + 1;
    auto T = v * z * N;
    f.domain = {c(le(z, 12 * t), "z <= 12t"), c(ge(np, cst(1)), "m < v(4y+3)"),
                c(divides(m, T), "m | vz(24t+1)"), c(divides(np, T), "n' | vz(24t+1)")};
    f.target_num = cst(4);
    f.target_den = N;
    f.denoms = {dn(z), dn(T / m), dn(T / np)};
    f.sampler = [](Binding& b, Rng& rng) {
      long t_ = uround(rng, 1, 40);
      long y_ = uround(rng, 0, std::min(6 * t_ - 1, 12L));
      long z_ = 6 * t_ + 1 + y_;
      long v_ = uround(rng, 1, 6);
      long S = v_ * (4 * y_ + 3);
      Integer T = Integer(v_) * z_ * (24 * t_ + 1);
      std::vector<long> ok;
      for (const Integer& d : divisors(T)) {
        if (d >= S) break;
        if (T % (S - to_long(d)) == 0) ok.push_back(to_long(d));
      }
      if (ok.empty()) return false;
      b.set("t", t_);
      b.set("y", y_);
      b.set("v", v_);
      b.set("m", ok[uround(rng, 0, long(ok.size()) - 1)]);
      return true;
    };
    add(std::move(f));
  }

  // ---- F49: the explicit 120t-23 / 40v-7 tree classes --------------------------------------------------
  {
    FamilyDef f;
    f.id = "F49.1";
    f.catalog_id = "F49";
    f.title = "4/(120t-23) = 1/(5(6t-1)) + 1/(10t(120t-23)) + 1/(10t(6t-1)(120t-23))";
    f.anchor = "tree class 120t-23";
    f.class_template = "120t-23";
    f.params = {ip("t", 1, 200)};
    auto t = p("t");
    auto n = 120 * t - 23;
    f.target_num = cst(4);
    f.target_den = n;
    f.denoms = {dn(5 * (6 * t - 1)), dn(10 * t * n), dn(10 * t * (6 * t - 1) * n)};
    f.free_var = "t";
    add(std::move(f));
  }
  {
    FamilyDef f;
    f.id = "F49.2";
    f.catalog_id = "F49";
    f.title = "4/(40v-7) = 1/(10v) + 1/(5v(40v-7)) + 1/(2v(40v-7))";
    f.anchor = "tree class 40v-7";
    f.class_template = "40v-7";
    f.params = {ip("v", 1, 200)};
    auto v = p("v");
    auto n = 40 * v - 7;
    f.target_num = cst(4);
    f.target_den = n;
    f.denoms = {dn(10 * v), dn(5 * v * n), dn(2 * v * n)};
    f.free_var = "v";
    add(std::move(f));
  }

  // ---- F50: the 8t+1 family -----------------------------------------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F50";
    f.title = "4/(8t+1) = 1/(b(8t+2)) + 1/(b(8t+1)/(4b-1)) + 1/(b(8t+2)(8t+1))";
    f.anchor = "8t+1 family";
    f.class_template = "8t+1 over t === r (mod 4b-1)";
    f.params = {ip("b", 1, 12), ip("t", 1, 300)};
    auto bp = p("b"), t = p("t");
    auto n = 8 * t + 1;
    f.domain = {c(divides(4 * bp - 1, 2 * t + bp), "4b-1 | 2t+b")};
    f.target_num = cst(4);
    f.target_den = n;
    f.denoms = {dn(bp * (8 * t + 2)), dn(bp * n / (4 * bp - 1)), dn(bp * (8 * t + 2) * n)};
    f.free_var = "t";
    f.sampler = [](Binding& b, Rng& rng) {
      long b_ = uround(rng, 1, 12);
      long M = 4 * b_ - 1;
      long r = ((-2 * b_ * b_) % M + M) % M;  // 2r === -b (mod M)
      long t_ = r + M * uround(rng, 0, 20);
      if (t_ < 1) t_ += M;
      b.set("b", b_);
      b.set("t", t_);
      return true;
    };
    add(std::move(f));
  }

  // ---- F51 / F52: the key equation ------------------------------------------------------------------------
  {
    FamilyDef f;
    f.id = f.catalog_id = "F51";
    f.title = "4/w = 1/(rvw) + 1/(vs) + 1/(rvws/((4rv-1)s-rw)), w prime, w === 1 (mod 4)";
    f.anchor = "key equation";
    f.params = {ip("w", 5, 1200), ip("r", 1, 400), ip("v", 1, 4000), ip("s", 1, 2000)};
    auto w = p("w"), r = p("r"), v = p("v"), s = p("s");
    auto D = (4 * r * v - 1) * s - r * w;
    f.domain = {c(divides(cst(4), w - 1), "w === 1 (mod 4)"), c(is_prime_cond(w), "w prime"),
                c(ge(D, cst(1)), "(4rv-1)s - rw >= 1"),
                c(divides(D, r * v * w * s), "(4rv-1)s - rw | rvws")};
    f.target_num = cst(4);
    f.target_den = w;
    f.denoms = {dn(r * v * w), dn(v * s), dn(r * v * w * s / D)};
    f.sampler = [](Binding& bnd, Rng& rng) {
      long w_ = 0;
      for (int tries = 0; tries < 64; ++tries) {
        long cand = 4 * uround(rng, 1, 400) + 1;
        if (is_prime(Integer(cand))) {
          w_ = cand;
          break;
        }
      }
      if (!w_) return false;
      for (long b_ = 1; b_ <= 12; ++b_) {
        Integer rv = (Integer(4 * b_ - 1) * w_ + 1) / 4;
        for (const Integer& r_ : divisors(rv)) {
          Integer v_ = rv / r_;
          for (long s_ = 1; s_ <= 400; ++s_) {
            Integer D_ = (4 * rv - 1) * s_ - r_ * w_;
            if (D_ < 1) continue;
            if ((rv * w_ * s_) % D_ == 0) {
              bnd.scalars["w"] = Rational(w_);
              bnd.scalars["r"] = Rational(r_);
              bnd.scalars["v"] = Rational(v_);
              bnd.scalars["s"] = Rational(s_);
              return true;
            }
          }
        }
      }
      return false;
    };
    add(std::move(f));
  }
  {
    FamilyDef f;
    f.id = f.catalog_id = "F52";
    f.title = "key equation with rv = ((4b-1)w+1)/4";
    f.anchor = "key equation, b-form";
    f.params = {ip("w", 5, 1200), ip("b", 1, 300), ip("r", 1, 400), ip("v", 1, 4000),
                ip("s", 1, 2000)};
    auto w = p("w"), bq = p("b"), r = p("r"), v = p("v"), s = p("s");
    auto D = (4 * bq - 1) * s - r;
    f.domain = {c(divides(cst(4), w - 1), "w === 1 (mod 4)"), c(is_prime_cond(w), "w prime"),
                c(eq(4 * r * v, (4 * bq - 1) * w + 1), "rv = ((4b-1)w+1)/4"),
                c(ge(D, cst(1)), "(4b-1)s - r >= 1"), c(divides(D, r * v * s), "(4b-1)s - r | rvs")};
    f.target_num = cst(4);
    f.target_den = w;
    f.denoms = {dn(r * v * w), dn(v * s), dn(r * v * s / D)};
    f.sampler = [](Binding& bnd, Rng& rng) {
      long w_ = 0;
      for (int tries = 0; tries < 64; ++tries) {
        long cand = 4 * uround(rng, 1, 400) + 1;
        if (is_prime(Integer(cand))) {
          w_ = cand;
          break;
        }
      }
      if (!w_) return false;
      for (long b_ = 1; b_ <= 12; ++b_) {
        Integer rv = (Integer(4 * b_ - 1) * w_ + 1) / 4;
        for (const Integer& r_ : divisors(rv)) {
          Integer v_ = rv / r_;
          for (long s_ = 1; s_ <= 400; ++s_) {
            Integer D_ = Integer(4 * b_ - 1) * s_ - r_;
            if (D_ < 1) continue;
            if ((rv * s_) % D_ == 0) {
              bnd.scalars["w"] = Rational(w_);
              bnd.scalars["b"] = Rational(b_);
              bnd.scalars["r"] = Rational(r_);
              bnd.scalars["v"] = Rational(v_);
              bnd.scalars["s"] = Rational(s_);
              return true;
            }
          }
        }
      }
      return false;
    };
    add(std::move(f));
  }

  // ---- F53: the lcm triple and its v-term generalization ---------------------------------------------------
  {
    FamilyDef f;
    f.id = "F53.1";
    f.catalog_id = "F53";
    f.title = "4d/(n gcd(ab,ac,bc)) = 1/(bc) + 1/(ac) + 1/(ab)";
    f.anchor = "lcm triple";
    f.params = {ip("a", 1, 12), ip("b", 1, 12), ip("c", 1, 12), ip("d", 1, 6),
                ipd("n", 4 * lcm2(lcm2(p("a"), p("b")), p("c")) * p("d") /
                             (p("a") + p("b") + p("c")))};
    auto a = p("a"), bp = p("b"), cp = p("c"), d = p("d"), n = p("n");
    auto G = gcd2(gcd2(a * bp, a * cp), bp * cp);
    f.domain = {c(eq(gcd2(gcd2(a, bp), cp), cst(1)), "gcd(a,b,c) = 1"),
                c(divides(cst(4), a + bp + cp), "a+b+c = 4q"),
                c(ge(n, cst(1)), "n = 4*lcm(a,b,c)*d/(a+b+c) is a positive integer")};
    f.target_num = 4 * d;
    f.target_den = n * G;
    f.denoms = {dn(bp * cp), dn(a * cp), dn(a * bp)};
    f.sampler = [](Binding& b, Rng& rng) {
      long a_ = uround(rng, 1, 8), b_ = uround(rng, 1, 8);
      long c0 = (4 - (a_ + b_) % 4 + 4) % 4;
      long c_ = c0 + 4 * uround(rng, 0, 2);
      if (c_ == 0) c_ = 4;
      b.set("a", a_);
      b.set("b", b_);
      b.set("c", c_);
      b.set("d", uround(rng, 1, 4));
      return true;
    };
    add(std::move(f));
  }
  {
    FamilyDef f;
    f.id = "F53.2";
    f.catalog_id = "F53";
    f.title = "k/(n gcd(l/a_1..l/a_v)) = sum 1/(l d / a_i)";
    f.anchor = "lcm triple, v-term generalization";
    f.params = {ip("k", 1, 8), il("a", 2, 4, 1, 8), ip("d", 1, 6),
                ipd("n", list_lcm("a") * p("d") * p("k") / list_sum("a"))};
    auto k = p("k"), d = p("d"), n = p("n");
    auto l = list_prod("a");
    auto G = spread_reduce(AggOp::Gcd, "a", list_prod("a") / elem_i("a"));
    f.domain = {c(eq(spread_reduce(AggOp::Gcd, "a", elem_i("a")), cst(1)), "gcd(a_i) = 1"),
                c(divides(k, list_sum("a")), "k | sum(a_i)"),
                c(ge(n, cst(1)), "n = lcm(a)*d*k/sum(a) is a positive integer")};
    f.target_num = k;
    f.target_den = n * G;
    f.denoms = {dn_spread(l * d / elem_i("a"), "a")};
    f.sampler = [](Binding& b, Rng& rng) {
      long len = uround(rng, 2, 4);
      std::vector<Rational> xs;
      long sum = 0;
      for (long i = 0; i < len - 1; ++i) {
        long v = uround(rng, 1, 8);
        sum += v;
        xs.emplace_back(v);
      }
      long k_ = uround(rng, 1, 6);
      long last = k_ - sum % k_;
      last += k_ * uround(rng, 0, 1);
      xs.emplace_back(last);
      b.set("k", k_);
      b.set("d", uround(rng, 1, 4));
      b.lists["a"] = std::move(xs);
      return true;
    };
    add(std::move(f));
  }
}

}  // namespace esfrac::families
