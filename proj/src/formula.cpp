#include "esfrac/formula.hpp"

#include <algorithm>

namespace esfrac::formula {
namespace {

const std::vector<Rational>& get_list(const Binding& b, const std::string& name) {
  auto it = b.lists.find(name);
  if (it == b.lists.end()) throw EvalError("unbound list parameter: " + name);
  return it->second;
}

Integer require_int(const Rational& v, const char* what) {
  if (!is_integral(v)) throw EvalError(std::string(what) + " must be an integer");
  return v.get_num();
}

Rational rational_lcm(const Rational& a, const Rational& b) {
  if (a <= 0 || b <= 0) throw EvalError("lcm of non-positive values");
  return make_rational(lcm(a.get_num(), b.get_num()), gcd(a.get_den(), b.get_den()));
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a <= 0 || b <= 0) throw EvalError("gcd of non-positive values");
  return make_rational(gcd(a.get_num(), b.get_num()), lcm(a.get_den(), b.get_den()));
}

}  // namespace

Rational eval(const ExprPtr& e, const Binding& b, long spread_index) {
  if (!e) throw EvalError("null expression");
  return std::visit(
      [&](const auto& node) -> Rational {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Expr::Const>) {
          return node.v;
        } else if constexpr (std::is_same_v<T, Expr::Param>) {
          auto it = b.scalars.find(node.name);
          if (it == b.scalars.end()) throw EvalError("unbound parameter: " + node.name);
          return it->second;
        } else if constexpr (std::is_same_v<T, Expr::SpreadIndex>) {
          if (spread_index < 1) throw EvalError("spread index outside a spread context");
          return Rational(spread_index);
        } else if constexpr (std::is_same_v<T, Expr::ListElem>) {
          const auto& xs = get_list(b, node.list);
          Integer idx = eval_int(node.index, b, spread_index);
          if (idx < 1 || idx > Integer(xs.size())) throw EvalError("list index out of range");
          return xs[idx.get_ui() - 1];
        } else if constexpr (std::is_same_v<T, Expr::ListAgg>) {
          const auto& xs = get_list(b, node.list);
          size_t count = xs.size();
          if (node.count) {
            Integer c = eval_int(node.count, b, spread_index);
            if (c < 0 || c > Integer(xs.size())) throw EvalError("aggregate count out of range");
            count = c.get_ui();
          }
          switch (node.op) {
            case AggOp::Len:
              return Rational(long(count));
            case AggOp::Sum: {
              Rational acc(0);
              for (size_t i = 0; i < count; ++i) acc += xs[i];
              return acc;
            }
            case AggOp::Prod: {
              Rational acc(1);
              for (size_t i = 0; i < count; ++i) acc *= xs[i];
              return acc;
            }
            case AggOp::Lcm: {
              if (count == 0) throw EvalError("lcm of empty prefix");
              Rational acc = xs[0];
              for (size_t i = 1; i < count; ++i) acc = rational_lcm(acc, xs[i]);
              return acc;
            }
            case AggOp::Gcd: {
              if (count == 0) throw EvalError("gcd of empty prefix");
              Rational acc = xs[0];
              for (size_t i = 1; i < count; ++i) acc = rational_gcd(acc, xs[i]);
              return acc;
            }
          }
          throw EvalError("bad aggregate");
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          Rational a = eval(node.a, b, spread_index);
          switch (node.op) {
            case BinOp::Add:
              return a + eval(node.b, b, spread_index);
            case BinOp::Sub:
              return a - eval(node.b, b, spread_index);
            case BinOp::Mul:
              return a * eval(node.b, b, spread_index);
            case BinOp::Div: {
              Rational d = eval(node.b, b, spread_index);
              if (d == 0) throw EvalError("division by zero");
              return a / d;
            }
            case BinOp::Pow: {
              Integer ex = eval_int(node.b, b, spread_index);
              if (ex < 0) throw EvalError("negative exponent");
              return make_rational(pow_ui(a.get_num(), ex.get_ui()),
                                   pow_ui(a.get_den(), ex.get_ui()));
            }
            case BinOp::Lcm:
              return rational_lcm(a, eval(node.b, b, spread_index));
            case BinOp::Gcd:
              return rational_gcd(a, eval(node.b, b, spread_index));
          }
          throw EvalError("bad binary op");
        } else if constexpr (std::is_same_v<T, Expr::SetFold>) {
          const auto& subs = get_list(b, node.sub_list);
          const auto& muls = get_list(b, node.mul_list);
          if (subs.size() != muls.size() + 1)
            throw EvalError("set-fold needs len(sub) = len(mul) + 1");
          Rational acc = eval(node.init, b, spread_index);
          for (size_t i = 0; i < muls.size(); ++i) acc = (acc - subs[i]) * muls[i];
          return acc - subs.back();
        } else if constexpr (std::is_same_v<T, Expr::Select>) {
          Integer sel = eval_int(node.selector, b, spread_index);
          if (sel < 1 || sel > Integer(node.branches.size()))
            throw EvalError("selector out of range");
          return eval(node.branches[sel.get_ui() - 1], b, spread_index);
        } else if constexpr (std::is_same_v<T, Expr::SpreadReduce>) {
          const auto& xs = get_list(b, node.list);
          if (xs.empty() && node.op != AggOp::Sum) throw EvalError("reduce over empty list");
          Rational acc = node.op == AggOp::Sum ? Rational(0) : Rational(1);
          for (size_t i = 0; i < xs.size(); ++i) {
            Rational v = eval(node.body, b, long(i) + 1);
            switch (node.op) {
              case AggOp::Sum:
                acc += v;
                break;
              case AggOp::Prod:
                acc *= v;
                break;
              case AggOp::Lcm:
                acc = i == 0 ? v : rational_lcm(acc, v);
                break;
              case AggOp::Gcd:
                acc = i == 0 ? v : rational_gcd(acc, v);
                break;
              case AggOp::Len:
                throw EvalError("len is not a reduce op");
            }
          }
          return acc;
        } else if constexpr (std::is_same_v<T, Expr::Rad>) {
          Integer n = require_int(eval(node.a, b, spread_index), "radical argument");
          if (n < 1) throw EvalError("radical of a non-positive value");
          Integer r = 1;
          for (const auto& [prime, exp] : factorize(n).factors) r *= prime;
          return Rational(r);
        }
      },
      e->node);
}

Integer eval_int(const ExprPtr& e, const Binding& b, long spread_index) {
  return require_int(eval(e, b, spread_index), "expression value");
}

ExprPtr cst(long v) { return std::make_shared<Expr>(Expr::Const{Rational(v)}); }
ExprPtr cst(Rational v) { return std::make_shared<Expr>(Expr::Const{std::move(v)}); }
ExprPtr p(const std::string& name) { return std::make_shared<Expr>(Expr::Param{name}); }
ExprPtr spread_i() { return std::make_shared<Expr>(Expr::SpreadIndex{}); }
ExprPtr elem(const std::string& list, ExprPtr index) {
  return std::make_shared<Expr>(Expr::ListElem{list, std::move(index)});
}
ExprPtr elem_i(const std::string& list) { return elem(list, spread_i()); }
ExprPtr list_sum(const std::string& list) {
  return std::make_shared<Expr>(Expr::ListAgg{AggOp::Sum, list, nullptr});
}
ExprPtr list_prod(const std::string& list) {
  return std::make_shared<Expr>(Expr::ListAgg{AggOp::Prod, list, nullptr});
}
ExprPtr list_lcm(const std::string& list) {
  return std::make_shared<Expr>(Expr::ListAgg{AggOp::Lcm, list, nullptr});
}
ExprPtr list_len(const std::string& list) {
  return std::make_shared<Expr>(Expr::ListAgg{AggOp::Len, list, nullptr});
}
ExprPtr prefix_prod(const std::string& list, ExprPtr count) {
  return std::make_shared<Expr>(Expr::ListAgg{AggOp::Prod, list, std::move(count)});
}
ExprPtr set_fold(ExprPtr init, const std::string& sub_list, const std::string& mul_list) {
  return std::make_shared<Expr>(Expr::SetFold{std::move(init), sub_list, mul_list});
}
ExprPtr select1(ExprPtr selector, std::vector<ExprPtr> branches) {
  return std::make_shared<Expr>(Expr::Select{std::move(selector), std::move(branches)});
}
ExprPtr spread_reduce(AggOp op, const std::string& list, ExprPtr body) {
  return std::make_shared<Expr>(Expr::SpreadReduce{op, list, std::move(body)});
}
ExprPtr rad(ExprPtr a) { return std::make_shared<Expr>(Expr::Rad{std::move(a)}); }
ExprPtr bin(BinOp op, ExprPtr a, ExprPtr b) {
  return std::make_shared<Expr>(Expr::Binary{op, std::move(a), std::move(b)});
}
ExprPtr pw(ExprPtr base, ExprPtr exp) { return bin(BinOp::Pow, std::move(base), std::move(exp)); }
ExprPtr lcm2(ExprPtr a, ExprPtr b) { return bin(BinOp::Lcm, std::move(a), std::move(b)); }
ExprPtr gcd2(ExprPtr a, ExprPtr b) { return bin(BinOp::Gcd, std::move(a), std::move(b)); }

ExprPtr operator+(ExprPtr a, ExprPtr b) { return bin(BinOp::Add, std::move(a), std::move(b)); }
ExprPtr operator-(ExprPtr a, ExprPtr b) { return bin(BinOp::Sub, std::move(a), std::move(b)); }
ExprPtr operator*(ExprPtr a, ExprPtr b) { return bin(BinOp::Mul, std::move(a), std::move(b)); }
ExprPtr operator/(ExprPtr a, ExprPtr b) { return bin(BinOp::Div, std::move(a), std::move(b)); }
ExprPtr operator+(ExprPtr a, long b) { return std::move(a) + cst(b); }
ExprPtr operator-(ExprPtr a, long b) { return std::move(a) - cst(b); }
ExprPtr operator*(ExprPtr a, long b) { return std::move(a) * cst(b); }
ExprPtr operator/(ExprPtr a, long b) { return std::move(a) / cst(b); }
ExprPtr operator+(long a, ExprPtr b) { return cst(a) + std::move(b); }
ExprPtr operator-(long a, ExprPtr b) { return cst(a) - std::move(b); }
ExprPtr operator*(long a, ExprPtr b) { return cst(a) * std::move(b); }

bool eval_cond(const CondPtr& c, const Binding& b, long spread_index) {
  if (!c) throw EvalError("null condition");
  try {
    return std::visit(
        [&](const auto& node) -> bool {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Cond::Cmp>) {
            Rational a = eval(node.a, b, spread_index);
            Rational bb = eval(node.b, b, spread_index);
            switch (node.op) {
              case CmpOp::Eq:
                return a == bb;
              case CmpOp::Ne:
                return a != bb;
              case CmpOp::Lt:
                return a < bb;
              case CmpOp::Le:
                return a <= bb;
              case CmpOp::Gt:
                return a > bb;
              case CmpOp::Ge:
                return a >= bb;
            }
            return false;
          } else if constexpr (std::is_same_v<T, Cond::Divides>) {
            Rational dv = eval(node.d, b, spread_index);
            Rational av = eval(node.a, b, spread_index);
            if (!is_integral(dv) || !is_integral(av) || dv == 0) return false;
            return mpz_divisible_p(av.get_num().get_mpz_t(), dv.get_num().get_mpz_t()) != 0;
          } else if constexpr (std::is_same_v<T, Cond::IsInt>) {
            return is_integral(eval(node.a, b, spread_index));
          } else if constexpr (std::is_same_v<T, Cond::IsPrime>) {
            Rational v = eval(node.a, b, spread_index);
            if (!is_integral(v) || v < 2) return false;
            return is_prime(v.get_num());
          } else if constexpr (std::is_same_v<T, Cond::And>) {
            for (const auto& sub : node.cs)
              if (!eval_cond(sub, b, spread_index)) return false;
            return true;
          } else if constexpr (std::is_same_v<T, Cond::Or>) {
            for (const auto& sub : node.cs)
              if (eval_cond(sub, b, spread_index)) return true;
            return false;
          } else if constexpr (std::is_same_v<T, Cond::Not>) {
            return !eval_cond(node.c, b, spread_index);
          } else if constexpr (std::is_same_v<T, Cond::ForAll>) {
            auto it = b.lists.find(node.list);
            if (it == b.lists.end()) return false;
            long len = long(it->second.size()) - node.drop;
            for (long i = 1; i <= len; ++i)
              if (!eval_cond(node.body, b, i)) return false;
            return true;
          }
        },
        c->node);
  } catch (const EvalError&) {
    return false;
  }
}

CondPtr cmp(CmpOp op, ExprPtr a, ExprPtr b) {
  return std::make_shared<Cond>(Cond::Cmp{op, std::move(a), std::move(b)});
}
CondPtr eq(ExprPtr a, ExprPtr b) { return cmp(CmpOp::Eq, std::move(a), std::move(b)); }
CondPtr ne(ExprPtr a, ExprPtr b) { return cmp(CmpOp::Ne, std::move(a), std::move(b)); }
CondPtr lt(ExprPtr a, ExprPtr b) { return cmp(CmpOp::Lt, std::move(a), std::move(b)); }
CondPtr le(ExprPtr a, ExprPtr b) { return cmp(CmpOp::Le, std::move(a), std::move(b)); }
CondPtr gt(ExprPtr a, ExprPtr b) { return cmp(CmpOp::Gt, std::move(a), std::move(b)); }
CondPtr ge(ExprPtr a, ExprPtr b) { return cmp(CmpOp::Ge, std::move(a), std::move(b)); }
CondPtr divides(ExprPtr d, ExprPtr a) {
  return std::make_shared<Cond>(Cond::Divides{std::move(d), std::move(a)});
}
CondPtr is_int(ExprPtr a) { return std::make_shared<Cond>(Cond::IsInt{std::move(a)}); }
CondPtr is_prime_cond(ExprPtr a) { return std::make_shared<Cond>(Cond::IsPrime{std::move(a)}); }
CondPtr all_of(std::vector<CondPtr> cs) { return std::make_shared<Cond>(Cond::And{std::move(cs)}); }
CondPtr any_of(std::vector<CondPtr> cs) { return std::make_shared<Cond>(Cond::Or{std::move(cs)}); }
CondPtr negate(CondPtr c) { return std::make_shared<Cond>(Cond::Not{std::move(c)}); }
CondPtr forall(const std::string& list, long drop, CondPtr body) {
  return std::make_shared<Cond>(Cond::ForAll{list, drop, std::move(body)});
}

bool mentions(const ExprPtr& e, const std::vector<std::string>& names) {
  if (!e) return false;
  auto has = [&](const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
  };
  return std::visit(
      [&](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Expr::Const> || std::is_same_v<T, Expr::SpreadIndex>) {
          return false;
        } else if constexpr (std::is_same_v<T, Expr::Param>) {
          return has(node.name);
        } else if constexpr (std::is_same_v<T, Expr::ListElem>) {
          return has(node.list) || mentions(node.index, names);
        } else if constexpr (std::is_same_v<T, Expr::ListAgg>) {
          return has(node.list) || mentions(node.count, names);
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          return mentions(node.a, names) || mentions(node.b, names);
        } else if constexpr (std::is_same_v<T, Expr::SetFold>) {
          return has(node.sub_list) || has(node.mul_list) || mentions(node.init, names);
        } else if constexpr (std::is_same_v<T, Expr::Select>) {
          if (mentions(node.selector, names)) return true;
          for (const auto& br : node.branches)
            if (mentions(br, names)) return true;
          return false;
        } else if constexpr (std::is_same_v<T, Expr::SpreadReduce>) {
          return has(node.list) || mentions(node.body, names);
        } else if constexpr (std::is_same_v<T, Expr::Rad>) {
          return mentions(node.a, names);
        }
      },
      e->node);
}

bool mentions(const CondPtr& c, const std::vector<std::string>& names) {
  if (!c) return false;
  return std::visit(
      [&](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Cond::Cmp>) {
          return mentions(node.a, names) || mentions(node.b, names);
        } else if constexpr (std::is_same_v<T, Cond::Divides>) {
          return mentions(node.d, names) || mentions(node.a, names);
        } else if constexpr (std::is_same_v<T, Cond::IsInt> || std::is_same_v<T, Cond::IsPrime>) {
          return mentions(node.a, names);
        } else if constexpr (std::is_same_v<T, Cond::And> || std::is_same_v<T, Cond::Or>) {
          for (const auto& sub : node.cs)
            if (mentions(sub, names)) return true;
          return false;
        } else if constexpr (std::is_same_v<T, Cond::Not>) {
          return mentions(node.c, names);
        } else if constexpr (std::is_same_v<T, Cond::ForAll>) {
          return std::find(names.begin(), names.end(), node.list) != names.end() ||
                 mentions(node.body, names);
        }
      },
      c->node);
}

}  // namespace esfrac::formula
