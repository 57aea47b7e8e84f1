#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "esfrac/arith.hpp"

namespace esfrac::formula {

/// Evaluation failure (division by zero, non-integer where one is required,
/// unbound parameter). check_domain treats these as "constraint not satisfied";
/// evaluate() surfaces them.
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class BinOp { Add, Sub, Mul, Div, Pow, Lcm, Gcd };
enum class AggOp { Sum, Prod, Lcm, Gcd, Len };

/// A parameter assignment. Scalars are exact rationals (integer-kind
/// parameters simply hold integral values); lists are ordered.
struct Binding {
  std::map<std::string, Rational> scalars;
  std::map<std::string, std::vector<Rational>> lists;

  bool has(const std::string& name) const { return scalars.count(name) != 0; }
  void set(const std::string& name, Rational v) { scalars[name] = std::move(v); }
  void set(const std::string& name, const Integer& v) { scalars[name] = Rational(v); }
  void set(const std::string& name, long v) { scalars[name] = Rational(v); }
};

class Expr {
 public:
  struct Const {
    Rational v;
  };
  struct Param {
    std::string name;
  };
  /// 1-based index of the enclosing spread expansion.
  struct SpreadIndex {};
  struct ListElem {
    std::string list;
    ExprPtr index;
  };
  /// Aggregate over the first `count` elements (all elements when count is null).
  struct ListAgg {
    AggOp op;
    std::string list;
    ExprPtr count;
  };
  struct Binary {
    BinOp op;
    ExprPtr a, b;
  };
  /// acc = init; for i = 1..len(mul_list): acc = (acc - sub_list[i]) * mul_list[i];
  /// result = acc - sub_list[len(sub_list)]. Requires len(sub_list) = len(mul_list) + 1.
  struct SetFold {
    ExprPtr init;
    std::string sub_list;
    std::string mul_list;
  };
  /// selector (1-based) picks one of the branches.
  struct Select {
    ExprPtr selector;
    std::vector<ExprPtr> branches;
  };
  /// Reduce body(i) over i = 1..len(list); SpreadIndex inside body is i.
  struct SpreadReduce {
    AggOp op;
    std::string list;
    ExprPtr body;
  };
  /// Radical (product of distinct primes) of a positive integer.
  struct Rad {
    ExprPtr a;
  };

  using Node = std::variant<Const, Param, SpreadIndex, ListElem, ListAgg, Binary, SetFold, Select,
                            SpreadReduce, Rad>;
  explicit Expr(Node n) : node(std::move(n)) {}
  Node node;
};

Rational eval(const ExprPtr& e, const Binding& b, long spread_index = 0);

/// Evaluates and requires an integral result.
Integer eval_int(const ExprPtr& e, const Binding& b, long spread_index = 0);

// ---- builders ----------------------------------------------------------

ExprPtr cst(long v);
ExprPtr cst(Rational v);
ExprPtr p(const std::string& name);
ExprPtr spread_i();
ExprPtr elem(const std::string& list, ExprPtr index);
ExprPtr elem_i(const std::string& list);  // element at the spread index
ExprPtr list_sum(const std::string& list);
ExprPtr list_prod(const std::string& list);
ExprPtr list_lcm(const std::string& list);
ExprPtr list_len(const std::string& list);
ExprPtr prefix_prod(const std::string& list, ExprPtr count);
ExprPtr set_fold(ExprPtr init, const std::string& sub_list, const std::string& mul_list);
ExprPtr select1(ExprPtr selector, std::vector<ExprPtr> branches);
ExprPtr spread_reduce(AggOp op, const std::string& list, ExprPtr body);
ExprPtr rad(ExprPtr a);
ExprPtr bin(BinOp op, ExprPtr a, ExprPtr b);
ExprPtr pw(ExprPtr base, ExprPtr exp);
ExprPtr lcm2(ExprPtr a, ExprPtr b);
ExprPtr gcd2(ExprPtr a, ExprPtr b);

ExprPtr operator+(ExprPtr a, ExprPtr b);
ExprPtr operator-(ExprPtr a, ExprPtr b);
ExprPtr operator*(ExprPtr a, ExprPtr b);
ExprPtr operator/(ExprPtr a, ExprPtr b);
ExprPtr operator+(ExprPtr a, long b);
ExprPtr operator-(ExprPtr a, long b);
ExprPtr operator*(ExprPtr a, long b);
ExprPtr operator/(ExprPtr a, long b);
ExprPtr operator+(long a, ExprPtr b);
ExprPtr operator-(long a, ExprPtr b);
ExprPtr operator*(long a, ExprPtr b);

// ---- conditions --------------------------------------------------------

class Cond;
using CondPtr = std::shared_ptr<const Cond>;

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

class Cond {
 public:
  struct Cmp {
    CmpOp op;
    ExprPtr a, b;
  };
  struct Divides {
    ExprPtr d, a;  // d | a; both must be integral, d nonzero
  };
  struct IsInt {
    ExprPtr a;
  };
  struct IsPrime {
    ExprPtr a;
  };
  struct And {
    std::vector<CondPtr> cs;
  };
  struct Or {
    std::vector<CondPtr> cs;
  };
  struct Not {
    CondPtr c;
  };
  /// body holds for i = 1..len(list)-drop (SpreadIndex refers to i).
  struct ForAll {
    std::string list;
    long drop;
    CondPtr body;
  };

  using Node = std::variant<Cmp, Divides, IsInt, IsPrime, And, Or, Not, ForAll>;
  explicit Cond(Node n) : node(std::move(n)) {}
  Node node;
};

/// false when an EvalError occurs inside (out-of-domain values make the
/// condition unsatisfied rather than an error).
bool eval_cond(const CondPtr& c, const Binding& b, long spread_index = 0);

/// true when the expression/condition references any of the given parameters.
bool mentions(const ExprPtr& e, const std::vector<std::string>& names);
bool mentions(const CondPtr& c, const std::vector<std::string>& names);

CondPtr cmp(CmpOp op, ExprPtr a, ExprPtr b);
CondPtr eq(ExprPtr a, ExprPtr b);
CondPtr ne(ExprPtr a, ExprPtr b);
CondPtr lt(ExprPtr a, ExprPtr b);
CondPtr le(ExprPtr a, ExprPtr b);
CondPtr gt(ExprPtr a, ExprPtr b);
CondPtr ge(ExprPtr a, ExprPtr b);
CondPtr divides(ExprPtr d, ExprPtr a);
CondPtr is_int(ExprPtr a);
CondPtr is_prime_cond(ExprPtr a);
CondPtr all_of(std::vector<CondPtr> cs);
CondPtr any_of(std::vector<CondPtr> cs);
CondPtr negate(CondPtr c);
CondPtr forall(const std::string& list, long drop, CondPtr body);

}  // namespace esfrac::formula
