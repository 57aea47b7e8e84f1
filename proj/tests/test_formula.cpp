#include <doctest.h>

#include "esfrac/formula.hpp"

using namespace esfrac;
using namespace esfrac::formula;

TEST_CASE("scalar evaluation") {
  Binding b;
  b.set("x", 7L);
  b.set("y", 3L);
  CHECK(eval(p("x") + p("y"), b) == 10);
  CHECK(eval(p("x") * p("y") - 1, b) == 20);
  CHECK(eval(p("x") / p("y"), b) == make_rational(7, 3));
  CHECK(eval_int(pw(p("y"), cst(3)), b) == 27);
  CHECK(eval_int(lcm2(cst(6), cst(10)), b) == 30);
  CHECK(eval_int(gcd2(cst(6), cst(10)), b) == 2);
  CHECK_THROWS_AS(eval(p("z"), b), EvalError);
  CHECK_THROWS_AS(eval(p("x") / (p("y") - 3), b), EvalError);
  CHECK_THROWS_AS(eval_int(p("x") / p("y"), b), EvalError);
}

TEST_CASE("rational lcm and gcd") {
  Binding b;
  b.scalars["a"] = make_rational(3, 2);
  b.scalars["c"] = make_rational(5, 4);
  // lcm(3/2, 5/4) = lcm(3,5)/gcd(2,4) = 15/2
  CHECK(eval(lcm2(p("a"), p("c")), b) == make_rational(15, 2));
  CHECK(eval(gcd2(p("a"), p("c")), b) == make_rational(1, 4));
}

TEST_CASE("lists, spreads, folds") {
  Binding b;
  b.lists["c"] = {Rational(2), Rational(3), Rational(4)};
  CHECK(eval_int(list_sum("c"), b) == 9);
  CHECK(eval_int(list_prod("c"), b) == 24);
  CHECK(eval_int(list_lcm("c"), b) == 12);
  CHECK(eval_int(list_len("c"), b) == 3);
  CHECK(eval_int(elem("c", cst(2)), b) == 3);
  CHECK(eval_int(prefix_prod("c", cst(2)), b) == 6);
  CHECK(eval_int(prefix_prod("c", cst(0)), b) == 1);
  // sum of squares via spread_reduce
  CHECK(eval_int(spread_reduce(AggOp::Sum, "c", elem_i("c") * elem_i("c")), b) == 29);
  CHECK(eval_int(spread_reduce(AggOp::Gcd, "c", elem_i("c") * cst(6)), b) == 6);

  // s-set fold: ((10-2)*3 - 3)*4 - 4 = 80
  Binding f;
  f.lists["b"] = {Rational(2), Rational(3), Rational(4)};
  f.lists["a"] = {Rational(3), Rational(4)};
  CHECK(eval_int(set_fold(cst(10), "b", "a"), f) == 80);
}

TEST_CASE("select and rad") {
  Binding b;
  b.set("i", 2L);
  CHECK(eval_int(select1(p("i"), {cst(10), cst(20), cst(30)}), b) == 20);
  CHECK(eval_int(rad(cst(144)), b) == 6);
  CHECK(eval_int(rad(cst(1)), b) == 1);
}

TEST_CASE("conditions") {
  Binding b;
  b.set("x", 12L);
  b.set("y", 4L);
  CHECK(eval_cond(divides(p("y"), p("x")), b));
  CHECK_FALSE(eval_cond(divides(p("x"), p("y")), b));
  CHECK(eval_cond(all_of({ge(p("x"), cst(10)), le(p("y"), cst(4))}), b));
  CHECK(eval_cond(any_of({eq(p("x"), cst(0)), ne(p("y"), cst(5))}), b));
  CHECK(eval_cond(is_int(p("x") / p("y")), b));
  CHECK_FALSE(eval_cond(is_int(p("y") / p("x")), b));
  CHECK(eval_cond(is_prime_cond(cst(5569)), b));
  CHECK_FALSE(eval_cond(is_prime_cond(cst(4095)), b));
  // an eval error inside a condition means "not satisfied", not an exception
  CHECK_FALSE(eval_cond(eq(p("unbound"), cst(1)), b));
  CHECK_FALSE(eval_cond(divides(cst(0), p("x")), b));

  Binding lists;
  lists.lists["c"] = {Rational(2), Rational(4), Rational(5)};
  CHECK(eval_cond(forall("c", 1, divides(cst(2), elem_i("c"))), lists));
  CHECK_FALSE(eval_cond(forall("c", 0, divides(cst(2), elem_i("c"))), lists));
}
