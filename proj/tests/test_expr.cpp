#include <doctest.h>

#include <functional>

#include "exalg/eval.hpp"
#include "exalg/jsonio.hpp"
#include "test_util.hpp"

using namespace exalg;
using testutil::distance;

namespace {

SessionConfig session(int n, Field field = Field::Complex) {
  SessionConfig cfg;
  cfg.dimension = n;
  cfg.field = field;
  return cfg;
}

Multivector basis(std::vector<int> ix, int n) {
  return Multivector::basis(MultiIndex::from_indices(ix, n));
}

Multivector run(const std::string& src, const SessionConfig& cfg) {
  return eval_multivector(*parse(src, cfg), cfg);
}

}  // namespace

TEST_CASE("parsing the grammar") {
  SessionConfig cfg = session(3);
  ExprPtr e = parse("e12 << e123", cfg);
  CHECK(e->kind == Expr::Kind::Binary);
  CHECK(e->op == BinOp::LContr);
  CHECK(e->lhs->kind == Expr::Kind::Basis);
  CHECK(e->lhs->basis_indices == std::vector<int>{1, 2});

  SessionConfig cfg5 = session(5);
  CHECK_NOTHROW(parse("3*e25 + (2+1i)*e34", cfg5));
  CHECK_NOTHROW(parse("e1 ^ e1", cfg));
  CHECK_NOTHROW(parse("e{1,3}", session(14)));
  CHECK_NOTHROW(parse("e{10,12}", session(14)));

  CHECK_THROWS_AS(parse("e14", cfg), ParseError);          // index range
  CHECK_THROWS_AS(parse("foo(e1)", cfg), ParseError);      // unknown ident
  CHECK_THROWS_AS(parse("grade(e1)", cfg), ParseError);    // arity
  CHECK_THROWS_AS(parse("e1 +", cfg), ParseError);         // truncation
  CHECK_THROWS_AS(parse("e1 @ e2", cfg), ParseError);      // lexical
  CHECK_THROWS_AS(parse("conv(nope, e1, e2)", cfg), ParseError);

  // Mixed product chains are flagged, parenthesized ones are not.
  bool mixed = false;
  parse("e1 ^ e2 << e123", cfg, &mixed);
  CHECK(mixed);
  mixed = false;
  parse("(e1 ^ e2) << e123", cfg, &mixed);
  CHECK(!mixed);
  mixed = false;
  parse("e1 ^ e2 ^ e3", cfg, &mixed);
  CHECK(!mixed);
}

TEST_CASE("print-parse round trip") {
  SessionConfig cfg = session(9);
  const char* samples[] = {
      "e12 << e123",
      "3*e25 + (2+1i)*e34",
      "-(e1 ^ e2) >> rev(e12)",
      "conv(III_left, e12, e123)",
      "meet(e12, e13, e123)",
      "grade(e1 + e12, 1)",
      "lstar(rstar(e1))",
      "norm(e12 & e23)",
      "1.5e-3*e1 - 2i*e2",
  };
  for (const char* s : samples) {
    ExprPtr e = parse(s, cfg);
    ExprPtr back = parse(print_expr(*e), cfg);
    CHECK(structurally_equal(*e, *back));
  }

  // Generated expressions round trip as well.
  testutil::Rng rng(353);
  std::uniform_int_distribution<int> pick(0, 5), ix(1, 9), depth_cut(0, 2);
  std::function<ExprPtr(int)> gen = [&](int depth) -> ExprPtr {
    auto e = std::make_shared<Expr>();
    int choice = depth > 2 ? depth_cut(rng) : pick(rng);
    switch (choice) {
      case 0: {
        // Number literals are unsigned; negation is a unary node.
        e->kind = Expr::Kind::Number;
        e->number = std::uniform_real_distribution<double>(0, 4)(rng);
        e->imaginary = ix(rng) % 2 == 0;
        return e;
      }
      case 1: {
        e->kind = Expr::Kind::Basis;
        int len = 1 + ix(rng) % 3;
        for (int k = 0; k < len; ++k) e->basis_indices.push_back(ix(rng));
        return e;
      }
      case 2: {
        e->kind = Expr::Kind::Neg;
        e->operand = gen(depth + 1);
        return e;
      }
      case 3: {
        e->kind = Expr::Kind::Binary;
        e->op = static_cast<BinOp>(ix(rng) % 7);
        e->lhs = gen(depth + 1);
        e->rhs = gen(depth + 1);
        return e;
      }
      case 4: {
        e->kind = Expr::Kind::Call;
        e->callee = "rev";
        e->args.push_back(gen(depth + 1));
        return e;
      }
      default: {
        e->kind = Expr::Kind::Call;
        e->callee = "inner";
        e->args.push_back(gen(depth + 1));
        e->args.push_back(gen(depth + 1));
        return e;
      }
    }
  };
  for (int t = 0; t < 200; ++t) {
    ExprPtr e = gen(0);
    ExprPtr back = parse(print_expr(*e), cfg);
    CHECK(structurally_equal(*e, *back));
  }
}

TEST_CASE("evaluation of the worked contractions") {
  SessionConfig cfg = session(5);
  Multivector got = run("(3*e25 + (2+1i)*e34) << e1245", cfg);
  CHECK(distance(got, -3.0 * basis({1, 4}, 5)) == 0);

  Multivector right = run("(e4 + 1i*e345) >> e34", cfg);
  CHECK(distance(right, Scalar(0, 1) * basis({5}, 5)) == 0);

  SessionConfig cfg4 = session(4);
  CHECK(distance(run("rstar(e1)", cfg4), basis({2, 3, 4}, 4)) == 0);
  CHECK(distance(run("e14 & e123", cfg4), basis({1}, 4)) == 0);
  CHECK(distance(run("meet((e1+e4)^(e2+2*e4), e12, e124)", cfg4),
                 -2.0 * basis({1}, 4) + basis({2}, 4)) < 1e-12);
  CHECK(run("e1 ^ e1", cfg4).is_zero());
  CHECK(distance(run("conv(III_left, e12, e123)", session(3)),
                 -basis({3}, 3)) == 0);
}

TEST_CASE("functions over the session") {
  SessionConfig cfg = session(5);
  CHECK(run("igrade(e134 - e145 + e345 + e1235)", cfg).scalar_part() ==
        Scalar(2.0));
  CHECK(run("ograde(e134 - e145 + e345 + e1235)", cfg).scalar_part() ==
        Scalar(5.0));
  CHECK(run("simple(e12 + e34)", session(4)).scalar_part() == Scalar(0.0));
  CHECK(run("simple(e12)", session(4)).scalar_part() == Scalar(1.0));
  CHECK(run("norm(e12 + e34)", session(4)).scalar_part() ==
        Scalar(std::sqrt(2.0)));
  CHECK(run("bgrade(1 + e12)", session(4)).scalar_part() == Scalar(0.0));
  CHECK(run("tgrade(1 + e12)", session(4)).scalar_part() == Scalar(2.0));
  CHECK(distance(run("proj(e1 + e3, e12)", session(3)), basis({1}, 3)) <
        1e-12);
  CHECK(distance(run("grade((1+e1) ^ (1+e2), 2)", session(3)),
                 basis({1, 2}, 3)) == 0);

  Value isp_value = eval(*parse("isp(e12)", session(3)), session(3));
  const auto* sb = std::get_if<SubspaceBasis>(&isp_value);
  REQUIRE(sb != nullptr);
  CHECK(sb->dim() == 2);

  CHECK_THROWS_AS(run("bgrade(0*e1)", session(3)), EvalError);
  CHECK_THROWS_AS(run("e1 * e2", session(3)), EvalError);
  CHECK_THROWS_AS(run("isp(e12) + e1", session(3)), EvalError);
}

TEST_CASE("real sessions reject imaginary input") {
  SessionConfig cfg = session(3, Field::Real);
  CHECK_THROWS_AS(run("1i*e1", cfg), EvalError);
  CHECK_NOTHROW(run("2*e1 + e23", cfg));
}

TEST_CASE("orientation phases act on stars and regressive products") {
  SessionConfig cfg = session(4);
  cfg.orientation_unit = Scalar(0, 1);
  // rstar 1 = Omega.
  Multivector vol = run("rstar(1)", cfg);
  CHECK(distance(vol, Scalar(0, 1) * basis({1, 2, 3, 4}, 4)) < 1e-12);
  // Regressive with i-rotated orientation picks up conj(i).
  Multivector got = run("e14 & e123", cfg);
  CHECK(distance(got, Scalar(0, -1) * basis({1}, 4)) < 1e-12);
}

TEST_CASE("json round trip is bit exact") {
  SessionConfig cfg = session(5);
  testutil::Rng rng(359);
  for (int t = 0; t < 50; ++t) {
    Multivector m = testutil::random_multivector(rng, 5, 6);
    std::string text = to_json_string(Value(m), cfg);
    Multivector back = multivector_from_json(text);
    CHECK(back.ambient() == m.ambient());
    REQUIRE(back.terms().size() == m.terms().size());
    auto it = m.terms().begin();
    auto jt = back.terms().begin();
    for (; it != m.terms().end(); ++it, ++jt) {
      CHECK(it->first == jt->first);
      // Bit-exact round trip of both components.
      CHECK(it->second.real() == jt->second.real());
      CHECK(it->second.imag() == jt->second.imag());
    }
  }
}
