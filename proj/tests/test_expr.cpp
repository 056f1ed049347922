#include "octoclif/expr.hpp"
#include "octoclif/random.hpp"
#include "octoclif/report.hpp"

#include <gtest/gtest.h>

using namespace octoclif;

namespace {

std::string eval_text(const std::string& src) { return to_text(evaluate(src)); }

ExprError error_of(const std::string& src) {
  try {
    evaluate(src);
  } catch (const ExprError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for " << src;
  return ExprError("none", {}, "");
}

}  // namespace

TEST(Parse, CallsAndLets) {
  const Program p = parse("circ(e1, e2)");
  EXPECT_TRUE(p.bindings.empty());
  EXPECT_TRUE(std::holds_alternative<Call>(p.body->node));
  const Program q = parse("let u = e2*e7; circU(u; e1, e4)");
  ASSERT_EQ(q.bindings.size(), 1u);
  EXPECT_EQ(q.bindings[0].name, "u");
  const auto& call = std::get<Call>(q.body->node);
  EXPECT_EQ(call.config.size(), 1u);
  EXPECT_EQ(call.args.size(), 2u);
}

TEST(Eval, WorkedExamples) {
  EXPECT_EQ(eval_text("circUV(e4*e6*e7, e1*e5; e1, e4)"), "-1 e3");
  EXPECT_EQ(eval_text("odotL(e1*e2, e3*e4)"), "1 e3");
  EXPECT_EQ(eval_text("inv(e2*e7)"), "-1 e2^e7");
  EXPECT_EQ(eval_text("circ(e1,e2)"), "1 e4");
  EXPECT_EQ(eval_text("let u = e2*e7; circU(u; e1, e4)"), "1 e2");
}

TEST(Eval, Precedence) {
  EXPECT_EQ(eval_text("1 + e1*e1"), "0");
  EXPECT_EQ(eval_text("-e1*e1"), "1");
  EXPECT_EQ(eval_text("e1*e2*e3"), to_text(gp(gp(Multivector::generator(1), Multivector::generator(2)),
                                                Multivector::generator(3))));
  EXPECT_EQ(eval_text("2 - 3 - 4"), "-5");
  EXPECT_EQ(eval_text("(1 + e1)*(1 - e1)"), "2");
  EXPECT_EQ(eval_text("3/2 e1^e2 + e2^e1"), "1/2 e1^e2");
  EXPECT_EQ(eval_text("e1^e1"), "0");
  EXPECT_EQ(eval_text("e0 + e0"), "2");
}

TEST(Eval, Builtins) {
  EXPECT_EQ(eval_text("rev(e1^e2 + e1)"), "1 e1 - 1 e1^e2");
  EXPECT_EQ(eval_text("hat(1 + e1 + e1^e2)"), "1 - 1 e1 + 1 e1^e2");
  EXPECT_EQ(eval_text("bar(e1)"), "-1 e1");
  EXPECT_EQ(eval_text("grade(1 + e1 + e1^e2, 2)"), "1 e1^e2");
  EXPECT_EQ(eval_text("bulR(e2*e7, e1)"), "1 e5");
  EXPECT_EQ(eval_text("eunits(1; 3)"), "1 e3");
  EXPECT_EQ(eval_text("circ1U(1; e1, e2)"), "1 e4");
  EXPECT_EQ(to_text(evaluate("psi()")), to_text(psi()));
}

TEST(Errors, SyntaxPositionAndExpectedSet) {
  const ExprError e = error_of("e1 circ e2");
  EXPECT_EQ(e.kind(), "SyntaxError");
  EXPECT_EQ(e.pos().line, 1);
  EXPECT_EQ(e.pos().col, 4);
  const std::string msg = e.what();
  EXPECT_NE(msg.find("expected one of {"), std::string::npos);
  EXPECT_NE(msg.find("'*'"), std::string::npos);
  EXPECT_EQ(error_of("let u = e1;\n  (u").pos().line, 2);
  EXPECT_EQ(error_of("1 $ 2").kind(), "SyntaxError");
  EXPECT_EQ(error_of("").kind(), "SyntaxError");
}

TEST(Errors, Kinds) {
  EXPECT_EQ(error_of("frob(e1)").kind(), "UnknownFunction");
  EXPECT_EQ(error_of("circ(e1)").kind(), "ArityError");
  EXPECT_EQ(error_of("circU(e1, e2)").kind(), "ArityError");
  EXPECT_EQ(error_of("x + 1").kind(), "UnboundVariable");
  EXPECT_EQ(error_of("let x = 1; let x = 2; x").kind(), "Redefinition");
  EXPECT_EQ(error_of("let e1 = 2; e1").kind(), "Redefinition");
  EXPECT_EQ(error_of("circ(e1^e2, e3)").kind(), "TypeMismatch");
  EXPECT_EQ(error_of("inv(1 + e1^e2^e3^e4)").kind(), "Singular");
  EXPECT_EQ(error_of("eunits(e1; 1)").kind(), "Degenerate");
  EXPECT_EQ(error_of("grade(e1, 9)").kind(), "TypeMismatch");
}

TEST(Errors, SpanOfKernelFailure) {
  const ExprError e = error_of("let u = 0;\ncircU(u; e1, e2)");
  EXPECT_EQ(e.kind(), "Singular");
  EXPECT_EQ(e.pos().line, 2);
  EXPECT_EQ(e.pos().col, 1);
  EXPECT_EQ(e.diagnostic().rfind("Singular at 2:1: ", 0), 0u);
}

TEST(Env, ShadowingIsAnError) {
  Env env;
  env.bind("a", Multivector::scalar(1));
  EXPECT_THROW(env.bind("a", Multivector::scalar(2)), ExprError);
  EXPECT_EQ(to_text(evaluate(parse("a + a"), env)), "2");
}

TEST(RoundTrip, TextAndJson) {
  Rng rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const Multivector x =
        Rational(rng.uniform(-50, 50), rng.uniform(1, 12)) * rng.multivector(6) + rng.multivector(2);
    const std::string text = to_text(x);
    ASSERT_EQ(evaluate(text), x) << text;
    const std::string json = to_json(x).dump();
    ASSERT_EQ(multivector_from_json(nlohmann::json::parse(json)), x) << json;
  }
}

TEST(RoundTrip, OctonionJson) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const Octonion x = rng.octonion();
    ASSERT_EQ(octonion_from_json(nlohmann::json::parse(to_json(x).dump())), x);
    ASSERT_EQ(Octonion::from_multivector(evaluate(to_text(x))), x);
  }
}

TEST(RoundTrip, RejectsMalformedJson) {
  EXPECT_THROW(multivector_from_json(nlohmann::json::parse(R"({"blades": {"128": "1"}})")), std::invalid_argument);
  EXPECT_THROW(multivector_from_json(nlohmann::json::parse(R"({"blades": {"3": 1}})")), std::invalid_argument);
  EXPECT_THROW(multivector_from_json(nlohmann::json::parse(R"([1])")), std::invalid_argument);
}
