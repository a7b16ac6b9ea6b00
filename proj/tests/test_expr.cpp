#include "doctest.h"

#include "cob/expr.hpp"
#include "cob/catlib.hpp"
#include "cob/glue.hpp"
#include "cob/verify.hpp"

using namespace cob;

TEST_CASE("parsing the operator forms") {
    ExprPtr a = parse("pants_in ∘ pants_out");
    CHECK(a->kind == Expr::Kind::compose);
    CHECK(a->lhs->name == "pants_in");
    CHECK(a->rhs->name == "pants_out");
    CHECK(equal_ast(a, parse("pants_in o pants_out")));

    ExprPtr t = parse("disc_in ⊗ disc_in");
    CHECK(t->kind == Expr::Kind::tensor);
    CHECK(equal_ast(t, parse("disc_in * disc_in")));
    CHECK(eval_expr(t) == connecting(2));

    // composition is right-associating: a o b o c = a o (b o c)
    ExprPtr chain = parse("disc_out o cyl o disc_in");
    CHECK(chain->kind == Expr::Kind::compose);
    CHECK(chain->lhs->name == "disc_out");
    CHECK(chain->rhs->kind == Expr::Kind::compose);

    ExprPtr idp = parse("id(2,1)");
    CHECK(idp->sig == ObjectSig{2, 1});
    CHECK(eval_expr(idp) == identity({2, 1}));

    CHECK(eval_expr(parse("conn(1,2,3; 2->1)")) == conn_closed(1, 2, 3, 2, 1));
    CHECK(eval_expr(parse("p(3)")) == connecting(3));
    CHECK(eval_expr(parse("tau(2)")) == tau(2));
    CHECK(theta(eval_expr(parse("tau(2)"))) == 1);
}

TEST_CASE("syntax and type errors carry positions") {
    try {
        parse("pants_in o\n  (disc_in");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 2);
        CHECK(e.col > 0);
    }
    CHECK_THROWS_AS(parse("pants_in o pants_in"), TypeMismatch);
    CHECK_THROWS_AS(parse("disc_in ]"), SyntaxError);
    CHECK_THROWS_AS(parse(""), SyntaxError);
    CHECK_THROWS_AS(eval_expr(parse("inv(cyl)")), TypeMismatch);
    CHECK_THROWS_AS(parse("frobnicator"), UnknownGenerator);
}

TEST_CASE("pretty print round trips the AST") {
    Rng rng(59);
    for (int i = 0; i < 300; ++i) {
        ExprPtr e = random_expr(rng, random_object(rng), 1 + (int)rng.below(6), full_pool());
        CHECK(equal_ast(parse(pretty(e)), e));
    }
    ExprPtr nested = parse("(disc_out o pants_in) o (cyl * mobius) o cyl");
    CHECK(equal_ast(parse(pretty(nested)), nested));
    ExprPtr inv_word = parse("inv(rp2_cyl) o rp2_cyl");
    CHECK(equal_ast(parse(pretty(inv_word)), inv_word));
}

TEST_CASE("evaluation is invariant under re-association") {
    ExprPtr left = parse("(disc_out o pants_in) o pants_out");
    ExprPtr right = parse("disc_out o (pants_in o pants_out)");
    CHECK(!equal_ast(left, right));
    CHECK(eval_expr(left) == eval_expr(right));

    ExprPtr tl = parse("(mobius * mobius) * mobius");
    ExprPtr tr = parse("mobius * (mobius * mobius)");
    CHECK(eval_expr(tl) == eval_expr(tr));
}

TEST_CASE("factorization of the crosscapped cylinder") {
    ExprPtr e = parse("pants_in o (id(1,0) * mobius)");
    CHECK(eval_expr(e) == generator("rp2_cyl"));
    CHECK(oracle_classify(e) == oracle::invariants_of(generator("rp2_cyl")));
}

TEST_CASE("localisation words from expressions") {
    LocWord w = to_locword(parse("inv(rp2_cyl) o rp2_cyl"));
    REQUIRE(w.letters.size() == 2);
    CHECK(w.letters[0].dir == Direction::fwd);
    CHECK(w.letters[1].dir == Direction::inv);
    CHECK(word_reduce(w, CategoryId::N).a == 0);

    LocWord one = to_locword(parse("mobius"));
    CHECK(one.letters.size() == 1);
    CHECK(word_reduce(one, CategoryId::K).a == 1);
}
