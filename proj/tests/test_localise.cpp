#include "doctest.h"

#include "cob/glue.hpp"
#include "cob/localise.hpp"
#include "cob/verify.hpp"

using namespace cob;

TEST_CASE("loc_class payloads by category") {
    CHECK(loc_class(conn_endo(1, 0, 0), CategoryId::N).a == 2);
    CHECK(loc_class(conn_endo(0, 2, 0), CategoryId::N).a == 2);
    CHECK(loc_class(conn_endo(1, 0, 0), CategoryId::S_and_N).a == 1);
    CHECK(loc_class(generator("mobius"), CategoryId::K).a == 1);

    LocClass barn = loc_class(conn_endo(0, 3, 0, 2), CategoryId::barN);
    CHECK(barn.shape == LocClass::Shape::pair);
    CHECK(barn.a == 3);
    CHECK(barn.b == 2);

    LocClass n0 = loc_class(tensor(closed_surface(0, 2), closed_surface(1, 0)),
                            CategoryId::N0);
    CHECK(n0.shape == LocClass::Shape::vector);
    CHECK(n0.payload_string() == "{(0,2):1,(1,0):1}");

    LocClass baro = loc_class(tensor(open_endo(0, 1, 0), closed_surface(1, 0)),
                              CategoryId::barO);
    CHECK(baro.shape == LocClass::Shape::int_and_vector);
    CHECK(baro.a == 1);
    CHECK(n0_to_string(baro.vec) == "{(1,0):1}");

    LocClass n1p = loc_class(conn_endo(2, 0, 1), CategoryId::N1plus);
    CHECK(n1p.shape == LocClass::Shape::pair);
    CHECK(n1p.a == 2);
    CHECK(n1p.b == 1);

    CHECK_THROWS_AS(loc_class(generator("whistle_co"), CategoryId::N), NotInCategory);
}

TEST_CASE("word reduction is a signed payload sum") {
    LocWord w = LocWord::at({1, 0});
    w.then(conn_endo(0, 2, 0), Direction::inv);
    LocClass lc = word_reduce(w, CategoryId::N);
    CHECK(lc.a == -2);

    LocWord rhs = LocWord::at({1, 0});
    rhs.then(tensor(identity({1, 0}), closed_surface(0, 0)), Direction::fwd);
    CHECK(word_reduce(rhs, CategoryId::N).a == -2);
    CHECK(verify_relation(w, rhs, CategoryId::N));

    LocWord empty = LocWord::at({3, 0});
    LocClass zero = word_reduce(empty, CategoryId::N);
    CHECK(zero.a == 0);
    CHECK(zero.source == ObjectSig{3, 0});
    CHECK(zero.target == ObjectSig{3, 0});
}

TEST_CASE("word composability errors carry the offending index") {
    LocWord bad = LocWord::at({1, 0});
    bad.then(generator("disc_out"), Direction::fwd);   // 1 -> 0
    bad.then(generator("pants_in"), Direction::fwd);   // 2 -> 1, does not chain
    try {
        word_reduce(bad, CategoryId::N);
        FAIL("expected NotComposable");
    } catch (const NotComposable& e) {
        CHECK(e.letter_index == 1);
    }
    LocWord open_letter = LocWord::at({1, 0});
    open_letter.then(generator("whistle_co"), Direction::fwd);
    CHECK_THROWS_AS(word_reduce(open_letter, CategoryId::N), NotComposable);

    LocWord lhs = LocWord::at({1, 0});
    lhs.then(identity({1, 0}), Direction::fwd);
    LocWord rhs = LocWord::at({2, 0});
    rhs.then(identity({2, 0}), Direction::fwd);
    CHECK_THROWS_AS(verify_relation(lhs, rhs, CategoryId::N), EndpointMismatch);
}

TEST_CASE("word reduction is invariant under cancelling insertions") {
    Rng rng(53);
    for (int i = 0; i < 100; ++i) {
        Cobordism f =
            eval_expr(random_expr(rng, random_closed_object(rng), 2, closed_pool()));
        Cobordism g = eval_expr(random_expr(rng, f.target, 2, closed_pool()));
        LocWord w = LocWord::at(f.source);
        w.then(f, Direction::fwd);
        w.then(g, Direction::fwd);
        LocClass base = word_reduce(w, CategoryId::N);

        Cobordism h = eval_expr(random_expr(rng, f.target, 2, closed_pool()));
        LocWord padded = LocWord::at(f.source);
        padded.then(f, Direction::fwd);
        padded.then(h, Direction::fwd);
        padded.then(h, Direction::inv);
        padded.then(g, Direction::fwd);
        CHECK(word_reduce(padded, CategoryId::N) == base);
    }
}

TEST_CASE("to_endo_word rewrites loops through the base object") {
    // disc in, disc out: a loop at the empty manifold of class -2
    LocWord loop = LocWord::at({0, 0});
    loop.then(generator("disc_in"), Direction::fwd);
    loop.then(generator("disc_out"), Direction::fwd);
    LocClass before = word_reduce(loop, CategoryId::N);
    CHECK(before.a == -2);
    LocWord endo = to_endo_word(loop, {0, 0}, CategoryId::N);
    for (const auto& letter : endo.letters) {
        CHECK(letter.morphism.source == ObjectSig{0, 0});
        CHECK(letter.morphism.target == ObjectSig{0, 0});
    }
    CHECK(word_reduce(endo, CategoryId::N) == before);

    // a loop through 1 -> 2 -> 1 with mixed directions
    LocWord mixed = LocWord::at({1, 0});
    mixed.then(generator("pants_out"), Direction::fwd);
    mixed.then(conn_closed(1, 0, 0, 2, 2), Direction::fwd);
    mixed.then(generator("pants_out"), Direction::inv);
    LocClass target = word_reduce(mixed, CategoryId::N);
    LocWord rewritten = to_endo_word(mixed, {1, 0}, CategoryId::N);
    for (const auto& letter : rewritten.letters) {
        CHECK(letter.morphism.source == ObjectSig{1, 0});
        CHECK(letter.morphism.target == ObjectSig{1, 0});
    }
    CHECK(word_reduce(rewritten, CategoryId::N) == target);

    // conjugation preserves the class
    LocWord conj = LocWord::at({0, 0});
    conj.then(generator("disc_in"), Direction::fwd);
    conj.then(conn_endo(0, 3, 0), Direction::fwd);
    conj.then(generator("disc_in"), Direction::inv);
    CHECK(word_reduce(conj, CategoryId::N).a ==
          loc_class(conn_endo(0, 3, 0), CategoryId::N).a);

    LocWord not_loop = LocWord::at({0, 0});
    not_loop.then(generator("disc_in"), Direction::fwd);
    CHECK_THROWS_AS(to_endo_word(not_loop, {0, 0}, CategoryId::N), NotALoop);
}

TEST_CASE("theta and omega word sums") {
    LocWord w = LocWord::at({1, 0});
    w.then(conn_endo(0, 2, 0, 1), Direction::fwd);
    w.then(conn_endo(0, 1, 0, 2), Direction::inv);
    CHECK(word_theta(w) == BigInt(0));  // (2+1) - (1+2)
    CHECK(word_omega(w) == BigInt(-1));
}
