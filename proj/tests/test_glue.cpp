#include "doctest.h"

#include "cob/catlib.hpp"
#include "cob/glue.hpp"
#include "cob/verify.hpp"

using namespace cob;

TEST_CASE("signature mismatch is rejected") {
    CHECK_THROWS_AS(compose(generator("disc_in"), generator("disc_in")), SignatureMismatch);
    CHECK_THROWS_AS(compose(generator("odisc_in"), generator("disc_out")),
                    SignatureMismatch);
}

TEST_CASE("named composites") {
    CHECK(compose(generator("disc_in"), generator("disc_out")) == closed_surface(0, 0));
    CHECK(compose(generator("pants_out"), generator("pants_in")) == conn_endo(1, 0, 0));
    CHECK(compose(generator("rp2_cyl"), generator("rp2_cyl")) == conn_endo(0, 2, 0));
    CHECK(compose(generator("twist_circle"), generator("twist_circle")) == identity({1, 0}));
    CHECK(compose(generator("twist_interval"), generator("twist_interval")) ==
          identity({0, 1}));
    // reflection after the identity is the reflection
    CHECK(compose(identity({1, 0}), generator("twist_circle")) == generator("twist_circle"));
    // symmetry is an involution
    CHECK(compose(generator("sym_cc"), generator("sym_cc")) == identity({2, 0}));
    CHECK(compose(generator("sym_ii"), generator("sym_ii")) == identity({0, 2}));
}

TEST_CASE("torus and Klein bottle from annuli") {
    Component in;
    in.cycles.push_back(BoundaryCycle::circle({Side::target, SlotKind::circle, 0}, 0));
    in.cycles.push_back(BoundaryCycle::circle({Side::target, SlotKind::circle, 1}, 0));
    Cobordism annulus_in({0, 0}, {2, 0}, {in});
    Component out0, out1;
    out0.cycles.push_back(BoundaryCycle::circle({Side::source, SlotKind::circle, 0}, 0));
    out0.cycles.push_back(BoundaryCycle::circle({Side::source, SlotKind::circle, 1}, 0));
    out1.cycles.push_back(BoundaryCycle::circle({Side::source, SlotKind::circle, 0}, 0));
    out1.cycles.push_back(BoundaryCycle::circle({Side::source, SlotKind::circle, 1}, 1));
    CHECK(compose(annulus_in, Cobordism({2, 0}, {0, 0}, {out0})) == closed_surface(1, 0));
    CHECK(compose(annulus_in, Cobordism({2, 0}, {0, 0}, {out1})) == closed_surface(0, 2));
}

TEST_CASE("identity laws on a random corpus") {
    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        Cobordism f =
            eval_expr(random_expr(rng, random_object(rng), 1 + (int)rng.below(6), full_pool()));
        CHECK(compose(identity(f.source), f) == f);
        CHECK(compose(f, identity(f.target)) == f);
        CHECK(tensor(f, identity({0, 0})) == f);
        CHECK(tensor(identity({0, 0}), f) == f);
    }
}

TEST_CASE("associativity of composition on random triples") {
    Rng rng(37);
    for (int i = 0; i < 200; ++i) {
        ObjectSig s0 = random_object(rng);
        Cobordism f = eval_expr(random_expr(rng, s0, 1 + (int)rng.below(4), full_pool()));
        Cobordism g =
            eval_expr(random_expr(rng, f.target, 1 + (int)rng.below(4), full_pool()));
        Cobordism h =
            eval_expr(random_expr(rng, g.target, 1 + (int)rng.below(4), full_pool()));
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
}

TEST_CASE("interchange of composition and tensor") {
    Rng rng(41);
    for (int i = 0; i < 150; ++i) {
        Cobordism f =
            eval_expr(random_expr(rng, random_object(rng), 1 + (int)rng.below(3), full_pool()));
        Cobordism fp =
            eval_expr(random_expr(rng, random_object(rng), 1 + (int)rng.below(3), full_pool()));
        Cobordism g =
            eval_expr(random_expr(rng, f.target, 1 + (int)rng.below(3), full_pool()));
        Cobordism gp =
            eval_expr(random_expr(rng, fp.target, 1 + (int)rng.below(3), full_pool()));
        CHECK(compose(tensor(f, fp), tensor(g, gp)) == tensor(compose(f, g), compose(fp, gp)));
    }
}

TEST_CASE("theta functoriality and the chi composition law") {
    Rng rng(43);
    for (int i = 0; i < 300; ++i) {
        Cobordism f =
            eval_expr(random_expr(rng, random_object(rng), 1 + (int)rng.below(6), full_pool()));
        Cobordism g =
            eval_expr(random_expr(rng, f.target, 1 + (int)rng.below(6), full_pool()));
        CHECK(theta(compose(f, g)) == theta(f) + theta(g));
        CHECK(euler_char(compose(f, g)) ==
              euler_char(f) + euler_char(g) - BigInt(f.target.intervals));
        CHECK(theta(tensor(f, g)) == theta(f) + theta(g));
    }
}

TEST_CASE("adjunction square instance") {
    Cobordism sigma = conn_closed(1, 0, 0, 2, 1);
    Cobordism lhs = compose(sigma, tau(1));
    Cobordism rhs = compose(tau(2), conn_endo(0, 2, 0));
    CHECK(lhs == rhs);
    REQUIRE(lhs.components.size() == 1);
    CHECK(lhs.components[0].crosscaps == 3);
}

TEST_CASE("parity union-find flags contradictions") {
    ParityUnionFind uf(4);
    uf.unite(0, 1, 1);
    uf.unite(1, 2, 0);
    CHECK(uf.consistent(0));
    CHECK(uf.parity_to_root(0) != uf.parity_to_root(1));
    uf.unite(0, 2, 0);  // contradicts 0^1=1, 1^2=0
    CHECK(!uf.consistent(2));
    CHECK(uf.consistent(3));
}
