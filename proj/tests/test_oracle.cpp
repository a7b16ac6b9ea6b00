#include "doctest.h"

#include "cob/catlib.hpp"
#include "cob/expr.hpp"
#include "cob/glue.hpp"

using namespace cob;

TEST_CASE("every generator model matches its canonical value") {
    for (const auto& name : generator_names()) {
        CAPTURE(name);
        CHECK(oracle::classify(oracle::generator_complex(name)) ==
              oracle::invariants_of(generator(name)));
    }
}

TEST_CASE("closed model invariants") {
    auto sphere = oracle::classify(oracle::conn_complex(0, 0, 0, 0, 0));
    REQUIRE(sphere.size() == 1);
    CHECK(sphere[0].orientable);
    CHECK(sphere[0].genus_or_crosscaps == 0);
    CHECK(sphere[0].boundary_cycles == 0);

    auto torus = oracle::classify(oracle::conn_complex(1, 0, 0, 0, 0));
    CHECK(torus[0].orientable);
    CHECK(torus[0].genus_or_crosscaps == 1);

    auto rp2 = oracle::classify(oracle::conn_complex(0, 1, 0, 0, 0));
    CHECK(!rp2[0].orientable);
    CHECK(rp2[0].genus_or_crosscaps == 1);

    auto klein = oracle::classify(oracle::conn_complex(0, 2, 0, 0, 0));
    CHECK(!klein[0].orientable);
    CHECK(klein[0].genus_or_crosscaps == 2);

    auto big = oracle::classify(oracle::conn_complex(3, 0, 2, 2, 1));
    REQUIRE(big.size() == 1);
    CHECK(big[0].orientable);
    CHECK(big[0].genus_or_crosscaps == 3);
    CHECK(big[0].boundary_cycles == 5);
    CHECK(big[0].marked_slots == 3);
}

TEST_CASE("oracle composition on the spec examples") {
    // sphere from two discs
    ExprPtr sphere = parse("disc_out o disc_in");
    auto inv = oracle_classify(sphere);
    REQUIRE(inv.size() == 1);
    CHECK(inv[0].orientable);
    CHECK(inv[0].boundary_cycles == 0);

    // pants after copants: connected genus one, two boundary circles
    auto pc = oracle_classify(parse("pants_in o pants_out"));
    REQUIRE(pc.size() == 1);
    CHECK(pc[0].orientable);
    CHECK(pc[0].genus_or_crosscaps == 1);
    CHECK(pc[0].boundary_cycles == 2);

    // two crosscapped cylinders
    auto rr = oracle_classify(parse("rp2_cyl o rp2_cyl"));
    REQUIRE(rr.size() == 1);
    CHECK(!rr[0].orientable);
    CHECK(rr[0].genus_or_crosscaps == 2);
    CHECK(rr[0].boundary_cycles == 2);

    // whistle in both orders
    auto annulus = oracle_classify(parse("whistle_co o whistle_oc"));
    CHECK(annulus == oracle::invariants_of(eval_expr(parse("whistle_co o whistle_oc"))));
    auto window = oracle_classify(parse("whistle_oc o whistle_co"));
    REQUIRE(window.size() == 1);
    CHECK(window[0].boundary_cycles == 3);
}

TEST_CASE("oracle never consults the gluing engine and rejects bad input") {
    CHECK_THROWS_AS(oracle::compose(oracle::generator_complex("disc_in"),
                                    oracle::generator_complex("disc_in")),
                    SignatureMismatch);
    CHECK_THROWS_AS(oracle_classify(Expr::inv(Expr::gen("cyl"))), TypeMismatch);
}
