#include "doctest.h"

#include "cob/catlib.hpp"
#include "cob/glue.hpp"

using namespace cob;

TEST_CASE("generator library") {
    CHECK(generator_names().size() == 19);
    for (const auto& name : generator_names()) CHECK_NOTHROW(generator(name));
    CHECK_THROWS_AS(generator("klein_bottle"), UnknownGenerator);

    Cobordism mob = generator("mobius");
    REQUIRE(mob.components.size() == 1);
    CHECK(mob.components[0].crosscaps == 1);
    CHECK(euler_char(mob) == 0);

    Cobordism bt = generator("twist_interval");
    REQUIRE(bt.components.size() == 1);
    REQUIRE(bt.components[0].cycles.size() == 1);
    CHECK(bt.components[0].cycles[0].arcs.size() == 2);
    CHECK((bt.components[0].cycles[0].arcs[0].twist ^
           bt.components[0].cycles[0].arcs[1].twist) == 1);

    Cobordism wc = generator("whistle_co");
    CHECK(wc.source == ObjectSig{1, 0});
    CHECK(wc.target == ObjectSig{0, 1});
    REQUIRE(wc.components.size() == 1);
    CHECK(wc.components[0].cycles.size() == 2);
    CHECK(euler_char(wc) == 0);
}

TEST_CASE("connecting morphisms and tau") {
    CHECK(connecting(1) == generator("disc_in"));
    CHECK(connecting(2) == tensor(generator("disc_in"), generator("disc_in")));
    CHECK_THROWS_AS(connecting(0), ValidationError);
    for (long long k = 1; k <= 10; ++k) CHECK(theta(connecting(k)) == 0);

    CHECK(tau(0) == generator("mobius"));
    CHECK(tau(1) == generator("rp2_cyl"));
    for (long long n = 0; n <= 6; ++n) {
        CHECK(theta(tau(n)) == 1);
        CHECK(in_category(tau(n), CategoryId::Nb));
    }
}

TEST_CASE("subcategory membership") {
    CHECK(in_category(generator("mobius"), CategoryId::N));
    CHECK(!in_category(generator("mobius"), CategoryId::S));
    CHECK(!in_category(generator("whistle_co"), CategoryId::N));
    CHECK(in_category(generator("whistle_co"), CategoryId::K));
    CHECK(!in_category(closed_surface(0, 0), CategoryId::O));
    CHECK(in_category(closed_surface(0, 0), CategoryId::N0));
    CHECK(in_category(free_disc(), CategoryId::O));
    CHECK(in_category(free_disc(), CategoryId::barO));
    CHECK(!in_category(free_disc(), CategoryId::N0));

    CHECK(in_category(conn_endo(2, 0, 1), CategoryId::N1));
    CHECK(in_category(conn_endo(2, 0, 1), CategoryId::N1plus));
    CHECK(!in_category(conn_endo(2, 0, 1), CategoryId::N1minus));
    CHECK(in_category(conn_endo(0, 3, 0), CategoryId::N1minus));
    CHECK(in_category(identity({1, 0}), CategoryId::N1minus));
    CHECK(!in_category(tensor(conn_endo(1, 0, 0), closed_surface(0, 0)), CategoryId::N1));

    CHECK(in_category(generator("disc_in"), CategoryId::Nb));
    CHECK(!in_category(generator("disc_out"), CategoryId::Nb));
    CHECK(in_category(conn_endo(0, 0, 0, 2), CategoryId::barN));
    CHECK(!in_category(conn_endo(0, 0, 0, 2), CategoryId::N));
}

TEST_CASE("connect is deterministic, well-typed and in category") {
    for (auto cat : {CategoryId::N, CategoryId::S_and_N, CategoryId::barN}) {
        for (std::int64_t a = 0; a <= 3; ++a)
            for (std::int64_t b = 0; b <= 3; ++b) {
                Cobordism c = connect({a, 0}, {b, 0}, cat);
                CHECK(c.source == ObjectSig{a, 0});
                CHECK(c.target == ObjectSig{b, 0});
                CHECK(in_category(c, cat));
                CHECK(connect({a, 0}, {b, 0}, cat) == c);
            }
    }
    for (std::int64_t a = 0; a <= 3; ++a)
        for (std::int64_t b = 0; b <= 3; ++b) {
            Cobordism c = connect({0, a}, {0, b}, CategoryId::O);
            CHECK(in_category(c, CategoryId::O));
            Cobordism k = connect({a, b}, {b, a}, CategoryId::K);
            CHECK(k.source == ObjectSig{a, b});
            CHECK(k.target == ObjectSig{b, a});
        }
    // Nb never maps a positive object to zero, and caps sources with a
    // crosscap component instead of discs
    CHECK_THROWS_AS(connect({2, 0}, {0, 0}, CategoryId::Nb), NotStronglyConnected);
    Cobordism nb = connect({3, 0}, {1, 0}, CategoryId::Nb);
    CHECK(in_category(nb, CategoryId::Nb));
    CHECK_THROWS_AS(connect({0, 1}, {0, 1}, CategoryId::N), NotStronglyConnected);
}
