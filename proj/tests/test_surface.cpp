#include "doctest.h"

#include "cob/catlib.hpp"
#include "cob/glue.hpp"
#include "cob/verify.hpp"

using namespace cob;

namespace {

Cobordism random_cobordism(Rng& rng) {
    return eval_expr(random_expr(rng, random_object(rng), 1 + (int)rng.below(6), full_pool()));
}

}  // namespace

TEST_CASE("euler characteristic of the basic surfaces") {
    CHECK(euler_char(generator("disc_in")) == 1);
    CHECK(euler_char(closed_surface(0, 1)) == 1);   // projective plane
    CHECK(euler_char(generator("pants_in")) == -1);
    CHECK(euler_char(closed_surface(0, 0)) == 2);
    CHECK(euler_char(generator("rp2_cyl")) == -1);
}

TEST_CASE("theta values") {
    CHECK(theta(generator("mobius")) == 1);
    CHECK(theta(identity({1, 0})) == 0);
    CHECK(theta(identity({4, 3})) == 0);
    for (long long k = 0; k <= 4; ++k)
        for (long long w = 0; w <= 4; ++w)
            CHECK(theta(conn_endo(0, k, 0, w)) == BigInt(k + w));
}

TEST_CASE("omega counts windows") {
    CHECK(omega(identity({1, 0})) == 0);
    CHECK(omega(free_disc()) == 1);
    for (long long k = 0; k <= 3; ++k)
        for (long long w = 0; w <= 3; ++w)
            CHECK(omega(conn_endo(0, k, 0, w)) == BigInt(w));
}

TEST_CASE("canonical keys separate and identify the right morphisms") {
    // crosscap slide collapses the type of the Mobius band
    Component m1;
    m1.crosscaps = 1;
    m1.cycles.push_back(BoundaryCycle::circle({Side::target, SlotKind::circle, 0}, 1));
    CHECK(Cobordism({0, 0}, {1, 0}, {m1}) == generator("mobius"));
    CHECK(Cobordism({0, 0}, {1, 0}, {m1}).canonical_key() ==
          generator("mobius").canonical_key());

    // orientable type survives
    CHECK(conn_endo(1, 0, 0).canonical_key() != conn_endo(1, 0, 1).canonical_key());
    // identity square vs bow tie
    CHECK(identity({0, 1}).canonical_key() !=
          generator("twist_interval").canonical_key());
}

TEST_CASE("canonicalization is idempotent and flip-invariant") {
    Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        Cobordism c = random_cobordism(rng);
        for (const auto& comp : c.components) {
            Component again = canonicalize_component(comp);
            CHECK(again == comp);
            if (comp.orientable()) {
                // apply the global flip by hand; the key must not move
                Component flipped = comp;
                for (auto& cyc : flipped.cycles) {
                    for (auto& arc : cyc.arcs) arc.twist ^= 1;
                    if (cyc.kind == BoundaryCycle::Kind::arc_cycle)
                        std::reverse(cyc.arcs.begin(), cyc.arcs.end());
                }
                CHECK(canonicalize_component(flipped) == comp);
            }
        }
    }
}

TEST_CASE("validation rejects bad boundary data") {
    // duplicated slot
    Component a, b;
    a.cycles.push_back(BoundaryCycle::circle({Side::target, SlotKind::circle, 0}, 0));
    b.cycles.push_back(BoundaryCycle::circle({Side::target, SlotKind::circle, 0}, 0));
    CHECK_THROWS_AS(Cobordism({0, 0}, {1, 0}, {a, b}), ValidationError);
    // missing slot
    CHECK_THROWS_AS(Cobordism({0, 0}, {2, 0}, {a}), ValidationError);
    // index out of range
    Component c;
    c.cycles.push_back(BoundaryCycle::circle({Side::target, SlotKind::circle, 5}, 0));
    CHECK_THROWS_AS(Cobordism({0, 0}, {1, 0}, {c}), ValidationError);
    // circle slot inside an arc cycle
    Component d;
    d.cycles.push_back(
        BoundaryCycle::arc_cycle_of({{{Side::target, SlotKind::circle, 0}, 0}}));
    CHECK_THROWS_AS(Cobordism({0, 0}, {1, 0}, {d}), ValidationError);
}

TEST_CASE("json round trip is bit-exact after canonicalization") {
    Rng rng(29);
    for (int i = 0; i < 200; ++i) {
        Cobordism c = random_cobordism(rng);
        auto doc = c.to_json();
        Cobordism back = Cobordism::from_json(doc);
        CHECK(back == c);
        CHECK(back.to_json().dump() == doc.dump());
    }
}

TEST_CASE("json carries arbitrary-precision counts") {
    BigInt huge = cob::pow(BigInt(10), 30);
    Cobordism c = closed_surface(huge, 0);
    Cobordism back = Cobordism::from_json(c.to_json());
    CHECK(back == c);
    CHECK(theta(back) == BigInt(2) * huge - 2);
}
