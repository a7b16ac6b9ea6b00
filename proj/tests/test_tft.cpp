#include "doctest.h"

#include "cob/catlib.hpp"
#include "cob/glue.hpp"
#include "cob/tft.hpp"

using namespace cob;

TEST_CASE("exact scalar arithmetic") {
    Scalar mu0 = Scalar::symbol(0);
    CHECK((mu0 * mu0.inverse()).is_one());
    CHECK(mu0.pow(-2) * mu0.pow(2) == Scalar(1));
    CHECK((Scalar(2) + Scalar(3)) == Scalar(5));
    CHECK((Scalar::rational(Rational(1, 2)) * Scalar(2)).is_one());
    Scalar mix = Scalar::symbol(0, -2) * Scalar::symbol(2, 2);
    CHECK(mix.to_string() == "mu0^-2 mu2^2");
    CHECK((Scalar(3) * mu0).to_string() == "3 mu0");
    CHECK(Scalar(0).to_string() == "0");
    CHECK_THROWS_AS((mu0 + Scalar(1)).inverse(), SingularPairing);

    GaussRat i(Rational(0), Rational(1));
    CHECK((i * i) == GaussRat(Rational(-1)));
    CHECK((GaussRat(1) / i).to_string() == "-i");
}

TEST_CASE("functor to the integers") {
    BSequence b;
    for (long long k = 0; k <= 9; ++k) b.entries[k] = BigInt(10 + 3 * k);
    CHECK(functor_Z(b, closed_surface(0, 1)) == b.at(0));  // projective plane
    for (long long k = 1; k <= 5; ++k) CHECK(functor_Z(b, connecting(k)) == b.at(k));
    for (long long n = 0; n <= 4; ++n) CHECK(functor_Z(b, identity({n, 0})) == 0);
    CHECK_THROWS_AS(functor_Z(b, generator("odisc_in")), NotInCategory);
}

TEST_CASE("invertible theory evaluation") {
    MuSequence mu = MuSequence::symbols();
    CHECK(tft_eval(mu, closed_surface(0, 1)) == Scalar::symbol(0));
    for (long long k = 1; k <= 4; ++k)
        CHECK(tft_eval(mu, connecting(k)) == Scalar::symbol(k, k));
    for (long long n = 0; n <= 4; ++n) CHECK(tft_eval(mu, identity({n, 0})).is_one());
    CHECK(tft_eval(mu, closed_surface(0, 0)) == Scalar::symbol(0, 2));  // sphere
    CHECK_THROWS_AS(tft_eval(mu, generator("whistle_co")), NotInCategory);
    CHECK_THROWS_AS(MuSequence::numeric({{0, Scalar(0)}}), ValidationError);
}

TEST_CASE("monoidal structure constants") {
    MuSequence mu = MuSequence::symbols();
    for (std::int64_t n = 0; n <= 6; ++n) {
        CHECK(f2(mu, n, 0).is_one());
        CHECK(f2(mu, 0, n).is_one());
    }
    CHECK(f2(mu, 1, 1) == Scalar::symbol(1, -2) * Scalar::symbol(2, 2));
    CHECK(f2(mu, 2, 1) ==
          Scalar::symbol(2, -2) * Scalar::symbol(1, -1) * Scalar::symbol(3, 3));
}

TEST_CASE("natural transformations between theories") {
    MuSequence m1 = MuSequence::numeric({{0, Scalar(2)}, {1, Scalar(3)}});
    MuSequence m2 = MuSequence::numeric({{0, Scalar(2)}, {1, Scalar(6)}});
    auto nt = nat_trans(m1, m2, 5);
    REQUIRE(nt.has_value());
    CHECK(nt->tau[0].is_one());
    CHECK(nt->tau[1] == Scalar(2));
    CHECK(nt->tau[2].is_one());  // both default to 1 at index 2

    MuSequence m3 = MuSequence::numeric({{0, Scalar(5)}});
    CHECK(!nat_trans(m1, m3, 5).has_value());
}

TEST_CASE("frobenius validation on the one-dimensional algebra") {
    FrobeniusData fd = cor45_algebra(Scalar::symbol(0));
    AxiomReport rep = frobenius_validate(fd);
    CHECK(rep.all_passed());
    CHECK(copairing(fd)[0][0] == Scalar::symbol(0, -2));
    CHECK(fd.u_elem[0] == Scalar::symbol(0, -1));

    FrobeniusData numeric = cor45_algebra(Scalar(1));
    CHECK(numeric.u_elem[0].is_one());
    CHECK(frobenius_validate(numeric).all_passed());
    CHECK_THROWS_AS(cor45_algebra(Scalar(0)), ValidationError);

    FrobeniusData singular = fd;
    singular.pairing = {{Scalar(0)}};
    CHECK_THROWS_AS(copairing(singular), SingularPairing);
    AxiomReport bad = frobenius_validate(singular);
    CHECK(!bad.all_passed());
}

TEST_CASE("klein evaluation agrees with the invertible theory on small words") {
    Scalar mu0 = Scalar::symbol(0);
    FrobeniusData fd = cor45_algebra(mu0);
    MuSequence theory = MuSequence::numeric({{0, mu0}});

    // sphere: counit after unit
    KleinMap sphere = klein_compose(klein_generator(fd, "disc_in"),
                                    klein_generator(fd, "disc_out"));
    CHECK(sphere.mat[0][0] == Scalar::symbol(0, 2));
    CHECK(sphere.mat[0][0] == tft_eval(theory, closed_surface(0, 0)));

    // the crosscapped cylinder multiplies by U
    KleinMap rp2 = klein_generator(fd, "rp2_cyl");
    CHECK(rp2.mat[0][0] == Scalar::symbol(0, -1));
    CHECK(rp2.mat[0][0] == tft_eval(theory, generator("rp2_cyl")));

    // the reflection evaluates to the involution matrix
    KleinMap tw = klein_generator(fd, "twist_circle");
    CHECK(tw.mat[0][0].is_one());

    CHECK_THROWS_AS(klein_generator(fd, "whistle_co"), OpenSectorGenerator);
    CHECK_THROWS_AS(klein_generator(fd, "odisc_in"), OpenSectorGenerator);
}

TEST_CASE("klein evaluation respects tensor") {
    FrobeniusData fd = cor45_algebra(Scalar::symbol(0));
    KleinMap unit = klein_generator(fd, "mobius");
    KleinMap two = klein_tensor(unit, unit);
    CHECK(two.src_circles == 0);
    CHECK(two.tgt_circles == 2);
    CHECK(two.mat[0][0] == Scalar::symbol(0, -2));
}

namespace {

// diagonal algebra Q^3 with counit weights (1, 1/2, 1/2), the involution
// swapping the second and third factors, and U = e1
FrobeniusData diag3() {
    FrobeniusData fd;
    fd.dim = 3;
    fd.unit = {Scalar(1), Scalar(1), Scalar(1)};
    fd.mult.assign(3, std::vector<std::vector<Scalar>>(3, std::vector<Scalar>(3, Scalar(0))));
    for (int i = 0; i < 3; ++i) fd.mult[i][i][i] = Scalar(1);
    Scalar half = Scalar::rational(Rational(1, 2));
    fd.pairing = {{Scalar(1), Scalar(0), Scalar(0)},
                  {Scalar(0), half, Scalar(0)},
                  {Scalar(0), Scalar(0), half}};
    fd.involution = {{Scalar(1), Scalar(0), Scalar(0)},
                     {Scalar(0), Scalar(0), Scalar(1)},
                     {Scalar(0), Scalar(1), Scalar(0)}};
    fd.u_elem = {Scalar(1), Scalar(0), Scalar(0)};
    return fd;
}

}  // namespace

TEST_CASE("a three-dimensional algebra passes and contracts coherently") {
    FrobeniusData fd = diag3();
    AxiomReport rep = frobenius_validate(fd);
    CHECK(rep.all_passed());

    KleinMap mult = klein_generator(fd, "pants_in");
    KleinMap comult = klein_generator(fd, "pants_out");
    KleinMap idm = klein_identity(fd, 1);
    KleinMap sym = klein_generator(fd, "sym_cc");

    // Frobenius relation and cocommutativity as contraction identities
    KleinMap lhs = klein_compose(klein_tensor(comult, idm), klein_tensor(idm, mult));
    KleinMap rhs = klein_compose(mult, comult);
    CHECK(lhs.mat == rhs.mat);
    CHECK(klein_compose(comult, sym).mat == comult.mat);
    // multiplication is associative under contraction
    KleinMap assoc_l = klein_compose(klein_tensor(mult, idm), mult);
    KleinMap assoc_r = klein_compose(klein_tensor(idm, mult), mult);
    CHECK(assoc_l.mat == assoc_r.mat);
    // the involution intertwines with the crosscapped cylinder
    KleinMap tw = klein_generator(fd, "twist_circle");
    KleinMap rp2 = klein_generator(fd, "rp2_cyl");
    CHECK(klein_compose(rp2, tw).mat == klein_compose(tw, rp2).mat);
}
