#include "doctest.h"

#include "cob/catlib.hpp"
#include "cob/glue.hpp"
#include "cob/monoid.hpp"
#include "cob/verify.hpp"

using namespace cob;

namespace {

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    std::size_t n = a.size(), m = b[0].size(), k = b.size();
    Matrix out(n, std::vector<BigInt>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    return out;
}

bool is_snf_shape(const Matrix& d) {
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d[i].size(); ++j)
            if (i != j && !d[i][j].is_zero()) return false;
    std::size_t steps = std::min(d.size(), d.empty() ? 0 : d[0].size());
    for (std::size_t i = 0; i + 1 < steps; ++i) {
        if (d[i][i].is_negative()) return false;
        if (d[i][i].is_zero() && !d[i + 1][i + 1].is_zero()) return false;
        if (!d[i][i].is_zero() && !(d[i + 1][i + 1] % d[i][i]).is_zero()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("smith normal form on fixed matrices") {
    Matrix a = {{2, 0}, {0, 3}};
    Matrix d, u, v;
    smith_normal_form(a, d, u, v);
    CHECK(d[0][0] == 1);
    CHECK(d[1][1] == 6);
    CHECK(mat_mul(mat_mul(u, a), v) == d);

    Matrix b = {{0, 0, 2}, {0, 0, 1}, {1, -2, -1}};
    smith_normal_form(b, d, u, v);
    CHECK(is_snf_shape(d));
    CHECK(d[0][0] == 1);
    CHECK(d[1][1] == 1);
    CHECK(d[2][2] == 0);
    CHECK(mat_mul(mat_mul(u, b), v) == d);
}

TEST_CASE("smith normal form properties on random matrices") {
    Rng rng(47);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = 1 + rng.below(4), m = 1 + rng.below(4);
        Matrix a(n, std::vector<BigInt>(m));
        for (auto& row : a)
            for (auto& x : row) x = BigInt(rng.below(21) - 10);
        Matrix d, u, v;
        smith_normal_form(a, d, u, v);
        CHECK(is_snf_shape(d));
        CHECK(mat_mul(mat_mul(u, a), v) == d);
    }
}

TEST_CASE("group completions of the fixture monoids") {
    MonoidPresentation nat;
    nat.rank = 1;
    CHECK(grothendieck(nat).invariant_factors == std::vector<BigInt>{BigInt(0)});

    MonoidPresentation nz2 = parse_presentation("generators: g t\n2t = 0\n");
    auto gc = grothendieck(nz2);
    CHECK(gc.invariant_factors == std::vector<BigInt>{BigInt(2), BigInt(0)});
    CHECK(gc.free_rank() == 1);
    CHECK(gc.torsion_rank() == 1);

    MonoidPresentation n1 = parse_presentation(
        "generators: h c t\n2t = 0\nc + t = c\nh + c = 3c + t\n");
    CHECK(grothendieck(n1).invariant_factors == std::vector<BigInt>{BigInt(0)});
}

TEST_CASE("presentation text format") {
    MonoidPresentation p = parse_presentation(
        "# comment line\n"
        "generators: a b c\n"
        "2a + b = c\n"
        "b = 0\n");
    CHECK(p.rank == 3);
    REQUIRE(p.relations.size() == 2);
    CHECK(p.relations[0].first == std::vector<BigInt>{2, 1, 0});
    CHECK(p.relations[0].second == std::vector<BigInt>{0, 0, 1});
    CHECK(p.relations[1].second == std::vector<BigInt>{0, 0, 0});

    // generators inferred in order of first appearance
    MonoidPresentation q = parse_presentation("x + 2y = y\n");
    CHECK(q.rank == 2);
    CHECK(q.generator_names == std::vector<std::string>{"x", "y"});

    CHECK_THROWS_AS(parse_presentation("a +\n"), SyntaxError);
    CHECK_THROWS_AS(parse_presentation("a b\n"), SyntaxError);
    CHECK_THROWS_AS(parse_presentation("generators: a a\n"), SyntaxError);
    CHECK_THROWS_AS(parse_presentation("generators: a\na = b\n"), SyntaxError);
}

TEST_CASE("n1 elements and the witness search") {
    using E = N1Element;
    CHECK(E::normalized(2, 3, 0) == E::normalized(0, 7, 1));
    CHECK(E::normalized(1, 0, 0) != E::normalized(0, 2, 0));
    CHECK(gc_class_n1(E::normalized(1, 0, 0)) == 2);
    CHECK(cobordism_of(E::normalized(1, 2, 0)) == conn_endo(0, 4, 0));

    auto found = gc_witness(E::normalized(1, 0, 0), E::normalized(0, 0, 0),
                            E::normalized(1, 0, 1), E::normalized(0, 0, 0), 100);
    REQUIRE(found.witness.has_value());
    CHECK(*found.witness == E::normalized(0, 1, 0));
    CHECK(!found.exhausted);

    // tight bound stops the search without claiming absence proof
    auto bounded = gc_witness(E::normalized(1, 0, 0), E::normalized(0, 0, 0),
                              E::normalized(1, 0, 1), E::normalized(0, 0, 0), 2);
    CHECK(!bounded.witness.has_value());
    CHECK(!bounded.exhausted);
}

TEST_CASE("n0 class vectors") {
    auto v = n0_class(tensor(closed_surface(0, 2), tensor(closed_surface(1, 0),
                                                          closed_surface(1, 0))),
                      6);
    REQUIRE(v.size() == 2);
    CHECK(v[0].first == ClosedType{0, 2});
    CHECK(v[0].second == 1);
    CHECK(v[1].first == ClosedType{1, 0});
    CHECK(v[1].second == 2);
    CHECK(n0_to_string(v) == "{(0,2):1,(1,0):2}");
    CHECK_THROWS_AS(n0_class(closed_surface(9, 0), 6), ValidationError);
    CHECK_THROWS_AS(n0_class(generator("disc_in"), 6), NotInCategory);
}
