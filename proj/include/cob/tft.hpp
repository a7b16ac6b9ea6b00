#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cob/scalar.hpp"
#include "cob/surface.hpp"

namespace cob {

// Functor to the integers: b0 is the image of the projective plane, b_k the
// image of the connecting morphism p_k; unset indices fall back to a default.
struct BSequence {
    std::map<std::int64_t, BigInt> entries;
    BigInt fallback = 0;

    BigInt at(std::int64_t k) const {
        auto it = entries.find(k);
        return it == entries.end() ? fallback : it->second;
    }
};

// mu_0, mu_1, ... as exact scalars; symbolic() uses the formal symbols,
// numeric tables default unset entries to 1 so every value stays invertible.
struct MuSequence {
    bool symbolic = true;
    std::map<std::int64_t, Scalar> entries;

    static MuSequence symbols() { return {true, {}}; }
    static MuSequence numeric(std::map<std::int64_t, Scalar> table);

    Scalar at(std::int64_t i) const;
};

// --- functors out of the closed category ------------------------------------

// The case formula for functors N -> Z determined by a BSequence.
BigInt functor_Z(const BSequence& b, const Cobordism& c);

// b_k == k * b_1 for 1 <= k <= kmax
bool is_strict_monoidal_b(const BSequence& b, std::int64_t kmax);

// F^mu(Sigma) = mu_m^m mu_n^-n mu_0^-Theta(Sigma) for Sigma: n -> m in N
Scalar tft_eval(const MuSequence& mu, const Cobordism& c);

// F2(n, n') = mu_n^-n mu_n'^-n' mu_{n+n'}^{n+n'}
Scalar f2(const MuSequence& mu, std::int64_t n, std::int64_t np);

// tau_n = (mu'_n mu_n^-1)^n when mu_0 == mu'_0, absent otherwise; the
// monoidality square is checked symbolically up to nmax
struct NatTrans {
    std::vector<Scalar> tau;
};
std::optional<NatTrans> nat_trans(const MuSequence& mu, const MuSequence& mup,
                                  std::int64_t nmax);

// --- Frobenius / Klein data ---------------------------------------------------

// Finite-dimensional commutative Frobenius algebra with involution and the
// element U. Vectors are coordinate columns over exact scalars; mult[i][j] is
// the coordinate vector of a_i * a_j.
struct FrobeniusData {
    std::int64_t dim = 0;
    std::vector<Scalar> unit;
    std::vector<std::vector<std::vector<Scalar>>> mult;
    std::vector<std::vector<Scalar>> pairing;
    std::vector<std::vector<Scalar>> involution;
    std::vector<Scalar> u_elem;
};

struct AxiomReport {
    std::vector<std::pair<std::string, bool>> axioms;
    bool all_passed() const;
    std::string to_string() const;
};

// copairing coefficients: inverse of the pairing matrix
std::vector<std::vector<Scalar>> copairing(const FrobeniusData& fd);

AxiomReport frobenius_validate(const FrobeniusData& fd);

// the one-dimensional algebra of the invertible theory: pairing mu0^2 xy,
// identity involution, U = mu0^-1
FrobeniusData cor45_algebra(const Scalar& mu0);

// --- evaluation of closed-sector expressions ---------------------------------

// Matrix of a multilinear map between tensor powers of the algebra.
struct KleinMap {
    std::int64_t src_circles = 0;
    std::int64_t tgt_circles = 0;
    std::int64_t dim = 1;
    // row-major: rows index the target power, columns the source power
    std::vector<std::vector<Scalar>> mat;

    friend bool operator==(const KleinMap&, const KleinMap&) = default;
};

KleinMap klein_identity(const FrobeniusData& fd, std::int64_t circles);
KleinMap klein_generator(const FrobeniusData& fd, const std::string& name);
KleinMap klein_compose(const KleinMap& f, const KleinMap& g);  // g after f
KleinMap klein_tensor(const KleinMap& f, const KleinMap& g);

}  // namespace cob
