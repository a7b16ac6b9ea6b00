#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cob/bigint.hpp"
#include "cob/errors.hpp"
#include "cob/surface.hpp"

namespace cob {

// Finitely presented commutative monoid: relations are pairs of non-negative
// exponent vectors over the generators.
struct MonoidPresentation {
    std::size_t rank = 0;
    std::vector<std::string> generator_names;  // optional, sized rank when present
    std::vector<std::pair<std::vector<BigInt>, std::vector<BigInt>>> relations;
};

// Universal group of the presented monoid in Smith normal form.
struct GroupCompletion {
    // d1 | d2 | ... with 0 marking a free factor; trivial factors dropped
    std::vector<BigInt> invariant_factors;
    // generator index -> coordinates in the Smith basis (full rank vector,
    // entry j reduced mod the j-th diagonal when finite)
    std::vector<std::vector<BigInt>> generator_map;
    // full diagonal including trivial entries, for the coordinate reduction
    std::vector<BigInt> diagonal;

    std::size_t free_rank() const;
    std::size_t torsion_rank() const;
};

using Matrix = std::vector<std::vector<BigInt>>;

// D = U * A * V with U, V unimodular and D in Smith normal form
// (divisibility chain down the diagonal, non-negative entries).
void smith_normal_form(Matrix a, Matrix& d, Matrix& u, Matrix& v);

GroupCompletion grothendieck(const MonoidPresentation& p);

// --- the N1 fixture -------------------------------------------------------

// Element of the monoid of connected endomorphisms of the circle in normal
// form: g handles, k crosscaps, boundary type eps; whenever k > 0 the class
// is stored as (0, 2g+k) with the type erased.
struct N1Element {
    BigInt g = 0;
    BigInt k = 0;
    std::uint8_t eps = 0;

    static N1Element normalized(BigInt g, BigInt k, std::uint8_t eps);
    N1Element add(const N1Element& o) const;

    friend bool operator==(const N1Element&, const N1Element&) = default;
};

// theta of the corresponding endomorphism: 2g + k
BigInt gc_class_n1(const N1Element& e);

Cobordism cobordism_of(const N1Element& e);

struct WitnessResult {
    std::optional<N1Element> witness;
    bool exhausted = false;  // never true here: the monoid is infinite
};

// least k (graded-lex enumeration of normal forms) with
// normalize(x + y' + k) == normalize(y + x' + k), searched up to `bound`
// enumerated candidates
WitnessResult gc_witness(const N1Element& x, const N1Element& y, const N1Element& xp,
                         const N1Element& yp, std::size_t bound);

// --- N0 -------------------------------------------------------------------

struct ClosedType {
    BigInt g;
    BigInt k;
    friend bool operator==(const ClosedType&, const ClosedType&) = default;
    friend auto operator<=>(const ClosedType&, const ClosedType&) = default;
};

// finite-support vector of counts per closed surface type
using N0Vector = std::vector<std::pair<ClosedType, BigInt>>;

// Counts the closed components of an endomorphism of the empty manifold per
// homeomorphism type. FreeBoundaryError if windows are present; truncation
// bounds max(g, k) and overflowing it is a ValidationError.
N0Vector n0_class(const Cobordism& c, const BigInt& truncation);

std::string n0_to_string(const N0Vector& v);

// --- textual presentation format -------------------------------------------
//
//   generators: h c t
//   2t = 0
//   h + c = 3c + t
//
// The generators line is optional; otherwise generators are indexed in order
// of first appearance. Terms are [coefficient] name, joined by '+'; a side
// that is empty or '0' is the unit.
MonoidPresentation parse_presentation(const std::string& text);

}  // namespace cob
