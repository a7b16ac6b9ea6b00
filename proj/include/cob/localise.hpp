#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cob/catlib.hpp"
#include "cob/monoid.hpp"
#include "cob/surface.hpp"

namespace cob {

enum class Direction : std::uint8_t { fwd, inv };

struct Letter {
    Cobordism morphism;
    Direction dir = Direction::fwd;

    const ObjectSig& from() const {
        return dir == Direction::fwd ? morphism.source : morphism.target;
    }
    const ObjectSig& to() const {
        return dir == Direction::fwd ? morphism.target : morphism.source;
    }
};

// A formal zigzag of morphisms and inverses; letters are listed in
// diagrammatic order, the first letter applied first.
struct LocWord {
    ObjectSig base;  // endpoint when the word is empty
    std::vector<Letter> letters;

    static LocWord at(ObjectSig object) { return {object, {}}; }
    LocWord& then(Cobordism c, Direction d = Direction::fwd);

    ObjectSig from() const { return letters.empty() ? base : letters.front().from(); }
    ObjectSig to() const { return letters.empty() ? base : letters.back().to(); }
};

// Normal form of a morphism in the localisation of the chosen category:
// an integer, an integer pair, a finite-support vector, or an integer plus a
// vector for the product decomposition of barO.
struct LocClass {
    enum class Shape { integer, pair, vector, int_and_vector };

    ObjectSig source;
    ObjectSig target;
    Shape shape = Shape::integer;
    BigInt a;       // integer payloads
    BigInt b;       // second entry of pair payloads
    N0Vector vec;   // vector payloads

    friend bool operator==(const LocClass&, const LocClass&) = default;
    std::string payload_string() const;
};

LocClass loc_class(const Cobordism& c, CategoryId cat);

// composability check; throws NotComposable carrying the offending index
void check_word(const LocWord& w, CategoryId cat);

LocClass word_reduce(const LocWord& w, CategoryId cat);

// Rewrites a loop at `base` into a word whose every letter is an
// endomorphism of `base` or the inverse of one, inserting the canonical
// connecting morphisms; the localisation class is preserved.
LocWord to_endo_word(const LocWord& w, const ObjectSig& base, CategoryId cat);

bool verify_relation(const LocWord& lhs, const LocWord& rhs, CategoryId cat);

// signed theta and omega sums of a word, the arithmetic cross-check used by
// the relation suites
BigInt word_theta(const LocWord& w);
BigInt word_omega(const LocWord& w);

}  // namespace cob
