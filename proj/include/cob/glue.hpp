#pragma once

#include "cob/surface.hpp"

namespace cob {

// Composition in the cobordism category: the result is "g after f".
// Requires target(f) == source(g); throws SignatureMismatch otherwise.
Cobordism compose(const Cobordism& f, const Cobordism& g);

// Monoidal product: disjoint union with g's slots shifted past f's.
Cobordism tensor(const Cobordism& f, const Cobordism& g);

Cobordism identity(const ObjectSig& sig);

// Union-find over Z2-labelled elements; records when a class has received
// contradictory parity constraints (the non-orientable gluing signal).
class ParityUnionFind {
public:
    explicit ParityUnionFind(std::size_t n);

    // returns (root, parity of x relative to root)
    std::pair<std::size_t, std::uint8_t> find(std::size_t x);

    // impose x ^ y = parity; contradictions mark the class inconsistent
    void unite(std::size_t x, std::size_t y, std::uint8_t parity);

    bool consistent(std::size_t x);
    std::uint8_t parity_to_root(std::size_t x);
    std::size_t root(std::size_t x);

private:
    std::vector<std::size_t> parent_;
    std::vector<std::uint8_t> par_;
    std::vector<std::uint8_t> rank_;
    std::vector<std::uint8_t> inconsistent_;
};

}  // namespace cob
