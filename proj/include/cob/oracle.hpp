#pragma once

#include <map>
#include <string>
#include <vector>

#include "cob/surface.hpp"

namespace cob {

// Independent classification backend: generators are realized as fixed small
// polygon complexes with edge identifications, gluing is performed on the
// complexes, and invariants are read off by V - E + F counting, orientation
// propagation across faces and free-edge boundary walking. Deliberately
// disjoint from the union-find composition engine.
namespace oracle {

struct FaceEdge {
    std::int64_t edge;
    int dir;  // +1 or -1
};

struct Complex {
    ObjectSig source;
    ObjectSig target;
    std::int64_t n_edges = 0;
    std::vector<std::vector<FaceEdge>> faces;
    // every marked object component is carried by exactly one edge,
    // stored here with its parametrization direction
    std::map<Slot, FaceEdge> marks;
};

struct ComponentInvariants {
    bool orientable = true;
    BigInt genus_or_crosscaps = 0;
    std::int64_t boundary_cycles = 0;
    std::int64_t marked_slots = 0;

    friend bool operator==(const ComponentInvariants&, const ComponentInvariants&) = default;
    friend auto operator<=>(const ComponentInvariants&, const ComponentInvariants&) = default;
};

Complex generator_complex(const std::string& name);
Complex identity_complex(const ObjectSig& sig);
Complex conn_complex(const BigInt& genus, const BigInt& crosscaps, std::int64_t windows,
                     std::int64_t src_circles, std::int64_t tgt_circles);

Complex compose(const Complex& f, const Complex& g);
Complex tensor(const Complex& f, const Complex& g);

std::vector<ComponentInvariants> classify(const Complex& complex);

// the same invariant tuples read from a composed canonical value, for
// comparison against the oracle output
std::vector<ComponentInvariants> invariants_of(const Cobordism& c);

}  // namespace oracle
}  // namespace cob
