#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cob/surface.hpp"

namespace cob {

enum class CategoryId {
    K,
    N,
    O,
    barN,
    barO,
    N0,
    N1,
    N1plus,
    N1minus,
    Nb,
    S,
    S_and_N,
    S_and_O,
};

std::string category_name(CategoryId cat);
std::optional<CategoryId> category_from_name(const std::string& name);

// The generating set: five closed generators, five open ones, three
// symmetries, two whistles, and the four unorientable extras.
// Throws UnknownGenerator for anything else.
Cobordism generator(const std::string& name);
const std::vector<std::string>& generator_names();

// p_k: the union of k discs, each from the empty manifold to a circle.
Cobordism connecting(std::int64_t k);

// tau_n: the pair of pants with n legs and one crosscap, n circles -> 1.
Cobordism tau(std::int64_t n);

bool in_category(const Cobordism& c, CategoryId cat);

// Connected closed-sector cobordism builders used throughout the suites.
// conn_endo(g, k, type) is the connected endomorphism of the circle with g
// handles, k crosscaps and boundary type; windows adds entirely free circles.
Cobordism conn_endo(const BigInt& genus, const BigInt& crosscaps, int type,
                    std::int64_t windows = 0);
Cobordism conn_closed(const BigInt& genus, const BigInt& crosscaps, std::int64_t windows,
                      std::int64_t src_circles, std::int64_t tgt_circles);
// closed surface as an endomorphism of the empty manifold
Cobordism closed_surface(const BigInt& genus, const BigInt& crosscaps);

// Open-sector fixtures: the disc as an endomorphism of the interval with
// extra handles/crosscaps/windows, the whistle form with source and target
// arcs on distinct boundary circles, and the entirely free disc.
Cobordism open_endo(const BigInt& genus, const BigInt& crosscaps, std::int64_t windows);
Cobordism whistle_endo(const BigInt& genus, const BigInt& crosscaps, std::int64_t windows);
Cobordism free_disc();

// cylinder with k windows as an endomorphism of the circle (C_k)
Cobordism cylinder_with_windows(std::int64_t k);

// A deterministic strongly-connecting morphism a -> b in the category:
// min-overlap cylinders plus discs or whistles to create or cap the extra
// components. Throws NotStronglyConnected when the category has no morphism.
Cobordism connect(const ObjectSig& a, const ObjectSig& b, CategoryId cat);

}  // namespace cob
