#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cob/bigint.hpp"
#include "cob/errors.hpp"

#include "json.hpp"

namespace cob {

// Objects of the skeletal category: m ordered circles and n ordered intervals.
struct ObjectSig {
    std::int64_t circles = 0;
    std::int64_t intervals = 0;

    friend bool operator==(const ObjectSig&, const ObjectSig&) = default;
    friend auto operator<=>(const ObjectSig&, const ObjectSig&) = default;

    ObjectSig operator+(const ObjectSig& o) const {
        return {circles + o.circles, intervals + o.intervals};
    }
    bool closed() const { return intervals == 0; }
    bool open_only() const { return circles == 0; }
    bool empty() const { return circles == 0 && intervals == 0; }
    std::string to_string() const;
};

enum class Side : std::uint8_t { source = 0, target = 1 };
enum class SlotKind : std::uint8_t { circle = 0, interval = 1 };

// One parametrized boundary piece of an object component.
struct Slot {
    Side side = Side::source;
    SlotKind kind = SlotKind::circle;
    std::int64_t index = 0;

    friend bool operator==(const Slot&, const Slot&) = default;
    friend auto operator<=>(const Slot&, const Slot&) = default;
};

// A marked piece inside a boundary cycle. The twist bit records inclusion (0)
// vs reflection (1) of the slot's parametrization, measured against the
// component's reference boundary walk with the usual in/out convention:
// on target pieces twist 0 means the walk agrees with the parametrization,
// on source pieces twist 0 means it opposes it.
struct MarkedArc {
    Slot slot;
    std::uint8_t twist = 0;

    friend bool operator==(const MarkedArc&, const MarkedArc&) = default;
    friend auto operator<=>(const MarkedArc&, const MarkedArc&) = default;
};

// One boundary circle of a component: either a fully marked circle, or a
// cyclic word of marked interval arcs separated by implicit free arcs.
// An arc cycle of length zero is a window (entirely free boundary circle).
struct BoundaryCycle {
    enum class Kind : std::uint8_t { marked_circle = 0, arc_cycle = 1 };

    Kind kind = Kind::arc_cycle;
    std::vector<MarkedArc> arcs;  // marked_circle: exactly one entry

    static BoundaryCycle circle(Slot slot, std::uint8_t twist) {
        return {Kind::marked_circle, {{slot, twist}}};
    }
    static BoundaryCycle arc_cycle_of(std::vector<MarkedArc> arcs) {
        return {Kind::arc_cycle, std::move(arcs)};
    }
    static BoundaryCycle window() { return {Kind::arc_cycle, {}}; }

    bool is_window() const { return kind == Kind::arc_cycle && arcs.empty(); }

    friend bool operator==(const BoundaryCycle&, const BoundaryCycle&) = default;
    friend auto operator<=>(const BoundaryCycle&, const BoundaryCycle&) = default;
};

// A connected piece of a cobordism, up to homeomorphism rel boundary.
// Canonical form keeps g > 0 and k > 0 mutually exclusive: a non-orientable
// component absorbs handles as (g,k) -> (0, 2g+k), with all twists erased.
struct Component {
    BigInt genus = 0;
    BigInt crosscaps = 0;
    std::vector<BoundaryCycle> cycles;

    BigInt euler_char() const;
    bool orientable() const { return crosscaps.is_zero(); }
    std::int64_t window_count() const;
    std::int64_t marked_slot_count() const;

    friend bool operator==(const Component&, const Component&) = default;
};

bool component_less(const Component& a, const Component& b);

// A morphism of the open-closed cobordism category in canonical combinatorial
// form. Construction canonicalizes; two values are equal morphisms iff their
// fields are equal.
struct Cobordism {
    ObjectSig source;
    ObjectSig target;
    std::vector<Component> components;

    Cobordism() = default;
    Cobordism(ObjectSig src, ObjectSig tgt, std::vector<Component> comps);

    friend bool operator==(const Cobordism&, const Cobordism&) = default;

    std::string canonical_key() const;

    nlohmann::json to_json() const;
    static Cobordism from_json(const nlohmann::json& doc);
};

BigInt euler_char(const Cobordism& c);
BigInt theta(const Cobordism& c);
BigInt omega(const Cobordism& c);

// Checks that every source/target slot occurs exactly once across all
// components; throws ValidationError otherwise.
void validate(const ObjectSig& source, const ObjectSig& target,
              const std::vector<Component>& components);

// Equality moves applied per component; exposed for tests.
Component canonicalize_component(Component comp);

}  // namespace cob
