#include "cob/surface.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cob {

std::string ObjectSig::to_string() const {
    std::ostringstream os;
    os << "(" << circles << "," << intervals << ")";
    return os.str();
}

BigInt Component::euler_char() const {
    return BigInt(2) - BigInt(2) * genus - crosscaps -
           BigInt(static_cast<long long>(cycles.size()));
}

std::int64_t Component::window_count() const {
    std::int64_t n = 0;
    for (const auto& cyc : cycles)
        if (cyc.is_window()) ++n;
    return n;
}

std::int64_t Component::marked_slot_count() const {
    std::int64_t n = 0;
    for (const auto& cyc : cycles) n += static_cast<std::int64_t>(cyc.arcs.size());
    return n;
}

namespace {

// Stable encoding used for cycle ordering and the printable key.
void encode_cycle(const BoundaryCycle& cyc, std::vector<std::int64_t>& out) {
    out.push_back(cyc.kind == BoundaryCycle::Kind::marked_circle ? 0 : 1);
    out.push_back(static_cast<std::int64_t>(cyc.arcs.size()));
    for (const auto& arc : cyc.arcs) {
        out.push_back(static_cast<std::int64_t>(arc.slot.side));
        out.push_back(static_cast<std::int64_t>(arc.slot.kind));
        out.push_back(arc.slot.index);
        out.push_back(arc.twist);
    }
}

std::vector<std::int64_t> cycle_code(const BoundaryCycle& cyc) {
    std::vector<std::int64_t> out;
    encode_cycle(cyc, out);
    return out;
}

bool cycle_less(const BoundaryCycle& a, const BoundaryCycle& b) {
    return cycle_code(a) < cycle_code(b);
}

BoundaryCycle rotate_to(const BoundaryCycle& cyc, std::size_t start) {
    BoundaryCycle out = cyc;
    std::rotate(out.arcs.begin(), out.arcs.begin() + static_cast<std::ptrdiff_t>(start),
                out.arcs.end());
    return out;
}

BoundaryCycle min_rotation(const BoundaryCycle& cyc) {
    if (cyc.kind == BoundaryCycle::Kind::marked_circle || cyc.arcs.size() < 2) return cyc;
    BoundaryCycle best = cyc;
    auto best_code = cycle_code(best);
    for (std::size_t s = 1; s < cyc.arcs.size(); ++s) {
        BoundaryCycle cand = rotate_to(cyc, s);
        auto code = cycle_code(cand);
        if (code < best_code) {
            best = std::move(cand);
            best_code = std::move(code);
        }
    }
    return best;
}

BoundaryCycle reversed(const BoundaryCycle& cyc) {
    BoundaryCycle out = cyc;
    std::reverse(out.arcs.begin(), out.arcs.end());
    return out;
}

BoundaryCycle flip_twists(const BoundaryCycle& cyc) {
    BoundaryCycle out = cyc;
    for (auto& arc : out.arcs) arc.twist ^= 1;
    return out;
}

std::vector<std::int64_t> component_cycles_code(const Component& comp) {
    std::vector<std::int64_t> code;
    for (const auto& cyc : comp.cycles) encode_cycle(cyc, code);
    return code;
}

}  // namespace

Component canonicalize_component(Component comp) {
    if (!comp.crosscaps.is_zero()) {
        // crosscap absorption and twist erasure; each cycle canonical up to
        // rotation and reversal independently (crosscap slide)
        comp.crosscaps = BigInt(2) * comp.genus + comp.crosscaps;
        comp.genus = 0;
        for (auto& cyc : comp.cycles) {
            for (auto& arc : cyc.arcs) arc.twist = 0;
            if (cyc.kind == BoundaryCycle::Kind::arc_cycle) {
                BoundaryCycle fwd = min_rotation(cyc);
                BoundaryCycle rev = min_rotation(reversed(cyc));
                cyc = cycle_less(rev, fwd) ? rev : fwd;
            }
        }
        std::sort(comp.cycles.begin(), comp.cycles.end(), cycle_less);
        return comp;
    }

    // orientable: the only move is the simultaneous global flip
    Component cand_a = comp;
    for (auto& cyc : cand_a.cycles)
        if (cyc.kind == BoundaryCycle::Kind::arc_cycle) cyc = min_rotation(cyc);
    std::sort(cand_a.cycles.begin(), cand_a.cycles.end(), cycle_less);

    Component cand_b = comp;
    for (auto& cyc : cand_b.cycles) {
        cyc = flip_twists(cyc);
        if (cyc.kind == BoundaryCycle::Kind::arc_cycle) cyc = min_rotation(reversed(cyc));
    }
    std::sort(cand_b.cycles.begin(), cand_b.cycles.end(), cycle_less);

    return component_cycles_code(cand_b) < component_cycles_code(cand_a) ? cand_b : cand_a;
}

bool component_less(const Component& a, const Component& b) {
    if (a.genus != b.genus) return a.genus < b.genus;
    if (a.crosscaps != b.crosscaps) return a.crosscaps < b.crosscaps;
    return component_cycles_code(a) < component_cycles_code(b);
}

void validate(const ObjectSig& source, const ObjectSig& target,
              const std::vector<Component>& components) {
    if (source.circles < 0 || source.intervals < 0 || target.circles < 0 ||
        target.intervals < 0)
        throw ValidationError("negative object signature");
    std::map<Slot, int> seen;
    for (const auto& comp : components) {
        if (comp.genus.is_negative() || comp.crosscaps.is_negative())
            throw ValidationError("negative genus or crosscap count");
        for (const auto& cyc : comp.cycles) {
            if (cyc.kind == BoundaryCycle::Kind::marked_circle && cyc.arcs.size() != 1)
                throw ValidationError("marked circle cycle must hold exactly one slot");
            for (const auto& arc : cyc.arcs) {
                if (cyc.kind == BoundaryCycle::Kind::marked_circle &&
                    arc.slot.kind != SlotKind::circle)
                    throw ValidationError("marked circle cycle holds an interval slot");
                if (cyc.kind == BoundaryCycle::Kind::arc_cycle &&
                    arc.slot.kind != SlotKind::interval)
                    throw ValidationError("arc cycle holds a circle slot");
                if (arc.twist > 1) throw ValidationError("twist must be a bit");
                const ObjectSig& sig = arc.slot.side == Side::source ? source : target;
                std::int64_t bound =
                    arc.slot.kind == SlotKind::circle ? sig.circles : sig.intervals;
                if (arc.slot.index < 0 || arc.slot.index >= bound)
                    throw ValidationError("slot index out of range");
                if (++seen[arc.slot] > 1) throw ValidationError("duplicated slot");
            }
        }
    }
    std::int64_t expected = source.circles + source.intervals + target.circles + target.intervals;
    if (static_cast<std::int64_t>(seen.size()) != expected)
        throw ValidationError("missing slot: boundary does not cover both objects");
}

Cobordism::Cobordism(ObjectSig src, ObjectSig tgt, std::vector<Component> comps)
    : source(src), target(tgt) {
    validate(src, tgt, comps);
    for (auto& comp : comps) comp = canonicalize_component(std::move(comp));
    std::sort(comps.begin(), comps.end(), component_less);
    components = std::move(comps);
}

std::string Cobordism::canonical_key() const {
    std::ostringstream os;
    os << source.to_string() << "->" << target.to_string() << "|";
    for (const auto& comp : components) {
        os << "[g=" << comp.genus << ",k=" << comp.crosscaps << ";";
        for (const auto& cyc : comp.cycles) {
            if (cyc.kind == BoundaryCycle::Kind::marked_circle) {
                const auto& arc = cyc.arcs.front();
                os << "C(" << (arc.slot.side == Side::source ? "s" : "t") << arc.slot.index
                   << ":" << int(arc.twist) << ")";
            } else {
                os << "A(";
                for (std::size_t i = 0; i < cyc.arcs.size(); ++i) {
                    const auto& arc = cyc.arcs[i];
                    if (i) os << ",";
                    os << (arc.slot.side == Side::source ? "s" : "t") << arc.slot.index << ":"
                       << int(arc.twist);
                }
                os << ")";
            }
        }
        os << "]";
    }
    return os.str();
}

BigInt euler_char(const Cobordism& c) {
    BigInt chi = 0;
    for (const auto& comp : c.components) chi += comp.euler_char();
    return chi;
}

BigInt theta(const Cobordism& c) {
    return BigInt(c.target.circles + c.target.intervals) - BigInt(c.source.circles) -
           euler_char(c);
}

BigInt omega(const Cobordism& c) {
    BigInt w = 0;
    for (const auto& comp : c.components) w += comp.window_count();
    return w;
}

namespace {

nlohmann::json bigint_to_json(const BigInt& v) {
    if (v.fits_int64()) return v.to_int64();
    return v.to_string();
}

BigInt bigint_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt::from_string(j.get<std::string>());
    throw ValidationError("expected integer or decimal string");
}

nlohmann::json slot_to_json(const Slot& slot) {
    return {{"side", slot.side == Side::source ? "source" : "target"},
            {"kind", slot.kind == SlotKind::circle ? "circle" : "interval"},
            {"index", slot.index}};
}

Slot slot_from_json(const nlohmann::json& j) {
    Slot slot;
    std::string side = j.at("side").get<std::string>();
    std::string kind = j.at("kind").get<std::string>();
    if (side == "source")
        slot.side = Side::source;
    else if (side == "target")
        slot.side = Side::target;
    else
        throw ValidationError("slot side must be source or target");
    if (kind == "circle")
        slot.kind = SlotKind::circle;
    else if (kind == "interval")
        slot.kind = SlotKind::interval;
    else
        throw ValidationError("slot kind must be circle or interval");
    slot.index = j.at("index").get<std::int64_t>();
    return slot;
}

}  // namespace

nlohmann::json Cobordism::to_json() const {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& comp : components) {
        nlohmann::json cycles = nlohmann::json::array();
        for (const auto& cyc : comp.cycles) {
            if (cyc.kind == BoundaryCycle::Kind::marked_circle) {
                cycles.push_back({{"kind", "circle"},
                                  {"slot", slot_to_json(cyc.arcs.front().slot)},
                                  {"twist", cyc.arcs.front().twist}});
            } else {
                nlohmann::json arcs = nlohmann::json::array();
                for (const auto& arc : cyc.arcs)
                    arcs.push_back({{"slot", slot_to_json(arc.slot)}, {"twist", arc.twist}});
                cycles.push_back({{"kind", "arcs"}, {"arcs", std::move(arcs)}});
            }
        }
        comps.push_back({{"genus", bigint_to_json(comp.genus)},
                         {"crosscaps", bigint_to_json(comp.crosscaps)},
                         {"cycles", std::move(cycles)}});
    }
    return {{"source", {{"circles", source.circles}, {"intervals", source.intervals}}},
            {"target", {{"circles", target.circles}, {"intervals", target.intervals}}},
            {"components", std::move(comps)}};
}

Cobordism Cobordism::from_json(const nlohmann::json& doc) {
    ObjectSig src{doc.at("source").at("circles").get<std::int64_t>(),
                  doc.at("source").at("intervals").get<std::int64_t>()};
    ObjectSig tgt{doc.at("target").at("circles").get<std::int64_t>(),
                  doc.at("target").at("intervals").get<std::int64_t>()};
    std::vector<Component> comps;
    for (const auto& jc : doc.at("components")) {
        Component comp;
        comp.genus = bigint_from_json(jc.at("genus"));
        comp.crosscaps = bigint_from_json(jc.at("crosscaps"));
        for (const auto& jy : jc.at("cycles")) {
            std::string kind = jy.at("kind").get<std::string>();
            if (kind == "circle") {
                comp.cycles.push_back(
                    BoundaryCycle::circle(slot_from_json(jy.at("slot")),
                                          jy.at("twist").get<std::uint8_t>()));
            } else if (kind == "arcs") {
                std::vector<MarkedArc> arcs;
                for (const auto& ja : jy.at("arcs"))
                    arcs.push_back(
                        {slot_from_json(ja.at("slot")), ja.at("twist").get<std::uint8_t>()});
                comp.cycles.push_back(BoundaryCycle::arc_cycle_of(std::move(arcs)));
            } else {
                throw ValidationError("cycle kind must be circle or arcs");
            }
        }
        comps.push_back(std::move(comp));
    }
    return Cobordism(src, tgt, std::move(comps));
}

}  // namespace cob
