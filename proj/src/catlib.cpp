#include "cob/catlib.hpp"

#include <algorithm>
#include <map>

#include "cob/glue.hpp"

namespace cob {

std::string category_name(CategoryId cat) {
    switch (cat) {
        case CategoryId::K: return "K";
        case CategoryId::N: return "N";
        case CategoryId::O: return "O";
        case CategoryId::barN: return "barN";
        case CategoryId::barO: return "barO";
        case CategoryId::N0: return "N0";
        case CategoryId::N1: return "N1";
        case CategoryId::N1plus: return "N1plus";
        case CategoryId::N1minus: return "N1minus";
        case CategoryId::Nb: return "Nb";
        case CategoryId::S: return "S";
        case CategoryId::S_and_N: return "S_and_N";
        case CategoryId::S_and_O: return "S_and_O";
    }
    return "?";
}

std::optional<CategoryId> category_from_name(const std::string& name) {
    static const std::map<std::string, CategoryId> table = {
        {"K", CategoryId::K},           {"N", CategoryId::N},
        {"O", CategoryId::O},           {"barN", CategoryId::barN},
        {"barO", CategoryId::barO},     {"N0", CategoryId::N0},
        {"N1", CategoryId::N1},         {"N1plus", CategoryId::N1plus},
        {"N1minus", CategoryId::N1minus}, {"Nb", CategoryId::Nb},
        {"S", CategoryId::S},           {"S_and_N", CategoryId::S_and_N},
        {"S_and_O", CategoryId::S_and_O},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

namespace {

Slot src_c(std::int64_t i) { return {Side::source, SlotKind::circle, i}; }
Slot tgt_c(std::int64_t i) { return {Side::target, SlotKind::circle, i}; }
Slot src_i(std::int64_t i) { return {Side::source, SlotKind::interval, i}; }
Slot tgt_i(std::int64_t i) { return {Side::target, SlotKind::interval, i}; }

Cobordism one_component(ObjectSig src, ObjectSig tgt, Component comp) {
    std::vector<Component> comps;
    comps.push_back(std::move(comp));
    return Cobordism(src, tgt, std::move(comps));
}

}  // namespace

Cobordism generator(const std::string& name) {
    if (name == "disc_in") {
        Component d;
        d.cycles.push_back(BoundaryCycle::circle(tgt_c(0), 0));
        return one_component({0, 0}, {1, 0}, std::move(d));
    }
    if (name == "disc_out") {
        Component d;
        d.cycles.push_back(BoundaryCycle::circle(src_c(0), 0));
        return one_component({1, 0}, {0, 0}, std::move(d));
    }
    if (name == "pants_in") {
        Component p;
        p.cycles.push_back(BoundaryCycle::circle(src_c(0), 0));
        p.cycles.push_back(BoundaryCycle::circle(src_c(1), 0));
        p.cycles.push_back(BoundaryCycle::circle(tgt_c(0), 0));
        return one_component({2, 0}, {1, 0}, std::move(p));
    }
    if (name == "pants_out") {
        Component p;
        p.cycles.push_back(BoundaryCycle::circle(src_c(0), 0));
        p.cycles.push_back(BoundaryCycle::circle(tgt_c(0), 0));
        p.cycles.push_back(BoundaryCycle::circle(tgt_c(1), 0));
        return one_component({1, 0}, {2, 0}, std::move(p));
    }
    if (name == "cyl") return identity({1, 0});
    if (name == "odisc_in") {
        Component d;
        d.cycles.push_back(BoundaryCycle::arc_cycle_of({{tgt_i(0), 0}}));
        return one_component({0, 0}, {0, 1}, std::move(d));
    }
    if (name == "odisc_out") {
        Component d;
        d.cycles.push_back(BoundaryCycle::arc_cycle_of({{src_i(0), 0}}));
        return one_component({0, 1}, {0, 0}, std::move(d));
    }
    if (name == "opants_in") {
        Component p;
        p.cycles.push_back(BoundaryCycle::arc_cycle_of(
            {{src_i(0), 0}, {src_i(1), 0}, {tgt_i(0), 0}}));
        return one_component({0, 2}, {0, 1}, std::move(p));
    }
    if (name == "opants_out") {
        Component p;
        p.cycles.push_back(BoundaryCycle::arc_cycle_of(
            {{src_i(0), 0}, {tgt_i(1), 0}, {tgt_i(0), 0}}));
        return one_component({0, 1}, {0, 2}, std::move(p));
    }
    if (name == "ocyl") return identity({0, 1});
    if (name == "sym_cc") {
        Component a, b;
        a.cycles.push_back(BoundaryCycle::circle(src_c(0), 0));
        a.cycles.push_back(BoundaryCycle::circle(tgt_c(1), 0));
        b.cycles.push_back(BoundaryCycle::circle(src_c(1), 0));
        b.cycles.push_back(BoundaryCycle::circle(tgt_c(0), 0));
        std::vector<Component> comps;
        comps.push_back(std::move(a));
        comps.push_back(std::move(b));
        return Cobordism({2, 0}, {2, 0}, std::move(comps));
    }
    if (name == "sym_ii") {
        Component a, b;
        a.cycles.push_back(BoundaryCycle::arc_cycle_of({{src_i(0), 0}, {tgt_i(1), 0}}));
        b.cycles.push_back(BoundaryCycle::arc_cycle_of({{src_i(1), 0}, {tgt_i(0), 0}}));
        std::vector<Component> comps;
        comps.push_back(std::move(a));
        comps.push_back(std::move(b));
        return Cobordism({0, 2}, {0, 2}, std::move(comps));
    }
    if (name == "sym_ci") {
        // in the skeleton with circles listed before intervals this braiding
        // component is the identity wiring of (1,1)
        return identity({1, 1});
    }
    if (name == "whistle_co") {
        Component w;
        w.cycles.push_back(BoundaryCycle::circle(src_c(0), 0));
        w.cycles.push_back(BoundaryCycle::arc_cycle_of({{tgt_i(0), 0}}));
        return one_component({1, 0}, {0, 1}, std::move(w));
    }
    if (name == "whistle_oc") {
        Component w;
        w.cycles.push_back(BoundaryCycle::arc_cycle_of({{src_i(0), 0}}));
        w.cycles.push_back(BoundaryCycle::circle(tgt_c(0), 0));
        return one_component({0, 1}, {1, 0}, std::move(w));
    }
    if (name == "rp2_cyl") {
        Component p;
        p.crosscaps = 1;
        p.cycles.push_back(BoundaryCycle::circle(src_c(0), 0));
        p.cycles.push_back(BoundaryCycle::circle(tgt_c(0), 0));
        return one_component({1, 0}, {1, 0}, std::move(p));
    }
    if (name == "mobius") {
        Component m;
        m.crosscaps = 1;
        m.cycles.push_back(BoundaryCycle::circle(tgt_c(0), 0));
        return one_component({0, 0}, {1, 0}, std::move(m));
    }
    if (name == "twist_circle") {
        Component c;
        c.cycles.push_back(BoundaryCycle::circle(src_c(0), 0));
        c.cycles.push_back(BoundaryCycle::circle(tgt_c(0), 1));
        return one_component({1, 0}, {1, 0}, std::move(c));
    }
    if (name == "twist_interval") {
        Component b;
        b.cycles.push_back(BoundaryCycle::arc_cycle_of({{src_i(0), 0}, {tgt_i(0), 1}}));
        return one_component({0, 1}, {0, 1}, std::move(b));
    }
    throw UnknownGenerator("unknown generator '" + name + "'");
}

const std::vector<std::string>& generator_names() {
    static const std::vector<std::string> names = {
        "disc_in",  "disc_out",  "pants_in",   "pants_out",  "cyl",
        "odisc_in", "odisc_out", "opants_in",  "opants_out", "ocyl",
        "sym_cc",   "sym_ii",    "sym_ci",     "whistle_co", "whistle_oc",
        "rp2_cyl",  "mobius",    "twist_circle", "twist_interval"};
    return names;
}

Cobordism connecting(std::int64_t k) {
    if (k < 1) throw ValidationError("connecting: k must be at least 1");
    std::vector<Component> comps;
    for (std::int64_t i = 0; i < k; ++i) {
        Component d;
        d.cycles.push_back(BoundaryCycle::circle(tgt_c(i), 0));
        comps.push_back(std::move(d));
    }
    return Cobordism({0, 0}, {k, 0}, std::move(comps));
}

Cobordism tau(std::int64_t n) {
    if (n < 0) throw ValidationError("tau: n must be non-negative");
    Component p;
    p.crosscaps = 1;
    for (std::int64_t i = 0; i < n; ++i)
        p.cycles.push_back(BoundaryCycle::circle(src_c(i), 0));
    p.cycles.push_back(BoundaryCycle::circle(tgt_c(0), 0));
    return one_component({n, 0}, {1, 0}, std::move(p));
}

namespace {

bool has_free_boundary(const Cobordism& c) {
    for (const auto& comp : c.components)
        for (const auto& cyc : comp.cycles)
            if (cyc.kind == BoundaryCycle::Kind::arc_cycle) return true;
    return false;
}

bool has_closed_component(const Cobordism& c) {
    for (const auto& comp : c.components)
        if (comp.cycles.empty()) return true;
    return false;
}

bool all_orientable(const Cobordism& c) {
    for (const auto& comp : c.components)
        if (!comp.crosscaps.is_zero()) return false;
    return true;
}

bool every_component_hits_target(const Cobordism& c) {
    for (const auto& comp : c.components) {
        bool hits = false;
        for (const auto& cyc : comp.cycles)
            for (const auto& arc : cyc.arcs)
                if (arc.slot.side == Side::target) hits = true;
        if (!hits) return false;
    }
    return true;
}

}  // namespace

bool in_category(const Cobordism& c, CategoryId cat) {
    switch (cat) {
        case CategoryId::K:
            return true;
        case CategoryId::N:
            return c.source.closed() && c.target.closed() && !has_free_boundary(c);
        case CategoryId::O:
            return c.source.open_only() && c.target.open_only() && !has_closed_component(c);
        case CategoryId::barN:
            return c.source.closed() && c.target.closed();
        case CategoryId::barO:
            return c.source.open_only() && c.target.open_only();
        case CategoryId::N0:
            return c.source.empty() && c.target.empty() && !has_free_boundary(c);
        case CategoryId::N1:
            return c.source == ObjectSig{1, 0} && c.target == ObjectSig{1, 0} &&
                   c.components.size() == 1 && !has_free_boundary(c);
        case CategoryId::N1plus:
            return in_category(c, CategoryId::N1) && all_orientable(c);
        case CategoryId::N1minus:
            return in_category(c, CategoryId::N1) &&
                   (!all_orientable(c) || c.components.front().genus.is_zero());
        case CategoryId::Nb:
            return in_category(c, CategoryId::N) && every_component_hits_target(c);
        case CategoryId::S:
            return all_orientable(c);
        case CategoryId::S_and_N:
            return in_category(c, CategoryId::N) && all_orientable(c);
        case CategoryId::S_and_O:
            return in_category(c, CategoryId::O) && all_orientable(c);
    }
    return false;
}

Cobordism conn_closed(const BigInt& genus, const BigInt& crosscaps, std::int64_t windows,
                      std::int64_t src_circles, std::int64_t tgt_circles) {
    Component comp;
    comp.genus = genus;
    comp.crosscaps = crosscaps;
    for (std::int64_t i = 0; i < src_circles; ++i)
        comp.cycles.push_back(BoundaryCycle::circle(src_c(i), 0));
    for (std::int64_t i = 0; i < tgt_circles; ++i)
        comp.cycles.push_back(BoundaryCycle::circle(tgt_c(i), 0));
    for (std::int64_t i = 0; i < windows; ++i)
        comp.cycles.push_back(BoundaryCycle::window());
    return one_component({src_circles, 0}, {tgt_circles, 0}, std::move(comp));
}

Cobordism conn_endo(const BigInt& genus, const BigInt& crosscaps, int type,
                    std::int64_t windows) {
    Component comp;
    comp.genus = genus;
    comp.crosscaps = crosscaps;
    comp.cycles.push_back(BoundaryCycle::circle(src_c(0), 0));
    comp.cycles.push_back(BoundaryCycle::circle(tgt_c(0), type ? 1 : 0));
    for (std::int64_t i = 0; i < windows; ++i)
        comp.cycles.push_back(BoundaryCycle::window());
    return one_component({1, 0}, {1, 0}, std::move(comp));
}

Cobordism closed_surface(const BigInt& genus, const BigInt& crosscaps) {
    Component comp;
    comp.genus = genus;
    comp.crosscaps = crosscaps;
    return one_component({0, 0}, {0, 0}, std::move(comp));
}

Cobordism open_endo(const BigInt& genus, const BigInt& crosscaps, std::int64_t windows) {
    Component comp;
    comp.genus = genus;
    comp.crosscaps = crosscaps;
    comp.cycles.push_back(BoundaryCycle::arc_cycle_of({{src_i(0), 0}, {tgt_i(0), 0}}));
    for (std::int64_t i = 0; i < windows; ++i)
        comp.cycles.push_back(BoundaryCycle::window());
    return one_component({0, 1}, {0, 1}, std::move(comp));
}

Cobordism whistle_endo(const BigInt& genus, const BigInt& crosscaps, std::int64_t windows) {
    Component comp;
    comp.genus = genus;
    comp.crosscaps = crosscaps;
    comp.cycles.push_back(BoundaryCycle::arc_cycle_of({{src_i(0), 0}}));
    comp.cycles.push_back(BoundaryCycle::arc_cycle_of({{tgt_i(0), 0}}));
    for (std::int64_t i = 0; i < windows; ++i)
        comp.cycles.push_back(BoundaryCycle::window());
    return one_component({0, 1}, {0, 1}, std::move(comp));
}

Cobordism free_disc() {
    Component comp;
    comp.cycles.push_back(BoundaryCycle::window());
    return one_component({0, 0}, {0, 0}, std::move(comp));
}

Cobordism cylinder_with_windows(std::int64_t k) {
    return conn_endo(0, 0, 0, k);
}

Cobordism connect(const ObjectSig& a, const ObjectSig& b, CategoryId cat) {
    const bool closed_cat = cat == CategoryId::N || cat == CategoryId::barN ||
                            cat == CategoryId::S_and_N || cat == CategoryId::Nb ||
                            cat == CategoryId::N0 || cat == CategoryId::N1 ||
                            cat == CategoryId::N1plus || cat == CategoryId::N1minus;
    const bool open_cat =
        cat == CategoryId::O || cat == CategoryId::barO || cat == CategoryId::S_and_O;
    if (closed_cat && (!a.closed() || !b.closed()))
        throw NotStronglyConnected("closed category has no open objects");
    if (open_cat && (!a.open_only() || !b.open_only()))
        throw NotStronglyConnected("open category has no closed objects");
    if (cat == CategoryId::N0 && !(a.empty() && b.empty()))
        throw NotStronglyConnected("N0 has only the empty object");
    if ((cat == CategoryId::N1 || cat == CategoryId::N1plus || cat == CategoryId::N1minus) &&
        !(a == ObjectSig{1, 0} && b == ObjectSig{1, 0}))
        throw NotStronglyConnected("N1 has only the circle");

    std::vector<Component> comps;
    if (cat == CategoryId::Nb) {
        // every component must reach the target; cap extra sources into one
        // crosscapped component instead of closing them off
        if (a.circles > 0 && b.circles == 0)
            throw NotStronglyConnected("Nb has no morphism to the empty manifold");
        std::int64_t wired = std::min(a.circles, b.circles);
        if (a.circles <= b.circles) {
            for (std::int64_t i = 0; i < wired; ++i) {
                Component cyl;
                cyl.cycles.push_back(BoundaryCycle::circle(src_c(i), 0));
                cyl.cycles.push_back(BoundaryCycle::circle(tgt_c(i), 0));
                comps.push_back(std::move(cyl));
            }
            for (std::int64_t i = wired; i < b.circles; ++i) {
                Component d;
                d.cycles.push_back(BoundaryCycle::circle(tgt_c(i), 0));
                comps.push_back(std::move(d));
            }
        } else {
            Component merge;
            merge.crosscaps = 1;
            for (std::int64_t i = b.circles - 1; i < a.circles; ++i)
                merge.cycles.push_back(BoundaryCycle::circle(src_c(i), 0));
            merge.cycles.push_back(BoundaryCycle::circle(tgt_c(b.circles - 1), 0));
            comps.push_back(std::move(merge));
            for (std::int64_t i = 0; i < b.circles - 1; ++i) {
                Component cyl;
                cyl.cycles.push_back(BoundaryCycle::circle(src_c(i), 0));
                cyl.cycles.push_back(BoundaryCycle::circle(tgt_c(i), 0));
                comps.push_back(std::move(cyl));
            }
        }
        return Cobordism(a, b, std::move(comps));
    }

    std::int64_t wc = std::min(a.circles, b.circles);
    for (std::int64_t i = 0; i < wc; ++i) {
        Component cyl;
        cyl.cycles.push_back(BoundaryCycle::circle(src_c(i), 0));
        cyl.cycles.push_back(BoundaryCycle::circle(tgt_c(i), 0));
        comps.push_back(std::move(cyl));
    }
    for (std::int64_t i = wc; i < a.circles; ++i) {
        Component d;
        d.cycles.push_back(BoundaryCycle::circle(src_c(i), 0));
        comps.push_back(std::move(d));
    }
    for (std::int64_t i = wc; i < b.circles; ++i) {
        Component d;
        d.cycles.push_back(BoundaryCycle::circle(tgt_c(i), 0));
        comps.push_back(std::move(d));
    }
    std::int64_t wi = std::min(a.intervals, b.intervals);
    for (std::int64_t i = 0; i < wi; ++i) {
        Component sq;
        sq.cycles.push_back(BoundaryCycle::arc_cycle_of({{src_i(i), 0}, {tgt_i(i), 0}}));
        comps.push_back(std::move(sq));
    }
    for (std::int64_t i = wi; i < a.intervals; ++i) {
        Component d;
        d.cycles.push_back(BoundaryCycle::arc_cycle_of({{src_i(i), 0}}));
        comps.push_back(std::move(d));
    }
    for (std::int64_t i = wi; i < b.intervals; ++i) {
        Component d;
        d.cycles.push_back(BoundaryCycle::arc_cycle_of({{tgt_i(i), 0}}));
        comps.push_back(std::move(d));
    }
    return Cobordism(a, b, std::move(comps));
}

}  // namespace cob
