#include "cob/glue.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

namespace cob {

ParityUnionFind::ParityUnionFind(std::size_t n)
    : parent_(n), par_(n, 0), rank_(n, 0), inconsistent_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
}

std::pair<std::size_t, std::uint8_t> ParityUnionFind::find(std::size_t x) {
    if (parent_[x] == x) return {x, 0};
    auto [root, p] = find(parent_[x]);
    parent_[x] = root;
    par_[x] = par_[x] ^ p;
    return {root, par_[x]};
}

void ParityUnionFind::unite(std::size_t x, std::size_t y, std::uint8_t parity) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) {
        if ((px ^ py) != parity) inconsistent_[rx] = 1;
        return;
    }
    if (rank_[rx] < rank_[ry]) {
        std::swap(rx, ry);
        std::swap(px, py);
    }
    parent_[ry] = rx;
    par_[ry] = px ^ py ^ parity;
    inconsistent_[rx] |= inconsistent_[ry];
    if (rank_[rx] == rank_[ry]) ++rank_[rx];
}

bool ParityUnionFind::consistent(std::size_t x) { return !inconsistent_[find(x).first]; }
std::uint8_t ParityUnionFind::parity_to_root(std::size_t x) { return find(x).second; }
std::size_t ParityUnionFind::root(std::size_t x) { return find(x).first; }

namespace {

// walk_forward: the component's reference walk traverses the marked piece in
// the direction of its parametrization
bool walk_forward(Side side, std::uint8_t twist) {
    return (side == Side::target) == (twist == 0);
}

struct ArcRef {
    std::size_t piece;
    std::size_t cycle;
    std::size_t pos;
};

struct Segment {
    bool marked = false;
    std::size_t piece = 0;
    std::size_t start = 0;  // node ids; stored walk runs start -> end
    std::size_t end = 0;
    MarkedArc arc;  // valid when marked
};

struct TracedCycle {
    // (segment index, traversed along stored walk direction)
    std::vector<std::pair<std::size_t, bool>> steps;
};

}  // namespace

Cobordism compose(const Cobordism& f, const Cobordism& g) {
    if (f.target != g.source)
        throw SignatureMismatch("compose: target " + f.target.to_string() +
                                " does not match source " + g.source.to_string());

    const std::size_t nf = f.components.size();
    const std::size_t n_pieces = nf + g.components.size();
    auto piece_at = [&](std::size_t p) -> const Component& {
        return p < nf ? f.components[p] : g.components[p - nf];
    };
    auto is_glued_slot = [&](std::size_t piece, const Slot& slot) {
        return piece < nf ? slot.side == Side::target : slot.side == Side::source;
    };

    // locate every middle-object slot on its side
    std::map<std::int64_t, std::pair<ArcRef, std::uint8_t>> f_circles, g_circles;
    std::map<std::int64_t, std::pair<ArcRef, std::uint8_t>> f_arcs, g_arcs;
    for (std::size_t p = 0; p < n_pieces; ++p) {
        const Component& comp = piece_at(p);
        for (std::size_t cyc = 0; cyc < comp.cycles.size(); ++cyc) {
            const auto& cycle = comp.cycles[cyc];
            for (std::size_t pos = 0; pos < cycle.arcs.size(); ++pos) {
                const MarkedArc& arc = cycle.arcs[pos];
                if (!is_glued_slot(p, arc.slot)) continue;
                auto& table = arc.slot.kind == SlotKind::circle
                                  ? (p < nf ? f_circles : g_circles)
                                  : (p < nf ? f_arcs : g_arcs);
                table[arc.slot.index] = {{p, cyc, pos}, arc.twist};
            }
        }
    }

    ParityUnionFind uf(n_pieces);

    // circle gluings: the two fully marked cycles become interior
    std::map<std::pair<std::size_t, std::size_t>, bool> glued_cycle;  // (piece, cycle)
    for (std::int64_t i = 0; i < f.target.circles; ++i) {
        const auto& [fr, tf] = f_circles.at(i);
        const auto& [gr, tg] = g_circles.at(i);
        uf.unite(fr.piece, gr.piece, tf ^ tg);
        glued_cycle[{fr.piece, fr.cycle}] = true;
        glued_cycle[{gr.piece, gr.cycle}] = true;
    }

    // arc gluings: shared endpoint nodes, parametrization begin to begin
    std::size_t n_nodes = 0;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>,
             std::pair<std::size_t, std::size_t>>
        arc_nodes;  // (piece, cycle, pos) -> (B node, E node)
    auto arc_key = [](const ArcRef& r) { return std::make_tuple(r.piece, r.cycle, r.pos); };
    for (std::int64_t i = 0; i < f.target.intervals; ++i) {
        const auto& [fr, tf] = f_arcs.at(i);
        const auto& [gr, tg] = g_arcs.at(i);
        uf.unite(fr.piece, gr.piece, tf ^ tg);
        std::size_t b = n_nodes++, e = n_nodes++;
        arc_nodes[arc_key(fr)] = {b, e};
        arc_nodes[arc_key(gr)] = {b, e};
    }

    // chosen flips: for orientable classes a satisfying assignment of the
    // parity system; immaterial for non-orientable ones
    std::vector<std::uint8_t> flip(n_pieces, 0);
    std::vector<bool> class_orientable(n_pieces, false);
    for (std::size_t p = 0; p < n_pieces; ++p) flip[p] = uf.parity_to_root(p);
    std::map<std::size_t, bool> root_has_crosscap;
    for (std::size_t p = 0; p < n_pieces; ++p)
        if (!piece_at(p).crosscaps.is_zero()) root_has_crosscap[uf.root(p)] = true;
    auto class_is_orientable = [&](std::size_t p) {
        std::size_t r = uf.root(p);
        return uf.consistent(r) && !root_has_crosscap.count(r);
    };

    // build the doubled-edge graph
    std::vector<Segment> segments;
    struct PendingCircle {
        std::size_t piece;
        MarkedArc arc;
    };
    std::vector<PendingCircle> pending_circles;
    std::vector<std::size_t> pending_windows;  // piece ids

    for (std::size_t p = 0; p < n_pieces; ++p) {
        const Component& comp = piece_at(p);
        for (std::size_t cyc = 0; cyc < comp.cycles.size(); ++cyc) {
            const auto& cycle = comp.cycles[cyc];
            if (cycle.kind == BoundaryCycle::Kind::marked_circle) {
                if (!glued_cycle.count({p, cyc}))
                    pending_circles.push_back({p, cycle.arcs.front()});
                continue;
            }
            if (cycle.arcs.empty()) {
                pending_windows.push_back(p);
                continue;
            }
            const std::size_t n = cycle.arcs.size();
            std::vector<std::pair<std::size_t, std::size_t>> nodes(n);  // (B, E)
            std::vector<bool> glued(n, false);
            for (std::size_t a = 0; a < n; ++a) {
                if (auto it = arc_nodes.find(arc_key({p, cyc, a})); it != arc_nodes.end()) {
                    nodes[a] = it->second;
                    glued[a] = true;
                } else {
                    nodes[a] = {n_nodes, n_nodes + 1};
                    n_nodes += 2;
                }
            }
            for (std::size_t a = 0; a < n; ++a) {
                const MarkedArc& arc = cycle.arcs[a];
                bool wf = walk_forward(arc.slot.side, arc.twist);
                if (!glued[a]) {
                    Segment seg;
                    seg.marked = true;
                    seg.piece = p;
                    seg.arc = arc;
                    seg.start = wf ? nodes[a].first : nodes[a].second;
                    seg.end = wf ? nodes[a].second : nodes[a].first;
                    segments.push_back(seg);
                }
                // free arc from the exit of arc a to the entry of arc a+1
                std::size_t next = (a + 1) % n;
                const MarkedArc& narc = cycle.arcs[next];
                bool nwf = walk_forward(narc.slot.side, narc.twist);
                Segment free_seg;
                free_seg.piece = p;
                free_seg.start = wf ? nodes[a].second : nodes[a].first;
                free_seg.end = nwf ? nodes[next].first : nodes[next].second;
                segments.push_back(free_seg);
            }
        }
    }

    // each node carries exactly two segment ends
    std::vector<std::vector<std::pair<std::size_t, bool>>> at_node(n_nodes);
    for (std::size_t s = 0; s < segments.size(); ++s) {
        at_node[segments[s].start].push_back({s, true});
        at_node[segments[s].end].push_back({s, false});
    }
    for (std::size_t v = 0; v < n_nodes; ++v)
        if (at_node[v].size() != 2)
            throw InternalInvariantError("boundary walk: node degree != 2");

    // trace the resulting boundary cycles
    std::vector<TracedCycle> traced;
    std::vector<char> seen(segments.size(), 0);
    for (std::size_t s0 = 0; s0 < segments.size(); ++s0) {
        if (seen[s0]) continue;
        TracedCycle tc;
        std::size_t s = s0;
        bool fwd = true;
        while (!seen[s]) {
            seen[s] = 1;
            tc.steps.push_back({s, fwd});
            std::size_t exit_node = fwd ? segments[s].end : segments[s].start;
            auto [a, a_at_start] = at_node[exit_node][0];
            auto [b, b_at_start] = at_node[exit_node][1];
            // we exited through the entry (s, at_start == !fwd); continue via the other
            bool take_b = (a == s && a_at_start != fwd);
            s = take_b ? b : a;
            fwd = take_b ? b_at_start : a_at_start;
        }
        traced.push_back(std::move(tc));
    }

    // per-class bookkeeping
    struct ClassData {
        BigInt chi = 0;
        std::vector<BoundaryCycle> cycles;
        bool orientable = true;
        bool present = false;
    };
    std::map<std::size_t, ClassData> classes;
    for (std::size_t p = 0; p < n_pieces; ++p) {
        auto& cd = classes[uf.root(p)];
        cd.present = true;
        cd.chi += piece_at(p).euler_char();
        cd.orientable = class_is_orientable(p);
    }
    for (std::int64_t i = 0; i < f.target.intervals; ++i) {
        auto r = uf.root(f_arcs.at(i).first.piece);
        classes.at(r).chi -= 1;
    }

    for (const auto& pc : pending_circles) {
        auto& cd = classes.at(uf.root(pc.piece));
        MarkedArc arc = pc.arc;
        if (cd.orientable) arc.twist ^= flip[pc.piece];
        cd.cycles.push_back(BoundaryCycle::circle(arc.slot, arc.twist));
    }
    for (std::size_t p : pending_windows)
        classes.at(uf.root(p)).cycles.push_back(BoundaryCycle::window());

    for (const auto& tc : traced) {
        std::size_t piece0 = segments[tc.steps.front().first].piece;
        std::size_t r = uf.root(piece0);
        auto& cd = classes.at(r);
        for (const auto& [s, fwd] : tc.steps)
            if (uf.root(segments[s].piece) != r)
                throw InternalInvariantError("boundary walk crossed component classes");

        std::vector<MarkedArc> arcs;
        if (cd.orientable) {
            // the traversal must be uniformly coherent or uniformly reversed
            std::optional<bool> along_coherent;
            for (const auto& [s, fwd] : tc.steps) {
                bool coherent_fwd = flip[segments[s].piece] == 0;
                bool along = fwd == coherent_fwd;
                if (!along_coherent)
                    along_coherent = along;
                else if (*along_coherent != along)
                    throw InternalInvariantError("incoherent boundary walk orientation");
            }
            for (const auto& [s, fwd] : tc.steps) {
                if (!segments[s].marked) continue;
                MarkedArc arc = segments[s].arc;
                arc.twist ^= flip[segments[s].piece];
                arcs.push_back(arc);
            }
            if (!*along_coherent) std::reverse(arcs.begin(), arcs.end());
        } else {
            for (const auto& [s, fwd] : tc.steps)
                if (segments[s].marked) arcs.push_back(segments[s].arc);
        }
        cd.cycles.push_back(BoundaryCycle::arc_cycle_of(std::move(arcs)));
    }

    // recover genus or crosscap count from chi and the traced cycle count
    std::vector<Component> result;
    BigInt chi_total = 0;
    for (auto& [root, cd] : classes) {
        if (!cd.present) continue;
        chi_total += cd.chi;
        Component comp;
        BigInt b = static_cast<long long>(cd.cycles.size());
        BigInt defect = BigInt(2) - cd.chi - b;
        if (cd.orientable) {
            BigInt q, rem;
            BigInt::divmod(defect, 2, q, rem);
            if (!rem.is_zero() || q.is_negative())
                throw InternalInvariantError("orientable component with odd or negative 2-2g");
            comp.genus = q;
            comp.crosscaps = 0;
        } else {
            if (defect <= 0)
                throw InternalInvariantError("non-orientable component needs k >= 1");
            comp.genus = 0;
            comp.crosscaps = defect;
        }
        comp.cycles = std::move(cd.cycles);
        result.push_back(std::move(comp));
    }

    BigInt expected = euler_char(f) + euler_char(g) - BigInt(f.target.intervals);
    if (chi_total != expected)
        throw InternalInvariantError("Euler characteristic bookkeeping mismatch");

    return Cobordism(f.source, g.target, std::move(result));
}

Cobordism tensor(const Cobordism& f, const Cobordism& g) {
    std::vector<Component> comps = f.components;
    for (Component comp : g.components) {
        for (auto& cyc : comp.cycles) {
            for (auto& arc : cyc.arcs) {
                const ObjectSig& shift = arc.slot.side == Side::source ? f.source : f.target;
                arc.slot.index +=
                    arc.slot.kind == SlotKind::circle ? shift.circles : shift.intervals;
            }
        }
        comps.push_back(std::move(comp));
    }
    return Cobordism(f.source + g.source, f.target + g.target, std::move(comps));
}

Cobordism identity(const ObjectSig& sig) {
    std::vector<Component> comps;
    for (std::int64_t i = 0; i < sig.circles; ++i) {
        Component cylinder;
        cylinder.cycles.push_back(
            BoundaryCycle::circle({Side::source, SlotKind::circle, i}, 0));
        cylinder.cycles.push_back(
            BoundaryCycle::circle({Side::target, SlotKind::circle, i}, 0));
        comps.push_back(std::move(cylinder));
    }
    for (std::int64_t i = 0; i < sig.intervals; ++i) {
        Component square;
        square.cycles.push_back(BoundaryCycle::arc_cycle_of(
            {{{Side::source, SlotKind::interval, i}, 0},
             {{Side::target, SlotKind::interval, i}, 0}}));
        comps.push_back(std::move(square));
    }
    return Cobordism(sig, sig, std::move(comps));
}

}  // namespace cob
