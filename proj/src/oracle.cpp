#include "cob/oracle.hpp"

#include <algorithm>

#include "cob/glue.hpp"

namespace cob::oracle {

namespace {

// small builder vocabulary for the committed generator models
struct WordBuilder {
    Complex cx;
    std::vector<FaceEdge> word;

    std::int64_t fresh() { return cx.n_edges++; }

    void put(std::int64_t edge, int dir) { word.push_back({edge, dir}); }

    // marked circle slot carried by one edge; the face walks it along the
    // parametrization for twist-0 targets and against it for twist-0 sources
    void marked_circle(Slot slot, std::uint8_t twist) {
        std::int64_t tentacle = fresh();
        std::int64_t c = fresh();
        bool fwd = (slot.side == Side::target) == (twist == 0);
        put(tentacle, +1);
        put(c, fwd ? +1 : -1);
        put(tentacle, -1);
        cx.marks[slot] = {c, +1};
    }

    // one whole boundary circle made of marked arcs and free arcs between them
    void arc_boundary(const std::vector<MarkedArc>& arcs, bool tentacled) {
        std::int64_t tentacle = tentacled ? fresh() : -1;
        if (tentacled) put(tentacle, +1);
        for (const auto& arc : arcs) {
            std::int64_t m = fresh();
            bool fwd = (arc.slot.side == Side::target) == (arc.twist == 0);
            put(m, fwd ? +1 : -1);
            cx.marks[arc.slot] = {m, +1};
            std::int64_t free_edge = fresh();
            put(free_edge, +1);
        }
        if (tentacled) put(tentacle, -1);
    }

    void window() {
        std::int64_t tentacle = fresh();
        std::int64_t w = fresh();
        put(tentacle, +1);
        put(w, +1);
        put(tentacle, -1);
    }

    void handle() {
        std::int64_t a = fresh(), b = fresh();
        put(a, +1);
        put(b, +1);
        put(a, -1);
        put(b, -1);
    }

    void crosscap() {
        std::int64_t c = fresh();
        put(c, +1);
        put(c, +1);
    }

    Complex finish(ObjectSig src, ObjectSig tgt) {
        if (word.empty()) {
            // closed sphere word a a^-1
            std::int64_t a = fresh();
            put(a, +1);
            put(a, -1);
        }
        cx.faces.push_back(std::move(word));
        cx.source = src;
        cx.target = tgt;
        return std::move(cx);
    }
};

Slot src_c(std::int64_t i) { return {Side::source, SlotKind::circle, i}; }
Slot tgt_c(std::int64_t i) { return {Side::target, SlotKind::circle, i}; }
Slot src_i(std::int64_t i) { return {Side::source, SlotKind::interval, i}; }
Slot tgt_i(std::int64_t i) { return {Side::target, SlotKind::interval, i}; }

std::int64_t small(const BigInt& v, const char* what) {
    if (!v.fits_int64()) throw ValidationError(std::string("oracle: ") + what + " too large");
    return v.to_int64();
}

}  // namespace

Complex generator_complex(const std::string& name) {
    WordBuilder wb;
    if (name == "disc_in") {
        wb.marked_circle(tgt_c(0), 0);
        return wb.finish({0, 0}, {1, 0});
    }
    if (name == "disc_out") {
        wb.marked_circle(src_c(0), 0);
        return wb.finish({1, 0}, {0, 0});
    }
    if (name == "pants_in") {
        wb.marked_circle(src_c(0), 0);
        wb.marked_circle(src_c(1), 0);
        wb.marked_circle(tgt_c(0), 0);
        return wb.finish({2, 0}, {1, 0});
    }
    if (name == "pants_out") {
        wb.marked_circle(src_c(0), 0);
        wb.marked_circle(tgt_c(0), 0);
        wb.marked_circle(tgt_c(1), 0);
        return wb.finish({1, 0}, {2, 0});
    }
    if (name == "cyl") return identity_complex({1, 0});
    if (name == "twist_circle") {
        wb.marked_circle(src_c(0), 0);
        wb.marked_circle(tgt_c(0), 1);
        return wb.finish({1, 0}, {1, 0});
    }
    if (name == "odisc_in") {
        wb.arc_boundary({{tgt_i(0), 0}}, false);
        return wb.finish({0, 0}, {0, 1});
    }
    if (name == "odisc_out") {
        wb.arc_boundary({{src_i(0), 0}}, false);
        return wb.finish({0, 1}, {0, 0});
    }
    if (name == "opants_in") {
        wb.arc_boundary({{src_i(0), 0}, {src_i(1), 0}, {tgt_i(0), 0}}, false);
        return wb.finish({0, 2}, {0, 1});
    }
    if (name == "opants_out") {
        wb.arc_boundary({{src_i(0), 0}, {tgt_i(1), 0}, {tgt_i(0), 0}}, false);
        return wb.finish({0, 1}, {0, 2});
    }
    if (name == "ocyl") return identity_complex({0, 1});
    if (name == "twist_interval") {
        wb.arc_boundary({{src_i(0), 0}, {tgt_i(0), 1}}, false);
        return wb.finish({0, 1}, {0, 1});
    }
    if (name == "sym_cc") {
        WordBuilder a, b;
        a.marked_circle(src_c(0), 0);
        a.marked_circle(tgt_c(1), 0);
        Complex ca = a.finish({2, 0}, {2, 0});
        b.cx.n_edges = ca.n_edges;
        b.marked_circle(src_c(1), 0);
        b.marked_circle(tgt_c(0), 0);
        Complex cb = b.finish({2, 0}, {2, 0});
        ca.faces.push_back(cb.faces.front());
        ca.n_edges = cb.n_edges;
        ca.marks.insert(cb.marks.begin(), cb.marks.end());
        return ca;
    }
    if (name == "sym_ii") {
        WordBuilder a, b;
        a.arc_boundary({{src_i(0), 0}, {tgt_i(1), 0}}, false);
        Complex ca = a.finish({0, 2}, {0, 2});
        b.cx.n_edges = ca.n_edges;
        b.arc_boundary({{src_i(1), 0}, {tgt_i(0), 0}}, false);
        Complex cb = b.finish({0, 2}, {0, 2});
        ca.faces.push_back(cb.faces.front());
        ca.n_edges = cb.n_edges;
        ca.marks.insert(cb.marks.begin(), cb.marks.end());
        return ca;
    }
    if (name == "sym_ci") return identity_complex({1, 1});
    if (name == "whistle_co") {
        wb.marked_circle(src_c(0), 0);
        wb.arc_boundary({{tgt_i(0), 0}}, true);
        return wb.finish({1, 0}, {0, 1});
    }
    if (name == "whistle_oc") {
        wb.arc_boundary({{src_i(0), 0}}, true);
        wb.marked_circle(tgt_c(0), 0);
        return wb.finish({0, 1}, {1, 0});
    }
    if (name == "mobius") {
        wb.marked_circle(tgt_c(0), 0);
        wb.crosscap();
        return wb.finish({0, 0}, {1, 0});
    }
    if (name == "rp2_cyl") {
        wb.marked_circle(src_c(0), 0);
        wb.marked_circle(tgt_c(0), 0);
        wb.crosscap();
        return wb.finish({1, 0}, {1, 0});
    }
    throw UnknownGenerator("oracle: unknown generator '" + name + "'");
}

Complex identity_complex(const ObjectSig& sig) {
    Complex out;
    out.source = sig;
    out.target = sig;
    for (std::int64_t i = 0; i < sig.circles; ++i) {
        // annulus [s+, e+, t-, e-], both circles marked
        std::int64_t s = out.n_edges++, e = out.n_edges++, t = out.n_edges++;
        out.faces.push_back({{s, +1}, {e, +1}, {t, -1}, {e, -1}});
        out.marks[src_c(i)] = {s, +1};
        out.marks[tgt_c(i)] = {t, +1};
    }
    for (std::int64_t i = 0; i < sig.intervals; ++i) {
        // square [m1-, f1+, m2+, f2+]
        std::int64_t m1 = out.n_edges++, f1 = out.n_edges++;
        std::int64_t m2 = out.n_edges++, f2 = out.n_edges++;
        out.faces.push_back({{m1, -1}, {f1, +1}, {m2, +1}, {f2, +1}});
        out.marks[src_i(i)] = {m1, +1};
        out.marks[tgt_i(i)] = {m2, +1};
    }
    return out;
}

Complex conn_complex(const BigInt& genus, const BigInt& crosscaps, std::int64_t windows,
                     std::int64_t src_circles, std::int64_t tgt_circles) {
    WordBuilder wb;
    for (std::int64_t i = 0; i < src_circles; ++i) wb.marked_circle(src_c(i), 0);
    for (std::int64_t i = 0; i < tgt_circles; ++i) wb.marked_circle(tgt_c(i), 0);
    for (std::int64_t i = 0; i < windows; ++i) wb.window();
    for (std::int64_t i = 0, n = small(genus, "genus"); i < n; ++i) wb.handle();
    for (std::int64_t i = 0, n = small(crosscaps, "crosscaps"); i < n; ++i) wb.crosscap();
    return wb.finish({src_circles, 0}, {tgt_circles, 0});
}

Complex tensor(const Complex& f, const Complex& g) {
    Complex out = f;
    for (const auto& face : g.faces) {
        auto shifted = face;
        for (auto& fe : shifted) fe.edge += f.n_edges;
        out.faces.push_back(std::move(shifted));
    }
    for (const auto& [slot, fe] : g.marks) {
        Slot moved = slot;
        const ObjectSig& shift = slot.side == Side::source ? f.source : f.target;
        moved.index += slot.kind == SlotKind::circle ? shift.circles : shift.intervals;
        out.marks[moved] = {fe.edge + f.n_edges, fe.dir};
    }
    out.n_edges += g.n_edges;
    out.source = f.source + g.source;
    out.target = f.target + g.target;
    return out;
}

Complex compose(const Complex& f, const Complex& g) {
    if (f.target != g.source)
        throw SignatureMismatch("oracle compose: " + f.target.to_string() + " vs " +
                                g.source.to_string());
    const std::int64_t total = f.n_edges + g.n_edges;
    ParityUnionFind uf(static_cast<std::size_t>(total));
    auto unite = [&](FaceEdge a, FaceEdge b) {
        uf.unite(static_cast<std::size_t>(a.edge), static_cast<std::size_t>(b.edge),
                 a.dir == b.dir ? 0 : 1);
    };
    for (std::int64_t i = 0; i < f.target.circles; ++i) {
        FaceEdge gm = g.marks.at(src_c(i));
        unite(f.marks.at(tgt_c(i)), {gm.edge + f.n_edges, gm.dir});
    }
    for (std::int64_t i = 0; i < f.target.intervals; ++i) {
        FaceEdge gm = g.marks.at(src_i(i));
        unite(f.marks.at(tgt_i(i)), {gm.edge + f.n_edges, gm.dir});
    }

    // contract: renumber edge classes, rewrite faces with effective directions
    std::map<std::size_t, std::int64_t> class_id;
    auto mapped = [&](FaceEdge fe) {
        auto [root, par] = uf.find(static_cast<std::size_t>(fe.edge));
        auto it = class_id.find(root);
        if (it == class_id.end()) it = class_id.emplace(root, (std::int64_t)class_id.size()).first;
        return FaceEdge{it->second, par ? -fe.dir : fe.dir};
    };
    Complex out;
    out.source = f.source;
    out.target = g.target;
    for (const auto& face : f.faces) {
        std::vector<FaceEdge> w;
        for (const auto& fe : face) w.push_back(mapped(fe));
        out.faces.push_back(std::move(w));
    }
    for (const auto& face : g.faces) {
        std::vector<FaceEdge> w;
        for (const auto& fe : face) w.push_back(mapped({fe.edge + f.n_edges, fe.dir}));
        out.faces.push_back(std::move(w));
    }
    for (const auto& [slot, fe] : f.marks)
        if (slot.side == Side::source) out.marks[slot] = mapped(fe);
    for (const auto& [slot, fe] : g.marks)
        if (slot.side == Side::target) out.marks[slot] = mapped({fe.edge + f.n_edges, fe.dir});
    out.n_edges = static_cast<std::int64_t>(class_id.size());
    return out;
}

std::vector<ComponentInvariants> classify(const Complex& complex) {
    const std::size_t ne = static_cast<std::size_t>(complex.n_edges);
    const std::size_t nf = complex.faces.size();

    // occurrences of each edge across face sides
    struct Use {
        std::size_t face;
        int dir;
    };
    std::vector<std::vector<Use>> uses(ne);
    for (std::size_t fi = 0; fi < nf; ++fi)
        for (const auto& fe : complex.faces[fi])
            uses[static_cast<std::size_t>(fe.edge)].push_back({fi, fe.dir});

    // vertices: tail 2e, head 2e+1, glued via face corners
    ParityUnionFind verts(2 * ne);
    auto vstart = [&](FaceEdge fe) {
        return static_cast<std::size_t>(2 * fe.edge + (fe.dir > 0 ? 0 : 1));
    };
    auto vend = [&](FaceEdge fe) {
        return static_cast<std::size_t>(2 * fe.edge + (fe.dir > 0 ? 1 : 0));
    };
    for (const auto& face : complex.faces) {
        for (std::size_t i = 0; i < face.size(); ++i) {
            const FaceEdge& cur = face[i];
            const FaceEdge& nxt = face[(i + 1) % face.size()];
            verts.unite(vend(cur), vstart(nxt), 0);
        }
    }

    // components over faces, orientation propagation over interior edges
    ParityUnionFind comp(nf);
    ParityUnionFind orient(nf);
    for (std::size_t e = 0; e < ne; ++e) {
        const auto& u = uses[e];
        if (u.size() > 2) throw InternalInvariantError("oracle: edge used more than twice");
        if (u.size() == 2) {
            comp.unite(u[0].face, u[1].face, 0);
            orient.unite(u[0].face, u[1].face, u[0].dir == u[1].dir ? 1 : 0);
        }
    }

    // counts per face-component
    std::map<std::size_t, ComponentInvariants> data;
    std::map<std::size_t, BigInt> chi;
    for (std::size_t fi = 0; fi < nf; ++fi) {
        auto r = comp.root(fi);
        chi[r] += 1;  // faces
        data[r];      // ensure entry
    }
    std::vector<std::size_t> edge_comp(ne);
    for (std::size_t e = 0; e < ne; ++e) {
        if (uses[e].empty()) throw InternalInvariantError("oracle: dangling edge");
        edge_comp[e] = comp.root(uses[e][0].face);
        chi[edge_comp[e]] -= 1;  // edges
    }
    std::map<std::size_t, std::size_t> vertex_comp;
    for (std::size_t v = 0; v < 2 * ne; ++v) {
        std::size_t r = verts.root(v);
        std::size_t c = edge_comp[v / 2];
        auto it = vertex_comp.find(r);
        if (it == vertex_comp.end()) {
            vertex_comp[r] = c;
            chi[c] += 1;  // vertices
        } else if (it->second != c) {
            throw InternalInvariantError("oracle: vertex shared across components");
        }
    }

    for (auto& [root, inv] : data) inv.orientable = orient.consistent(root);

    // boundary cycles: the free edges form a 2-regular graph on their
    // endpoint classes, so cycles are its connected components
    std::vector<std::size_t> boundary_edges;
    for (std::size_t e = 0; e < ne; ++e)
        if (uses[e].size() == 1) boundary_edges.push_back(e);
    std::map<std::size_t, std::vector<std::size_t>> at_vertex;
    for (std::size_t i = 0; i < boundary_edges.size(); ++i) {
        std::size_t e = boundary_edges[i];
        at_vertex[verts.root(2 * e)].push_back(i);
        at_vertex[verts.root(2 * e + 1)].push_back(i);
    }
    ParityUnionFind bcyc(boundary_edges.size());
    for (const auto& [v, ends] : at_vertex) {
        if (ends.size() != 2)
            throw InternalInvariantError("oracle: boundary vertex degree != 2");
        bcyc.unite(ends[0], ends[1], 0);
    }
    std::map<std::size_t, char> cycle_roots;
    for (std::size_t i = 0; i < boundary_edges.size(); ++i) {
        std::size_t r = bcyc.root(i);
        if (cycle_roots[r]) continue;
        cycle_roots[r] = 1;
        ++data[edge_comp[boundary_edges[i]]].boundary_cycles;
    }

    // marked slots per component
    for (const auto& [slot, fe] : complex.marks) {
        std::size_t c = edge_comp[static_cast<std::size_t>(fe.edge)];
        ++data[c].marked_slots;
    }

    std::vector<ComponentInvariants> out;
    for (auto& [root, inv] : data) {
        BigInt defect = BigInt(2) - chi[root] - BigInt(inv.boundary_cycles);
        if (inv.orientable) {
            BigInt q, rem;
            BigInt::divmod(defect, 2, q, rem);
            if (!rem.is_zero() || q.is_negative())
                throw InternalInvariantError("oracle: orientable chi parity broken");
            inv.genus_or_crosscaps = q;
        } else {
            if (defect <= 0) throw InternalInvariantError("oracle: non-orientable k < 1");
            inv.genus_or_crosscaps = defect;
        }
        out.push_back(inv);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ComponentInvariants> invariants_of(const Cobordism& c) {
    std::vector<ComponentInvariants> out;
    for (const auto& comp : c.components) {
        ComponentInvariants inv;
        inv.orientable = comp.orientable();
        inv.genus_or_crosscaps = inv.orientable ? comp.genus : comp.crosscaps;
        inv.boundary_cycles = static_cast<std::int64_t>(comp.cycles.size());
        inv.marked_slots = comp.marked_slot_count();
        out.push_back(inv);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cob::oracle
