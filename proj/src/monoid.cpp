#include "cob/monoid.hpp"

#include <algorithm>
#include <map>
#include <cctype>
#include <sstream>

#include "cob/catlib.hpp"

namespace cob {

std::size_t GroupCompletion::free_rank() const {
    std::size_t n = 0;
    for (const auto& d : invariant_factors)
        if (d.is_zero()) ++n;
    return n;
}

std::size_t GroupCompletion::torsion_rank() const {
    return invariant_factors.size() - free_rank();
}

namespace {

std::size_t rows(const Matrix& m) { return m.size(); }
std::size_t cols(const Matrix& m) { return m.empty() ? 0 : m[0].size(); }

Matrix ident(std::size_t n) {
    Matrix out(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

void swap_cols(Matrix& m, std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

void add_row(Matrix& m, std::size_t dst, std::size_t src, const BigInt& f) {
    for (std::size_t j = 0; j < cols(m); ++j) m[dst][j] += f * m[src][j];
}

void add_col(Matrix& m, std::size_t dst, std::size_t src, const BigInt& f) {
    for (std::size_t i = 0; i < rows(m); ++i) m[i][dst] += f * m[i][src];
}

void negate_row(Matrix& m, std::size_t r) {
    for (auto& x : m[r]) x = -x;
}

}  // namespace

void smith_normal_form(Matrix a, Matrix& d, Matrix& u, Matrix& v) {
    const std::size_t m = rows(a), n = cols(a);
    u = ident(m);
    v = ident(n);
    d = std::move(a);

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // find the minimal non-zero entry in the lower-right block
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < m; ++i) {
                for (std::size_t j = t; j < n; ++j) {
                    if (d[i][j].is_zero()) continue;
                    if (!found || d[i][j].abs() < d[pi][pj].abs()) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            }
            if (!found) break;
            if (pi != t) {
                swap_rows(d, t, pi);
                swap_rows(u, t, pi);
            }
            if (pj != t) {
                swap_cols(d, t, pj);
                swap_cols(v, t, pj);
            }
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d[i][t].is_zero()) continue;
                BigInt q = d[i][t] / d[t][t];
                add_row(d, i, t, -q);
                add_row(u, i, t, -q);
                if (!d[i][t].is_zero()) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d[t][j].is_zero()) continue;
                BigInt q = d[t][j] / d[t][t];
                add_col(d, j, t, -q);
                add_col(v, j, t, -q);
                if (!d[t][j].is_zero()) dirty = true;
            }
            if (dirty) continue;
            // pivot now lone; enforce divisibility into the remaining block
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i) {
                for (std::size_t j = t + 1; j < n && fixed; ++j) {
                    if ((d[i][j] % d[t][t]).is_zero()) continue;
                    add_row(d, t, i, 1);
                    add_row(u, t, i, 1);
                    fixed = false;
                }
            }
            if (fixed) break;
        }
        if (d[t][t].is_negative()) {
            negate_row(d, t);
            negate_row(u, t);
        }
    }
}

GroupCompletion grothendieck(const MonoidPresentation& p) {
    const std::size_t n = p.rank;
    for (const auto& [lhs, rhs] : p.relations)
        if (lhs.size() != n || rhs.size() != n)
            throw ValidationError("relation arity does not match rank");

    // relations as columns of an n x r matrix
    const std::size_t r = p.relations.size();
    Matrix a(n, std::vector<BigInt>(std::max<std::size_t>(r, 1), 0));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < n; ++i)
            a[i][j] = p.relations[j].first[i] - p.relations[j].second[i];

    Matrix d, u, v;
    smith_normal_form(a, d, u, v);

    GroupCompletion out;
    out.diagonal.assign(n, 0);
    for (std::size_t i = 0; i < std::min(n, cols(d)); ++i) out.diagonal[i] = d[i][i];
    for (const auto& di : out.diagonal)
        if (di != 1) out.invariant_factors.push_back(di);
    // torsion factors first, free factors (0) trailing
    std::sort(out.invariant_factors.begin(), out.invariant_factors.end(),
              [](const BigInt& x, const BigInt& y) {
                  if (x.is_zero() != y.is_zero()) return y.is_zero();
                  return x < y;
              });

    out.generator_map.assign(n, std::vector<BigInt>(n, 0));
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t i = 0; i < n; ++i) {
            BigInt coord = u[i][g];
            if (!out.diagonal[i].is_zero()) {
                coord %= out.diagonal[i];
                if (coord.is_negative()) coord += out.diagonal[i];
            }
            out.generator_map[g][i] = coord;
        }
    }
    return out;
}

// --- N1 ---------------------------------------------------------------------

N1Element N1Element::normalized(BigInt g, BigInt k, std::uint8_t eps) {
    if (g.is_negative() || k.is_negative()) throw ValidationError("N1: negative exponent");
    if (!k.is_zero()) return {0, BigInt(2) * g + k, 0};
    return {std::move(g), 0, eps};
}

N1Element N1Element::add(const N1Element& o) const {
    return normalized(g + o.g, k + o.k, eps ^ o.eps);
}

BigInt gc_class_n1(const N1Element& e) { return BigInt(2) * e.g + e.k; }

Cobordism cobordism_of(const N1Element& e) { return conn_endo(e.g, e.k, e.eps); }

WitnessResult gc_witness(const N1Element& x, const N1Element& y, const N1Element& xp,
                         const N1Element& yp, std::size_t bound) {
    N1Element left0 = x.add(yp);
    N1Element right0 = y.add(xp);
    // graded-lex enumeration of normal forms: grade g+k+eps, then (g, k, eps)
    std::size_t emitted = 0;
    for (long long grade = 0;; ++grade) {
        for (long long g = 0; g <= grade; ++g) {
            for (long long k = 0; g + k <= grade; ++k) {
                long long eps = grade - g - k;
                if (eps > 1) continue;
                if (k > 0 && eps == 1) continue;  // not a normal form
                if (++emitted > bound) return {std::nullopt, false};
                N1Element w = N1Element::normalized(g, k, static_cast<std::uint8_t>(eps));
                if (left0.add(w) == right0.add(w)) return {w, false};
            }
        }
    }
}

// --- N0 ---------------------------------------------------------------------

N0Vector n0_class(const Cobordism& c, const BigInt& truncation) {
    if (!c.source.empty() || !c.target.empty())
        throw NotInCategory("n0_class: not an endomorphism of the empty manifold");
    std::map<ClosedType, BigInt> counts;
    for (const auto& comp : c.components) {
        if (!comp.cycles.empty())
            throw FreeBoundaryError("n0_class: component with free boundary");
        ClosedType t{comp.genus, comp.crosscaps};
        if (t.g > truncation || t.k > truncation)
            throw ValidationError("n0_class: component type exceeds truncation");
        counts[t] += 1;
    }
    return {counts.begin(), counts.end()};
}

std::string n0_to_string(const N0Vector& v) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [t, n] : v) {
        if (!first) os << ",";
        first = false;
        os << "(" << t.g << "," << t.k << "):" << n;
    }
    os << "}";
    return os.str();
}

// --- presentation text format ------------------------------------------------

namespace {

struct TermParser {
    std::map<std::string, std::size_t>& index;
    std::vector<std::string>& names;
    bool fixed_generators;

    std::size_t lookup(const std::string& name, int lineno) {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        if (fixed_generators)
            throw SyntaxError("unknown generator '" + name + "'", lineno, 0);
        index[name] = names.size();
        names.push_back(name);
        return names.size() - 1;
    }

    // parses "2a + b" into a sparse exponent list
    std::vector<std::pair<std::size_t, BigInt>> side(const std::string& text, int lineno) {
        std::vector<std::pair<std::size_t, BigInt>> out;
        std::size_t i = 0;
        auto skip_ws = [&] {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        };
        skip_ws();
        if (i == text.size()) return out;
        if (text == "0") return out;
        for (;;) {
            skip_ws();
            std::string digits;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                digits += text[i++];
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
            std::string name;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                name += text[i++];
            if (name.empty()) {
                if (digits == "0" && out.empty()) {
                    skip_ws();
                    if (i == text.size()) return out;
                }
                throw SyntaxError("expected generator name", lineno, static_cast<int>(i));
            }
            BigInt coeff = digits.empty() ? BigInt(1) : BigInt::from_string(digits);
            out.push_back({lookup(name, lineno), coeff});
            skip_ws();
            if (i == text.size()) break;
            if (text[i] != '+')
                throw SyntaxError("expected '+' between terms", lineno, static_cast<int>(i));
            ++i;
        }
        return out;
    }
};

}  // namespace

MonoidPresentation parse_presentation(const std::string& text) {
    std::map<std::string, std::size_t> index;
    std::vector<std::string> names;
    bool fixed = false;
    std::vector<std::pair<std::string, std::string>> raw;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto is_blank = [](const std::string& s) {
            return std::all_of(s.begin(), s.end(),
                               [](unsigned char c) { return std::isspace(c); });
        };
        if (is_blank(line)) continue;
        if (line.rfind("generators:", 0) == 0) {
            std::istringstream gs(line.substr(11));
            std::string name;
            while (gs >> name) {
                if (index.count(name))
                    throw SyntaxError("duplicate generator '" + name + "'", lineno, 0);
                index[name] = names.size();
                names.push_back(name);
            }
            fixed = true;
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw SyntaxError("relation line needs '='", lineno, 0);
        raw.push_back({line.substr(0, eq), line.substr(eq + 1)});
    }

    TermParser tp{index, names, fixed};
    std::vector<std::pair<std::vector<std::pair<std::size_t, BigInt>>,
                          std::vector<std::pair<std::size_t, BigInt>>>>
        sparse;
    lineno = 0;
    for (const auto& [lhs, rhs] : raw) {
        ++lineno;
        auto l = tp.side(lhs, lineno);
        auto r = tp.side(rhs, lineno);
        sparse.push_back({std::move(l), std::move(r)});
    }

    MonoidPresentation p;
    p.rank = names.size();
    p.generator_names = names;
    for (const auto& [l, r] : sparse) {
        std::vector<BigInt> lv(p.rank, 0), rv(p.rank, 0);
        for (const auto& [g, c] : l) lv[g] += c;
        for (const auto& [g, c] : r) rv[g] += c;
        p.relations.push_back({std::move(lv), std::move(rv)});
    }
    return p;
}

}  // namespace cob
