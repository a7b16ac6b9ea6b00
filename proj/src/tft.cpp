#include "cob/tft.hpp"

#include <sstream>

#include "cob/catlib.hpp"

namespace cob {

MuSequence MuSequence::numeric(std::map<std::int64_t, Scalar> table) {
    for (const auto& [i, s] : table)
        if (s.is_zero()) throw ValidationError("MuSequence: mu values must be non-zero");
    return {false, std::move(table)};
}

Scalar MuSequence::at(std::int64_t i) const {
    auto it = entries.find(i);
    if (it != entries.end()) return it->second;
    return symbolic ? Scalar::symbol(i) : Scalar(1);
}

BigInt functor_Z(const BSequence& b, const Cobordism& c) {
    if (!in_category(c, CategoryId::N)) throw NotInCategory("functor_Z: morphism not in N");
    std::int64_t k = c.source.circles;
    std::int64_t kp = c.target.circles;
    BigInt out = -(b.at(0) * theta(c));
    if (kp >= 1) out += b.at(kp);
    if (k >= 1) out -= b.at(k);
    return out;
}

bool is_strict_monoidal_b(const BSequence& b, std::int64_t kmax) {
    for (std::int64_t k = 1; k <= kmax; ++k)
        if (b.at(k) != BigInt(k) * b.at(1)) return false;
    return true;
}

Scalar tft_eval(const MuSequence& mu, const Cobordism& c) {
    if (!in_category(c, CategoryId::N)) throw NotInCategory("tft_eval: morphism not in N");
    std::int64_t n = c.source.circles;
    std::int64_t m = c.target.circles;
    Scalar out = mu.at(m).pow(m);
    out = out * mu.at(n).pow(-BigInt(n));
    out = out * mu.at(0).pow(-theta(c));
    return out;
}

Scalar f2(const MuSequence& mu, std::int64_t n, std::int64_t np) {
    return mu.at(n).pow(-BigInt(n)) * mu.at(np).pow(-BigInt(np)) *
           mu.at(n + np).pow(BigInt(n + np));
}

std::optional<NatTrans> nat_trans(const MuSequence& mu, const MuSequence& mup,
                                  std::int64_t nmax) {
    if (!(mu.at(0) == mup.at(0))) return std::nullopt;
    NatTrans out;
    out.tau.push_back(Scalar(1));  // tau_0
    for (std::int64_t n = 1; n <= nmax; ++n)
        out.tau.push_back((mup.at(n) * mu.at(n).inverse()).pow(n));
    // monoidality square: tau_{a+b} F2(a,b) == F2'(a,b) tau_a tau_b
    for (std::int64_t a = 0; a <= nmax; ++a) {
        for (std::int64_t b = 0; a + b <= nmax; ++b) {
            Scalar lhs = out.tau[a + b] * f2(mu, a, b);
            Scalar rhs = f2(mup, a, b) * out.tau[a] * out.tau[b];
            if (!(lhs == rhs))
                throw InternalInvariantError("nat_trans: monoidality square broken");
        }
    }
    return out;
}

// --- Frobenius data -----------------------------------------------------------

bool AxiomReport::all_passed() const {
    for (const auto& [name, ok] : axioms)
        if (!ok) return false;
    return true;
}

std::string AxiomReport::to_string() const {
    std::ostringstream os;
    for (const auto& [name, ok] : axioms)
        os << (ok ? "pass" : "FAIL") << "  " << name << "\n";
    return os.str();
}

namespace {

using Vec = std::vector<Scalar>;
using Mat = std::vector<std::vector<Scalar>>;

Vec multiply(const FrobeniusData& fd, const Vec& x, const Vec& y) {
    Vec out(fd.dim, Scalar(0));
    for (std::int64_t i = 0; i < fd.dim; ++i)
        for (std::int64_t j = 0; j < fd.dim; ++j)
            for (std::int64_t l = 0; l < fd.dim; ++l)
                out[l] = out[l] + x[i] * y[j] * fd.mult[i][j][l];
    return out;
}

Scalar pair_vals(const FrobeniusData& fd, const Vec& x, const Vec& y) {
    Scalar out(0);
    for (std::int64_t i = 0; i < fd.dim; ++i)
        for (std::int64_t j = 0; j < fd.dim; ++j)
            out = out + x[i] * y[j] * fd.pairing[i][j];
    return out;
}

Vec star(const FrobeniusData& fd, const Vec& x) {
    Vec out(fd.dim, Scalar(0));
    for (std::int64_t i = 0; i < fd.dim; ++i)
        for (std::int64_t j = 0; j < fd.dim; ++j)
            out[i] = out[i] + fd.involution[i][j] * x[j];
    return out;
}

Vec basis_vec(std::int64_t dim, std::int64_t i) {
    Vec out(dim, Scalar(0));
    out[i] = Scalar(1);
    return out;
}

}  // namespace

std::vector<std::vector<Scalar>> copairing(const FrobeniusData& fd) {
    const std::int64_t n = fd.dim;
    // Gauss-Jordan over the exact scalar field; pivots must be single-term
    Mat a = fd.pairing;
    Mat inv(n, Vec(n, Scalar(0)));
    for (std::int64_t i = 0; i < n; ++i) inv[i][i] = Scalar(1);
    for (std::int64_t col = 0; col < n; ++col) {
        std::int64_t pivot = -1;
        for (std::int64_t r = col; r < n; ++r) {
            if (!a[r][col].is_zero() && a[r][col].is_single_term()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            for (std::int64_t r = col; r < n; ++r)
                if (!a[r][col].is_zero()) pivot = r;
            if (pivot < 0) throw SingularPairing("pairing matrix is singular");
            throw SingularPairing("pairing pivot is not invertible in the scalar ring");
        }
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Scalar d = a[col][col].inverse();
        for (std::int64_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] * d;
            inv[col][j] = inv[col][j] * d;
        }
        for (std::int64_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Scalar factor = a[r][col];
            for (std::int64_t j = 0; j < n; ++j) {
                a[r][j] = a[r][j] - factor * a[col][j];
                inv[r][j] = inv[r][j] - factor * inv[col][j];
            }
        }
    }
    return inv;
}

AxiomReport frobenius_validate(const FrobeniusData& fd) {
    AxiomReport report;
    auto check = [&](const std::string& name, bool ok) {
        report.axioms.push_back({name, ok});
    };
    const std::int64_t n = fd.dim;

    bool commutative = true, associative = true, unital = true;
    for (std::int64_t i = 0; i < n; ++i) {
        Vec ei = basis_vec(n, i);
        if (!(multiply(fd, fd.unit, ei) == ei) || !(multiply(fd, ei, fd.unit) == ei))
            unital = false;
        for (std::int64_t j = 0; j < n; ++j) {
            Vec ej = basis_vec(n, j);
            if (!(multiply(fd, ei, ej) == multiply(fd, ej, ei))) commutative = false;
            for (std::int64_t l = 0; l < n; ++l) {
                Vec el = basis_vec(n, l);
                if (!(multiply(fd, multiply(fd, ei, ej), el) ==
                      multiply(fd, ei, multiply(fd, ej, el))))
                    associative = false;
            }
        }
    }
    check("multiplication commutative", commutative);
    check("multiplication associative", associative);
    check("multiplication unital", unital);

    bool frobenius = true;
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            for (std::int64_t l = 0; l < n; ++l) {
                Vec ei = basis_vec(n, i), ej = basis_vec(n, j), el = basis_vec(n, l);
                if (!(pair_vals(fd, multiply(fd, ei, ej), el) ==
                      pair_vals(fd, ei, multiply(fd, ej, el))))
                    frobenius = false;
            }
    check("pairing Frobenius-compatible", frobenius);

    bool nondegenerate = true;
    Mat alpha;
    try {
        alpha = copairing(fd);
    } catch (const SingularPairing&) {
        nondegenerate = false;
    }
    check("pairing non-degenerate", nondegenerate);

    bool involutive = true, multiplicative = true, isometric = true;
    for (std::int64_t i = 0; i < n; ++i) {
        Vec ei = basis_vec(n, i);
        if (!(star(fd, star(fd, ei)) == ei)) involutive = false;
        for (std::int64_t j = 0; j < n; ++j) {
            Vec ej = basis_vec(n, j);
            if (!(star(fd, multiply(fd, ei, ej)) ==
                  multiply(fd, star(fd, ei), star(fd, ej))))
                multiplicative = false;
            if (!(pair_vals(fd, star(fd, ei), star(fd, ej)) == pair_vals(fd, ei, ej)))
                isometric = false;
        }
    }
    check("involution squares to identity", involutive);
    check("involution multiplicative", multiplicative);
    check("involution preserves pairing", isometric);

    bool u_fixed = true;
    for (std::int64_t i = 0; i < n; ++i) {
        Vec au = multiply(fd, basis_vec(n, i), fd.u_elem);
        if (!(star(fd, au) == au)) u_fixed = false;
    }
    check("(aU)* = aU", u_fixed);

    if (nondegenerate) {
        Vec rhs(n, Scalar(0));
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t j = 0; j < n; ++j) {
                Vec term = multiply(fd, basis_vec(n, i), star(fd, basis_vec(n, j)));
                for (std::int64_t l = 0; l < n; ++l)
                    rhs[l] = rhs[l] + alpha[i][j] * term[l];
            }
        check("U^2 = sum alpha_ij a_i a_j*", multiply(fd, fd.u_elem, fd.u_elem) == rhs);
    } else {
        check("U^2 = sum alpha_ij a_i a_j*", false);
    }
    return report;
}

FrobeniusData cor45_algebra(const Scalar& mu0) {
    if (mu0.is_zero()) throw ValidationError("cor45_algebra: mu0 must be non-zero");
    FrobeniusData fd;
    fd.dim = 1;
    fd.unit = {Scalar(1)};
    fd.mult = {{{Scalar(1)}}};
    fd.pairing = {{mu0 * mu0}};
    fd.involution = {{Scalar(1)}};
    fd.u_elem = {mu0.inverse()};
    return fd;
}

// --- closed-sector evaluation ---------------------------------------------------

namespace {

std::int64_t ipow(std::int64_t base, std::int64_t exp) {
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < exp; ++i) out *= base;
    return out;
}

KleinMap zero_map(const FrobeniusData& fd, std::int64_t src, std::int64_t tgt) {
    KleinMap out;
    out.src_circles = src;
    out.tgt_circles = tgt;
    out.dim = fd.dim;
    out.mat.assign(static_cast<std::size_t>(ipow(fd.dim, tgt)),
                   Vec(static_cast<std::size_t>(ipow(fd.dim, src)), Scalar(0)));
    return out;
}

}  // namespace

KleinMap klein_identity(const FrobeniusData& fd, std::int64_t circles) {
    KleinMap out = zero_map(fd, circles, circles);
    for (std::size_t i = 0; i < out.mat.size(); ++i) out.mat[i][i] = Scalar(1);
    return out;
}

KleinMap klein_generator(const FrobeniusData& fd, const std::string& name) {
    const std::int64_t d = fd.dim;
    if (name == "disc_in") {
        KleinMap out = zero_map(fd, 0, 1);
        for (std::int64_t i = 0; i < d; ++i) out.mat[i][0] = fd.unit[i];
        return out;
    }
    if (name == "disc_out") {
        // counit x -> <x, 1>
        KleinMap out = zero_map(fd, 1, 0);
        for (std::int64_t i = 0; i < d; ++i)
            out.mat[0][i] = pair_vals(fd, basis_vec(d, i), fd.unit);
        return out;
    }
    if (name == "pants_in") {
        KleinMap out = zero_map(fd, 2, 1);
        for (std::int64_t i = 0; i < d; ++i)
            for (std::int64_t j = 0; j < d; ++j)
                for (std::int64_t l = 0; l < d; ++l)
                    out.mat[l][i * d + j] = fd.mult[i][j][l];
        return out;
    }
    if (name == "pants_out") {
        // comultiplication x -> sum alpha_ij (x a_i) (x) a_j
        Mat alpha = copairing(fd);
        KleinMap out = zero_map(fd, 1, 2);
        for (std::int64_t x = 0; x < d; ++x) {
            for (std::int64_t i = 0; i < d; ++i) {
                Vec xa = multiply(fd, basis_vec(d, x), basis_vec(d, i));
                for (std::int64_t j = 0; j < d; ++j)
                    for (std::int64_t l = 0; l < d; ++l)
                        out.mat[l * d + j][x] = out.mat[l * d + j][x] + alpha[i][j] * xa[l];
            }
        }
        return out;
    }
    if (name == "cyl") return klein_identity(fd, 1);
    if (name == "sym_cc") {
        KleinMap out = zero_map(fd, 2, 2);
        for (std::int64_t i = 0; i < d; ++i)
            for (std::int64_t j = 0; j < d; ++j) out.mat[j * d + i][i * d + j] = Scalar(1);
        return out;
    }
    if (name == "twist_circle") {
        KleinMap out = zero_map(fd, 1, 1);
        for (std::int64_t i = 0; i < d; ++i)
            for (std::int64_t j = 0; j < d; ++j) out.mat[i][j] = fd.involution[i][j];
        return out;
    }
    if (name == "mobius") {
        KleinMap out = zero_map(fd, 0, 1);
        for (std::int64_t i = 0; i < d; ++i) out.mat[i][0] = fd.u_elem[i];
        return out;
    }
    if (name == "rp2_cyl") {
        // x -> U x, the image of pants_in after (id x mobius)
        KleinMap out = zero_map(fd, 1, 1);
        for (std::int64_t j = 0; j < d; ++j) {
            Vec ux = multiply(fd, fd.u_elem, basis_vec(d, j));
            for (std::int64_t i = 0; i < d; ++i) out.mat[i][j] = ux[i];
        }
        return out;
    }
    throw OpenSectorGenerator("klein_eval: generator '" + name +
                              "' is not a closed-sector generator");
}

KleinMap klein_compose(const KleinMap& f, const KleinMap& g) {
    if (f.tgt_circles != g.src_circles || f.dim != g.dim)
        throw SignatureMismatch("klein_compose: shapes do not match");
    KleinMap out;
    out.src_circles = f.src_circles;
    out.tgt_circles = g.tgt_circles;
    out.dim = f.dim;
    const std::size_t rows = g.mat.size();
    const std::size_t mid = f.mat.size();
    const std::size_t colsn = f.mat.empty() ? 1 : f.mat[0].size();
    out.mat.assign(rows, Vec(colsn, Scalar(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < mid; ++k) {
            if (g.mat[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < colsn; ++j)
                out.mat[i][j] = out.mat[i][j] + g.mat[i][k] * f.mat[k][j];
        }
    return out;
}

KleinMap klein_tensor(const KleinMap& f, const KleinMap& g) {
    if (f.dim != g.dim) throw SignatureMismatch("klein_tensor: dimension mismatch");
    KleinMap out;
    out.src_circles = f.src_circles + g.src_circles;
    out.tgt_circles = f.tgt_circles + g.tgt_circles;
    out.dim = f.dim;
    const std::size_t fr = f.mat.size(), gr = g.mat.size();
    const std::size_t fc = f.mat[0].size(), gc = g.mat[0].size();
    out.mat.assign(fr * gr, Vec(fc * gc, Scalar(0)));
    for (std::size_t i = 0; i < fr; ++i)
        for (std::size_t j = 0; j < fc; ++j) {
            if (f.mat[i][j].is_zero()) continue;
            for (std::size_t k = 0; k < gr; ++k)
                for (std::size_t l = 0; l < gc; ++l)
                    out.mat[i * gr + k][j * gc + l] = f.mat[i][j] * g.mat[k][l];
        }
    return out;
}

}  // namespace cob
