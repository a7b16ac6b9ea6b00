#include "cob/scalar.hpp"

#include <sstream>

namespace cob {

Rational::Rational(BigInt n) : num(std::move(n)), den(1) {}

Rational::Rational(BigInt n, BigInt d) {
    if (d.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (d.is_negative()) {
        n = -n;
        d = -d;
    }
    BigInt g = gcd(n, d);
    if (!g.is_zero() && g != 1) {
        n /= g;
        d /= g;
    }
    num = std::move(n);
    den = std::move(d);
    if (num.is_zero()) den = 1;
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num = -out.num;
    return out;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}
Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
}
Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num * b.den, a.den * b.num);
}

std::string Rational::to_string() const {
    if (den == 1) return num.to_string();
    return num.to_string() + "/" + den.to_string();
}

GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
}
GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
}
GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    if (b.is_zero()) throw std::domain_error("GaussRat: division by zero");
    Rational norm = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}

std::string GaussRat::to_string() const {
    if (im.is_zero()) return re.to_string();
    std::string i_part;
    if (im == Rational(1))
        i_part = "i";
    else if (im == Rational(-1))
        i_part = "-i";
    else
        i_part = im.to_string() + "i";
    if (re.is_zero()) return i_part;
    if (im.num.is_negative()) return "(" + re.to_string() + i_part + ")";
    return "(" + re.to_string() + "+" + i_part + ")";
}

void Scalar::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

Scalar Scalar::constant(GaussRat c) {
    Scalar out;
    if (!c.is_zero()) out.terms_[{}] = std::move(c);
    return out;
}

Scalar Scalar::symbol(std::int64_t index, BigInt exponent) {
    Scalar out;
    MonomialKey key;
    if (!exponent.is_zero()) key[index] = std::move(exponent);
    out.terms_[std::move(key)] = GaussRat(1);
    return out;
}

Scalar Scalar::monomial(GaussRat coeff, MonomialKey key) {
    Scalar out;
    for (auto it = key.begin(); it != key.end();) {
        if (it->second.is_zero())
            it = key.erase(it);
        else
            ++it;
    }
    if (!coeff.is_zero()) out.terms_[std::move(key)] = std::move(coeff);
    return out;
}

bool Scalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() &&
           terms_.begin()->second == GaussRat(1);
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar out = a;
    for (const auto& [k, c] : b.terms_) {
        auto it = out.terms_.find(k);
        if (it == out.terms_.end())
            out.terms_[k] = c;
        else
            it->second = it->second + c;
    }
    out.prune();
    return out;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar out;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            MonomialKey k = ka;
            for (const auto& [sym, e] : kb) {
                auto it = k.find(sym);
                if (it == k.end()) {
                    k[sym] = e;
                } else {
                    it->second += e;
                    if (it->second.is_zero()) k.erase(it);
                }
            }
            GaussRat c = ca * cb;
            auto it = out.terms_.find(k);
            if (it == out.terms_.end())
                out.terms_[std::move(k)] = c;
            else
                it->second = it->second + c;
        }
    }
    out.prune();
    return out;
}

Scalar Scalar::inverse() const {
    if (terms_.size() != 1)
        throw SingularPairing("Scalar: only single-term scalars are invertible here");
    const auto& [key, coeff] = *terms_.begin();
    MonomialKey inv_key;
    for (const auto& [sym, e] : key) inv_key[sym] = -e;
    return monomial(GaussRat(1) / coeff, std::move(inv_key));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(const BigInt& exp) const {
    if (exp.is_zero()) return Scalar(1);
    if (terms_.size() == 1) {
        const auto& [key, coeff] = *terms_.begin();
        MonomialKey k;
        for (const auto& [sym, e] : key) k[sym] = e * exp;
        // coefficient power needs a machine-size exponent
        if (!exp.fits_int64())
            throw ValidationError("Scalar::pow: exponent too large for coefficient power");
        std::int64_t n = exp.to_int64();
        GaussRat c(1);
        GaussRat base = coeff;
        bool neg = n < 0;
        std::uint64_t e = neg ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
        while (e) {
            if (e & 1) c = c * base;
            base = base * base;
            e >>= 1;
        }
        if (neg) c = GaussRat(1) / c;
        return monomial(c, std::move(k));
    }
    if (exp.is_negative())
        throw SingularPairing("Scalar::pow: negative power of a non-monomial");
    if (!exp.fits_int64()) throw ValidationError("Scalar::pow: exponent too large");
    Scalar out(1);
    for (std::int64_t i = 0, n = exp.to_int64(); i < n; ++i) out = out * *this;
    return out;
}

std::string Scalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [key, coeff] : terms_) {
        if (!first_term) os << " + ";
        first_term = false;
        bool has_coeff = !(coeff == GaussRat(1)) || key.empty();
        if (has_coeff) os << coeff.to_string();
        bool first_sym = !has_coeff;
        for (const auto& [sym, e] : key) {
            if (!first_sym) os << " ";
            first_sym = false;
            os << "mu" << sym;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace cob
