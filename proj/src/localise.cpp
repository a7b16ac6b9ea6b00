#include "cob/localise.hpp"

#include <map>
#include <sstream>

#include "cob/glue.hpp"

namespace cob {

LocWord& LocWord::then(Cobordism c, Direction d) {
    letters.push_back({std::move(c), d});
    return *this;
}

std::string LocClass::payload_string() const {
    std::ostringstream os;
    switch (shape) {
        case Shape::integer:
            os << a;
            break;
        case Shape::pair:
            os << "(" << a << "," << b << ")";
            break;
        case Shape::vector:
            os << n0_to_string(vec);
            break;
        case Shape::int_and_vector:
            os << a << ";" << n0_to_string(vec);
            break;
    }
    return os.str();
}

namespace {

constexpr long long kN0Truncation = 1'000'000;  // n0 payloads are exact; bound is formal

// closed components split off as the N0 part of a barO morphism
std::pair<Cobordism, Cobordism> split_baro(const Cobordism& c) {
    std::vector<Component> open_part, closed_part;
    for (const auto& comp : c.components)
        (comp.cycles.empty() ? closed_part : open_part).push_back(comp);
    return {Cobordism(c.source, c.target, std::move(open_part)),
            Cobordism({0, 0}, {0, 0}, std::move(closed_part))};
}

BigInt theta_halved(const Cobordism& c) {
    BigInt t = theta(c);
    BigInt q, r;
    BigInt::divmod(t, 2, q, r);
    if (!r.is_zero())
        throw InternalInvariantError("theta must be even on orientable closed-sector maps");
    return q;
}

}  // namespace

LocClass loc_class(const Cobordism& c, CategoryId cat) {
    if (!in_category(c, cat))
        throw NotInCategory("loc_class: morphism not in " + category_name(cat));
    LocClass out;
    out.source = c.source;
    out.target = c.target;
    switch (cat) {
        case CategoryId::N:
        case CategoryId::O:
        case CategoryId::K:
        case CategoryId::S:
        case CategoryId::S_and_O:
        case CategoryId::Nb:
        case CategoryId::N1:
        case CategoryId::N1minus:
            out.shape = LocClass::Shape::integer;
            out.a = theta(c);
            break;
        case CategoryId::S_and_N:
            out.shape = LocClass::Shape::integer;
            out.a = theta_halved(c);
            break;
        case CategoryId::N1plus: {
            // class (g, type) in Z x Z2, type read off the canonical form
            out.shape = LocClass::Shape::pair;
            out.a = theta_halved(c);
            const Component& comp = c.components.front();
            std::uint8_t t0 = comp.cycles[0].arcs[0].twist;
            std::uint8_t t1 = comp.cycles[1].arcs[0].twist;
            out.b = (t0 ^ t1) ? 1 : 0;
            break;
        }
        case CategoryId::barN:
            out.shape = LocClass::Shape::pair;
            out.a = theta(c) - omega(c);
            out.b = omega(c);
            break;
        case CategoryId::N0:
            out.shape = LocClass::Shape::vector;
            out.vec = n0_class(c, kN0Truncation);
            break;
        case CategoryId::barO: {
            auto [open_part, closed_part] = split_baro(c);
            out.shape = LocClass::Shape::int_and_vector;
            out.a = theta(open_part);
            out.vec = n0_class(closed_part, kN0Truncation);
            break;
        }
    }
    return out;
}

void check_word(const LocWord& w, CategoryId cat) {
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (!in_category(w.letters[i].morphism, cat))
            throw NotComposable("letter not in " + category_name(cat), i);
        if (i > 0 && w.letters[i - 1].to() != w.letters[i].from())
            throw NotComposable("letters do not chain at index " + std::to_string(i), i);
    }
}

namespace {

void accumulate(LocClass& acc, const LocClass& x, Direction dir) {
    int sign = dir == Direction::fwd ? 1 : -1;
    auto add = [&](BigInt& dst, const BigInt& src) {
        if (sign > 0)
            dst += src;
        else
            dst -= src;
    };
    add(acc.a, x.a);
    add(acc.b, x.b);
    std::map<ClosedType, BigInt> merged(acc.vec.begin(), acc.vec.end());
    for (const auto& [t, n] : x.vec) {
        if (sign > 0)
            merged[t] += n;
        else
            merged[t] -= n;
    }
    acc.vec.clear();
    for (const auto& [t, n] : merged)
        if (!n.is_zero()) acc.vec.push_back({t, n});
}

}  // namespace

LocClass word_reduce(const LocWord& w, CategoryId cat) {
    check_word(w, cat);
    LocClass acc;
    acc.source = w.from();
    acc.target = w.to();
    // payload shape from the category, zero-initialized
    if (!w.letters.empty()) {
        acc.shape = loc_class(w.letters.front().morphism, cat).shape;
    } else {
        acc.shape = loc_class(identity(w.base), cat).shape;
    }
    for (const auto& letter : w.letters)
        accumulate(acc, loc_class(letter.morphism, cat), letter.dir);
    return acc;
}

LocWord to_endo_word(const LocWord& w, const ObjectSig& base, CategoryId cat) {
    check_word(w, cat);
    if (w.from() != base || w.to() != base)
        throw NotALoop("to_endo_word: word is not a loop at " + base.to_string());
    LocWord out = LocWord::at(base);
    // out_y: y -> base, in_y: base -> y; at the base both are the identity,
    // so the boundary hops vanish
    auto conn_out = [&](const ObjectSig& y) { return connect(y, base, cat); };
    auto conn_in = [&](const ObjectSig& y) { return connect(base, y, cat); };
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        const Letter& letter = w.letters[i];
        if (letter.dir == Direction::fwd) {
            Cobordism endo = compose(conn_in(letter.from()),
                                     compose(letter.morphism, conn_out(letter.to())));
            out.then(std::move(endo), Direction::fwd);
        } else {
            Cobordism endo = compose(conn_in(letter.to()),
                                     compose(letter.morphism, conn_out(letter.from())));
            out.then(std::move(endo), Direction::inv);
        }
        if (i + 1 < w.letters.size() && w.letters[i + 1].dir == letter.dir) {
            // consecutive same-direction letters leave a stray out . in hop
            const ObjectSig& y = letter.to();
            Cobordism hop = compose(conn_in(y), conn_out(y));
            out.then(std::move(hop),
                     letter.dir == Direction::fwd ? Direction::inv : Direction::fwd);
        }
    }
    return out;
}

bool verify_relation(const LocWord& lhs, const LocWord& rhs, CategoryId cat) {
    if (lhs.from() != rhs.from() || lhs.to() != rhs.to())
        throw EndpointMismatch("verify_relation: endpoints differ");
    return word_reduce(lhs, cat) == word_reduce(rhs, cat);
}

BigInt word_theta(const LocWord& w) {
    BigInt t = 0;
    for (const auto& letter : w.letters) {
        if (letter.dir == Direction::fwd)
            t += theta(letter.morphism);
        else
            t -= theta(letter.morphism);
    }
    return t;
}

BigInt word_omega(const LocWord& w) {
    BigInt t = 0;
    for (const auto& letter : w.letters) {
        if (letter.dir == Direction::fwd)
            t += omega(letter.morphism);
        else
            t -= omega(letter.morphism);
    }
    return t;
}

}  // namespace cob
