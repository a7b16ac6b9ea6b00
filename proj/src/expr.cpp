#include "cob/expr.hpp"

#include <cctype>

#include "cob/catlib.hpp"
#include "cob/glue.hpp"

namespace cob {

ExprPtr Expr::gen(std::string name) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::gen;
    e->name = std::move(name);
    return e;
}

ExprPtr Expr::conn(BigInt g, BigInt k, std::int64_t w, std::int64_t s, std::int64_t t) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::conn;
    e->a0 = std::move(g);
    e->a1 = std::move(k);
    e->w = w;
    e->s = s;
    e->t = t;
    return e;
}

ExprPtr Expr::p(std::int64_t k) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::connecting_p;
    e->s = k;
    return e;
}

ExprPtr Expr::tau_of(std::int64_t n) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::tau_n;
    e->s = n;
    return e;
}

ExprPtr Expr::id(ObjectSig sig) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::object_id;
    e->sig = sig;
    return e;
}

ExprPtr Expr::compose(ExprPtr after, ExprPtr before) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::compose;
    e->lhs = std::move(after);
    e->rhs = std::move(before);
    return e;
}

ExprPtr Expr::tensor(ExprPtr left, ExprPtr right) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::tensor;
    e->lhs = std::move(left);
    e->rhs = std::move(right);
    return e;
}

ExprPtr Expr::inv(ExprPtr inner) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::inv;
    e->inner = std::move(inner);
    return e;
}

std::pair<ObjectSig, ObjectSig> signature(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::gen: {
            Cobordism c = generator(e->name);
            return {c.source, c.target};
        }
        case Expr::Kind::conn:
            return {{e->s, 0}, {e->t, 0}};
        case Expr::Kind::connecting_p:
            return {{0, 0}, {e->s, 0}};
        case Expr::Kind::tau_n:
            return {{e->s, 0}, {1, 0}};
        case Expr::Kind::object_id:
            return {e->sig, e->sig};
        case Expr::Kind::compose: {
            auto before = signature(e->rhs);
            auto after = signature(e->lhs);
            if (before.second != after.first)
                throw TypeMismatch("compose: " + before.second.to_string() +
                                   " does not match " + after.first.to_string());
            return {before.first, after.second};
        }
        case Expr::Kind::tensor: {
            auto l = signature(e->lhs);
            auto r = signature(e->rhs);
            return {l.first + r.first, l.second + r.second};
        }
        case Expr::Kind::inv: {
            auto s = signature(e->inner);
            return {s.second, s.first};
        }
    }
    throw TypeMismatch("signature: unreachable");
}

// --- lexer / parser -----------------------------------------------------------

namespace {

enum class Tok { name, number, lparen, rparen, comma, semicolon, arrow, compose_op,
                 tensor_op, end };

struct Lexer {
    const std::string& text;
    std::size_t i = 0;
    int line = 1, col = 1;

    Tok tok = Tok::end;
    std::string value;
    int tok_line = 1, tok_col = 1;

    explicit Lexer(const std::string& t) : text(t) { advance(); }

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(msg, tok_line, tok_col);
    }

    void bump(std::size_t n) {
        for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    }

    bool starts_with(const char* s) const {
        return text.compare(i, std::char_traits<char>::length(s), s) == 0;
    }

    void advance() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) bump(1);
        tok_line = line;
        tok_col = col;
        value.clear();
        if (i >= text.size()) {
            tok = Tok::end;
            return;
        }
        if (starts_with("∘")) {  // compose ring
            tok = Tok::compose_op;
            bump(3);
            return;
        }
        if (starts_with("⊗")) {  // tensor
            tok = Tok::tensor_op;
            bump(3);
            return;
        }
        char c = text[i];
        if (c == '(') { tok = Tok::lparen; bump(1); return; }
        if (c == ')') { tok = Tok::rparen; bump(1); return; }
        if (c == ',') { tok = Tok::comma; bump(1); return; }
        if (c == ';') { tok = Tok::semicolon; bump(1); return; }
        if (c == '*') { tok = Tok::tensor_op; bump(1); return; }
        if (starts_with("->")) { tok = Tok::arrow; bump(2); return; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                value += text[i];
                bump(1);
            }
            tok = Tok::number;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                value += text[i];
                bump(1);
            }
            if (value == "o") {
                tok = Tok::compose_op;
                return;
            }
            tok = Tok::name;
            return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
    }
};

struct Parser {
    Lexer lex;

    explicit Parser(const std::string& text) : lex(text) {}

    void expect(Tok t, const char* what) {
        if (lex.tok != t) lex.fail(std::string("expected ") + what);
        lex.advance();
    }

    std::int64_t number() {
        if (lex.tok != Tok::number) lex.fail("expected a number");
        std::int64_t v = std::stoll(lex.value);
        lex.advance();
        return v;
    }

    BigInt big_number() {
        if (lex.tok != Tok::number) lex.fail("expected a number");
        BigInt v = BigInt::from_string(lex.value);
        lex.advance();
        return v;
    }

    ExprPtr expr() {
        ExprPtr left = tensor_expr();
        if (lex.tok == Tok::compose_op) {
            lex.advance();
            ExprPtr right = expr();  // right-associating: left is applied after
            return Expr::compose(left, right);
        }
        return left;
    }

    ExprPtr tensor_expr() {
        ExprPtr out = atom();
        while (lex.tok == Tok::tensor_op) {
            lex.advance();
            out = Expr::tensor(out, atom());
        }
        return out;
    }

    ExprPtr atom() {
        if (lex.tok == Tok::lparen) {
            lex.advance();
            ExprPtr inner = expr();
            expect(Tok::rparen, "')'");
            return inner;
        }
        if (lex.tok != Tok::name) lex.fail("expected a generator, id, inv or '('");
        std::string name = lex.value;
        lex.advance();
        if (name == "id") {
            expect(Tok::lparen, "'('");
            std::int64_t m = number();
            expect(Tok::comma, "','");
            std::int64_t n = number();
            expect(Tok::rparen, "')'");
            return Expr::id({m, n});
        }
        if (name == "inv") {
            expect(Tok::lparen, "'('");
            ExprPtr inner = expr();
            expect(Tok::rparen, "')'");
            return Expr::inv(inner);
        }
        if (name == "conn") {
            expect(Tok::lparen, "'('");
            BigInt g = big_number();
            expect(Tok::comma, "','");
            BigInt k = big_number();
            expect(Tok::comma, "','");
            std::int64_t w = number();
            expect(Tok::semicolon, "';'");
            std::int64_t s = number();
            expect(Tok::arrow, "'->'");
            std::int64_t t = number();
            expect(Tok::rparen, "')'");
            return Expr::conn(std::move(g), std::move(k), w, s, t);
        }
        if (name == "p") {
            expect(Tok::lparen, "'('");
            std::int64_t k = number();
            expect(Tok::rparen, "')'");
            return Expr::p(k);
        }
        if (name == "tau") {
            expect(Tok::lparen, "'('");
            std::int64_t n = number();
            expect(Tok::rparen, "')'");
            return Expr::tau_of(n);
        }
        return Expr::gen(std::move(name));
    }
};

}  // namespace

ExprPtr parse(const std::string& text) {
    Parser p(text);
    ExprPtr e = p.expr();
    if (p.lex.tok != Tok::end) p.lex.fail("trailing input");
    signature(e);  // type-check eagerly
    return e;
}

namespace {

void pretty_rec(const ExprPtr& e, std::string& out, bool parens_compose,
                bool parens_tensor) {
    bool need = (e->kind == Expr::Kind::compose && parens_compose) ||
                (e->kind == Expr::Kind::tensor && parens_tensor);
    if (need) out += "(";
    switch (e->kind) {
        case Expr::Kind::gen:
            out += e->name;
            break;
        case Expr::Kind::conn:
            out += "conn(" + e->a0.to_string() + "," + e->a1.to_string() + "," +
                   std::to_string(e->w) + "; " + std::to_string(e->s) + "->" +
                   std::to_string(e->t) + ")";
            break;
        case Expr::Kind::connecting_p:
            out += "p(" + std::to_string(e->s) + ")";
            break;
        case Expr::Kind::tau_n:
            out += "tau(" + std::to_string(e->s) + ")";
            break;
        case Expr::Kind::object_id:
            out += "id(" + std::to_string(e->sig.circles) + "," +
                   std::to_string(e->sig.intervals) + ")";
            break;
        case Expr::Kind::compose:
            // a o b o c parses right-associated, so only the left operand of a
            // compose needs protecting
            pretty_rec(e->lhs, out, true, false);
            out += " o ";
            pretty_rec(e->rhs, out, false, false);
            break;
        case Expr::Kind::tensor:
            pretty_rec(e->lhs, out, true, false);
            out += " * ";
            pretty_rec(e->rhs, out, true, true);
            break;
        case Expr::Kind::inv:
            out += "inv(";
            pretty_rec(e->inner, out, false, false);
            out += ")";
            break;
    }
    if (need) out += ")";
}

}  // namespace

std::string pretty(const ExprPtr& e) {
    std::string out;
    pretty_rec(e, out, false, false);
    return out;
}

Cobordism eval_expr(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::gen:
            return generator(e->name);
        case Expr::Kind::conn:
            return conn_closed(e->a0, e->a1, e->w, e->s, e->t);
        case Expr::Kind::connecting_p:
            return connecting(e->s);
        case Expr::Kind::tau_n:
            return tau(e->s);
        case Expr::Kind::object_id:
            return identity(e->sig);
        case Expr::Kind::compose:
            return compose(eval_expr(e->rhs), eval_expr(e->lhs));
        case Expr::Kind::tensor:
            return tensor(eval_expr(e->lhs), eval_expr(e->rhs));
        case Expr::Kind::inv:
            throw TypeMismatch("eval_expr: inv is only valid in localisation contexts");
    }
    throw TypeMismatch("eval_expr: unreachable");
}

namespace {

oracle::Complex oracle_eval(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::gen:
            return oracle::generator_complex(e->name);
        case Expr::Kind::conn:
            return oracle::conn_complex(e->a0, e->a1, e->w, e->s, e->t);
        case Expr::Kind::connecting_p: {
            oracle::Complex out = oracle::conn_complex(0, 0, 0, 0, 1);
            for (std::int64_t i = 1; i < e->s; ++i)
                out = oracle::tensor(out, oracle::conn_complex(0, 0, 0, 0, 1));
            return out;
        }
        case Expr::Kind::tau_n:
            return oracle::conn_complex(0, 1, 0, e->s, 1);
        case Expr::Kind::object_id:
            return oracle::identity_complex(e->sig);
        case Expr::Kind::compose:
            return oracle::compose(oracle_eval(e->rhs), oracle_eval(e->lhs));
        case Expr::Kind::tensor:
            return oracle::tensor(oracle_eval(e->lhs), oracle_eval(e->rhs));
        case Expr::Kind::inv:
            throw TypeMismatch("oracle_classify: inv is not a surface");
    }
    throw TypeMismatch("oracle_classify: unreachable");
}

}  // namespace

std::vector<oracle::ComponentInvariants> oracle_classify(const ExprPtr& e) {
    signature(e);
    return oracle::classify(oracle_eval(e));
}

LocWord to_locword(const ExprPtr& e) {
    if (e->kind == Expr::Kind::compose) {
        LocWord before = to_locword(e->rhs);
        LocWord after = to_locword(e->lhs);
        LocWord out = before;
        for (auto& letter : after.letters) out.letters.push_back(std::move(letter));
        return out;
    }
    if (e->kind == Expr::Kind::inv) {
        Cobordism c = eval_expr(e->inner);
        LocWord out = LocWord::at(c.target);
        out.then(std::move(c), Direction::inv);
        return out;
    }
    Cobordism c = eval_expr(e);
    LocWord out = LocWord::at(c.source);
    out.then(std::move(c), Direction::fwd);
    return out;
}

bool equal_ast(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Expr::Kind::gen:
            return a->name == b->name;
        case Expr::Kind::conn:
            return a->a0 == b->a0 && a->a1 == b->a1 && a->w == b->w && a->s == b->s &&
                   a->t == b->t;
        case Expr::Kind::connecting_p:
        case Expr::Kind::tau_n:
            return a->s == b->s;
        case Expr::Kind::object_id:
            return a->sig == b->sig;
        case Expr::Kind::compose:
        case Expr::Kind::tensor:
            return equal_ast(a->lhs, b->lhs) && equal_ast(a->rhs, b->rhs);
        case Expr::Kind::inv:
            return equal_ast(a->inner, b->inner);
    }
    return false;
}

}  // namespace cob
