#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cob/localise.hpp"
#include "cob/oracle.hpp"
#include "cob/surface.hpp"

namespace cob {

// Expression AST over the generator vocabulary. Compose(after, before) is
// "after . before"; Inv only makes sense in localisation contexts.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { gen, conn, connecting_p, tau_n, object_id, compose, tensor, inv };

    Kind kind = Kind::gen;
    std::string name;            // gen
    BigInt a0, a1;               // conn: genus, crosscaps
    std::int64_t w = 0;          // conn: windows
    std::int64_t s = 0, t = 0;   // conn: source/target circles; p/tau: count in s
    ObjectSig sig;               // object_id
    ExprPtr lhs, rhs;            // compose: after, before; tensor: left, right
    ExprPtr inner;               // inv

    static ExprPtr gen(std::string name);
    static ExprPtr conn(BigInt g, BigInt k, std::int64_t w, std::int64_t s, std::int64_t t);
    static ExprPtr p(std::int64_t k);
    static ExprPtr tau_of(std::int64_t n);
    static ExprPtr id(ObjectSig sig);
    static ExprPtr compose(ExprPtr after, ExprPtr before);
    static ExprPtr tensor(ExprPtr left, ExprPtr right);
    static ExprPtr inv(ExprPtr inner);
};

// source and target signatures; throws TypeMismatch on bad composites
std::pair<ObjectSig, ObjectSig> signature(const ExprPtr& e);

ExprPtr parse(const std::string& text);
std::string pretty(const ExprPtr& e);

// fold through the gluing engine; Inv-free
Cobordism eval_expr(const ExprPtr& e);

// fold through the polygon-complex oracle; never touches the gluing engine
std::vector<oracle::ComponentInvariants> oracle_classify(const ExprPtr& e);

// top-level composition chain as a zigzag; factors under inv become inverse
// letters, every other factor must be Inv-free
LocWord to_locword(const ExprPtr& e);

bool equal_ast(const ExprPtr& a, const ExprPtr& b);

}  // namespace cob
