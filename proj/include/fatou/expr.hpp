#pragma once
#include "fatou/common.hpp"
#include "fatou/poles.hpp"
#include <map>
#include <memory>
#include <string>

namespace fatou {

enum class Op { Var, Const, Add, Sub, Mul, Div, Pow, Exp, Sin, Cos, Ref };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// Immutable expression node. The tree is finite and acyclic by construction
/// (Ref nodes resolve through FunctionExpr::defs, which is checked acyclic).
struct Node {
    Op op;
    cplx k{};         // Const
    long expo = 0;    // Pow exponent
    NodePtr a, b;     // operands
    std::string name; // Ref
};

NodePtr nvar();
NodePtr nconst(cplx v);
NodePtr nadd(NodePtr a, NodePtr b);
NodePtr nsub(NodePtr a, NodePtr b);
NodePtr nmul(NodePtr a, NodePtr b);
NodePtr ndiv(NodePtr a, NodePtr b);
NodePtr npow(NodePtr a, long n);
NodePtr nexp(NodePtr a);
NodePtr nsin(NodePtr a);
NodePtr ncos(NodePtr a);
NodePtr nref(const std::string& name);

/// Evaluable meromorphic function: expression tree, optional named
/// sub-expressions, and an optional pole registry.
struct FunctionExpr {
    NodePtr root;
    std::map<std::string, NodePtr> defs; ///< targets of Ref nodes
    PoleSet poles;
    bool poles_known = false;            ///< registry is exhaustive within validity radius
    double pole_validity_radius = INFINITY;
    std::string tag;

    static FunctionExpr make(NodePtr root, std::string tag = "");
    /// True when the tree contains no quotient (hence no poles anywhere).
    bool entire_by_structure() const;
    /// True when the tree contains exp/sin/cos.
    bool transcendental() const;
    const Node& resolve(const Node& n) const; ///< follow a Ref node
};

struct ParseError : Error {
    int line, column;
    ParseError(const std::string& what, int line, int column)
        : Error(what), line(line), column(column) {}
};

/// Parse the function DSL. Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' integer)?
///   base   := 'z' | number | 'i' | 'pi' | 'e' | func '(' expr ')' | '(' expr ')'
///   func   := 'exp' | 'sin' | 'cos'
FunctionExpr parse_function(const std::string& text);

/// Serialize back to DSL text; reparsing evaluates identically.
std::string to_dsl(const FunctionExpr& f);
std::string to_dsl(const NodePtr& n);

} // namespace fatou
