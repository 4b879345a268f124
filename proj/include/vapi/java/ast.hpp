#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vapi/core/method_id.hpp"
#include "vapi/java/digest.hpp"

namespace vapi::java {

enum class ExprKind {
    Name,
    Literal,
    Call,
    FieldAccess,
    Binary,
    Assign,
    Unary,
    Ternary,
    Cast,
    Paren,
    ArrayAccess,
    InstanceOf,
    New,
    NewArray,
    Unknown,
};

// One expression node. `text` holds the role-specific token: identifier for
// Name, literal text for Literal, callee name for Call, field name for
// FieldAccess, operator for Binary/Assign/Unary, type name for
// New/Cast/InstanceOf, raw token run for Unknown.
struct Expr {
    ExprKind kind = ExprKind::Unknown;
    std::string text;
    bool has_receiver = false; // Call: kids front is the receiver expression
    std::vector<Expr> kids;

    const Expr* receiver() const {
        return (kind == ExprKind::Call && has_receiver) ? &kids.front() : nullptr;
    }
    // Call arguments (receiver excluded).
    size_t arg_count() const {
        if (kind != ExprKind::Call && kind != ExprKind::New) return 0;
        return kids.size() - (has_receiver ? 1 : 0);
    }
};

enum class StmtKind {
    Block,
    If,
    While,
    For,
    Return,
    Throw,
    ExprStmt,
    LocalVarDecl,
    TryCatch,
    Unknown,
};

struct Stmt;

struct Declarator {
    std::string name;
    std::optional<Expr> init;
};

struct CatchClause {
    std::string param_type; // multi-catch joined with '|'
    std::string param_name;
    std::vector<Stmt> body;
};

// Statement node. Branch bodies are always statement lists; single-statement
// branches are canonicalized to one-element lists, so `if (x) f();` and
// `if (x) { f(); }` serialize identically.
struct Stmt {
    StmtKind kind = StmtKind::Block;

    // If/While: condition; Return: optional value; Throw/ExprStmt: expression;
    // For-each: the iterable.
    std::optional<Expr> expr;

    // LocalVarDecl and the for-each loop variable.
    std::string decl_type;
    std::vector<Declarator> declarators;

    // Block items; If then-branch; While/For body; TryCatch try-block.
    std::vector<Stmt> children;
    std::vector<Stmt> else_children;
    bool has_else = false;

    // Classic for header.
    std::vector<Stmt> for_init; // zero or one LocalVarDecl/ExprStmt, no ';'
    std::optional<Expr> for_cond;
    std::vector<Expr> for_updates;
    bool for_each = false;

    std::vector<CatchClause> catches;
    std::vector<Stmt> finally_children;
    bool has_finally = false;
    std::string try_resources; // raw, empty when absent

    // Unknown: canonical token run of the whole construct.
    std::string raw_text;
};

struct SourceSpan {
    std::string path;
    int begin_line = 0;
    int end_line = 0;
};

struct MethodRecord {
    MethodId id;
    std::string return_type; // normalized; empty for constructors
    std::vector<std::string> param_names;
    Stmt body; // kind == Block
    Digest128 body_hash;
    SourceSpan span;
};

struct FieldDecl {
    std::string name;
    std::string declared_type; // normalized
    std::optional<Expr> initializer;
    std::string initializer_text; // canonical serialization, "" when absent
};

struct ClassDecl {
    std::string name; // simple name, "Outer$Inner" for one nesting level
    std::string fqn;
    std::optional<std::string> super_name;
    std::vector<std::string> interfaces;
    std::vector<FieldDecl> fields;
    std::vector<MethodRecord> methods;
    bool is_interface = false;
};

struct CompilationUnit {
    std::string package;
    std::vector<ClassDecl> classes; // nested classes flattened after their outer
};

// Canonical serialization: single-space token joining, blocks always braced.
// Equal serializations define statement/body identity everywhere downstream.
std::string serialize(const Expr& e);
std::string serialize(const Stmt& s);
std::string serialize_stmt_list(const std::vector<Stmt>& list);

bool is_compound(StmtKind k);
// Serialized non-body part of a compound statement (condition, for header,
// catch signatures). Two compounds with equal headers diff by recursion.
std::string compound_header(const Stmt& s);

// One record per declared method with a body, constructors included.
std::vector<MethodRecord> extract_methods(const CompilationUnit& unit);

// Digest of the canonical body serialization.
Digest128 normalize_and_hash(const MethodRecord& m);

// Visits every expression in the statement (conditions, initializers, for
// headers, catch bodies) without descending into sub-statements' children —
// use the deep variant for full traversal.
void for_each_expr(const Stmt& s, const std::function<void(const Expr&)>& fn);
void for_each_expr_deep(const Expr& e, const std::function<void(const Expr&)>& fn);
// Full recursive walk over all statements in a subtree, `s` included.
void for_each_stmt(const Stmt& s, const std::function<void(const Stmt&)>& fn);

// Flat map of declared local variable names to normalized types (params not
// included); later declarations win.
void collect_local_var_types(const Stmt& body, std::map<std::string, std::string>& out);

// JSON dump of the statement tree (--dump-ast).
std::string stmt_to_json(const Stmt& s);

} // namespace vapi::java
