#include "vapi/java/ast.hpp"

#include <nlohmann/json.hpp>

namespace vapi::java {

namespace {

void append(std::string& out, const std::string& tok) {
    if (!out.empty()) out += " ";
    out += tok;
}

void serialize_expr(const Expr& e, std::string& out);

void serialize_args(const std::vector<Expr>& kids, size_t from, std::string& out) {
    append(out, "(");
    for (size_t i = from; i < kids.size(); ++i) {
        if (i > from) append(out, ",");
        serialize_expr(kids[i], out);
    }
    append(out, ")");
}

void serialize_expr(const Expr& e, std::string& out) {
    switch (e.kind) {
        case ExprKind::Name:
        case ExprKind::Literal:
        case ExprKind::Unknown:
            append(out, e.text);
            break;
        case ExprKind::Call:
            if (e.has_receiver) {
                serialize_expr(e.kids.front(), out);
                append(out, ".");
            }
            append(out, e.text);
            serialize_args(e.kids, e.has_receiver ? 1 : 0, out);
            break;
        case ExprKind::FieldAccess:
            serialize_expr(e.kids.front(), out);
            append(out, ".");
            append(out, e.text);
            break;
        case ExprKind::Binary:
        case ExprKind::Assign:
            serialize_expr(e.kids[0], out);
            append(out, e.text);
            serialize_expr(e.kids[1], out);
            break;
        case ExprKind::Unary:
            if (e.text.rfind("post", 0) == 0) {
                serialize_expr(e.kids[0], out);
                append(out, e.text.substr(4));
            } else {
                append(out, e.text);
                serialize_expr(e.kids[0], out);
            }
            break;
        case ExprKind::Ternary:
            serialize_expr(e.kids[0], out);
            append(out, "?");
            serialize_expr(e.kids[1], out);
            append(out, ":");
            serialize_expr(e.kids[2], out);
            break;
        case ExprKind::Cast:
            append(out, "(");
            append(out, e.text);
            append(out, ")");
            serialize_expr(e.kids[0], out);
            break;
        case ExprKind::Paren:
            append(out, "(");
            serialize_expr(e.kids[0], out);
            append(out, ")");
            break;
        case ExprKind::ArrayAccess:
            serialize_expr(e.kids[0], out);
            append(out, "[");
            serialize_expr(e.kids[1], out);
            append(out, "]");
            break;
        case ExprKind::InstanceOf:
            serialize_expr(e.kids[0], out);
            append(out, "instanceof");
            append(out, e.text);
            break;
        case ExprKind::New:
            append(out, "new");
            append(out, e.text);
            serialize_args(e.kids, 0, out);
            break;
        case ExprKind::NewArray:
            append(out, "new");
            append(out, e.text);
            for (const auto& k : e.kids) serialize_expr(k, out);
            break;
    }
}

void serialize_decl_core(const Stmt& s, std::string& out) {
    append(out, s.decl_type);
    for (size_t i = 0; i < s.declarators.size(); ++i) {
        if (i) append(out, ",");
        append(out, s.declarators[i].name);
        if (s.declarators[i].init) {
            append(out, "=");
            serialize_expr(*s.declarators[i].init, out);
        }
    }
}

void serialize_stmt(const Stmt& s, std::string& out);

void serialize_list(const std::vector<Stmt>& list, std::string& out) {
    append(out, "{");
    for (const auto& c : list) serialize_stmt(c, out);
    append(out, "}");
}

void serialize_stmt(const Stmt& s, std::string& out) {
    switch (s.kind) {
        case StmtKind::Block:
            serialize_list(s.children, out);
            break;
        case StmtKind::If:
            append(out, "if");
            append(out, "(");
            serialize_expr(*s.expr, out);
            append(out, ")");
            serialize_list(s.children, out);
            if (s.has_else) {
                append(out, "else");
                serialize_list(s.else_children, out);
            }
            break;
        case StmtKind::While:
            append(out, "while");
            append(out, "(");
            serialize_expr(*s.expr, out);
            append(out, ")");
            serialize_list(s.children, out);
            break;
        case StmtKind::For:
            append(out, "for");
            append(out, "(");
            if (s.for_each) {
                append(out, s.decl_type);
                append(out, s.declarators.front().name);
                append(out, ":");
                serialize_expr(*s.expr, out);
            } else {
                for (size_t i = 0; i < s.for_init.size(); ++i) {
                    if (i) append(out, ",");
                    if (s.for_init[i].kind == StmtKind::LocalVarDecl)
                        serialize_decl_core(s.for_init[i], out);
                    else
                        serialize_expr(*s.for_init[i].expr, out);
                }
                append(out, ";");
                if (s.for_cond) serialize_expr(*s.for_cond, out);
                append(out, ";");
                for (size_t i = 0; i < s.for_updates.size(); ++i) {
                    if (i) append(out, ",");
                    serialize_expr(s.for_updates[i], out);
                }
            }
            append(out, ")");
            serialize_list(s.children, out);
            break;
        case StmtKind::Return:
            append(out, "return");
            if (s.expr) serialize_expr(*s.expr, out);
            append(out, ";");
            break;
        case StmtKind::Throw:
            append(out, "throw");
            serialize_expr(*s.expr, out);
            append(out, ";");
            break;
        case StmtKind::ExprStmt:
            serialize_expr(*s.expr, out);
            append(out, ";");
            break;
        case StmtKind::LocalVarDecl:
            serialize_decl_core(s, out);
            append(out, ";");
            break;
        case StmtKind::TryCatch:
            append(out, "try");
            if (!s.try_resources.empty()) append(out, s.try_resources);
            serialize_list(s.children, out);
            for (const auto& cc : s.catches) {
                append(out, "catch");
                append(out, "(");
                append(out, cc.param_type);
                append(out, cc.param_name);
                append(out, ")");
                serialize_list(cc.body, out);
            }
            if (s.has_finally) {
                append(out, "finally");
                serialize_list(s.finally_children, out);
            }
            break;
        case StmtKind::Unknown:
            append(out, s.raw_text);
            break;
    }
}

} // namespace

std::string serialize(const Expr& e) {
    std::string out;
    serialize_expr(e, out);
    return out;
}

std::string serialize(const Stmt& s) {
    std::string out;
    serialize_stmt(s, out);
    return out;
}

std::string serialize_stmt_list(const std::vector<Stmt>& list) {
    std::string out;
    serialize_list(list, out);
    return out;
}

bool is_compound(StmtKind k) {
    return k == StmtKind::Block || k == StmtKind::If || k == StmtKind::While ||
           k == StmtKind::For || k == StmtKind::TryCatch;
}

std::string compound_header(const Stmt& s) {
    std::string out;
    switch (s.kind) {
        case StmtKind::Block:
            break;
        case StmtKind::If:
            append(out, "if");
            append(out, "(");
            serialize_expr(*s.expr, out);
            append(out, ")");
            break;
        case StmtKind::While:
            append(out, "while");
            append(out, "(");
            serialize_expr(*s.expr, out);
            append(out, ")");
            break;
        case StmtKind::For:
            append(out, "for");
            append(out, "(");
            if (s.for_each) {
                append(out, s.decl_type);
                append(out, s.declarators.front().name);
                append(out, ":");
                serialize_expr(*s.expr, out);
            } else {
                for (size_t i = 0; i < s.for_init.size(); ++i) {
                    if (i) append(out, ",");
                    if (s.for_init[i].kind == StmtKind::LocalVarDecl)
                        serialize_decl_core(s.for_init[i], out);
                    else
                        serialize_expr(*s.for_init[i].expr, out);
                }
                append(out, ";");
                if (s.for_cond) serialize_expr(*s.for_cond, out);
                append(out, ";");
                for (size_t i = 0; i < s.for_updates.size(); ++i) {
                    if (i) append(out, ",");
                    serialize_expr(s.for_updates[i], out);
                }
            }
            append(out, ")");
            break;
        case StmtKind::TryCatch:
            append(out, "try");
            if (!s.try_resources.empty()) append(out, s.try_resources);
            for (const auto& cc : s.catches) {
                append(out, "catch");
                append(out, "(");
                append(out, cc.param_type);
                append(out, cc.param_name);
                append(out, ")");
            }
            if (s.has_finally) append(out, "finally");
            break;
        default:
            out = serialize(s);
            break;
    }
    return out;
}

std::vector<MethodRecord> extract_methods(const CompilationUnit& unit) {
    std::vector<MethodRecord> out;
    for (const auto& c : unit.classes)
        for (const auto& m : c.methods) out.push_back(m);
    return out;
}

Digest128 normalize_and_hash(const MethodRecord& m) { return digest128(serialize(m.body)); }

void for_each_expr(const Stmt& s, const std::function<void(const Expr&)>& fn) {
    if (s.expr) fn(*s.expr);
    for (const auto& d : s.declarators)
        if (d.init) fn(*d.init);
    for (const auto& i : s.for_init) {
        if (i.expr) fn(*i.expr);
        for (const auto& d : i.declarators)
            if (d.init) fn(*d.init);
    }
    if (s.for_cond) fn(*s.for_cond);
    for (const auto& u : s.for_updates) fn(u);
}

void for_each_expr_deep(const Expr& e, const std::function<void(const Expr&)>& fn) {
    fn(e);
    for (const auto& k : e.kids) for_each_expr_deep(k, fn);
}

void for_each_stmt(const Stmt& s, const std::function<void(const Stmt&)>& fn) {
    fn(s);
    for (const auto& c : s.children) for_each_stmt(c, fn);
    for (const auto& c : s.else_children) for_each_stmt(c, fn);
    for (const auto& c : s.for_init) for_each_stmt(c, fn);
    for (const auto& cc : s.catches)
        for (const auto& c : cc.body) for_each_stmt(c, fn);
    for (const auto& c : s.finally_children) for_each_stmt(c, fn);
}

void collect_local_var_types(const Stmt& body, std::map<std::string, std::string>& out) {
    for_each_stmt(body, [&](const Stmt& s) {
        if (s.kind == StmtKind::LocalVarDecl || (s.kind == StmtKind::For && s.for_each)) {
            for (const auto& d : s.declarators) out[d.name] = s.decl_type;
        }
        for (const auto& cc : s.catches) out[cc.param_name] = cc.param_type;
    });
}

namespace {

nlohmann::ordered_json expr_json(const Expr& e) {
    static const char* names[] = {"name",   "literal", "call",        "field-access",
                                  "binary", "assign",  "unary",       "ternary",
                                  "cast",   "paren",   "array-access", "instanceof",
                                  "new",    "new-array", "unknown"};
    nlohmann::ordered_json j;
    j["kind"] = names[static_cast<int>(e.kind)];
    if (!e.text.empty()) j["text"] = e.text;
    if (e.has_receiver) j["has_receiver"] = true;
    if (!e.kids.empty()) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& k : e.kids) arr.push_back(expr_json(k));
        j["kids"] = arr;
    }
    return j;
}

nlohmann::ordered_json stmt_json(const Stmt& s) {
    static const char* names[] = {"block", "if",   "while",          "for",
                                  "return", "throw", "expr-stmt",    "local-var-decl",
                                  "try-catch", "unknown"};
    nlohmann::ordered_json j;
    j["kind"] = names[static_cast<int>(s.kind)];
    j["text"] = serialize(s);
    auto list = [](const std::vector<Stmt>& v) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : v) arr.push_back(stmt_json(c));
        return arr;
    };
    if (s.expr) j["expr"] = expr_json(*s.expr);
    if (!s.children.empty()) j["children"] = list(s.children);
    if (s.has_else) j["else"] = list(s.else_children);
    if (!s.catches.empty()) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& cc : s.catches) {
            nlohmann::ordered_json c;
            c["type"] = cc.param_type;
            c["name"] = cc.param_name;
            c["body"] = list(cc.body);
            arr.push_back(c);
        }
        j["catches"] = arr;
    }
    if (s.has_finally) j["finally"] = list(s.finally_children);
    return j;
}

} // namespace

std::string stmt_to_json(const Stmt& s) { return stmt_json(s).dump(); }

} // namespace vapi::java
