#include "vapi/java/parser.hpp"

#include "vapi/java/lexer.hpp"

#include <algorithm>
#include <set>

namespace vapi::java {

namespace {

// Internal signal: the current statement does not fit the subset grammar;
// the statement parser falls back to an opaque Unknown statement.
struct SubsetFallback {};

const std::set<std::string> MODIFIERS = {
    "public", "private", "protected", "static",   "final",    "abstract",
    "native", "strictfp", "transient", "volatile", "synchronized", "default",
};

bool is_assign_op(const std::string& t) {
    static const std::set<std::string> ops = {"=",  "+=", "-=", "*=",  "/=",  "%=",
                                              "&=", "|=", "^=", "<<=", ">>="};
    return ops.count(t) > 0;
}

struct BinLevel {
    std::vector<std::string> ops;
};

const std::vector<BinLevel> BIN_LEVELS = {
    {{"||"}},
    {{"&&"}},
    {{"|"}},
    {{"^"}},
    {{"&"}},
    {{"==", "!="}},
    {{"<", ">", "<=", ">=", "instanceof"}},
    {{"<<", ">>", ">>>"}},
    {{"+", "-"}},
    {{"*", "/", "%"}},
};

class Parser {
public:
    Parser(std::vector<Token> toks, std::string path)
        : toks_(std::move(toks)), path_(std::move(path)) {}

    CompilationUnit parse_unit() {
        CompilationUnit unit;
        if (cur().is("package")) {
            next();
            unit.package = parse_qualified_name();
            expect(";");
        }
        while (cur().is("import")) {
            next();
            while (!cur().is(";") && cur().kind != TokenKind::End) next();
            expect(";");
        }
        while (cur().kind != TokenKind::End) {
            skip_annotations_and_modifiers();
            if (cur().is("class") || cur().is("interface")) {
                parse_class(unit, "", 0);
            } else if (cur().is("enum") || cur().is("record")) {
                skip_opaque_type_decl();
            } else if (cur().is(";")) {
                next();
            } else {
                fail("expected a type declaration");
            }
        }
        std::set<std::string> names;
        for (auto& c : unit.classes)
            if (!names.insert(c.name).second)
                fail("duplicate class name '" + c.name + "' in unit");
        return unit;
    }

private:
    std::vector<Token> toks_;
    std::string path_;
    size_t pos_ = 0;

    const Token& cur() const { return toks_[pos_]; }
    const Token& peek(size_t n = 1) const {
        return toks_[std::min(pos_ + n, toks_.size() - 1)];
    }
    const Token& next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(path_, cur().line, cur().col, msg + " (got '" + cur().text + "')");
    }
    void expect(const char* t) {
        if (!cur().is(t)) fail(std::string("expected '") + t + "'");
        next();
    }
    bool accept(const char* t) {
        if (cur().is(t)) { next(); return true; }
        return false;
    }
    bool is_ident() const { return cur().kind == TokenKind::Identifier; }

    void skip_balanced(const char* open, const char* close) {
        expect(open);
        int depth = 1;
        while (depth > 0) {
            if (cur().kind == TokenKind::End) fail(std::string("unbalanced '") + open + "'");
            if (cur().is(open)) ++depth;
            else if (cur().is(close)) --depth;
            next();
        }
    }

    void skip_annotations_and_modifiers() {
        for (;;) {
            if (cur().is("@")) {
                next();
                parse_qualified_name();
                if (cur().is("(")) skip_balanced("(", ")");
                continue;
            }
            if (is_ident() && MODIFIERS.count(cur().text)) {
                // 'default' introduces interface default methods; as a
                // modifier it is always followed by a type token.
                next();
                continue;
            }
            break;
        }
    }

    std::string parse_qualified_name() {
        if (!is_ident()) fail("expected an identifier");
        std::string name = next().text;
        while (cur().is(".") && peek().kind == TokenKind::Identifier) {
            next();
            name += "." + next().text;
        }
        return name;
    }

    // Raw declared-type text: qualified name, optional generics, array
    // suffixes. Returns empty string (position restored) when the tokens do
    // not look like a type.
    std::string try_parse_type_text() {
        size_t save = pos_;
        if (!is_ident() || MODIFIERS.count(cur().text)) return "";
        std::string text = next().text;
        while (cur().is(".") && peek().kind == TokenKind::Identifier) {
            next();
            text += "." + next().text;
        }
        if (cur().is("<")) {
            int depth = 0;
            size_t gsave = pos_;
            std::string gen;
            do {
                if (cur().kind == TokenKind::End) { pos_ = gsave; goto after_generics; }
                if (cur().is("<")) ++depth;
                else if (cur().is(">")) --depth;
                else if (cur().is(">>")) depth -= 2;
                else if (cur().is(">>>")) depth -= 3;
                else if (!(cur().kind == TokenKind::Identifier || cur().is(",") || cur().is(".") ||
                           cur().is("?") || cur().is("extends") || cur().is("super") ||
                           cur().is("[") || cur().is("]"))) {
                    pos_ = gsave;
                    goto after_generics;
                }
                gen += next().text;
            } while (depth > 0);
            text += gen;
        }
    after_generics:
        while (cur().is("[") && peek().is("]")) {
            next();
            next();
            text += "[]";
        }
        if (cur().is("...")) {
            next();
            text += "...";
        }
        (void)save;
        return text;
    }

    std::string parse_type_text() {
        std::string t = try_parse_type_text();
        if (t.empty()) fail("expected a type");
        return t;
    }

    void skip_opaque_type_decl() {
        // enum/record/@interface: consume through the body braces
        next();
        while (!cur().is("{")) {
            if (cur().kind == TokenKind::End) fail("unterminated type declaration");
            next();
        }
        skip_balanced("{", "}");
    }

    void parse_class(CompilationUnit& unit, const std::string& outer, int depth) {
        bool is_interface = cur().is("interface");
        next(); // class | interface
        if (!is_ident()) fail("expected a class name");
        std::string simple = next().text;
        ClassDecl decl;
        decl.is_interface = is_interface;
        decl.name = outer.empty() ? simple : outer + "$" + simple;
        decl.fqn = unit.package.empty() ? decl.name : unit.package + "." + decl.name;
        if (cur().is("<")) skip_generic_params();
        if (accept("extends")) {
            if (is_interface) {
                decl.interfaces.push_back(normalize_type_text(parse_type_text()));
                while (accept(","))
                    decl.interfaces.push_back(normalize_type_text(parse_type_text()));
            } else {
                decl.super_name = normalize_type_text(parse_type_text());
            }
        }
        if (accept("implements")) {
            decl.interfaces.push_back(normalize_type_text(parse_type_text()));
            while (accept(","))
                decl.interfaces.push_back(normalize_type_text(parse_type_text()));
        }
        expect("{");
        size_t class_slot = unit.classes.size();
        unit.classes.push_back(std::move(decl));
        while (!cur().is("}")) {
            if (cur().kind == TokenKind::End) fail("unterminated class body");
            parse_member(unit, class_slot, simple, depth);
        }
        expect("}");
        std::set<std::pair<std::string, std::string>> sigs;
        for (auto& m : unit.classes[class_slot].methods) {
            std::string desc;
            for (auto& p : m.id.param_descriptor) desc += p + ",";
            if (!sigs.insert({m.id.name, desc}).second)
                fail("duplicate method " + m.id.name + " in class " +
                     unit.classes[class_slot].name);
        }
        std::set<std::string> fieldnames;
        for (auto& f : unit.classes[class_slot].fields)
            if (!fieldnames.insert(f.name).second)
                fail("duplicate field " + f.name + " in class " + unit.classes[class_slot].name);
    }

    void skip_generic_params() {
        int depth = 0;
        do {
            if (cur().kind == TokenKind::End) fail("unbalanced '<'");
            if (cur().is("<")) ++depth;
            else if (cur().is(">")) --depth;
            else if (cur().is(">>")) depth -= 2;
            next();
        } while (depth > 0);
    }

    void parse_member(CompilationUnit& unit, size_t class_slot, const std::string& simple,
                      int depth) {
        skip_annotations_and_modifiers();
        if (cur().is(";")) { next(); return; }
        if (cur().is("{")) { skip_balanced("{", "}"); return; } // initializer block
        if (cur().is("class") || cur().is("interface")) {
            if (depth == 0) {
                parse_class(unit, unit.classes[class_slot].name, depth + 1);
            } else {
                // beyond one nesting level: opaque
                skip_opaque_type_decl();
            }
            return;
        }
        if (cur().is("enum") || cur().is("record")) { skip_opaque_type_decl(); return; }
        if (cur().is("<")) skip_generic_params(); // method type parameters

        int begin_line = cur().line;
        // constructor?
        if (is_ident() && cur().text == simple && peek().is("(")) {
            next();
            MethodRecord rec = parse_method_rest(unit, class_slot, "<init>", "", begin_line);
            if (!rec.id.name.empty()) unit.classes[class_slot].methods.push_back(std::move(rec));
            return;
        }
        std::string type = try_parse_type_text();
        if (type.empty()) fail("expected a member declaration");
        if (!is_ident()) fail("expected a member name");
        std::string name = cur().text;
        if (peek().is("(")) {
            next();
            MethodRecord rec =
                parse_method_rest(unit, class_slot, name, normalize_type_text(type), begin_line);
            if (!rec.id.name.empty()) unit.classes[class_slot].methods.push_back(std::move(rec));
            return;
        }
        // field declaration, possibly multiple declarators
        for (;;) {
            if (!is_ident()) fail("expected a field name");
            FieldDecl f;
            f.declared_type = normalize_type_text(type);
            f.name = next().text;
            while (cur().is("[") && peek().is("]")) { next(); next(); }
            if (accept("=")) {
                Expr init;
                try {
                    init = parse_expression();
                } catch (SubsetFallback&) {
                    // array initializers and lambdas: keep the raw token run
                    init = consume_unknown_expr();
                }
                f.initializer_text = serialize(init);
                f.initializer = std::move(init);
            }
            unit.classes[class_slot].fields.push_back(std::move(f));
            if (accept(",")) continue;
            expect(";");
            break;
        }
    }

    MethodRecord parse_method_rest(CompilationUnit& unit, size_t class_slot,
                                   const std::string& name, const std::string& return_type,
                                   int begin_line) {
        MethodRecord rec;
        rec.id.class_fqn = unit.classes[class_slot].fqn;
        rec.id.name = name;
        rec.return_type = return_type;
        rec.span.path = path_;
        rec.span.begin_line = begin_line;
        expect("(");
        if (!cur().is(")")) {
            for (;;) {
                skip_annotations_and_modifiers();
                std::string ptype = try_parse_type_text();
                if (ptype.empty()) fail("malformed parameter list");
                if (!is_ident()) fail("malformed parameter list");
                std::string pname = next().text;
                while (cur().is("[") && peek().is("]")) { next(); next(); ptype += "[]"; }
                rec.id.param_descriptor.push_back(normalize_type_text(ptype));
                rec.param_names.push_back(pname);
                if (accept(",")) continue;
                break;
            }
        }
        expect(")");
        if (accept("throws")) {
            parse_qualified_name();
            while (accept(",")) parse_qualified_name();
        }
        if (accept(";")) {
            // bodyless declaration (abstract / interface): no record
            return MethodRecord{};
        }
        if (!cur().is("{")) fail("expected a method body");
        rec.body = parse_block();
        rec.span.end_line = pos_ > 0 ? toks_[pos_ - 1].line : begin_line;
        rec.body_hash = digest128(serialize(rec.body));
        for (auto& p : rec.id.param_descriptor)
            if (p.empty()) fail("empty parameter type");
        return rec;
    }

    // ---- statements ----

    Stmt parse_block() {
        expect("{");
        Stmt s;
        s.kind = StmtKind::Block;
        while (!cur().is("}")) {
            if (cur().kind == TokenKind::End) fail("unterminated block");
            s.children.push_back(parse_statement());
        }
        expect("}");
        return s;
    }

    // Branch bodies canonicalize to statement lists.
    std::vector<Stmt> parse_branch() {
        if (cur().is("{")) return parse_block().children;
        std::vector<Stmt> one;
        one.push_back(parse_statement());
        return one;
    }

    Stmt parse_statement() {
        size_t save = pos_;
        try {
            return parse_statement_strict();
        } catch (SubsetFallback&) {
            pos_ = save;
            return parse_unknown_statement();
        }
    }

    Stmt parse_statement_strict() {
        if (cur().is("{")) return parse_block();
        if (cur().is("if")) {
            Stmt s;
            s.kind = StmtKind::If;
            next();
            expect("(");
            s.expr = parse_expression();
            expect(")");
            s.children = parse_branch();
            if (accept("else")) {
                s.has_else = true;
                s.else_children = parse_branch();
            }
            return s;
        }
        if (cur().is("while")) {
            Stmt s;
            s.kind = StmtKind::While;
            next();
            expect("(");
            s.expr = parse_expression();
            expect(")");
            s.children = parse_branch();
            return s;
        }
        if (cur().is("for")) return parse_for();
        if (cur().is("return")) {
            Stmt s;
            s.kind = StmtKind::Return;
            next();
            if (!cur().is(";")) s.expr = parse_expression();
            expect_or_fallback(";");
            return s;
        }
        if (cur().is("throw")) {
            Stmt s;
            s.kind = StmtKind::Throw;
            next();
            s.expr = parse_expression();
            expect_or_fallback(";");
            return s;
        }
        if (cur().is("try")) return parse_try();
        if (cur().is("switch") || cur().is("do") || cur().is("synchronized") ||
            cur().is("break") || cur().is("continue") || cur().is("assert") ||
            cur().is("yield"))
            throw SubsetFallback{};

        // local variable declaration?
        {
            size_t save = pos_;
            Stmt decl;
            if (try_parse_local_decl(decl, /*in_for_header=*/false)) return decl;
            pos_ = save;
        }
        // expression statement
        Stmt s;
        s.kind = StmtKind::ExprStmt;
        s.expr = parse_expression();
        expect_or_fallback(";");
        return s;
    }

    void expect_or_fallback(const char* t) {
        if (!cur().is(t)) throw SubsetFallback{};
        next();
    }

    bool try_parse_local_decl(Stmt& out, bool in_for_header) {
        accept("final");
        std::string type = try_parse_type_text();
        if (type.empty() || !is_ident()) return false;
        const std::string& after = peek().text;
        if (!(after == "=" || after == ";" || after == "," ||
              (in_for_header && after == ":")))
            return false;
        out.kind = StmtKind::LocalVarDecl;
        out.decl_type = normalize_type_text(type);
        for (;;) {
            if (!is_ident()) throw SubsetFallback{};
            Declarator d;
            d.name = next().text;
            if (accept("=")) d.init = parse_expression();
            out.declarators.push_back(std::move(d));
            if (accept(",")) continue;
            break;
        }
        if (!in_for_header) expect_or_fallback(";");
        return true;
    }

    Stmt parse_for() {
        Stmt s;
        s.kind = StmtKind::For;
        next();
        expect("(");
        // for-each: Type name : iterable
        {
            size_t save = pos_;
            accept("final");
            std::string type = try_parse_type_text();
            if (!type.empty() && is_ident() && peek().is(":")) {
                s.for_each = true;
                s.decl_type = normalize_type_text(type);
                Declarator d;
                d.name = next().text;
                s.declarators.push_back(std::move(d));
                expect(":");
                s.expr = parse_expression();
                expect(")");
                s.children = parse_branch();
                return s;
            }
            pos_ = save;
        }
        if (!cur().is(";")) {
            size_t save = pos_;
            Stmt init;
            if (try_parse_local_decl(init, /*in_for_header=*/true)) {
                s.for_init.push_back(std::move(init));
            } else {
                pos_ = save;
                Stmt es;
                es.kind = StmtKind::ExprStmt;
                es.expr = parse_expression();
                s.for_init.push_back(std::move(es));
                while (accept(",")) {
                    Stmt es2;
                    es2.kind = StmtKind::ExprStmt;
                    es2.expr = parse_expression();
                    s.for_init.push_back(std::move(es2));
                }
            }
        }
        expect_or_fallback(";");
        if (!cur().is(";")) s.for_cond = parse_expression();
        expect_or_fallback(";");
        if (!cur().is(")")) {
            s.for_updates.push_back(parse_expression());
            while (accept(",")) s.for_updates.push_back(parse_expression());
        }
        expect_or_fallback(")");
        s.children = parse_branch();
        return s;
    }

    Stmt parse_try() {
        Stmt s;
        s.kind = StmtKind::TryCatch;
        next();
        if (cur().is("(")) {
            // try-with-resources: keep the raw header
            std::string raw;
            int depth = 0;
            do {
                if (cur().kind == TokenKind::End) fail("unbalanced try resources");
                if (cur().is("(")) ++depth;
                else if (cur().is(")")) --depth;
                if (!raw.empty()) raw += " ";
                raw += next().text;
            } while (depth > 0);
            s.try_resources = raw;
        }
        s.children = parse_block().children;
        while (cur().is("catch")) {
            next();
            expect("(");
            CatchClause cc;
            skip_annotations_and_modifiers();
            cc.param_type = normalize_type_text(parse_type_text());
            while (accept("|")) cc.param_type += "|" + normalize_type_text(parse_type_text());
            if (!is_ident()) fail("expected a catch parameter name");
            cc.param_name = next().text;
            expect(")");
            cc.body = parse_block().children;
            s.catches.push_back(std::move(cc));
        }
        if (accept("finally")) {
            s.has_finally = true;
            s.finally_children = parse_block().children;
        }
        if (s.catches.empty() && !s.has_finally && s.try_resources.empty())
            fail("try without catch, finally or resources");
        return s;
    }

    // Consumes one out-of-subset construct: through the first ';' at depth 0,
    // or through a brace group opened at depth 0 ('do' keeps going to ';').
    Stmt parse_unknown_statement() {
        Stmt s;
        s.kind = StmtKind::Unknown;
        std::string raw;
        bool is_do = cur().is("do");
        int paren = 0, brace = 0;
        bool saw_brace = false;
        for (;;) {
            if (cur().kind == TokenKind::End) fail("unterminated statement");
            const Token& t = next();
            if (!raw.empty()) raw += " ";
            raw += t.text;
            if (t.is("(") || t.is("[")) ++paren;
            else if (t.is(")") || t.is("]")) --paren;
            else if (t.is("{")) { ++brace; saw_brace = true; }
            else if (t.is("}")) {
                --brace;
                if (brace == 0 && paren == 0 && saw_brace && !is_do) break;
            } else if (t.is(";") && paren == 0 && brace == 0) {
                break;
            }
        }
        s.raw_text = raw;
        return s;
    }

    Expr consume_unknown_expr() {
        // raw token run until ',', ';' or ')' at depth 0 (field initializers,
        // argument positions)
        Expr e;
        e.kind = ExprKind::Unknown;
        std::string raw;
        int depth = 0;
        for (;;) {
            if (cur().kind == TokenKind::End) fail("unterminated expression");
            if (depth == 0 && (cur().is(",") || cur().is(";") || cur().is(")"))) break;
            const Token& t = next();
            if (t.is("(") || t.is("[") || t.is("{")) ++depth;
            else if (t.is(")") || t.is("]") || t.is("}")) --depth;
            if (!raw.empty()) raw += " ";
            raw += t.text;
        }
        e.text = raw;
        return e;
    }

    // ---- expressions ----

    Expr parse_expression() { return parse_assignment(); }

    Expr parse_assignment() {
        Expr lhs = parse_ternary();
        if (cur().kind == TokenKind::Operator && is_assign_op(cur().text)) {
            Expr e;
            e.kind = ExprKind::Assign;
            e.text = next().text;
            e.kids.push_back(std::move(lhs));
            e.kids.push_back(parse_assignment());
            return e;
        }
        return lhs;
    }

    Expr parse_ternary() {
        Expr c = parse_binary(0);
        if (accept("?")) {
            Expr e;
            e.kind = ExprKind::Ternary;
            e.kids.push_back(std::move(c));
            e.kids.push_back(parse_expression());
            expect_or_fail_expr(":");
            e.kids.push_back(parse_ternary());
            return e;
        }
        return c;
    }

    void expect_or_fail_expr(const char* t) {
        if (!cur().is(t)) throw SubsetFallback{};
        next();
    }

    Expr parse_binary(size_t level) {
        if (level >= BIN_LEVELS.size()) return parse_unary();
        Expr lhs = parse_binary(level + 1);
        for (;;) {
            const auto& ops = BIN_LEVELS[level].ops;
            bool matched = false;
            for (const auto& op : ops) {
                if (cur().text == op &&
                    (cur().kind == TokenKind::Operator || op == "instanceof")) {
                    next();
                    if (op == "instanceof") {
                        Expr e;
                        e.kind = ExprKind::InstanceOf;
                        e.text = normalize_type_text(parse_type_text());
                        e.kids.push_back(std::move(lhs));
                        lhs = std::move(e);
                    } else {
                        Expr e;
                        e.kind = ExprKind::Binary;
                        e.text = op;
                        e.kids.push_back(std::move(lhs));
                        e.kids.push_back(parse_binary(level + 1));
                        lhs = std::move(e);
                    }
                    matched = true;
                    break;
                }
            }
            if (!matched) return lhs;
        }
    }

    Expr parse_unary() {
        if (cur().is("!") || cur().is("~") || cur().is("-") || cur().is("+") ||
            cur().is("++") || cur().is("--")) {
            Expr e;
            e.kind = ExprKind::Unary;
            e.text = next().text;
            e.kids.push_back(parse_unary());
            return e;
        }
        if (cur().is("(")) {
            // cast heuristic: (Type) followed by an unambiguous operand start
            size_t save = pos_;
            next();
            std::string type = try_parse_type_text();
            if (!type.empty() && cur().is(")")) {
                const Token& after = peek();
                bool operand = after.kind == TokenKind::Identifier ||
                               after.kind == TokenKind::Number ||
                               after.kind == TokenKind::String ||
                               after.kind == TokenKind::Char || after.is("(") ||
                               after.is("!") || after.is("~");
                if (operand) {
                    next(); // ')'
                    Expr e;
                    e.kind = ExprKind::Cast;
                    e.text = normalize_type_text(type);
                    e.kids.push_back(parse_unary());
                    return e;
                }
            }
            pos_ = save;
        }
        return parse_postfix();
    }

    Expr parse_postfix() {
        Expr e = parse_primary();
        for (;;) {
            if (cur().is(".") && peek().kind == TokenKind::Identifier) {
                next();
                std::string member = next().text;
                if (cur().is("(")) {
                    Expr call;
                    call.kind = ExprKind::Call;
                    call.text = member;
                    call.has_receiver = true;
                    call.kids.push_back(std::move(e));
                    parse_args(call);
                    e = std::move(call);
                } else {
                    Expr fa;
                    fa.kind = ExprKind::FieldAccess;
                    fa.text = member;
                    fa.kids.push_back(std::move(e));
                    e = std::move(fa);
                }
                continue;
            }
            if (cur().is("(") && e.kind == ExprKind::Name) {
                Expr call;
                call.kind = ExprKind::Call;
                call.text = e.text;
                call.has_receiver = false;
                parse_args(call);
                e = std::move(call);
                continue;
            }
            if (cur().is("[")) {
                next();
                Expr idx = parse_expression();
                expect_or_fail_expr("]");
                Expr a;
                a.kind = ExprKind::ArrayAccess;
                a.kids.push_back(std::move(e));
                a.kids.push_back(std::move(idx));
                e = std::move(a);
                continue;
            }
            if (cur().is("++") || cur().is("--")) {
                Expr u;
                u.kind = ExprKind::Unary;
                u.text = "post" + next().text;
                u.kids.push_back(std::move(e));
                e = std::move(u);
                continue;
            }
            if (cur().is("::")) throw SubsetFallback{}; // method references
            return e;
        }
    }

    void parse_args(Expr& call) {
        expect("(");
        if (!cur().is(")")) {
            for (;;) {
                call.kids.push_back(parse_expression());
                if (accept(",")) continue;
                break;
            }
        }
        expect_or_fail_expr(")");
    }

    Expr parse_primary() {
        const Token& t = cur();
        if (t.kind == TokenKind::Number || t.kind == TokenKind::String ||
            t.kind == TokenKind::Char) {
            Expr e;
            e.kind = ExprKind::Literal;
            e.text = next().text;
            return e;
        }
        if (t.is("true") || t.is("false") || t.is("null")) {
            Expr e;
            e.kind = ExprKind::Literal;
            e.text = next().text;
            return e;
        }
        if (t.is("new")) {
            next();
            std::string type = normalize_type_text(parse_type_text());
            if (cur().is("[")) {
                // array creation: keep dims/initializer as a raw kid
                Expr e;
                e.kind = ExprKind::NewArray;
                e.text = type;
                Expr raw;
                raw.kind = ExprKind::Unknown;
                std::string txt;
                int depth = 0;
                while (cur().is("[") || (depth == 0 && cur().is("{"))) {
                    const char* open = cur().is("[") ? "[" : "{";
                    const char* close = cur().is("[") ? "]" : "}";
                    int d = 0;
                    do {
                        if (cur().kind == TokenKind::End) fail("unbalanced array creation");
                        if (cur().is(open)) ++d;
                        else if (cur().is(close)) --d;
                        if (!txt.empty()) txt += " ";
                        txt += next().text;
                    } while (d > 0);
                }
                (void)depth;
                raw.text = txt;
                e.kids.push_back(std::move(raw));
                return e;
            }
            Expr e;
            e.kind = ExprKind::New;
            e.text = type;
            parse_args(e);
            if (cur().is("{")) {
                // anonymous class body: opaque
                Expr raw;
                raw.kind = ExprKind::Unknown;
                std::string txt;
                int d = 0;
                do {
                    if (cur().kind == TokenKind::End) fail("unbalanced anonymous class");
                    if (cur().is("{")) ++d;
                    else if (cur().is("}")) --d;
                    if (!txt.empty()) txt += " ";
                    txt += next().text;
                } while (d > 0);
                raw.text = txt;
                e.kids.push_back(std::move(raw));
            }
            return e;
        }
        if (t.kind == TokenKind::Identifier) {
            // lambda lookahead: `x ->`
            if (peek().is("->")) throw SubsetFallback{};
            Expr e;
            e.kind = ExprKind::Name;
            e.text = next().text;
            return e;
        }
        if (t.is("(")) {
            // lambda lookahead: `( ... ) ->`
            size_t save = pos_;
            int depth = 0;
            size_t scan = pos_;
            do {
                if (toks_[scan].kind == TokenKind::End) break;
                if (toks_[scan].text == "(") ++depth;
                else if (toks_[scan].text == ")") --depth;
                ++scan;
            } while (depth > 0);
            if (scan < toks_.size() && toks_[scan].text == "->") throw SubsetFallback{};
            pos_ = save;
            next();
            Expr inner = parse_expression();
            expect_or_fail_expr(")");
            Expr e;
            e.kind = ExprKind::Paren;
            e.kids.push_back(std::move(inner));
            return e;
        }
        throw SubsetFallback{};
    }
};

} // namespace

CompilationUnit parse_source(const std::string& text, const std::string& path) {
    Parser p(lex(text, path), path);
    return p.parse_unit();
}

} // namespace vapi::java
