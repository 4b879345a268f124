#include "vapi/sift/sift.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace vapi {

using java::Expr;
using java::ExprKind;
using java::Stmt;
using java::StmtKind;

namespace {

void mask_string_literals(Expr& e) {
    if (e.kind == ExprKind::Literal && !e.text.empty() && e.text.front() == '"') e.text = "<S>";
    for (auto& k : e.kids) mask_string_literals(k);
}

void mask_string_literals(Stmt& s) {
    if (s.expr) mask_string_literals(*s.expr);
    for (auto& d : s.declarators)
        if (d.init) mask_string_literals(*d.init);
    for (auto& i : s.for_init) mask_string_literals(i);
    if (s.for_cond) mask_string_literals(*s.for_cond);
    for (auto& u : s.for_updates) mask_string_literals(u);
    for (auto& c : s.children) mask_string_literals(c);
    for (auto& c : s.else_children) mask_string_literals(c);
    for (auto& cc : s.catches)
        for (auto& c : cc.body) mask_string_literals(c);
    for (auto& c : s.finally_children) mask_string_literals(c);
}

std::string masked_serialization(const Stmt& s) {
    Stmt copy = s;
    mask_string_literals(copy);
    return java::serialize(copy);
}

// Last identifier of a receiver chain: `log` -> log, `this.logger` -> logger.
std::string receiver_tail_name(const Expr& recv) {
    if (recv.kind == ExprKind::Name) return recv.text;
    if (recv.kind == ExprKind::FieldAccess) return recv.text;
    return "";
}

bool is_debugging_call(const Stmt& s, const SiftContext& ctx) {
    if (s.kind != StmtKind::ExprStmt || !s.expr || s.expr->kind != ExprKind::Call) return false;
    const Expr& call = *s.expr;
    if (call.text == "println" && call.receiver()) {
        std::string recv = java::serialize(*call.receiver());
        if (recv == "System . out" || recv == "System . err") return true;
    }
    if (ctx.logger_callees.count(call.text)) return true;
    if (call.receiver() && ctx.logger_receivers.count(receiver_tail_name(*call.receiver())))
        return true;
    return false;
}

bool is_throw_new(const Stmt& s) {
    return s.kind == StmtKind::Throw && s.expr && s.expr->kind == ExprKind::New;
}

bool check_debugging(const StatementChange& change, const SiftContext& ctx) {
    if (change.before && is_debugging_call(*change.before, ctx)) return true;
    if (change.after && is_debugging_call(*change.after, ctx)) return true;
    if (change.kind == StatementChangeKind::Update && is_throw_new(*change.before) &&
        is_throw_new(*change.after)) {
        // exception-message-only edits: equal once string literals are masked
        if (masked_serialization(*change.before) == masked_serialization(*change.after))
            return true;
    }
    return false;
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool check_rename_equivalent(const StatementChange& change, const SiftContext& ctx,
                             const MethodId& method) {
    if (change.kind != StatementChangeKind::Update) return false;
    if (ctx.rset.empty()) return false;
    std::map<std::string, std::string> subst;
    for (const auto& [mid, oldn, newn] : ctx.rset.renamed_params)
        if (mid == method) subst.emplace(oldn, newn);
    for (const auto& [cls, oldn, newn] : ctx.rset.renamed_fields)
        if (cls == method.class_fqn) subst.emplace(oldn, newn);
    for (const auto& [oldid, newid] : ctx.rset.renamed_functions)
        subst.emplace(oldid.name, newid.name);
    if (subst.empty()) return false;
    auto toks = split_tokens(java::serialize(*change.before));
    for (auto& t : toks) {
        auto it = subst.find(t);
        if (it != subst.end()) t = it->second;
    }
    return toks == split_tokens(java::serialize(*change.after));
}

bool check_assign_lhs_rename(const StatementChange& change) {
    if (change.kind != StatementChangeKind::Update) return false;
    const Stmt& b = *change.before;
    const Stmt& a = *change.after;
    if (b.kind == StmtKind::LocalVarDecl && a.kind == StmtKind::LocalVarDecl) {
        if (b.decl_type != a.decl_type || b.declarators.size() != a.declarators.size())
            return false;
        bool renamed = false;
        for (size_t i = 0; i < b.declarators.size(); ++i) {
            const auto& db = b.declarators[i];
            const auto& da = a.declarators[i];
            if (db.init.has_value() != da.init.has_value()) return false;
            if (db.init && java::serialize(*db.init) != java::serialize(*da.init)) return false;
            if (db.name != da.name) renamed = true;
        }
        return renamed;
    }
    if (b.kind == StmtKind::ExprStmt && a.kind == StmtKind::ExprStmt &&
        b.expr->kind == ExprKind::Assign && a.expr->kind == ExprKind::Assign &&
        b.expr->text == "=" && a.expr->text == "=") {
        const Expr& lb = b.expr->kids[0];
        const Expr& la = a.expr->kids[0];
        if (lb.kind != ExprKind::Name || la.kind != ExprKind::Name) return false;
        if (lb.text == la.text) return false;
        return java::serialize(b.expr->kids[1]) == java::serialize(a.expr->kids[1]);
    }
    return false;
}

bool is_this_field(const Expr& e, const std::set<std::string>& fields) {
    return e.kind == ExprKind::FieldAccess && fields.count(e.text) > 0 &&
           e.kids.front().kind == ExprKind::Name && e.kids.front().text == "this";
}

// this.X = x | return X | return this | return this.X, X a member variable
bool is_getter_setter_stmt(const Stmt& s, const std::set<std::string>& fields) {
    if (s.kind == StmtKind::ExprStmt && s.expr && s.expr->kind == ExprKind::Assign &&
        s.expr->text == "=") {
        return is_this_field(s.expr->kids[0], fields) && s.expr->kids[1].kind == ExprKind::Name;
    }
    if (s.kind == StmtKind::Return && s.expr) {
        if (s.expr->kind == ExprKind::Name)
            return s.expr->text == "this" || fields.count(s.expr->text) > 0;
        return is_this_field(*s.expr, fields);
    }
    return false;
}

bool check_getter_setter(const StatementChange& change, const SiftContext& ctx,
                         const MethodId& method) {
    auto it = ctx.class_fields.find(method.class_fqn);
    static const std::set<std::string> none;
    const auto& fields = it == ctx.class_fields.end() ? none : it->second;
    if (change.before && !is_getter_setter_stmt(*change.before, fields)) return false;
    if (change.after && !is_getter_setter_stmt(*change.after, fields)) return false;
    return change.before || change.after;
}

} // namespace

const char* to_string(UnrelatedPattern p) {
    switch (p) {
        case UnrelatedPattern::Debugging: return "debugging";
        case UnrelatedPattern::RenameEquivalent: return "rename-equivalent";
        case UnrelatedPattern::AssignLhsRename: return "assign-lhs-rename";
        case UnrelatedPattern::GetterSetter: return "getter-setter";
    }
    return "?";
}

void RenamingSet::merge(const RenamingSet& other) {
    renamed_functions.insert(other.renamed_functions.begin(), other.renamed_functions.end());
    renamed_fields.insert(other.renamed_fields.begin(), other.renamed_fields.end());
    renamed_params.insert(other.renamed_params.begin(), other.renamed_params.end());
}

void SiftContext::add_fields(const java::CompilationUnit& unit) {
    for (const auto& c : unit.classes)
        for (const auto& f : c.fields) class_fields[c.fqn].insert(f.name);
}

RenamingSet build_renaming_set(const std::vector<MethodDiff>& diffs,
                               const java::CompilationUnit& before,
                               const java::CompilationUnit& after) {
    RenamingSet rset;
    std::map<MethodId, const java::MethodRecord*> bmap, amap;
    for (const auto& c : before.classes)
        for (const auto& m : c.methods) bmap[m.id] = &m;
    for (const auto& c : after.classes)
        for (const auto& m : c.methods) amap[m.id] = &m;

    // functions: deleted + inserted with equal bodies, different names
    std::vector<MethodId> deleted, inserted;
    for (const auto& d : diffs) {
        if (d.method_change == MethodChangeKind::Deleted && bmap.count(d.id))
            deleted.push_back(d.id);
        if (d.method_change == MethodChangeKind::Inserted && amap.count(d.id))
            inserted.push_back(d.id);
    }
    for (const auto& did : deleted) {
        const auto* dm = bmap[did];
        for (const auto& iid : inserted) {
            const auto* im = amap[iid];
            if (did.class_fqn == iid.class_fqn && did.name != iid.name &&
                dm->body_hash == im->body_hash)
                rset.renamed_functions.insert({did, iid});
        }
    }

    // fields: same type and initializer, different name, within one class
    for (const auto& cb : before.classes) {
        const java::ClassDecl* ca = nullptr;
        for (const auto& c : after.classes)
            if (c.fqn == cb.fqn) { ca = &c; break; }
        if (!ca) continue;
        auto names = [](const java::ClassDecl& c) {
            std::set<std::string> out;
            for (const auto& f : c.fields) out.insert(f.name);
            return out;
        };
        auto bnames = names(cb), anames = names(*ca);
        for (const auto& fb : cb.fields) {
            if (anames.count(fb.name)) continue;
            for (const auto& fa : ca->fields) {
                if (bnames.count(fa.name)) continue;
                if (fb.declared_type == fa.declared_type &&
                    fb.initializer_text == fa.initializer_text)
                    rset.renamed_fields.insert({cb.fqn, fb.name, fa.name});
            }
        }
    }

    // parameters: matched method, same position, same type, new name
    for (const auto& [id, bm] : bmap) {
        auto it = amap.find(id);
        if (it == amap.end()) continue;
        const auto* am = it->second;
        for (size_t i = 0; i < bm->param_names.size() && i < am->param_names.size(); ++i)
            if (bm->param_names[i] != am->param_names[i])
                rset.renamed_params.insert({id, bm->param_names[i], am->param_names[i]});
    }
    return rset;
}

UnrelatedVerdict classify_statement(const StatementChange& change, const SiftContext& ctx,
                                    const MethodId& method) {
    UnrelatedVerdict v;
    v.path = change.path;
    // opaque statements are always related
    if ((change.before && change.before->kind == StmtKind::Unknown) ||
        (change.after && change.after->kind == StmtKind::Unknown)) {
        v.related = true;
        return v;
    }
    if (check_debugging(change, ctx))
        v.pattern = UnrelatedPattern::Debugging;
    else if (check_rename_equivalent(change, ctx, method))
        v.pattern = UnrelatedPattern::RenameEquivalent;
    else if (check_assign_lhs_rename(change))
        v.pattern = UnrelatedPattern::AssignLhsRename;
    else if (check_getter_setter(change, ctx, method))
        v.pattern = UnrelatedPattern::GetterSetter;
    v.related = !v.pattern.has_value();
    return v;
}

SiftResult sift_methods(const std::vector<MethodDiff>& initial, const SiftContext& ctx) {
    SiftResult result;
    std::set<MethodId> renamed_old;
    for (const auto& [oldid, newid] : ctx.rset.renamed_functions) renamed_old.insert(oldid);

    for (const auto& diff : initial) {
        switch (diff.method_change) {
            case MethodChangeKind::Inserted:
                result.patch_methods.push_back(diff);
                break;
            case MethodChangeKind::Deleted:
                if (renamed_old.count(diff.id))
                    result.sifted_methods.push_back({diff, {}});
                else
                    result.patch_methods.push_back(diff);
                break;
            case MethodChangeKind::Modified: {
                std::vector<UnrelatedVerdict> verdicts;
                bool all_unrelated = true;
                for (const auto& change : diff.statement_changes) {
                    auto v = classify_statement(change, ctx, diff.id);
                    if (v.related) all_unrelated = false;
                    verdicts.push_back(std::move(v));
                }
                if (all_unrelated && !diff.statement_changes.empty())
                    result.sifted_methods.push_back({diff, std::move(verdicts)});
                else
                    result.patch_methods.push_back(diff);
                break;
            }
        }
    }
    return result;
}

std::string sift_result_to_json(const SiftResult& result) {
    nlohmann::ordered_json j;
    auto patch = nlohmann::ordered_json::array();
    for (const auto& d : result.patch_methods) {
        nlohmann::ordered_json m;
        m["method"] = d.id.str();
        m["change"] = to_string(d.method_change);
        patch.push_back(std::move(m));
    }
    j["patch_methods"] = std::move(patch);
    auto sifted = nlohmann::ordered_json::array();
    for (const auto& [d, verdicts] : result.sifted_methods) {
        nlohmann::ordered_json m;
        m["method"] = d.id.str();
        m["change"] = to_string(d.method_change);
        auto vs = nlohmann::ordered_json::array();
        for (const auto& v : verdicts) {
            nlohmann::ordered_json vj;
            std::string p;
            for (const auto& seg : v.path) p += (p.empty() ? "" : ".") + seg;
            vj["path"] = p;
            vj["related"] = v.related;
            if (v.pattern) vj["pattern"] = to_string(*v.pattern);
            vs.push_back(std::move(vj));
        }
        m["verdicts"] = std::move(vs);
        sifted.push_back(std::move(m));
    }
    j["sifted_methods"] = std::move(sifted);
    return j.dump(2);
}

} // namespace vapi
