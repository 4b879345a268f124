#include "vapi/diff/method_diff.hpp"

#include <map>
#include <nlohmann/json.hpp>

namespace vapi {

using java::Stmt;

namespace {

std::vector<std::string> extend(const std::vector<std::string>& path, const std::string& seg) {
    auto p = path;
    p.push_back(seg);
    return p;
}

void diff_lists(const std::vector<Stmt>& before, const std::vector<Stmt>& after,
                const std::vector<std::string>& path, std::vector<StatementChange>& out);

// Matched same-kind compounds with equal headers diff by their sub-lists.
void diff_compound(const Stmt& b, const Stmt& a, const std::vector<std::string>& path,
                   std::vector<StatementChange>& out) {
    diff_lists(b.children, a.children, path, out);
    if (b.kind == java::StmtKind::If)
        diff_lists(b.else_children, a.else_children, extend(path, "else"), out);
    if (b.kind == java::StmtKind::TryCatch) {
        for (size_t i = 0; i < b.catches.size(); ++i)
            diff_lists(b.catches[i].body, a.catches[i].body,
                       extend(path, "catch:" + std::to_string(i)), out);
        diff_lists(b.finally_children, a.finally_children, extend(path, "finally"), out);
    }
}

void diff_lists(const std::vector<Stmt>& before, const std::vector<Stmt>& after,
                const std::vector<std::string>& path, std::vector<StatementChange>& out) {
    const size_t n = before.size(), m = after.size();
    std::vector<std::string> kb(n), ka(m);
    for (size_t i = 0; i < n; ++i) kb[i] = java::serialize(before[i]);
    for (size_t j = 0; j < m; ++j) ka[j] = java::serialize(after[j]);

    // LCS anchors over serialization keys
    std::vector<std::vector<int>> dp(n + 1, std::vector<int>(m + 1, 0));
    for (size_t i = 1; i <= n; ++i)
        for (size_t j = 1; j <= m; ++j)
            dp[i][j] = kb[i - 1] == ka[j - 1] ? dp[i - 1][j - 1] + 1
                                              : std::max(dp[i - 1][j], dp[i][j - 1]);
    std::vector<std::pair<size_t, size_t>> anchors;
    {
        size_t i = n, j = m;
        while (i > 0 && j > 0) {
            if (kb[i - 1] == ka[j - 1]) {
                anchors.push_back({i - 1, j - 1});
                --i;
                --j;
            } else if (dp[i - 1][j] >= dp[i][j - 1]) {
                --i;
            } else {
                --j;
            }
        }
        std::reverse(anchors.begin(), anchors.end());
    }

    // walk gaps between anchors; pair leftover statements positionally
    std::vector<StatementChange> level;
    size_t bi = 0, aj = 0;
    auto process_gap = [&](size_t bend, size_t aend) {
        while (bi < bend && aj < aend) {
            const Stmt& sb = before[bi];
            const Stmt& sa = after[aj];
            if (sb.kind == sa.kind && java::is_compound(sb.kind) &&
                java::compound_header(sb) == java::compound_header(sa)) {
                diff_compound(sb, sa, extend(path, std::to_string(bi)), out);
            } else if (sb.kind == sa.kind) {
                StatementChange c;
                c.kind = StatementChangeKind::Update;
                c.before = sb;
                c.after = sa;
                c.path = extend(path, std::to_string(bi));
                level.push_back(std::move(c));
            } else {
                StatementChange d;
                d.kind = StatementChangeKind::Delete;
                d.before = sb;
                d.path = extend(path, std::to_string(bi));
                level.push_back(std::move(d));
                StatementChange ins;
                ins.kind = StatementChangeKind::Insert;
                ins.after = sa;
                ins.path = extend(path, std::to_string(aj));
                level.push_back(std::move(ins));
            }
            ++bi;
            ++aj;
        }
        while (bi < bend) {
            StatementChange d;
            d.kind = StatementChangeKind::Delete;
            d.before = before[bi];
            d.path = extend(path, std::to_string(bi));
            level.push_back(std::move(d));
            ++bi;
        }
        while (aj < aend) {
            StatementChange ins;
            ins.kind = StatementChangeKind::Insert;
            ins.after = after[aj];
            ins.path = extend(path, std::to_string(aj));
            level.push_back(std::move(ins));
            ++aj;
        }
    };
    for (const auto& [ai, ajj] : anchors) {
        process_gap(ai, ajj);
        ++bi; // skip the anchor itself
        ++aj;
    }
    process_gap(n, m);

    // identical delete/insert pairs within this sibling list cancel out
    std::map<std::string, int> del_count;
    for (const auto& c : level)
        if (c.kind == StatementChangeKind::Delete) ++del_count[java::serialize(*c.before)];
    std::map<std::string, int> cancel; // per key, pairs to drop
    for (const auto& c : level) {
        if (c.kind != StatementChangeKind::Insert) continue;
        std::string key = java::serialize(*c.after);
        auto it = del_count.find(key);
        if (it != del_count.end() && it->second > 0) {
            --it->second;
            ++cancel[key];
        }
    }
    std::map<std::string, int> drop_ins = cancel, drop_del = cancel;
    for (auto& c : level) {
        if (c.kind == StatementChangeKind::Delete) {
            auto it = drop_del.find(java::serialize(*c.before));
            if (it != drop_del.end() && it->second > 0) {
                --it->second;
                continue;
            }
        }
        if (c.kind == StatementChangeKind::Insert) {
            auto it = drop_ins.find(java::serialize(*c.after));
            if (it != drop_ins.end() && it->second > 0) {
                --it->second;
                continue;
            }
        }
        out.push_back(std::move(c));
    }
}

} // namespace

std::vector<StatementChange> diff_method_pair(const java::MethodRecord& before,
                                              const java::MethodRecord& after) {
    std::vector<StatementChange> out;
    diff_lists(before.body.children, after.body.children, {}, out);
    return out;
}

std::vector<MethodDiff> diff_units(const java::CompilationUnit* before,
                                   const java::CompilationUnit* after) {
    std::map<MethodId, const java::MethodRecord*> bmap, amap;
    if (before)
        for (const auto& c : before->classes)
            for (const auto& m : c.methods) bmap[m.id] = &m;
    if (after)
        for (const auto& c : after->classes)
            for (const auto& m : c.methods) amap[m.id] = &m;

    std::vector<MethodDiff> out;
    for (const auto& [id, bm] : bmap) {
        auto it = amap.find(id);
        if (it == amap.end()) {
            out.push_back({id, MethodChangeKind::Deleted, {}});
            continue;
        }
        if (bm->body_hash == it->second->body_hash) continue;
        auto changes = diff_method_pair(*bm, *it->second);
        if (!changes.empty())
            out.push_back({id, MethodChangeKind::Modified, std::move(changes)});
    }
    for (const auto& [id, am] : amap)
        if (bmap.count(id) == 0) out.push_back({id, MethodChangeKind::Inserted, {}});
    return out;
}

std::string diffs_to_json(const std::vector<MethodDiff>& diffs) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& d : diffs) {
        nlohmann::ordered_json j;
        j["method"] = d.id.str();
        j["change"] = to_string(d.method_change);
        auto changes = nlohmann::ordered_json::array();
        for (const auto& c : d.statement_changes) {
            nlohmann::ordered_json cj;
            cj["kind"] = to_string(c.kind);
            std::string p;
            for (const auto& seg : c.path) p += (p.empty() ? "" : ".") + seg;
            cj["path"] = p;
            if (c.before) cj["before"] = java::serialize(*c.before);
            if (c.after) cj["after"] = java::serialize(*c.after);
            changes.push_back(std::move(cj));
        }
        j["statement_changes"] = std::move(changes);
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

} // namespace vapi
