#include "vapi/localize/localize.hpp"

namespace vapi {

std::set<MethodId> version_diff_methods(const java::SourceTree& v_vul,
                                        const java::SourceTree& v_patch) {
    std::set<MethodId> out;
    for (const auto& [id, rec] : v_vul.method_by_id) {
        const auto* other = v_patch.find_method(id);
        if (!other) {
            out.insert(id); // deleted at release level
            continue;
        }
        if (rec->body_hash == other->body_hash) continue;
        if (!diff_method_pair(*rec, *other).empty()) out.insert(id);
    }
    for (const auto& [id, rec] : v_patch.method_by_id)
        if (!v_vul.contains_method(id)) out.insert(id); // inserted at release level
    return out;
}

LocalizationResult localize(const std::set<MethodId>& patch_methods,
                            const java::SourceTree& v_vul, const java::SourceTree& v_patch,
                            const std::set<MethodId>& vdiff) {
    LocalizationResult r;
    for (const auto& m : patch_methods) {
        bool in_vul = v_vul.contains_method(m);
        bool in_patch = v_patch.contains_method(m);
        if (in_vul && in_patch) {
            // release-level evidence required: the commit change must have
            // survived into the released pair
            if (vdiff.count(m))
                r.roots_commit.insert(m);
            else
                r.discarded.insert(m);
        } else if (!in_vul && in_patch) {
            r.added_patch_methods.insert(m);
        } else {
            // neither version, or patched by deletion: no invocable root in
            // the patch release
            r.discarded.insert(m);
        }
    }
    if (!patch_methods.empty() && r.roots_commit.empty() && r.added_patch_methods.empty())
        throw AllDiscarded("all patch methods discarded at version level");
    return r;
}

} // namespace vapi
