#pragma once

#include <set>
#include <stdexcept>

#include "vapi/diff/method_diff.hpp"
#include "vapi/java/source_tree.hpp"

namespace vapi {

// Release-level classification of commit patch methods: commit-derived
// roots, added patch methods kept for augmentation, and discards.
struct LocalizationResult {
    std::set<MethodId> roots_commit;        // exist in both versions and in the version diff
    std::set<MethodId> added_patch_methods; // exist only in the patch release
    std::set<MethodId> discarded;
};

// Every patch method of the CVE was discarded; the CVE is excluded.
class AllDiscarded : public std::runtime_error {
public:
    explicit AllDiscarded(const std::string& what) : std::runtime_error(what) {}
};

// MethodIds inserted, deleted or modified between the two release trees.
std::set<MethodId> version_diff_methods(const java::SourceTree& v_vul,
                                        const java::SourceTree& v_patch);

// Applies the discard/retain strategy table. Throws AllDiscarded when no
// patch method survives.
LocalizationResult localize(const std::set<MethodId>& patch_methods,
                            const java::SourceTree& v_vul, const java::SourceTree& v_patch,
                            const std::set<MethodId>& vdiff);

} // namespace vapi
