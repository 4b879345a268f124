#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vapi/core/identifiers.hpp"
#include "vapi/java/ast.hpp"

namespace vapi {

// Insert/Delete/Update of one statement within a matched method pair.
struct StatementChange {
    StatementChangeKind kind;
    std::optional<java::Stmt> before;
    std::optional<java::Stmt> after;
    std::vector<std::string> path; // position path: "2", "else:0", "catch:1:3"
};

struct MethodDiff {
    MethodId id;
    MethodChangeKind method_change;
    std::vector<StatementChange> statement_changes; // empty for Inserted/Deleted
};

// Statement-level diff of two bodies of the same method. LCS over sibling
// statement lists keyed by canonical serialization; matched compound
// statements with equal headers recurse; an identical delete/insert pair
// within one sibling list cancels out.
std::vector<StatementChange> diff_method_pair(const java::MethodRecord& before,
                                              const java::MethodRecord& after);

// Method-level diff of one file pair; either side may be absent (file
// added/deleted). Methods match by MethodId; unchanged methods are omitted.
std::vector<MethodDiff> diff_units(const java::CompilationUnit* before,
                                   const java::CompilationUnit* after);

// JSON dump (--dump-diff).
std::string diffs_to_json(const std::vector<MethodDiff>& diffs);

} // namespace vapi
