#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "vapi/diff/method_diff.hpp"

namespace vapi {

// Pure renames detected in one commit: functions with unchanged bodies,
// fields with unchanged type and initializer, parameters with unchanged type.
struct RenamingSet {
    std::set<std::pair<MethodId, MethodId>> renamed_functions;
    std::set<std::tuple<std::string, std::string, std::string>> renamed_fields; // class, old, new
    std::set<std::tuple<MethodId, std::string, std::string>> renamed_params;

    bool empty() const {
        return renamed_functions.empty() && renamed_fields.empty() && renamed_params.empty();
    }
    void merge(const RenamingSet& other);
};

enum class UnrelatedPattern { Debugging, RenameEquivalent, AssignLhsRename, GetterSetter };

const char* to_string(UnrelatedPattern p);

struct UnrelatedVerdict {
    std::vector<std::string> path;
    std::optional<UnrelatedPattern> pattern; // set iff related == false
    bool related = true;
};

struct SiftResult {
    std::vector<MethodDiff> patch_methods;
    std::vector<std::pair<MethodDiff, std::vector<UnrelatedVerdict>>> sifted_methods;
};

// Per-commit classification context: the renaming set plus member-variable
// names per class (needed by the getter/setter pattern). The logger name
// lists default to the built-in heuristic and can be overridden.
struct SiftContext {
    RenamingSet rset;
    std::map<std::string, std::set<std::string>> class_fields;
    std::set<std::string> logger_receivers = {"log", "logger", "LOG", "LOGGER"};
    std::set<std::string> logger_callees = {"trace", "debug", "info", "warn", "error"};

    void add_fields(const java::CompilationUnit& unit);
};

RenamingSet build_renaming_set(const std::vector<MethodDiff>& diffs,
                               const java::CompilationUnit& before,
                               const java::CompilationUnit& after);

// Assigns a patch-unrelated pattern to one statement change, or reports it
// related. Opaque (Unknown) statements are always related.
UnrelatedVerdict classify_statement(const StatementChange& change, const SiftContext& ctx,
                                    const MethodId& method);

// Sifts methods whose every changed statement is patch-unrelated, and the
// deleted side of detected function renames. Inserted methods always pass
// through (they are the added-patch-method candidates).
SiftResult sift_methods(const std::vector<MethodDiff>& initial, const SiftContext& ctx);

// JSON dump (--sift-report).
std::string sift_result_to_json(const SiftResult& result);

} // namespace vapi
