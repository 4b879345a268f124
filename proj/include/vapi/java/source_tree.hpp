#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "vapi/java/ast.hpp"

namespace vapi::java {

// One parsed source tree (a library version or a project) with lookup
// indexes. Unparseable files are skipped and listed in `skipped`.
struct SourceTree {
    std::vector<CompilationUnit> units;
    std::vector<std::string> skipped; // "path: message" per skipped file

    // indexes, rebuilt by build_indexes()
    std::map<std::string, const ClassDecl*> class_by_fqn;
    std::map<std::string, std::vector<const ClassDecl*>> class_by_simple;
    std::map<MethodId, const MethodRecord*> method_by_id;
    std::map<std::string, std::set<std::string>> subtypes; // super fqn -> direct sub fqns

    void add_unit(CompilationUnit unit);
    void build_indexes();

    bool contains_method(const MethodId& id) const { return method_by_id.count(id) > 0; }
    const MethodRecord* find_method(const MethodId& id) const {
        auto it = method_by_id.find(id);
        return it == method_by_id.end() ? nullptr : &*it->second;
    }
    // Resolves a declared type name (simple or qualified, arrays never) to
    // classes in this tree.
    std::vector<const ClassDecl*> resolve_type(const std::string& name) const;
    // Transitive subtypes of the given class fqn, the class itself excluded.
    std::set<std::string> transitive_subtypes(const std::string& fqn) const;

    std::set<MethodId> method_ids() const;
};

// Parses every *.java file under `dir` (recursive). Parse failures are
// recorded, not fatal.
SourceTree load_source_tree(const std::filesystem::path& dir);

} // namespace vapi::java
