#include "vapi/java/source_tree.hpp"

#include "vapi/java/parser.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace vapi::java {

namespace fs = std::filesystem;

void SourceTree::add_unit(CompilationUnit unit) { units.push_back(std::move(unit)); }

void SourceTree::build_indexes() {
    class_by_fqn.clear();
    class_by_simple.clear();
    method_by_id.clear();
    subtypes.clear();
    for (const auto& u : units) {
        for (const auto& c : u.classes) {
            class_by_fqn[c.fqn] = &c;
            // index the innermost simple name too ("Outer$Inner" -> "Inner")
            std::string simple = c.name;
            size_t dollar = simple.rfind('$');
            if (dollar != std::string::npos) simple = simple.substr(dollar + 1);
            class_by_simple[simple].push_back(&c);
            if (simple != c.name) class_by_simple[c.name].push_back(&c);
            for (const auto& m : c.methods) method_by_id[m.id] = &m;
        }
    }
    // supertype links resolve by simple or qualified name within the tree
    for (const auto& u : units) {
        for (const auto& c : u.classes) {
            auto link = [&](const std::string& super) {
                for (const ClassDecl* s : resolve_type(super)) subtypes[s->fqn].insert(c.fqn);
            };
            if (c.super_name) link(*c.super_name);
            for (const auto& i : c.interfaces) link(i);
        }
    }
}

std::vector<const ClassDecl*> SourceTree::resolve_type(const std::string& name) const {
    auto it = class_by_fqn.find(name);
    if (it != class_by_fqn.end()) return {it->second};
    auto it2 = class_by_simple.find(name);
    if (it2 != class_by_simple.end()) return it2->second;
    return {};
}

std::set<std::string> SourceTree::transitive_subtypes(const std::string& fqn) const {
    std::set<std::string> out;
    std::vector<std::string> work{fqn};
    while (!work.empty()) {
        std::string cur = work.back();
        work.pop_back();
        auto it = subtypes.find(cur);
        if (it == subtypes.end()) continue;
        for (const auto& sub : it->second)
            if (out.insert(sub).second) work.push_back(sub);
    }
    return out;
}

std::set<MethodId> SourceTree::method_ids() const {
    std::set<MethodId> out;
    for (const auto& [id, rec] : method_by_id) out.insert(id);
    return out;
}

SourceTree load_source_tree(const fs::path& dir) {
    SourceTree tree;
    if (!fs::exists(dir)) return tree;
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".java")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        std::ifstream in(f);
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            tree.add_unit(parse_source(ss.str(), f.string()));
        } catch (const ParseError& e) {
            tree.skipped.push_back(e.what());
        }
    }
    tree.build_indexes();
    return tree;
}

} // namespace vapi::java
