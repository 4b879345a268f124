#pragma once

#include <compare>
#include <string>
#include <vector>

namespace vapi {

// Identity of one method: fully-qualified class, name (constructors are
// "<init>") and the ordered declared parameter types. The same MethodId in
// two source trees denotes the same method for cross-version checks.
struct MethodId {
    std::string class_fqn;
    std::string name;
    std::vector<std::string> param_descriptor;

    auto operator<=>(const MethodId&) const = default;

    // Canonical form "pkg.Class#name(T1,T2)"; used in reports and db files.
    std::string str() const;
    static MethodId from_str(const std::string& text);
};

// Declared-type text normalization used for parameter descriptors and
// declared variable types: whitespace collapsed, generic arguments erased
// ("Map<String, List<Integer>>[]" -> "Map[]", "String..." -> "String[]").
std::string normalize_type_text(const std::string& declared);

} // namespace vapi
