#pragma once

#include <compare>
#include <regex>
#include <stdexcept>
#include <string>

#include "vapi/core/version.hpp"

namespace vapi {

// CVE identifier, validated against CVE-\d{4}-\d{4,}.
struct CveId {
    std::string id;

    static CveId parse(const std::string& text) {
        static const std::regex re(R"(CVE-\d{4}-\d{4,})");
        if (!std::regex_match(text, re))
            throw std::invalid_argument("not a CVE id: '" + text + "'");
        return CveId{text};
    }

    auto operator<=>(const CveId&) const = default;
};

// Maven-style group:artifact:version coordinate.
struct LibraryCoordinate {
    std::string group;
    std::string artifact;
    Version version;

    std::string gav() const { return group + ":" + artifact + ":" + version.str(); }

    static LibraryCoordinate parse(const std::string& text) {
        size_t a = text.find(':');
        size_t b = text.find(':', a == std::string::npos ? 0 : a + 1);
        if (a == std::string::npos || b == std::string::npos)
            throw std::invalid_argument("coordinate must be group:artifact:version: '" + text + "'");
        LibraryCoordinate c;
        c.group = text.substr(0, a);
        c.artifact = text.substr(a + 1, b - a - 1);
        if (c.group.empty() || c.artifact.empty())
            throw std::invalid_argument("empty group or artifact in coordinate: '" + text + "'");
        c.version = Version::parse(text.substr(b + 1));
        return c;
    }
};

// Change kind of one statement within a matched method pair.
enum class StatementChangeKind { Insert, Delete, Update };

// Change kind of a whole method between two sides of a diff.
enum class MethodChangeKind { Inserted, Deleted, Modified };

inline const char* to_string(StatementChangeKind k) {
    switch (k) {
        case StatementChangeKind::Insert: return "insert";
        case StatementChangeKind::Delete: return "delete";
        case StatementChangeKind::Update: return "update";
    }
    return "?";
}

inline const char* to_string(MethodChangeKind k) {
    switch (k) {
        case MethodChangeKind::Inserted: return "inserted";
        case MethodChangeKind::Deleted: return "deleted";
        case MethodChangeKind::Modified: return "modified";
    }
    return "?";
}

} // namespace vapi
