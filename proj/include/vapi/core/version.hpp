#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vapi {

// Release version: dot-separated numeric segments plus an optional trailing
// qualifier ("2.5.6.SEC03", "2.0.0-RC1"). Ordering rules:
//   - numeric segments compare left to right, missing segments read as 0
//   - on equal segments, a bare version sorts after a qualified one
//   - qualifiers compare case-insensitively
class Version {
public:
    Version() = default;

    // Throws std::invalid_argument on a malformed string.
    static Version parse(const std::string& text);

    const std::vector<uint64_t>& segments() const { return segments_; }
    const std::optional<std::string>& qualifier() const { return qualifier_; }
    const std::string& str() const { return text_; }

    std::strong_ordering operator<=>(const Version& other) const;
    bool operator==(const Version& other) const {
        return (*this <=> other) == std::strong_ordering::equal;
    }

private:
    std::vector<uint64_t> segments_;
    std::optional<std::string> qualifier_;
    std::string text_;
};

enum class Comparator { Less, LessEq, Eq, GreaterEq, Greater };

// Disjunction of conjunctions over (comparator, version) predicates.
// Text grammar: "<=3.0.5 || >=2.0 && <2.5.6.SEC03".
class VersionRange {
public:
    struct Predicate {
        Comparator cmp;
        Version version;
    };
    using Conjunct = std::vector<Predicate>;

    static VersionRange parse(const std::string& text);

    bool matches(const Version& v) const;
    const std::vector<Conjunct>& disjuncts() const { return disjuncts_; }
    const std::string& str() const { return text_; }

private:
    std::vector<Conjunct> disjuncts_;
    std::string text_;
};

} // namespace vapi
