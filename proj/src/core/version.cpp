#include "vapi/core/version.hpp"

#include <algorithm>
#include <cctype>

namespace vapi {

namespace {

bool all_digits(const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

int icompare(const std::string& a, const std::string& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int ca = std::tolower(static_cast<unsigned char>(a[i]));
        int cb = std::tolower(static_cast<unsigned char>(b[i]));
        if (ca != cb) return ca < cb ? -1 : 1;
    }
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

} // namespace

Version Version::parse(const std::string& text) {
    Version v;
    v.text_ = text;
    size_t pos = 0;
    // Numeric segments separated by '.'; first token that is not all digits
    // (reached via '.' or '-') starts the qualifier, which runs to the end.
    while (pos < text.size()) {
        size_t next = text.find_first_of(".-", pos);
        std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (all_digits(tok) && v.qualifier_ == std::nullopt) {
            v.segments_.push_back(std::stoull(tok));
        } else {
            if (v.segments_.empty())
                throw std::invalid_argument("version must start with a numeric segment: '" + text + "'");
            std::string qual = text.substr(pos);
            if (qual.empty())
                throw std::invalid_argument("empty qualifier in version: '" + text + "'");
            v.qualifier_ = qual;
            return v;
        }
        if (next == std::string::npos) break;
        pos = next + 1;
        if (pos >= text.size())
            throw std::invalid_argument("trailing separator in version: '" + text + "'");
    }
    if (v.segments_.empty())
        throw std::invalid_argument("version has no segments: '" + text + "'");
    return v;
}

std::strong_ordering Version::operator<=>(const Version& other) const {
    size_t n = std::max(segments_.size(), other.segments_.size());
    for (size_t i = 0; i < n; ++i) {
        uint64_t a = i < segments_.size() ? segments_[i] : 0;
        uint64_t b = i < other.segments_.size() ? other.segments_[i] : 0;
        if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    // Equal segments: bare version sorts after a qualified one.
    bool qa = qualifier_.has_value();
    bool qb = other.qualifier_.has_value();
    if (qa != qb) return qa ? std::strong_ordering::less : std::strong_ordering::greater;
    if (!qa) return std::strong_ordering::equal;
    int c = icompare(*qualifier_, *other.qualifier_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

VersionRange VersionRange::parse(const std::string& text) {
    VersionRange r;
    r.text_ = text;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t bar = text.find("||", pos);
        std::string disj = text.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
        Conjunct conj;
        size_t cpos = 0;
        while (cpos <= disj.size()) {
            size_t amp = disj.find("&&", cpos);
            std::string term =
                trim(disj.substr(cpos, amp == std::string::npos ? std::string::npos : amp - cpos));
            if (term.empty())
                throw std::invalid_argument("empty predicate in range: '" + text + "'");
            Comparator cmp;
            size_t vstart;
            if (term.rfind("<=", 0) == 0) { cmp = Comparator::LessEq; vstart = 2; }
            else if (term.rfind(">=", 0) == 0) { cmp = Comparator::GreaterEq; vstart = 2; }
            else if (term[0] == '<') { cmp = Comparator::Less; vstart = 1; }
            else if (term[0] == '>') { cmp = Comparator::Greater; vstart = 1; }
            else if (term[0] == '=') { cmp = Comparator::Eq; vstart = 1; }
            else
                throw std::invalid_argument("range predicate must start with a comparator: '" + term + "'");
            conj.push_back({cmp, Version::parse(trim(term.substr(vstart)))});
            if (amp == std::string::npos) break;
            cpos = amp + 2;
        }
        r.disjuncts_.push_back(std::move(conj));
        if (bar == std::string::npos) break;
        pos = bar + 2;
    }
    if (r.disjuncts_.empty())
        throw std::invalid_argument("empty version range");
    return r;
}

bool VersionRange::matches(const Version& v) const {
    for (const auto& conj : disjuncts_) {
        bool all = true;
        for (const auto& p : conj) {
            auto ord = v <=> p.version;
            bool ok = false;
            switch (p.cmp) {
                case Comparator::Less: ok = ord == std::strong_ordering::less; break;
                case Comparator::LessEq: ok = ord != std::strong_ordering::greater; break;
                case Comparator::Eq: ok = ord == std::strong_ordering::equal; break;
                case Comparator::GreaterEq: ok = ord != std::strong_ordering::less; break;
                case Comparator::Greater: ok = ord == std::strong_ordering::greater; break;
            }
            if (!ok) { all = false; break; }
        }
        if (all) return true;
    }
    return false;
}

} // namespace vapi
