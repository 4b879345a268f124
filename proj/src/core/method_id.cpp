#include "vapi/core/method_id.hpp"

#include <cctype>
#include <stdexcept>

namespace vapi {

std::string MethodId::str() const {
    std::string s = class_fqn + "#" + name + "(";
    for (size_t i = 0; i < param_descriptor.size(); ++i) {
        if (i) s += ",";
        s += param_descriptor[i];
    }
    s += ")";
    return s;
}

MethodId MethodId::from_str(const std::string& text) {
    size_t hash = text.find('#');
    size_t paren = text.find('(', hash == std::string::npos ? 0 : hash);
    if (hash == std::string::npos || paren == std::string::npos || text.back() != ')')
        throw std::invalid_argument("malformed method id: '" + text + "'");
    MethodId id;
    id.class_fqn = text.substr(0, hash);
    id.name = text.substr(hash + 1, paren - hash - 1);
    std::string params = text.substr(paren + 1, text.size() - paren - 2);
    size_t pos = 0;
    while (pos < params.size()) {
        size_t comma = params.find(',', pos);
        id.param_descriptor.push_back(
            params.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return id;
}

std::string normalize_type_text(const std::string& declared) {
    std::string out;
    int generic_depth = 0;
    for (size_t i = 0; i < declared.size(); ++i) {
        char c = declared[i];
        if (c == '<') { ++generic_depth; continue; }
        if (c == '>') { --generic_depth; continue; }
        if (generic_depth > 0) continue;
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '.' && i + 2 < declared.size() && declared[i + 1] == '.' && declared[i + 2] == '.') {
            out += "[]";
            i += 2;
            continue;
        }
        out += c;
    }
    return out;
}

} // namespace vapi
