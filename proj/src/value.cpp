#include "fairdiv/value.hpp"

namespace fairdiv {

std::string value_to_string(const Value& v) {
    if (denominator(v) == 1)
        return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

namespace {

std::optional<Integer> parse_integer(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return std::nullopt;
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return std::nullopt;
    return Integer(s);
}

} // namespace

std::optional<Value> parse_value(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        auto n = parse_integer(text);
        if (!n) return std::nullopt;
        return Value(*n);
    }
    auto num = parse_integer(text.substr(0, slash));
    auto den = parse_integer(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Value(*num, *den);
}

} // namespace fairdiv
