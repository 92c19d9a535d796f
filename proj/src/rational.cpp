#include "qv/rational.hpp"

namespace qv {

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    // mpq_class(str) aborts on garbage, so validate by hand.
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') ++i;
    bool digits = false, slash = false, digits_after = false;
    for (; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '/') {
            if (slash || !digits) return std::nullopt;
            slash = true;
            if (i + 1 < text.size() && (text[i + 1] == '+' || text[i + 1] == '-')) return std::nullopt;
        } else if (ch >= '0' && ch <= '9') {
            (slash ? digits_after : digits) = true;
        } else {
            return std::nullopt;
        }
    }
    if (!digits || (slash && !digits_after)) return std::nullopt;
    Rational r(text);
    if (slash && r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

}  // namespace qv
