#include "workbench/rational.hpp"

#include <cctype>

namespace workbench {

Rational Rational::parse(std::string_view text) {
    std::size_t slash = text.find('/');
    auto is_int = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (slash == std::string_view::npos) {
        if (!is_int(text, true)) throw SyntaxError(0, "integer", "bad rational literal '" + std::string(text) + "'");
        return Rational(mpz_class(std::string(text)));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_int(num, true) || !is_int(den, false))
        throw SyntaxError(slash, "uint", "bad rational literal '" + std::string(text) + "'");
    return Rational(mpz_class(std::string(num)), mpz_class(std::string(den)));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace workbench
