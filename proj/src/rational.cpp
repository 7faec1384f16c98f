#include "wmscss/rational.hpp"

#include <cctype>
#include <sstream>

namespace wmscss {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!is_integer_literal(num) || !is_integer_literal(den)) return std::nullopt;
        Integer p{std::string(num)};
        Integer q{std::string(den)};
        if (q == 0) return std::nullopt;
        return Rational(p, q);
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty()) return std::nullopt;
        bool negative = !whole.empty() && whole[0] == '-';
        if (!whole.empty() && (whole[0] == '+' || whole[0] == '-')) whole.remove_prefix(1);
        if (whole.empty()) whole = "0";
        if (!is_integer_literal(whole) || !is_integer_literal(frac) ||
            frac[0] == '+' || frac[0] == '-')
            return std::nullopt;
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Integer whole_part{std::string(whole)};
        Integer frac_part{std::string(frac)};
        Integer value = whole_part * scale + frac_part;
        if (negative) value = -value;
        return Rational(value, scale);
    }

    if (!is_integer_literal(text)) return std::nullopt;
    Integer whole{std::string(text)};
    return Rational(whole);
}

std::string to_string(const Rational& r) {
    std::ostringstream out;
    out << numerator(r);
    if (denominator(r) != 1) out << '/' << denominator(r);
    return out.str();
}

std::string to_decimal(const Rational& r, int digits) {
    bool negative = r < 0;
    Rational abs = negative ? Rational(-r) : r;
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round half away from zero
    Integer scaled = numerator(abs) * scale * 2 + denominator(abs);
    Integer units = scaled / (denominator(abs) * 2);
    Integer whole = units / scale;
    Integer frac = units % scale;

    std::ostringstream out;
    if (negative && (whole != 0 || frac != 0)) out << '-';
    out << whole;
    if (digits > 0) {
        std::string f = frac.str();
        out << '.' << std::string(digits - f.size(), '0') << f;
    }
    return out.str();
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd(a, b) * b;
}

}  // namespace wmscss
