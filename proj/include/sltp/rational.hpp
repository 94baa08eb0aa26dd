#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "sltp/errors.hpp"

namespace sltp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

// Canonical rendering: reduced "p/q", plain "p" when the denominator is 1.
inline std::string format_rational(const Rational& q) {
    std::string s = numerator_of(q).str();
    if (!is_integer(q)) {
        s += '/';
        s += denominator_of(q).str();
    }
    return s;
}

namespace detail {

inline Integer parse_integer(std::string_view text, std::string_view original) {
    if (text.empty()) throw io_error("bad rational literal: '" + std::string(original) + "'");
    std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (start == text.size()) throw io_error("bad rational literal: '" + std::string(original) + "'");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw io_error("bad rational literal: '" + std::string(original) + "'");
        }
    }
    return Integer(std::string(text));
}

}  // namespace detail

// Accepts "p/q", plain integers, and exact decimal strings ("1.25" -> 5/4).
inline Rational parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = detail::parse_integer(text.substr(0, slash), text);
        Integer den = detail::parse_integer(text.substr(slash + 1), text);
        if (den == 0) throw io_error("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view head = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty()) throw io_error("bad rational literal: '" + std::string(text) + "'");
        bool negative = !head.empty() && head[0] == '-';
        Integer whole = head.empty() || head == "-" || head == "+"
                            ? Integer(0)
                            : detail::parse_integer(head, text);
        for (char c : frac) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw io_error("bad rational literal: '" + std::string(text) + "'");
            }
        }
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Integer digits{std::string(frac)};
        Integer num = Integer(boost::multiprecision::abs(whole)) * scale + digits;
        if (negative) num = -num;
        return Rational(num, scale);
    }
    return Rational(detail::parse_integer(text, text));
}

}  // namespace sltp
