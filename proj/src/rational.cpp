#include "scc/rational.hpp"

namespace scc {

namespace {

Integer parse_integer(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("sign with no digits");
    Integer v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("bad digit in number: " + std::string(s));
        v = v * 10 + (s[i] - '0');
    }
    return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash));
        Integer den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view head = text.substr(0, dot);
        std::string_view tail = text.substr(dot + 1);
        if (tail.empty()) throw std::invalid_argument("trailing dot: " + std::string(text));
        bool neg = !head.empty() && head[0] == '-';
        Integer whole = head.empty() || head == "-" || head == "+" ? Integer(0) : parse_integer(head);
        Integer frac = parse_integer(tail);
        if (frac < 0) throw std::invalid_argument("bad decimal: " + std::string(text));
        Integer scale = 1;
        for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
        Rational mag = Rational(boost::multiprecision::abs(whole)) + Rational(frac, scale);
        return neg ? -mag : mag;
    }
    return Rational(parse_integer(text));
}

std::string rational_str(const Rational& q) {
    Integer num = numerator(q);
    Integer den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Integer rational_ceil(const Rational& q) {
    Integer num = numerator(q);
    Integer den = denominator(q);  // always > 0 in canonical form
    Integer quo = num / den;
    if (quo * den != num && num > 0) ++quo;
    return quo;
}

}  // namespace scc
