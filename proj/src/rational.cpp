#include "cep/rational.hpp"

#include <cctype>

namespace cep {

namespace {

bool is_integer_token(const std::string& s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

// GMP's string constructor rejects an explicit '+'
Integer to_integer(const std::string& s)
{
    return Integer(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text)
{
    if (text.empty())
        return std::nullopt;

    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den))
            return std::nullopt;
        Integer d = to_integer(den);
        if (d == 0)
            return std::nullopt;
        return Rational(to_integer(num), d);
    }

    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string head = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if (frac.empty() || !is_integer_token(frac) || frac[0] == '+' || frac[0] == '-')
            return std::nullopt;
        const bool neg = !head.empty() && head[0] == '-';
        std::string whole = (head == "-" || head == "+" || head.empty()) ? "0" : head;
        if (!is_integer_token(whole))
            return std::nullopt;
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        Integer numer = abs(to_integer(whole)) * scale + Integer(frac);
        if (neg)
            numer = -numer;
        return Rational(numer, scale);
    }

    if (!is_integer_token(text))
        return std::nullopt;
    return Rational(to_integer(text));
}

std::string to_string(const Rational& r)
{
    return r.str();
}

}  // namespace cep
