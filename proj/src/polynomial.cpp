#include "cep/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cep {

bool Polynomial::exponent_less(const ExponentVector& a, const ExponentVector& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial Polynomial::constant(int num_variables, Integer value)
{
    return monomial(num_variables, ExponentVector(num_variables, 0), std::move(value));
}

Polynomial Polynomial::variable(int num_variables, int index)
{
    ExponentVector e(num_variables, 0);
    e[index] = 1;
    return monomial(num_variables, std::move(e), 1);
}

Polynomial Polynomial::monomial(int num_variables, ExponentVector exponents, Integer coefficient)
{
    Polynomial p(num_variables);
    if (coefficient != 0)
        p.terms_.push_back(Term{std::move(exponents), std::move(coefficient)});
    return p;
}

bool Polynomial::is_constant() const
{
    if (terms_.empty())
        return true;
    if (terms_.size() > 1)
        return false;
    const ExponentVector& e = terms_.front().exponents;
    return std::all_of(e.begin(), e.end(), [](unsigned char x) { return x == 0; });
}

int Polynomial::total_degree() const
{
    int best = 0;
    for (const Term& t : terms_) {
        int deg = 0;
        for (unsigned char e : t.exponents)
            deg += e;
        best = std::max(best, deg);
    }
    return best;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out(*this);
    for (Term& t : out.terms_)
        t.coefficient = -t.coefficient;
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const
{
    Polynomial out(num_variables_);
    out.terms_.reserve(terms_.size() + other.terms_.size());
    out.terms_.insert(out.terms_.end(), terms_.begin(), terms_.end());
    out.terms_.insert(out.terms_.end(), other.terms_.begin(), other.terms_.end());
    out.compress();
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const
{
    return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const
{
    Polynomial out(num_variables_);
    std::map<ExponentVector, Integer> acc;
    for (const Term& a : terms_) {
        for (const Term& b : other.terms_) {
            ExponentVector e(num_variables_);
            for (int i = 0; i < num_variables_; ++i)
                e[i] = static_cast<unsigned char>(a.exponents[i] + b.exponents[i]);
            acc[std::move(e)] += a.coefficient * b.coefficient;
        }
    }
    for (auto& [e, c] : acc)
        if (c != 0)
            out.terms_.push_back(Term{e, c});
    // map iterates ascending; canonical order is descending
    std::reverse(out.terms_.begin(), out.terms_.end());
    return out;
}

bool Polynomial::operator==(const Polynomial& other) const
{
    if (num_variables_ != other.num_variables_ || terms_.size() != other.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exponents != other.terms_[i].exponents ||
            terms_[i].coefficient != other.terms_[i].coefficient)
            return false;
    return true;
}

bool Polynomial::operator<(const Polynomial& other) const
{
    if (terms_.size() != other.terms_.size())
        return terms_.size() < other.terms_.size();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].exponents != other.terms_[i].exponents)
            return exponent_less(terms_[i].exponents, other.terms_[i].exponents);
        if (terms_[i].coefficient != other.terms_[i].coefficient)
            return terms_[i].coefficient < other.terms_[i].coefficient;
    }
    return false;
}

Polynomial Polynomial::times_term(const ExponentVector& exponents, const Integer& coefficient) const
{
    Polynomial out(num_variables_);
    if (coefficient == 0)
        return out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        ExponentVector e(num_variables_);
        for (int i = 0; i < num_variables_; ++i)
            e[i] = static_cast<unsigned char>(t.exponents[i] + exponents[i]);
        out.terms_.push_back(Term{std::move(e), t.coefficient * coefficient});
    }
    return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const
{
    if (divisor.is_zero())
        throw std::invalid_argument("division by the zero polynomial");

    Polynomial remainder(*this);
    Polynomial quotient(num_variables_);
    const Term& lead = divisor.leading_term();

    while (!remainder.is_zero()) {
        const Term& top = remainder.leading_term();
        ExponentVector e(num_variables_);
        for (int i = 0; i < num_variables_; ++i) {
            if (top.exponents[i] < lead.exponents[i])
                return std::nullopt;
            e[i] = static_cast<unsigned char>(top.exponents[i] - lead.exponents[i]);
        }
        if (top.coefficient % lead.coefficient != 0)
            return std::nullopt;
        const Integer c = top.coefficient / lead.coefficient;
        quotient.terms_.push_back(Term{e, c});
        remainder = remainder - divisor.times_term(e, c);
    }
    quotient.compress();
    return quotient;
}

Integer Polynomial::integer_content() const
{
    Integer g = 0;
    for (const Term& t : terms_)
        g = gcd(g, abs(t.coefficient));
    if (!terms_.empty() && terms_.front().coefficient < 0)
        g = -g;
    return g;
}

ExponentVector Polynomial::monomial_content() const
{
    if (terms_.empty())
        return ExponentVector(num_variables_, 0);
    ExponentVector out = terms_.front().exponents;
    for (const Term& t : terms_)
        for (int i = 0; i < num_variables_; ++i)
            out[i] = std::min(out[i], t.exponents[i]);
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const
{
    if (static_cast<int>(point.size()) != num_variables_)
        throw std::invalid_argument("evaluation point has wrong dimension");
    Rational acc = 0;
    for (const Term& t : terms_) {
        Rational prod(t.coefficient);
        for (int i = 0; i < num_variables_; ++i)
            for (int rep = 0; rep < t.exponents[i]; ++rep)
                prod *= point[i];
        acc += prod;
    }
    return acc;
}

int Polynomial::normalize_sign()
{
    if (terms_.empty() || terms_.front().coefficient > 0)
        return 1;
    for (Term& t : terms_)
        t.coefficient = -t.coefficient;
    return -1;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        const Integer mag = abs(t.coefficient);
        if (i == 0)
            out += (t.coefficient < 0) ? "-" : "";
        else
            out += (t.coefficient < 0) ? " - " : " + ";
        std::string factors;
        for (int v = 0; v < num_variables_; ++v) {
            for (int rep = 0; rep < t.exponents[v]; ++rep) {
                if (!factors.empty())
                    factors += "*";
                factors += names[v];
            }
        }
        if (factors.empty())
            out += mag.str();
        else if (mag == 1)
            out += factors;
        else
            out += mag.str() + "*" + factors;
    }
    return out;
}

void Polynomial::compress()
{
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return exponent_less(b.exponents, a.exponents);  // descending
    });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!merged.empty() && merged.back().exponents == t.exponents)
            merged.back().coefficient += t.coefficient;
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) { return t.coefficient == 0; }),
                 merged.end());
    terms_ = std::move(merged);
}

}  // namespace cep
