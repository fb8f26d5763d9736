#include "hexprob/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "hexprob/errors.hpp"

namespace hexprob {

// ---- Polynomial ----

Polynomial::Polynomial(std::vector<Rat> ascending) : coeffs_(std::move(ascending))
{
    normalize();
}

void Polynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rat& value)
{
    return Polynomial(std::vector<Rat>{value});
}

Polynomial Polynomial::variable()
{
    return Polynomial(std::vector<Rat>{0, 1});
}

const Rat& Polynomial::leading() const
{
    if (coeffs_.empty())
        throw std::logic_error("Polynomial::leading: zero polynomial");
    return coeffs_.back();
}

Rat Polynomial::coeff(std::size_t exponent) const
{
    return exponent < coeffs_.size() ? coeffs_[exponent] : Rat(0);
}

Rat Polynomial::eval(const Rat& point) const
{
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * point + *it;
    return acc;
}

Polynomial Polynomial::operator-() const
{
    Polynomial result = *this;
    for (Rat& c : result.coeffs_)
        c = -c;
    return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (coeffs_.size() < other.coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    if (coeffs_.size() < other.coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rat> product(coeffs_.size() + other.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            product[i + j] += coeffs_[i] * other.coeffs_[j];
    coeffs_ = std::move(product);
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rat& scalar)
{
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (Rat& c : coeffs_)
        c *= scalar;
    return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& num, const Polynomial& den)
{
    if (den.is_zero())
        throw std::invalid_argument("Polynomial::divmod: division by zero polynomial");
    Polynomial quot;
    Polynomial rem = num;
    const int dden = den.degree();
    while (!rem.is_zero() && rem.degree() >= dden) {
        const int shift = rem.degree() - dden;
        const Rat factor = rem.leading() / den.leading();
        std::vector<Rat> term(static_cast<std::size_t>(shift) + 1, Rat(0));
        term.back() = factor;
        const Polynomial mono(std::move(term));
        quot += mono;
        rem -= mono * den;
    }
    return {std::move(quot), std::move(rem)};
}

Polynomial Polynomial::gcd(Polynomial x, Polynomial y)
{
    // Euclid over Q; remainders are rescaled monic at each step to keep the
    // coefficients small.
    while (!y.is_zero()) {
        Polynomial rem = divmod(x, y).second;
        if (!rem.is_zero())
            rem *= Rat(1) / rem.leading();
        x = std::move(y);
        y = std::move(rem);
    }
    if (!x.is_zero())
        x *= Rat(1) / x.leading();
    return x;
}

std::string Polynomial::to_string(std::string_view var) const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        const Rat c = coeff(static_cast<std::size_t>(e));
        if (c == 0)
            continue;
        const Rat mag = abs(c);
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool fractional = mag.get_den() != 1;
        if (e == 0 || mag != 1 || fractional) {
            if (fractional && e != 0)
                out << "(" << hexprob::to_string(mag) << ")";
            else
                out << hexprob::to_string(mag);
        }
        if (e > 0) {
            out << var;
            if (e > 1)
                out << "^" << e;
        }
    }
    return out.str();
}

// ---- RationalFunction ----

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw std::invalid_argument("RationalFunction: zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    const Polynomial common = Polynomial::gcd(num_, den_);
    if (common.degree() > 0) {
        num_ = Polynomial::divmod(num_, common).first;
        den_ = Polynomial::divmod(den_, common).first;
    }
    const Rat scale = Rat(1) / den_.leading();
    num_ *= scale;
    den_ *= scale;
}

RationalFunction RationalFunction::constant(const Rat& value)
{
    return RationalFunction(Polynomial::constant(value), Polynomial::constant(1));
}

Rat RationalFunction::eval(const Rat& point) const
{
    const Rat bottom = den_.eval(point);
    if (bottom == 0)
        throw PoleError("rational function pole at " + hexprob::to_string(point));
    return num_.eval(point) / bottom;
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction result = *this;
    result.num_ = -result.num_;
    return result;
}

RationalFunction operator+(const RationalFunction& lhs, const RationalFunction& rhs)
{
    return RationalFunction(lhs.num_ * rhs.den_ + rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
}

RationalFunction operator-(const RationalFunction& lhs, const RationalFunction& rhs)
{
    return RationalFunction(lhs.num_ * rhs.den_ - rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
}

RationalFunction operator*(const RationalFunction& lhs, const RationalFunction& rhs)
{
    return RationalFunction(lhs.num_ * rhs.num_, lhs.den_ * rhs.den_);
}

RationalFunction operator/(const RationalFunction& lhs, const RationalFunction& rhs)
{
    if (rhs.is_zero())
        throw std::invalid_argument("RationalFunction: division by zero");
    return RationalFunction(lhs.num_ * rhs.den_, lhs.den_ * rhs.num_);
}

std::pair<Polynomial, Polynomial> RationalFunction::integer_normalized() const
{
    // Clear all coefficient denominators, then divide out the joint integer
    // content; the sign convention puts the denominator's leading coefficient
    // positive.
    Int den_lcm = 1;
    const auto fold_lcm = [&](const Polynomial& p) {
        for (const Rat& c : p.coeffs())
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    };
    fold_lcm(num_);
    fold_lcm(den_);

    Int content = 0;
    const auto scaled = [&](const Polynomial& p) {
        std::vector<Rat> out;
        out.reserve(p.coeffs().size());
        for (const Rat& c : p.coeffs()) {
            Rat v = c * Rat(den_lcm);
            v.canonicalize();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_num().get_mpz_t());
            out.emplace_back(std::move(v));
        }
        return out;
    };
    std::vector<Rat> num_scaled = scaled(num_);
    std::vector<Rat> den_scaled = scaled(den_);

    if (content == 0)
        content = 1; // zero numerator: content comes from the denominator only
    if (den_scaled.back() < 0)
        content = -content;
    for (Rat& c : num_scaled)
        c /= Rat(content);
    for (Rat& c : den_scaled)
        c /= Rat(content);
    return {Polynomial(std::move(num_scaled)), Polynomial(std::move(den_scaled))};
}

std::string RationalFunction::to_string(std::string_view var) const
{
    const auto [top, bottom] = integer_normalized();
    if (bottom == Polynomial::constant(1))
        return top.degree() > 0 ? "(" + top.to_string(var) + ")" : top.to_string(var);
    return "(" + top.to_string(var) + ")/(" + bottom.to_string(var) + ")";
}

} // namespace hexprob
