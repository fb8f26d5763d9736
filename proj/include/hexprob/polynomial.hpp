#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hexprob/rational.hpp"

namespace hexprob {

// Univariate polynomial over the rationals.  Coefficients are stored in
// ascending order of exponent with no trailing zeros; the zero polynomial has
// an empty coefficient list and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> ascending);

    static Polynomial constant(const Rat& value);
    static Polynomial variable();

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& leading() const;           // requires a nonzero polynomial
    Rat coeff(std::size_t exponent) const; // 0 past the end

    Rat eval(const Rat& point) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rat& scalar);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Rat& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(const Rat& lhs, Polynomial rhs) { return rhs *= lhs; }
    bool operator==(const Polynomial&) const = default;

    // Euclidean division: num = quot * den + rem with deg rem < deg den.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

    // Monic greatest common divisor (zero when both arguments are zero).
    static Polynomial gcd(Polynomial x, Polynomial y);

    // Human-readable rendering, highest power first, e.g. "4n^3 + 18n^2 + 12n + 1".
    std::string to_string(std::string_view var = "n") const;

private:
    void normalize();

    std::vector<Rat> coeffs_;
};

// Quotient of two polynomials, kept in canonical form: numerator and
// denominator coprime and the denominator monic (so equal functions compare
// equal member-wise).  The zero function is 0/1.
class RationalFunction {
public:
    RationalFunction() : den_(Polynomial::constant(1)) {}
    RationalFunction(Polynomial num, Polynomial den); // rejects a zero denominator

    static RationalFunction constant(const Rat& value);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rat eval(const Rat& point) const; // throws PoleError on a denominator zero

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& lhs, const RationalFunction& rhs);
    friend RationalFunction operator-(const RationalFunction& lhs, const RationalFunction& rhs);
    friend RationalFunction operator*(const RationalFunction& lhs, const RationalFunction& rhs);
    friend RationalFunction operator/(const RationalFunction& lhs, const RationalFunction& rhs);
    bool operator==(const RationalFunction&) const = default;

    // The same function scaled so both polynomials have integer coefficients
    // with joint content 1 and the denominator's leading coefficient positive.
    std::pair<Polynomial, Polynomial> integer_normalized() const;

    // Rendering of the integer-normalized form, e.g.
    // "(4n^3 + 18n^2 + 12n + 1)/(12n^3 + 18n^2 - 6)".
    std::string to_string(std::string_view var = "n") const;

private:
    Polynomial num_;
    Polynomial den_;
};

} // namespace hexprob
