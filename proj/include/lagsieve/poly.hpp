#pragma once

#include "lagsieve/int_types.hpp"

#include <span>
#include <string>
#include <vector>

namespace lagsieve {

// Dense polynomial with arbitrary-precision integer coefficients.
// coeffs()[j] is the coefficient of x^j; the representation is normalized
// (no trailing zeros), so the zero polynomial has an empty vector and
// degree() == -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(Int v) { return IntPoly({std::move(v)}); }
    static IntPoly monomial(std::size_t deg, Int lead = 1);

    const std::vector<Int>& coeffs() const { return c_; }
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Int& operator[](std::size_t j) const;   // 0 beyond degree
    Int leading() const { return c_.empty() ? Int(0) : c_.back(); }
    Int constant_term() const { return c_.empty() ? Int(0) : c_.front(); }

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;

    IntPoly derivative() const;
    // q(x) = p(x^2)
    IntPoly substitute_square() const;
    // (-1)^deg * p(-x): the coefficient twist a_j -> a_j * (-1)^(deg-j)
    IntPoly mirror_x() const;

    friend IntPoly operator+(const IntPoly&, const IntPoly&);
    friend IntPoly operator-(const IntPoly&, const IntPoly&);
    friend IntPoly operator*(const IntPoly&, const IntPoly&);
    friend IntPoly operator*(const Int&, const IntPoly&);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    // Division by a divisor with unit (+-1) leading coefficient.
    struct DivRem {
        IntPoly quot;
        IntPoly rem;
    };
    DivRem divrem(const IntPoly& divisor) const;
    bool divisible_by(const IntPoly& divisor) const;

    // JSON array of decimal strings, index = exponent.
    std::string to_json() const;
    static IntPoly from_json(const std::string& text);

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Int> c_;
};

// Same layout with exact rational coefficients (denominators positive,
// fractions reduced -- maintained by cpp_rational).
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit RatPoly(const IntPoly& p);

    const std::vector<Rat>& coeffs() const { return c_; }
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& operator[](std::size_t j) const;
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat eval(const Rat& x) const;
    RatPoly derivative() const;
    RatPoly substitute_square() const;

    // Least common denominator and the cleared integer polynomial lcd * p.
    Int common_denominator() const;
    IntPoly cleared() const;

    friend RatPoly operator+(const RatPoly&, const RatPoly&);
    friend RatPoly operator-(const RatPoly&, const RatPoly&);
    friend RatPoly operator*(const RatPoly&, const RatPoly&);
    friend RatPoly operator*(const Rat&, const RatPoly&);
    friend bool operator==(const RatPoly&, const RatPoly&) = default;

private:
    void trim();
    std::vector<Rat> c_;
};

} // namespace lagsieve
