#pragma once

#include <vector>

#include "diocount/numeric.hpp"

namespace diocount {

// Dense univariate polynomial over Z, coefficients ascending (coeffs[k] is
// the coefficient of x^k). Normalized: no trailing zero coefficients; the
// zero polynomial has an empty coefficient vector and degree() == -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly constant(Int c);
    static IntPoly variable(); // x

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Int& coeff(std::size_t k) const; // 0 beyond degree
    const Int& leading() const;            // pre: nonzero

    Int eval(const Int& x) const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& s) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    // p(a·x + b), exact.
    IntPoly compose_linear(const Int& a, const Int& b) const;

    // Strict bound B ≥ 0 with |root| < B for every real root; for x > B the
    // sign of p(x) equals the sign of the leading coefficient. (Cauchy bound.)
    Int root_bound() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Int> c_;
    static const Int kZero;
};

// Dense univariate polynomial over Q, same conventions as IntPoly.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    static RatPoly constant(Rat c);
    static RatPoly from_int(const IntPoly& p);

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rat& coeff(std::size_t k) const;
    const Rat& leading() const;

    Rat eval(const Rat& x) const;
    Rat eval(const Int& x) const { return eval(Rat(x)); }

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rat& s) const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RatPoly& o) const { return c_ != o.c_; }

    // p(a·x + b) with rational a, b.
    RatPoly compose_linear(const Rat& a, const Rat& b) const;

    // Lcm of coefficient denominators (1 for the zero polynomial).
    Int denominator_lcm() const;
    // True iff all coefficients are integers; conversion (pre: integral).
    bool is_integral() const;
    IntPoly to_int() const;

    std::string to_string(const std::string& var = "x") const;

    // Unique interpolating polynomial of degree < points.size() through the
    // given (x, y) pairs with pairwise distinct x (Lagrange, exact).
    static RatPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points);

private:
    void normalize();
    std::vector<Rat> c_;
    static const Rat kZero;
};

} // namespace diocount
