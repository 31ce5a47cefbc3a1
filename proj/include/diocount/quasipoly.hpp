#pragma once

#include <optional>
#include <vector>

#include "diocount/intpoly.hpp"

namespace diocount {

// Sign classification of a quasi-polynomial by constituent leading
// coefficients. The tag is the most precise applicable label; the wide
// predicates (is_nonneg / is_strict_pos on QuasiPoly) are what order
// comparisons use. A mix of zero and negative-leading constituents has no
// dedicated tag and reports Mixed.
enum class SignClass { Zero, Nonnegative, StrictlyPositive, StrictlyNegative, Mixed };

const char* to_string(SignClass s);

// Integer-valued quasi-polynomial f: N -> Z, represented by a period T >= 1
// and constituents f_0..f_{T-1} in Z[x] with f(n) = f_{n mod T}((n - n mod T)/T).
// Canonical form: T is the minimal period admitting integer-coefficient
// constituents; equality of canonical forms is structural equality.
class QuasiPoly {
public:
    QuasiPoly(); // zero
    QuasiPoly(long period, std::vector<IntPoly> constituents);
    static QuasiPoly constant(Int c);
    static QuasiPoly variable(); // n itself: (1, {x})
    static QuasiPoly from_poly(const IntPoly& p); // period 1

    long period() const { return period_; }
    const std::vector<IntPoly>& constituents() const { return cons_; }
    const IntPoly& constituent(long i) const { return cons_[static_cast<std::size_t>(i)]; }

    bool is_zero() const;
    bool is_constant() const; // every constituent a constant (degree <= 0)
    // Max constituent degree; -1 for zero.
    long degree() const;

    Int eval(const Int& n) const; // pre: n >= 0

    // Constituents of this element re-expressed at new_period (a multiple of
    // period()).
    std::vector<IntPoly> constituents_at(long new_period) const;

    QuasiPoly operator-() const;
    QuasiPoly operator+(const QuasiPoly& o) const;
    QuasiPoly operator-(const QuasiPoly& o) const;
    QuasiPoly operator*(const QuasiPoly& o) const;
    QuasiPoly operator*(const Int& s) const;
    bool operator==(const QuasiPoly& o) const;
    bool operator!=(const QuasiPoly& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void canonicalize();
    long period_ = 1;
    std::vector<IntPoly> cons_; // size == period_
};

SignClass sign_class(const QuasiPoly& q);
// Wide predicates: q >= 0 (resp. q > 0) in the eventual order.
bool is_nonneg(const QuasiPoly& q);
bool is_strict_pos(const QuasiPoly& q);

// Constituentwise absolute value |q|: negate constituents with negative
// leading coefficient. Always defined.
QuasiPoly abs_qp(const QuasiPoly& q);

// Constituentwise sign indicator: constant +1 / -1 / 0 per constituent.
QuasiPoly sign_indicator(const QuasiPoly& q);

// Smallest C >= 0 such that q(n) >= 0 for all n > C. Pre: is_nonneg(q); a
// quasi-polynomial that is negative infinitely often has no threshold.
Int positivity_threshold(const QuasiPoly& q);
// Smallest C >= 0 such that q(n) > 0 for all n > C. Pre: is_strict_pos(q).
Int strict_positivity_threshold(const QuasiPoly& q);

// Units of the ring: exactly the elements all of whose constituents are the
// constants +1 or -1 (|u(n)| = 1 pointwise forces each constituent constant).
bool is_unit(const QuasiPoly& q);

// Quasi-polynomial with rational-coefficient constituents. This is the
// natural output of interpolation-based fits and of composing rational
// chamber polynomials: a function N -> Q with f(n) = f_{n mod T}(m). When the
// function is integer-valued it converts to a QuasiPoly by expanding the
// period by the lcm D of coefficient denominators (g(D·y+c) has integer
// coefficients for any integer-valued g whose denominators divide D).
class RatQuasi {
public:
    RatQuasi(); // zero
    RatQuasi(long period, std::vector<RatPoly> constituents);
    static RatQuasi from_quasipoly(const QuasiPoly& q);

    long period() const { return period_; }
    const std::vector<RatPoly>& constituents() const { return cons_; }

    bool is_zero() const;
    long degree() const;
    Rat eval(const Int& n) const;

    std::vector<RatPoly> constituents_at(long new_period) const;

    RatQuasi operator+(const RatQuasi& o) const;
    RatQuasi operator-(const RatQuasi& o) const;
    RatQuasi operator*(const RatQuasi& o) const;
    RatQuasi operator*(const Rat& s) const;
    bool operator==(const RatQuasi& o) const;
    bool operator!=(const RatQuasi& o) const { return !(*this == o); }

    // Pre: integer-valued on all of N (throws non-integral otherwise).
    QuasiPoly to_quasipoly() const;

    std::string to_string() const;

private:
    void canonicalize();
    long period_ = 1;
    std::vector<RatPoly> cons_;
};

// Parametric vectors and matrices: entries are integer-valued
// quasi-polynomials in the parameter n.
using ParamVector = std::vector<QuasiPoly>;

struct ParamMatrix {
    long rows = 0;
    long cols = 0;
    std::vector<QuasiPoly> entries; // row-major, size rows*cols

    const QuasiPoly& at(long r, long c) const {
        return entries[static_cast<std::size_t>(r * cols + c)];
    }
    QuasiPoly& at(long r, long c) {
        return entries[static_cast<std::size_t>(r * cols + c)];
    }
};

} // namespace diocount
