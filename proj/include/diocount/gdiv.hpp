#pragma once

#include <vector>

#include "diocount/quasipoly.hpp"

namespace diocount {

// Generalized Euclidean division f = quotient·g + remainder with
// 0 ≼ remainder ≺ |g| in the eventual sign order. threshold is a computed C
// such that for every n > C with g(n) > 0:
//   quotient(n) = ⌊f(n)/g(n)⌋ and remainder(n) = f(n) − quotient(n)·g(n).
// The decomposition is unique, so a verified candidate is the answer.
struct DivisionResult {
    QuasiPoly quotient;
    QuasiPoly remainder;
    Int threshold{0};
};

// Division of a polynomial f by a nonzero polynomial g inside the
// quasi-polynomial ring. Quotient constituents are recovered from exact
// floor samples taken provably inside the eventual-agreement region, then
// the remainder conditions are verified symbolically.
DivisionResult div_zx(const IntPoly& f, const IntPoly& g);

// Division in the ring: classwise at the common period. Classes where the
// divisor constituent is zero contribute quotient 0 and pass the dividend
// constituent through to the remainder.
DivisionResult div_r(const QuasiPoly& f, const QuasiPoly& g);

// Convenience projections of div_r.
QuasiPoly quo(const QuasiPoly& f, const QuasiPoly& g);
QuasiPoly rem(const QuasiPoly& f, const QuasiPoly& g);

// True iff g(n) | f(n) for every n, i.e. rem(f,g) = 0.
// Pre: g(n) != 0 for all n >= 0 (checked by a per-constituent root scan).
bool divides(const QuasiPoly& g, const QuasiPoly& f);

// d = Σ fs[i]·cofactors[i] as a ring identity; d is constituentwise
// nonnegative and d(n) = gcd of the |fs[i](n)| for every n.
struct GcdCertificate {
    QuasiPoly gcd;
    std::vector<QuasiPoly> cofactors;
};

GcdCertificate ggcd_bezout(const std::vector<QuasiPoly>& fs);
QuasiPoly ggcd(const QuasiPoly& a, const QuasiPoly& b);

// u1 with a1·u1 ≡ 1 modulo a2 (witnessed by some u2 with a1·u1 + a2·u2 = 1).
// Pre: ggcd(a1,a2) = 1.
QuasiPoly inverse_mod(const QuasiPoly& a1, const QuasiPoly& a2);

// Remainder-tree coprimality structure. Level 0 holds the input vector; a
// vector W at level k+1 arises from a level-k vector V by pivoting on entry
// j: W[i] = rem(V[i], V[j]) for i != j and W[j] = V[j]. Vectors whose entries
// are all constant are dropped, previously generated vectors are not
// re-expanded (the literal recursion can regenerate a vector forever, e.g.
// pivoting (n, n+1) on the second entry reproduces itself), and h is the
// first level contributing nothing new.
struct CoprimeTree {
    std::vector<std::vector<ParamVector>> levels; // levels[0..h-1]
    long h = 0;
    bool strongly_coprime = false; // all stored vectors pairwise coprime
};

// Pre: every entry of A has all-positive leading coefficients.
CoprimeTree strongly_coprime(const ParamVector& A);

namespace detail {
// Independent closed-form recomputation of div_zx (no sampling): the
// quotient is assembled directly from the rational long division and the
// per-class fractional parts of its quotient polynomial. Used to cross-check
// uniqueness.
DivisionResult div_zx_symbolic(const IntPoly& f, const IntPoly& g);
} // namespace detail

} // namespace diocount
