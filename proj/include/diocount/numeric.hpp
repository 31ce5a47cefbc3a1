#pragma once

#include <gmpxx.h>

#include <string>

#include "diocount/errors.hpp"

namespace diocount {

// Exact arithmetic backends. Int is an arbitrary-precision integer, Rat an
// always-canonicalized rational (GMP keeps gcd(num,den)=1, den>0).
using Int = mpz_class;
using Rat = mpq_class;

// Floor division / Euclidean remainder for Int (GMP's fdiv pair):
// floor_div(a,b) = ⌊a/b⌋, mod_floor(a,b) = a − b·⌊a/b⌋ ∈ [0,|b|) for b>0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
inline Int mod_floor(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}
inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline long lcm_long(long a, long b) {
    Int l = lcm(Int(a), Int(b));
    if (!l.fits_slong_p()) throw internal_error("lcm overflows long");
    return l.get_si();
}

// Canonicalized rational num/den (GMP's two-argument mpq_class constructor
// does not reduce; always build Rats from raw pairs through this).
inline Rat rat_of(const Int& num, const Int& den) {
    if (den == 0) throw division_by_zero("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// ⌊a/b⌋ for a rational a/b given as Rat.
inline Int rat_floor(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}
inline Int rat_ceil(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}
inline bool rat_is_integer(const Rat& x) {
    return mpz_divisible_p(x.get_num_mpz_t(), x.get_den_mpz_t()) != 0;
}

// Fractional part {x} = x − ⌊x⌋ ∈ [0,1).
inline Rat rat_frac(const Rat& x) {
    Rat f = x - Rat(rat_floor(x));
    return f;
}

// Modular inverse of a modulo m (m ≥ 1); requires gcd(a,m)=1. For m=1 the
// inverse is 0 (everything is congruent). Result lies in [0,m).
inline Int inverse_mod_int(const Int& a, const Int& m) {
    if (m <= 0) throw precondition_violation("modulus must be positive");
    if (m == 1) return Int(0);
    Int inv;
    Int am = mod_floor(a, m);
    if (mpz_invert(inv.get_mpz_t(), am.get_mpz_t(), m.get_mpz_t()) == 0)
        throw no_inverse("value not invertible modulo " + m.get_str());
    return inv;
}

// "p/q" (or "p" when integral) serialization used everywhere rationals cross
// the CLI/JSON boundary; floats are never emitted.
inline std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw invalid_representation("cannot parse rational: " + s);
    if (r.get_den() == 0)
        throw invalid_representation("zero denominator in rational: " + s);
    r.canonicalize();
    return r;
}

} // namespace diocount
