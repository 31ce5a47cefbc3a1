#pragma once

#include <vector>

#include "diocount/numeric.hpp"

namespace diocount {

// Element of the rational group algebra Q[x]/(x^a - 1): exact rational
// coordinates on the powers x^0..x^{a-1}. Multiplication is cyclic
// convolution. This is the arithmetic home of computations on a-th roots of
// unity done without floating point or cyclotomic factorization.
class CycloElement {
public:
    explicit CycloElement(long modulus);
    CycloElement(long modulus, std::vector<Rat> coords);

    static CycloElement one(long modulus);
    static CycloElement monomial(long modulus, long exponent); // x^(exponent mod a)

    long modulus() const { return static_cast<long>(coords_.size()); }
    const std::vector<Rat>& coords() const { return coords_; }
    const Rat& coord(long j) const { return coords_[static_cast<std::size_t>(j)]; }
    bool is_zero() const;

    // Sum of coordinates: the image under the trivial character x -> 1.
    Rat trivial_character() const;

    CycloElement operator+(const CycloElement& o) const;
    CycloElement operator-(const CycloElement& o) const;
    CycloElement operator*(const CycloElement& o) const;
    CycloElement operator*(const Rat& s) const;
    bool operator==(const CycloElement& o) const { return coords_ == o.coords_; }
    bool operator!=(const CycloElement& o) const { return coords_ != o.coords_; }

private:
    std::vector<Rat> coords_;
};

// The averaging idempotent e = (1/a) (1 + x + ... + x^{a-1}) and its
// complement 1 - e. The algebra splits as Q·e ⊕ I with I = (1-e)·Q[x]/(x^a-1)
// = { v : trivial_character(v) = 0 }, and 1 - e is the identity of I.
CycloElement all_ones_idempotent(long modulus);
CycloElement one_minus_idempotent(long modulus);

// Inverse of u within the ideal I: the unique w with u·w = 1 - e and
// trivial_character(w) = 0. Pre: trivial_character(u) = 0. Throws when u is
// not invertible on I (some nontrivial character of u vanishes).
CycloElement invert_in_complement(const CycloElement& u);

} // namespace diocount
