#pragma once

#include <optional>
#include <vector>

#include "diocount/numeric.hpp"

namespace diocount {

// Dense rational matrix, row-major. All elimination is exact over Q.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    Rat& at(long r, long c) { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
    const Rat& at(long r, long c) const { return a_[static_cast<std::size_t>(r * cols_ + c)]; }

private:
    long rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Unique solution of a square system A x = b, or nullopt when A is singular.
std::optional<std::vector<Rat>> solve_square(RatMatrix a, std::vector<Rat> b);

long rank(RatMatrix a);

// Determinant of a square matrix.
Rat det(RatMatrix a);

// Basis of { x : A x = 0 }.
std::vector<std::vector<Rat>> nullspace(RatMatrix a);

} // namespace diocount
