#include "diocount/linalg.hpp"

#include <utility>

#include "diocount/errors.hpp"

namespace diocount {

namespace {

// Row echelon with full row reduction on the pivot columns. Returns the pivot
// column of each eliminated row. `rhs` (optional, same row count) is carried
// through the row operations.
std::vector<long> gauss(RatMatrix& a, std::vector<Rat>* rhs) {
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < a.cols() && row < a.rows(); ++col) {
        long p = -1;
        for (long r = row; r < a.rows(); ++r)
            if (a.at(r, col) != 0) { p = r; break; }
        if (p < 0) continue;
        if (p != row) {
            for (long c = 0; c < a.cols(); ++c) std::swap(a.at(p, c), a.at(row, c));
            if (rhs) std::swap((*rhs)[static_cast<std::size_t>(p)],
                               (*rhs)[static_cast<std::size_t>(row)]);
        }
        Rat inv = Rat(1) / a.at(row, col);
        for (long c = col; c < a.cols(); ++c) a.at(row, c) *= inv;
        if (rhs) (*rhs)[static_cast<std::size_t>(row)] *= inv;
        for (long r = 0; r < a.rows(); ++r) {
            if (r == row || a.at(r, col) == 0) continue;
            Rat f = a.at(r, col);
            for (long c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(row, c);
            if (rhs) (*rhs)[static_cast<std::size_t>(r)] -=
                f * (*rhs)[static_cast<std::size_t>(row)];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::optional<std::vector<Rat>> solve_square(RatMatrix a, std::vector<Rat> b) {
    if (a.rows() != a.cols() || static_cast<long>(b.size()) != a.rows())
        throw precondition_violation("solve_square expects a square system");
    std::vector<long> piv = gauss(a, &b);
    if (static_cast<long>(piv.size()) != a.rows()) return std::nullopt;
    return b;
}

long rank(RatMatrix a) { return static_cast<long>(gauss(a, nullptr).size()); }

Rat det(RatMatrix a) {
    if (a.rows() != a.cols()) throw precondition_violation("det expects a square matrix");
    const long n = a.rows();
    Rat d(1);
    for (long col = 0; col < n; ++col) {
        long p = -1;
        for (long r = col; r < n; ++r)
            if (a.at(r, col) != 0) { p = r; break; }
        if (p < 0) return Rat(0);
        if (p != col) {
            for (long c = 0; c < n; ++c) std::swap(a.at(p, c), a.at(col, c));
            d = -d;
        }
        d *= a.at(col, col);
        Rat inv = Rat(1) / a.at(col, col);
        for (long r = col + 1; r < n; ++r) {
            if (a.at(r, col) == 0) continue;
            Rat f = a.at(r, col) * inv;
            for (long c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
        }
    }
    return d;
}

std::vector<std::vector<Rat>> nullspace(RatMatrix a) {
    const long n = a.cols();
    std::vector<long> piv = gauss(a, nullptr);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (long c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Rat>> basis;
    for (long free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Rat> v(static_cast<std::size_t>(n), Rat(0));
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r)
            v[static_cast<std::size_t>(piv[r])] = -a.at(static_cast<long>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace diocount
