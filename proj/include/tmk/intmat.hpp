#ifndef TMK_INTMAT_HPP
#define TMK_INTMAT_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tmk/numeric.hpp"

namespace tmk {

/// Dense integer matrix, row-major, arbitrary-precision entries.
struct IntMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    static IntMat identity(std::size_t n);
    static IntMat from_rows(const std::vector<IVec>& rs);

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    IVec row(std::size_t i) const;
    bool operator==(const IntMat&) const = default;
};

IntMat mul(const IntMat& x, const IntMat& y);

/// Exact determinant (square matrices), fraction-free Gaussian elimination.
Int det(const IntMat& m);

std::size_t rank_of(const IntMat& m);

struct SnfResult {
    IntMat u, s, v;              // u*m*v = s, u and v unimodular
    std::vector<Int> factors;    // diagonal, divisibility order, zeros last
};

/// Smith normal form by iterative gcd reduction (pivot = minimal |entry|).
SnfResult smith_normal_form(const IntMat& m);

struct HnfResult {
    IntMat h, u;  // u*m = h, u unimodular, h in row Hermite normal form
};

/// Row-style Hermite normal form: row echelon, positive pivots, entries
/// above each pivot reduced into [0, pivot).
HnfResult hermite_normal_form(const IntMat& m);

/// Solves m*x = b over the integers; nullopt when no integer solution exists.
std::optional<IVec> solve_integer(const IntMat& m, const IVec& b);

}  // namespace tmk

#endif
