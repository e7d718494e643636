#ifndef MINCODE_LINALG_HPP
#define MINCODE_LINALG_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mincode/gf.hpp"

namespace mincode::linalg {

using gf::Elem;
using gf::FieldContext;

// A vector in F_q^m, stored as canonical encodings. Coordinate 0 of the
// container is x_1 (the most significant digit of the position index).
using Vec = std::vector<Elem>;

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

// position_index(x) = sum enc(x_j) q^(m-j); bijection F_q^m <-> [0, q^m).
std::uint64_t position_index(const FieldContext& ctx, const Vec& x);
Vec vector_from_index(const FieldContext& ctx, std::uint32_t m, std::uint64_t idx);

// All of F_q^m \ {0} in strictly increasing position_index (1 .. q^m - 1).
// This is THE canonical coordinate order for codewords.
std::vector<Vec> enumerate_nonzero(const FieldContext& ctx, std::uint32_t m,
                                   std::uint64_t cap = kDefaultCap);

// q^m as 64-bit, throws CapExceeded past the cap.
std::uint64_t pow_checked(std::uint64_t q, std::uint32_t m, std::uint64_t cap);

std::uint32_t weight(const Vec& x);
Elem dot(const FieldContext& ctx, const Vec& a, const Vec& b);

// Dense row-major matrix over GF(q).
struct Matrix {
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::vector<Elem> a;

    Matrix() = default;
    Matrix(std::uint32_t r, std::uint32_t c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    Elem& at(std::uint32_t r, std::uint32_t c) { return a[std::size_t(r) * cols + c]; }
    Elem at(std::uint32_t r, std::uint32_t c) const { return a[std::size_t(r) * cols + c]; }

    Vec row(std::uint32_t r) const;
    Vec col(std::uint32_t c) const;

    bool operator==(const Matrix&) const = default;
};

// In-place reduced row echelon form; returns the pivot column list.
std::vector<std::uint32_t> rref(const FieldContext& ctx, Matrix& m);

std::uint32_t rank(const FieldContext& ctx, Matrix m);

// Basis of {x : M x = 0}, returned as rows of a (cols - rank) x cols matrix.
Matrix null_space(const FieldContext& ctx, const Matrix& m);

// Rows of m that form a basis of its row space (first independent rows kept).
Matrix row_basis(const FieldContext& ctx, const Matrix& m);

// Coefficients lambda with sum lambda_j columns[j] = target, or nullopt if
// target is outside the span. Free coefficients are set to 0.
std::optional<Vec> solve_in_span(const FieldContext& ctx,
                                 const std::vector<Vec>& columns, const Vec& target);

}  // namespace mincode::linalg

#endif
