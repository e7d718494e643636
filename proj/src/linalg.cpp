#include "mincode/linalg.hpp"

#include <string>

namespace mincode::linalg {

std::uint64_t pow_checked(std::uint64_t q, std::uint32_t m, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (r > cap / q) throw CapExceeded("q^m exceeds enumeration cap " + std::to_string(cap));
        r *= q;
    }
    if (r > cap) throw CapExceeded("q^m exceeds enumeration cap " + std::to_string(cap));
    return r;
}

std::uint64_t position_index(const FieldContext& ctx, const Vec& x) {
    std::uint64_t idx = 0;
    for (Elem e : x) idx = idx * ctx.q() + e;
    return idx;
}

Vec vector_from_index(const FieldContext& ctx, std::uint32_t m, std::uint64_t idx) {
    Vec x(m, 0);
    for (std::uint32_t j = m; j-- > 0;) {
        x[j] = Elem(idx % ctx.q());
        idx /= ctx.q();
    }
    return x;
}

std::vector<Vec> enumerate_nonzero(const FieldContext& ctx, std::uint32_t m,
                                   std::uint64_t cap) {
    std::uint64_t total = pow_checked(ctx.q(), m, cap);
    std::vector<Vec> out;
    out.reserve(total - 1);
    for (std::uint64_t idx = 1; idx < total; ++idx)
        out.push_back(vector_from_index(ctx, m, idx));
    return out;
}

std::uint32_t weight(const Vec& x) {
    std::uint32_t w = 0;
    for (Elem e : x)
        if (e != 0) ++w;
    return w;
}

Elem dot(const FieldContext& ctx, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw LengthMismatch("dot of vectors of different length");
    Elem s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) s = ctx.add(s, ctx.mul(a[j], b[j]));
    return s;
}

Vec Matrix::row(std::uint32_t r) const {
    return Vec(a.begin() + std::size_t(r) * cols, a.begin() + std::size_t(r + 1) * cols);
}

Vec Matrix::col(std::uint32_t c) const {
    Vec v(rows);
    for (std::uint32_t r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
}

std::vector<std::uint32_t> rref(const FieldContext& ctx, Matrix& m) {
    std::vector<std::uint32_t> pivots;
    std::uint32_t pr = 0;
    for (std::uint32_t pc = 0; pc < m.cols && pr < m.rows; ++pc) {
        // first nonzero entry scanning top-to-bottom in this column
        std::uint32_t sel = pr;
        while (sel < m.rows && m.at(sel, pc) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != pr)
            for (std::uint32_t c = 0; c < m.cols; ++c)
                std::swap(m.a[std::size_t(sel) * m.cols + c], m.a[std::size_t(pr) * m.cols + c]);
        Elem piv_inv = ctx.inv(m.at(pr, pc));
        for (std::uint32_t c = pc; c < m.cols; ++c)
            m.at(pr, c) = ctx.mul(m.at(pr, c), piv_inv);
        for (std::uint32_t r = 0; r < m.rows; ++r) {
            if (r == pr || m.at(r, pc) == 0) continue;
            Elem f = m.at(r, pc);
            for (std::uint32_t c = pc; c < m.cols; ++c)
                m.at(r, c) = ctx.sub(m.at(r, c), ctx.mul(f, m.at(pr, c)));
        }
        pivots.push_back(pc);
        ++pr;
    }
    return pivots;
}

std::uint32_t rank(const FieldContext& ctx, Matrix m) {
    return std::uint32_t(rref(ctx, m).size());
}

Matrix null_space(const FieldContext& ctx, const Matrix& m) {
    Matrix r = m;
    std::vector<std::uint32_t> pivots = rref(ctx, r);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::uint32_t pc : pivots) is_pivot[pc] = true;

    Matrix basis(m.cols - std::uint32_t(pivots.size()), m.cols);
    std::uint32_t out_row = 0;
    for (std::uint32_t fc = 0; fc < m.cols; ++fc) {
        if (is_pivot[fc]) continue;
        basis.at(out_row, fc) = 1;
        for (std::uint32_t pi = 0; pi < pivots.size(); ++pi)
            basis.at(out_row, pivots[pi]) = ctx.neg(r.at(pi, fc));
        ++out_row;
    }
    return basis;
}

Matrix row_basis(const FieldContext& ctx, const Matrix& m) {
    // Keep each row that increases the rank of the rows seen so far.
    std::vector<std::uint32_t> keep;
    std::uint32_t rk = 0;
    for (std::uint32_t r = 0; r < m.rows; ++r) {
        Matrix trial(std::uint32_t(keep.size() + 1), m.cols);
        for (std::uint32_t i = 0; i < keep.size(); ++i)
            for (std::uint32_t c = 0; c < m.cols; ++c) trial.at(i, c) = m.at(keep[i], c);
        for (std::uint32_t c = 0; c < m.cols; ++c)
            trial.at(std::uint32_t(keep.size()), c) = m.at(r, c);
        std::uint32_t nrk = rank(ctx, trial);
        if (nrk > rk) {
            keep.push_back(r);
            rk = nrk;
        }
    }
    Matrix basis(std::uint32_t(keep.size()), m.cols);
    for (std::uint32_t i = 0; i < keep.size(); ++i)
        for (std::uint32_t c = 0; c < m.cols; ++c) basis.at(i, c) = m.at(keep[i], c);
    return basis;
}

std::optional<Vec> solve_in_span(const FieldContext& ctx,
                                 const std::vector<Vec>& columns, const Vec& target) {
    for (const Vec& c : columns)
        if (c.size() != target.size())
            throw DimensionMismatch("span columns and target differ in length");
    // Augmented system [columns | target], solved by RREF.
    Matrix aug(std::uint32_t(target.size()), std::uint32_t(columns.size() + 1));
    for (std::uint32_t r = 0; r < target.size(); ++r) {
        for (std::uint32_t c = 0; c < columns.size(); ++c) aug.at(r, c) = columns[c][r];
        aug.at(r, std::uint32_t(columns.size())) = target[r];
    }
    std::vector<std::uint32_t> pivots = rref(ctx, aug);
    Vec coeffs(columns.size(), 0);
    for (std::uint32_t pi = 0; pi < pivots.size(); ++pi) {
        if (pivots[pi] == columns.size()) return std::nullopt;  // inconsistent
        coeffs[pivots[pi]] = aug.at(pi, std::uint32_t(columns.size()));
    }
    return coeffs;
}

}  // namespace mincode::linalg
