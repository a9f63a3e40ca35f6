/*
   Copyright 2026 The rankstair authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "rankstair/matrix.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <stdexcept>

namespace rankstair {

ExtMatrix ExtMatrix::sub(std::size_t r0, std::size_t nrows, std::size_t c0,
                         std::size_t ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_)
        throw std::invalid_argument("submatrix out of range");
    ExtMatrix out(nrows, ncols, m_);
    for (std::size_t r = 0; r < nrows; ++r)
        std::memcpy(out.entry(r, 0), entry(r0 + r, c0),
                    ncols * m_ * sizeof(fq_t));
    return out;
}

void ExtMatrix::paste(std::size_t r0, std::size_t c0, const ExtMatrix& block) {
    if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_ || block.m() != m_)
        throw std::invalid_argument("paste out of range");
    for (std::size_t r = 0; r < block.rows(); ++r)
        std::memcpy(entry(r0 + r, c0), block.entry(r, 0),
                    block.cols() * m_ * sizeof(fq_t));
}

ExtMatrix ExtMatrix::vstacked(const ExtMatrix& below) const {
    if (below.cols() != cols_ || below.m() != m_)
        throw std::invalid_argument("vstack shape mismatch");
    ExtMatrix out(rows_ + below.rows(), cols_, m_);
    out.paste(0, 0, *this);
    out.paste(rows_, 0, below);
    return out;
}

BaseMatrix expand_phi(const FieldTower& T, const ExtMatrix& C) {
    const unsigned m = T.m();
    BaseMatrix D(C.rows() * m, C.cols());
    std::vector<fq_t> coords(m);
    for (std::size_t i = 0; i < C.rows(); ++i)
        for (std::size_t j = 0; j < C.cols(); ++j) {
            T.coords_into(coords.data(), C.entry(i, j));
            for (unsigned u = 0; u < m; ++u) D.set(i * m + u, j, coords[u]);
        }
    return D;
}

ExtMatrix contract_phi(const FieldTower& T, const BaseMatrix& D) {
    const unsigned m = T.m();
    if (D.rows() % m != 0)
        throw std::invalid_argument("row count not divisible by m");
    ExtMatrix C(D.rows() / m, D.cols(), m);
    std::vector<fq_t> coords(m);
    for (std::size_t i = 0; i < C.rows(); ++i)
        for (std::size_t j = 0; j < C.cols(); ++j) {
            for (unsigned u = 0; u < m; ++u) coords[u] = D.get(i * m + u, j);
            T.from_coords_into(C.entry(i, j), coords.data());
        }
    return C;
}

std::size_t rank_q(const FieldTower& T, const ExtMatrix& E) {
    return base_rank(T.base(), expand_phi(T, E));
}

ExtMatrix ext_add(const FieldTower& T, const ExtMatrix& A, const ExtMatrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw std::invalid_argument("ext_add shape mismatch");
    ExtMatrix out(A.rows(), A.cols(), T.m());
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c)
            T.add_into(out.entry(r, c), A.entry(r, c), B.entry(r, c));
    return out;
}

ExtMatrix ext_sub(const FieldTower& T, const ExtMatrix& A, const ExtMatrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw std::invalid_argument("ext_sub shape mismatch");
    ExtMatrix out(A.rows(), A.cols(), T.m());
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c)
            T.sub_into(out.entry(r, c), A.entry(r, c), B.entry(r, c));
    return out;
}

ExtMatrix ext_matmul(const FieldTower& T, const ExtMatrix& A, const ExtMatrix& B) {
    if (A.cols() != B.rows())
        throw std::invalid_argument("ext_matmul shape mismatch");
    const unsigned m = T.m();
    ExtMatrix out(A.rows(), B.cols(), m);
    std::vector<fq_t> acc(2 * m - 1);
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) {
            std::fill(acc.begin(), acc.end(), fq_t(0));
            for (std::size_t k = 0; k < A.cols(); ++k)
                T.conv_acc(acc.data(), A.entry(i, k), B.entry(k, j));
            if (m == 1)
                *out.entry(i, j) = acc[0];
            else
                T.reduce(out.entry(i, j), acc.data());
        }
    return out;
}

ExtMatrix matmul_mixed(const FieldTower& T, const ExtMatrix& C, const BaseMatrix& A) {
    if (C.cols() != A.cols())
        throw std::invalid_argument("matmul_mixed shape mismatch");
    const unsigned m = T.m();
    const SmallField& F = T.base();
    ExtMatrix out(C.rows(), A.rows(), m);
    for (std::size_t i = 0; i < C.rows(); ++i)
        for (std::size_t j = 0; j < A.rows(); ++j) {
            fq_t* o = out.entry(i, j);
            for (std::size_t k = 0; k < C.cols(); ++k) {
                fq_t a = A.get(j, k);
                if (!a) continue;
                const fq_t* c = C.entry(i, k);
                for (unsigned u = 0; u < m; ++u)
                    if (c[u]) o[u] = F.add(o[u], F.mul(c[u], a));
            }
        }
    return out;
}

BaseMatrix base_matmul(const SmallField& F, const BaseMatrix& A, const BaseMatrix& B) {
    if (A.cols() != B.rows())
        throw std::invalid_argument("base_matmul shape mismatch");
    BaseMatrix out(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            fq_t a = A.get(i, k);
            if (!a) continue;
            for (std::size_t j = 0; j < B.cols(); ++j) {
                fq_t b = B.get(k, j);
                if (b) out.set(i, j, F.add(out.get(i, j), F.mul(a, b)));
            }
        }
    return out;
}

BaseMatrix base_transpose(const BaseMatrix& A) {
    BaseMatrix out(A.cols(), A.rows());
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c) out.set(c, r, A.get(r, c));
    return out;
}

std::size_t base_rank(const SmallField& F, BaseMatrix A) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < A.cols() && rank < A.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < A.rows() && A.get(piv, col) == 0) ++piv;
        if (piv == A.rows()) continue;
        if (piv != rank)
            for (std::size_t j = col; j < A.cols(); ++j) {
                fq_t t = A.get(piv, j);
                A.set(piv, j, A.get(rank, j));
                A.set(rank, j, t);
            }
        fq_t d = F.inv(A.get(rank, col));
        for (std::size_t j = col; j < A.cols(); ++j)
            A.set(rank, j, F.mul(A.get(rank, j), d));
        for (std::size_t r = rank + 1; r < A.rows(); ++r) {
            fq_t c = A.get(r, col);
            if (!c) continue;
            for (std::size_t j = col; j < A.cols(); ++j)
                A.set(r, j, F.sub(A.get(r, j), F.mul(c, A.get(rank, j))));
        }
        ++rank;
    }
    return rank;
}

std::vector<std::size_t> greedy_independent_rows(const SmallField& F,
                                                 const BaseMatrix& A) {
    std::vector<std::size_t> keep;
    // Running echelon basis of the span of kept rows, keyed by lead column.
    std::map<std::size_t, std::vector<fq_t>> basis;
    for (std::size_t r = 0; r < A.rows(); ++r) {
        std::vector<fq_t> v(A.cols());
        for (std::size_t c = 0; c < A.cols(); ++c) v[c] = A.get(r, c);
        std::size_t lead = 0;
        for (;;) {
            while (lead < v.size() && v[lead] == 0) ++lead;
            if (lead == v.size()) break;
            auto it = basis.find(lead);
            if (it == basis.end()) break;
            fq_t c = v[lead];  // basis rows have lead coefficient 1
            for (std::size_t j = lead; j < v.size(); ++j)
                v[j] = F.sub(v[j], F.mul(c, it->second[j]));
        }
        if (lead == v.size()) continue;  // dependent on kept rows
        fq_t d = F.inv(v[lead]);
        for (std::size_t j = lead; j < v.size(); ++j) v[j] = F.mul(v[j], d);
        basis.emplace(lead, std::move(v));
        keep.push_back(r);
    }
    return keep;
}

BaseMatrix select_rows(const BaseMatrix& A, const std::vector<std::size_t>& idx) {
    BaseMatrix out(idx.size(), A.cols());
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c) out.set(r, c, A.get(idx[r], c));
    return out;
}

namespace {

void ext_row_scale(const FieldTower& T, ExtMatrix& A, std::size_t r, const ExtEl& s) {
    std::vector<fq_t> tmp(T.m());
    for (std::size_t c = 0; c < A.cols(); ++c) {
        T.mul_into(tmp.data(), A.entry(r, c), s.c.data());
        std::memcpy(A.entry(r, c), tmp.data(), T.m() * sizeof(fq_t));
    }
}

// row r -= s * row r2
void ext_row_axpy(const FieldTower& T, ExtMatrix& A, std::size_t r, std::size_t r2,
                  const ExtEl& s) {
    std::vector<fq_t> tmp(T.m());
    for (std::size_t c = 0; c < A.cols(); ++c) {
        if (T.span_is_zero(A.entry(r2, c))) continue;
        T.mul_into(tmp.data(), A.entry(r2, c), s.c.data());
        T.sub_into(A.entry(r, c), A.entry(r, c), tmp.data());
    }
}

void ext_row_swap(ExtMatrix& A, std::size_t r1, std::size_t r2, unsigned m) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < A.cols(); ++c)
        for (unsigned u = 0; u < m; ++u)
            std::swap(A.entry(r1, c)[u], A.entry(r2, c)[u]);
}

}  // namespace

ExtMatrix ext_rref(const FieldTower& T, ExtMatrix A, std::vector<std::size_t>* pivots) {
    std::size_t rank = 0;
    std::vector<std::size_t> piv;
    for (std::size_t col = 0; col < A.cols() && rank < A.rows(); ++col) {
        std::size_t p = rank;
        while (p < A.rows() && T.span_is_zero(A.entry(p, col))) ++p;
        if (p == A.rows()) continue;
        ext_row_swap(A, p, rank, T.m());
        ext_row_scale(T, A, rank, T.inv(A.get(rank, col)));
        for (std::size_t r = 0; r < A.rows(); ++r) {
            if (r == rank || T.span_is_zero(A.entry(r, col))) continue;
            ext_row_axpy(T, A, r, rank, A.get(r, col));
        }
        piv.push_back(col);
        ++rank;
    }
    if (pivots) *pivots = piv;
    return A;
}

std::size_t ext_rank(const FieldTower& T, ExtMatrix A) {
    std::vector<std::size_t> piv;
    ext_rref(T, std::move(A), &piv);
    return piv.size();
}

ExtMatrix ext_nullspace(const FieldTower& T, const ExtMatrix& A) {
    std::vector<std::size_t> piv;
    ExtMatrix R = ext_rref(T, A, &piv);
    const std::size_t n = A.cols();
    std::vector<bool> is_piv(n, false);
    for (std::size_t c : piv) is_piv[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    ExtMatrix N(free_cols.size(), n, T.m());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t fc = free_cols[i];
        N.set(i, fc, T.one());
        for (std::size_t r = 0; r < piv.size(); ++r)
            N.set(i, piv[r], T.neg(R.get(r, fc)));
    }
    // Rows are already in echelon form up to ordering by free column.
    return N;
}

bool same_row_space(const FieldTower& T, const ExtMatrix& A, const ExtMatrix& B) {
    std::vector<std::size_t> pa, pb;
    ExtMatrix Ra = ext_rref(T, A, &pa);
    ExtMatrix Rb = ext_rref(T, B, &pb);
    if (pa.size() != pb.size() || pa != pb) return false;
    for (std::size_t r = 0; r < pa.size(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c)
            if (!(Ra.get(r, c) == Rb.get(r, c))) return false;
    return true;
}

ExtSolver::ExtSolver(const FieldTower& T, const ExtMatrix& M)
    : tower_(&T), rows_(M.rows()), cols_(M.cols()) {
    // RREF of [M | I], recording the transform.
    ExtMatrix aug(rows_, cols_ + rows_, T.m());
    aug.paste(0, 0, M);
    for (std::size_t r = 0; r < rows_; ++r) aug.set(r, cols_ + r, T.one());
    // Eliminate using only the first cols_ columns for pivoting.
    std::size_t rank = 0;
    std::vector<std::size_t> piv;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t p = rank;
        while (p < rows_ && T.span_is_zero(aug.entry(p, col))) ++p;
        if (p == rows_) continue;
        ext_row_swap(aug, p, rank, T.m());
        ext_row_scale(T, aug, rank, T.inv(aug.get(rank, col)));
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == rank || T.span_is_zero(aug.entry(r, col))) continue;
            ext_row_axpy(T, aug, r, rank, aug.get(r, col));
        }
        piv.push_back(col);
        ++rank;
    }
    rank_ = rank;
    pivots_ = std::move(piv);
    r_ = aug.sub(0, rows_, 0, cols_);
    t_ = aug.sub(0, rows_, cols_, rows_);
}

std::optional<std::vector<ExtEl>> ExtSolver::solve(const std::vector<ExtEl>& b) const {
    const FieldTower& T = *tower_;
    if (b.size() != rows_) throw std::invalid_argument("solve: rhs length mismatch");
    const unsigned m = T.m();
    // w = T * b
    std::vector<ExtEl> w(rows_, ExtEl(m));
    std::vector<fq_t> acc(2 * m - 1), red(m);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::fill(acc.begin(), acc.end(), fq_t(0));
        for (std::size_t c = 0; c < rows_; ++c) {
            if (T.span_is_zero(t_.entry(r, c)) || b[c].is_zero()) continue;
            T.conv_acc(acc.data(), t_.entry(r, c), b[c].c.data());
        }
        if (m == 1)
            w[r].c[0] = acc[0];
        else {
            T.reduce(red.data(), acc.data());
            w[r].c = red;
        }
    }
    // Consistency: rows beyond the rank must vanish.
    for (std::size_t r = rank_; r < rows_; ++r)
        if (!w[r].is_zero()) return std::nullopt;
    // Back substitution with free variables at zero: since r_ is in RREF,
    // x[pivot_r] = w[r] - sum over non-pivot columns (all zero) = w[r].
    std::vector<ExtEl> x(cols_, ExtEl(m));
    for (std::size_t r = 0; r < rank_; ++r) x[pivots_[r]] = w[r];
    return x;
}

}  // namespace rankstair
