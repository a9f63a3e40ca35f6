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

#ifndef RANKSTAIR_MATRIX_HPP
#define RANKSTAIR_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rankstair/fields.hpp"

namespace rankstair {

/// Matrix over F_{q^m}; entries stored flat, m coefficients each.
class ExtMatrix {
public:
    ExtMatrix() = default;
    ExtMatrix(std::size_t rows, std::size_t cols, unsigned m)
        : rows_(rows), cols_(cols), m_(m), d_(rows * cols * m, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    unsigned m() const { return m_; }

    fq_t* entry(std::size_t r, std::size_t c) {
        return d_.data() + (r * cols_ + c) * m_;
    }
    const fq_t* entry(std::size_t r, std::size_t c) const {
        return d_.data() + (r * cols_ + c) * m_;
    }
    ExtEl get(std::size_t r, std::size_t c) const {
        ExtEl e(m_);
        const fq_t* p = entry(r, c);
        std::copy(p, p + m_, e.c.begin());
        return e;
    }
    void set(std::size_t r, std::size_t c, const ExtEl& e) {
        std::copy(e.c.begin(), e.c.end(), entry(r, c));
    }

    bool operator==(const ExtMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && m_ == o.m_ && d_ == o.d_;
    }
    bool is_zero() const {
        for (fq_t v : d_)
            if (v) return false;
        return true;
    }

    ExtMatrix row(std::size_t r) const { return sub(r, 1, 0, cols_); }
    ExtMatrix sub(std::size_t r0, std::size_t nrows, std::size_t c0,
                  std::size_t ncols) const;
    void paste(std::size_t r0, std::size_t c0, const ExtMatrix& block);
    ExtMatrix vstacked(const ExtMatrix& below) const;

    const std::vector<fq_t>& data() const { return d_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    unsigned m_ = 0;
    std::vector<fq_t> d_;
};

/// Matrix over F_q.
class BaseMatrix {
public:
    BaseMatrix() = default;
    BaseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), d_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    fq_t get(std::size_t r, std::size_t c) const { return d_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, fq_t v) { d_[r * cols_ + c] = v; }
    bool operator==(const BaseMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
    }
    bool is_zero() const {
        for (fq_t v : d_)
            if (v) return false;
        return true;
    }
    static BaseMatrix identity(std::size_t n) {
        BaseMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) a.set(i, i, 1);
        return a;
    }
    const std::vector<fq_t>& data() const { return d_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<fq_t> d_;
};

// ---- phi maps and rank ----------------------------------------------------

/// Basis expansion: alpha x n over F_{q^m} -> alpha*m x n over F_q, rows
/// (i-1)m+u holding the gamma-coordinates of row i.
BaseMatrix expand_phi(const FieldTower& T, const ExtMatrix& C);

/// Inverse of expand_phi. Throws std::invalid_argument when the row count is
/// not divisible by m.
ExtMatrix contract_phi(const FieldTower& T, const BaseMatrix& D);

/// Rank over F_q of expand_phi(E), by Gaussian elimination over F_q.
std::size_t rank_q(const FieldTower& T, const ExtMatrix& E);

// ---- arithmetic ------------------------------------------------------------

ExtMatrix ext_add(const FieldTower& T, const ExtMatrix& A, const ExtMatrix& B);
ExtMatrix ext_sub(const FieldTower& T, const ExtMatrix& A, const ExtMatrix& B);
ExtMatrix ext_matmul(const FieldTower& T, const ExtMatrix& A, const ExtMatrix& B);

/// C * A^T with the F_q entries of A acting as scalars on F_{q^m}.
ExtMatrix matmul_mixed(const FieldTower& T, const ExtMatrix& C, const BaseMatrix& A);

BaseMatrix base_matmul(const SmallField& F, const BaseMatrix& A, const BaseMatrix& B);
BaseMatrix base_transpose(const BaseMatrix& A);

// ---- linear algebra over F_q ----------------------------------------------

std::size_t base_rank(const SmallField& F, BaseMatrix A);

/// Indices of a maximal set of linearly independent rows, scanned greedily in
/// row order ("delete or ignore linearly dependent rows").
std::vector<std::size_t> greedy_independent_rows(const SmallField& F,
                                                 const BaseMatrix& A);

BaseMatrix select_rows(const BaseMatrix& A, const std::vector<std::size_t>& idx);

// ---- linear algebra over F_{q^m} --------------------------------------------

std::size_t ext_rank(const FieldTower& T, ExtMatrix A);

/// Reduced row echelon form with deterministic pivoting (first nonzero in
/// column order). Returns pivot column indices through `pivots` if non-null.
ExtMatrix ext_rref(const FieldTower& T, ExtMatrix A,
                   std::vector<std::size_t>* pivots = nullptr);

/// Basis (as rows, RREF of the solution space) of { x : A x^T = 0 }.
ExtMatrix ext_nullspace(const FieldTower& T, const ExtMatrix& A);

/// Row spaces compared via canonical RREF (zero rows dropped).
bool same_row_space(const FieldTower& T, const ExtMatrix& A, const ExtMatrix& B);

/// Factorization of an ext matrix M for repeated solves of M x = b, recording
/// the row transform alongside the echelon form. Consistency of each b is
/// checked; free variables are set to zero.
class ExtSolver {
public:
    ExtSolver(const FieldTower& T, const ExtMatrix& M);

    std::size_t rank() const { return rank_; }
    /// b has M.rows() entries; returns x with M.cols() entries, or nullopt if
    /// the system is inconsistent.
    std::optional<std::vector<ExtEl>> solve(const std::vector<ExtEl>& b) const;

private:
    const FieldTower* tower_;
    std::size_t rows_, cols_, rank_;
    ExtMatrix r_;                      // echelon form, rows_ x cols_
    ExtMatrix t_;                      // transform, rows_ x rows_
    std::vector<std::size_t> pivots_;  // pivot column per echelon row
};

}  // namespace rankstair

#endif  // RANKSTAIR_MATRIX_HPP
