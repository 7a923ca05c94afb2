/*
   Copyright 2026 The aslrc Authors

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

#ifndef ASLRC_LINALG_HPP
#define ASLRC_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "field.hpp"

namespace aslrc {

/// Dense row-major matrix over F_{p^h}.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<FElem> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    FElem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const FElem& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// In-place reduction to row echelon form; returns the rank.
inline std::size_t row_reduce(const FieldCtx& F, Matrix& M) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols && r < M.rows; ++c) {
        std::size_t piv = r;
        while (piv < M.rows && M.at(piv, c).v == 0) ++piv;
        if (piv == M.rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < M.cols; ++j) std::swap(M.at(r, j), M.at(piv, j));
        FElem inv = F.inv(M.at(r, c));
        for (std::size_t j = c; j < M.cols; ++j) M.at(r, j) = F.mul(inv, M.at(r, j));
        for (std::size_t i = 0; i < M.rows; ++i) {
            if (i == r || M.at(i, c).v == 0) continue;
            FElem f = M.at(i, c);
            for (std::size_t j = c; j < M.cols; ++j)
                M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
        }
        ++r;
    }
    return r;
}

inline std::size_t rank_of(const FieldCtx& F, Matrix M) { return row_reduce(F, M); }

enum class SolveStatus { unique, underdetermined, inconsistent };

struct SolveResult {
    SolveStatus status;
    std::vector<FElem> solution; // valid when status == unique
};

/// Solves A x = b exactly (A is rows x cols, one unknown per column).
inline SolveResult solve_linear(const FieldCtx& F, const Matrix& A, std::span<const FElem> b) {
    Matrix M(A.rows, A.cols + 1);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
        M.at(i, A.cols) = b[i];
    }
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < A.cols && r < M.rows; ++c) {
        std::size_t piv = r;
        while (piv < M.rows && M.at(piv, c).v == 0) ++piv;
        if (piv == M.rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j <= A.cols; ++j) std::swap(M.at(r, j), M.at(piv, j));
        FElem inv = F.inv(M.at(r, c));
        for (std::size_t j = c; j <= A.cols; ++j) M.at(r, j) = F.mul(inv, M.at(r, j));
        for (std::size_t i = 0; i < M.rows; ++i) {
            if (i == r || M.at(i, c).v == 0) continue;
            FElem f = M.at(i, c);
            for (std::size_t j = c; j <= A.cols; ++j)
                M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < M.rows; ++i) {
        if (M.at(i, A.cols).v == 0) continue;
        bool all_zero = true;
        for (std::size_t j = 0; j < A.cols && all_zero; ++j) all_zero = (M.at(i, j).v == 0);
        if (all_zero) return {SolveStatus::inconsistent, {}};
    }
    if (r < A.cols) return {SolveStatus::underdetermined, {}};
    std::vector<FElem> x(A.cols, F.zero());
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = M.at(i, A.cols);
    return {SolveStatus::unique, std::move(x)};
}

} // namespace aslrc

#endif
