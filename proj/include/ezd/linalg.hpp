/*
   Copyright 2026 The ezd authors

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

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ezd/error.hpp"
#include "ezd/rat.hpp"

namespace ezd {

using Vec = std::vector<Rat>;

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& v);
Vec vec_zero(int n);
Vec vec_unit(int n, int i);

/// Dense matrix of exact rationals, row-major. Everything is a value; all
/// operations are pure and deterministic (leftmost pivot, rows top-down, no
/// magnitude heuristics), so downstream constructions are reproducible.
class Mat {
  public:
    Mat() : r_(0), c_(0) {}
    Mat(int rows, int cols) : r_(rows), c_(cols), rows_(rows, Vec(cols, Rat(0))) {}

    static Mat identity(int n);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }
    static Mat from_rows(std::vector<Vec> rows, int cols);
    static Mat from_cols(const std::vector<Vec>& cols, int rows);

    int rows() const { return r_; }
    int cols() const { return c_; }

    Rat& at(int i, int j) { return rows_[i][j]; }
    const Rat& at(int i, int j) const { return rows_[i][j]; }
    const Vec& row(int i) const { return rows_[i]; }
    Vec col(int j) const;

    Mat mul(const Mat& other) const;
    Vec apply(const Vec& v) const;
    Mat add(const Mat& other) const;
    Mat sub(const Mat& other) const;
    Mat neg() const;
    Mat scale(const Rat& c) const;
    Mat transpose() const;
    Mat hstack(const Mat& right) const;
    Mat vstack(const Mat& below) const;

    bool is_zero() const;
    bool operator==(const Mat& other) const;
    bool operator!=(const Mat& other) const { return !(*this == other); }

    /// Writes `block` with its top-left corner at (i0, j0).
    void set_block(int i0, int j0, const Mat& block);
    Mat block(int i0, int j0, int rows, int cols) const;

    std::string str() const;

  private:
    int r_, c_;
    std::vector<Vec> rows_;
};

/// Reduced row-echelon form; returns the reduced matrix and the pivot column
/// indices in increasing order.
std::pair<Mat, std::vector<int>> rref(const Mat& m);

int rank(const Mat& m);

/// Basis of the null space, one vector per free column, ordered by free-column
/// index. (Not canonicalized; callers that only care about the subspace wrap
/// it in Subspace.)
std::vector<Vec> kernel_vectors(const Mat& m);

/// One solution of m x = b with free variables set to 0, or nullopt when b is
/// not in the column space.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Columnwise solve: X with m X = b, or nullopt if any column fails.
std::optional<Mat> solve_many(const Mat& m, const Mat& b);

/// Incremental full-RREF accumulator. Maintains a canonical reduced basis of
/// the span of everything added; pivot columns strictly increase down the row
/// list, entries above and below pivots are eliminated.
class RowReducer {
  public:
    explicit RowReducer(int ambient) : ambient_(ambient) {}

    /// Reduces v against the current basis; if a nonzero remainder survives it
    /// joins the basis. Returns true when v enlarged the span.
    bool add(Vec v);

    /// Remainder of v after reduction (zero iff v is in the span).
    Vec reduce(Vec v) const;

    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return ambient_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

  private:
    int ambient_;
    std::vector<Vec> rows_;    // sorted by pivot column
    std::vector<int> pivots_;  // strictly increasing
};

/// A linear subspace of Q^ambient, held as an explicit independent basis (the
/// vectors given at construction) together with its canonical RREF form for
/// comparisons and membership tests. Immutable after construction.
class Subspace {
  public:
    Subspace() : ambient_(0) {}

    /// Span of arbitrary vectors; the stored basis is the canonical RREF one.
    static Subspace span(int ambient, const std::vector<Vec>& vectors);
    /// Wraps vectors that are already independent (validated).
    static Subspace from_independent(int ambient, std::vector<Vec> vectors);
    static Subspace zero_space(int ambient) { return span(ambient, {}); }
    static Subspace full_space(int ambient);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const { return red_.contains(v); }
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& other) const;
    bool operator!=(const Subspace& other) const { return !(*this == other); }

    /// Coordinates of v in this basis; precondition: v lies in the subspace.
    Vec coordinates(const Vec& v) const;

  private:
    int ambient_ = 0;
    std::vector<Vec> basis_;
    RowReducer red_{0};
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Kernel and image (column space) as subspaces.
Subspace kernel_basis(const Mat& m);
Subspace image_basis(const Mat& m);

/// Coset representatives for ambient/sub: walks ambient's stored basis in
/// order and keeps the vectors that are independent modulo sub. Precondition:
/// sub is contained in ambient.
std::vector<Vec> quotient_basis(const Subspace& ambient, const Subspace& sub);

}  // namespace ezd
