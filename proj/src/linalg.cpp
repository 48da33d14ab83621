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

#include "ezd/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "ezd/error.hpp"

namespace ezd {

const char* to_string(ErrKind k)
{
    switch (k) {
        case ErrKind::parse: return "parse error";
        case ErrKind::structure: return "structure error";
        case ErrKind::precondition: return "precondition error";
        case ErrKind::hypothesis: return "hypothesis failure";
        case ErrKind::theorem_violation: return "theorem violation";
        case ErrKind::truncation: return "truncation boundary";
    }
    return "error";
}

Rat rat_parse(const std::string& s)
{
    if (s.empty()) fail(ErrKind::parse, "empty rational literal");
    Rat x;
    try {
        x = Rat(s);
    }
    catch (const std::invalid_argument&) {
        fail(ErrKind::parse, "bad rational literal '" + s + "'");
    }
    x.canonicalize();
    return x;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

Rat rat_binom(long n, long k)
{
    if (k < 0 || k > n) return Rat(0);
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(b);
}

bool vec_is_zero(const Vec& v)
{
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b)
{
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b)
{
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Rat& c, const Vec& v)
{
    Vec r(v);
    for (Rat& x : r) x *= c;
    return r;
}

Vec vec_zero(int n) { return Vec(n, Rat(0)); }

Vec vec_unit(int n, int i)
{
    Vec v(n, Rat(0));
    v[i] = 1;
    return v;
}

Mat Mat::identity(int n)
{
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(std::vector<Vec> rows, int cols)
{
    Mat m;
    m.r_ = static_cast<int>(rows.size());
    m.c_ = cols;
    for (const Vec& v : rows)
        if (static_cast<int>(v.size()) != cols)
            fail(ErrKind::structure, "row length mismatch in from_rows");
    m.rows_ = std::move(rows);
    return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols, int rows)
{
    Mat m(rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<int>(cols[j].size()) != rows)
            fail(ErrKind::structure, "column length mismatch in from_cols");
        for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
    }
    return m;
}

Vec Mat::col(int j) const
{
    Vec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = rows_[i][j];
    return v;
}

Mat Mat::mul(const Mat& other) const
{
    if (c_ != other.r_) fail(ErrKind::structure, "dimension mismatch in matrix product");
    Mat out(r_, other.c_);
    for (int i = 0; i < r_; ++i) {
        for (int k = 0; k < c_; ++k) {
            const Rat& a = rows_[i][k];
            if (a == 0) continue;
            for (int j = 0; j < other.c_; ++j) {
                const Rat& b = other.rows_[k][j];
                if (b != 0) out.rows_[i][j] += a * b;
            }
        }
    }
    return out;
}

Vec Mat::apply(const Vec& v) const
{
    if (static_cast<int>(v.size()) != c_) fail(ErrKind::structure, "dimension mismatch in apply");
    Vec out(r_, Rat(0));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (rows_[i][j] != 0 && v[j] != 0) out[i] += rows_[i][j] * v[j];
    return out;
}

Mat Mat::add(const Mat& other) const
{
    if (r_ != other.r_ || c_ != other.c_) fail(ErrKind::structure, "dimension mismatch in add");
    Mat out(*this);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.rows_[i][j] += other.rows_[i][j];
    return out;
}

Mat Mat::sub(const Mat& other) const { return add(other.neg()); }

Mat Mat::neg() const
{
    Mat out(*this);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.rows_[i][j] = -out.rows_[i][j];
    return out;
}

Mat Mat::scale(const Rat& c) const
{
    Mat out(*this);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.rows_[i][j] *= c;
    return out;
}

Mat Mat::transpose() const
{
    Mat out(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(j, i) = rows_[i][j];
    return out;
}

Mat Mat::hstack(const Mat& right) const
{
    if (r_ != right.r_) fail(ErrKind::structure, "row count mismatch in hstack");
    Mat out(r_, c_ + right.c_);
    out.set_block(0, 0, *this);
    out.set_block(0, c_, right);
    return out;
}

Mat Mat::vstack(const Mat& below) const
{
    if (c_ != below.c_) fail(ErrKind::structure, "column count mismatch in vstack");
    Mat out(r_ + below.r_, c_);
    out.set_block(0, 0, *this);
    out.set_block(r_, 0, below);
    return out;
}

bool Mat::is_zero() const
{
    for (const Vec& row : rows_)
        if (!vec_is_zero(row)) return false;
    return true;
}

bool Mat::operator==(const Mat& other) const
{
    return r_ == other.r_ && c_ == other.c_ && rows_ == other.rows_;
}

void Mat::set_block(int i0, int j0, const Mat& blockM)
{
    for (int i = 0; i < blockM.rows(); ++i)
        for (int j = 0; j < blockM.cols(); ++j) rows_[i0 + i][j0 + j] = blockM.at(i, j);
}

Mat Mat::block(int i0, int j0, int rows, int cols) const
{
    Mat out(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = rows_[i0 + i][j0 + j];
    return out;
}

std::string Mat::str() const
{
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < r_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < c_; ++j) os << (j ? " " : "") << rat_str(rows_[i][j]);
    }
    os << "]";
    return os.str();
}

std::pair<Mat, std::vector<int>> rref(const Mat& m)
{
    Mat a(m);
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int p = -1;
        for (int i = row; i < a.rows(); ++i) {
            if (a.at(i, col) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != row) {
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(row, j));
        }
        Rat inv = Rat(1) / a.at(row, col);
        for (int j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            Rat factor = a.at(i, col);
            for (int j = col; j < a.cols(); ++j) a.at(i, j) -= factor * a.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {a, pivots};
}

int rank(const Mat& m) { return static_cast<int>(rref(m).second.size()); }

std::vector<Vec> kernel_vectors(const Mat& m)
{
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Vec> out;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols(), Rat(0));
        v[f] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(static_cast<int>(k), f);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> solve(const Mat& m, const Vec& b)
{
    if (static_cast<int>(b.size()) != m.rows()) fail(ErrKind::structure, "rhs length mismatch in solve");
    Mat aug = m.hstack(Mat::from_cols({b}, m.rows()));
    auto [r, pivots] = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols(), Rat(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r.at(static_cast<int>(k), m.cols());
    return x;
}

std::optional<Mat> solve_many(const Mat& m, const Mat& b)
{
    if (b.rows() != m.rows()) fail(ErrKind::structure, "rhs rows mismatch in solve_many");
    Mat aug = m.hstack(b);
    auto [r, pivots] = rref(aug);
    for (int p : pivots)
        if (p >= m.cols()) return std::nullopt;
    Mat x(m.cols(), b.cols());
    for (size_t k = 0; k < pivots.size(); ++k)
        for (int j = 0; j < b.cols(); ++j) x.at(pivots[k], j) = r.at(static_cast<int>(k), m.cols() + j);
    return x;
}

bool RowReducer::add(Vec v)
{
    if (static_cast<int>(v.size()) != ambient_) fail(ErrKind::structure, "vector length mismatch in RowReducer");
    v = reduce(std::move(v));
    int piv = -1;
    for (int j = 0; j < ambient_; ++j) {
        if (v[j] != 0) {
            piv = j;
            break;
        }
    }
    if (piv < 0) return false;
    Rat inv = Rat(1) / v[piv];
    for (Rat& x : v) x *= inv;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][piv] != 0) {
            Rat c = rows_[i][piv];
            for (int j = 0; j < ambient_; ++j) rows_[i][j] -= c * v[j];
        }
    }
    auto it = std::upper_bound(pivots_.begin(), pivots_.end(), piv);
    size_t pos = static_cast<size_t>(it - pivots_.begin());
    pivots_.insert(it, piv);
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
    return true;
}

Vec RowReducer::reduce(Vec v) const
{
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rat& c = v[pivots_[i]];
        if (c != 0) {
            Rat factor = c;
            for (int j = 0; j < ambient_; ++j) v[j] -= factor * rows_[i][j];
        }
    }
    return v;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors)
{
    Subspace s;
    s.ambient_ = ambient;
    s.red_ = RowReducer(ambient);
    for (const Vec& v : vectors) s.red_.add(v);
    s.basis_ = s.red_.rows();
    return s;
}

Subspace Subspace::from_independent(int ambient, std::vector<Vec> vectors)
{
    Subspace s;
    s.ambient_ = ambient;
    s.red_ = RowReducer(ambient);
    for (const Vec& v : vectors)
        if (!s.red_.add(v)) fail(ErrKind::structure, "vectors are not linearly independent");
    s.basis_ = std::move(vectors);
    return s;
}

Subspace Subspace::full_space(int ambient)
{
    std::vector<Vec> basis;
    for (int i = 0; i < ambient; ++i) basis.push_back(vec_unit(ambient, i));
    return from_independent(ambient, std::move(basis));
}

bool Subspace::contains(const Subspace& other) const
{
    for (const Vec& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

bool Subspace::operator==(const Subspace& other) const
{
    return ambient_ == other.ambient_ && red_.rows() == other.red_.rows();
}

Vec Subspace::coordinates(const Vec& v) const
{
    auto x = solve(Mat::from_cols(basis_, ambient_), v);
    if (!x) fail(ErrKind::precondition, "vector is not in the subspace");
    return *x;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b)
{
    if (a.ambient() != b.ambient()) fail(ErrKind::structure, "ambient mismatch in subspace_sum");
    std::vector<Vec> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient(), all);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b)
{
    if (a.ambient() != b.ambient()) fail(ErrKind::structure, "ambient mismatch in subspace_intersect");
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero_space(a.ambient());
    // Kernel of [A | -B]: each kernel vector (u, v) gives the intersection
    // element A u.
    Mat A = Mat::from_cols(a.basis(), a.ambient());
    Mat B = Mat::from_cols(b.basis(), b.ambient());
    Mat combined = A.hstack(B.neg());
    std::vector<Vec> result;
    for (const Vec& k : kernel_vectors(combined)) {
        Vec u(k.begin(), k.begin() + a.dim());
        result.push_back(A.apply(u));
    }
    return Subspace::span(a.ambient(), result);
}

Subspace kernel_basis(const Mat& m)
{
    return Subspace::from_independent(m.cols(), kernel_vectors(m));
}

Subspace image_basis(const Mat& m)
{
    std::vector<Vec> cols;
    for (int j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return Subspace::span(m.rows(), cols);
}

std::vector<Vec> quotient_basis(const Subspace& ambient, const Subspace& sub)
{
    if (ambient.ambient() != sub.ambient()) fail(ErrKind::structure, "ambient mismatch in quotient_basis");
    if (!ambient.contains(sub)) fail(ErrKind::precondition, "quotient_basis: sub is not contained in ambient");
    RowReducer red(ambient.ambient());
    for (const Vec& v : sub.basis()) red.add(v);
    std::vector<Vec> reps;
    for (const Vec& v : ambient.basis()) {
        if (red.add(v)) reps.push_back(v);
    }
    return reps;
}

}  // namespace ezd
