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

#include "ezd/freeseq.hpp"

#include "ezd/error.hpp"

namespace ezd {

AlgMat AlgMat::zero(AlgebraPtr alg, int rows, int cols)
{
    AlgMat m;
    m.rows = rows;
    m.cols = cols;
    m.ent.assign(static_cast<size_t>(rows) * cols, vec_zero(alg->dim));
    m.alg = std::move(alg);
    return m;
}

AlgMat AlgMat::identity(AlgebraPtr alg, int n)
{
    AlgMat m = zero(alg, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = m.alg->unit();
    return m;
}

AlgMat AlgMat::scalar(AlgebraPtr alg, int n, const Vec& c)
{
    AlgMat m = zero(std::move(alg), n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
}

AlgMat AlgMat::mul(const AlgMat& other) const
{
    if (alg != other.alg || cols != other.rows) fail(ErrKind::structure, "AlgMat product mismatch");
    AlgMat out = zero(alg, rows, other.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Vec& a = at(i, k);
            if (vec_is_zero(a)) continue;
            for (int j = 0; j < other.cols; ++j) {
                const Vec& b = other.at(k, j);
                if (!vec_is_zero(b)) out.at(i, j) = vec_add(out.at(i, j), alg->mul(a, b));
            }
        }
    return out;
}

AlgMat AlgMat::add(const AlgMat& other) const
{
    if (alg != other.alg || rows != other.rows || cols != other.cols)
        fail(ErrKind::structure, "AlgMat sum mismatch");
    AlgMat out(*this);
    for (size_t i = 0; i < ent.size(); ++i) out.ent[i] = vec_add(out.ent[i], other.ent[i]);
    return out;
}

AlgMat AlgMat::sub(const AlgMat& other) const { return add(other.neg()); }

AlgMat AlgMat::neg() const
{
    AlgMat out(*this);
    for (Vec& e : out.ent) e = vec_scale(Rat(-1), e);
    return out;
}

AlgMat AlgMat::scale_elem(const Vec& c) const
{
    AlgMat out(*this);
    for (Vec& e : out.ent) e = alg->mul(c, e);
    return out;
}

bool AlgMat::is_zero() const
{
    for (const Vec& e : ent)
        if (!vec_is_zero(e)) return false;
    return true;
}

bool AlgMat::operator==(const AlgMat& other) const
{
    return alg == other.alg && rows == other.rows && cols == other.cols && ent == other.ent;
}

void AlgMat::set_block(int i0, int j0, const AlgMat& b)
{
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) at(i0 + i, j0 + j) = b.at(i, j);
}

Mat AlgMat::realize() const
{
    const int d = alg->dim;
    Mat out(rows * d, cols * d);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const Vec& e = at(i, j);
            if (!vec_is_zero(e)) out.set_block(i * d, j * d, alg->mult_matrix(e));
        }
    return out;
}

Mat AlgMat::tensor_with(const FDModule& n) const
{
    if (n.alg != alg) fail(ErrKind::precondition, "module is over a different algebra");
    const int dn = n.dim;
    Mat out(rows * dn, cols * dn);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const Vec& e = at(i, j);
            if (!vec_is_zero(e)) out.set_block(i * dn, j * dn, n.act(e));
        }
    return out;
}

AlgMat AlgMat::base_change(const QuotientData& q) const
{
    if (q.parent != alg) fail(ErrKind::precondition, "base_change from a different algebra");
    AlgMat out = zero(q.quotient, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = q.project(at(i, j));
    return out;
}

bool AlgMat::entries_in(const Subspace& s) const
{
    for (const Vec& e : ent)
        if (!s.contains(e)) return false;
    return true;
}

const AlgMat& FreeSeq::map(int n) const
{
    if (n <= lo || n > hi) fail(ErrKind::truncation, "FreeSeq map out of window at degree " + std::to_string(n));
    return maps[n - lo - 1];
}

AlgMat FreeSeq::map_or_zero(int n) const
{
    if (n > lo && n <= hi) return maps[n - lo - 1];
    return AlgMat::zero(alg, rank(n - 1), rank(n));
}

bool FreeSeq::is_complex() const
{
    for (int n = lo + 2; n <= hi; ++n)
        if (!map(n - 1).mul(map(n)).is_zero()) return false;
    return true;
}

Complex FreeSeq::realize() const
{
    std::vector<int> dims;
    for (int r : ranks) dims.push_back(r * alg->dim);
    std::vector<Mat> diffs;
    for (const AlgMat& m : maps) diffs.push_back(m.realize());
    return make_complex(lo, std::move(dims), std::move(diffs));
}

Complex FreeSeq::tensor_module(const FDModule& n) const
{
    std::vector<int> dims;
    for (int r : ranks) dims.push_back(r * n.dim);
    std::vector<Mat> diffs;
    for (const AlgMat& m : maps) diffs.push_back(m.tensor_with(n));
    return make_complex(lo, std::move(dims), std::move(diffs));
}

FreeSeq FreeSeq::base_change(const QuotientData& q) const
{
    FreeSeq out;
    out.alg = q.quotient;
    out.lo = lo;
    out.hi = hi;
    out.ranks = ranks;
    for (const AlgMat& m : maps) out.maps.push_back(m.base_change(q));
    return out;
}

FreeSeq make_freeseq(AlgebraPtr alg, int lo, std::vector<int> ranks, std::vector<AlgMat> maps)
{
    FreeSeq f;
    f.alg = std::move(alg);
    f.lo = lo;
    f.hi = lo + static_cast<int>(ranks.size()) - 1;
    f.ranks = std::move(ranks);
    f.maps = std::move(maps);
    if (f.maps.size() + 1 != f.ranks.size() && !(f.ranks.empty() && f.maps.empty()))
        fail(ErrKind::structure, "FreeSeq needs one map per adjacent pair");
    for (size_t k = 0; k < f.maps.size(); ++k)
        if (f.maps[k].rows != f.ranks[k] || f.maps[k].cols != f.ranks[k + 1])
            fail(ErrKind::structure, "FreeSeq map shape mismatch at degree " + std::to_string(f.lo + 1 + static_cast<int>(k)));
    return f;
}

CxMap tensor_with_modmap(const FreeSeq& f, const ModMap& phi, std::shared_ptr<const Complex> src_cx,
                         std::shared_ptr<const Complex> dst_cx)
{
    std::map<int, Mat> comps;
    for (int n = f.lo; n <= f.hi; ++n) {
        int r = f.rank(n);
        Mat big(r * phi.dst.dim, r * phi.src.dim);
        for (int s = 0; s < r; ++s) big.set_block(s * phi.dst.dim, s * phi.src.dim, phi.map);
        comps[n] = std::move(big);
    }
    return make_cxmap(std::move(src_cx), std::move(dst_cx), 0, std::move(comps));
}

}  // namespace ezd
