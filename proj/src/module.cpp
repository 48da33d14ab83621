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

#include "ezd/module.hpp"

#include "ezd/error.hpp"

namespace ezd {

Mat FDModule::act(const Vec& a) const
{
    Mat out(dim, dim);
    for (int i = 0; i < alg->dim; ++i)
        if (a[i] != 0) out = out.add(action[i].scale(a[i]));
    return out;
}

FDModule make_module(AlgebraPtr alg, std::vector<Mat> action)
{
    FDModule m;
    m.alg = std::move(alg);
    m.action = std::move(action);
    const int d = m.alg->dim;
    if (static_cast<int>(m.action.size()) != d) fail(ErrKind::structure, "need one action matrix per basis element");
    m.dim = m.action.empty() ? 0 : m.action[0].rows();
    for (const Mat& a : m.action)
        if (a.rows() != m.dim || a.cols() != m.dim) fail(ErrKind::structure, "action matrices must be square of equal size");
    if (m.action[0] != Mat::identity(m.dim)) fail(ErrKind::structure, "unit must act as the identity");
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            Mat lhs = m.action[i].mul(m.action[j]);
            Mat rhs(m.dim, m.dim);
            const Vec& prod = m.alg->basis_product(i, j);
            for (int k = 0; k < d; ++k)
                if (prod[k] != 0) rhs = rhs.add(m.action[k].scale(prod[k]));
            if (lhs != rhs)
                fail(ErrKind::structure, "action does not respect the structure constants at pair (" +
                                             std::to_string(i) + "," + std::to_string(j) + ")");
            if (m.action[j].mul(m.action[i]) != lhs)
                fail(ErrKind::structure, "action matrices do not commute at pair (" + std::to_string(i) + "," +
                                             std::to_string(j) + ")");
        }
    }
    return m;
}

FDModule residue_field_module(AlgebraPtr alg)
{
    const int d = alg->dim;
    std::vector<Mat> action;
    action.push_back(Mat::identity(1));
    for (int i = 1; i < d; ++i) action.push_back(Mat::zero(1, 1));
    return make_module(std::move(alg), std::move(action));
}

FDModule free_module(AlgebraPtr alg, int rank)
{
    const int d = alg->dim;
    std::vector<Mat> action;
    for (int i = 0; i < d; ++i) {
        Mat reg = alg->mult_matrix(alg->elem(i));
        Mat big(rank * d, rank * d);
        for (int s = 0; s < rank; ++s) big.set_block(s * d, s * d, reg);
        action.push_back(std::move(big));
    }
    return make_module(std::move(alg), std::move(action));
}

FDModule zero_module(AlgebraPtr alg)
{
    std::vector<Mat> action(alg->dim, Mat::zero(0, 0));
    FDModule m;
    m.alg = std::move(alg);
    m.dim = 0;
    m.action = std::move(action);
    return m;
}

FDModule restrict_scalars(const FDModule& m, const QuotientData& q)
{
    if (m.alg != q.quotient) fail(ErrKind::precondition, "module is not over the quotient algebra");
    std::vector<Mat> action;
    for (int i = 0; i < q.parent->dim; ++i) action.push_back(m.act(q.project(q.parent->elem(i))));
    return make_module(q.parent, std::move(action));
}

FDModule corestrict(const FDModule& m, const QuotientData& q)
{
    if (m.alg != q.parent) fail(ErrKind::precondition, "module is not over the parent algebra");
    for (const Vec& v : q.ideal.basis())
        if (!m.act(v).is_zero())
            fail(ErrKind::precondition, "ideal does not annihilate the module; cannot descend the action");
    std::vector<Mat> action;
    for (int i = 0; i < q.quotient->dim; ++i) action.push_back(m.act(q.lift(q.quotient->elem(i))));
    return make_module(q.quotient, std::move(action));
}

FDModule tensor_over(const FDModule& m, const FDModule& n)
{
    if (m.alg != n.alg) fail(ErrKind::precondition, "tensor factors live over different algebras");
    const int dm = m.dim, dn = n.dim, D = dm * dn;
    const int d = m.alg->dim;

    auto kron_apply_left = [&](const Mat& a, int i, int j) {
        // (a x I) applied to basis vector (i, j): column vector in the big space
        Vec v(D, Rat(0));
        for (int r = 0; r < dm; ++r)
            if (a.at(r, i) != 0) v[r * dn + j] = a.at(r, i);
        return v;
    };
    auto kron_apply_right = [&](const Mat& b, int i, int j) {
        Vec v(D, Rat(0));
        for (int r = 0; r < dn; ++r)
            if (b.at(r, j) != 0) v[i * dn + r] = b.at(r, j);
        return v;
    };

    std::vector<Vec> rel;
    for (int a = 1; a < d; ++a) {
        for (int i = 0; i < dm; ++i)
            for (int j = 0; j < dn; ++j)
                rel.push_back(vec_sub(kron_apply_left(m.action[a], i, j), kron_apply_right(n.action[a], i, j)));
    }
    Subspace relations = Subspace::span(D, rel);
    std::vector<Vec> reps = quotient_basis(Subspace::full_space(D), relations);
    const int q = static_cast<int>(reps.size());

    Mat rep_cols = Mat::from_cols(reps, D);
    Mat basis_cols = rep_cols;
    for (const Vec& v : relations.basis()) basis_cols = basis_cols.hstack(Mat::from_cols({v}, D));
    auto sol = solve_many(basis_cols, Mat::identity(D));
    if (!sol) fail(ErrKind::structure, "tensor projection failed");
    Mat proj = sol->block(0, 0, q, D);

    // Induced action: act on the left factor of each representative.
    std::vector<Mat> action;
    for (int a = 0; a < d; ++a) {
        Mat big(D, D);
        for (int i = 0; i < dm; ++i)
            for (int j = 0; j < dn; ++j) {
                Vec img = kron_apply_left(m.action[a], i, j);
                for (int r = 0; r < D; ++r) big.at(r, i * dn + j) = img[r];
            }
        action.push_back(proj.mul(big).mul(rep_cols));
    }
    return make_module(m.alg, std::move(action));
}

ModMap make_modmap(FDModule src, FDModule dst, Mat map)
{
    if (src.alg != dst.alg) fail(ErrKind::precondition, "module map across different algebras");
    if (map.rows() != dst.dim || map.cols() != src.dim) fail(ErrKind::structure, "module map dimension mismatch");
    for (int i = 0; i < src.alg->dim; ++i)
        if (map.mul(src.action[i]) != dst.action[i].mul(map))
            fail(ErrKind::structure, "map does not commute with the action of basis element " + std::to_string(i));
    ModMap mm;
    mm.src = std::move(src);
    mm.dst = std::move(dst);
    mm.map = std::move(map);
    return mm;
}

std::vector<Vec> minimal_generators(const FDModule& m)
{
    return quotient_basis(Subspace::full_space(m.dim), radical_submodule(m));
}

Subspace radical_submodule(const FDModule& m)
{
    std::vector<Vec> span;
    for (int i = 1; i < m.alg->dim; ++i)
        for (int j = 0; j < m.dim; ++j) span.push_back(m.action[i].col(j));
    return Subspace::span(m.dim, span);
}

namespace {

/// Submodule-with-inclusion realization on the subspace's own basis.
std::pair<FDModule, Mat> submodule_on_basis(const FDModule& m, const Subspace& s)
{
    const int k = s.dim();
    Mat incl = Mat::from_cols(s.basis(), m.dim);
    std::vector<Mat> action;
    for (int i = 0; i < m.alg->dim; ++i) {
        Mat a(k, k);
        for (int j = 0; j < k; ++j) {
            Vec img = m.action[i].apply(s.basis()[j]);
            if (!s.contains(img)) fail(ErrKind::precondition, "subspace is not a submodule");
            Vec coords = s.coordinates(img);
            for (int r = 0; r < k; ++r) a.at(r, j) = coords[r];
        }
        action.push_back(std::move(a));
    }
    return {make_module(m.alg, std::move(action)), incl};
}

}  // namespace

ModMap radical_inclusion(const FDModule& m)
{
    Subspace s = radical_submodule(m);
    auto [sub, incl] = submodule_on_basis(m, s);
    return make_modmap(std::move(sub), m, std::move(incl));
}

ModMap coinvariants_projection(const FDModule& m)
{
    auto qm = quotient_module(m, radical_submodule(m));
    return make_modmap(m, qm.mod, qm.projection);
}

QuotientModule quotient_module(const FDModule& m, const Subspace& submodule)
{
    std::vector<Vec> reps = quotient_basis(Subspace::full_space(m.dim), submodule);
    const int q = static_cast<int>(reps.size());
    Mat rep_cols = Mat::from_cols(reps, m.dim);
    Mat basis_cols = rep_cols;
    for (const Vec& v : submodule.basis()) basis_cols = basis_cols.hstack(Mat::from_cols({v}, m.dim));
    auto sol = solve_many(basis_cols, Mat::identity(m.dim));
    if (!sol) fail(ErrKind::structure, "quotient module projection failed");
    Mat proj = sol->block(0, 0, q, m.dim);

    std::vector<Mat> action;
    for (int i = 0; i < m.alg->dim; ++i) action.push_back(proj.mul(m.action[i]).mul(rep_cols));
    QuotientModule out;
    out.mod = make_module(m.alg, std::move(action));
    out.projection = std::move(proj);
    return out;
}

Subspace submodule_generated_by(const FDModule& m, const std::vector<Vec>& gens)
{
    std::vector<Vec> span;
    for (const Vec& g : gens)
        for (int i = 0; i < m.alg->dim; ++i) span.push_back(m.action[i].apply(g));
    return Subspace::span(m.dim, span);
}

int length(const FDModule& m) { return m.dim; }

bool annihilates(const Vec& f, const FDModule& m) { return m.act(f).is_zero(); }

Subspace elem_times_module(const Vec& f, const FDModule& m)
{
    Mat a = m.act(f);
    return image_basis(a);
}

std::vector<long long> hilbert_coeffs_module(const FDModule& m)
{
    if (m.dim == 0) return {0};
    std::vector<long long> h;
    Subspace cur = Subspace::full_space(m.dim);
    while (cur.dim() > 0) {
        std::vector<Vec> next;
        for (int i = 1; i < m.alg->dim; ++i)
            for (const Vec& v : cur.basis()) next.push_back(m.action[i].apply(v));
        Subspace np = Subspace::span(m.dim, next);
        h.push_back(cur.dim() - np.dim());
        cur = std::move(np);
    }
    return h;
}

}  // namespace ezd
