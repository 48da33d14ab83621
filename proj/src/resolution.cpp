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

#include "ezd/resolution.hpp"

#include "ezd/error.hpp"

namespace ezd {

namespace {

/// Coefficient column of a free-module element: chunk s of v is the algebra
/// coefficient of generator s.
std::vector<Vec> chunks(const Vec& v, int rank, int d)
{
    std::vector<Vec> out(rank);
    for (int s = 0; s < rank; ++s) out[s] = Vec(v.begin() + s * d, v.begin() + (s + 1) * d);
    return out;
}

/// m * K inside the realization of a rank-r free module.
Subspace radical_of_subspace(const LocalAlgebra& alg, int rank, const Subspace& k)
{
    const int d = alg.dim;
    std::vector<Mat> action;
    for (int i = 1; i < d; ++i) {
        Mat reg = alg.mult_matrix(alg.elem(i));
        Mat big(rank * d, rank * d);
        for (int s = 0; s < rank; ++s) big.set_block(s * d, s * d, reg);
        action.push_back(std::move(big));
    }
    std::vector<Vec> span;
    for (const Mat& a : action)
        for (const Vec& v : k.basis()) span.push_back(a.apply(v));
    return Subspace::span(rank * d, span);
}

}  // namespace

FreeResolution minimal_free_resolution(const FDModule& m, int cap)
{
    if (cap < 0) fail(ErrKind::precondition, "resolution cap must be nonnegative");
    const AlgebraPtr alg = m.alg;
    const int d = alg->dim;

    FreeResolution out;
    out.mod = m;

    std::vector<Vec> gens = minimal_generators(m);
    std::vector<int> ranks = {static_cast<int>(gens.size())};
    std::vector<AlgMat> maps;

    // Augmentation: column (s, b) -> b . gen_s.
    Mat aug(m.dim, ranks[0] * d);
    for (int s = 0; s < ranks[0]; ++s)
        for (int b = 0; b < d; ++b) {
            Vec img = m.action[b].apply(gens[s]);
            for (int r = 0; r < m.dim; ++r) aug.at(r, s * d + b) = img[r];
        }
    out.aug = aug;

    Subspace ker = kernel_basis(aug);
    for (int n = 1; n <= cap; ++n) {
        int prev_rank = ranks.back();
        Subspace mker = radical_of_subspace(*alg, prev_rank, ker);
        std::vector<Vec> mins = quotient_basis(ker, mker);
        int r = static_cast<int>(mins.size());
        AlgMat dmat = AlgMat::zero(alg, prev_rank, r);
        for (int j = 0; j < r; ++j) {
            auto cols = chunks(mins[j], prev_rank, d);
            for (int i = 0; i < prev_rank; ++i) dmat.at(i, j) = cols[i];
        }
        ranks.push_back(r);
        maps.push_back(dmat);
        if (n < cap) ker = kernel_basis(maps.back().realize());
    }

    out.fseq = make_freeseq(alg, 0, std::move(ranks), std::move(maps));
    return out;
}

bool verify_resolution(const FreeResolution& r, int top)
{
    Complex c = r.fseq.realize();
    if (!verify_complex(c)) return false;
    // H_0 = M through the augmentation: ker(aug) = im(d_1) and aug onto.
    if (rank(r.aug) != r.mod.dim) return false;
    if (c.hi >= 1) {
        Subspace ker = kernel_basis(r.aug);
        Subspace im = image_basis(c.diff(1));
        if (!(ker == im)) return false;
    }
    for (int i = 1; i <= top; ++i) {
        HomologySpace h = homology(c, i);
        if (h.dim() != 0) return false;
    }
    return true;
}

TorTable tor_table(const FreeSeq& fseq, const FDModule& n, int top)
{
    if (top > fseq.hi - 1)
        fail(ErrKind::truncation, "Tor window exceeds the resolution cap");
    Complex c = fseq.tensor_module(n);
    TorTable t;
    t.top = top;
    for (int i = 0; i <= top; ++i) {
        t.spaces.push_back(homology(c, i));
        t.beta.push_back(t.spaces.back().dim());
    }
    return t;
}

}  // namespace ezd
