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

#include "ezd/tate.hpp"

#include "ezd/error.hpp"

namespace ezd {

Rat TateAlgebra::prod_coef(int i, int j)
{
    if (i < 0 || j < 0) return Rat(0);
    if (i % 2 == 1 && j % 2 == 1) return Rat(0);
    return rat_binom(i / 2 + j / 2, i / 2);
}

Vec TateAlgebra::diff_coef(int i) const
{
    if (i <= 0) return base->zero();
    return (i % 2 == 1) ? f : g;
}

FreeSeq TateAlgebra::as_free_seq() const
{
    std::vector<int> ranks(cap + 1, 1);
    std::vector<AlgMat> maps;
    for (int n = 1; n <= cap; ++n) {
        AlgMat m = AlgMat::zero(base, 1, 1);
        m.at(0, 0) = diff_coef(n);
        maps.push_back(std::move(m));
    }
    return make_freeseq(base, 0, std::move(ranks), std::move(maps));
}

DgAxiomReport verify_dg_axioms(const TateAlgebra& a, bool check_resolution)
{
    const LocalAlgebra& q = *a.base;
    DgAxiomReport rep;

    rep.unit_ok = true;
    for (int j = 0; j <= a.cap; ++j)
        if (TateAlgebra::prod_coef(0, j) != 1 || TateAlgebra::prod_coef(j, 0) != 1) rep.unit_ok = false;

    rep.assoc_ok = true;
    for (int i = 0; i <= a.cap; ++i)
        for (int j = 0; i + j <= a.cap; ++j)
            for (int k = 0; i + j + k <= a.cap; ++k) {
                Rat lhs = TateAlgebra::prod_coef(i, j) * TateAlgebra::prod_coef(i + j, k);
                Rat rhs = TateAlgebra::prod_coef(j, k) * TateAlgebra::prod_coef(i, j + k);
                if (lhs != rhs) rep.assoc_ok = false;
            }

    rep.graded_comm_ok = true;
    rep.odd_squares_ok = true;
    for (int i = 0; i <= a.cap; ++i) {
        for (int j = 0; i + j <= a.cap; ++j) {
            Rat sign = (i % 2 == 1 && j % 2 == 1) ? Rat(-1) : Rat(1);
            if (TateAlgebra::prod_coef(i, j) != sign * TateAlgebra::prod_coef(j, i)) rep.graded_comm_ok = false;
        }
        if (i % 2 == 1 && 2 * i <= a.cap && TateAlgebra::prod_coef(i, i) != 0) rep.odd_squares_ok = false;
    }

    rep.leibniz_ok = true;
    for (int i = 0; i <= a.cap; ++i) {
        for (int j = 0; i + j <= a.cap; ++j) {
            if (i + j == 0) continue;
            Vec lhs = vec_scale(TateAlgebra::prod_coef(i, j), a.diff_coef(i + j));
            Vec rhs = vec_scale(TateAlgebra::prod_coef(i - 1, j), a.diff_coef(i));
            Rat s = (i % 2 == 0) ? Rat(1) : Rat(-1);
            rhs = vec_add(rhs, vec_scale(s * TateAlgebra::prod_coef(i, j - 1), a.diff_coef(j)));
            if (lhs != rhs) rep.leibniz_ok = false;
        }
    }

    rep.d_squared_ok = true;
    for (int i = 2; i <= a.cap; ++i)
        if (!vec_is_zero(q.mul(a.diff_coef(i), a.diff_coef(i - 1)))) rep.d_squared_ok = false;

    rep.divided_power_ok = true;
    for (int j = 0; j + 2 <= a.cap; ++j)
        if (TateAlgebra::prod_coef(2, j) != Rat(1 + j / 2)) rep.divided_power_ok = false;

    if (check_resolution) {
        Complex c = a.as_free_seq().realize();
        rep.resolution_ok = verify_complex(c);
        if (rep.resolution_ok) {
            // H_0 = Q / im(mult by f) with image exactly (f), i.e. H_0 = R.
            Subspace im1 = image_basis(c.diff(1));
            rep.resolution_ok = (im1 == principal_ideal(q, a.f));
        }
        for (int i = 1; i <= a.cap - 1 && rep.resolution_ok; ++i)
            if (homology(c, i).dim() != 0) rep.resolution_ok = false;
    }
    return rep;
}

TateAlgebra build_dg_pair(AlgebraPtr q, const Vec& f, const Vec& g, int cap)
{
    if (cap < 2) fail(ErrKind::precondition, "Tate degree cap must be at least 2");
    if (!vec_is_zero(q->mul(f, g))) fail(ErrKind::precondition, "f g must be zero to get a differential");
    TateAlgebra a;
    a.base = std::move(q);
    a.f = f;
    a.g = g;
    a.cap = cap;
    DgAxiomReport rep = verify_dg_axioms(a, false);
    if (!rep.ok(false)) fail(ErrKind::theorem_violation, "dg algebra axioms failed on the two-variable Tate algebra");
    return a;
}

TateAlgebra build_tate(AlgebraPtr q, const Vec& f, const Vec& g, int cap)
{
    if (!is_exact_pair(*q, f, g).ok())
        fail(ErrKind::precondition, "(f, g) is not an exact pair of zero divisors");
    TateAlgebra a = build_dg_pair(std::move(q), f, g, cap);
    DgAxiomReport rep = verify_dg_axioms(a, true);
    if (!rep.resolution_ok)
        fail(ErrKind::theorem_violation, "Tate complex of an exact pair failed the resolution check");
    return a;
}

int SemifreeResolution::basis_index(int n, int weight, int gen) const
{
    int idx = 0;
    for (int w = 0; w < weight; ++w) idx += vranks[n - w];
    return idx + gen;
}

AlgMat SemifreeResolution::y_action(int i, int n) const
{
    if (n < 0 || n + i > cap) fail(ErrKind::precondition, "y-action outside the degree cap");
    AlgMat out = AlgMat::zero(tate.base, static_cast<int>(basis[n + i].size()), static_cast<int>(basis[n].size()));
    for (size_t p = 0; p < basis[n].size(); ++p) {
        const UBasis& b = basis[n][p];
        Rat pc = TateAlgebra::prod_coef(i, b.weight);
        if (pc == 0) continue;
        int target = basis_index(n + i, b.weight + i, b.gen);
        out.at(target, static_cast<int>(p)) = vec_scale(pc, tate.base->unit());
    }
    return out;
}

SemifreeResolution::DiffComponents SemifreeResolution::components(int n, int t) const
{
    DiffComponents c;
    const auto& col = dv[n][t];
    int p = 0;
    int nv = (n - 1 >= 0) ? vranks[n - 1] : 0;
    int nyv = (n - 2 >= 0) ? vranks[n - 2] : 0;
    for (int i = 0; i < nv; ++i) c.v_part.push_back(col[p++]);
    for (int i = 0; i < nyv; ++i) c.yv_part.push_back(col[p++]);
    while (p < static_cast<int>(col.size())) c.tail_part.push_back(col[p++]);
    return c;
}

SemifreeResolution build_semifree(const TateAlgebra& a, const FDModule& m, int cap, std::uint64_t seed)
{
    if (m.alg != a.base) fail(ErrKind::precondition, "module and Tate algebra live over different rings");
    if (!annihilates(a.f, m)) fail(ErrKind::precondition, "f does not annihilate M; M is not an R-module");
    if (cap < 1) fail(ErrKind::precondition, "resolution cap must be at least 1");
    if (a.cap < cap + 2)
        fail(ErrKind::precondition, "Tate degree cap must exceed the module cap by at least 2");

    const AlgebraPtr q = a.base;
    const int d = q->dim;

    SemifreeResolution u;
    u.tate = a;
    u.mod = m;
    u.cap = cap;
    u.seed = seed;
    Rng rng(seed);

    u.generators = minimal_generators(m);
    const int r0 = static_cast<int>(u.generators.size());
    u.vranks = {r0};
    u.basis.emplace_back();
    for (int t = 0; t < r0; ++t) u.basis[0].push_back({0, t});
    u.dv.emplace_back(r0);  // d(e) = 0 in degree 0

    Mat aug(m.dim, r0 * d);
    for (int s = 0; s < r0; ++s)
        for (int b = 0; b < d; ++b) {
            Vec img = m.action[b].apply(u.generators[s]);
            for (int r = 0; r < m.dim; ++r) aug.at(r, s * d + b) = img[r];
        }
    u.aug = aug;

    std::vector<int> ranks = {r0};
    std::vector<AlgMat> maps;
    Mat prev_real;  // realization of the last differential (or the augmentation)

    for (int n = 0; n < cap; ++n) {
        // Basis pairs of degree n+1 with weight >= 1; their differentials are
        // forced by the Leibniz rule from the stored V-columns below.
        std::vector<SemifreeResolution::UBasis> dpart;
        for (int w = 1; w <= n + 1; ++w)
            for (int t = 0; t < u.vranks[n + 1 - w]; ++t) dpart.push_back({w, t});

        const int un = static_cast<int>(u.basis[n].size());
        std::vector<std::vector<Vec>> dcols;
        for (const auto& [w, t] : dpart) {
            std::vector<Vec> col(un, vec_zero(d));
            // d(y_w) e = (f or g) y_{w-1} e
            Vec c = a.diff_coef(w);
            col[u.basis_index(n, w - 1, t)] = vec_add(col[u.basis_index(n, w - 1, t)], c);
            // (-1)^w y_w d(e), with d(e) read off the stored column
            int edeg = n + 1 - w;
            if (edeg >= 1) {
                const auto& stored = u.dv[edeg][t];
                Rat sign = (w % 2 == 0) ? Rat(1) : Rat(-1);
                for (size_t idx = 0; idx < stored.size(); ++idx) {
                    if (vec_is_zero(stored[idx])) continue;
                    const auto& b2 = u.basis[edeg - 1][idx];
                    Rat pc = TateAlgebra::prod_coef(w, b2.weight);
                    if (pc == 0) continue;
                    int target = u.basis_index(n, b2.weight + w, b2.gen);
                    col[target] = vec_add(col[target], vec_scale(sign * pc, stored[idx]));
                }
            }
            dcols.push_back(std::move(col));
        }

        AlgMat dmat = AlgMat::zero(q, un, static_cast<int>(dpart.size()));
        for (size_t j = 0; j < dcols.size(); ++j)
            for (int i = 0; i < un; ++i) dmat.at(i, static_cast<int>(j)) = dcols[j][i];
        Mat dreal = dmat.realize();

        Subspace cycles = (n == 0) ? kernel_basis(u.aug) : kernel_basis(prev_real);
        Subspace boundary = image_basis(dreal);
        if (!cycles.contains(boundary))
            fail(ErrKind::theorem_violation, "semifree builder: forced differentials are not cycles");
        std::vector<Vec> reps = quotient_basis(cycles, boundary);

        if (seed != 0 && !reps.empty()) {
            // Seeded unimodular mixing: reps stay a transversal of the same
            // homology classes, so truth is unchanged while the resolution is.
            for (size_t tI = 0; tI < reps.size(); ++tI) {
                for (size_t sI = 0; sI < tI; ++sI)
                    if (rng.range(0, 1) == 1)
                        reps[tI] = vec_add(reps[tI], vec_scale(Rat(rng.range(-1, 1)), reps[sI]));
                if (!boundary.basis().empty()) {
                    int pick = static_cast<int>(rng.next() % boundary.basis().size());
                    reps[tI] = vec_add(reps[tI], vec_scale(Rat(rng.range(-1, 2)), boundary.basis()[pick]));
                }
            }
        }

        const int rnew = static_cast<int>(reps.size());
        std::vector<std::vector<Vec>> newcols;
        for (const Vec& rep : reps) {
            std::vector<Vec> col(un);
            for (int i = 0; i < un; ++i) col[i] = Vec(rep.begin() + i * d, rep.begin() + (i + 1) * d);
            newcols.push_back(std::move(col));
        }

        u.vranks.push_back(rnew);
        u.dv.push_back(newcols);
        std::vector<SemifreeResolution::UBasis> nb;
        for (int t = 0; t < rnew; ++t) nb.push_back({0, t});
        nb.insert(nb.end(), dpart.begin(), dpart.end());
        u.basis.push_back(std::move(nb));

        AlgMat full = AlgMat::zero(q, un, rnew + static_cast<int>(dpart.size()));
        for (int j = 0; j < rnew; ++j)
            for (int i = 0; i < un; ++i) full.at(i, j) = newcols[j][i];
        for (size_t j = 0; j < dcols.size(); ++j)
            for (int i = 0; i < un; ++i) full.at(i, rnew + static_cast<int>(j)) = dcols[j][i];

        prev_real = full.realize();
        ranks.push_back(rnew + static_cast<int>(dpart.size()));
        maps.push_back(std::move(full));
    }

    u.useq = make_freeseq(q, 0, std::move(ranks), std::move(maps));
    return u;
}

bool verify_semifree_resolution(const SemifreeResolution& u)
{
    Complex c = u.useq.realize();
    if (!verify_complex(c)) return false;
    if (rank(u.aug) != u.mod.dim) return false;
    if (c.hi >= 1) {
        if (!u.aug.mul(c.diff(1)).is_zero()) return false;
        if (!(kernel_basis(u.aug) == image_basis(c.diff(1)))) return false;
    }
    for (int i = 1; i <= u.cap - 1; ++i)
        if (homology(c, i).dim() != 0) return false;
    return true;
}

bool verify_semifree_leibniz(const SemifreeResolution& u)
{
    for (int i = 1; i <= u.cap; ++i) {
        for (int n = 0; n + i <= u.cap; ++n) {
            AlgMat lhs = u.useq.map(n + i).mul(u.y_action(i, n));
            AlgMat rhs = u.y_action(i - 1, n).scale_elem(u.tate.diff_coef(i));
            if (n >= 1) {
                AlgMat term = u.y_action(i, n - 1).mul(u.useq.map(n));
                if (i % 2 == 1) term = term.neg();
                rhs = rhs.add(term);
            }
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool check_l_stability(const SemifreeResolution& u)
{
    const LocalAlgebra& q = *u.tate.base;
    Subspace ann_f = annihilator(q, u.tate.f);
    for (int n = 2; n <= u.cap; ++n) {
        const AlgMat& dn = u.useq.map(n);
        for (size_t p = 0; p < u.basis[n].size(); ++p) {
            if (u.basis[n][p].weight < 2) continue;  // only the L part
            for (size_t r = 0; r < u.basis[n - 1].size(); ++r) {
                const Vec& entry = dn.at(static_cast<int>(r), static_cast<int>(p));
                int w = u.basis[n - 1][r].weight;
                if (w == 0 && !vec_is_zero(entry)) return false;
                if (w == 1 && !ann_f.contains(entry)) return false;
            }
        }
    }
    return true;
}

LiftedComplex extract_lifting(const SemifreeResolution& u, const QuotientData& to_r)
{
    if (to_r.parent != u.tate.base) fail(ErrKind::precondition, "quotient data does not match the base ring");
    LiftedComplex v;
    v.to_r = to_r;
    v.ranks = u.vranks;

    std::vector<AlgMat> maps;
    for (int n = 1; n <= u.cap; ++n) {
        AlgMat dv = AlgMat::zero(u.tate.base, u.vranks[n - 1], u.vranks[n]);
        for (int t = 0; t < u.vranks[n]; ++t) {
            auto comp = u.components(n, t);
            for (int i = 0; i < u.vranks[n - 1]; ++i) dv.at(i, t) = comp.v_part[i];
        }
        maps.push_back(std::move(dv));
    }
    v.vseq = make_freeseq(u.tate.base, 0, u.vranks, std::move(maps));
    v.vseq_r = v.vseq.base_change(to_r);

    const int dr = to_r.quotient->dim;
    Mat aug(u.mod.dim, u.vranks[0] * dr);
    for (int s = 0; s < u.vranks[0]; ++s)
        for (int b = 0; b < dr; ++b) {
            Vec img = u.mod.act(to_r.lift(to_r.quotient->elem(b))).apply(u.generators[s]);
            for (int r = 0; r < u.mod.dim; ++r) aug.at(r, s * dr + b) = img[r];
        }
    v.aug_r = std::move(aug);
    return v;
}

bool verify_lifting(const SemifreeResolution& u, const LiftedComplex& v)
{
    if (!v.vseq_r.is_complex()) return false;
    Complex c = v.vseq_r.realize();
    if (rank(v.aug_r) != u.mod.dim) return false;
    if (c.hi >= 1) {
        if (!v.aug_r.mul(c.diff(1)).is_zero()) return false;
        if (!(kernel_basis(v.aug_r) == image_basis(c.diff(1)))) return false;
    }
    for (int i = 1; i <= u.cap - 1; ++i)
        if (homology(c, i).dim() != 0) return false;
    return true;
}

}  // namespace ezd
