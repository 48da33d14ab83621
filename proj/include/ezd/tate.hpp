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

#include <cstdint>

#include "ezd/freeseq.hpp"
#include "ezd/resolution.hpp"

namespace ezd {

/// The two-variable Tate dg algebra A = Q<y, t | d(y) = f, d(t) = g y> with
/// basis y_0, y_1, ..., y_D where y_{2i} = t^(i) and y_{2i+1} = t^(i) y, so
/// |y_i| = i, one basis element per degree. Multiplication:
///   y_{2i+1} y_{2j+1} = 0,   y_{2i} y_{2j+e} = binom(i+j, i) y_{2(i+j)+e}.
/// Differential: d(y_{2n+1}) = f y_{2n}, d(y_{2n}) = g y_{2n-1}, d(y_0) = 0.
/// When (f, g) is an exact pair this is a free resolution of R = Q/(f).
struct TateAlgebra {
    AlgebraPtr base;
    Vec f, g;
    int cap = 0;  // top basis degree D

    /// y_i y_j = prod_coef(i,j) y_{i+j}; zero when both degrees are odd.
    static Rat prod_coef(int i, int j);

    /// Coefficient of d(y_i) on y_{i-1} (f for odd i, g for even i >= 2).
    Vec diff_coef(int i) const;

    FreeSeq as_free_seq() const;
};

/// dg-algebra axioms checked on all basis pairs/triples within the degree cap,
/// plus d^2 = 0 and, when requested, the resolution property
/// H_0 = R, H_i = 0 for 0 < i < cap.
struct DgAxiomReport {
    bool unit_ok = false;
    bool assoc_ok = false;
    bool graded_comm_ok = false;
    bool odd_squares_ok = false;
    bool leibniz_ok = false;
    bool d_squared_ok = false;
    bool divided_power_ok = false;  // y_2 y_{2j+e} = (1+j) y_{2j+2+e}
    bool resolution_ok = false;     // only meaningful for the gated constructor
    bool ok(bool need_resolution) const
    {
        return unit_ok && assoc_ok && graded_comm_ok && odd_squares_ok && leibniz_ok && d_squared_ok &&
               divided_power_ok && (!need_resolution || resolution_ok);
    }
};

DgAxiomReport verify_dg_axioms(const TateAlgebra& a, bool check_resolution);

/// Gated constructor: requires (f, g) to be an exact pair of zero divisors and
/// verifies every dg axiom plus the resolution property through the cap.
TateAlgebra build_tate(AlgebraPtr q, const Vec& f, const Vec& g, int cap);

/// Relaxed constructor for the operator machinery on arbitrary zero divisors:
/// only f g = 0 is required, and no resolution claim is made.
TateAlgebra build_dg_pair(AlgebraPtr q, const Vec& f, const Vec& g, int cap);

/// A free resolution U of M over Q carrying a semi-free dg A-module structure.
/// U_n = (+)_{i=0..n} y_i V_{n-i}; the U-basis at degree n is the list of
/// pairs (weight i, generator index in V_{n-i}), ordered by weight then index,
/// so the three components V_n, y V_{n-1}, L_n = (+)_{i>=2} y_i V_{n-i} are
/// contiguous blocks. The differential of each V-generator is stored as its
/// full coefficient column over the previous degree's basis; the differential
/// on the rest of U is forced by the Leibniz rule.
struct SemifreeResolution {
    TateAlgebra tate;
    FDModule mod;  // over Q, with f acting as zero
    int cap = 0;
    std::uint64_t seed = 0;

    std::vector<int> vranks;  // rank of V_n, n = 0..cap
    struct UBasis {
        int weight;  // i in y_i e
        int gen;     // index into V_{n-i}
    };
    std::vector<std::vector<UBasis>> basis;        // per degree
    std::vector<std::vector<std::vector<Vec>>> dv;  // dv[n][t] = column of d(e_t), over basis[n-1]

    std::vector<Vec> generators;  // minimal generators of M (degree-0 images)
    FreeSeq useq;                 // materialized differential over Q
    Mat aug;                      // realize(U_0) -> M

    int degree_count() const { return cap + 1; }
    int basis_index(int n, int weight, int gen) const;

    /// Multiplication by y_i as a map U_n -> U_{n+i} (requires n+i <= cap).
    AlgMat y_action(int i, int n) const;

    /// Blocks of the stored differential column of generator t in V_n.
    struct DiffComponents {
        std::vector<Vec> v_part;     // over V_{n-1} generators
        std::vector<Vec> yv_part;    // over V_{n-2} generators
        std::vector<Vec> tail_part;  // over the weight >= 2 basis of U_{n-1}
    };
    DiffComponents components(int n, int t) const;
};

/// Killing-cycles construction: V_0 = free on minimal generators, then one new
/// V-generator per homology class at each degree, with the class
/// representatives chosen deterministically (pivot order) and optionally mixed
/// by a seeded unimodular transformation (seed 0 = no mixing; the seed affects
/// representatives, never verdicts).
SemifreeResolution build_semifree(const TateAlgebra& a, const FDModule& m, int cap, std::uint64_t seed = 0);

/// Resolution property of U through the cap: d^2 = 0, the augmentation is
/// onto with kernel im(d_1), and H_i = 0 for 1 <= i <= cap-1.
bool verify_semifree_resolution(const SemifreeResolution& u);

/// The dg-module Leibniz rule d(y_i u) = d(y_i) u + (-1)^i y_i d(u), checked
/// as matrix identities for every weight and degree within the cap.
bool verify_semifree_leibniz(const SemifreeResolution& u);

/// d(L_n) lies in ann(f) y V_{n-2} + L_{n-1}: the weight-0 block of d on the
/// L part vanishes and the weight-1 block has entries in ann(f).
bool check_l_stability(const SemifreeResolution& u);

/// The lifting (V, d^V) of the induced R-resolution U' back to Q:
/// d^V = (V-component of d restricted to V). V (x) R is a free resolution of M
/// over R; d^V d^V has entries in (f).
struct LiftedComplex {
    QuotientData to_r;
    std::vector<int> ranks;
    FreeSeq vseq;    // over Q; not a complex in general
    FreeSeq vseq_r;  // over R; a complex, resolution of M over R
    Mat aug_r;       // realize_R(V_0) -> M
};

LiftedComplex extract_lifting(const SemifreeResolution& u, const QuotientData& to_r);

/// H_0 = M and H_i = 0 for 1 <= i <= cap-1 for the R-complex V (x) R.
bool verify_lifting(const SemifreeResolution& u, const LiftedComplex& v);

}  // namespace ezd
