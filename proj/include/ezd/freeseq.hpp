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

#include "ezd/chain.hpp"
#include "ezd/module.hpp"

namespace ezd {

/// Matrix with entries in a LocalAlgebra: a map of finite free modules
/// X^cols -> X^rows. Realizes to a plain rational matrix through the regular
/// representation, or tensors with any module over the same algebra.
struct AlgMat {
    AlgebraPtr alg;
    int rows = 0, cols = 0;
    std::vector<Vec> ent;  // row-major, each entry a coefficient vector

    static AlgMat zero(AlgebraPtr alg, int rows, int cols);
    static AlgMat identity(AlgebraPtr alg, int n);
    /// Diagonal-free scalar matrix with a single algebra element everywhere on
    /// the diagonal.
    static AlgMat scalar(AlgebraPtr alg, int n, const Vec& c);

    const Vec& at(int i, int j) const { return ent[i * cols + j]; }
    Vec& at(int i, int j) { return ent[i * cols + j]; }

    AlgMat mul(const AlgMat& other) const;
    AlgMat add(const AlgMat& other) const;
    AlgMat sub(const AlgMat& other) const;
    AlgMat neg() const;
    AlgMat scale_elem(const Vec& c) const;  // entrywise multiply by an algebra element
    bool is_zero() const;
    bool operator==(const AlgMat& other) const;
    bool operator!=(const AlgMat& other) const { return !(*this == other); }

    void set_block(int i0, int j0, const AlgMat& b);

    /// Rational realization: block (i, j) is the multiplication matrix of the
    /// entry. Basis convention for X^r: index (gen s, algebra basis b) = s*dim + b.
    Mat realize() const;

    /// Tensor with a module over the same algebra: block (i, j) is the action
    /// of the entry on N. Basis convention: (gen s, module basis t) = s*dimN + t.
    Mat tensor_with(const FDModule& n) const;

    /// Entries pushed through a quotient projection.
    AlgMat base_change(const QuotientData& q) const;

    /// True when every entry lies in the given subspace of the algebra.
    bool entries_in(const Subspace& s) const;
};

/// A degreewise-free sequence of modules with algebra-entried maps. Not
/// necessarily a complex (liftings are not); is_complex checks d d = 0 at the
/// entry level.
struct FreeSeq {
    AlgebraPtr alg;
    int lo = 0, hi = -1;
    std::vector<int> ranks;   // ranks[n - lo]
    std::vector<AlgMat> maps;  // maps[n - lo - 1]: degree n -> n-1

    int rank(int n) const { return (n >= lo && n <= hi) ? ranks[n - lo] : 0; }
    const AlgMat& map(int n) const;
    AlgMat map_or_zero(int n) const;

    bool is_complex() const;

    /// Plain rational realization (free modules over the rationals).
    Complex realize() const;

    /// Tensor every degree with N (a module over the same algebra).
    Complex tensor_module(const FDModule& n) const;

    /// Push all entries through a quotient projection.
    FreeSeq base_change(const QuotientData& q) const;
};

FreeSeq make_freeseq(AlgebraPtr alg, int lo, std::vector<int> ranks, std::vector<AlgMat> maps);

/// Blockwise map between tensored complexes induced by a module map:
/// (F tensor phi)_n = diag(phi) on N_src^{rank_n}.
CxMap tensor_with_modmap(const FreeSeq& f, const ModMap& phi, std::shared_ptr<const Complex> src_cx,
                         std::shared_ptr<const Complex> dst_cx);

}  // namespace ezd
