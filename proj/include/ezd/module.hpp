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

#include "ezd/algebra.hpp"

namespace ezd {

/// A finite-dimensional module over a LocalAlgebra, realized as one action
/// matrix per algebra basis element. Lengths equal Q-dimensions because the
/// residue field is the rationals.
struct FDModule {
    AlgebraPtr alg;
    int dim = 0;
    std::vector<Mat> action;  // action[i] = matrix of b_i; action[0] = identity

    Mat act(const Vec& a) const;  // matrix of an arbitrary element
    Vec apply(const Vec& a, const Vec& v) const { return act(a).apply(v); }
};

/// Validates the module axioms: identity for b_0 and compatibility with the
/// structure constants on every basis pair.
FDModule make_module(AlgebraPtr alg, std::vector<Mat> action);

FDModule residue_field_module(AlgebraPtr alg);
FDModule free_module(AlgebraPtr alg, int rank);
FDModule zero_module(AlgebraPtr alg);

/// A module over the quotient becomes a module over the parent through the
/// projection.
FDModule restrict_scalars(const FDModule& m, const QuotientData& q);

/// The reverse direction: a parent module killed by the ideal is a module
/// over the quotient (errors when the ideal does not act as zero).
FDModule corestrict(const FDModule& m, const QuotientData& q);

/// M tensor N over the common algebra: the full rational tensor product
/// modulo the bilinearity relations (a m) x n - m x (a n), with the induced
/// action. Index convention: (i, j) -> i * dim(N) + j.
FDModule tensor_over(const FDModule& m, const FDModule& n);

/// Linear map commuting with every action matrix.
struct ModMap {
    FDModule src, dst;
    Mat map;
};

ModMap make_modmap(FDModule src, FDModule dst, Mat map);

std::vector<Vec> minimal_generators(const FDModule& m);

/// m M as a subspace of M.
Subspace radical_submodule(const FDModule& m);

/// mN -> N inclusion, with the submodule realized on its own basis.
ModMap radical_inclusion(const FDModule& m);

/// N -> N/mN projection.
ModMap coinvariants_projection(const FDModule& m);

/// Quotient of M by a subspace closed under the action.
struct QuotientModule {
    FDModule mod;
    Mat projection;  // dim(mod) x dim(M)
};
QuotientModule quotient_module(const FDModule& m, const Subspace& submodule);

/// Smallest submodule containing the given vectors.
Subspace submodule_generated_by(const FDModule& m, const std::vector<Vec>& gens);

int length(const FDModule& m);

bool annihilates(const Vec& f, const FDModule& m);

/// Subspace f·M.
Subspace elem_times_module(const Vec& f, const FDModule& m);

std::vector<long long> hilbert_coeffs_module(const FDModule& m);

}  // namespace ezd
