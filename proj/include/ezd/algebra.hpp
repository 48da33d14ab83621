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

#include <memory>
#include <string>
#include <vector>

#include "ezd/linalg.hpp"

namespace ezd {

/// A finite-dimensional commutative local Q-algebra given by structure
/// constants over an adapted basis: b_0 = 1 and b_1..b_{d-1} span the maximal
/// ideal m. Residue field is always the rationals. Immutable once built by
/// make_algebra (which validates every axiom and precomputes the chain of
/// powers of m).
///
/// Elements are plain coefficient vectors (Vec) of length dim.
struct LocalAlgebra {
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<Vec> table;  // table[i*dim + j] = coordinates of b_i * b_j
    std::vector<Subspace> mpow;  // mpow[k] = m^k; mpow[0] = full, mpow[nilpotency] = 0
    int nilpotency = 0;          // least N with m^N = 0

    // Set only for monomial-quotient rings; lets expression parsing resolve
    // variables and products of variables.
    std::vector<std::string> variables;
    std::vector<std::vector<int>> exponents;  // exponent vector of each basis monomial

    const Vec& basis_product(int i, int j) const { return table[i * dim + j]; }

    Vec unit() const { return vec_unit(dim, 0); }
    Vec zero() const { return vec_zero(dim); }
    Vec elem(int i) const { return vec_unit(dim, i); }

    Vec mul(const Vec& a, const Vec& b) const;

    /// Matrix of multiplication by f (column j = coordinates of f * b_j).
    Mat mult_matrix(const Vec& f) const;

    const Subspace& maximal_ideal() const { return mpow[1]; }
    bool in_mpow(const Vec& v, int k) const;

    std::string elem_str(const Vec& v) const;
};

using AlgebraPtr = std::shared_ptr<const LocalAlgebra>;

/// Validates all LocalAlgebra invariants (unit, commutativity, associativity
/// on every basis triple, the non-unit span being a nilpotent ideal) and
/// returns the least N with m^N = 0. Errors name the failing triple.
int validate_algebra(LocalAlgebra& alg);

/// Builds and validates an algebra from structure constants. The basis must
/// already be adapted (index 0 acts as the unit).
AlgebraPtr make_algebra(std::vector<std::string> labels, std::vector<Vec> table);

/// Ingestion entry point: locates the unit element and, when the given basis
/// is not adapted, re-bases onto (unit, basis of the radical) before
/// validating. The radical is computed as the kernel of the trace form, which
/// identifies the maximal ideal over a characteristic-zero field.
AlgebraPtr make_algebra_adapted(std::vector<std::string> labels, std::vector<Vec> table);

/// Q[x_1..x_k] / (monomial relations). Requires each variable to have a pure
/// power among the relations (else the quotient is not Artinian). Basis is the
/// set of standard monomials, ordered by degree then by exponent vector,
/// earlier variables first.
AlgebraPtr from_monomial_quotient(const std::vector<std::string>& vars,
                                  const std::vector<std::string>& relations);

/// Parses a linear combination of monomials/labels, e.g. "x + 2*x*y" or
/// "1/2 x^2 - y". On monomial-quotient rings variables may be combined freely
/// (products reduce through the relations); on structure-constant rings the
/// identifiers must be basis labels. Concatenated single-letter monomials
/// ("xy") are accepted when all variables are single letters.
Vec parse_element(const LocalAlgebra& alg, const std::string& expr);

/// ann_Q(f) = { z : f z = 0 }, computed as the kernel of multiplication by f.
/// Always an ideal.
Subspace annihilator(const LocalAlgebra& alg, const Vec& f);

/// The principal ideal (f) = f Q, as a subspace.
Subspace principal_ideal(const LocalAlgebra& alg, const Vec& f);

/// Ideal generated by a list of elements.
Subspace ideal_generated_by(const LocalAlgebra& alg, const std::vector<Vec>& gens);

bool is_ideal(const LocalAlgebra& alg, const Subspace& s);

/// Certificate for the exact-pair test: f, g nonzero, ann(f) = (g) and
/// ann(g) = (f), with the four subspace comparisons recorded.
struct ExactPairCert {
    bool f_nonzero = false, g_nonzero = false;
    bool ann_f_contains_g = false, g_contains_ann_f = false;
    bool ann_g_contains_f = false, f_contains_ann_g = false;
    int dim_ann_f = 0, dim_ann_g = 0, dim_f = 0, dim_g = 0;
    bool ok() const
    {
        return f_nonzero && g_nonzero && ann_f_contains_g && g_contains_ann_f &&
               ann_g_contains_f && f_contains_ann_g;
    }
};

ExactPairCert is_exact_pair(const LocalAlgebra& alg, const Vec& f, const Vec& g);

/// Quotient algebra Q/I with the projection (parent coords -> quotient
/// coords) and a section picking coset representatives; projection ∘ section
/// is the identity and the projection is an algebra map. The quotient basis is
/// the set of parent basis vectors that survive modulo I (unit first), so the
/// quotient is adapted automatically.
struct QuotientData {
    AlgebraPtr parent;
    AlgebraPtr quotient;
    Subspace ideal;
    Mat projection;  // quotient_dim x parent_dim
    Mat section;     // parent_dim x quotient_dim

    Vec project(const Vec& v) const { return projection.apply(v); }
    Vec lift(const Vec& v) const { return section.apply(v); }
};

QuotientData quotient_by(AlgebraPtr alg, const Subspace& ideal);

/// Composition of quotients Q -> Q/I -> (Q/I)/J as a single QuotientData from
/// the outer parent.
QuotientData compose(const QuotientData& first, const QuotientData& second);

/// Coefficients of the Hilbert series sum dim(m^n / m^{n+1}) t^n; a polynomial
/// since m is nilpotent.
std::vector<long long> hilbert_coeffs_ring(const LocalAlgebra& alg);

/// f is a Conca generator: f^2 = 0 and f m = m^2. Requires a short ring
/// (m^3 = 0).
bool is_conca_generator(const LocalAlgebra& alg, const Vec& f);

/// Short-ring Hilbert restrictions when an exact pair exists:
/// H_Q = 1 + e t + (e-1) t^2, f m = m^2 = g m, f and g outside m^2.
struct ShortRingHilbertReport {
    long long e = 0;
    bool hilbert_ok = false;
    bool fm_eq_m2 = false, gm_eq_m2 = false;
    bool f_not_in_m2 = false, g_not_in_m2 = false;
    bool all_ok() const { return hilbert_ok && fm_eq_m2 && gm_eq_m2 && f_not_in_m2 && g_not_in_m2; }
};

ShortRingHilbertReport check_short_ring_hilbert(const LocalAlgebra& alg, const Vec& f, const Vec& g);

/// On rings with H_Q = 1 + e t + (e-1) t^2: (f,f) is an exact pair iff f is a
/// Conca generator. Returns the exact-pair verdict after asserting the
/// equivalence (a failure is a theorem violation).
bool check_conca_equivalence(const LocalAlgebra& alg, const Vec& f);

/// Subspace f * (subspace), e.g. f m.
Subspace elem_times_subspace(const LocalAlgebra& alg, const Vec& f, const Subspace& s);

}  // namespace ezd
