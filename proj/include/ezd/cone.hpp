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

#include "ezd/tate.hpp"

namespace ezd {

/// The Eisenbud operator of the lifting (V, d^V): tau_tilde[n]: V_{n+1} ->
/// V_{n-1} over Q is minus the y-component of the stored differential, and
/// satisfies d^V d^V = f tau_tilde on the nose. tau[n] is its reduction over
/// S = Q / ((f) + ann(f)), where it becomes a chain map.
struct EisenbudOp {
    QuotientData to_s;
    std::map<int, AlgMat> tau_tilde;  // keys 1..cap-1, over Q
    std::map<int, AlgMat> tau;        // same keys, over S
};

/// Reads tau off the decomposition and asserts the defining identity
/// d^V d^V = f tau_tilde entrywise (failure is an internal error).
EisenbudOp compute_tau(const SemifreeResolution& u, const LiftedComplex& v, const QuotientData& to_s);

/// Commutator (d^V (x) S) tau - tau (d^V (x) S) vanishes in every degree.
bool tau_is_chain_map(const LiftedComplex& v, const EisenbudOp& op, int cap);

/// Mapping cone W of tau: W_n = (V_{n-1} (+) V_n) (x) S with differential
/// [[-d^V_{n-1}, -tau_{n-1}], [0, d^V_n]], a complex of free S-modules.
struct ConeW {
    QuotientData to_s;
    std::vector<int> vranks;
    FreeSeq w;  // over S, degrees 0..cap
};

ConeW build_cone(const LiftedComplex& v, const EisenbudOp& op, int cap);

/// omega_n: U_n (x) S -> W_n sending a + y x + l to (x, a). A surjective chain
/// map with kernel L (x) S.
std::vector<AlgMat> build_omega(const SemifreeResolution& u, const ConeW& cone);

/// Multiplication by y_2 as maps U_{n-2} -> U_n over Q (the degree-2 shift of
/// the dg-module structure); injective with image L after tensoring with S.
std::map<int, AlgMat> y2_action(const SemifreeResolution& u);

/// Everything needed to verify one (Q, f, g, M) instance at a fixed cap.
struct Pipeline {
    AlgebraPtr q;
    Vec f, g;
    QuotientData to_r, to_s;
    TateAlgebra tate;
    SemifreeResolution u;
    LiftedComplex v;
    EisenbudOp op;
    ConeW cone;
    std::vector<AlgMat> omega;
    int cap = 0;
};

/// Gated on is_exact_pair (via build_tate) and f M = 0.
Pipeline build_pipeline(AlgebraPtr q, const Vec& f, const Vec& g, const FDModule& m, int cap,
                        std::uint64_t seed = 0);

/// Tor over Q via H(U (x) N) and over R via H((V (x) R) (x) N).
TorTable tor_q(const Pipeline& pl, const FDModule& n, int through);
TorTable tor_r(const Pipeline& pl, const FDModule& n, int through);

/// The two long exact sequences of the mapping cone, materialized with their
/// named maps, plus the psi phi = canonical-map comparison.
///   les1:  ... -> Tor^R_{n-1} -> H_n(W x N) -psi_n-> Tor^R_n -delta_n-> Tor^R_{n-2} -> ...
///   les2:  ... -> H_{n+1}(W x N) -mu_{n+1}-> Tor^Q_{n-2} -> Tor^Q_n -phi_n-> H_n(W x N) -> ...
struct ConeLesReport {
    int through = 0;
    bool ses1_ok = false, ses2_ok = false;
    LongExactSeq les1, les2;
    std::vector<ExactnessEntry> defects1, defects2;
    bool exact1 = true, exact2 = true;
    std::map<int, Mat> psi, delta, phi, mu;
    bool delta_matches_tau = false;      // connecting = -H(tau (x) N)
    bool psiphi_matches_canonical = false;
    std::vector<long long> hw_lengths;   // lengths of H_n(W x N), 0..through

    bool all_ok() const
    {
        return ses1_ok && ses2_ok && exact1 && exact2 && delta_matches_tau && psiphi_matches_canonical;
    }
};

ConeLesReport cone_les_verify(const Pipeline& pl, const FDModule& n, int through);

/// Short exact sequence checks of eq-style data on the S-free level:
/// 0 -> Sigma V x S -> W -> V x S -> 0 (the cone sequence) and
/// 0 -> Sigma^2 U x S -> U x S -> W -> 0 (multiplication by y_2 then omega).
struct ConeSesReport {
    bool w_is_complex = false;
    bool short_seq_exact = false;   // cone sequence, degreewise
    bool omega_chain_map = false;
    bool omega_surjective = false;
    bool omega_kernel_is_l = false;  // with the exact dimension count per degree
    bool y2_chain_map = false;
    bool y2_seq_exact = false;       // injective, image = ker(omega), omega onto
    bool all_ok() const
    {
        return w_is_complex && short_seq_exact && omega_chain_map && omega_surjective && omega_kernel_is_l &&
               y2_chain_map && y2_seq_exact;
    }
};

ConeSesReport verify_cone_sequences(const Pipeline& pl);

/// Corollary-level check: when f is outside m^2 and m N = 0, every mu_n and
/// delta_n materialized in the window is the zero matrix.
struct MuDeltaReport {
    bool applicable = false;  // f not in m^2 and m N = 0
    bool mu_zero = false, delta_zero = false;
    int through = 0;
};

MuDeltaReport mu_delta_vanishing_check(const Pipeline& pl, const FDModule& n, int through);

/// Proposition-level check around a vanishing window of Tor^R:
/// Tor^R_i(M,N) = 0 for lo <= i <= hi implies Tor^Q periodicity and a
/// four-term exact segment at the bottom.
struct TorPeriodicityReport {
    bool hypothesis_ok = false;  // the vanishing window holds (hi - lo >= 1)
    int win_lo = 0, win_hi = 0;
    bool isos_ok = false;         // Tor^Q_{i-1} = Tor^Q_{i+1} via the y_2 map, lo <= i <= hi-2
    bool four_term_exact = true;  // exactness of the segment at the window bottom
    bool bottom_identified = true;  // H_lo+? identification with Tor^R_{lo-1} by dimension
    bool m1_case_ok = true;         // when lo = 1: dim Tor^Q_i = dim(M x N) for 1 <= i <= hi-1
};

TorPeriodicityReport tor_periodicity_verify(const Pipeline& pl, const FDModule& n, int lo, int hi, int through);

/// Proposition-level check: f outside m^2, m^2 N = 0, and Tor^R(M, nu_N) = 0
/// in the window force Tor^Q(M, nu_N) = 0 and P^Q = P^R / (1-t).
struct NuVanishingReport {
    bool applicable = false;      // f not in m^2, m^2 N = 0, g N = 0
    bool tor_r_nu_zero = false;   // the hypothesis, checked
    bool tor_q_nu_zero = false;
    bool series_equal = false;
    int through = 0;
};

NuVanishingReport nu_vanishing_verify(const Pipeline& pl, const FDModule& n, int through);

/// Comparison map between two resolutions of the same module, lifted through
/// the induced R-resolutions by deterministic back-substitution.
struct ComparisonMap {
    std::map<int, AlgMat> h;  // over R: V1_n (x) R -> V2_n (x) R
    bool chain_map = false;
};

ComparisonMap lift_identity_map(const Pipeline& p1, const Pipeline& p2, int through);

/// Homology-level shadow of lifting-independence and naturality: the lifted
/// identity intertwines the two operators on homology after tensoring, and
/// conjugates delta^1 into delta^2.
struct NaturalityReport {
    bool h_chain_map = false;
    bool tau_commutes = false;       // H(tau2 x N) H(h x N) = H(h x N) H(tau1 x N)
    bool delta_conjugates = false;   // H(h x N) delta1 = delta2 H(h x N)
    int through = 0;
};

NaturalityReport verify_naturality(const Pipeline& p1, const Pipeline& p2, const FDModule& n, int through);

}  // namespace ezd
