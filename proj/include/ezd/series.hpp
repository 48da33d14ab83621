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

#include <optional>
#include <string>

#include "ezd/cone.hpp"

namespace ezd {

/// Integer-coefficient power series truncated at a degree. All arithmetic is
/// exact; comparisons are taken on the common truncation.
struct TruncSeries {
    std::vector<long long> c;
    int trunc() const { return static_cast<int>(c.size()) - 1; }
    long long at(int n) const { return (n >= 0 && n <= trunc()) ? c[n] : 0; }
};

TruncSeries ts_make(std::vector<long long> coeffs);
/// Polynomial padded (or cut) to the given truncation.
TruncSeries ts_poly(const std::vector<long long>& coeffs, int trunc);
TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries ts_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries ts_sub(const TruncSeries& a, const TruncSeries& b);
/// p / u for a polynomial u with constant term +-1 (exact series inversion).
TruncSeries ts_div_unit(const TruncSeries& p, const std::vector<long long>& u);
/// Coefficientwise <= on the common truncation.
bool ts_leq(const TruncSeries& a, const TruncSeries& b);
bool ts_eq(const TruncSeries& a, const TruncSeries& b);
TruncSeries ts_truncate(const TruncSeries& p, int trunc);
/// p(-t).
TruncSeries ts_alternate(const TruncSeries& p);
std::string ts_str(const TruncSeries& p);
std::string poly_str(const std::vector<long long>& coeffs);

/// Exact-division match of the series against a catalog of small denominators
/// ((1-t)^a (1+t)^b plus caller extras); returns a printable rational form
/// like "1/(1-t)^2" when the product with some denominator is a polynomial of
/// small degree, well inside the truncation.
struct RationalCandidate {
    std::string label;
    std::vector<long long> poly;
};
std::optional<std::string> rational_form(const TruncSeries& p,
                                         const std::vector<RationalCandidate>& extra = {});

/// Heuristic growth estimates over the tail half-window. These are explicitly
/// diagnostics, never verdicts: truncations cannot certify asymptotics.
struct GrowthDiagnostics {
    double cx_estimate = 0.0;    // least-squares slope of log|a_n| vs log n, plus one
    double curv_estimate = 0.0;  // max |a_n|^{1/n} over the tail
    int window_lo = 0, window_hi = 0;
};
GrowthDiagnostics growth_diagnostics(const TruncSeries& p);

/// Poincare series from a Tor table.
TruncSeries poincare_from_tor(const TorTable& t);

/// Coefficientwise inequality P^R <= (1 - t + t^2) P^Q / (1 - t).
bool check_poincare1(const TruncSeries& pq, const TruncSeries& pr);

/// P^Q <= P^R / (1 - t), the equality flag over the window, and the
/// cross-validation of that flag against the materialized connecting maps:
/// equality through degree T holds iff mu_n = delta_n = 0 for 2 <= n <= T+1.
struct Poincare2Result {
    bool holds = false;
    bool equality = false;
    bool maps_zero = false;
    bool iff_consistent = false;
    int window = 0;
};
Poincare2Result check_poincare2(const TruncSeries& pq, const TruncSeries& pr, const std::map<int, Mat>& mu,
                                const std::map<int, Mat>& delta);

/// Degreewise length bounds on H(W x N) from the two sequences, with the
/// equality conditions tied to the vanishing of mu and delta.
struct LengthBookkeepingReport {
    bool bounds_ok = true;       // all four inequalities, every degree
    bool equalities_ok = true;   // both iff conditions, every degree
    int through = 0;
};
LengthBookkeepingReport check_length_bookkeeping(const std::vector<long long>& hw, const TruncSeries& pq,
                                                 const TruncSeries& pr, const std::map<int, Mat>& mu,
                                                 const std::map<int, Mat>& delta, int through);

/// Over a ring with m^2 = 0 and m (M x N) = 0:
/// P^R_{M,N} = H_M(-t) H_N(-t) / H_R(-t) and Tor^R(M, nu_N) = 0.
struct SquareZeroReport {
    bool applicable = false;
    bool series_equal = false;
    bool tor_nu_zero = false;
    int through = 0;
    bool ok() const { return applicable && series_equal && tor_nu_zero; }
};
SquareZeroReport check_square_zero_formula(const FDModule& m, const FDModule& n, int through);

/// P^R_M = H_M(-t) / H_R(-t) under the m^2 = 0 Koszulness certificate.
struct KoszulReport {
    bool applicable = false;  // m^2 = 0; outside the certificate nothing is decided
    bool holds = false;
    int through = 0;
};
KoszulReport check_koszul_formula(const FDModule& m, int through);

/// Over a short ring with an exact pair, m (M x N) = 0 and g N = 0:
/// P^Q_{M,N} = H_M(-t) H_N(-t) / H_Q(-t), plus the proof's intermediate
/// identity H_Q(t) = (1 + t) H_R(t).
struct ShortRingSeriesReport {
    bool applicable = false;
    bool hq_identity = false;
    bool holds = false;
    int through = 0;
    bool ok() const { return applicable && hq_identity && holds; }
};
ShortRingSeriesReport check_short_ring_series(const Pipeline& pl, const FDModule& n, int through);

}  // namespace ezd
