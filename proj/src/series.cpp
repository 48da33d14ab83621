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

#include "ezd/series.hpp"

#include <cmath>
#include <sstream>

#include "ezd/error.hpp"

namespace ezd {

TruncSeries ts_make(std::vector<long long> coeffs)
{
    if (coeffs.empty()) fail(ErrKind::precondition, "series needs at least the constant coefficient");
    return TruncSeries{std::move(coeffs)};
}

TruncSeries ts_poly(const std::vector<long long>& coeffs, int trunc)
{
    std::vector<long long> c(trunc + 1, 0);
    for (size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= trunc; ++i) c[i] = coeffs[i];
    return TruncSeries{std::move(c)};
}

TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b)
{
    int t = std::min(a.trunc(), b.trunc());
    std::vector<long long> c(t + 1, 0);
    for (int i = 0; i <= t; ++i)
        for (int j = 0; i + j <= t; ++j) c[i + j] += a.c[i] * b.c[j];
    return TruncSeries{std::move(c)};
}

TruncSeries ts_add(const TruncSeries& a, const TruncSeries& b)
{
    int t = std::min(a.trunc(), b.trunc());
    std::vector<long long> c(t + 1, 0);
    for (int i = 0; i <= t; ++i) c[i] = a.c[i] + b.c[i];
    return TruncSeries{std::move(c)};
}

TruncSeries ts_sub(const TruncSeries& a, const TruncSeries& b)
{
    int t = std::min(a.trunc(), b.trunc());
    std::vector<long long> c(t + 1, 0);
    for (int i = 0; i <= t; ++i) c[i] = a.c[i] - b.c[i];
    return TruncSeries{std::move(c)};
}

TruncSeries ts_div_unit(const TruncSeries& p, const std::vector<long long>& u)
{
    if (u.empty() || (u[0] != 1 && u[0] != -1))
        fail(ErrKind::precondition, "series division needs a polynomial with constant term +-1");
    int t = p.trunc();
    std::vector<long long> q(t + 1, 0);
    for (int n = 0; n <= t; ++n) {
        long long acc = p.c[n];
        for (int k = 1; k < static_cast<int>(u.size()) && k <= n; ++k) acc -= u[k] * q[n - k];
        q[n] = acc / u[0];
    }
    return TruncSeries{std::move(q)};
}

bool ts_leq(const TruncSeries& a, const TruncSeries& b)
{
    int t = std::min(a.trunc(), b.trunc());
    for (int i = 0; i <= t; ++i)
        if (a.c[i] > b.c[i]) return false;
    return true;
}

bool ts_eq(const TruncSeries& a, const TruncSeries& b)
{
    int t = std::min(a.trunc(), b.trunc());
    for (int i = 0; i <= t; ++i)
        if (a.c[i] != b.c[i]) return false;
    return true;
}

TruncSeries ts_truncate(const TruncSeries& p, int trunc)
{
    std::vector<long long> c(p.c.begin(), p.c.begin() + std::min<size_t>(p.c.size(), trunc + 1));
    c.resize(trunc + 1, 0);
    return TruncSeries{std::move(c)};
}

TruncSeries ts_alternate(const TruncSeries& p)
{
    TruncSeries out(p);
    for (size_t i = 1; i < out.c.size(); i += 2) out.c[i] = -out.c[i];
    return out;
}

std::string poly_str(const std::vector<long long>& coeffs)
{
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        long long a = coeffs[i];
        if (a == 0) continue;
        if (first) {
            if (a < 0) os << "-";
        }
        else {
            os << (a < 0 ? " - " : " + ");
        }
        long long mag = a < 0 ? -a : a;
        if (mag != 1 || i == 0) os << mag;
        if (i == 1) os << "t";
        if (i > 1) os << "t^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string ts_str(const TruncSeries& p)
{
    std::ostringstream os;
    os << poly_str(p.c) << " + O(t^" << p.trunc() + 1 << ")";
    return os.str();
}

namespace {

std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b)
{
    std::vector<long long> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace

std::optional<std::string> rational_form(const TruncSeries& p, const std::vector<RationalCandidate>& extra)
{
    if (p.trunc() < 5) return std::nullopt;
    std::vector<RationalCandidate> cands;
    for (int a = 0; a <= 4; ++a) {
        for (int b = 0; b <= 2; ++b) {
            std::vector<long long> poly = {1};
            for (int i = 0; i < a; ++i) poly = poly_mul(poly, {1, -1});
            for (int i = 0; i < b; ++i) poly = poly_mul(poly, {1, 1});
            std::string label;
            if (a > 0) label += a == 1 ? "(1-t)" : "(1-t)^" + std::to_string(a);
            if (b > 0) label += b == 1 ? "(1+t)" : "(1+t)^" + std::to_string(b);
            if (label.empty()) label = "1";
            cands.push_back({label, poly});
        }
    }
    for (long long c = 2; c <= 3; ++c) {
        cands.push_back({"(1-" + std::to_string(c) + "t)", {1, -c}});
        cands.push_back({"(1-t)(1-" + std::to_string(c) + "t)", poly_mul({1, -1}, {1, -c})});
    }
    cands.insert(cands.end(), extra.begin(), extra.end());

    const int max_num_deg = std::min(4, p.trunc() - 2);
    for (const auto& cand : cands) {
        TruncSeries prod = ts_mul(p, ts_poly(cand.poly, p.trunc()));
        int last_nonzero = -1;
        for (int i = 0; i <= prod.trunc(); ++i)
            if (prod.c[i] != 0) last_nonzero = i;
        if (last_nonzero > max_num_deg) continue;
        if (cand.label == "1") continue;  // plain polynomial, nothing to factor
        std::vector<long long> num(prod.c.begin(), prod.c.begin() + last_nonzero + 1);
        if (num.empty()) num = {0};
        std::string num_s = poly_str(num);
        if (num.size() > 1) num_s = "(" + num_s + ")";
        return num_s + "/" + cand.label;
    }
    return std::nullopt;
}

GrowthDiagnostics growth_diagnostics(const TruncSeries& p)
{
    if (p.trunc() < 6) fail(ErrKind::precondition, "growth diagnostics need truncation at least 6");
    GrowthDiagnostics g;
    int n = p.trunc();
    int count = (n + 2) / 2;  // ceil((n+1)/2) tail coefficients
    g.window_lo = n + 1 - count;
    g.window_hi = n;

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int pts = 0;
    bool any_nonzero = false;
    for (int k = std::max(1, g.window_lo); k <= n; ++k) {
        long long a = p.c[k] < 0 ? -p.c[k] : p.c[k];
        if (a == 0) continue;
        any_nonzero = true;
        double x = std::log(static_cast<double>(k));
        double y = std::log(static_cast<double>(a));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++pts;
        double root = std::pow(static_cast<double>(a), 1.0 / k);
        if (root > g.curv_estimate) g.curv_estimate = root;
    }
    if (!any_nonzero) {
        g.cx_estimate = 0.0;
        return g;
    }
    if (pts < 2) {
        g.cx_estimate = 1.0;
        return g;
    }
    double denom = pts * sxx - sx * sx;
    double slope = denom == 0.0 ? 0.0 : (pts * sxy - sx * sy) / denom;
    g.cx_estimate = slope + 1.0;
    return g;
}

TruncSeries poincare_from_tor(const TorTable& t) { return ts_make(t.beta); }

bool check_poincare1(const TruncSeries& pq, const TruncSeries& pr)
{
    int t = std::min(pq.trunc(), pr.trunc());
    TruncSeries rhs = ts_div_unit(ts_mul(ts_truncate(pq, t), ts_poly({1, -1, 1}, t)), {1, -1});
    return ts_leq(ts_truncate(pr, t), rhs);
}

Poincare2Result check_poincare2(const TruncSeries& pq, const TruncSeries& pr, const std::map<int, Mat>& mu,
                                const std::map<int, Mat>& delta)
{
    Poincare2Result res;
    res.window = std::min(pq.trunc(), pr.trunc());
    TruncSeries rhs = ts_div_unit(ts_truncate(pr, res.window), {1, -1});
    TruncSeries lhs = ts_truncate(pq, res.window);
    res.holds = ts_leq(lhs, rhs);
    res.equality = ts_eq(lhs, rhs);

    res.maps_zero = true;
    for (int n = 2; n <= res.window + 1; ++n) {
        auto mi = mu.find(n);
        auto di = delta.find(n);
        if (mi == mu.end() || di == delta.end())
            fail(ErrKind::precondition, "check_poincare2 needs mu and delta through degree window+1");
        if (!mi->second.is_zero() || !di->second.is_zero()) res.maps_zero = false;
    }
    res.iff_consistent = (res.equality == res.maps_zero);
    return res;
}

LengthBookkeepingReport check_length_bookkeeping(const std::vector<long long>& hw, const TruncSeries& pq,
                                                 const TruncSeries& pr, const std::map<int, Mat>& mu,
                                                 const std::map<int, Mat>& delta, int through)
{
    LengthBookkeepingReport rep;
    rep.through = through;
    auto bq = [&](int i) { return pq.at(i); };
    auto br = [&](int i) { return pr.at(i); };
    for (int m = 0; m <= through; ++m) {
        long long h = hw[m];
        if (!(h <= bq(m) + bq(m - 3))) rep.bounds_ok = false;
        if (!(h >= bq(m) - bq(m - 2))) rep.bounds_ok = false;
        if (!(h <= br(m) + br(m - 1))) rep.bounds_ok = false;
        if (!(h >= br(m) - br(m - 2))) rep.bounds_ok = false;
        if (m >= 2 && m + 1 <= through + 1) {
            bool mu_van = mu.at(m).is_zero() && mu.at(m + 1).is_zero();
            bool eq_q = (h == bq(m) - bq(m - 2));
            if (mu_van != eq_q) rep.equalities_ok = false;
            bool delta_van = delta.at(m).is_zero() && delta.at(m + 1).is_zero();
            bool eq_r = (h == br(m) + br(m - 1));
            if (delta_van != eq_r) rep.equalities_ok = false;
        }
    }
    return rep;
}

SquareZeroReport check_square_zero_formula(const FDModule& m, const FDModule& n, int through)
{
    SquareZeroReport rep;
    rep.through = through;
    if (m.alg != n.alg) fail(ErrKind::precondition, "modules live over different rings");
    const LocalAlgebra& r = *m.alg;
    FDModule tens = tensor_over(m, n);
    rep.applicable = (r.nilpotency <= 2) && (radical_submodule(tens).dim() == 0);
    if (!rep.applicable) return rep;

    FreeResolution fr = minimal_free_resolution(m, through + 1);
    TorTable t = tor_table(fr.fseq, n, through);
    TruncSeries lhs = poincare_from_tor(t);

    TruncSeries hm = ts_alternate(ts_poly(hilbert_coeffs_module(m), through));
    TruncSeries hn = ts_alternate(ts_poly(hilbert_coeffs_module(n), through));
    std::vector<long long> hr = hilbert_coeffs_ring(r);
    for (size_t i = 1; i < hr.size(); i += 2) hr[i] = -hr[i];
    TruncSeries rhs = ts_div_unit(ts_mul(hm, hn), hr);
    rep.series_equal = ts_eq(lhs, rhs);

    ModMap nu = radical_inclusion(n);
    auto src = std::make_shared<Complex>(fr.fseq.tensor_module(nu.src));
    auto dst = std::make_shared<Complex>(fr.fseq.tensor_module(nu.dst));
    CxMap ind = tensor_with_modmap(fr.fseq, nu, src, dst);
    rep.tor_nu_zero = true;
    for (int i = 0; i <= through; ++i) {
        HomologySpace hs = homology(*src, i), hd = homology(*dst, i);
        Mat im(hd.dim(), hs.dim());
        for (int j = 0; j < hs.dim(); ++j) {
            Vec cls = hd.class_coords(ind.comp(i).apply(hs.reps[j]));
            for (int rI = 0; rI < hd.dim(); ++rI) im.at(rI, j) = cls[rI];
        }
        if (!im.is_zero()) rep.tor_nu_zero = false;
    }
    return rep;
}

KoszulReport check_koszul_formula(const FDModule& m, int through)
{
    KoszulReport rep;
    rep.through = through;
    const LocalAlgebra& r = *m.alg;
    rep.applicable = (r.nilpotency <= 2);
    if (!rep.applicable) return rep;
    FreeResolution fr = minimal_free_resolution(m, through + 1);
    TorTable t = tor_table(fr.fseq, residue_field_module(m.alg), through);
    TruncSeries lhs = poincare_from_tor(t);
    TruncSeries hm = ts_alternate(ts_poly(hilbert_coeffs_module(m), through));
    std::vector<long long> hr = hilbert_coeffs_ring(r);
    for (size_t i = 1; i < hr.size(); i += 2) hr[i] = -hr[i];
    rep.holds = ts_eq(lhs, ts_div_unit(hm, hr));
    return rep;
}

ShortRingSeriesReport check_short_ring_series(const Pipeline& pl, const FDModule& n, int through)
{
    ShortRingSeriesReport rep;
    rep.through = through;
    FDModule tens = tensor_over(pl.u.mod, n);
    rep.applicable = (pl.q->nilpotency <= 3) && (radical_submodule(tens).dim() == 0) && annihilates(pl.g, n);
    if (!rep.applicable) return rep;

    // Proof intermediate: H_Q(t) = (1 + t) H_R(t).
    std::vector<long long> hq = hilbert_coeffs_ring(*pl.q);
    std::vector<long long> hrr = hilbert_coeffs_ring(*pl.to_r.quotient);
    {
        std::vector<long long> conv(hrr.size() + 1, 0);
        for (size_t i = 0; i < hrr.size(); ++i) {
            conv[i] += hrr[i];
            conv[i + 1] += hrr[i];
        }
        while (!conv.empty() && conv.back() == 0) conv.pop_back();
        std::vector<long long> hq2 = hq;
        while (!hq2.empty() && hq2.back() == 0) hq2.pop_back();
        rep.hq_identity = (conv == hq2);
    }

    TorTable t = tor_q(pl, n, through);
    TruncSeries lhs = poincare_from_tor(t);
    TruncSeries hm = ts_alternate(ts_poly(hilbert_coeffs_module(pl.u.mod), through));
    TruncSeries hn = ts_alternate(ts_poly(hilbert_coeffs_module(n), through));
    std::vector<long long> hqa = hq;
    for (size_t i = 1; i < hqa.size(); i += 2) hqa[i] = -hqa[i];
    rep.holds = ts_eq(lhs, ts_div_unit(ts_mul(hm, hn), hqa));
    return rep;
}

}  // namespace ezd
