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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ezd/resolution.hpp"
#include "test_support.hpp"

using namespace ezd;
using namespace ezdtest;

namespace {

// one shared copy of the reference ring so pipelines can be compared
const AlgebraPtr& shared_ring()
{
    static AlgebraPtr q = ring_xy();
    return q;
}

Pipeline reference_pipeline(const char* module_name, int cap, std::uint64_t seed = 0)
{
    AlgebraPtr q = shared_ring();
    Vec x = parse_element(*q, "x");
    QuotientData r = quotient_by(q, principal_ideal(*q, x));
    FDModule m = residue_field_module(q);
    if (std::string(module_name) == "R") m = restrict_scalars(free_module(r.quotient, 1), r);
    if (std::string(module_name) == "R/(y)") {
        Vec ybar = r.project(parse_element(*q, "y"));
        QuotientData r2 = quotient_by(r.quotient, ideal_generated_by(*r.quotient, {ybar}));
        m = restrict_scalars(free_module(r2.quotient, 1), compose(r, r2));
    }
    return build_pipeline(q, x, x, m, cap, seed);
}

}  // namespace

TEST_CASE("tau vanishes when V is concentrated in degree zero")
{
    Pipeline pl = reference_pipeline("R", 6);
    for (const auto& [n, t] : pl.op.tau_tilde) CHECK(t.is_zero());
    // and the cone is the direct sum with diagonal differential
    CHECK(pl.cone.w.is_complex());
    for (int n = 0; n <= 6; ++n)
        CHECK(pl.cone.w.rank(n) == (n >= 1 ? pl.v.ranks[n - 1] : 0) + pl.v.ranks[n]);
}

TEST_CASE("tau is a chain map over S and satisfies its defining identity")
{
    Pipeline pl = reference_pipeline("k", 8);
    CHECK(tau_is_chain_map(pl.v, pl.op, pl.cap));
    // f tau = d^V d^V entrywise (recheck on top of the construction assert)
    for (int n = 1; n + 1 <= pl.cap; ++n) {
        AlgMat square = pl.v.vseq.map(n).mul(pl.v.vseq.map(n + 1));
        CHECK(square == pl.op.tau_tilde.at(n).scale_elem(pl.f));
    }
}

TEST_CASE("the cone differential realizes the displayed block formula")
{
    Pipeline pl = reference_pipeline("k", 6);
    // probe: d^W(x, a) = (a_{n-2} - x_{n-2}, a_{n-1}) on generators, i.e. the
    // blocks are exactly [-d^V, -tau; 0, d^V]
    FreeSeq vs = pl.v.vseq.base_change(pl.to_s);
    for (int n = 2; n <= 6; ++n) {
        const AlgMat& d = pl.cone.w.map(n);
        auto vr = [&](int k) { return (k >= 0) ? pl.v.ranks[k] : 0; };
        AlgMat tl = AlgMat::zero(pl.to_s.quotient, vr(n - 2), vr(n - 1));
        for (int i = 0; i < vr(n - 2); ++i)
            for (int j = 0; j < vr(n - 1); ++j) tl.at(i, j) = d.at(i, j);
        CHECK(tl == vs.map(n - 1).neg());
        AlgMat tr = AlgMat::zero(pl.to_s.quotient, vr(n - 2), vr(n));
        for (int i = 0; i < vr(n - 2); ++i)
            for (int j = 0; j < vr(n); ++j) tr.at(i, j) = d.at(i, vr(n - 1) + j);
        CHECK(tr == pl.op.tau.at(n - 1).neg());
    }
}

TEST_CASE("cone sequences: short ses, omega, y2")
{
    Pipeline pl = reference_pipeline("k", 8);
    ConeSesReport rep = verify_cone_sequences(pl);
    CHECK(rep.w_is_complex);
    CHECK(rep.short_seq_exact);
    CHECK(rep.omega_chain_map);
    CHECK(rep.omega_surjective);
    CHECK(rep.omega_kernel_is_l);
    CHECK(rep.y2_chain_map);
    CHECK(rep.y2_seq_exact);

    // omega is an isomorphism in degrees 0 and 1 (L vanishes there)
    for (int n : {0, 1}) {
        Mat om = pl.omega[n].realize();
        CHECK(rank(om) == om.rows());
        CHECK(om.rows() == om.cols());
    }
    // kernel dimension count per degree: sum over weights >= 2
    const int ds = pl.to_s.quotient->dim;
    for (int n = 2; n <= 8; ++n) {
        int expect = 0;
        for (int i = 2; i <= n; ++i) expect += pl.u.vranks[n - i] * ds;
        CHECK(kernel_basis(pl.omega[n].realize()).dim() == expect);
    }
}

TEST_CASE("Tor tables over Q and R with independent oracles")
{
    Pipeline pl = reference_pipeline("k", 8);
    FDModule k = residue_field_module(pl.q);

    TorTable tq = tor_q(pl, k, 6);
    // oracle: minimal free resolution of k over Q, built by the generic
    // killing-syzygies routine (an independent code path)
    FreeResolution minres = minimal_free_resolution(k, 7);
    TorTable oracle = tor_table(minres.fseq, k, 6);
    for (int n = 0; n <= 6; ++n) {
        CHECK(tq.beta[n] == n + 1);
        CHECK(oracle.beta[n] == n + 1);
        CHECK(minres.fseq.rank(n) == n + 1);
    }

    TorTable tr = tor_r(pl, k, 6);
    for (int n = 0; n <= 6; ++n) CHECK(tr.beta[n] == 1);

    // Tor_0 = M (x) N
    FDModule tens = tensor_over(pl.u.mod, k);
    CHECK(tq.beta[0] == tens.dim);
}

TEST_CASE("betti numbers of R over Q are all one")
{
    Pipeline pl = reference_pipeline("R", 8);
    FDModule k = residue_field_module(pl.q);
    TorTable tq = tor_q(pl, k, 6);
    for (int n = 0; n <= 6; ++n) CHECK(tq.beta[n] == 1);
}

TEST_CASE("both long exact sequences exact, delta from tau, psi phi canonical")
{
    for (const char* name : {"k", "R", "R/(y)"}) {
        Pipeline pl = reference_pipeline(name, 8);
        FDModule k = residue_field_module(pl.q);
        ConeLesReport rep = cone_les_verify(pl, k, 6);
        CHECK(rep.ses1_ok);
        CHECK(rep.ses2_ok);
        CHECK(rep.exact1);
        CHECK(rep.exact2);
        CHECK(rep.delta_matches_tau);
        CHECK(rep.psiphi_matches_canonical);
    }
}

TEST_CASE("the sequences with N = S exercise a nontrivial coefficient module")
{
    Pipeline pl = reference_pipeline("k", 8);
    FDModule s = restrict_scalars(free_module(pl.to_s.quotient, 1), pl.to_s);
    ConeLesReport rep = cone_les_verify(pl, s, 6);
    CHECK(rep.all_ok());
}

TEST_CASE("cone_les_verify rejects modules with g N != 0")
{
    AlgebraPtr q = ring_x4();
    Vec f = parse_element(*q, "x^3");
    Vec g = parse_element(*q, "x");
    QuotientData r = quotient_by(q, principal_ideal(*q, f));
    FDModule m = residue_field_module(q);
    Pipeline pl = build_pipeline(q, f, g, m, 6);
    FDModule n = restrict_scalars(free_module(r.quotient, 1), r);  // g N != 0
    CHECK_FALSE(annihilates(g, n));
    CHECK_THROWS_AS(cone_les_verify(pl, n, 4), Error);
}

TEST_CASE("the sequences over k[x]/(x^4) with the non-self-paired pair (x, x^3)")
{
    AlgebraPtr q = ring_x4();
    Vec f = parse_element(*q, "x");
    Vec g = parse_element(*q, "x^3");
    FDModule k = residue_field_module(q);
    Pipeline pl = build_pipeline(q, f, g, k, 7);
    ConeLesReport rep = cone_les_verify(pl, k, 5);
    CHECK(rep.all_ok());
    TorTable tq = tor_q(pl, k, 5);
    for (int n = 0; n <= 5; ++n) CHECK(tq.beta[n] == 1);
}

TEST_CASE("connec: f outside m^2 with m N = 0 kills mu and delta")
{
    Pipeline pl = reference_pipeline("k", 8);
    FDModule k = residue_field_module(pl.q);
    MuDeltaReport rep = mu_delta_vanishing_check(pl, k, 6);
    CHECK(rep.applicable);
    CHECK(rep.mu_zero);
    CHECK(rep.delta_zero);

    // direct sums keep the conclusion
    MuDeltaReport rep2 = mu_delta_vanishing_check(pl, k_power(pl.q, 2), 6);
    CHECK(rep2.applicable);
    CHECK(rep2.mu_zero);
    CHECK(rep2.delta_zero);

    // m N != 0 is reported as not applicable
    FDModule s = restrict_scalars(free_module(pl.to_s.quotient, 1), pl.to_s);
    CHECK_FALSE(mu_delta_vanishing_check(pl, s, 6).applicable);
}

TEST_CASE("Tor periodicity around a vanishing window")
{
    // Tor^R_i(k, S) = 0 for i >= 1 since S = R here: window [1, 5], lo = 1
    Pipeline pl = reference_pipeline("k", 8);
    FDModule s = restrict_scalars(free_module(pl.to_s.quotient, 1), pl.to_s);
    TorTable tr = tor_r(pl, s, 6);
    for (int i = 1; i <= 6; ++i) CHECK(tr.beta[i] == 0);
    TorPeriodicityReport rep = tor_periodicity_verify(pl, s, 1, 5, 6);
    CHECK(rep.hypothesis_ok);
    CHECK(rep.isos_ok);
    CHECK(rep.four_term_exact);
    CHECK(rep.bottom_identified);
    CHECK(rep.m1_case_ok);

    // a module with no vanishing window reports a failed hypothesis
    FDModule k = residue_field_module(pl.q);
    TorPeriodicityReport rep2 = tor_periodicity_verify(pl, k, 1, 3, 6);
    CHECK_FALSE(rep2.hypothesis_ok);
}

TEST_CASE("Tor periodicity over k[x]/(x^4): R is a field, everything vanishes")
{
    AlgebraPtr q = ring_x4();
    Vec f = parse_element(*q, "x");
    Vec g = parse_element(*q, "x^3");
    FDModule k = residue_field_module(q);
    Pipeline pl = build_pipeline(q, f, g, k, 7);
    TorPeriodicityReport rep = tor_periodicity_verify(pl, k, 1, 4, 5);
    CHECK(rep.hypothesis_ok);
    CHECK(rep.isos_ok);
    CHECK(rep.m1_case_ok);
    // m = 1 case: Tor^Q_i(k, k) has the dimension of k (x) k = k throughout
    TorTable tq = tor_q(pl, k, 5);
    for (int i = 1; i <= 3; ++i) CHECK(tq.beta[i] == 1);
}

TEST_CASE("vanish: N = k is trivially applicable and the series match")
{
    Pipeline pl = reference_pipeline("k", 8);
    FDModule k = residue_field_module(pl.q);
    NuVanishingReport rep = nu_vanishing_verify(pl, k, 6);
    CHECK(rep.applicable);
    CHECK(rep.tor_r_nu_zero);  // m k = 0, so nu is the zero map
    CHECK(rep.tor_q_nu_zero);
    CHECK(rep.series_equal);
}

TEST_CASE("vanish: N = S satisfies the hypotheses over the reference ring")
{
    Pipeline pl = reference_pipeline("k", 8);
    FDModule s = restrict_scalars(free_module(pl.to_s.quotient, 1), pl.to_s);
    NuVanishingReport rep = nu_vanishing_verify(pl, s, 6);
    CHECK(rep.applicable);  // m^2 S = 0 since x acts as zero on S = R
    CHECK(rep.tor_r_nu_zero);
    CHECK(rep.tor_q_nu_zero);
    CHECK(rep.series_equal);
}

TEST_CASE("naturality and lifting independence on homology")
{
    Pipeline p0 = reference_pipeline("k", 8, 0);
    Pipeline p1 = reference_pipeline("k", 8, 1);

    // identical resolutions compare trivially
    NaturalityReport self = verify_naturality(p0, p0, residue_field_module(p0.q), 5);
    CHECK(self.h_chain_map);
    CHECK(self.tau_commutes);
    CHECK(self.delta_conjugates);

    // distinct seeds give distinct resolutions with equal homology behavior
    bool differs = false;
    for (int n = 1; n <= 6 && !differs; ++n)
        if (!(p0.u.useq.map(n) == p1.u.useq.map(n))) differs = true;
    CHECK(differs);
    FDModule k = residue_field_module(p0.q);
    NaturalityReport rep = verify_naturality(p0, p1, k, 5);
    CHECK(rep.h_chain_map);
    CHECK(rep.tau_commutes);
    CHECK(rep.delta_conjugates);

    FDModule s = restrict_scalars(free_module(p0.to_s.quotient, 1), p0.to_s);
    NaturalityReport rep_s = verify_naturality(p0, p1, s, 5);
    CHECK(rep_s.h_chain_map);
    CHECK(rep_s.tau_commutes);
    CHECK(rep_s.delta_conjugates);
}

TEST_CASE("M = R against a seeded build: both deltas vanish on homology")
{
    Pipeline p0 = reference_pipeline("R", 7, 0);
    Pipeline p1 = reference_pipeline("R", 7, 3);
    FDModule k = residue_field_module(p0.q);
    NaturalityReport rep = verify_naturality(p0, p1, k, 4);
    CHECK(rep.h_chain_map);
    CHECK(rep.tau_commutes);
    CHECK(rep.delta_conjugates);
}

TEST_CASE("the operator of a non-exact zero divisor is still a chain map over S")
{
    // f = xy with ann(f) = m, so S = Q/m = k; the general construction goes
    // through with g = x and the chain-map property of the operator survives.
    // None of the mapping-cone theorems are claimed here: V (x) R need not
    // resolve M for a non-exact pair (it genuinely fails for this instance,
    // since the two-variable dg algebra is not a resolution of R).
    AlgebraPtr q = ring_xy();
    Vec f = parse_element(*q, "xy");
    Vec g = parse_element(*q, "x");
    TateAlgebra a = build_dg_pair(q, f, g, 8);
    FDModule k = residue_field_module(q);
    SemifreeResolution u = build_semifree(a, k, 6);
    QuotientData r = quotient_by(q, principal_ideal(*q, f));
    LiftedComplex v = extract_lifting(u, r);
    CHECK(v.vseq_r.is_complex());
    Subspace ideal_f = principal_ideal(*q, f);
    for (int n = 1; n + 1 <= 6; ++n) CHECK(v.vseq.map(n).mul(v.vseq.map(n + 1)).entries_in(ideal_f));
    QuotientData s = quotient_by(q, subspace_sum(principal_ideal(*q, f), annihilator(*q, f)));
    CHECK(s.quotient->dim == 1);
    EisenbudOp op = compute_tau(u, v, s);
    CHECK(tau_is_chain_map(v, op, 6));
}
