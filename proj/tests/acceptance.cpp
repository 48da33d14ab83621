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

// Acceptance suite: every check is exact (no tolerances anywhere).
// Reference instance: Q = k[x,y]/(x^2, y^2), f = g = x, R = S = Q/(x).

#include <chrono>
#include <iostream>
#include <vector>

#include "ezd/job.hpp"
#include "ezd/resolution.hpp"
#include "test_support.hpp"

using namespace ezd;
using namespace ezdtest;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok)
{
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << what << "\n";
    if (!ok) ++failures;
}

bool all(std::initializer_list<bool> xs)
{
    for (bool x : xs)
        if (!x) return false;
    return true;
}

FDModule module_r(const AlgebraPtr& q, const Vec& f)
{
    QuotientData r = quotient_by(q, principal_ideal(*q, f));
    return restrict_scalars(free_module(r.quotient, 1), r);
}

FDModule module_r_mod_y(const AlgebraPtr& q, const Vec& f)
{
    QuotientData r = quotient_by(q, principal_ideal(*q, f));
    Vec ybar = r.project(parse_element(*q, "y"));
    QuotientData r2 = quotient_by(r.quotient, ideal_generated_by(*r.quotient, {ybar}));
    return restrict_scalars(free_module(r2.quotient, 1), compose(r, r2));
}

void criterion1()
{
    AlgebraPtr q = ring_xy();
    Vec x = parse_element(*q, "x");
    bool ok = is_exact_pair(*q, x, x).ok();
    ok = ok && hilbert_coeffs_ring(*q) == std::vector<long long>{1, 2, 1};
    ok = ok && (elem_times_subspace(*q, x, q->maximal_ideal()) == q->mpow[2]);
    ok = ok && !q->in_mpow(x, 2);
    ok = ok && is_conca_generator(*q, x);

    // part-2 equivalence over every basis element and 50 seeded elements of m
    int checked = 0;
    try {
        for (int i = 0; i < q->dim; ++i) {
            check_conca_equivalence(*q, q->elem(i));
            ++checked;
        }
        Rng rng(424242);
        for (int trial = 0; trial < 50; ++trial) {
            Vec f(q->dim, Rat(0));
            for (int i = 1; i < q->dim; ++i) f[i] = Rat(rng.range(-3, 3));
            check_conca_equivalence(*q, f);
            ++checked;
        }
    }
    catch (const Error&) {
        ok = false;
    }
    ok = ok && (checked == 54);
    report(1, "exact pair, short-ring Hilbert lemma, Conca equivalence (4 basis + 50 random f)", ok);
}

void criterion2()
{
    AlgebraPtr q = ring_xy();
    Vec x = parse_element(*q, "x");
    bool ok = true;
    try {
        TateAlgebra a = build_tate(q, x, x, 10);
        DgAxiomReport rep = verify_dg_axioms(a, true);
        ok = rep.ok(true);
        Complex c = a.as_free_seq().realize();
        ok = ok && verify_complex(c);
        ok = ok && homology(c, 0).dim() == 2 && (image_basis(c.diff(1)) == principal_ideal(*q, x));
        for (int i = 1; i <= 9; ++i) ok = ok && homology(c, i).dim() == 0;
    }
    catch (const Error&) {
        ok = false;
    }
    report(2, "Tate dg axioms and resolution exactness at cap 10", ok);
}

void criterion3()
{
    AlgebraPtr q = ring_xy();
    Vec x = parse_element(*q, "x");
    bool ok = true;
    for (const char* name : {"k", "R", "R/(y)"}) {
        try {
            FDModule m = std::string(name) == "k"
                             ? residue_field_module(q)
                             : (std::string(name) == "R" ? module_r(q, x) : module_r_mod_y(q, x));
            Pipeline pl = build_pipeline(q, x, x, m, 8);
            ok = ok && verify_semifree_resolution(pl.u);
            ok = ok && check_l_stability(pl.u);
            for (int n = 1; n + 1 <= pl.cap; ++n) {
                AlgMat square = pl.v.vseq.map(n).mul(pl.v.vseq.map(n + 1));
                if (!(square == pl.op.tau_tilde.at(n).scale_elem(pl.f))) ok = false;
            }
            ok = ok && tau_is_chain_map(pl.v, pl.op, pl.cap);  // zero defects through degree 7
        }
        catch (const Error&) {
            ok = false;
        }
    }
    report(3, "semifree resolutions, L-stability, f tau = dV dV, tau chain map through degree 7", ok);
}

void criterion4()
{
    AlgebraPtr q = ring_xy();
    Vec x = parse_element(*q, "x");
    bool ok = true;
    try {
        Pipeline pl = build_pipeline(q, x, x, residue_field_module(q), 8);
        ConeSesReport rep = verify_cone_sequences(pl);
        ok = rep.all_ok();
        // exact kernel dimension count for omega, per degree
        const int ds = pl.to_s.quotient->dim;
        for (int n = 0; n <= 6; ++n) {
            int expect = 0;
            for (int i = 2; i <= n; ++i) expect += pl.u.vranks[n - i] * ds;
            if (kernel_basis(pl.omega[n].realize()).dim() != expect) ok = false;
        }
    }
    catch (const Error&) {
        ok = false;
    }
    report(4, "cone differential squares to zero, both short sequences exact, ker(omega) = L x S", ok);
}

void criterion5()
{
    AlgebraPtr q = ring_xy();
    Vec x = parse_element(*q, "x");
    FDModule k = residue_field_module(q);
    bool ok = true;
    for (const char* name : {"k", "R", "R/(y)"}) {
        try {
            FDModule m = std::string(name) == "k"
                             ? residue_field_module(q)
                             : (std::string(name) == "R" ? module_r(q, x) : module_r_mod_y(q, x));
            Pipeline pl = build_pipeline(q, x, x, m, 8);
            ConeLesReport rep = cone_les_verify(pl, k, 6);
            ok = ok && rep.all_ok();
        }
        catch (const Error&) {
            ok = false;
        }
    }
    report(5, "both long exact sequences defect-free through degree 6, psi phi is the canonical map", ok);
}

void criterion6()
{
    AlgebraPtr q = ring_xy();
    Vec x = parse_element(*q, "x");
    FDModule k = residue_field_module(q);
    bool ok = true;
    try {
        Pipeline pl = build_pipeline(q, x, x, k, 10);
        ConeLesReport les = cone_les_verify(pl, k, 8);
        TruncSeries pq = poincare_from_tor(tor_q(pl, k, 8));
        TruncSeries pr = poincare_from_tor(tor_r(pl, k, 8));
        ok = ok && pq.c == std::vector<long long>{1, 2, 3, 4, 5, 6, 7, 8, 9};
        ok = ok && pr.c == std::vector<long long>(9, 1);

        // independent oracles: minimal resolutions built by the generic routine
        FreeResolution oq = minimal_free_resolution(k, 9);
        for (int n = 0; n <= 8; ++n) ok = ok && oq.fseq.rank(n) == n + 1;
        FDModule k_r = residue_field_module(pl.to_r.quotient);
        FreeResolution orr = minimal_free_resolution(k_r, 9);
        for (int n = 0; n <= 8; ++n) ok = ok && orr.fseq.rank(n) == 1;

        ok = ok && check_poincare1(pq, pr);
        Poincare2Result p2 = check_poincare2(pq, pr, les.mu, les.delta);
        ok = ok && p2.holds && p2.equality && p2.maps_zero && p2.iff_consistent;

        MuDeltaReport cr = mu_delta_vanishing_check(pl, k, 8);
        ok = ok && cr.applicable && cr.mu_zero && cr.delta_zero;

        ShortRingSeriesReport f1 = check_short_ring_series(pl, k, 6);
        ok = ok && f1.ok();
        Pipeline pl2 = build_pipeline(q, x, x, module_r(q, x), 8);
        ShortRingSeriesReport f2 = check_short_ring_series(pl2, k, 6);
        ok = ok && f2.ok();
    }
    catch (const Error&) {
        ok = false;
    }
    report(6, "P^Q_{k,k} = 1..9, P^R_{k,k} = 1s, both inequalities, equality iff mu = delta = 0, final formula", ok);
}

void criterion7()
{
    AlgebraPtr uv = ring_uv2();
    bool ok = true;
    int verified = 0;
    std::uint64_t seed = 1;
    try {
        while (verified < 20 && seed < 400) {
            Rng rng(seed++);
            FDModule m = random_module(uv, rng, 1, 2);
            FDModule n = (rng.range(0, 1) == 0) ? k_power(uv, 1 + rng.range(0, 1)) : random_module(uv, rng, 1, 2);
            if (m.dim == 0 || n.dim == 0) continue;
            FDModule tens = tensor_over(m, n);
            if (radical_submodule(tens).dim() != 0) continue;
            SquareZeroReport rep = check_square_zero_formula(m, n, 6);
            if (!rep.ok()) ok = false;
            ++verified;
        }
    }
    catch (const Error&) {
        ok = false;
    }
    ok = ok && (verified == 20);
    report(7, "m^2 = 0 regime: 20 seeded pairs satisfy the series formula and Tor^R(M, nu_N) = 0 through degree 6", ok);
}

void criterion8()
{
    AlgebraPtr q = ring_xy();
    Vec x = parse_element(*q, "x");
    FDModule k = residue_field_module(q);
    bool ok = true;
    try {
        Pipeline p0 = build_pipeline(q, x, x, k, 8, 0);
        Pipeline p1 = build_pipeline(q, x, x, k, 8, 1);
        bool differs = false;
        for (int n = 1; n <= 8 && !differs; ++n)
            if (!(p0.u.useq.map(n) == p1.u.useq.map(n))) differs = true;
        ok = ok && differs;
        NaturalityReport rep = verify_naturality(p0, p1, k, 6);
        ok = ok && rep.h_chain_map && rep.tau_commutes && rep.delta_conjugates;
    }
    catch (const Error&) {
        ok = false;
    }
    report(8, "two seeds give distinct resolutions with identical induced delta through degree 6", ok);
}

void criterion9()
{
    bool ok = true;

    // (a) non-exact f is rejected by the pipeline gate
    try {
        const char* job_txt = R"json({
          "ring": {"monomial_quotient": {"variables": ["x", "y"], "relations": ["x^2", "y^2"]}},
          "f": "xy", "g": "xy",
          "modules": {"M": "k", "N": "k"},
          "cap": 6
        })json";
        Report rep = cmd_verify(load_job(job_txt));
        ok = ok && rep.exit_code == 1;
    }
    catch (const Error&) {
        ok = false;
    }

    // (b) g N != 0 yields a hypothesis-failure report with exit code 1
    try {
        const char* job_txt = R"json({
          "ring": {"monomial_quotient": {"variables": ["x"], "relations": ["x^4"]}},
          "f": "x^3", "g": "x",
          "modules": {"M": "k", "N": "R"},
          "cap": 6
        })json";
        Report rep = cmd_verify(load_job(job_txt));
        ok = ok && rep.exit_code == 1;
        bool saw_gate = false;
        for (const auto& t : rep.tasks)
            if (t.id == "gate.module-n" && t.verdict == "hypothesis-fail") saw_gate = true;
        ok = ok && saw_gate;
    }
    catch (const Error&) {
        ok = false;
    }

    // (c) a corrupted structure-constant table names the failing triple
    {
        const char* bad = R"json({
          "ring": {"structure_constants": {
            "labels": ["1", "a", "b"],
            "table": [
              [[1,0,0],[0,1,0],[0,0,1]],
              [[0,1,0],[0,0,1],[0,0,1]],
              [[0,0,1],[0,0,1],[0,0,0]]
            ]}}
        })json";
        bool threw = false;
        try {
            load_job(bad);
        }
        catch (const Error& e) {
            threw = std::string(e.what()).find("triple") != std::string::npos &&
                    e.kind() == ErrKind::structure;
        }
        ok = ok && threw;
    }

    report(9, "negative controls: pipeline gate, g N != 0 exit 1, corrupted table names its triple", ok);
}

}  // namespace

int main()
{
    auto t0 = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (failures == 0 ? "all criteria passed" : "criteria FAILED") << " (" << ms << " ms)\n";
    return failures == 0 ? 0 : 1;
}
