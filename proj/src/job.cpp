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

#include "ezd/job.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "ezd/error.hpp"

namespace ezd {

using nlohmann::json;

namespace {

Rat json_to_rat(const json& j)
{
    if (j.is_string()) return rat_parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    fail(ErrKind::parse, "rationals must be integers or \"p/q\" strings, got: " + j.dump());
}

AlgebraPtr ring_from_json(const json& j)
{
    if (!j.is_object()) fail(ErrKind::parse, "'ring' must be an object");
    if (j.contains("monomial_quotient")) {
        const json& mq = j.at("monomial_quotient");
        std::vector<std::string> vars = mq.at("variables").get<std::vector<std::string>>();
        std::vector<std::string> rels = mq.at("relations").get<std::vector<std::string>>();
        return from_monomial_quotient(vars, rels);
    }
    if (j.contains("structure_constants")) {
        const json& sc = j.at("structure_constants");
        std::vector<std::string> labels = sc.at("labels").get<std::vector<std::string>>();
        const json& tab = sc.at("table");
        const int d = static_cast<int>(labels.size());
        if (static_cast<int>(tab.size()) != d) fail(ErrKind::parse, "structure-constant table must have dim rows");
        std::vector<Vec> table;
        for (int i = 0; i < d; ++i) {
            if (static_cast<int>(tab.at(i).size()) != d) fail(ErrKind::parse, "structure-constant table row has wrong length");
            for (int jj = 0; jj < d; ++jj) {
                const json& cell = tab.at(i).at(jj);
                if (static_cast<int>(cell.size()) != d) fail(ErrKind::parse, "structure-constant entry has wrong length");
                Vec v(d, Rat(0));
                for (int k = 0; k < d; ++k) v[k] = json_to_rat(cell.at(k));
                table.push_back(std::move(v));
            }
        }
        return make_algebra_adapted(std::move(labels), std::move(table));
    }
    fail(ErrKind::parse, "'ring' needs 'monomial_quotient' or 'structure_constants'");
}

struct RingContext {
    AlgebraPtr q;
    bool has_f = false, has_g = false;
    Vec f, g;
};

QuotientData to_r_of(const RingContext& rc)
{
    if (!rc.has_f) fail(ErrKind::parse, "module spec needs the element f to form R = Q/(f)");
    return quotient_by(rc.q, principal_ideal(*rc.q, rc.f));
}

QuotientData to_s_of(const RingContext& rc)
{
    if (!rc.has_f) fail(ErrKind::parse, "module spec needs the element f to form S");
    return quotient_by(rc.q, subspace_sum(principal_ideal(*rc.q, rc.f), annihilator(*rc.q, rc.f)));
}

FDModule module_from_spec(const RingContext& rc, const json& spec)
{
    const AlgebraPtr& q = rc.q;
    if (spec.is_object()) {
        int dim = spec.at("dim").get<int>();
        const json& act = spec.at("action");
        if (static_cast<int>(act.size()) != q->dim) fail(ErrKind::parse, "module needs one action matrix per ring basis element");
        std::vector<Mat> action;
        for (const json& mj : act) {
            Mat m(dim, dim);
            if (static_cast<int>(mj.size()) != dim) fail(ErrKind::parse, "action matrix has wrong row count");
            for (int i = 0; i < dim; ++i)
                for (int jj = 0; jj < dim; ++jj) m.at(i, jj) = json_to_rat(mj.at(i).at(jj));
            action.push_back(std::move(m));
        }
        return make_module(q, std::move(action));
    }
    if (!spec.is_string()) fail(ErrKind::parse, "module spec must be a string or an action object");
    std::string s = spec.get<std::string>();
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());

    if (s == "k") return residue_field_module(q);
    if (s == "Q") return free_module(q, 1);
    if (s == "m") return radical_inclusion(free_module(q, 1)).src;
    if (s == "R") {
        QuotientData qr = to_r_of(rc);
        return restrict_scalars(free_module(qr.quotient, 1), qr);
    }
    if (s == "S") {
        QuotientData qs = to_s_of(rc);
        return restrict_scalars(free_module(qs.quotient, 1), qs);
    }
    auto quotient_of = [&](const QuotientData& base, const std::string& inner) {
        std::vector<Vec> gens;
        std::string cur;
        for (char c : inner) {
            if (c == ',') {
                gens.push_back(base.project(parse_element(*q, cur)));
                cur.clear();
            }
            else {
                cur += c;
            }
        }
        if (!cur.empty()) gens.push_back(base.project(parse_element(*q, cur)));
        Subspace ideal = ideal_generated_by(*base.quotient, gens);
        QuotientData inner_q = quotient_by(base.quotient, ideal);
        QuotientData total = compose(base, inner_q);
        return restrict_scalars(free_module(total.quotient, 1), total);
    };
    if (s.rfind("R/(", 0) == 0 && s.back() == ')') return quotient_of(to_r_of(rc), s.substr(3, s.size() - 4));
    if (s.rfind("Q/(", 0) == 0 && s.back() == ')') {
        std::string inner = s.substr(3, s.size() - 4);
        std::vector<Vec> gens;
        std::string cur;
        for (char c : inner) {
            if (c == ',') {
                gens.push_back(parse_element(*q, cur));
                cur.clear();
            }
            else {
                cur += c;
            }
        }
        if (!cur.empty()) gens.push_back(parse_element(*q, cur));
        QuotientData qd = quotient_by(q, ideal_generated_by(*q, gens));
        return restrict_scalars(free_module(qd.quotient, 1), qd);
    }
    fail(ErrKind::parse, "unknown module spec '" + s + "' (expected k, Q, R, S, m, R/(...), Q/(...), or an action object)");
}

json window_json(const TaskResult& t)
{
    if (!t.has_window) return nullptr;
    return json::array({t.window_lo, t.window_hi});
}

int exit_code_from_tasks(const std::vector<TaskResult>& tasks)
{
    int code = 0;
    for (const auto& t : tasks) {
        if (t.classification == "parse" || t.classification == "precondition" || t.classification == "structure")
            code = std::max(code, 3);
        else if (t.verdict == "fail")
            code = std::max(code, 2);
        else if (t.verdict == "hypothesis-fail")
            code = std::max(code, 1);
    }
    return code;
}

/// Runs one task body, mapping thrown errors onto verdict/classification.
void run_task(std::vector<TaskResult>& out, const std::vector<std::string>& filter, const std::string& id,
              const std::function<void(TaskResult&)>& body)
{
    if (!filter.empty() && std::find(filter.begin(), filter.end(), id) == filter.end()) return;
    TaskResult t;
    t.id = id;
    t.verdict = "pass";
    try {
        body(t);
    }
    catch (const Error& e) {
        switch (e.kind()) {
            case ErrKind::theorem_violation:
                t.verdict = "fail";
                t.classification = "theorem-violation";
                break;
            case ErrKind::hypothesis:
                t.verdict = "hypothesis-fail";
                t.classification = "hypothesis";
                break;
            case ErrKind::truncation:
                t.verdict = "unverifiable";
                t.classification = "truncation-boundary";
                break;
            case ErrKind::parse:
                t.verdict = "fail";
                t.classification = "parse";
                break;
            default:
                t.verdict = "fail";
                t.classification = "precondition";
                break;
        }
        json d = t.detail.empty() ? json::object() : json::parse(t.detail);
        d["error"] = e.what();
        t.detail = d.dump();
    }
    out.push_back(std::move(t));
}

void set_detail(TaskResult& t, const json& j) { t.detail = j.dump(); }

void set_window(TaskResult& t, int lo, int hi)
{
    t.has_window = true;
    t.window_lo = lo;
    t.window_hi = hi;
}

json series_json(const TruncSeries& s, const std::vector<RationalCandidate>& extra = {})
{
    json j;
    j["coefficients"] = s.c;
    auto form = rational_form(s, extra);
    j["rational_form"] = form ? json(*form) : json(nullptr);
    return j;
}

RingContext context_of(const JobSpec& job)
{
    RingContext rc;
    rc.q = job.ring;
    rc.has_f = job.has_f;
    rc.has_g = job.has_g;
    rc.f = job.f;
    rc.g = job.g;
    return rc;
}

/// Shared hypothesis gate for the pipeline commands. Returns true when the
/// pipeline may be built; records gate verdicts either way.
bool gate_pipeline(const JobSpec& job, std::vector<TaskResult>& tasks, const std::vector<std::string>& filter)
{
    bool ok = true;
    run_task(tasks, filter, "gate.ring", [&](TaskResult& t) {
        set_detail(t, json{{"dim", job.ring->dim}, {"nilpotency", job.ring->nilpotency}});
    });
    if (!job.has_f || !job.has_g) fail(ErrKind::parse, "this command needs both f and g");
    if (!job.has_m || !job.has_n) fail(ErrKind::parse, "this command needs modules M and N");

    run_task(tasks, filter, "gate.exact-pair", [&](TaskResult& t) {
        ExactPairCert cert = is_exact_pair(*job.ring, job.f, job.g);
        set_detail(t, json{{"exact_pair", cert.ok()},
                           {"dim_ann_f", cert.dim_ann_f},
                           {"dim_ann_g", cert.dim_ann_g},
                           {"dim_ideal_f", cert.dim_f},
                           {"dim_ideal_g", cert.dim_g}});
        if (!cert.ok()) {
            ok = false;
            fail(ErrKind::hypothesis, "(f, g) is not an exact pair of zero divisors; pipeline gate rejects the instance");
        }
    });
    run_task(tasks, filter, "gate.module-m", [&](TaskResult& t) {
        bool fm = annihilates(job.f, job.module_m);
        set_detail(t, json{{"fM_zero", fm}, {"dim", job.module_m.dim}});
        if (!fm) {
            ok = false;
            fail(ErrKind::hypothesis, "f M != 0: M is not an R-module");
        }
    });
    run_task(tasks, filter, "gate.module-n", [&](TaskResult& t) {
        bool fn = annihilates(job.f, job.module_n);
        bool gn = annihilates(job.g, job.module_n);
        set_detail(t, json{{"fN_zero", fn}, {"gN_zero", gn}, {"dim", job.module_n.dim}});
        if (!fn || !gn) {
            ok = false;
            fail(ErrKind::hypothesis, !fn ? "f N != 0: N is not an R-module" : "g N != 0");
        }
    });
    return ok;
}

}  // namespace

JobSpec load_job(const std::string& json_text, int cap_override, long long seed_override)
{
    json j;
    try {
        j = json::parse(json_text);
    }
    catch (const json::parse_error& e) {
        fail(ErrKind::parse, "invalid job file at byte offset " + std::to_string(e.byte) + ": " + e.what());
    }
    JobSpec job;
    if (!j.contains("ring")) fail(ErrKind::parse, "job file needs a 'ring' section");
    job.ring = ring_from_json(j.at("ring"));
    if (j.contains("f")) {
        job.f = j.at("f").is_string() ? parse_element(*job.ring, j.at("f").get<std::string>())
                                      : [&] {
                                            Vec v(job.ring->dim, Rat(0));
                                            for (int i = 0; i < job.ring->dim; ++i) v[i] = json_to_rat(j.at("f").at(i));
                                            return v;
                                        }();
        job.has_f = true;
    }
    if (j.contains("g")) {
        job.g = j.at("g").is_string() ? parse_element(*job.ring, j.at("g").get<std::string>())
                                      : [&] {
                                            Vec v(job.ring->dim, Rat(0));
                                            for (int i = 0; i < job.ring->dim; ++i) v[i] = json_to_rat(j.at("g").at(i));
                                            return v;
                                        }();
        job.has_g = true;
    }
    RingContext rc;
    rc.q = job.ring;
    rc.has_f = job.has_f;
    rc.has_g = job.has_g;
    rc.f = job.f;
    rc.g = job.g;
    if (j.contains("modules")) {
        const json& mods = j.at("modules");
        if (mods.contains("M")) {
            job.module_m = module_from_spec(rc, mods.at("M"));
            job.has_m = true;
        }
        if (mods.contains("N")) {
            job.module_n = module_from_spec(rc, mods.at("N"));
            job.has_n = true;
        }
    }
    if (j.contains("cap")) job.cap = j.at("cap").get<int>();
    if (j.contains("seed")) job.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("tasks")) job.default_tasks = j.at("tasks").get<std::vector<std::string>>();
    if (cap_override >= 0) job.cap = cap_override;
    if (seed_override >= 0) job.seed = static_cast<std::uint64_t>(seed_override);
    if (job.cap < 4) fail(ErrKind::parse, "cap must be at least 4");
    return job;
}

Report cmd_check_ezd(const JobSpec& job, const std::vector<std::string>& filter)
{
    Report rep;
    rep.command = "check-ezd";
    auto t0 = std::chrono::steady_clock::now();
    auto& tasks = rep.tasks;

    run_task(tasks, filter, "ring.validate", [&](TaskResult& t) {
        json d{{"dim", job.ring->dim}, {"nilpotency", job.ring->nilpotency}};
        if (job.ring->dim == 1) d["note"] = "the ring is a field: no exact pairs possible";
        set_detail(t, d);
    });
    run_task(tasks, filter, "ring.hilbert", [&](TaskResult& t) {
        set_detail(t, json{{"coefficients", hilbert_coeffs_ring(*job.ring)}});
    });
    if (job.has_f) {
        run_task(tasks, filter, "ezd.annihilator-f", [&](TaskResult& t) {
            set_detail(t, json{{"dim", annihilator(*job.ring, job.f).dim()},
                               {"principal_dim", principal_ideal(*job.ring, job.f).dim()}});
        });
    }
    if (job.has_g) {
        run_task(tasks, filter, "ezd.annihilator-g", [&](TaskResult& t) {
            set_detail(t, json{{"dim", annihilator(*job.ring, job.g).dim()},
                               {"principal_dim", principal_ideal(*job.ring, job.g).dim()}});
        });
    }
    if (job.has_f && job.has_g) {
        run_task(tasks, filter, "ezd.exact-pair", [&](TaskResult& t) {
            ExactPairCert c = is_exact_pair(*job.ring, job.f, job.g);
            json d{{"exact_pair", c.ok()},
                   {"f_nonzero", c.f_nonzero},
                   {"g_nonzero", c.g_nonzero},
                   {"ann_f_eq_ideal_g", c.ann_f_contains_g && c.g_contains_ann_f},
                   {"ann_g_eq_ideal_f", c.ann_g_contains_f && c.f_contains_ann_g}};
            if (job.ring->dim == 1) d["note"] = "no exact pairs possible over a field";
            set_detail(t, d);
        });
        run_task(tasks, filter, "ezd.short-ring-hilbert", [&](TaskResult& t) {
            if (!is_exact_pair(*job.ring, job.f, job.g).ok() || job.ring->nilpotency > 3) {
                t.verdict = "not-applicable";
                set_detail(t, json{{"note", "needs an exact pair over a short ring"}});
                return;
            }
            ShortRingHilbertReport r = check_short_ring_hilbert(*job.ring, job.f, job.g);
            set_detail(t, json{{"e", r.e},
                               {"hilbert_ok", r.hilbert_ok},
                               {"fm_eq_m2", r.fm_eq_m2},
                               {"gm_eq_m2", r.gm_eq_m2},
                               {"f_not_in_m2", r.f_not_in_m2},
                               {"g_not_in_m2", r.g_not_in_m2}});
        });
    }
    if (job.has_f) {
        run_task(tasks, filter, "ezd.conca", [&](TaskResult& t) {
            if (job.ring->nilpotency > 3) {
                t.verdict = "not-applicable";
                set_detail(t, json{{"note", "Conca generators need a short ring"}});
                return;
            }
            set_detail(t, json{{"conca_generator", is_conca_generator(*job.ring, job.f)}});
        });
        run_task(tasks, filter, "ezd.conca-equivalence", [&](TaskResult& t) {
            std::vector<long long> h = hilbert_coeffs_ring(*job.ring);
            long long e = job.ring->maximal_ideal().dim() -
                          (job.ring->mpow.size() > 2 ? job.ring->mpow[2].dim() : 0);
            std::vector<long long> want = {1, e, e - 1};
            while (!want.empty() && want.back() == 0) want.pop_back();
            std::vector<long long> have = h;
            while (!have.empty() && have.back() == 0) have.pop_back();
            if (have != want) {
                t.verdict = "not-applicable";
                set_detail(t, json{{"note", "Hilbert series is not 1 + e t + (e-1) t^2"}});
                return;
            }
            bool pair = check_conca_equivalence(*job.ring, job.f);
            set_detail(t, json{{"self_paired", pair}, {"equivalence_checked", true}});
        });
    }
    rep.exit_code = exit_code_from_tasks(tasks);
    rep.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::sort(rep.tasks.begin(), rep.tasks.end(), [](const TaskResult& a, const TaskResult& b) { return a.id < b.id; });
    return rep;
}

Report cmd_verify(const JobSpec& job, const std::vector<std::string>& filter)
{
    Report rep;
    rep.command = "verify";
    auto t0 = std::chrono::steady_clock::now();
    auto& tasks = rep.tasks;

    bool gates_ok = gate_pipeline(job, tasks, filter);
    std::optional<Pipeline> pipeline;
    if (gates_ok) {
        run_task(tasks, filter, "pipeline.build", [&](TaskResult& t) {
            pipeline.emplace(build_pipeline(job.ring, job.f, job.g, job.module_m, job.cap, job.seed));
            set_window(t, 0, job.cap);
            set_detail(t, json{{"cap", job.cap}, {"seed", job.seed}});
        });
        if (!pipeline && !filter.empty()) {
            // filtered runs may skip the build task; construct silently
            try {
                pipeline.emplace(build_pipeline(job.ring, job.f, job.g, job.module_m, job.cap, job.seed));
            }
            catch (const Error&) {
            }
        }
    }
    if (gates_ok && pipeline) {
        const int cap = job.cap;
        const int through = cap - 2;
        Pipeline& pl = *pipeline;
        const FDModule& n_mod = job.module_n;

        run_task(tasks, filter, "tate.axioms", [&](TaskResult& t) {
            DgAxiomReport r = verify_dg_axioms(pl.tate, true);
            set_window(t, 0, pl.tate.cap);
            set_detail(t, json{{"d_squared", r.d_squared_ok},
                               {"leibniz", r.leibniz_ok},
                               {"graded_commutative", r.graded_comm_ok},
                               {"associative", r.assoc_ok},
                               {"divided_power", r.divided_power_ok},
                               {"resolution", r.resolution_ok}});
            if (!r.ok(true)) fail(ErrKind::theorem_violation, "Tate dg axioms failed");
        });
        run_task(tasks, filter, "semifree.resolution", [&](TaskResult& t) {
            set_window(t, 0, pl.cap);
            json d{{"v_ranks", pl.u.vranks}};
            bool ok = verify_semifree_resolution(pl.u);
            d["resolution_ok"] = ok;
            set_detail(t, d);
            if (!ok) fail(ErrKind::theorem_violation, "semifree resolution failed exactness");
        });
        run_task(tasks, filter, "semifree.leibniz", [&](TaskResult& t) {
            set_window(t, 0, pl.cap);
            if (!verify_semifree_leibniz(pl.u)) fail(ErrKind::theorem_violation, "dg-module Leibniz rule failed");
        });
        run_task(tasks, filter, "semifree.l-stability", [&](TaskResult& t) {
            set_window(t, 0, pl.cap);
            if (!check_l_stability(pl.u)) fail(ErrKind::theorem_violation, "L-part stability failed");
        });
        run_task(tasks, filter, "lifting.checks", [&](TaskResult& t) {
            set_window(t, 0, pl.cap);
            bool res = verify_lifting(pl.u, pl.v);
            Subspace ideal_f = principal_ideal(*pl.q, pl.f);
            bool square_in_f = true;
            for (int n = 1; n + 1 <= pl.cap; ++n)
                if (!pl.v.vseq.map(n).mul(pl.v.vseq.map(n + 1)).entries_in(ideal_f)) square_in_f = false;
            set_detail(t, json{{"r_resolution", res}, {"square_entries_in_f", square_in_f}});
            if (!res || !square_in_f) fail(ErrKind::theorem_violation, "lifting checks failed");
        });
        run_task(tasks, filter, "tau.chain-map", [&](TaskResult& t) {
            set_window(t, 2, pl.cap - 1);
            if (!tau_is_chain_map(pl.v, pl.op, pl.cap)) fail(ErrKind::theorem_violation, "tau is not a chain map over S");
        });
        run_task(tasks, filter, "cone.sequences", [&](TaskResult& t) {
            ConeSesReport r = verify_cone_sequences(pl);
            set_window(t, 0, pl.cap);
            set_detail(t, json{{"w_complex", r.w_is_complex},
                               {"short_seq_exact", r.short_seq_exact},
                               {"omega_chain_map", r.omega_chain_map},
                               {"omega_surjective", r.omega_surjective},
                               {"omega_kernel_is_L", r.omega_kernel_is_l},
                               {"y2_chain_map", r.y2_chain_map},
                               {"y2_seq_exact", r.y2_seq_exact}});
            if (!r.all_ok()) fail(ErrKind::theorem_violation, "cone sequence checks failed");
        });

        std::optional<ConeLesReport> les_opt;
        run_task(tasks, filter, "les.exactness", [&](TaskResult& t) {
            les_opt.emplace(cone_les_verify(pl, n_mod, through));
            set_window(t, 0, through);
            int defects = 0;
            for (const auto& e : les_opt->defects1)
                if (!e.exact()) ++defects;
            for (const auto& e : les_opt->defects2)
                if (!e.exact()) ++defects;
            set_detail(t,
                       json{{"nodes_checked", les_opt->defects1.size() + les_opt->defects2.size()}, {"defects", defects}});
            if (defects > 0) fail(ErrKind::theorem_violation, "long exact sequence has nonzero exactness defect");
        });
        if (!les_opt) {
            try {
                les_opt.emplace(cone_les_verify(pl, n_mod, through));
            }
            catch (const Error&) {
                // the failure is already recorded under les.exactness (or the
                // task was filtered out); dependent tasks bail below
            }
        }
        if (!les_opt) {
            rep.exit_code = exit_code_from_tasks(tasks);
            rep.timing_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
            std::sort(rep.tasks.begin(), rep.tasks.end(),
                      [](const TaskResult& a, const TaskResult& b) { return a.id < b.id; });
            return rep;
        }
        ConeLesReport& les = *les_opt;
        run_task(tasks, filter, "les.delta-tau", [&](TaskResult& t) {
            set_window(t, 0, through);
            if (!les.delta_matches_tau) fail(ErrKind::theorem_violation, "connecting map does not match the operator");
        });
        run_task(tasks, filter, "les.psiphi", [&](TaskResult& t) {
            set_window(t, 0, through);
            if (!les.psiphi_matches_canonical)
                fail(ErrKind::theorem_violation, "psi phi differs from the canonical comparison map");
        });

        TruncSeries pq = poincare_from_tor(tor_q(pl, n_mod, through));
        TruncSeries pr = poincare_from_tor(tor_r(pl, n_mod, through));
        run_task(tasks, filter, "series.poincare1", [&](TaskResult& t) {
            set_window(t, 0, through);
            set_detail(t, json{{"PQ", pq.c}, {"PR", pr.c}});
            if (!check_poincare1(pq, pr)) fail(ErrKind::theorem_violation, "first Poincare inequality failed");
        });
        run_task(tasks, filter, "series.poincare2", [&](TaskResult& t) {
            set_window(t, 0, through);
            Poincare2Result r = check_poincare2(pq, pr, les.mu, les.delta);
            set_detail(t, json{{"holds", r.holds},
                               {"equality", r.equality},
                               {"mu_delta_zero", r.maps_zero},
                               {"iff_consistent", r.iff_consistent}});
            if (!r.holds) fail(ErrKind::theorem_violation, "second Poincare inequality failed");
            if (!r.iff_consistent) fail(ErrKind::theorem_violation, "equality criterion disagrees with mu/delta vanishing");
        });
        run_task(tasks, filter, "series.length-bounds", [&](TaskResult& t) {
            set_window(t, 0, through);
            LengthBookkeepingReport r = check_length_bookkeeping(les.hw_lengths, pq, pr, les.mu, les.delta, through);
            set_detail(t, json{{"bounds_ok", r.bounds_ok}, {"equalities_ok", r.equalities_ok}});
            if (!r.bounds_ok || !r.equalities_ok) fail(ErrKind::theorem_violation, "length bookkeeping failed");
        });
        run_task(tasks, filter, "mu-delta-vanishing", [&](TaskResult& t) {
            MuDeltaReport r = mu_delta_vanishing_check(pl, n_mod, through);
            set_window(t, 0, through);
            if (!r.applicable) {
                t.verdict = "not-applicable";
                set_detail(t, json{{"note", "needs f outside m^2 and m N = 0"}});
                return;
            }
            set_detail(t, json{{"mu_zero", r.mu_zero}, {"delta_zero", r.delta_zero}});
            if (!r.mu_zero || !r.delta_zero) fail(ErrKind::theorem_violation, "mu/delta vanishing check failed");
        });
        run_task(tasks, filter, "short-ring-series", [&](TaskResult& t) {
            ShortRingSeriesReport r = check_short_ring_series(pl, n_mod, through);
            set_window(t, 0, through);
            if (!r.applicable) {
                t.verdict = "not-applicable";
                set_detail(t, json{{"note", "needs a short ring, m (M x N) = 0 and g N = 0"}});
                return;
            }
            set_detail(t, json{{"hq_identity", r.hq_identity}, {"series_equal", r.holds}});
            if (!r.ok()) fail(ErrKind::theorem_violation, "final formula failed");
        });
        run_task(tasks, filter, "nu-vanishing", [&](TaskResult& t) {
            NuVanishingReport r = nu_vanishing_verify(pl, n_mod, through);
            set_window(t, 0, through);
            if (!r.applicable) {
                t.verdict = "not-applicable";
                set_detail(t, json{{"note", "needs f outside m^2, m^2 N = 0 and g N = 0"}});
                return;
            }
            if (!r.tor_r_nu_zero) {
                t.verdict = "not-applicable";
                set_detail(t, json{{"note", "hypothesis Tor^R(M, nu_N) = 0 fails in the window"}});
                return;
            }
            set_detail(t, json{{"tor_q_nu_zero", r.tor_q_nu_zero}, {"series_equal", r.series_equal}});
            if (!r.tor_q_nu_zero || !r.series_equal) fail(ErrKind::theorem_violation, "vanish conclusions failed");
        });
        run_task(tasks, filter, "tor-periodicity", [&](TaskResult& t) {
            set_window(t, 0, through);
            TorTable tr = tor_r(pl, n_mod, through);
            int best_lo = -1, best_hi = -2;
            int i = 1;
            while (i <= through) {
                if (tr.beta[i] == 0) {
                    int j = i;
                    while (j + 1 <= through && tr.beta[j + 1] == 0) ++j;
                    if (j - i > best_hi - best_lo) {
                        best_lo = i;
                        best_hi = j;
                    }
                    i = j + 1;
                }
                else {
                    ++i;
                }
            }
            if (best_hi - best_lo < 1) {
                t.verdict = "not-applicable";
                set_detail(t, json{{"note", "no vanishing window of Tor^R with length >= 2 below the cap"}});
                return;
            }
            TorPeriodicityReport r = tor_periodicity_verify(pl, n_mod, best_lo, best_hi, through);
            set_detail(t, json{{"window_lo", r.win_lo},
                               {"window_hi", r.win_hi},
                               {"isos_ok", r.isos_ok},
                               {"four_term_exact", r.four_term_exact},
                               {"bottom_identified", r.bottom_identified},
                               {"m1_case_ok", r.m1_case_ok}});
            if (!(r.isos_ok && r.four_term_exact && r.bottom_identified && r.m1_case_ok))
                fail(ErrKind::theorem_violation, "Tor periodicity conclusions failed");
        });
    }

    rep.exit_code = exit_code_from_tasks(tasks);
    rep.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::sort(rep.tasks.begin(), rep.tasks.end(), [](const TaskResult& a, const TaskResult& b) { return a.id < b.id; });
    return rep;
}

Report cmd_series(const JobSpec& job, const std::vector<std::string>& filter)
{
    Report rep;
    rep.command = "series";
    auto t0 = std::chrono::steady_clock::now();
    auto& tasks = rep.tasks;

    bool gates_ok = gate_pipeline(job, tasks, filter);
    std::optional<Pipeline> pipeline;
    std::optional<ConeLesReport> les_opt;
    if (gates_ok) {
        run_task(tasks, {}, "pipeline.build", [&](TaskResult& t) {
            pipeline.emplace(build_pipeline(job.ring, job.f, job.g, job.module_m, job.cap, job.seed));
            les_opt.emplace(cone_les_verify(*pipeline, job.module_n, job.cap - 2));
            set_detail(t, json{{"cap", job.cap}, {"seed", job.seed}});
        });
    }
    if (gates_ok && pipeline && les_opt) {
        const int through = job.cap - 2;
        Pipeline& pl = *pipeline;
        ConeLesReport& les = *les_opt;
        TruncSeries pq = poincare_from_tor(tor_q(pl, job.module_n, through));
        TruncSeries pr = poincare_from_tor(tor_r(pl, job.module_n, through));

        std::vector<RationalCandidate> extra;
        {
            std::vector<long long> hq = hilbert_coeffs_ring(*pl.q);
            for (size_t i = 1; i < hq.size(); i += 2) hq[i] = -hq[i];
            extra.push_back({"H_Q(-t)", hq});
            std::vector<long long> hr = hilbert_coeffs_ring(*pl.to_r.quotient);
            for (size_t i = 1; i < hr.size(); i += 2) hr[i] = -hr[i];
            extra.push_back({"H_R(-t)", hr});
        }

        run_task(tasks, filter, "series.PQ", [&](TaskResult& t) {
            set_window(t, 0, through);
            set_detail(t, series_json(pq, extra));
        });
        run_task(tasks, filter, "series.PR", [&](TaskResult& t) {
            set_window(t, 0, through);
            set_detail(t, series_json(pr, extra));
        });
        run_task(tasks, filter, "series.hilbert", [&](TaskResult& t) {
            set_detail(t, json{{"H_Q", hilbert_coeffs_ring(*pl.q)},
                               {"H_R", hilbert_coeffs_ring(*pl.to_r.quotient)},
                               {"H_M", hilbert_coeffs_module(job.module_m)},
                               {"H_N", hilbert_coeffs_module(job.module_n)}});
        });
        run_task(tasks, filter, "series.poincare1", [&](TaskResult& t) {
            set_window(t, 0, through);
            if (!check_poincare1(pq, pr)) fail(ErrKind::theorem_violation, "first Poincare inequality failed");
        });
        run_task(tasks, filter, "series.poincare2", [&](TaskResult& t) {
            set_window(t, 0, through);
            Poincare2Result r = check_poincare2(pq, pr, les.mu, les.delta);
            set_detail(t, json{{"holds", r.holds}, {"equality", r.equality}, {"iff_consistent", r.iff_consistent}});
            if (!r.holds || !r.iff_consistent) fail(ErrKind::theorem_violation, "second Poincare inequality failed");
        });
        run_task(tasks, filter, "series.growth", [&](TaskResult& t) {
            GrowthDiagnostics gq = growth_diagnostics(pq);
            GrowthDiagnostics gr = growth_diagnostics(pr);
            set_detail(t, json{{"label", "diagnostic"},
                               {"PQ_cx_estimate", gq.cx_estimate},
                               {"PQ_curv_estimate", gq.curv_estimate},
                               {"PR_cx_estimate", gr.cx_estimate},
                               {"PR_curv_estimate", gr.curv_estimate},
                               {"note", "estimates over the tail window; never a verdict"}});
        });
    }

    rep.exit_code = exit_code_from_tasks(tasks);
    rep.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::sort(rep.tasks.begin(), rep.tasks.end(), [](const TaskResult& a, const TaskResult& b) { return a.id < b.id; });
    return rep;
}

Report cmd_tor(const JobSpec& job, const std::vector<std::string>& filter)
{
    Report rep;
    rep.command = "tor";
    auto t0 = std::chrono::steady_clock::now();
    auto& tasks = rep.tasks;

    bool gates_ok = gate_pipeline(job, tasks, filter);
    if (gates_ok) {
        const int through = job.cap - 2;
        run_task(tasks, filter, "tor.betti", [&](TaskResult& t) {
            Pipeline pl = build_pipeline(job.ring, job.f, job.g, job.module_m, job.cap, job.seed);
            set_window(t, 0, through);
            TorTable tq = tor_q(pl, job.module_n, through);
            TorTable tr = tor_r(pl, job.module_n, through);
            set_detail(t, json{{"beta_Q", tq.beta}, {"beta_R", tr.beta}});
        });
    }

    rep.exit_code = exit_code_from_tasks(tasks);
    rep.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::sort(rep.tasks.begin(), rep.tasks.end(), [](const TaskResult& a, const TaskResult& b) { return a.id < b.id; });
    return rep;
}

Report run_command(const std::string& command, const JobSpec& job, const std::vector<std::string>& filter)
{
    if (command == "check-ezd") return cmd_check_ezd(job, filter);
    if (command == "verify") return cmd_verify(job, filter);
    if (command == "series") return cmd_series(job, filter);
    if (command == "tor") return cmd_tor(job, filter);
    fail(ErrKind::parse, "unknown command '" + command + "'");
}

std::string Report::to_machine() const
{
    json j;
    j["command"] = command;
    j["exit_code"] = exit_code;
    json arr = json::array();
    for (const auto& t : tasks) {
        json tj;
        tj["id"] = t.id;
        tj["verdict"] = t.verdict;
        tj["classification"] = t.classification.empty() ? json(nullptr) : json(t.classification);
        tj["window"] = window_json(t);
        tj["detail"] = t.detail.empty() ? json(nullptr) : json::parse(t.detail);
        arr.push_back(std::move(tj));
    }
    j["tasks"] = std::move(arr);
    j["timing_ms"] = timing_ms;
    return j.dump(2) + "\n";
}

std::string Report::to_text() const
{
    std::ostringstream os;
    os << "ezd " << command << "\n";
    for (const auto& t : tasks) {
        os << "  [" << t.verdict << "] " << t.id;
        if (t.has_window) os << "  (window " << t.window_lo << ".." << t.window_hi << ")";
        if (!t.classification.empty()) os << "  <" << t.classification << ">";
        if (!t.detail.empty()) os << "  " << t.detail;
        os << "\n";
    }
    os << "exit code: " << exit_code << "  (" << timing_ms << " ms)\n";
    return os.str();
}

}  // namespace ezd
