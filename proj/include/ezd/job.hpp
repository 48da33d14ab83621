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

#include <string>
#include <vector>

#include "ezd/series.hpp"

namespace ezd {

/// A resolved job: the ring, the distinguished elements, the named modules,
/// and the run parameters. Built from a JSON job file with sections
/// ring / f / g / modules plus cap and seed; rationals are written as "p/q"
/// strings so nothing is ever parsed through floating point.
struct JobSpec {
    AlgebraPtr ring;
    bool has_f = false, has_g = false;
    Vec f, g;
    FDModule module_m, module_n;
    bool has_m = false, has_n = false;
    int cap = 8;
    std::uint64_t seed = 0;
    std::vector<std::string> default_tasks;
};

/// One verdict line of a report. verdict is one of
/// pass | fail | hypothesis-fail | not-applicable | unverifiable | skipped;
/// classification (for non-pass verdicts) is one of
/// parse | precondition | hypothesis | theorem-violation | truncation-boundary.
struct TaskResult {
    std::string id;
    std::string verdict;
    std::string classification;
    std::string detail;  // compact JSON fragment (machine) / free text (human)
    bool has_window = false;
    int window_lo = 0, window_hi = 0;
};

struct Report {
    std::string command;
    std::vector<TaskResult> tasks;  // sorted by task id
    int exit_code = 0;
    long long timing_ms = 0;

    std::string to_machine() const;  // JSON, deterministic modulo timing_ms
    std::string to_text() const;
};

/// Parses and resolves a job file. Overrides (cap/seed) win over the file.
/// Parse failures carry the byte offset; ring validation failures name the
/// failing triple.
JobSpec load_job(const std::string& json_text, int cap_override = -1, long long seed_override = -1);

/// Command surfaces. Exit codes: 0 all-pass, 1 hypothesis failures only,
/// 2 theorem violation, 3 input error.
Report cmd_check_ezd(const JobSpec& job, const std::vector<std::string>& task_filter = {});
Report cmd_verify(const JobSpec& job, const std::vector<std::string>& task_filter = {});
Report cmd_series(const JobSpec& job, const std::vector<std::string>& task_filter = {});
Report cmd_tor(const JobSpec& job, const std::vector<std::string>& task_filter = {});

Report run_command(const std::string& command, const JobSpec& job,
                   const std::vector<std::string>& task_filter = {});

}  // namespace ezd
