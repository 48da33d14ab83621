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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ezd/error.hpp"
#include "ezd/job.hpp"

namespace {

struct CommonOpts {
    std::string input;
    int cap = -1;
    long long seed = -1;
    std::string format = "text";
    std::vector<std::string> tasks;
};

void add_common(CLI::App* cmd, CommonOpts& opts)
{
    cmd->add_option("--input", opts.input, "job file (JSON)")->required();
    cmd->add_option("--cap", opts.cap, "degree cap (default from the job file, else 8)");
    cmd->add_option("--seed", opts.seed, "seed for representative choices (default 0)");
    cmd->add_option("--format", opts.format, "text | machine")->check(CLI::IsMember({"text", "machine"}));
    cmd->add_option("--tasks", opts.tasks, "run only the named tasks")->delimiter(',');
}

int run(const std::string& command, const CommonOpts& opts)
{
    std::ifstream in(opts.input);
    if (!in) {
        std::cerr << "input error: cannot open '" << opts.input << "'\n";
        return 3;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    ezd::JobSpec job = ezd::load_job(buf.str(), opts.cap, opts.seed);
    ezd::Report rep = ezd::run_command(command, job, opts.tasks);
    std::cout << (opts.format == "machine" ? rep.to_machine() : rep.to_text());
    return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact zero divisors: Eisenbud operators, mapping cones and Poincare series, verified exactly"};
    app.require_subcommand(1);

    CommonOpts opts;
    CLI::App* c1 = app.add_subcommand("check-ezd", "exact-pair and short-ring Hilbert checks");
    CLI::App* c2 = app.add_subcommand("verify", "full pipeline verification for one instance");
    CLI::App* c3 = app.add_subcommand("series", "Poincare/Hilbert series, inequalities, growth diagnostics");
    CLI::App* c4 = app.add_subcommand("tor", "Tor tables over Q and R");
    for (CLI::App* c : {c1, c2, c3, c4}) add_common(c, opts);

    CLI11_PARSE(app, argc, argv);

    std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, opts);
    }
    catch (const ezd::Error& e) {
        std::cerr << e.what() << "\n";
        switch (e.kind()) {
            case ezd::ErrKind::theorem_violation: return 2;
            case ezd::ErrKind::hypothesis: return 1;
            default: return 3;
        }
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
