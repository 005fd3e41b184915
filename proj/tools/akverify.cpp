// akverify: run the verification catalog for one (n, r, m) configuration.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error, 3 a size cap or the time
// budget stopped a check.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "akschur/report.hpp"

int main(int argc, char** argv) {
    using namespace akschur;
    RunConfig cfg;
    std::string out_path;
    std::string exactness = "both";
    bool list = false;
    bool no_timing = false;

    CLI::App app{"Exact verification harness for Ariki-Koike algebras, cyclotomic q-Schur operators and shifted actions"};
    app.add_option("--n", cfg.n, "rank n")->capture_default_str();
    app.add_option("--r", cfg.r, "number of cyclotomic parameters r")->capture_default_str();
    app.add_option("--m-parts", cfg.m_parts, "block sizes m_1 ... m_r")->delimiter(',')->capture_default_str();
    app.add_option("--prime", cfg.prime, "prime for specializations (> 2^20)")->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for specialization points and random samples")->capture_default_str();
    app.add_option("--suite", cfg.suites, "suite to run (repeatable): identities, modules, shifted, schur, lie, q1");
    app.add_option("--check", cfg.ids, "single check id to run (repeatable)");
    app.add_option("--exactness", exactness, "exact | specialized | both")
        ->check(CLI::IsMember({"exact", "specialized", "both"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write the JSON report here ('-' for stdout)");
    app.add_option("--time-budget", cfg.time_budget, "seconds; remaining checks are skipped after this");
    app.add_option("--workers", cfg.workers, "worker threads (default AKSCHUR_WORKERS or all cores)");
    app.add_option("--dense-cap", cfg.dense_cap, "largest dense dimension for double centralizer checks")
        ->capture_default_str();
    app.add_flag("--list-checks", list, "print the check catalog and exit");
    app.add_flag("--no-timing", no_timing, "omit timings from the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (list) {
        for (const auto& e : catalog())
            std::cout << std::left << std::setw(32) << e.id << std::setw(12) << e.suite << std::setw(19) << e.mode
                      << e.anchor << "\n";
        return 0;
    }

    if (exactness == "exact") cfg.exactness = Exactness::exact;
    if (exactness == "specialized") cfg.exactness = Exactness::specialized;
    if (auto err = validate(cfg); !err.empty()) {
        std::cerr << "akverify: " << err << "\n";
        return 2;
    }

    const auto rep = run(cfg);
    std::ostream& human = out_path == "-" ? std::cerr : std::cout;
    for (const auto& c : rep.checks) {
        human << std::left << std::setw(13) << ("[" + to_string(c.status) + "]") << std::setw(32) << c.id;
        if (c.values.contains("instances")) human << c.values["instances"].get<std::size_t>() << " instances";
        if (!c.detail.empty()) human << "  " << c.detail;
        human << "\n";
    }
    const auto j = rep.to_json(!no_timing);
    human << "summary: " << j["summary"].dump() << "\n";
    if (out_path == "-") {
        std::cout << j.dump(2) << "\n";
    } else if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "akverify: cannot write " << out_path << "\n";
            return 2;
        }
        f << j.dump(2) << "\n";
    }
    return rep.exit_code();
}
