#include <chrono>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "jobs.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"rspan: mixed volumes, completions and root counts for monomial subspaces"};
    std::string job_path;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    rspan::jobs::Overrides overrides;
    app.add_option("--job", job_path, "Path to the JSON job file")->required();
    app.add_option("--threads", threads, "Worker threads; changes wall time only")->check(CLI::PositiveNumber);
    app.add_option("--q-max", overrides.q_max, "Override the integrality certificate degree cap");
    app.add_option("--k-max", overrides.k_max, "Override the equivalence witness power cap");
    CLI11_PARSE(app, argc, argv);
    overrides.threads = threads;

    const auto start = std::chrono::steady_clock::now();
    nlohmann::json report;
    int code;
    try {
        code = rspan::jobs::run_to_report(rspan::jobs::parse_job_file(job_path), overrides, report);
    } catch (const rspan::jobs::ValidationError& e) {
        report = {{"error", {{"code", "validation"}, {"message", e.what()}}}};
        code = rspan::jobs::exit_validation;
    }
    std::cout << rspan::jobs::serialize(report);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cerr << "{\"wall_seconds\": " << elapsed.count() << "}\n";
    return code;
}
