#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rotalg::cli {

inline constexpr const char* kSchemaVersion = "rotalg-report/1";
inline constexpr const char* kLibraryVersion = "0.1.0";

// Fully resolved run parameters; unknown keys are rejected at parse time.
struct RunConfig {
    std::string verb;
    std::string theta = "golden";
    std::string gamma = "one_plus_z_sq";
    std::string zeros;                 // optional explicit zero set
    std::string theta2, gamma2, zeros2;  // classify second spec
    std::string relation = "iso";      // classify: iso | morita
    double lambda = 1.0;
    int k = 1;
    double epsilon = 0.0;              // rieffel; <= 0 selects the default rule
    long long n = 4096;
    long long N = 200;
    int q = 89;
    int qmax = 10;
    int cf_depth = 64;
    int horizon = 64;
    int grid = 10000;
    int test_degree = 8;
    int m_samples = 10000;
    int narcs = 16;
    std::string betas = "0";
    std::string schedule;              // comma list of n, empty = 2^10..2^16
    std::string check = "recurrence";  // commutant sub-check
    int window = 50;
    std::string direction = "forward";
    std::uint64_t seed = 42;
    int threads = 1;
    std::string out;                   // output path; empty = stdout
    std::string format = "json";       // json | csv
};

// Parse argv-style arguments and execute.  Exit codes: 0 success, 2 config
// error, 3 precondition violation, 4 numerical non-convergence/precision.
int run(const std::vector<std::string>& args);
int run(const RunConfig& config, std::string* captured_output = nullptr);

}  // namespace rotalg::cli
