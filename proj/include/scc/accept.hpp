#ifndef SCC_ACCEPT_HPP
#define SCC_ACCEPT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace scc {

// One verdict line of the acceptance harness. `detail` carries the computed
// counts and values and is deterministic for a fixed seed; wall time is
// reported separately so pass/fail text stays byte-identical across runs on
// different machines (only an exceeded budget changes the verdict).
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Criteria are numbered 1..10; names are stable identifiers for reports.
int acceptance_criteria_count();
std::string criterion_name(int id);  // throws std::invalid_argument on unknown id

// Suite names: gauss-bonnet {1}, length-dp {2,3}, dehn {4,5}, params {6,10},
// e1 {7,8}, aperiodic {9}, all {1..10}. Unknown names throw.
std::vector<std::string> acceptance_suite_names();
std::vector<int> acceptance_suite(const std::string& name);

// Runs one criterion; never throws for known ids (failures inside the body
// become a failed result carrying the exception text). Wall-clock budgets are
// pinned inside and enforced as part of the verdict.
CriterionResult run_criterion(int id, std::uint64_t seed);

// Runs the given criteria, sharded across workers (SCC_THREADS caps the
// count), merged order-independently and sorted by id.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, std::uint64_t seed);

}  // namespace scc

#endif
