#pragma once

#include "octacomb/qsym.hpp"
#include "octacomb/signed_perm.hpp"

#include <map>
#include <string>
#include <vector>

namespace octacomb {

struct VerifyOptions {
    int workers = 0;         // 0 picks hardware concurrency
    bool canonical = false;  // suppress wall times for byte-identical output
};

struct VerificationReport {
    std::string check;
    int n = 0;
    bool pass = false;
    std::string lhs_summary;
    std::string rhs_summary;
    std::vector<std::string> counterexamples;
    double elapsed_ms = 0;
    std::map<std::string, std::string> detail;

    std::string status() const { return pass ? "pass" : "fail"; }
    std::string json_line() const;
};

struct CheckInfo {
    std::string name;
    std::vector<int> default_ranks;
    VerificationReport (*run)(int n, const VerifyOptions& opts);
};

const std::vector<CheckInfo>& check_registry();
const CheckInfo* find_check(const std::string& name);
VerificationReport run_check(const std::string& name, int n, const VerifyOptions& opts);

// Comparison primitives shared by the checks; exposed so the harness
// self-tests can corrupt one side and watch the status flip.
VerificationReport compare_qsym(const std::string& check, int n, const QSymA& lhs,
                                const QSymA& rhs);
VerificationReport compare_qsym(const std::string& check, int n, const QSymB& lhs,
                                const QSymB& rhs);
using KeyedCounts = std::map<std::string, long long>;
VerificationReport compare_counts(const std::string& check, int n, const KeyedCounts& lhs,
                                  const KeyedCounts& rhs);

}  // namespace octacomb
