#pragma once

#include <cstdint>
#include <vector>

#include "qsh/factorization.hpp"

namespace qsh {

struct VerifyConfig {
    int max_weight = 5;
    int q_degree = 8;
    std::uint64_t seed = 0; // drives the random triples of the associativity sweeps
};

/// Runs the invariant suite of every module up to cfg.max_weight. Checks are
/// independent and may run concurrently; results come back in a fixed order.
std::vector<CheckResult> run_verify(const VerifyConfig& cfg);

} // namespace qsh
