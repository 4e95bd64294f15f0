#pragma once

#include "sbarlab/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sbarlab {

struct SuiteOptions {
    std::optional<int> max_degree; // suite-specific default when unset
    std::uint64_t seed = 1;
    int workers = 0; // 0: SBAR_WORKERS, else hardware concurrency
};

const std::vector<std::string>& suite_names();

/// Default degree window of a suite.
int default_max_degree(const std::string& suite);

/// Runs a suite; throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// Worker count from SBAR_WORKERS, falling back to the hardware concurrency.
int worker_count(int requested);

} // namespace sbarlab
