#pragma once

#include "latfree/bounds.hpp"
#include "latfree/freesub.hpp"
#include "latfree/order.hpp"

#include <functional>
#include <string>
#include <vector>

namespace latfree {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// every isomorphism type of abelian group of order <= max_order, as parse()
// specs in invariant-factor form (C d1 x C d2 ..., d1 | d2 | ...)
std::vector<std::string> abelian_group_specs(unsigned long max_order);

// formula batteries: closed-form index vs computed maximal order, cyclic
// prime-power corollary, idealizer cross-validation
std::vector<CheckResult> battery_formulas(unsigned long max_order);

// conductor batteries: Jacobinski assembly, index symmetry, left = right
std::vector<CheckResult> battery_conductor(unsigned long max_order,
                                           const std::string& fixtures_dir);

struct TheoremHarnessConfig {
    std::vector<std::string> groups = {"C2", "C3", "C4", "C6", "C2xC2"};
    std::vector<std::size_t> ranks = {1, 2};
    std::vector<unsigned long> denoms = {2, 3, 4};
    std::size_t seeds_per_combo = 17;  // 17 * 6 combos > 100 per group
    std::vector<std::string> tq_groups = {"C2", "C3", "C5"};
    std::size_t tq_seeds = 51;
    unsigned long tq_denom_cycle = 3;  // denominators cycle over 2..denom+1
    std::function<void(const CheckResult&)> on_result;  // optional progress
};

// theorem batteries: gpringmain instances and trace-quotient instances
std::vector<CheckResult> battery_theorems(const TheoremHarnessConfig& cfg = {});

std::string fixtures_directory();  // compiled-in default, overridable by env

}  // namespace latfree
