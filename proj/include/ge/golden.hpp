#ifndef GE_GOLDEN_HPP
#define GE_GOLDEN_HPP

#include <functional>
#include <string>
#include <vector>

#include "ge/operator_core.hpp"

namespace ge {

/// Inputs shared by the golden checks. A non-empty `corrupted_state` names a
/// builtin that is perturbed on lookup (used to test failure reporting).
struct GoldenContext
{
    std::string corrupted_state;

    QuantumState state(const std::string& name) const;
};

struct GoldenOutcome
{
    bool pass = false;
    std::string detail;
};

struct GoldenCheck
{
    std::string id;
    std::string description;
    std::function<GoldenOutcome(const GoldenContext&)> run;
};

/// Reference values for the published table, in a fixed order.
const std::vector<GoldenCheck>& golden_checks();

/// Runs one check, turning exceptions into failures.
GoldenOutcome run_golden(const GoldenCheck& check, const GoldenContext& context);

}  // namespace ge

#endif  // GE_GOLDEN_HPP
