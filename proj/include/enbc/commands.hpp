#ifndef ENBC_KIT_COMMANDS_HPP
#define ENBC_KIT_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "enbc/buchberger.hpp"
#include "enbc/input.hpp"

namespace enbc {

struct CommandOptions {
    std::string format = "text"; // "text" or "json"
    std::optional<std::vector<int>> order_override;
    int bound = 6;
    long long budget = kDefaultPairBudget;
};

struct CommandResult {
    std::string output;
    bool verify_failed = false; // only meaningful for the verify command
};

extern const std::vector<std::string> kCommandNames;

/// Execute one CLI command against a parsed arrangement.  Output is
/// deterministic: sets sorted, polynomial terms in descending term
/// order, JSON keys in fixed order.
CommandResult run_command(const std::string& cmd, const ArrangementInput& input,
                          const CommandOptions& opt = {});

} // namespace enbc

#endif // ENBC_KIT_COMMANDS_HPP
