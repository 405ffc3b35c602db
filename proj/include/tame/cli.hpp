#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "tame/rees.hpp"

namespace tame::cli {

/// Runs one command; `args` excludes the program name. Returns the exit code:
/// 0 when a verdict was computed, 1 for bad input, 2 when an internal check
/// failed (oracle disagreement, exhausted search budget, failed re-verification).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json binomial_to_json(const rees::ReesBinomial& b);
/// Throws Error(SyntaxError) on a malformed object.
rees::ReesBinomial binomial_from_json(const nlohmann::json& j, std::size_t n, std::size_t circuits);

}  // namespace tame::cli
