#ifndef E7_CLI_HPP
#define E7_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "e7/report.hpp"

namespace e7::cli {

// Exit codes
constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudgetRefused = 3;

// Report record in the documented JSON layout (wall_time included).
nlohmann::json report_json(const VerificationReport& rep);

// args excludes the program name. Human text goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace e7::cli

#endif  // E7_CLI_HPP
