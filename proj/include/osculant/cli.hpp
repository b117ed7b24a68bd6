#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace osc::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kSchema = "osculant/1";

/// Exit codes: 0 checks passed (or informational command), 1 a check
/// failed, 2 usage or config error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string sha256_hex(std::string_view data);

} // namespace osc::cli
