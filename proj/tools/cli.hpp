#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace gluckkit::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kExpectationFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kInternalError = 3;

// Runs one command line (without the program name). The report goes to
// `out` unless --output is given; diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Path/value rows used by the TSV writer: rationals become "n/d",
// Laurent pair lists become their human form, scalars print as-is.
std::map<std::string, std::string> flatten(const nlohmann::json& doc);

}  // namespace gluckkit::cli
