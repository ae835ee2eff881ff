#pragma once

#include <functional>
#include <string>

namespace synthtab::log {

using Sink = std::function<void(const std::string&)>;

// Replaces the warning sink (default writes "warning: ..." to stderr).
// Returns the previous sink so tests can restore or capture messages.
Sink set_sink(Sink sink);

void warn(const std::string& message);

}  // namespace synthtab::log
