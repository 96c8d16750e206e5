#ifndef QLC_UTIL_HPP
#define QLC_UTIL_HPP

#include <string>

namespace qlc {

// Element i (1-based) of the base-b van der Corput / Halton sequence.
double halton(int i, int base);

// Parses a real number given as a decimal ("0.25", "-1e-3") or a simple
// fraction ("-30/7"), so rational parameters survive without decimal loss.
// Throws qlc::Error on malformed input.
double parse_real(const std::string& text);

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

// Level from the QLC_LOG environment variable (error|info|debug; default error).
LogLevel log_level();

void log_info(const std::string& msg);
void log_debug(const std::string& msg);

} // namespace qlc

#endif
