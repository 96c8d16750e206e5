#include "qlc/util.hpp"

#include <cstdlib>
#include <iostream>
#include <stdexcept>

#include "qlc/errors.hpp"

namespace qlc {

double halton(int i, int base) {
    double f = 1.0, r = 0.0;
    while (i > 0) {
        f /= base;
        r += f * (i % base);
        i /= base;
    }
    return r;
}

double parse_real(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t used = 0;
            const double v = std::stod(text, &used);
            if (used != text.size()) throw Error("trailing characters in number '" + text + "'");
            return v;
        }
        std::size_t used_n = 0, used_d = 0;
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        const double n = std::stod(num, &used_n);
        const double d = std::stod(den, &used_d);
        if (used_n != num.size() || used_d != den.size() || den.empty())
            throw Error("malformed fraction '" + text + "'");
        if (d == 0.0) throw Error("zero denominator in '" + text + "'");
        return n / d;
    } catch (const std::invalid_argument&) {
        throw Error("not a number: '" + text + "'");
    } catch (const std::out_of_range&) {
        throw Error("number out of range: '" + text + "'");
    }
}

LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("QLC_LOG");
        if (!env) return LogLevel::Error;
        const std::string v(env);
        if (v == "debug") return LogLevel::Debug;
        if (v == "info") return LogLevel::Info;
        return LogLevel::Error;
    }();
    return level;
}

void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::Info) std::cerr << "[info] " << msg << "\n";
}

void log_debug(const std::string& msg) {
    if (log_level() >= LogLevel::Debug) std::cerr << "[debug] " << msg << "\n";
}

} // namespace qlc
