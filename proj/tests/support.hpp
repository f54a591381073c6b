#pragma once

// Test-only helpers: oracles that do not go through the library code paths.

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace testing {

inline std::int64_t ulp_distance(double a, double b) {
    auto ordered = [](double v) {
        std::int64_t i;
        std::memcpy(&i, &v, sizeof v);
        return i < 0 ? std::numeric_limits<std::int64_t>::min() - i : i;
    };
    const std::int64_t d = ordered(a) - ordered(b);
    return d < 0 ? -d : d;
}

inline double central_difference(const std::function<double(double)>& f, double x, double step) {
    return (f(x + step) - f(x - step)) / (2.0 * step);
}

// Plain long-double bisection for an increasing function, 200 halvings.
inline long double bisect(const std::function<long double(long double)>& f, long double lo, long double hi) {
    for (int i = 0; i < 200; ++i) {
        const long double mid = (lo + hi) / 2;
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

// Textbook binary entropy in long double.
inline long double entropy_ld(long double x) {
    if (x == 0 || x == 1) {
        return 0;
    }
    return -x * std::log(x) - (1 - x) * std::log1p(-x);
}

struct CommandResult {
    int exit_code;
    std::string out;
};

// Runs a shell command, capturing standard output.
inline CommandResult run_command(const std::string& command) {
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("popen failed: " + command);
    }
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace testing
