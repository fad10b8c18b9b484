#ifndef QACM_COMMON_HPP
#define QACM_COMMON_HPP

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qacm {

// Internal inconsistency (failed invariant, precision bookkeeping, consensus
// breakdown after escalation). Always fatal; never downgraded to a warning.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed caller input (bad line index, non-reduced configuration where a
// reduced one is required, mixed field modes, ...).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {
[[noreturn]] inline void check_failed(const char* kind, const char* expr, const char* file,
                                      int line, const std::string& msg) {
    std::ostringstream os;
    os << kind << " failed: " << expr << " at " << file << ":" << line;
    if (!msg.empty()) os << " — " << msg;
    if (std::string(kind) == "input check") throw input_error(os.str());
    throw internal_error(os.str());
}
}  // namespace detail

}  // namespace qacm

// Always-on checks; computations here are exact, so a failed check is a bug,
// not noise to be compiled out.
#define QACM_CHECK(cond, msg)                                                              \
    do {                                                                                   \
        if (!(cond)) ::qacm::detail::check_failed("internal check", #cond, __FILE__, __LINE__, (msg)); \
    } while (0)

#define QACM_INPUT(cond, msg)                                                              \
    do {                                                                                   \
        if (!(cond)) ::qacm::detail::check_failed("input check", #cond, __FILE__, __LINE__, (msg)); \
    } while (0)

#endif
