#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cocite {

// Malformed input data: bad CSV structure, bad header, a record that
// violates a file-format invariant. Carries the 1-based line number when
// the failure can be pinned to one.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &msg, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

// A request that cannot be honored: invalid parameter, unavailable measure,
// degenerate data for the requested computation.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Power iteration hit max_iter before the tolerance was reached. Carries the
// last iterate and its step residual so the caller may accept or retry.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string &msg, std::vector<double> last_iterate,
                     int iterations, double residual)
        : std::runtime_error(msg), last_iterate_(std::move(last_iterate)),
          iterations_(iterations), residual_(residual) {}

    const std::vector<double> &last_iterate() const noexcept { return last_iterate_; }
    int iterations() const noexcept { return iterations_; }
    double residual() const noexcept { return residual_; }

  private:
    std::vector<double> last_iterate_;
    int iterations_;
    double residual_;
};

} // namespace cocite
