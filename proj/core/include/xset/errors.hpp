#ifndef XSET_ERRORS_HPP
#define XSET_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xset {

// A window or limit exceeds a set's universe, or a requested universe
// exceeds the configured capacity.
struct RangeError : std::runtime_error {
  explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

// An argument violates an operation's domain (h = 0, mismatched moduli,
// empty residue family, ...).
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A checked statement's hypothesis fails before the inequality is even
// evaluated.  Distinct from an inequality failure.
struct HypothesisError : std::invalid_argument {
  explicit HypothesisError(const std::string& what) : std::invalid_argument(what) {}
};

// A proven statement came out false.  Always indicates a software defect,
// never new mathematics; the message carries the witness.
struct TheoremViolation : std::logic_error {
  explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

// Malformed or truncated set file.
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Exponent fit requested with fewer than two positive checkpoints.
// Carries the raw table so callers can still report it.
struct FitUndefinedError : std::runtime_error {
  std::vector<std::pair<unsigned long long, unsigned long long>> table;
  FitUndefinedError(const std::string& what,
                    std::vector<std::pair<unsigned long long, unsigned long long>> t)
      : std::runtime_error(what), table(std::move(t)) {}
};

}  // namespace xset

#endif
