#pragma once

#include <stdexcept>
#include <string>

namespace loggp {

/// Invalid argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Requested a traveling wave with c^2 >= 2*lambda, where only constants exist.
class VelocityAboveThreshold : public std::runtime_error {
public:
  VelocityAboveThreshold(double c, double lambda)
      : std::runtime_error("no non-constant traveling wave: c^2 = " +
                           std::to_string(c * c) + " >= 2*lambda = " +
                           std::to_string(2.0 * lambda)),
        c(c), lambda(lambda) {}
  double c;
  double lambda;
};

/// g_c has no interior root (c = 0: the modulus never dips below 1 except to 0).
class NoInteriorRoot : public std::runtime_error {
public:
  explicit NoInteriorRoot(const std::string& what) : std::runtime_error(what) {}
};

/// Asked the c != 0 modulus solver for the c = 0 branch.
class WrongBranch : public std::runtime_error {
public:
  explicit WrongBranch(const std::string& what) : std::runtime_error(what) {}
};

/// Pair-box separation too small: profile tails have not decayed at the seam.
class GluingError : public std::runtime_error {
public:
  explicit GluingError(const std::string& what) : std::runtime_error(what) {}
};

/// Hermite basis has not decayed at the grid edges.
class BasisTruncationError : public std::runtime_error {
public:
  explicit BasisTruncationError(const std::string& what)
      : std::runtime_error(what) {}
};

/// |v| == 1 almost everywhere: the potential-energy ratio is 0/0.
class TrivialModulus : public std::runtime_error {
public:
  explicit TrivialModulus(const std::string& what)
      : std::runtime_error(what) {}
};

/// Malformed input file (CSV or run config).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid config with invalid or missing values; the message
/// names the offending key.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace loggp
