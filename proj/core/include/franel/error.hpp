#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace franel {

// Integer overflow detected in the Farey next-term recurrence. Thrown, never
// silently wrapped.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Adaptive quadrature failed to reach the requested relative tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved_rel_tol)
      : std::runtime_error(what), achieved_(achieved_rel_tol) {}
  double achieved_tolerance() const noexcept { return achieved_; }

 private:
  double achieved_;
};

// A fit was asked for an order m whose profile is neither cached nor computable
// under the current policy.
class MissingProfileError : public std::runtime_error {
 public:
  explicit MissingProfileError(std::uint64_t m)
      : std::runtime_error("no profile available for m=" + std::to_string(m)), m_(m) {}
  std::uint64_t order() const noexcept { return m_; }

 private:
  std::uint64_t m_;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& what, std::string path)
      : std::runtime_error(what + ": " + path), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// Cache file failed its checksum; the caller is expected to recompute.
class ChecksumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace franel
