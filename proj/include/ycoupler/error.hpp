#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ycoupler {

/// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Parameters sit on the boundary where the device degenerates into a mirror
/// or a pass-through (zero transmission or zero splitting).
class DegenerateDevice : public Error {
 public:
  using Error::Error;
};

class NetlistError : public Error {
 public:
  NetlistError(const std::string& what, std::vector<std::string> diagnostics)
      : Error(what), diagnostics_(std::move(diagnostics)) {}
  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

/// Internal feedback operator has an eigenvalue on 1 and the drive excites it.
class DarkStateSingular : public Error {
 public:
  DarkStateSingular(const std::string& what, std::vector<std::complex<double>> supermode)
      : Error(what), supermode_(std::move(supermode)) {}
  const std::vector<std::complex<double>>& supermode() const noexcept { return supermode_; }

 private:
  std::vector<std::complex<double>> supermode_;
};

class IllConditioned : public Error {
 public:
  IllConditioned(const std::string& what, double condition,
                 std::vector<std::complex<double>> supermode)
      : Error(what), condition_(condition), supermode_(std::move(supermode)) {}
  double condition() const noexcept { return condition_; }
  const std::vector<std::complex<double>>& supermode() const noexcept { return supermode_; }

 private:
  double condition_;
  std::vector<std::complex<double>> supermode_;
};

class NotConverged : public Error {
 public:
  NotConverged(const std::string& what, std::size_t bounces)
      : Error(what), bounces_(bounces) {}
  std::size_t bounces() const noexcept { return bounces_; }

 private:
  std::size_t bounces_;
};

}  // namespace ycoupler
