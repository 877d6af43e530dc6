// SPDX-License-Identifier: Apache-2.0

#ifndef TCHOW_ERRORS_HPP
#define TCHOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tchow {

enum class ErrorCode {
  InvalidArgument = 1,
  NotContained,
  RankMismatch,
  EmptyPolyhedron,
  NonFanTails,
  InvalidComplex,
  NonUniqueFace,
  NotMarked,
  OutOfRange,
  NonIntegralRedirect,
  IncompleteFan,
  NonSmoothBase,
  InconsistentFiltrations,
  UnknownFixture,
  Parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tchow

#endif
