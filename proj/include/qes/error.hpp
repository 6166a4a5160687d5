// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QES_ERROR_HPP_
#define QES_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace qes {

/// Bad argument to an operation (negative j, zero polynomial, ...).
class invalid_argument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Model parameters outside the region where the construction is defined.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A recurrence weight vanished before the truncation index.
class degenerate_parameter_error : public domain_error {
 public:
  using domain_error::domain_error;
};

namespace detail {

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw invalid_argument(msg);
}

inline void require_domain(bool ok, const std::string& msg) {
  if (!ok) throw domain_error(msg);
}

}  // namespace detail
}  // namespace qes

#endif  // QES_ERROR_HPP_
