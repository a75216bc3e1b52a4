/* Copyright 2026 The qsober Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef QSOBER_ERROR_HPP
#define QSOBER_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsober {

enum class ErrorKind {
  kLawViolation,
  kUnsupportedKind,
  kSpaceMismatch,
  kCapExceeded,
  kNotReflexive,
  kNotTransitive,
  kNotClosed,
  kNotStratified,
  kTargetNotSober,
  kSourceNotStratified,
  kNonLinearQuantale,
  kNotEnoughCoprimes,
  kNoDoubleNegation,
  kMalformedInput,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the engine. `subject` names the violated law,
/// the exceeded cap, or the offending input location; `witness` carries the
/// element or point indices that exhibit the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string subject, std::string message,
        std::vector<std::size_t> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& subject() const noexcept { return subject_; }
  /// The message without the kind and subject prefix.
  const std::string& message() const noexcept { return message_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string subject_;
  std::string message_;
  std::vector<std::size_t> witness_;
};

}  // namespace qsober

#endif  // QSOBER_ERROR_HPP
