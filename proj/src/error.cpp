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

#include "qsober/error.hpp"

#include <utility>

namespace qsober {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kLawViolation: return "LawViolation";
    case ErrorKind::kUnsupportedKind: return "UnsupportedKind";
    case ErrorKind::kSpaceMismatch: return "SpaceMismatch";
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kNotReflexive: return "NotReflexive";
    case ErrorKind::kNotTransitive: return "NotTransitive";
    case ErrorKind::kNotClosed: return "NotClosed";
    case ErrorKind::kNotStratified: return "NotStratified";
    case ErrorKind::kTargetNotSober: return "TargetNotSober";
    case ErrorKind::kSourceNotStratified: return "SourceNotStratified";
    case ErrorKind::kNonLinearQuantale: return "NonLinearQuantale";
    case ErrorKind::kNotEnoughCoprimes: return "NotEnoughCoprimes";
    case ErrorKind::kNoDoubleNegation: return "NoDoubleNegation";
    case ErrorKind::kMalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string subject, std::string message,
             std::vector<std::size_t> witness)
    : std::runtime_error(std::string(to_string(kind)) + "(" + subject + "): " + message),
      kind_(kind),
      subject_(std::move(subject)),
      message_(std::move(message)),
      witness_(std::move(witness)) {}

}  // namespace qsober
