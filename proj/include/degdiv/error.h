// Copyright 2026 The degdiv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DEGDIV_ERROR_H_
#define DEGDIV_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace degdiv {

enum class ErrorCode {
  kInvalidGraph,
  kInvalidSet,
  kInvalidPair,
  kInvalidParams,
  kInvalidDomain,
  kInvalidWitness,
  kInsufficientTrials,
  kTooLarge,
  kNotDiverse,
  kInsufficientDegree,
  kConstructionFailed,
  kNotConvenient,
  kSeparationFailed,
  kRealizationFailed,
  kNotPrivate,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kInvalidSet: return "InvalidSet";
    case ErrorCode::kInvalidPair: return "InvalidPair";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kInvalidDomain: return "InvalidDomain";
    case ErrorCode::kInvalidWitness: return "InvalidWitness";
    case ErrorCode::kInsufficientTrials: return "InsufficientTrials";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotDiverse: return "NotDiverse";
    case ErrorCode::kInsufficientDegree: return "InsufficientDegree";
    case ErrorCode::kConstructionFailed: return "ConstructionFailed";
    case ErrorCode::kNotConvenient: return "NotConvenient";
    case ErrorCode::kSeparationFailed: return "SeparationFailed";
    case ErrorCode::kRealizationFailed: return "RealizationFailed";
    case ErrorCode::kNotPrivate: return "NotPrivate";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace degdiv

#endif  // DEGDIV_ERROR_H_
