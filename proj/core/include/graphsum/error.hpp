// Copyright 2026 The graphsum Authors.
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


#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace graphsum {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (range, size mismatch, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed input text. `line` is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A remote call failed. `status` is the HTTP status or 0 for a connection
// failure; `attempts` counts how many tries were made before giving up.
class TransportError : public Error {
 public:
  TransportError(const std::string& message, int status, int attempts,
                 bool retryable)
      : Error(message + " (status " + std::to_string(status) + ", after " +
              std::to_string(attempts) + " attempt" +
              (attempts == 1 ? "" : "s") + ")"),
        message_(message),
        status_(status),
        attempts_(attempts),
        retryable_(retryable) {}

  // The message without the status/attempt suffix.
  const std::string& message() const { return message_; }
  int status() const { return status_; }
  int attempts() const { return attempts_; }
  bool retryable() const { return retryable_; }

 private:
  std::string message_;
  int status_;
  int attempts_;
  bool retryable_;
};

// 401/403 from a provider. Never retried.
class AuthError : public TransportError {
 public:
  AuthError(const std::string& message, int status)
      : TransportError(message, status, 1, false) {}
};

// Error raised inside run_pipeline, annotated with the failing stage and the
// document id.
class StageError : public Error {
 public:
  StageError(std::string stage, std::string document_id,
             const std::string& cause)
      : Error("[" + document_id + "] " + stage + ": " + cause),
        stage_(std::move(stage)),
        document_id_(std::move(document_id)) {}

  const std::string& stage() const { return stage_; }
  const std::string& document_id() const { return document_id_; }

 private:
  std::string stage_;
  std::string document_id_;
};

}  // namespace graphsum
