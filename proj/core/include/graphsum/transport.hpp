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

#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "graphsum/error.hpp"

namespace graphsum {

// Attempt budget and exponential backoff between attempts:
// wait = backoff_base * multiplier^(attempt - 1).
struct RetryPolicy {
  int max_attempts = 3;
  std::chrono::milliseconds backoff_base{1000};
  double multiplier = 2.0;

  std::chrono::milliseconds backoff_after(int attempt) const;
};

using Sleeper = std::function<void(std::chrono::milliseconds)>;

Sleeper real_sleeper();

// Runs `call` until it succeeds, throws a non-retryable error, or the budget
// is exhausted. Retryable TransportErrors are rethrown with the final
// attempt count; AuthError is never retried.
template <typename Call>
auto with_retry(const RetryPolicy& policy, const Sleeper& sleep, Call&& call)
    -> decltype(call()) {
  const int budget = policy.max_attempts < 1 ? 1 : policy.max_attempts;
  for (int attempt = 1;; ++attempt) {
    try {
      return call();
    } catch (const AuthError&) {
      throw;
    } catch (const TransportError& e) {
      if (!e.retryable()) {
        throw TransportError(e.message(), e.status(), attempt, false);
      }
      if (attempt >= budget) {
        throw TransportError("retries exhausted: " + e.message(), e.status(), attempt, true);
      }
      sleep(policy.backoff_after(attempt));
    }
  }
}

// Bounds concurrent requests and, optionally, requests started per rolling
// minute. acquire() blocks; the returned permit releases on destruction.
class RequestGate {
 public:
  using Clock = std::chrono::steady_clock;
  using Now = std::function<Clock::time_point()>;

  // per_minute_cap == 0 disables the rate cap.
  explicit RequestGate(std::size_t max_in_flight, std::size_t per_minute_cap = 0,
                       Now now = [] { return Clock::now(); },
                       Sleeper sleep = real_sleeper());

  class Permit {
   public:
    Permit(Permit&& other) noexcept : gate_(std::exchange(other.gate_, nullptr)) {}
    Permit& operator=(Permit&&) = delete;
    Permit(const Permit&) = delete;
    ~Permit();

   private:
    friend class RequestGate;
    explicit Permit(RequestGate* gate) : gate_(gate) {}
    RequestGate* gate_;
  };

  Permit acquire();

  std::size_t in_flight() const;
  std::size_t max_in_flight() const { return max_in_flight_; }

 private:
  void release();

  const std::size_t max_in_flight_;
  const std::size_t per_minute_cap_;
  Now now_;
  Sleeper sleep_;

  mutable std::mutex mu_;
  std::condition_variable cv_;
  std::size_t in_flight_ = 0;
  std::deque<Clock::time_point> starts_;
};

struct HttpResponse {
  int status = 0;
  std::string body;
};

using HttpHeaders = std::vector<std::pair<std::string, std::string>>;

// Single POST; implementations never retry. A connection failure surfaces as
// HttpResponse{status = 0}.
class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  virtual HttpResponse post(const std::string& url, const std::string& body,
                            const HttpHeaders& headers) = 0;
};

// cpp-httplib backed transport. Accepts http:// and (when built with OpenSSL)
// https:// URLs.
std::shared_ptr<HttpTransport> make_http_transport(
    std::chrono::seconds timeout = std::chrono::seconds(60));

// Maps a response to an exception: 401/403 -> AuthError; 0, 408, 429 and
// 5xx -> retryable TransportError; other non-2xx -> non-retryable.
void raise_for_status(const HttpResponse& response, const std::string& what);

}  // namespace graphsum
