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


#include "graphsum/transport.hpp"

#include <cmath>
#include <thread>

#include "httplib.h"

namespace graphsum {

std::chrono::milliseconds RetryPolicy::backoff_after(int attempt) const {
  const double factor = std::pow(multiplier, attempt - 1);
  return std::chrono::milliseconds(
      static_cast<std::int64_t>(static_cast<double>(backoff_base.count()) * factor));
}

Sleeper real_sleeper() {
  return [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
}

RequestGate::RequestGate(std::size_t max_in_flight, std::size_t per_minute_cap,
                         Now now, Sleeper sleep)
    : max_in_flight_(max_in_flight == 0 ? 1 : max_in_flight),
      per_minute_cap_(per_minute_cap),
      now_(std::move(now)),
      sleep_(std::move(sleep)) {}

RequestGate::Permit::~Permit() {
  if (gate_ != nullptr) gate_->release();
}

RequestGate::Permit RequestGate::acquire() {
  using std::chrono::minutes;
  std::unique_lock lock(mu_);
  for (;;) {
    cv_.wait(lock, [&] { return in_flight_ < max_in_flight_; });
    if (per_minute_cap_ == 0) break;
    const auto now = now_();
    while (!starts_.empty() && now - starts_.front() >= minutes(1)) {
      starts_.pop_front();
    }
    if (starts_.size() < per_minute_cap_) {
      starts_.push_back(now);
      break;
    }
    const auto wait = std::chrono::ceil<std::chrono::milliseconds>(
        starts_.front() + minutes(1) - now);
    lock.unlock();
    sleep_(wait);
    lock.lock();
  }
  ++in_flight_;
  return Permit(this);
}

void RequestGate::release() {
  {
    std::lock_guard lock(mu_);
    --in_flight_;
  }
  cv_.notify_one();
}

std::size_t RequestGate::in_flight() const {
  std::lock_guard lock(mu_);
  return in_flight_;
}

namespace {

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

SplitUrl split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw InvalidArgument("URL without scheme: " + url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

class HttplibTransport final : public HttpTransport {
 public:
  explicit HttplibTransport(std::chrono::seconds timeout) : timeout_(timeout) {}

  HttpResponse post(const std::string& url, const std::string& body,
                    const HttpHeaders& headers) override {
    const auto parts = split_url(url);
    httplib::Client client(parts.origin);
    client.set_connection_timeout(timeout_);
    client.set_read_timeout(timeout_);
    client.set_write_timeout(timeout_);
    httplib::Headers h;
    for (const auto& [key, value] : headers) h.emplace(key, value);
    auto result = client.Post(parts.path, h, body, "application/json");
    if (!result) return HttpResponse{0, httplib::to_string(result.error())};
    return HttpResponse{result->status, result->body};
  }

 private:
  std::chrono::seconds timeout_;
};

}  // namespace

std::shared_ptr<HttpTransport> make_http_transport(std::chrono::seconds timeout) {
  return std::make_shared<HttplibTransport>(timeout);
}

void raise_for_status(const HttpResponse& response, const std::string& what) {
  const int status = response.status;
  if (status >= 200 && status < 300) return;
  if (status == 401 || status == 403) {
    throw AuthError(what + ": authentication rejected", status);
  }
  const bool retryable = status == 0 || status == 408 || status == 429 || status >= 500;
  if (status == 0) throw TransportError(what + " failed: " + response.body, status, 1, retryable);
  throw TransportError(what + " failed with HTTP " + std::to_string(status), status, 1, retryable);
}

}  // namespace graphsum
