/* Copyright 2026 The POC Tools Authors. All Rights Reserved.

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

#ifndef POC_TESTS_SUPPORT_STUB_SERVER_HPP
#define POC_TESTS_SUPPORT_STUB_SERVER_HPP

#include <httplib.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <thread>

namespace poc::testing {

// In-process model-server stand-in. Serves canned response bodies from disk
// (<dir>/inpaint.json and <dir>/segment.json) and can inject failures:
// truncated bodies or error statuses for the first N requests per endpoint.
class StubServer {
 public:
  explicit StubServer(std::filesystem::path canned_dir)
      : canned_dir_(std::move(canned_dir)) {
    server_.Post("/v1/inpaint",
                 [this](const httplib::Request& req, httplib::Response& res) {
                   handle(req, res, "inpaint.json", inpaint_calls_);
                 });
    server_.Post("/v1/segment",
                 [this](const httplib::Request& req, httplib::Response& res) {
                   handle(req, res, "segment.json", segment_calls_);
                 });
    port_ = server_.bind_to_any_port("127.0.0.1");
    if (port_ <= 0) throw std::runtime_error("stub server: bind failed");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~StubServer() {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }

  std::string base_url() const {
    return "http://127.0.0.1:" + std::to_string(port_);
  }

  // The first n requests (across both endpoints) get a truncated body.
  void truncate_first(int n) { truncate_remaining_ = n; }
  // The first n requests answer with this HTTP status instead.
  void fail_first(int n, int status) {
    fail_remaining_ = n;
    fail_status_ = status;
  }

  int inpaint_calls() const { return inpaint_calls_.load(); }
  int segment_calls() const { return segment_calls_.load(); }
  const std::string& last_request_body() const { return last_body_; }

 private:
  void handle(const httplib::Request& req, httplib::Response& res,
              const std::string& file, std::atomic<int>& counter) {
    ++counter;
    last_body_ = req.body;
    if (fail_remaining_ > 0) {
      --fail_remaining_;
      res.status = fail_status_;
      res.set_content("{\"error\":\"injected\"}", "application/json");
      return;
    }
    const std::string body = read_canned(file);
    if (truncate_remaining_ > 0) {
      --truncate_remaining_;
      // Advertise more bytes than we send, then cut the connection: the
      // client sees a short read.
      res.set_content_provider(
          body.size() + 1024, "application/json",
          [body](std::size_t, std::size_t, httplib::DataSink& sink) {
            sink.os.write(body.data(), static_cast<std::streamsize>(body.size() / 2));
            sink.os.flush();
            return false;  // abort mid-body
          });
      return;
    }
    res.set_content(body, "application/json");
  }

  std::string read_canned(const std::string& file) const {
    std::ifstream in(canned_dir_ / file, std::ios::binary);
    if (!in)
      throw std::runtime_error("stub server: missing canned response " + file);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  }

  std::filesystem::path canned_dir_;
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> inpaint_calls_{0};
  std::atomic<int> segment_calls_{0};
  std::atomic<int> truncate_remaining_{0};
  std::atomic<int> fail_remaining_{0};
  int fail_status_ = 500;
  std::string last_body_;
};

}  // namespace poc::testing

#endif  // POC_TESTS_SUPPORT_STUB_SERVER_HPP
