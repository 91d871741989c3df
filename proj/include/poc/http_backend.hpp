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

#ifndef POC_HTTP_BACKEND_HPP
#define POC_HTTP_BACKEND_HPP

#include <functional>
#include <string>

#include "poc/backend.hpp"

namespace poc {

// Model-server client speaking a small JSON protocol:
//   POST /v1/inpaint  {image, mask, prompt, seed, steps, guidance}
//                     -> {image}
//   POST /v1/segment  {image, prompt, threshold}
//                     -> {detections: [{mask, score, label}]}
// Images and masks travel as base64 PNG (masks 8-bit gray, 255 = set).
struct HttpBackendConfig {
  std::string base_url = "http://127.0.0.1:8080";
  double timeout_s = 120.0;
  // Total attempts per request for retryable failures.
  int max_attempts = 3;
  double backoff_initial_ms = 250.0;
  double backoff_factor = 2.0;
};

class HttpBackend : public InpaintBackend, public SegmentationBackend {
 public:
  explicit HttpBackend(HttpBackendConfig config);

  ImageBuffer inpaint(const InpaintRequest& req) override;
  std::vector<Detection> segment(const SegmentRequest& req) override;

  // Test hook: replaces the sleep between retries.
  void set_sleep_hook(std::function<void(double ms)> hook);

 private:
  std::string post_with_retry(const std::string& path, const std::string& body);

  HttpBackendConfig config_;
  std::function<void(double)> sleep_hook_;
};

}  // namespace poc

#endif  // POC_HTTP_BACKEND_HPP
