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

#include "poc/http_backend.hpp"

#include <httplib.h>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include "poc/base64.hpp"
#include "poc/errors.hpp"
#include "poc/png_io.hpp"

namespace poc {

using nlohmann::json;

HttpBackend::HttpBackend(HttpBackendConfig config)
    : config_(std::move(config)) {
  sleep_hook_ = [](double ms) {
    std::this_thread::sleep_for(std::chrono::duration<double, std::milli>(ms));
  };
}

void HttpBackend::set_sleep_hook(std::function<void(double ms)> hook) {
  sleep_hook_ = std::move(hook);
}

namespace {

bool retryable_status(int status) {
  return status >= 500 || status == 408 || status == 429;
}

std::string mask_to_b64(const BinaryMask& mask) {
  std::vector<std::uint8_t> rows(mask.bits().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    rows[i] = mask.bits()[i] ? 255 : 0;
  return base64_encode(encode_png_gray8(mask.width(), mask.height(), rows));
}

BinaryMask mask_from_b64(const std::string& text) {
  const GrayImage g = decode_png_gray8(base64_decode(text));
  BinaryMask mask(g.width, g.height);
  for (int y = 0; y < g.height; ++y)
    for (int x = 0; x < g.width; ++x)
      mask.set(x, y, g.rows[static_cast<std::size_t>(y) * g.width + x] >= 128);
  return mask;
}

}  // namespace

std::string HttpBackend::post_with_retry(const std::string& path,
                                         const std::string& body) {
  std::string last_error = "no attempts made";
  bool last_retryable = false;
  double backoff = config_.backoff_initial_ms;

  for (int attempt = 1; attempt <= config_.max_attempts; ++attempt) {
    if (attempt > 1) {
      sleep_hook_(backoff);
      backoff *= config_.backoff_factor;
    }
    // Fresh connection per attempt: request-level isolation, and a broken
    // keep-alive socket cannot poison the retry.
    httplib::Client client(config_.base_url);
    const auto timeout = std::chrono::duration<double>(config_.timeout_s);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);

    httplib::Result res = client.Post(path, body, "application/json");
    if (!res) {
      last_error = path + ": transport error (" +
                   httplib::to_string(res.error()) + ")";
      last_retryable = true;
      continue;
    }
    if (res->status != 200) {
      last_error = path + ": HTTP " + std::to_string(res->status);
      last_retryable = retryable_status(res->status);
      if (!last_retryable) break;
      continue;
    }
    return res->body;
  }
  throw BackendError(last_error, last_retryable);
}

ImageBuffer HttpBackend::inpaint(const InpaintRequest& req) {
  req.validate();
  const json payload{{"image", base64_encode(encode_png_rgb8(req.crop))},
                     {"mask", mask_to_b64(req.mask)},
                     {"prompt", req.prompt},
                     {"seed", req.seed},
                     {"steps", req.steps},
                     {"guidance", req.guidance}};
  const std::string body = post_with_retry("/v1/inpaint", payload.dump());

  json response;
  try {
    response = json::parse(body);
  } catch (const json::exception& e) {
    throw BackendError(std::string("/v1/inpaint: malformed JSON: ") + e.what(),
                       false);
  }
  ImageBuffer out;
  try {
    out = decode_png_rgb8(base64_decode(response.at("image").get<std::string>()));
  } catch (const std::exception& e) {
    throw BackendError(std::string("/v1/inpaint: bad image payload: ") +
                           e.what(),
                       false);
  }
  if (out.width() != req.crop.width() || out.height() != req.crop.height())
    throw BackendError("/v1/inpaint: response dimensions " +
                           std::to_string(out.width()) + "x" +
                           std::to_string(out.height()) +
                           " do not match the request crop",
                       false);
  return out;
}

std::vector<Detection> HttpBackend::segment(const SegmentRequest& req) {
  req.validate();
  const json payload{{"image", base64_encode(encode_png_rgb8(req.crop))},
                     {"prompt", req.prompt},
                     {"threshold", req.detection_threshold}};
  const std::string body = post_with_retry("/v1/segment", payload.dump());

  json response;
  try {
    response = json::parse(body);
  } catch (const json::exception& e) {
    throw BackendError(std::string("/v1/segment: malformed JSON: ") + e.what(),
                       false);
  }
  std::vector<Detection> detections;
  try {
    for (const auto& d : response.at("detections")) {
      Detection det;
      det.mask = mask_from_b64(d.at("mask").get<std::string>());
      det.confidence = d.at("score").get<double>();
      det.label = d.value("label", req.prompt);
      if (det.mask.width() != req.crop.width() ||
          det.mask.height() != req.crop.height())
        throw BackendError("/v1/segment: detection mask dimensions mismatch",
                           false);
      detections.push_back(std::move(det));
    }
  } catch (const BackendError&) {
    throw;
  } catch (const std::exception& e) {
    throw BackendError(std::string("/v1/segment: bad detection payload: ") +
                           e.what(),
                       false);
  }
  std::stable_sort(detections.begin(), detections.end(),
                   [](const Detection& a, const Detection& b) {
                     return a.confidence > b.confidence;
                   });
  return detections;
}

}  // namespace poc
