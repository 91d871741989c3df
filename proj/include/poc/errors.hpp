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

#ifndef POC_ERRORS_HPP
#define POC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace poc {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Unknown catalog identifier passed to load_catalog().
class CatalogNotFound : public Error {
 public:
  using Error::Error;
};

// A label value is outside the active label convention.
class LabelValueError : public Error {
 public:
  using Error::Error;
};

// Raster dimensions do not match where they must.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Region sampling could not produce an acceptable region.
class NoValidRegion : public Error {
 public:
  using Error::Error;
};

// The segmenter did not find the prompted object in the inpainted crop,
// or the detected mask was too small.
class GenerationRejected : public Error {
 public:
  using Error::Error;
};

// Inpainting / segmentation backend failure. Retryable errors are transport
// level problems worth another attempt; fatal ones are contract violations.
class BackendError : public Error {
 public:
  BackendError(const std::string& msg, bool retryable)
      : Error(msg), retryable_(retryable) {}
  bool retryable() const { return retryable_; }

 private:
  bool retryable_;
};

// Metric inputs with no positives or no negatives after dropping ignores.
class DegenerateLabels : public Error {
 public:
  using Error::Error;
};

// Invalid prompt input (e.g. empty object prompt).
class PromptError : public Error {
 public:
  using Error::Error;
};

// Configuration file or CLI override failed schema validation.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// File system / encoding problems.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace poc

#endif  // POC_ERRORS_HPP
