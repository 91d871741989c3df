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

#include "poc/prompt.hpp"

#include "poc/errors.hpp"

namespace poc {

PromptSet build_prompt(const std::string& object_prompt,
                       const std::string& class_name) {
  if (object_prompt.empty())
    throw PromptError("object prompt must be non-empty");
  PromptSet p;
  p.object_prompt = object_prompt;
  p.inpaint_prompt = "A good photo of " + object_prompt;
  p.location_prompt =
      (class_name == "bird") ? kUnconstrainedLocation : "the road";
  return p;
}

}  // namespace poc
