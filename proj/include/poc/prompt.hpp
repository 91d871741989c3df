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

#ifndef POC_PROMPT_HPP
#define POC_PROMPT_HPP

#include <cstdint>
#include <string>

#include "poc/catalog.hpp"

namespace poc {

// "unconstrained" placement skips the location segmentation and allows the
// object anywhere in the image.
inline constexpr const char* kUnconstrainedLocation = "unconstrained";

// Object / location / inpainting prompt triple with its label assignment.
struct PromptSet {
  std::string object_prompt;    // what to insert
  std::string location_prompt;  // where it may go, or "unconstrained"
  std::string inpaint_prompt;   // text handed to the inpainting model
  std::int32_t class_id = 0;
  ClassRole class_role = ClassRole::kOod;

  bool operator==(const PromptSet&) const = default;
};

// Expands an object prompt into the full prompt set. The inpainting prompt
// is "A good photo of {object}"; placement is guided by "the road" for every
// class except "bird", which is unconstrained. Throws PromptError on an
// empty object prompt.
PromptSet build_prompt(const std::string& object_prompt,
                       const std::string& class_name);

inline PromptSet build_prompt(const std::string& object_prompt) {
  return build_prompt(object_prompt, object_prompt);
}

}  // namespace poc

#endif  // POC_PROMPT_HPP
