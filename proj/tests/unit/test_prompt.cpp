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

#include <doctest.h>

#include "poc/prompt.hpp"

using namespace poc;

TEST_CASE("inpaint prompt uses the photo template") {
  const PromptSet p = build_prompt("cat");
  CHECK(p.inpaint_prompt == "A good photo of cat");
  CHECK(p.location_prompt == "the road");
  CHECK(p.object_prompt == "cat");
}

TEST_CASE("bird class gets unconstrained placement") {
  const PromptSet p = build_prompt("bird flying", "bird");
  CHECK(p.inpaint_prompt == "A good photo of bird flying");
  CHECK(p.location_prompt == kUnconstrainedLocation);
}

TEST_CASE("empty object prompt is a PromptError") {
  CHECK_THROWS_AS(build_prompt(""), PromptError);
}
