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

#include <algorithm>

#include "poc/catalog.hpp"

using namespace poc;

TEST_CASE("poc-alt-25 is the exact 25-entry anomaly list") {
  const ObjectCatalog cat = load_catalog("poc-alt-25");
  const std::vector<std::string> expected = {
      "stroller",
      "trolley",
      "garbage bag",
      "wheelie bin",
      "suitcase",
      "skateboard",
      "chair dumped on the street",
      "sofa dumped on the street",
      "furniture dumped on the street",
      "matress dumped on the street",
      "garbage dumped on the street",
      "clothes dumped on the street",
      "cement mixer on the street",
      "cat",
      "dog",
      "bird flying",
      "horse",
      "skunk",
      "sheep",
      "crocodile",
      "alligator",
      "bear",
      "llama",
      "tiger",
      "monkey",
  };
  CHECK(cat.entries.size() == 25);
  CHECK(cat.prompts() == expected);
}

TEST_CASE("cityscapes-id-6 is the exact 6-entry object list") {
  const ObjectCatalog cat = load_catalog("cityscapes-id-6");
  CHECK(cat.prompts() == std::vector<std::string>{"rider", "bicycle",
                                                  "motorcycle", "bus",
                                                  "person", "car"});
}

TEST_CASE("pascal-animals-6 has six animal classes") {
  const ObjectCatalog cat = load_catalog("pascal-animals-6");
  CHECK(cat.entries.size() == 6);
  CHECK(cat.prompts() == std::vector<std::string>{"bird", "cat", "cow", "dog",
                                                  "horse", "sheep"});
}

TEST_CASE("coco-80 has the 80 standard class names") {
  const ObjectCatalog cat = load_catalog("coco-80");
  CHECK(cat.entries.size() == 80);
  CHECK(cat.entries.front().prompt == "person");
  CHECK(cat.entries.back().prompt == "toothbrush");
  const auto prompts = cat.prompts();
  CHECK(std::count(prompts.begin(), prompts.end(), "bird") == 1);
}

TEST_CASE("unknown catalog name raises CatalogNotFound") {
  CHECK_THROWS_AS(load_catalog("bogus"), CatalogNotFound);
}

TEST_CASE("bird prompts map to the bird class") {
  const ObjectCatalog cat = load_catalog("poc-alt-25");
  for (const auto& e : cat.entries) {
    if (e.prompt == "bird flying")
      CHECK(e.class_name == "bird");
    else
      CHECK(e.class_name == e.prompt);
  }
}

TEST_CASE("class role strings round trip") {
  for (const ClassRole r :
       {ClassRole::kOod, ClassRole::kIdSynthetic, ClassRole::kNewClass})
    CHECK(class_role_from_string(to_string(r)) == r);
  CHECK_THROWS_AS(class_role_from_string("nope"), ConfigError);
}
