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

#ifndef POC_BASE64_HPP
#define POC_BASE64_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace poc {

// Standard base64 with '=' padding (RFC 4648).
std::string base64_encode(const std::vector<std::uint8_t>& bytes);

// Throws IoError on malformed input.
std::vector<std::uint8_t> base64_decode(const std::string& text);

}  // namespace poc

#endif  // POC_BASE64_HPP
