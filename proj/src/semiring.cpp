// Copyright 2026 The trop Authors
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

#include "trop/semiring.hpp"

#include <stdexcept>

namespace trop {

std::string_view to_string(SemifieldTag tag) noexcept {
  switch (tag) {
    case SemifieldTag::kMaxPlus:
      return MaxPlus::kName;
    case SemifieldTag::kMinPlus:
      return MinPlus::kName;
  }
  return "unknown";
}

SemifieldTag semifield_from_string(std::string_view name) {
  if (name == MaxPlus::kName) return SemifieldTag::kMaxPlus;
  if (name == MinPlus::kName) return SemifieldTag::kMinPlus;
  throw std::invalid_argument("unknown semifield '" + std::string(name) +
                              "' (expected max-plus or min-plus)");
}

}  // namespace trop
