// Copyright 2026 The sdgtag Authors.
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

#ifndef SDGTAG_SDG_HPP_
#define SDGTAG_SDG_HPP_

#include <compare>
#include <cstddef>
#include <string>

namespace sdgtag {

inline constexpr int kSdgCount = 17;

// One of the 17 Sustainable Development Goals, numbered 1..17.
class SdgId {
 public:
  // Throws InvalidSdgError outside 1..17.
  explicit SdgId(int number);

  static bool valid(long long number) noexcept {
    return number >= 1 && number <= kSdgCount;
  }

  int number() const noexcept { return number_; }
  // 0-based position for per-goal arrays.
  std::size_t index() const noexcept { return static_cast<std::size_t>(number_ - 1); }

  friend bool operator==(SdgId, SdgId) = default;
  friend auto operator<=>(SdgId, SdgId) = default;

 private:
  int number_;
};

std::string to_string(SdgId sdg);

}  // namespace sdgtag

#endif  // SDGTAG_SDG_HPP_
