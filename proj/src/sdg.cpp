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

#include "sdgtag/sdg.hpp"

#include "sdgtag/error.hpp"

namespace sdgtag {

SdgId::SdgId(int number) : number_(number) {
  if (!valid(number)) {
    throw InvalidSdgError("SDG " + std::to_string(number) +
                          " is outside 1.." + std::to_string(kSdgCount));
  }
}

std::string to_string(SdgId sdg) { return std::to_string(sdg.number()); }

}  // namespace sdgtag
