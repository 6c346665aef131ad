// Copyright 2026 The Authors.
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

#ifndef FAIRSHARE_REPORT_H_
#define FAIRSHARE_REPORT_H_

#include <string>
#include <utility>
#include <vector>

namespace fairshare {

// One named condition of a verifier. `lhs`/`rhs` carry exact values when
// the condition is an equality.
struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const CheckItem&, const CheckItem&) = default;
};

struct CheckReport {
  std::string title;
  std::vector<CheckItem> items;

  void add(std::string name, bool passed, std::string detail = {},
           std::string lhs = {}, std::string rhs = {}) {
    items.push_back({std::move(name), passed, std::move(detail),
                     std::move(lhs), std::move(rhs)});
  }

  bool ok() const {
    for (const auto& item : items) {
      if (!item.passed) return false;
    }
    return true;
  }

  std::vector<CheckItem> failures() const {
    std::vector<CheckItem> out;
    for (const auto& item : items) {
      if (!item.passed) out.push_back(item);
    }
    return out;
  }

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

}  // namespace fairshare

#endif  // FAIRSHARE_REPORT_H_
