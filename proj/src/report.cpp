// Copyright 2026 The Tritile Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tritile/report.hpp"

#include <algorithm>

namespace tritile {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kNotApplicable: return "n/a";
  }
  return "?";
}

void AuditRecord::value(std::string name, std::string value) {
  lines_.push_back({std::move(name), std::move(value), std::nullopt});
}

void AuditRecord::check(std::string name, std::string lhs, std::string rhs, bool pass) {
  lines_.push_back({std::move(name), std::move(lhs) + " " + std::move(rhs),
                    pass ? CheckStatus::kPass : CheckStatus::kFail});
}

void AuditRecord::not_applicable(std::string name, std::string reason) {
  lines_.push_back({std::move(name), std::move(reason), CheckStatus::kNotApplicable});
}

void AuditRecord::append(const AuditRecord& other, const std::string& prefix) {
  for (const AuditLine& line : other.lines_) lines_.push_back({prefix + line.name, line.value, line.status});
}

const AuditLine* AuditRecord::find(const std::string& name) const {
  auto it = std::find_if(lines_.begin(), lines_.end(), [&](const AuditLine& l) { return l.name == name; });
  return it == lines_.end() ? nullptr : &*it;
}

bool AuditRecord::passed(const std::string& name) const {
  const AuditLine* line = find(name);
  return line && line->status == CheckStatus::kPass;
}

std::size_t AuditRecord::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(lines_.begin(), lines_.end(), [s](const AuditLine& l) { return l.status == s; }));
}

std::string AuditRecord::to_text() const {
  std::string out;
  for (const AuditLine& line : lines_) {
    out += line.name + " = " + line.value;
    if (line.status) out += std::string(" ") + to_string(*line.status);
    out += "\n";
  }
  return out;
}

}  // namespace tritile
