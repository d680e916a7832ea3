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

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tritile {

enum class CheckStatus { kPass, kFail, kNotApplicable };

const char* to_string(CheckStatus s);

// One `name = value [status]` line. Identity checks carry both sides in
// `value` as `lhs rhs`; plain quantities have no status.
struct AuditLine {
  std::string name;
  std::string value;
  std::optional<CheckStatus> status;
};

// Stable-ordered audit output shared by every analysis module.
class AuditRecord {
 public:
  void value(std::string name, std::string value);
  void check(std::string name, std::string lhs, std::string rhs, bool pass);
  void not_applicable(std::string name, std::string reason);
  void append(const AuditRecord& other, const std::string& prefix = "");

  const std::vector<AuditLine>& lines() const { return lines_; }
  const AuditLine* find(const std::string& name) const;
  bool passed(const std::string& name) const;

  std::size_t count(CheckStatus s) const;
  bool all_pass() const { return count(CheckStatus::kFail) == 0; }

  std::string to_text() const;

 private:
  std::vector<AuditLine> lines_;
};

}  // namespace tritile
