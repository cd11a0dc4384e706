// Copyright 2026 The zkrb Authors.
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

#ifndef ZKRB_COMMON_CONFIG_HPP_
#define ZKRB_COMMON_CONFIG_HPP_

#include <charconv>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "zkrb/common/bytes.hpp"
#include "zkrb/common/error.hpp"

namespace zkrb {

/// Flat key = value file. '#' starts a comment, [section] headers are
/// allowed and ignored, values may be double-quoted. Keys must be unique.
class KeyValueConfig {
 public:
  static KeyValueConfig parse(std::string_view text) {
    KeyValueConfig cfg;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
      ++n;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::string_view s = trim(line);
      if (s.empty()) continue;
      if (s.front() == '[') {
        if (s.back() != ']') throw UsageError(where(n) + "unterminated section header");
        continue;
      }
      auto eq = s.find('=');
      if (eq == std::string_view::npos) throw UsageError(where(n) + "expected key = value");
      std::string key(trim(s.substr(0, eq)));
      std::string_view value = trim(s.substr(eq + 1));
      if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
        value = value.substr(1, value.size() - 2);
      }
      if (key.empty()) throw UsageError(where(n) + "empty key");
      if (!cfg.values_.emplace(key, std::string(value)).second) {
        throw UsageError(where(n) + "duplicate key '" + key + "'");
      }
    }
    return cfg;
  }

  static KeyValueConfig load(const std::string& path) {
    Bytes b = read_file(path);
    return parse(std::string_view(reinterpret_cast<const char*>(b.data()), b.size()));
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::map<std::string, std::string>& values() const { return values_; }

  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::uint64_t v = 0;
    const auto& s = it->second;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) {
      throw UsageError("config key '" + key + "' must be a non-negative integer");
    }
    return v;
  }

  std::string get_string(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }

 private:
  static std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  }
  static std::string where(std::size_t line) { return "config line " + std::to_string(line) + ": "; }

  std::map<std::string, std::string> values_;
};

}  // namespace zkrb

#endif  // ZKRB_COMMON_CONFIG_HPP_
