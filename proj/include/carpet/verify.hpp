#pragma once

#include <string>
#include <vector>

#include "carpet/word.hpp"

namespace carpet {

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct CheckItem {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct VerifyOptions {
  int max_level = 6;
  int level_cap = 8;
  double epsilon = 0.5;
  std::int64_t probe_radius = 2;
};

/// Every invariant the library can check for one word, at levels up to max_level.
std::vector<CheckItem> run_verify_suite(const WordSpec& w, const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckItem>& items);

}  // namespace carpet
