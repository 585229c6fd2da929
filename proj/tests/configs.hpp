#pragma once

#include <string>
#include <vector>

#include "emdstego/scheme.hpp"

namespace configs {

struct Config {
  std::string name;
  emdstego::ParamMap params;
};

// One parameter row per scheme token.
inline const std::vector<Config>& primary() {
  static const std::vector<Config> c = {
      {"emd", {{"n", 2}}},
      {"iemd", {}},
      {"pva", {{"t", 2}}},
      {"femd", {{"t", 2}}},
      {"de", {{"k", 2}}},
      {"mpemd", {{"n", 2}, {"key", 0}}},
      {"emd2", {{"n", 2}}},
      {"twoemd", {{"n", 2}}},
      {"gemd", {{"n", 2}}},
      {"egemd", {{"n", 4}}},
      {"mbe", {{"n", 2}, {"k", 1}}},
      {"msd", {{"n", 3}}},
      {"hemd", {{"n", 3}, {"w", 3}}},
      {"aemd", {{"n", 2}, {"m", 4}}},
  };
  return c;
}

// Wider parameter coverage for property tests.
inline std::vector<Config> extended() {
  auto c = primary();
  const std::vector<Config> more = {
      {"emd", {{"n", 1}}},
      {"emd", {{"n", 3}}},
      {"emd", {{"n", 5}}},
      {"pva", {{"t", 3}}},
      {"pva", {{"t", 4}}},
      {"femd", {{"t", 3}}},
      {"femd", {{"t", 4}}},
      {"femd", {{"t", 5}}},
      {"de", {{"k", 1}}},
      {"de", {{"k", 3}}},
      {"mpemd", {{"n", 3}, {"key", 5}}},
      {"emd2", {{"n", 3}}},
      {"emd2", {{"n", 4}}},
      {"twoemd", {{"n", 1}}},
      {"twoemd", {{"n", 3}}},
      {"gemd", {{"n", 3}}},
      {"gemd", {{"n", 4}}},
      {"egemd", {{"n", 5}, {"n1", 2}}},
      {"egemd", {{"n", 6}, {"n1", 3}}},
      {"mbe", {{"n", 3}, {"k", 1}}},
      {"mbe", {{"n", 2}, {"k", 2}}},
      {"msd", {{"n", 2}}},
      {"msd", {{"n", 4}}},
      {"hemd", {{"n", 2}, {"w", 5}, {"wbase", 1}}},
      {"aemd", {{"n", 2}, {"m", 3}}},
      {"aemd", {{"n", 3}, {"m", 2}}},
  };
  c.insert(c.end(), more.begin(), more.end());
  return c;
}

inline std::string label(const Config& c) {
  std::string s = c.name;
  for (const auto& [k, v] : c.params) s += " " + k + "=" + std::to_string(v);
  return s;
}

}  // namespace configs
