#pragma once

// Built-in property corpus behind `qalg selftest`.

#include <string>
#include <vector>

#include "qalg/report.hpp"

namespace qalg::selftest {

struct Outcome {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Summary {
  std::vector<Outcome> builtin;
  std::vector<Outcome> files;
  // 4 if a built-in property fails, 3 if only supplied files fail
  int exit_code() const {
    for (const auto& o : builtin)
      if (!o.pass) return 4;
    for (const auto& o : files)
      if (!o.pass) return 3;
    return 0;
  }
};

struct Entry {
  std::string name;
  AlgebraPtr algebra;
};

std::vector<Entry> corpus_entries();
std::vector<Outcome> builtin_properties(std::uint64_t seed);
Outcome check_file(const std::string& path);
Summary run_all(std::uint64_t seed, const std::vector<std::string>& files);
std::string render(const Summary& s);
report::json to_json(const Summary& s, std::uint64_t seed);

}  // namespace qalg::selftest
