#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qhopf {

enum class Status { pass, fail, undetermined };

std::string status_name(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::string witness;  // required on failure; optional otherwise
  double elapsed_ms = 0;
};

struct Outcome {
  Status status;
  std::string witness;
  static Outcome ok(std::string w = {}) { return {Status::pass, std::move(w)}; }
  static Outcome fail(std::string w) { return {Status::fail, std::move(w)}; }
  static Outcome check(bool good, std::string w_if_bad) {
    return good ? ok() : fail(std::move(w_if_bad));
  }
};

// runs fn, records its wall time; exceptions become failures
CheckResult timed(const std::string& name, const std::function<Outcome()>& fn);

using Checks = std::vector<CheckResult>;

inline bool all_pass(const Checks& c) {
  for (auto& r : c)
    if (r.status != Status::pass) return false;
  return true;
}

// truncate long renderings in witnesses
std::string clip(const std::string& s, size_t n = 600);

}  // namespace qhopf
