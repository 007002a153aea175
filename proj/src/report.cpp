#include "qhopf/report.hpp"

#include <exception>

namespace qhopf {

std::string status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::undetermined:
      return "undetermined";
  }
  return "?";
}

CheckResult timed(const std::string& name, const std::function<Outcome()>& fn) {
  CheckResult r;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = fn();
    r.status = o.status;
    r.witness = o.witness;
  } catch (const std::exception& e) {
    r.status = Status::fail;
    r.witness = std::string("exception: ") + e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string clip(const std::string& s, size_t n) {
  if (s.size() <= n) return s;
  return s.substr(0, n) + " ... (" + std::to_string(s.size() - n) + " more chars)";
}

}  // namespace qhopf
