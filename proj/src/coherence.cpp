#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "qhopf/reps.hpp"

namespace qhopf {

namespace {

template <class Fn>
void parallel_for(long n, int jobs, Fn fn) {
  jobs = int(std::max<long>(1, std::min<long>(jobs, n)));
  if (jobs == 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j)
    pool.emplace_back([&] {
      for (long i; (i = next++) < n;) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

CoherenceSweep coherence_sweep(const QuasiHopfData& d, const std::vector<Rep>& family, int jobs) {
  const long n = long(family.size());
  CoherenceSweep out;
  std::mutex mu;
  auto record = [&](const CheckResult& c) {
    std::lock_guard<std::mutex> lock(mu);
    ++out.tuples;
    if (c.status != Status::pass) {
      if (out.failures++ == 0) out.first_failure = c.name + ": " + c.witness;
    }
  };
  parallel_for(n, jobs, [&](long i) {
    record(check_zigzag_on(d, family[i]));
    record(check_ribbon_dual_on(d, family[i]));
  });
  parallel_for(n * n, jobs, [&](long i) { record(check_balancing_on(d, family[i / n], family[i % n])); });
  parallel_for(n * n * n, jobs, [&](long i) {
    record(check_hexagons_on(d, family[i / (n * n)], family[(i / n) % n], family[i % n]));
  });
  parallel_for(n * n * n * n, jobs, [&](long i) {
    record(check_pentagon_on(d, family[i / (n * n * n)], family[(i / (n * n)) % n], family[(i / n) % n], family[i % n]));
  });
  return out;
}

}  // namespace qhopf
