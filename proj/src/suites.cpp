#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

#include <json.hpp>

#include "qhopf/cartan.hpp"
#include "qhopf/cli.hpp"
#include "qhopf/qhopf.hpp"
#include "qhopf/reps.hpp"
#include "qhopf/unrolled.hpp"

namespace qhopf {

namespace {

using Task = std::function<Checks()>;

std::vector<Checks> run_pool(const std::vector<Task>& tasks, int jobs) {
  std::vector<Checks> out(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < tasks.size();) {
      try {
        out[i] = tasks[i]();
      } catch (const std::exception& e) {
        out[i] = {{"task " + std::to_string(i), Status::fail, std::string("exception: ") + e.what(), 0}};
      }
    }
  };
  int n = std::max(1, std::min<int>(jobs, int(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

SectorSet sector_set(const VerifyOptions& o) {
  if (o.S == "std") return SectorSet::standard(o.p);
  if (o.S == "sym") return SectorSet::symmetric(o.p);
  throw InvalidParameters("--S must be std or sym");
}

std::vector<Task> cartan_tasks(const VerifyOptions& o) {
  std::vector<Task> out;
  for (auto z : {CartanZeta::trivial, CartanZeta::qg})
    out.push_back([o, z] {
      auto d = build_cartan(o.p, sector_set(o), z, o.t);
      Checks c = cartan_suite(d);
      for (auto& r : cartan_transport(d)) c.push_back(r);
      for (auto& r : c) r.name = "cartan[" + cartan_zeta_name(z) + "] " + r.name;
      return c;
    });
  return out;
}

// the reduced family keeps the sweep affordable beyond p = 3
std::vector<Rep> sweep_family(int p) {
  auto fam = test_family(p);
  if (p <= 3) return fam;
  return {fam[0], fam[1], fam[4], fam[5]};
}

std::vector<Task> reps_tasks(const VerifyOptions& o) {
  std::vector<Task> out;
  out.push_back([o] {
    Checks c;
    auto d = build(o.p, o.t);
    auto fam = test_family(o.p);
    const Rep& X = fam[1];
    for (size_t i = 2; i < fam.size(); ++i) {
      const Rep& O = fam[i];
      c.push_back(timed("t-coproduct: " + X.name() + " (x) " + O.name() + " ~ reversed, witness tau R_t", [&] {
        Rep XO = tensor_t(X, O, *d), OX = tensor_t(O, X, *d);
        SMat w = braid(*d, X, O);
        if (!is_intertwiner(w, XO, OX)) return Outcome::fail("tau R_t is not an intertwiner");
        return Outcome::check(w.rank() == w.rows(), "tau R_t is singular");
      }));
      c.push_back(timed("legacy coproduct: " + X.name() + " (x) " + O.name() + " vs reversed", [&] {
        auto r = is_isomorphic(tensor_legacy(X, O), tensor_legacy(O, X), o.seed);
        std::string v = r.verdict == Verdict::yes ? "isomorphic" : r.verdict == Verdict::no ? "NOT isomorphic" : "undetermined";
        if (r.verdict == Verdict::undetermined) return Outcome{Status::undetermined, r.reason};
        return Outcome::ok("orders " + v + (r.reason.empty() ? "" : " (" + r.reason + ")"));
      }));
    }
    return c;
  });
  out.push_back([o] {
    auto d = build(o.p, o.t);
    auto fam = sweep_family(o.p);
    std::string name = "coherence sweep over " + std::to_string(fam.size()) + " modules" +
                       (fam.size() < test_family(o.p).size() ? " (reduced family)" : "");
    return Checks{timed(name, [&] {
      auto s = coherence_sweep(*d, fam, o.jobs);
      std::string tally = std::to_string(s.tuples) + " tuples, " + std::to_string(s.failures) + " failures";
      return Outcome::check(s.failures == 0, tally + "; first: " + s.first_failure);
    })};
  });
  out.push_back([o] {
    auto d = build(o.p, o.t);
    auto fam = test_family(o.p);
    auto probes = fam;
    probes.push_back(regular_rep(o.p));
    return Checks{timed("transparent family members against family + regular module (finite probe set)", [&] {
      auto tr = transparency_scan(*d, fam, probes);
      std::string got;
      for (auto& n : tr) got += n + " ";
      return Outcome::check(tr == std::vector<std::string>{"triv"}, "transparent: " + got);
    })};
  });
  return out;
}

std::vector<Task> tasks_for(const VerifyOptions& o, const std::string& suite) {
  if (suite == "cartan") return cartan_tasks(o);
  if (suite == "qhopf")
    return {[o] { return qhopf_suite(*build(o.p, o.t, o.zeta_k)); }};
  if (suite == "reps") return reps_tasks(o);
  if (suite == "unrolled") return {[o] { return unrolled_suite(o.p, o.t); }};
  if (suite == "transport") return {[o] { return check_transport(*build(o.p, o.t), sector_set(o)); }};
  throw InvalidParameters("unknown suite '" + suite + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n{"cartan", "qhopf", "reps", "unrolled", "transport", "all"};
  return n;
}

Checks run_verify(const VerifyOptions& o) {
  build(o.p, o.t, o.zeta_k);  // parameter validation
  sector_set(o);
  std::vector<Task> tasks;
  for (auto& s : suite_names()) {
    if (s == "all" || (o.suite != "all" && o.suite != s)) continue;
    for (auto& t : tasks_for(o, s)) tasks.push_back(t);
  }
  if (tasks.empty()) throw InvalidParameters("unknown suite '" + o.suite + "'");
  Checks out;
  for (auto& c : run_pool(tasks, o.jobs))
    for (auto& r : c) out.push_back(std::move(r));
  return out;
}

std::string report_json(const VerifyOptions& o, const Checks& checks) {
  using ojson = nlohmann::ordered_json;
  ojson j;
  j["schema_version"] = kReportSchema;
  j["parameters"] = {{"p", o.p}, {"t", o.t}, {"zeta", zeta_name(o.zeta_k)}, {"S", o.S}, {"seed", o.seed},
                     {"suite", o.suite}};
  ojson arr = ojson::array();
  long npass = 0, nfail = 0, nund = 0;
  for (auto& c : checks) {
    std::string w = c.witness;
    if (c.status == Status::fail && w.empty()) w = "(no witness recorded)";
    arr.push_back({{"name", c.name},
                   {"status", status_name(c.status)},
                   {"witness", w},
                   {"elapsed_ms", o.timings ? std::round(c.elapsed_ms * 1000) / 1000 : 0.0}});
    (c.status == Status::pass ? npass : c.status == Status::fail ? nfail : nund)++;
  }
  j["checks"] = arr;
  j["summary"] = {{"total", long(checks.size())}, {"pass", npass}, {"fail", nfail}, {"undetermined", nund}};
  ojson notes = ojson::array();
  if (o.suite == "all" || o.suite == "reps" || o.suite == "unrolled")
    notes.push_back("transparency is checked against a finite probe family only");
  if (o.zeta_k != 0 && o.suite != "qhopf")
    notes.push_back("zeta applies to the qhopf suite; the other suites use zeta = 1");
  j["notes"] = notes;
  return j.dump(2) + "\n";
}

}  // namespace qhopf
