#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qhopf/cli.hpp"
#include "qhopf/qhopf.hpp"
#include "qhopf/reps.hpp"

using namespace qhopf;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string kchar(const Rep& M) {
  std::string s = "[";
  for (int x : k_character(M)) s += std::to_string(x) + " ";
  s.back() = ']';
  return s;
}

int cmd_verify(const VerifyOptions& o, const std::string& json_path) {
  if (o.t % 2 == 0) throw UsageError("--t must be odd");
  if (o.jobs < 1) throw UsageError("--jobs must be positive");
  Checks checks;
  try {
    checks = run_verify(o);
  } catch (const InvalidParameters& e) {
    throw UsageError(e.what());
  }
  long bad = 0;
  for (auto& c : checks) {
    std::cout << status_name(c.status) << "  " << c.name;
    if (c.status != Status::pass) std::cout << "  :: " << clip(c.witness, 300);
    std::cout << "\n";
    if (c.status != Status::pass) ++bad;
  }
  std::cout << checks.size() - bad << "/" << checks.size() << " checks pass\n";
  if (!json_path.empty()) {
    std::ofstream f(json_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << json_path << "\n";
      return 1;
    }
    f << report_json(o, checks);
  }
  return bad == 0 ? 0 : 1;
}

int cmd_tensor(int p, int t, const std::string& left, const std::string& right, const std::string& coproduct,
               unsigned seed) {
  if (coproduct != "t" && coproduct != "legacy") throw UsageError("--coproduct must be t or legacy");
  if (coproduct == "t" && t % 2 == 0) throw UsageError("--t must be odd");
  Rep L, R;
  QhPtr d;
  try {
    L = parse_rep(left, p);
    R = parse_rep(right, p);
    if (coproduct == "t") d = build(p, t);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto prod = [&](const Rep& a, const Rep& b) { return coproduct == "t" ? tensor_t(a, b, *d) : tensor_legacy(a, b); };
  Rep LR = prod(L, R), RL = prod(R, L);
  std::cout << "p=" << p << " coproduct=" << (coproduct == "t" ? "t (t=" + std::to_string(t) + ")" : "legacy") << "\n";
  std::cout << "left  (x) right: " << LR.name() << "  dim " << LR.dim() << "  K-character " << kchar(LR) << "\n";
  std::cout << "right (x) left : " << RL.name() << "  dim " << RL.dim() << "  K-character " << kchar(RL) << "\n";
  std::cout << "dim Hom(left (x) right, right (x) left) = " << hom_space(LR, RL).size() << "\n";
  std::cout << "dim End(left (x) right) = " << hom_space(LR, LR).size()
            << ", dim End(right (x) left) = " << hom_space(RL, RL).size() << "\n";
  auto triv = trivial_rep(p);
  for (auto [M, tag] : {std::pair{&LR, "left (x) right"}, std::pair{&RL, "right (x) left"}})
    if (M->dim() == 1 && is_isomorphic(*M, triv, seed).verdict == Verdict::yes)
      std::cout << tag << " is the trivial module\n";
  if (coproduct == "t") {
    SMat w = braid(*d, L, R);
    if (is_intertwiner(w, LR, RL) && w.rank() == w.rows()) {
      std::cout << "verdict: isomorphic, witness τ∘R_t\n";
      std::cout << clip(w.str(), 2000) << "\n";
      return 0;
    }
  }
  auto r = is_isomorphic(LR, RL, seed);
  switch (r.verdict) {
    case Verdict::yes:
      std::cout << "verdict: isomorphic\n" << clip(r.witness->str(), 2000) << "\n";
      break;
    case Verdict::no:
      std::cout << "verdict: orders NOT isomorphic (" << r.reason << ")\n";
      break;
    case Verdict::undetermined:
      std::cout << "verdict: undetermined (" << r.reason << ")\n";
      break;
  }
  return 0;
}

int cmd_cache(const std::string& action, const std::vector<int>& ps) {
  auto dir = cache_dir();
  try {
    if (action == "build") {
      for (int p : ps) {
        if (p < 2 || p > 12) throw UsageError("p must lie in 2..12");
        cache_load(dir, p, std::cerr);
        std::cout << "cached p=" << p << " in " << cache_file(dir, p).string() << "\n";
      }
    } else if (action == "clear") {
      std::cout << "removed " << cache_clear(dir) << " file(s) from " << dir.string() << "\n";
    } else if (action == "info") {
      auto info = cache_info(dir);
      std::cout << "cache directory " << dir.string() << "\n";
      std::string cover;
      for (auto& e : info) {
        std::cout << "p=" << e.p << " entries=" << e.entries << " bytes=" << e.bytes << (e.valid ? "" : " (stale)")
                  << "\n";
        if (e.valid) cover += " " + std::to_string(e.p);
      }
      std::cout << "p-coverage:" << (cover.empty() ? " none" : cover) << "\n";
    } else {
      throw UsageError("cache action must be build, clear or info");
    }
  } catch (const CacheError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the quasi-Hopf modification of restricted quantum sl(2)"};
  app.require_subcommand(1);

  VerifyOptions vo;
  std::string zeta = "1", json_path;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--p", vo.p, "root of unity order, q = exp(i pi / p)")->required();
  verify->add_option("--t", vo.t, "odd deformation parameter")->required();
  verify->add_option("--suite", vo.suite)->check(CLI::IsMember(suite_names()));
  verify->add_option("--zeta", zeta)->check(CLI::IsMember({"1", "-1", "i", "-i"}));
  verify->add_option("--S", vo.S)->check(CLI::IsMember({"std", "sym"}));
  verify->add_option("--seed", vo.seed);
  verify->add_option("--json", json_path, "write the JSON report here");
  verify->add_option("--jobs", vo.jobs);
  verify->add_flag("--timings,!--no-timings", vo.timings, "record elapsed times; --no-timings writes 0");

  int tp = 3, tt = 1;
  unsigned tseed = 1;
  std::string left, right, coproduct = "t";
  auto* tensor = app.add_subcommand("tensor", "compare both tensor orders of two modules");
  tensor->add_option("--p", tp)->required();
  tensor->add_option("--t", tt);
  tensor->add_option("--left", left)->required();
  tensor->add_option("--right", right)->required();
  tensor->add_option("--coproduct", coproduct);
  tensor->add_option("--seed", tseed);

  std::string action;
  std::vector<int> ps{2, 3, 4, 5};
  auto* cache = app.add_subcommand("cache", "structure-constant cache (QHOPF_CACHE_DIR)");
  cache->add_option("action", action, "build, clear or info")->required();
  cache->add_option("--p", ps, "values of p to build");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (*verify) {
      vo.zeta_k = parse_zeta(zeta);
      return cmd_verify(vo, json_path);
    }
    if (*tensor) return cmd_tensor(tp, tt, left, right, coproduct, tseed);
    return cmd_cache(action, ps);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }
}
