// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>

#include "qhopf/cartan.hpp"
#include "qhopf/qhopf.hpp"
#include "qhopf/reps.hpp"
#include "qhopf/unrolled.hpp"

using namespace qhopf;

namespace {

void add(Checks& out, const Checks& more) { out.insert(out.end(), more.begin(), more.end()); }

std::string tag(int p, int t) { return " [p=" + std::to_string(p) + " t=" + std::to_string(t) + "]"; }

void tagged(Checks& out, Checks more, const std::string& suffix) {
  for (auto& c : more) c.name += suffix;
  add(out, more);
}

const std::vector<std::pair<int, int>>& grid() {
  static const std::vector<std::pair<int, int>> g = [] {
    std::vector<std::pair<int, int>> g;
    for (int p = 2; p <= 5; ++p)
      for (int t : {1, 3}) g.push_back({p, t});
    g.push_back({5, 5});
    return g;
  }();
  return g;
}

Checks c1_quasi_hopf() {
  Checks out;
  for (auto [p, t] : grid()) {
    auto d = build(p, t);
    tagged(out,
           {check_coproduct_relations(*d), check_quasi_coassociativity(*d), check_pentagon(*d), check_counit(*d),
            check_antipode_basis(*d), check_antipode_phi(*d), check_quasitriangularity(*d)},
           tag(p, t));
  }
  return out;
}

Checks c2_monodromy() {
  Checks out;
  for (int p : {2, 3, 4})
    for (int t : {1, 3}) {
      auto d = build(p, t);
      tagged(out, {check_monodromy_closed_form(*d, monodromy(*d))}, tag(p, t));
    }
  return out;
}

Checks c3_factorisable() {
  Checks out;
  for (int p : {2, 3, 4})
    for (int t : {1, 3}) {
      auto d = build(p, t);
      Elem D;
      Checks c{check_x_element(*d), check_dhat_closed_form(*d, monodromy(*d), &D)};
      int dim = 2 * p * p * p;
      if (D.alg()) {
        auto f = check_factorisable(*d, D);
        if (f.status == Status::pass && f.name != "factorisable: rank " + std::to_string(dim) + "/" + std::to_string(dim))
          f = {f.name, Status::fail, "rank differs from 2p^3", f.elapsed_ms};
        c.push_back(f);
      }
      tagged(out, c, tag(p, t));
    }
  return out;
}

Checks c4_ribbon() {
  Checks out;
  for (auto [p, t] : grid()) {
    auto d = build(p, t);
    tagged(out, {check_ribbon(*d, monodromy(*d))}, tag(p, t));
  }
  return out;
}

Checks c5_special_cases() {
  Checks out;
  auto d = build(3, 3);
  auto A = d->A;
  Elem E = gen_E(A), K = gen_K(A), e1 = idem_e1(A);
  out.push_back(timed("p=3 t=3: Delta(E) = E (x) K + K^3 (x) E", [&] {
    return Outcome::check(d->coproduct(E) == tensor(E, K) + tensor(gen_K(A, 3), E), d->coproduct(E).str());
  }));
  out.push_back(timed("p=3 t=3: Phi = 1 - 2 e1 (x) e1 (x) e1", [&] {
    return Outcome::check(d->Phi == Elem::one(A, 3) - CycNum(2L, 12) * tensor({e1, e1, e1}), clip(d->Phi.str()));
  }));
  for (int z : {1, 3}) {
    auto dz = build(3, 3, z);
    out.push_back(timed("p=3 t=3 zeta=" + zeta_name(z) + ": Phi = 1 (x) 1 (x) 1", [&] {
      return Outcome::check(dz->Phi == Elem::one(A, 3), clip(dz->Phi.str()));
    }));
  }
  for (int z = 0; z < 4; ++z) tagged(out, qhopf_suite(*build(3, 3, z)), " [p=3 t=3 zeta=" + zeta_name(z) + "]");
  return out;
}

Checks c6_cartan() {
  Checks out;
  for (int p = 2; p <= 6; ++p)
    for (auto& S : {SectorSet::standard(p), SectorSet::symmetric(p)})
      for (auto z : {CartanZeta::trivial, CartanZeta::qg})
        for (int t : {1, 3}) {
          auto d = build_cartan(p, S, z, t);
          std::string sfx = tag(p, t) + " S=" + S.name() + " zeta=" + cartan_zeta_name(z);
          tagged(out, cartan_suite(d), sfx);
          out.push_back(timed("only the zero sector is transparent" + sfx, [&] {
            return Outcome::check(transparent_sectors(d) == std::vector<int>{0}, "scan disagrees");
          }));
        }
  return out;
}

Checks c7_appendix_b() {
  Checks out;
  int p = 3;
  auto fam = test_family(p);
  const Rep& X = fam[1];
  CycNum one(1L, 12), zero(12);
  std::vector<std::pair<CycNum, CycNum>> lambdas{{one, zero}, {zero, one}, {one, one}};
  for (int s : {1, 2})
    for (int sign : {1, -1})
      for (size_t li = 0; li < lambdas.size(); ++li) {
        auto [l1, l2] = lambdas[li];
        Rep O = module_O(p, s, sign, l1, l2);
        // -lambda is the point [l1 : -l2]; [-l1 : -l2] would be lambda itself
        Rep flipped = module_O(p, s, -sign, l1, -l2), same = module_O(p, s, -sign, l1, l2);
        out.push_back(timed("legacy: O (x) X- ~ O^-+(-lambda), X- (x) O ~ O^-+(lambda) for " + O.name(), [&] {
          Rep XO = tensor_legacy(X, O), OX = tensor_legacy(O, X);
          if (is_isomorphic(OX, flipped).verdict != Verdict::yes) return Outcome::fail("O (x) X- is not O^-+(-lambda)");
          if (is_isomorphic(XO, same).verdict != Verdict::yes) return Outcome::fail("X- (x) O is not O^-+(lambda)");
          return Outcome::ok();
        }));
        if (li == 2)
          out.push_back(timed("legacy: " + X.name() + " (x) " + O.name() + " not iso to reversed", [&] {
            Rep XO = tensor_legacy(X, O), OX = tensor_legacy(O, X);
            auto h = hom_space(XO, OX);
            auto r = is_isomorphic(XO, OX);
            return Outcome::check(h.empty() && r.verdict == Verdict::no,
                                  "hom dim " + std::to_string(h.size()) + ", verdict " + verdict_name(r.verdict));
          }));
        for (int t : {1, 3}) {
          auto d = build(p, t);
          out.push_back(timed("t=" + std::to_string(t) + ": " + X.name() + " (x) " + O.name() +
                                  " ~ O^-+(-lambda) in both orders, tau R_t invertible intertwiner",
                              [&] {
                                Rep XO = tensor_t(X, O, *d), OX = tensor_t(O, X, *d);
                                SMat w = braid(*d, X, O);
                                if (!is_intertwiner(w, XO, OX) || w.rank() != w.rows())
                                  return Outcome::fail("tau R_t is not an invertible intertwiner");
                                if (is_isomorphic(XO, flipped).verdict != Verdict::yes)
                                  return Outcome::fail("X (x) O is not O^-+(-lambda)");
                                if (is_isomorphic(OX, flipped).verdict != Verdict::yes)
                                  return Outcome::fail("O (x) X is not O^-+(-lambda)");
                                return Outcome::ok();
                              }));
        }
      }
  return out;
}

Checks c8_coherence() {
  Checks out;
  for (int p : {2, 3})
    for (int t : {1, 3}) {
      auto d = build(p, t);
      auto fam = test_family(p);
      out.push_back(timed("coherence sweep over the test family" + tag(p, t), [&] {
        auto s = coherence_sweep(*d, fam, 1);
        std::string tally = std::to_string(s.tuples) + " tuples, " + std::to_string(s.failures) + " failures";
        return s.failures == 0 ? Outcome::ok(tally) : Outcome::fail(tally + "; first: " + s.first_failure);
      }));
    }
  return out;
}

Checks c9_transport() {
  Checks out;
  for (int p = 2; p <= 5; ++p)
    for (int t : {1, 3}) {
      auto d = build(p, t);
      for (auto& S : {SectorSet::standard(p), SectorSet::symmetric(p)}) add(out, check_transport(*d, S));
    }
  return out;
}

Checks c10_unrolled() {
  Checks out;
  for (int p : {2, 3}) {
    out.push_back(timed("typical and atypical constructors" + tag(p, 1), [&] {
      for (Rat a : {Rat(1, 2), Rat(3, 2), Rat(1, 4), Rat(p), Rat(-p)}) typical(a, p);
      for (int s = 1; s < p; ++s)
        for (long k : {-1L, 0L, 1L, 2L}) atypical(s, k, p);
      return Outcome::ok();
    }));
    add(out, unrolled_suite(p, 1));
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<Checks()> run;
  };
  std::vector<Criterion> criteria{
      {1, "quasi-Hopf axioms on the (p,t) grid", c1_quasi_hopf},
      {2, "monodromy equals its closed form", c2_monodromy},
      {3, "factorisability: D-hat closed form and full rank", c3_factorisable},
      {4, "ribbon element identities", c4_ribbon},
      {5, "special case t = p and zeta-modified structures", c5_special_cases},
      {6, "Cartan model suite for p = 2..6", c6_cartan},
      {7, "legacy vs deformed tensor orders at p = 3", c7_appendix_b},
      {8, "module-level coherence sweep for p = 2, 3", c8_coherence},
      {9, "transport identities for p = 2..5", c9_transport},
      {10, "unrolled weight and induced modules for p = 2, 3", c10_unrolled},
  };
  int failed = 0;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Checks r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.push_back({"uncaught exception", Status::fail, e.what(), 0});
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    long bad = 0;
    for (auto& x : r)
      if (x.status != Status::pass) {
        if (bad < 5) std::cout << "    " << status_name(x.status) << ": " << x.name << " :: " << clip(x.witness, 300) << "\n";
        ++bad;
      }
    bool ok = !r.empty() && bad == 0;
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << r.size() - bad << "/"
              << r.size() << " checks, " << std::fixed;
    std::cout.precision(1);
    std::cout << secs << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
