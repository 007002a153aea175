#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "qhopf/unrolled.hpp"

using namespace qhopf;

namespace {

void expect_all_pass(const Checks& cs) {
  for (auto& r : cs) EXPECT_EQ(r.status, Status::pass) << r.name << " " << r.witness;
}

// floating oracle: [x] = sin(pi x / p) / sin(pi / p)
double qnum(double x, int p) { return std::sin(M_PI * x / p) / std::sin(M_PI / p); }

void expect_near(const CycNum& z, std::complex<double> w) {
  EXPECT_NEAR(std::abs(z.to_complex() - w), 0.0, 1e-9) << z.str();
}

}  // namespace

TEST(Unrolled, TypicalModuleAction) {
  int p = 3;
  auto V = typical(Rat(1, 2), p);
  ASSERT_EQ(V.dim(), 3);
  EXPECT_EQ(V.H()[0], Rat(5, 2));
  EXPECT_EQ(V.H()[2], Rat(-3, 2));
  for (int n = 1; n < p; ++n) expect_near(V.E().get(n - 1, n), qnum(n, p) * qnum(n - 0.5, p));
  EXPECT_TRUE(V.F().get(1, 0).is_one());
  // K = q^H with q = exp(i pi / p)
  expect_near(V.K().get(0, 0), std::polar(1.0, M_PI * 2.5 / p));
  EXPECT_TRUE(V.warning.empty());
  EXPECT_FALSE(typical(Rat(1), p).warning.empty());
  EXPECT_TRUE(typical(Rat(3), p).warning.empty());
}

TEST(Unrolled, AtypicalModules) {
  auto S10 = atypical(1, 0, 3);
  EXPECT_EQ(S10.dim(), 1);
  EXPECT_EQ(S10.H()[0], Rat(0));
  EXPECT_TRUE(S10.E().is_zero());
  auto S = atypical(2, 1, 3);
  EXPECT_EQ(S.H()[0], Rat(4));
  EXPECT_EQ(S.H()[1], Rat(2));
  expect_near(S.E().get(0, 1), -qnum(1, 3) * qnum(1, 3));
  EXPECT_THROW(atypical(3, 0, 3), InvalidWeightRep);
}

TEST(Unrolled, ConstructorRejectsBrokenRelations) {
  auto V = typical(Rat(1, 2), 2);
  EXPECT_THROW(WeightRep::make("bad", 2, V.order(), V.E() * CycNum(2L, V.order()), V.F(), V.H()), InvalidWeightRep);
  EXPECT_THROW(WeightRep::make("bad", 2, V.order(), V.F(), V.E(), V.H()), InvalidWeightRep);
  // q^{1/3} is not in the field of order 8
  EXPECT_THROW(WeightRep::make("bad", 2, 8, SMat(1, 1, 8), SMat(1, 1, 8), {Rat(1, 3)}), InvalidWeightRep);
}

TEST(Unrolled, ParseDescriptors) {
  EXPECT_EQ(parse_weight_rep("V:a=3/2", 3).H()[0], Rat(7, 2));
  EXPECT_EQ(parse_weight_rep("S:s=2,k=-1", 3).H()[0], Rat(-2));
  EXPECT_THROW(parse_weight_rep("V:a=x", 3), InvalidWeightRep);
  EXPECT_THROW(parse_weight_rep("W:s=1", 3), InvalidWeightRep);
}

TEST(Unrolled, BalancingAndNaturalityOnProbePairs) {
  for (int p : {2, 3}) {
    auto probes = weight_probe_family(p);
    for (auto& U : probes)
      for (auto& V : probes) {
        auto b = check_weight_balancing(U, V);
        EXPECT_EQ(b.status, Status::pass) << b.name << " " << b.witness;
        auto n = check_weight_braiding_natural(U, V);
        EXPECT_EQ(n.status, Status::pass) << n.name << " " << n.witness;
      }
  }
}

TEST(Unrolled, DoubleBraidingOnHighestWeights) {
  for (int p : {2, 3, 4})
    for (auto [a, b] : {std::pair{Rat(1, 2), Rat(3, 2)}, {Rat(1, 2), Rat(p)}, {Rat(p), Rat(2 * p)}}) {
      auto r = check_transparency_scalar(a, b, p);
      EXPECT_EQ(r.status, Status::pass) << r.witness;
      double e = (a.get_d() + p - 1) * (b.get_d() + p - 1);
      expect_near(double_braiding_highest(typical(a, p), typical(b, p)), std::polar(1.0, M_PI * e / p));
    }
}

TEST(Unrolled, OnlyTheUnitIsTransparentAmongProbes) {
  for (int p : {2, 3}) {
    auto probes = weight_probe_family(p);
    EXPECT_EQ(weight_transparency_scan(probes, probes), std::vector<std::string>{"S_1,0"});
  }
}

TEST(Unrolled, TwistOnTrivialIsOne) {
  EXPECT_TRUE(weight_twist(atypical(1, 0, 3)).is_identity());
  EXPECT_TRUE(weight_v(atypical(1, 0, 2)).is_identity());
  // on the highest weight H = alpha + p - 1, v = q^{(p-1)H - H^2/2}, so theta = q^{(alpha^2 - (p-1)^2)/2}
  int p = 3;
  auto V = typical(Rat(p), p);
  SMat th = weight_twist(V);
  for (int i = 0; i < p; ++i) expect_near(th.get(i, i), std::polar(1.0, M_PI * (p * p - (p - 1) * (p - 1)) / (2.0 * p)));
}

TEST(Unrolled, InducedModulesSatisfyRelations) {
  for (int p : {2, 3})
    for (auto& S : {SectorSet::standard(p), SectorSet::symmetric(p)})
      for (auto& M : test_family(p)) {
        auto L = induce_FS(M, S);
        expect_all_pass(check_induced_relations(L));
        auto loc = check_locality(L);
        EXPECT_EQ(loc.status, Status::pass) << loc.witness;
      }
}

TEST(Unrolled, HalfIntegerGradeIsNotLocal) {
  auto L = induce_FS(test_family(3)[2], SectorSet::standard(3));
  L.lift[0] = Rat(1, 2);
  auto r = check_locality(L);
  EXPECT_EQ(r.status, Status::fail);
  EXPECT_NE(r.witness.find("q^3 = (-1"), std::string::npos) << r.witness;
}

TEST(Unrolled, RoundTripsAndNaturality) {
  for (int p : {2, 3}) {
    auto fam = test_family(p);
    for (auto& S : {SectorSet::standard(p), SectorSet::symmetric(p)}) {
      std::vector<LocalModule> L;
      for (auto& M : fam) L.push_back(induce_FS(M, S));
      for (auto& l : L) {
        auto a = check_round_trip_GF(l), b = check_round_trip_FG(l);
        EXPECT_EQ(a.status, Status::pass) << a.name << " " << a.witness;
        EXPECT_EQ(b.status, Status::pass) << b.name << " " << b.witness;
      }
      for (size_t i = 0; i < fam.size(); ++i)
        for (size_t j = 0; j < fam.size(); ++j)
          for (auto& f : hom_space(fam[i], fam[j])) {
            auto r = check_naturality(L[i], L[j], f);
            EXPECT_EQ(r.status, Status::pass) << r.name << " " << r.witness;
          }
    }
  }
}

TEST(Unrolled, GradeZeroOfInducedRegularModule) {
  auto reg = regular_rep(2);
  auto L = induce_FS(reg, SectorSet::symmetric(2));
  EXPECT_EQ(L.dim(), 16);
  expect_all_pass(check_induced_relations(L));
  EXPECT_EQ(check_round_trip_FG(L).status, Status::pass);
}

TEST(Unrolled, FMNIntertwinesForTheMatchingT) {
  int p = 3;
  auto fam = test_family(p);
  for (int t : {1, 3}) {
    auto d = build(p, t);
    for (auto& S : {SectorSet::standard(p), SectorSet::symmetric(p)})
      for (size_t j : {size_t(2), size_t(5), size_t(9)}) expect_all_pass(check_FMN(*d, fam[1], fam[j], S));
  }
  // zeta for t = 3 against the coproduct for t = 1
  auto wrong = *build(p, 1);
  wrong.t = 3;
  EXPECT_FALSE(all_pass(check_FMN(wrong, fam[1], fam[2], SectorSet::standard(p))));
}

TEST(Unrolled, LambdaTensorIsLocal) {
  auto d = build(2, 1);
  auto fam = test_family(2);
  auto S = SectorSet::symmetric(2);
  auto L = lambda_tensor(induce_FS(fam[1], S), induce_FS(fam[3], S), *d);
  EXPECT_EQ(L.dim(), fam[1].dim() * fam[3].dim());
  EXPECT_EQ(check_locality(L).status, Status::pass);
  expect_all_pass(check_induced_relations(L));
}

TEST(Unrolled, TransportMatchesTheQuasiHopfData) {
  for (int p = 2; p <= 5; ++p)
    for (int t : {1, 3}) {
      auto d = build(p, t);
      for (auto& S : {SectorSet::standard(p), SectorSet::symmetric(p)}) expect_all_pass(check_transport(*d, S));
    }
}

TEST(Unrolled, TransportNegativeControls) {
  auto wrong = *build(3, 1);
  wrong.t = 3;
  auto S = SectorSet::standard(3);
  EXPECT_EQ(check_transport_assoc(wrong, S).status, Status::fail);
  EXPECT_EQ(check_transport_braiding(wrong, S).status, Status::fail);
  auto d = *build(3, 1);
  d.v = d.vInv;
  EXPECT_EQ(check_transport_twist(d, S, test_family(3)).status, Status::fail);
}
