#include <gtest/gtest.h>

#include <complex>

#include "qhopf/cartan.hpp"
#include "qhopf/qhopf.hpp"

using namespace qhopf;

namespace {

void expect_all_pass(const Checks& cs, const std::string& ctx) {
  for (auto& c : cs) EXPECT_EQ(c.status, Status::pass) << ctx << ": " << c.name << " " << c.witness;
}

std::string ctx(const CartanData& d) {
  return "p=" + std::to_string(d.p) + " S=" + d.S.name() + " zeta=" + cartan_zeta_name(d.zeta_choice) +
         " t=" + std::to_string(d.t);
}

}  // namespace

TEST(Cartan, SectorSetsAndKappa) {
  auto S = SectorSet::standard(3);
  EXPECT_EQ(kappa(4, 5, S), 1);
  EXPECT_EQ(kappa_pm(5, +1, S), 1);
  EXPECT_EQ(kappa_pm(0, -1, S), -1);
  for (int p = 2; p <= 6; ++p)
    for (const SectorSet& T : {SectorSet::standard(p), SectorSet::symmetric(p)})
      for (long a : T.elements()) {
        EXPECT_EQ(kappa(a, T.rep(0), T), 0);
        EXPECT_EQ(T.rep(a + 2 * p), a);
        for (long b : T.elements()) EXPECT_NO_THROW(kappa(a, b, T));
      }
  EXPECT_THROW(SectorSet(2, {0, 1, 2, 4}), InvalidParameters);
  EXPECT_THROW(SectorSet(2, {0, 1, 2}), InvalidParameters);
  EXPECT_EQ(SectorSet(2, {4, -3, 2, 7}).rep(5), -3);
}

TEST(Cartan, TablesAgainstComplexEvaluation) {
  for (int p : {2, 3, 5}) {
    auto d = build_cartan(p, SectorSet::standard(p));
    for (long a = 0; a < 2 * p; ++a) {
      // v_a = exp(-i pi a^2 / 2p)
      auto want = std::exp(std::complex<double>(0, -M_PI * a * a / (2.0 * p)));
      EXPECT_NEAR(std::abs(d.v[a].to_complex() - want), 0, 1e-12);
      for (long b = 0; b < 2 * p; ++b) {
        auto r = std::exp(std::complex<double>(0, M_PI * a * b / (2.0 * p)));
        EXPECT_NEAR(std::abs(d.r(a, b).to_complex() - r), 0, 1e-12);
      }
    }
  }
  auto d2 = build_cartan(2, SectorSet::standard(2));
  EXPECT_EQ(d2.r(1, 1), CycNum::zeta_power(8, 1));
}

TEST(Cartan, AssociatorIsTrivialWithoutCarry) {
  for (int p : {2, 4}) {
    auto d = build_cartan(p, SectorSet::standard(p));
    for (long a : d.S.elements())
      for (long b : d.S.elements())
        for (long c : d.S.elements()) {
          if (kappa(b, c, d.S) == 0) EXPECT_TRUE(d.phi(a, b, c).is_one());
          else EXPECT_EQ(d.phi(a, b, c), CycNum(a % 2 ? -1L : 1L, 4 * p));
        }
  }
}

TEST(Cartan, SuitePassesForBothSectorSetsAndZetas) {
  for (int p = 2; p <= 6; ++p)
    for (const SectorSet& S : {SectorSet::standard(p), SectorSet::symmetric(p)})
      for (CartanZeta z : {CartanZeta::trivial, CartanZeta::qg})
        for (int t : {1, 3}) {
          auto d = build_cartan(p, S, z, t);
          expect_all_pass(cartan_suite(d), ctx(d));
          expect_all_pass(cartan_transport(d), ctx(d));
        }
}

TEST(Cartan, GaussNormalizer) {
  EXPECT_EQ(gauss_sum(2), CycNum::zeta_power(8, -1) * 2L);
  for (int p = 2; p <= 8; ++p) EXPECT_EQ(gauss_sum(p) * gauss_sum(p), CycNum::zeta_power(4 * p, p) * long(-2 * p));
}

TEST(Cartan, OnlyTheTrivialSectorIsTransparent) {
  for (int p : {2, 3, 4}) {
    auto d = build_cartan(p, SectorSet::symmetric(p), CartanZeta::qg, 1);
    EXPECT_EQ(transparent_sectors(d), std::vector<int>{0});
  }
  auto d = build_cartan(2, SectorSet::standard(2));
  EXPECT_EQ(d.r(1, 1) * d.r(1, 1), CycNum::zeta_power(4, 1).embed(8));
}

TEST(Cartan, PrintedBetaFailsForOddSectors) {
  // the printed coevaluation element misses the sign (-1)^{a kappa(a,<-a>)}
  auto d = build_cartan(3, SectorSet::standard(3));
  auto lit = literal_beta(d);
  EXPECT_EQ(check_cartan_antipode(d, lit).status, Status::fail);
  for (long a : d.S.elements()) {
    long m = d.S.rep(-a);
    CycNum sign(((a * kappa(a, m, d.S)) % 2) ? -1L : 1L, d.order());
    EXPECT_EQ(d.beta[a], sign * lit[a]);
  }
  // for the symmetric set only a = -p differs, and only for odd p
  auto e = build_cartan(2, SectorSet::symmetric(2));
  EXPECT_EQ(check_cartan_antipode(e, literal_beta(e)).status, Status::pass);
  auto f = build_cartan(3, SectorSet::symmetric(3));
  EXPECT_EQ(check_cartan_antipode(f, literal_beta(f)).status, Status::fail);
}

TEST(Cartan, NegativeControls) {
  auto d = build_cartan(3, SectorSet::standard(3));
  CartanData bad = d;
  bad.Phi[1 * 36 + 5 * 6 + 5] = -bad.Phi[1 * 36 + 5 * 6 + 5];
  EXPECT_EQ(check_cartan_pentagon(bad).status, Status::fail);
  EXPECT_EQ(check_cartan_transport_assoc(bad, 0, 0, 0).status, Status::fail);
  CartanData badr = d;
  badr.R[1 * 6 + 2] = -badr.R[1 * 6 + 2];
  EXPECT_EQ(check_cartan_hexagons(badr).status, Status::fail);
  EXPECT_EQ(check_cartan_transport_braiding(badr, 1, -1).status, Status::fail);
  CartanData badv = d;
  badv.v_K[1] = badv.v_K[1] * 2L;
  EXPECT_EQ(check_gauss_resummation(badv).status, Status::fail);
  // transport with S' differs from the S tables before relabelling
  auto d2 = build_cartan(3, SectorSet::symmetric(3), CartanZeta::qg, 1);
  auto d1 = build_cartan(3, SectorSet::standard(3), CartanZeta::qg, 1);
  auto t1 = build_cartan(3, SectorSet::standard(3)), t2 = build_cartan(3, SectorSet::symmetric(3));
  EXPECT_NE(t1.R, t2.R);
  EXPECT_EQ(check_sector_relabelling(t1, t2).status, Status::pass);
  EXPECT_EQ(check_sector_relabelling(d1, d2).status, Status::pass);
}

TEST(Cartan, ZetaNormalisationIsEnforced) {
  // 0 represented by 2p: q^{t 2p/2} = -1 breaks zeta_{odd,<0>} = 1
  EXPECT_THROW(build_cartan(2, SectorSet(2, {4, 1, 2, 3}), CartanZeta::qg, 1), InvalidParameters);
  EXPECT_NO_THROW(build_cartan(2, SectorSet(2, {4, 1, 2, 3}), CartanZeta::trivial, 1));
  EXPECT_NO_THROW(build_cartan(2, SectorSet(2, {8, 1, 2, 3}), CartanZeta::qg, 1));
}

TEST(Cartan, CustomSectorSetStillPasses) {
  auto d = build_cartan(3, SectorSet(3, {6, -5, 2, 9, -2, 5}), CartanZeta::trivial, 1);
  expect_all_pass(cartan_suite(d), ctx(d));
  expect_all_pass({check_cartan_transport_assoc(d, 1, -1, 1), check_cartan_transport_braiding(d, 1, -1),
                   check_sector_relabelling(d, build_cartan(3, SectorSet::standard(3)))},
                  ctx(d));
}
