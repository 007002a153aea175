#include "qhopf/cartan.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

#include "qhopf/linalg.hpp"
#include "qhopf/qhopf.hpp"

namespace qhopf {

SectorSet::SectorSet(int p, std::vector<long> reps, std::string name)
    : p_(p), elements_(std::move(reps)), by_residue_(2 * p, 0), name_(std::move(name)) {
  if (p < 2) throw InvalidParameters("sector set needs p >= 2");
  if (int(elements_.size()) != 2 * p) throw InvalidParameters("sector set must have 2p elements");
  std::vector<bool> seen(2 * p, false);
  for (long x : elements_) {
    int r = residue(x);
    if (seen[r]) throw InvalidParameters("sector set hits residue " + std::to_string(r) + " twice");
    seen[r] = true;
    by_residue_[r] = x;
  }
}

SectorSet SectorSet::standard(int p) {
  std::vector<long> v;
  for (long a = 0; a < 2 * p; ++a) v.push_back(a);
  return SectorSet(p, v, "standard");
}

SectorSet SectorSet::symmetric(int p) {
  std::vector<long> v;
  for (long a = -p; a < p; ++a) v.push_back(a);
  return SectorSet(p, v, "symmetric");
}

long kappa(long a, long b, const SectorSet& S) {
  long num = a + b - S.rep(a + b);
  long tp = 2L * S.p();
  if (num % tp != 0) throw std::logic_error("kappa is not an integer: broken sector set");
  return num / tp;
}

long kappa_pm(long a, int sign, const SectorSet& S) { return kappa(a, sign > 0 ? 2 : -2, S); }

std::string cartan_zeta_name(CartanZeta z) { return z == CartanZeta::trivial ? "trivial" : "qg"; }

namespace {

CycNum sgn(long e, int order) { return CycNum((e % 2 == 0) ? 1L : -1L, order); }

}  // namespace

std::vector<CycNum> cartan_zeta_table(const SectorSet& S, CartanZeta z, int t) {
  int p = S.p(), n = 2 * p;
  std::vector<CycNum> out(n * n, CycNum::one(4 * p));
  if (z == CartanZeta::qg) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a % 2) out[a * n + b] = qhalf(p, long(t) * S.rep(b));
  }
  int r0 = S.residue(0);
  for (int a = 0; a < n; ++a)
    if (!out[a * n + r0].is_one() || !out[r0 * n + a].is_one())
      throw InvalidParameters("zeta is not normalised on the sector of 0 for this sector set");
  return out;
}

CartanData build_cartan(int p, const SectorSet& S, CartanZeta z, int t) {
  if (S.p() != p) throw InvalidParameters("sector set built for a different p");
  if (t % 2 == 0) throw InvalidParameters("t must be odd");
  CartanData d{p, t, S, z, {}, {}, {}, {}, {}, {}};
  int n = 2 * p, N = 4 * p;
  d.zeta = cartan_zeta_table(S, z, t);
  d.Phi.assign(n * n * n, CycNum(N));
  for (long a : S.elements())
    for (long b : S.elements())
      for (long c : S.elements()) {
        CycNum num = d.z(a, b) * d.z(S.rep(a + b), c);
        CycNum den = d.z(b, c) * d.z(a, S.rep(b + c));
        d.Phi[(S.residue(a) * n + S.residue(b)) * n + S.residue(c)] = sgn(a * kappa(b, c, S), N) * num / den;
      }
  d.R.assign(n * n, CycNum(N));
  for (long a : S.elements())
    for (long b : S.elements()) d.R[S.residue(a) * n + S.residue(b)] = qhalf(p, a * b) * d.z(b, a) / d.z(a, b);
  d.v.assign(n, CycNum(N));
  d.v_K.assign(n, CycNum(N));
  CycNum g = gauss_normalizer(p);
  for (long a = 0; a < n; ++a) {
    d.v[a] = qhalf(p, -a * a);
    d.v_K[a] = g * qhalf(p, a * a);
  }
  d.beta = derived_beta(d);
  return d;
}

std::vector<CycNum> literal_beta(const CartanData& d) {
  std::vector<CycNum> out(d.n(), CycNum(d.order()));
  long zero = d.S.rep(0);
  for (long a : d.S.elements()) {
    long m = d.S.rep(-a);
    out[d.S.residue(a)] = qhalf(d.p, a * zero) * d.z(a, m) / d.z(m, a);
  }
  return out;
}

std::vector<CycNum> derived_beta(const CartanData& d) {
  // from S(Phi1) Phi2 beta S(Phi3) = 1 on the sector e_a
  std::vector<CycNum> out(d.n(), CycNum(d.order()));
  for (long a : d.S.elements()) out[d.S.residue(a)] = d.phi(a, d.S.rep(-a), a);
  return out;
}

CheckResult check_cartan_pentagon(const CartanData& d) {
  return timed("Cartan pentagon (3-cocycle)", [&] {
    const SectorSet& S = d.S;
    for (long a : S.elements())
      for (long b : S.elements())
        for (long c : S.elements())
          for (long e : S.elements()) {
            CycNum lhs = d.phi(a + b, c, e) * d.phi(a, b, c + e);
            CycNum rhs = d.phi(a, b, c) * d.phi(a, b + c, e) * d.phi(b, c, e);
            if (lhs != rhs)
              return Outcome::fail("sectors (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                                   "," + std::to_string(e) + "): " + lhs.str() + " vs " + rhs.str());
          }
    return Outcome::ok();
  });
}

CheckResult check_cartan_hexagons(const CartanData& d) {
  return timed("Cartan hexagons", [&] {
    const SectorSet& S = d.S;
    for (long a : S.elements())
      for (long b : S.elements())
        for (long c : S.elements()) {
          std::string at = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
          CycNum h1l = d.r(a, b + c);
          CycNum h1r = d.phi(a, b, c) * d.phi(b, c, a) * d.r(a, b) * d.r(a, c) / d.phi(b, a, c);
          if (h1l != h1r) return Outcome::fail("first hexagon at " + at);
          CycNum h2l = d.phi(a, b, c) * d.r(a + b, c) * d.phi(c, a, b);
          CycNum h2r = d.r(b, c) * d.phi(a, c, b) * d.r(a, c);
          if (h2l != h2r) return Outcome::fail("second hexagon at " + at);
        }
    return Outcome::ok();
  });
}

CheckResult check_cartan_antipode(const CartanData& d, const std::vector<CycNum>& beta) {
  return timed("Cartan antipode identities", [&] {
    const SectorSet& S = d.S;
    int n = d.n(), N = d.order();
    // group-like part: S(x1) x2 = eps(x) and x1 beta S(x2) = eps(x) beta on each e_a
    for (int a = 0; a < n; ++a) {
      std::vector<CycNum> left(n, CycNum(N)), right(n, CycNum(N));
      for (int b = 0; b < n; ++b) {
        int c = S.residue(a - b), sb = S.residue(-b);
        if (sb == c) left[c] += CycNum::one(N);
        int sc = S.residue(-c);
        if (b == sc) right[b] += beta[b];
      }
      for (int x = 0; x < n; ++x) {
        CycNum wl = a == 0 ? CycNum::one(N) : CycNum(N);
        CycNum wr = a == 0 ? beta[x] : CycNum(N);
        if (left[x] != wl || right[x] != wr) return Outcome::fail("coproduct identity on e_" + std::to_string(a));
      }
    }
    for (long a : S.elements()) {
      long m = S.rep(-a);
      CycNum first = d.phi(m, a, m) * beta[S.residue(a)];
      if (!first.is_one())
        return Outcome::fail("S(Phi1) Phi2 beta S(Phi3) on e_" + std::to_string(a) + " = " + first.str());
      CycNum second = beta[S.residue(a)] / d.phi(a, m, a);
      if (!second.is_one())
        return Outcome::fail("Phi^-1_1 beta S(Phi^-1_2) Phi^-1_3 on e_" + std::to_string(a) + " = " + second.str());
    }
    return Outcome::ok();
  });
}

CheckResult check_cartan_ribbon(const CartanData& d) {
  return timed("Cartan ribbon and balancing", [&] {
    const SectorSet& S = d.S;
    if (!d.v[S.residue(0)].is_one()) return Outcome::fail("eps(v) != 1");
    for (long a : S.elements()) {
      if (d.v[S.residue(a)] != d.v[S.residue(-a)]) return Outcome::fail("S(v) != v at " + std::to_string(a));
      for (long b : S.elements()) {
        // theta_{U (x) V} = (theta_U (x) theta_V) c c with theta = v^-1
        CycNum lhs = d.v[S.residue(a)] * d.v[S.residue(b)];
        CycNum rhs = d.v[S.residue(a + b)] * d.r(a, b) * d.r(b, a);
        if (lhs != rhs) return Outcome::fail("balancing at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
    return Outcome::ok();
  });
}

CheckResult check_gauss_resummation(const CartanData& d) {
  return timed("ribbon element Gauss resummation", [&] {
    int n = d.n(), N = d.order(), p = d.p;
    // expand e_a = (1/2p) sum_l q^{-al} K^l
    CycNum inv(Rat(1, n), N);
    for (long l = 0; l < n; ++l) {
      CycNum c(N);
      for (long a = 0; a < n; ++a) c += d.v[a] * qhalf(p, -2 * a * l);
      c *= inv;
      if (c != d.v_K[l]) return Outcome::fail("coefficient of K^" + std::to_string(l) + ": " + c.str() + " vs " + d.v_K[l].str());
    }
    return Outcome::ok();
  });
}

CheckResult check_self_braiding(const CartanData& d) {
  return timed("self-braiding of C_a is q^{a^2/2}", [&] {
    for (long a : d.S.elements())
      if (d.r(a, a) != qhalf(d.p, a * a)) return Outcome::fail("a = " + std::to_string(a));
    return Outcome::ok();
  });
}

std::vector<int> transparent_sectors(const CartanData& d) {
  std::vector<int> out;
  for (int a = 0; a < d.n(); ++a) {
    bool all = true;
    for (int b = 0; b < d.n() && all; ++b) all = (d.r(b, a) * d.r(a, b)).is_one();
    if (all) out.push_back(a);
  }
  return out;
}

CheckResult check_transparency(const CartanData& d) {
  return timed("transparency scan", [&] {
    for (int a = 0; a < d.n(); ++a)
      for (int b = 0; b < d.n(); ++b)
        if (d.r(b, a) * d.r(a, b) != qhalf(d.p, 2L * a * b))
          return Outcome::fail("double braiding at (" + std::to_string(a) + "," + std::to_string(b) + ") is not q^{ab}");
    auto tr = transparent_sectors(d);
    if (tr.size() != 1 || tr[0] != 0) {
      std::string w = "transparent sectors:";
      for (int a : tr) w += " " + std::to_string(a);
      return Outcome::fail(w);
    }
    return Outcome::ok("only the trivial sector is transparent");
  });
}

CheckResult check_cartan_drinfeld_rank(const CartanData& d) {
  return timed("Cartan Drinfeld map has full rank", [&] {
    SMat m(d.n(), d.n(), d.order());
    for (int a = 0; a < d.n(); ++a)
      for (int b = 0; b < d.n(); ++b) m.set(a, b, d.r(b, a) * d.r(a, b));
    int rk = m.rank();
    return Outcome::check(rk == d.n(), "rank " + std::to_string(rk) + "/" + std::to_string(d.n()));
  });
}

Checks cartan_suite(const CartanData& d) {
  return {check_cartan_pentagon(d),     check_cartan_hexagons(d),     check_cartan_antipode(d, d.beta),
          check_cartan_ribbon(d),       check_gauss_resummation(d),   check_self_braiding(d),
          check_transparency(d),        check_cartan_drinfeld_rank(d)};
}

// ---------------------------------------------------------------------------
// transport

using Fmn = std::function<TransportTerm(const GradedVec&, const GradedVec&)>;

TransportTerm apply_fmn(const CartanData& d, const GradedVec& x, const GradedVec& y) {
  const SectorSet& S = d.S;
  long s = S.rep(x.a + y.a);
  TransportTerm out{{x.k + y.k + kappa(x.a, y.a, S), s}, sgn(x.a * y.k, d.order()) * d.z(x.a, y.a)};
  if (out.v.H(d.p) != x.H(d.p) + y.H(d.p)) throw std::logic_error("F_{M,N} does not preserve H");
  return out;
}

namespace {

std::string gv(const GradedVec& v) { return "1_" + std::to_string(v.k) + " e_" + std::to_string(v.a); }

// Phi from F_{U(x)V,W} (F_{U,V} (x) id) = F(Phi.-) F_{U,V(x)W} (id (x) F_{V,W})
std::optional<std::vector<CycNum>> derive_phi(const CartanData& d, const Fmn& f, long k, long l, long m, std::string& why) {
  const SectorSet& S = d.S;
  int n = d.n();
  std::vector<CycNum> out(n * n * n, CycNum(d.order()));
  for (long a : S.elements())
    for (long b : S.elements())
      for (long c : S.elements()) {
        GradedVec x{k, a}, y{l, b}, z{m, c};
        TransportTerm l1 = f(x, y), l2 = f(l1.v, z);
        TransportTerm r1 = f(y, z), r2 = f(x, r1.v);
        if (l2.v.k != r2.v.k || l2.v.a != r2.v.a) {
          why = "grades differ on " + gv(x) + ", " + gv(y) + ", " + gv(z);
          return std::nullopt;
        }
        out[(S.residue(a) * n + S.residue(b)) * n + S.residue(c)] = (l1.c * l2.c) / (r1.c * r2.c);
      }
  return out;
}

// R from F_{V,U} c^M = F(tau R.-) F_{U,V}, with c^M = tau q^{H (x) H / 2}
std::optional<std::vector<CycNum>> derive_r(const CartanData& d, const Fmn& f, long k, long l, std::string& why) {
  const SectorSet& S = d.S;
  int n = d.n();
  std::vector<CycNum> out(n * n, CycNum(d.order()));
  for (long a : S.elements())
    for (long b : S.elements()) {
      GradedVec x{k, a}, y{l, b};
      TransportTerm lhs = f(y, x), rhs = f(x, y);
      if (lhs.v.k != rhs.v.k || lhs.v.a != rhs.v.a) {
        why = "grades differ on " + gv(x) + ", " + gv(y);
        return std::nullopt;
      }
      out[S.residue(a) * n + S.residue(b)] = qhalf(d.p, x.H(d.p) * y.H(d.p)) * lhs.c / rhs.c;
    }
  return out;
}

Outcome compare_tables(const std::vector<CycNum>& got, const std::vector<CycNum>& want, const std::string& what) {
  for (size_t i = 0; i < got.size(); ++i)
    if (got[i] != want[i])
      return Outcome::fail(what + " differs at flat index " + std::to_string(i) + ": " + got[i].str() + " vs " + want[i].str());
  return Outcome::ok();
}

std::string grades(std::initializer_list<long> g) {
  std::string s = "(";
  for (long x : g) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + ")";
}

}  // namespace

CheckResult check_cartan_transport_assoc(const CartanData& d, long k, long l, long m) {
  return timed("transport: associator at grades " + grades({k, l, m}), [&] {
    std::string why;
    Fmn f = [&](const GradedVec& x, const GradedVec& y) { return apply_fmn(d, x, y); };
    auto phi = derive_phi(d, f, k, l, m, why);
    if (!phi) return Outcome::fail(why);
    return compare_tables(*phi, d.Phi, "Phi");
  });
}

CheckResult check_cartan_transport_braiding(const CartanData& d, long k, long l) {
  return timed("transport: braiding at grades " + grades({k, l}), [&] {
    std::string why;
    Fmn f = [&](const GradedVec& x, const GradedVec& y) { return apply_fmn(d, x, y); };
    auto r = derive_r(d, f, k, l, why);
    if (!r) return Outcome::fail(why);
    return compare_tables(*r, d.R, "R");
  });
}

CheckResult check_cartan_transport_twist(const CartanData& d, long k) {
  return timed("transport: twist at grade " + std::to_string(k), [&] {
    // theta = q^{H^2/2} on 1_k (x) e_a must act as v^-1
    for (long a : d.S.elements()) {
      GradedVec x{k, a};
      CycNum th = qhalf(d.p, x.H(d.p) * x.H(d.p));
      if (th * d.v[d.S.residue(a)] != CycNum::one(d.order())) return Outcome::fail("sector " + std::to_string(a));
    }
    return Outcome::ok();
  });
}

CheckResult check_sector_relabelling(const CartanData& d, const CartanData& d2) {
  return timed("transport with " + d2.S.name() + " sectors equals relabelled " + d.S.name() + " transport", [&] {
    if (d.p != d2.p || d.zeta_choice != d2.zeta_choice || d.t != d2.t) return Outcome::fail("data not comparable");
    const SectorSet &S = d.S, &S2 = d2.S;
    int tp = 2 * d.p;
    auto eta = [&](const GradedVec& x, const SectorSet& from, const SectorSet& to) {
      return GradedVec{x.k + (from.rep(x.a) - to.rep(x.a)) / tp, to.rep(x.a)};
    };
    // F~ = eta^-1 F^{S'} (eta (x) eta), read in S-grading
    Fmn f = [&](const GradedVec& x, const GradedVec& y) {
      TransportTerm t = apply_fmn(d2, eta(x, S, S2), eta(y, S, S2));
      return TransportTerm{eta(t.v, S2, S), t.c};
    };
    std::string why;
    for (auto [k, l, m] : {std::array<long, 3>{0, 0, 0}, std::array<long, 3>{1, -1, 1}}) {
      auto phi = derive_phi(d, f, k, l, m, why);
      if (!phi) return Outcome::fail(why);
      auto o = compare_tables(*phi, d2.Phi, "Phi");
      if (o.status != Status::pass) return o;
      auto r = derive_r(d, f, k, l, why);
      if (!r) return Outcome::fail(why);
      o = compare_tables(*r, d2.R, "R");
      if (o.status != Status::pass) return o;
    }
    return Outcome::ok();
  });
}

CheckResult check_locality_grades(int p, int max_den, int range) {
  return timed("local Lambda-module grades are integers", [&] {
    // the generator 1_1 of Lambda_p sits in H-grade 2p; its double braiding
    // with a vector of grade h = n/den is q^{2p h}
    for (int den = 1; den <= max_den; ++den)
      for (int num = -range * den; num <= range * den; ++num) {
        int N = 4 * p * den;
        CycNum mono = CycNum::zeta_power(N, 4L * p * num);  // q = zeta_N^{2 den}
        bool local = mono.is_one();
        bool integral = num % den == 0;
        if (local != integral)
          return Outcome::fail("h = " + std::to_string(num) + "/" + std::to_string(den) + " local=" + std::to_string(local));
      }
    return Outcome::ok();
  });
}

Checks cartan_transport(const CartanData& d) {
  Checks out{check_cartan_transport_assoc(d, 0, 0, 0), check_cartan_transport_assoc(d, 1, -1, 1),
             check_cartan_transport_braiding(d, 0, 0), check_cartan_transport_braiding(d, 1, -1),
             check_cartan_transport_twist(d, 0), check_cartan_transport_twist(d, 1)};
  SectorSet other = d.S.name() == "symmetric" ? SectorSet::standard(d.p) : SectorSet::symmetric(d.p);
  out.push_back(check_sector_relabelling(d, build_cartan(d.p, other, d.zeta_choice, d.t)));
  out.push_back(check_locality_grades(d.p));
  return out;
}

}  // namespace qhopf
