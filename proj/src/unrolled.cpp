#include "qhopf/unrolled.hpp"

#include <numeric>
#include <regex>
#include <set>

namespace qhopf {

CycNum q_rat(int p, const Rat& x, int N) {
  Rat e = x * N / (2 * p);
  e.canonicalize();
  if (e.get_den() != 1) throw std::invalid_argument("q^" + rat_str(x) + " does not live at order " + std::to_string(N));
  return CycNum::zeta_power(N, e.get_num().get_si());
}

CycNum q_number_rat(int p, const Rat& x, int N) {
  CycNum d = qhalf(p, 2).embed(N) - qhalf(p, -2).embed(N);
  return (q_rat(p, x, N) - q_rat(p, -x, N)) / d;
}

int weight_field_order(int p, long den) { return int(4L * p * den * den); }

namespace {

SMat embed_mat(const SMat& m, int N) {
  if (m.order() == N) return m;
  SMat out(m.rows(), m.cols(), N);
  for (int i = 0; i < m.rows(); ++i)
    for (auto& [j, v] : m.row(i)) out.set(i, j, v.embed(N));
  return out;
}

CycNum sgn(long e, int N) { return CycNum((e % 2 == 0) ? 1L : -1L, N); }

// (q - q^-1)^n / [n]! q^{n(n-1)/2}
CycNum r_coeff(int p, int n) {
  CycNum c = (qhalf(p, 2) - qhalf(p, -2)).pow(n) * qhalf(p, long(n) * (n - 1));
  return c / q_factorial(n, p);
}

Outcome mat_eq(const SMat& a, const SMat& b, const std::string& what) {
  if (a == b) return Outcome::ok();
  return Outcome::fail(what + ": residual has " + std::to_string((a - b).nnz()) + " nonzero entries");
}

}  // namespace

// ---------------------------------------------------------------------------
// weight modules

WeightRep WeightRep::make(std::string name, int p, int order, SMat E, SMat F, std::vector<Rat> H) {
  int d = int(H.size());
  auto fail = [&](const std::string& w) { throw InvalidWeightRep(name + ": " + w); };
  if (E.rows() != d || E.cols() != d || F.rows() != d || F.cols() != d) fail("matrix shapes differ");
  if (order % (4 * p) != 0) fail("field order must be a multiple of 4p");
  for (auto& h : H)
    if (Rat(h * order / (2 * p)).get_den() != 1) fail("q^H needs a larger field");
  for (int i = 0; i < d; ++i) {
    for (auto& [j, v] : E.row(i))
      if (H[i] != H[j] + 2) fail("[H,E] != 2E");
    for (auto& [j, v] : F.row(i))
      if (H[i] != H[j] - 2) fail("[H,F] != -2F");
  }
  WeightRep r;
  r.name_ = std::move(name);
  r.p_ = p;
  r.order_ = order;
  r.E_ = embed_mat(E, order);
  r.F_ = embed_mat(F, order);
  r.H_ = std::move(H);
  CycNum qq = (qhalf(p, 2) - qhalf(p, -2)).embed(order).inverse();
  if (!(r.E_ * r.F_ - r.F_ * r.E_ == (r.K() - r.K(-1)) * qq)) fail("[E,F] != (K-K^-1)/(q-q^-1)");
  if (!r.E_.pow(p).is_zero() || !r.F_.pow(p).is_zero()) fail("E^p or F^p nonzero");
  return r;
}

SMat WeightRep::K(int power) const {
  std::vector<CycNum> d;
  for (auto& h : H_) d.push_back(q_rat(p_, h * power, order_));
  return SMat::diagonal(d, order_);
}

SMat WeightRep::q_H2(const Rat& c) const {
  std::vector<CycNum> d;
  for (auto& h : H_) d.push_back(q_rat(p_, c * h * h, order_));
  return SMat::diagonal(d, order_);
}

WeightRep WeightRep::embed(int N) const {
  if (N == order_) return *this;
  WeightRep r = *this;
  r.order_ = N;
  r.E_ = embed_mat(E_, N);
  r.F_ = embed_mat(F_, N);
  return r;
}

WeightRep typical(const Rat& alpha, int p) {
  Rat a = alpha;
  a.canonicalize();
  int N = weight_field_order(p, a.get_den().get_si());
  SMat E(p, p, N), F(p, p, N);
  std::vector<Rat> H;
  for (int n = 0; n < p; ++n) {
    H.push_back(a + p - 1 - 2 * n);
    if (n >= 1) E.set(n - 1, n, q_number(n, p).embed(N) * q_number_rat(p, Rat(n) - a, N));
    if (n + 1 < p) F.set(n + 1, n, CycNum::one(N));
  }
  auto r = WeightRep::make("V_" + rat_str(a), p, N, E, F, H);
  if (a.get_den() == 1 && a.get_num().get_si() % p != 0) r.warning = "alpha in Z \\ pZ: V_alpha is reducible";
  return r;
}

WeightRep atypical(int s, long k, int p) {
  if (s < 1 || s > p - 1) throw InvalidWeightRep("S_{s,k} needs 1 <= s <= p-1");
  int N = 4 * p;
  SMat E(s, s, N), F(s, s, N);
  std::vector<Rat> H;
  for (int n = 0; n < s; ++n) {
    H.push_back(Rat(s - 1 - 2 * n + k * p));
    if (n >= 1) E.set(n - 1, n, sgn(k, N) * q_number(n, p) * q_number(s - n, p));
    if (n + 1 < s) F.set(n + 1, n, CycNum::one(N));
  }
  return WeightRep::make("S_" + std::to_string(s) + "," + std::to_string(k), p, N, E, F, H);
}

WeightRep parse_weight_rep(const std::string& desc, int p) {
  std::smatch m;
  if (std::regex_match(desc, m, std::regex(R"(V:a=(-?\d+(?:/\d+)?))"))) {
    Rat a(m[1].str());
    a.canonicalize();
    return typical(a, p);
  }
  if (std::regex_match(desc, m, std::regex(R"(S:s=(\d+),k=(-?\d+))"))) return atypical(std::stoi(m[1]), std::stol(m[2]), p);
  throw InvalidWeightRep("cannot parse weight module descriptor '" + desc + "'");
}

std::vector<WeightRep> weight_probe_family(int p) {
  std::vector<WeightRep> out{typical(Rat(p), p), typical(Rat(1, 2), p), typical(Rat(3, 2), p)};
  for (int s = 1; s < p; ++s)
    for (long k : {0L, 1L}) out.push_back(atypical(s, k, p));
  return out;
}

namespace {

std::pair<WeightRep, WeightRep> common(const WeightRep& U, const WeightRep& V) {
  int N = std::lcm(U.order(), V.order());
  return {U.embed(N), V.embed(N)};
}

}  // namespace

WeightRep weight_tensor(const WeightRep& U0, const WeightRep& V0) {
  if (U0.p() != V0.p()) throw InvalidWeightRep("weight_tensor: different p");
  auto [U, V] = common(U0, V0);
  int N = U.order();
  SMat IU = SMat::identity(U.dim(), N), IV = SMat::identity(V.dim(), N);
  SMat E = kron(IU, V.E()) + kron(U.E(), V.K());
  SMat F = kron(U.K(-1), V.F()) + kron(U.F(), IV);
  std::vector<Rat> H;
  for (auto& x : U.H())
    for (auto& y : V.H()) H.push_back(x + y);
  return WeightRep::make("(" + U.name() + " x " + V.name() + ")", U.p(), N, E, F, H);
}

SMat weight_R(const WeightRep& U0, const WeightRep& V0) {
  auto [U, V] = common(U0, V0);
  int p = U.p(), N = U.order();
  std::vector<CycNum> cartan;
  for (auto& x : U.H())
    for (auto& y : V.H()) cartan.push_back(q_rat(p, x * y / 2, N));
  SMat sum(U.dim() * V.dim(), U.dim() * V.dim(), N);
  SMat En = SMat::identity(U.dim(), N), Fn = SMat::identity(V.dim(), N);
  for (int n = 0; n < p; ++n) {
    sum += kron(En, Fn) * r_coeff(p, n).embed(N);
    En = En * U.E();
    Fn = Fn * V.F();
  }
  return SMat::diagonal(cartan, N) * sum;
}

SMat weight_braiding(const WeightRep& U, const WeightRep& V) {
  SMat R = weight_R(U, V);
  return flip_matrix(U.dim(), V.dim(), R.order()) * R;
}

SMat weight_v(const WeightRep& U) {
  int p = U.p(), N = U.order();
  SMat SF = U.K() * U.F() * CycNum(-1L, N);  // S(F) = -K F
  SMat D = U.q_H2(Rat(-1, 2));
  SMat sum(U.dim(), U.dim(), N), SFn = SMat::identity(U.dim(), N), En = SFn;
  for (int n = 0; n < p; ++n) {
    sum += SFn * D * En * r_coeff(p, n).embed(N);
    SFn = SFn * SF;
    En = En * U.E();
  }
  return U.K(p - 1) * sum;
}

SMat weight_twist(const WeightRep& U) {
  auto inv = weight_v(U).inverse();
  if (!inv) throw std::logic_error("v is not invertible on " + U.name());
  return *inv;
}

CheckResult check_weight_balancing(const WeightRep& U0, const WeightRep& V0) {
  return timed("balancing on (" + U0.name() + ", " + V0.name() + ")", [&] {
    auto [U, V] = common(U0, V0);
    WeightRep UV = weight_tensor(U, V);
    SMat rhs = kron(weight_twist(U), weight_twist(V)) * weight_braiding(V, U) * weight_braiding(U, V);
    return mat_eq(weight_twist(UV), rhs, "theta_{UV} vs (theta_U x theta_V) c c");
  });
}

CheckResult check_weight_braiding_natural(const WeightRep& U0, const WeightRep& V0) {
  return timed("braiding intertwines on (" + U0.name() + ", " + V0.name() + ")", [&] {
    auto [U, V] = common(U0, V0);
    WeightRep UV = weight_tensor(U, V), VU = weight_tensor(V, U);
    SMat c = weight_braiding(U, V);
    if (c * UV.E() != VU.E() * c) return Outcome::fail("c E != E c");
    if (c * UV.F() != VU.F() * c) return Outcome::fail("c F != F c");
    std::vector<CycNum> hu, hv;
    for (auto& h : UV.H()) hu.push_back(CycNum(h, UV.order()));
    for (auto& h : VU.H()) hv.push_back(CycNum(h, VU.order()));
    return Outcome::check(c * SMat::diagonal(hu, UV.order()) == SMat::diagonal(hv, VU.order()) * c, "c H != H c");
  });
}

CycNum double_braiding_highest(const WeightRep& U0, const WeightRep& V0) {
  auto [U, V] = common(U0, V0);
  SMat cc = weight_braiding(V, U) * weight_braiding(U, V);
  for (int i = 1; i < cc.rows(); ++i)
    if (!cc.get(i, 0).is_zero()) throw std::logic_error("v_0 (x) v_0 is not an eigenvector of the double braiding");
  return cc.get(0, 0);
}

CheckResult check_transparency_scalar(const Rat& alpha, const Rat& beta, int p) {
  return timed("double braiding on V_" + rat_str(alpha) + " (x) V_" + rat_str(beta), [&] {
    CycNum got = double_braiding_highest(typical(alpha, p), typical(beta, p));
    CycNum want = q_rat(p, (alpha + p - 1) * (beta + p - 1), got.order());
    return Outcome::check(got == want, "got " + got.str() + ", want " + want.str());
  });
}

std::vector<std::string> weight_transparency_scan(const std::vector<WeightRep>& candidates,
                                                  const std::vector<WeightRep>& probes) {
  std::vector<std::string> out;
  for (auto& X : candidates) {
    bool transparent = true;
    for (auto& P : probes) {
      if (!(weight_braiding(P, X) * weight_braiding(X, P)).is_identity()) {
        transparent = false;
        break;
      }
    }
    if (transparent) out.push_back(X.name());
  }
  return out;
}

// ---------------------------------------------------------------------------
// local modules

LocalModule induce_FS(const Rep& M, const SectorSet& S) {
  int p = M.p(), d = M.dim(), N = M.order();
  if (S.p() != p) throw InvalidParameters("induce_FS: sector set for another p");
  auto A = Algebra::get(p);
  SMat P(d, d, N);
  std::vector<int> residue;
  int col = 0;
  for (int r = 0; r < 2 * p; ++r) {
    SMat proj = M.act(idempotent_e(A, r)).transpose();
    RowReducer rr(d);
    for (int i = 0; i < d; ++i)
      if (!proj.row(i).empty()) rr.add_row(proj.row(i));
    for (auto& [piv, v] : rr.pivots()) {
      for (auto& [i, x] : v) P.set(i, col, x);
      residue.push_back(r);
      ++col;
    }
  }
  if (col != d) throw std::logic_error("K-eigenspaces do not span " + M.name());
  SMat Pinv = *P.inverse();
  LocalModule L{M, Rep::make(M.name(), p, Pinv * M.E() * P, Pinv * M.F() * P, Pinv * M.K() * P), P, S, {}, residue,
                {}, {}};
  for (int r = 0; r < 2 * p; ++r) L.lift.push_back(Rat(S.rep(r)));
  for (int sign : {1, -1}) {
    std::map<long, std::vector<CycNum>> sel;
    for (int i = 0; i < d; ++i) {
      long j = kappa_pm(S.rep(residue[i]), sign, S);
      auto& v = sel[j];
      if (v.empty()) v.assign(d, CycNum(N));
      v[i] = CycNum::one(N);
    }
    for (auto& [j, v] : sel) {
      SMat blk = (sign > 0 ? L.base.E() : L.base.F()) * SMat::diagonal(v, N);
      if (!blk.is_zero()) (sign > 0 ? L.E_blocks : L.F_blocks)[int(j)] = blk;
    }
  }
  return L;
}

Window materialise(const LocalModule& L, long kmin, long kmax) {
  Window W;
  W.p = L.p();
  W.d = L.dim();
  W.kmin = kmin;
  W.kmax = kmax;
  int n = int((kmax - kmin + 1) * W.d), N = L.base.order();
  W.E = SMat(n, n, N);
  W.F = SMat(n, n, N);
  W.shift_up = SMat(n, n, N);
  W.shift_down = SMat(n, n, N);
  for (long k = kmin; k <= kmax; ++k) {
    for (int i = 0; i < W.d; ++i) {
      W.H.push_back(L.H_at(i, k));
      if (k + 1 <= kmax) W.shift_up.set(W.index(k + 1, i), W.index(k, i), CycNum::one(N));
      if (k - 1 >= kmin) W.shift_down.set(W.index(k - 1, i), W.index(k, i), CycNum::one(N));
    }
    for (auto [blocks, target] : {std::pair{&L.E_blocks, &W.E}, std::pair{&L.F_blocks, &W.F}})
      for (auto& [j, B] : *blocks) {
        if (k + j < kmin || k + j > kmax) continue;
        for (int r = 0; r < W.d; ++r)
          for (auto& [c, v] : B.row(r)) target->set(W.index(k + j, r), W.index(k, c), v);
      }
  }
  return W;
}

namespace {

std::vector<CycNum> column(const SMat& m, int c) {
  std::vector<CycNum> v(m.rows(), CycNum(m.order()));
  for (int i = 0; i < m.rows(); ++i) v[i] = m.get(i, c);
  return v;
}

std::vector<CycNum> shift_by(const Window& W, std::vector<CycNum> v, long k) {
  for (; k > 0; --k) v = W.shift_up.apply(v);
  for (; k < 0; ++k) v = W.shift_down.apply(v);
  return v;
}

std::vector<int> fundamental(const Window& W, const SectorSet& S) {
  std::set<long> s(S.elements().begin(), S.elements().end());
  std::vector<int> out;
  for (int i = 0; i < W.size(); ++i)
    if (W.H[i].get_den() == 1 && s.count(W.H[i].get_num().get_si())) out.push_back(i);
  return out;
}

}  // namespace

Rep restrict_GS(const Window& W, const SectorSet& S) {
  auto fund = fundamental(W, S);
  int n = int(fund.size()), N = W.E.order(), p = W.p;
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[fund[i]] = i;
  SMat E(n, n, N), F(n, n, N);
  std::vector<CycNum> kd;
  for (int i = 0; i < n; ++i) {
    long a = W.H[fund[i]].get_num().get_si();
    kd.push_back(qpow(p, a));
    for (auto [gen, sign, out] : {std::tuple{&W.E, 1, &E}, std::tuple{&W.F, -1, &F}}) {
      auto v = shift_by(W, column(*gen, fund[i]), -kappa_pm(a, sign, S));
      for (int r = 0; r < W.size(); ++r) {
        if (v[r].is_zero()) continue;
        auto it = pos.find(r);
        if (it == pos.end()) throw std::logic_error("G_S: image leaves the fundamental component");
        out->set(it->second, i, v[r]);
      }
    }
  }
  return Rep::make("G(" + std::to_string(n) + ")", p, E, F, SMat::diagonal(kd, N));
}

Checks check_induced_relations(const LocalModule& L) {
  int p = L.p(), d = L.dim(), N = L.base.order();
  const SectorSet& S = L.S;
  Checks out;
  out.push_back(timed("H-weights of E and F blocks on " + L.input.name(), [&] {
    for (auto [blocks, w] : {std::pair{&L.E_blocks, 2}, std::pair{&L.F_blocks, -2}})
      for (auto& [j, B] : *blocks)
        for (int r = 0; r < d; ++r)
          for (auto& [c, v] : B.row(r))
            if (L.H_at(r, j) - L.H_at(c, 0) != w)
              return Outcome::fail("shift " + std::to_string(j) + " entry (" + std::to_string(r) + "," +
                                   std::to_string(c) + ") moves H by " + rat_str(L.H_at(r, j) - L.H_at(c, 0)));
    for (auto& h : L.lift)
      if (h.get_den() != 1) return Outcome::fail("non-integer H-eigenvalue " + rat_str(h));
    return Outcome::ok();
  }));
  out.push_back(timed("K = q^H on " + L.input.name(), [&] {
    std::vector<CycNum> kd;
    for (int i = 0; i < d; ++i) kd.push_back(q_rat(p, L.lift[L.residue[i]], N));
    return mat_eq(L.base.K(), SMat::diagonal(kd, N), "K vs q^H");
  }));
  out.push_back(timed("[E,F] on the graded pieces of " + L.input.name(), [&] {
    SMat rhs = (L.base.K() - L.base.K().pow(2 * p - 1)) * (qhalf(p, 2) - qhalf(p, -2)).inverse();
    for (int s = -2; s <= 2; ++s) {
      SMat acc(d, d, N);
      for (auto& [i, Ei] : L.E_blocks)
        for (auto& [j, Fj] : L.F_blocks)
          if (i + j == s) acc += Ei * Fj - Fj * Ei;
      if (acc != (s == 0 ? rhs : SMat(d, d, N)))
        return Outcome::fail("grade shift " + std::to_string(s) + " of [E,F] is wrong");
    }
    return Outcome::ok();
  }));
  out.push_back(timed("E^n, F^n power formula and E^p = F^p = 0 on " + L.input.name(), [&] {
    for (auto [blocks, gen, sign] :
         {std::tuple{&L.E_blocks, &L.base.E(), 1}, std::tuple{&L.F_blocks, &L.base.F(), -1}}) {
      std::map<int, SMat> pw{{0, SMat::identity(d, N)}};
      for (int n = 1; n <= p; ++n) {
        std::map<int, SMat> next;
        for (auto& [j, B] : *blocks)
          for (auto& [i, P] : pw) {
            auto it = next.find(i + j);
            if (it == next.end()) next.emplace(i + j, B * P);
            else it->second += B * P;
          }
        pw = std::move(next);
        // expected: column i goes to shift (a + 2n sign - <a + 2n sign>) / 2p
        SMat Gn = gen->pow(n);
        std::map<int, std::vector<CycNum>> sel;
        for (int i = 0; i < d; ++i) {
          long a = S.rep(L.residue[i]);
          int j = int(kappa(a, 2L * n * sign, S));
          auto& v = sel[j];
          if (v.empty()) v.assign(d, CycNum(N));
          v[i] = CycNum::one(N);
        }
        std::set<int> keys;
        for (auto& [j, _] : pw) keys.insert(j);
        for (auto& [j, _] : sel) keys.insert(j);
        for (int j : keys) {
          SMat got = pw.count(j) ? pw[j] : SMat(d, d, N);
          SMat want = sel.count(j) ? Gn * SMat::diagonal(sel[j], N) : SMat(d, d, N);
          if (got != want)
            return Outcome::fail(std::string(sign > 0 ? "E" : "F") + "^" + std::to_string(n) + " at shift " +
                                 std::to_string(j));
        }
        if (n == p)
          for (auto& [j, B] : pw)
            if (!B.is_zero()) return Outcome::fail(std::string(sign > 0 ? "E" : "F") + "^p != 0");
      }
    }
    return Outcome::ok();
  }));
  out.push_back(timed("Lambda acts by grade-shift isomorphisms on " + L.input.name(), [&] {
    Window W = materialise(L);
    // on interior grades: rho(1_1) commutes with E, F, shifts H by 2p, and is inverted by rho(1_-1)
    for (long k = W.kmin + 1; k < W.kmax; ++k)
      for (int i = 0; i < d; ++i) {
        int c = W.index(k, i);
        auto e = column(W.E, c);
        if (W.shift_up.apply(e) != W.E.apply(column(W.shift_up, c))) return Outcome::fail("rho(1_1) E != E rho(1_1)");
        auto f = column(W.F, c);
        if (W.shift_up.apply(f) != W.F.apply(column(W.shift_up, c))) return Outcome::fail("rho(1_1) F != F rho(1_1)");
        if (W.shift_down.apply(column(W.shift_up, c)) != column(SMat::identity(W.size(), N), c))
          return Outcome::fail("rho(1_-1) rho(1_1) != id at grade " + std::to_string(k));
        if (W.H[W.index(k + 1, i)] != W.H[c] + 2 * p) return Outcome::fail("rho(1_1) does not raise H by 2p");
      }
    return Outcome::ok();
  }));
  return out;
}

CheckResult check_locality(const LocalModule& L) {
  return timed("locality of F_S(" + L.input.name() + ")", [&] {
    int p = L.p();
    std::string bad;
    std::set<int> present(L.residue.begin(), L.residue.end());
    for (int r : present)
      for (long k : {0L, 1L}) {
        Rat h = Rat(2L * p * k) + L.lift[r];
        long den = h.get_den().get_si();
        int N = 4 * p * int(den);
        for (long m : {1L, -1L}) {
          // c_{M,Lambda} c_{Lambda,M} on 1_m (x) v is q^{2pm h}
          CycNum s = q_rat(p, Rat(2 * p * m) * h, N);
          if (!s.is_one()) {
            Rat e = Rat(2 * p * m) * h;
            bad += " grade " + std::to_string(k) + " residue " + std::to_string(r) + " h=" + rat_str(h) + " m=" +
                   std::to_string(m) + ": q^" + rat_str(e) + " = " + s.str() + ";";
          }
        }
      }
    return Outcome::check(bad.empty(), "not local:" + bad);
  });
}

CheckResult check_round_trip_GF(const LocalModule& L) {
  return timed("G_S F_S(M) = M via 1_0 (x) m -> m on " + L.input.name(), [&] {
    Rep G = restrict_GS(materialise(L), L.S);
    if (G.dim() != L.dim()) return Outcome::fail("fundamental component has the wrong dimension");
    if (L.to_input.rank() != L.dim()) return Outcome::fail("identification is not invertible");
    return Outcome::check(is_intertwiner(L.to_input, G, L.input), "1_0 (x) m -> m is not an intertwiner");
  });
}

namespace {

// 1_k (x) v -> rho(1_k) v from the window of F_S(G_S(L)) to the window of L
SMat fg_map(const Window& W, const LocalModule& L2, const Window& W2, const SectorSet& S) {
  auto fund = fundamental(W, S);
  SMat psi(W.size(), W2.size(), W.E.order());
  for (long k = W2.kmin; k <= W2.kmax; ++k)
    for (int i = 0; i < W2.d; ++i) {
      std::vector<CycNum> v(W.size(), CycNum(W.E.order()));
      for (int r = 0; r < L2.dim(); ++r) v[fund[r]] = L2.to_input.get(r, i);
      v = shift_by(W, v, k);
      for (int r = 0; r < W.size(); ++r)
        if (!v[r].is_zero()) psi.set(r, W2.index(k, i), v[r]);
    }
  return psi;
}

bool equal_on_interior(const SMat& a, const SMat& b, const Window& W2) {
  SMat at = a.transpose(), bt = b.transpose();
  for (long k = W2.kmin + 1; k < W2.kmax; ++k)
    for (int i = 0; i < W2.d; ++i)
      if (at.row(W2.index(k, i)) != bt.row(W2.index(k, i))) return false;
  return true;
}

SMat diag_rat(const std::vector<Rat>& h, int N) {
  std::vector<CycNum> v;
  for (auto& x : h) v.push_back(CycNum(x, N));
  return SMat::diagonal(v, N);
}

}  // namespace

CheckResult check_round_trip_FG(const LocalModule& L) {
  return timed("F_S G_S(V) = V via 1_k (x) v -> rho(1_k) v on F_S(" + L.input.name() + ")", [&] {
    Window W = materialise(L);
    Rep G = restrict_GS(W, L.S);
    LocalModule L2 = induce_FS(G, L.S);
    Window W2 = materialise(L2, W.kmin, W.kmax);
    SMat psi = fg_map(W, L2, W2, L.S);
    int N = W.E.order();
    if (psi.rank() != W.size()) return Outcome::fail("the map is not invertible on the window");
    if (!equal_on_interior(psi * W2.E, W.E * psi, W2)) return Outcome::fail("does not intertwine E");
    if (!equal_on_interior(psi * W2.F, W.F * psi, W2)) return Outcome::fail("does not intertwine F");
    if (psi * diag_rat(W2.H, N) != diag_rat(W.H, N) * psi) return Outcome::fail("does not intertwine H");
    if (!equal_on_interior(psi * W2.shift_up, W.shift_up * psi, W2))
      return Outcome::fail("does not intertwine the Lambda action");
    return Outcome::ok();
  });
}

CheckResult check_naturality(const LocalModule& LM, const LocalModule& LN, const SMat& f) {
  return timed("naturality of both round trips on " + LM.input.name() + " -> " + LN.input.name(), [&] {
    if (!is_intertwiner(f, LM.input, LN.input)) return Outcome::fail("f is not a morphism");
    int N = f.order();
    SMat fb = *LN.to_input.inverse() * f * LM.to_input;
    Window WM = materialise(LM), WN = materialise(LN);
    int nk = int(WM.kmax - WM.kmin + 1);
    SMat Ff = kron(SMat::identity(nk, N), fb);  // F_S(f) = id (x) f on every grade
    auto fm = fundamental(WM, LM.S), fn = fundamental(WN, LN.S);
    SMat GFf(int(fn.size()), int(fm.size()), N);
    for (size_t r = 0; r < fn.size(); ++r)
      for (size_t c = 0; c < fm.size(); ++c) GFf.set(int(r), int(c), Ff.get(fn[r], fm[c]));
    if (LN.to_input * GFf != f * LM.to_input) return Outcome::fail("G_S F_S(f) does not commute with 1_0 (x) m -> m");
    Rep GM = restrict_GS(WM, LM.S), GN = restrict_GS(WN, LN.S);
    LocalModule LM2 = induce_FS(GM, LM.S), LN2 = induce_FS(GN, LN.S);
    Window WM2 = materialise(LM2), WN2 = materialise(LN2);
    SMat g2 = *LN2.to_input.inverse() * GFf * LM2.to_input;
    SMat FGFf = kron(SMat::identity(nk, N), g2);
    SMat lhs = fg_map(WN, LN2, WN2, LN.S) * FGFf, rhs = Ff * fg_map(WM, LM2, WM2, LM.S);
    return Outcome::check(equal_on_interior(lhs, rhs, WM2), "F_S G_S(F f) does not commute with rho(1_k)");
  });
}

// ---------------------------------------------------------------------------
// F_{M,N}

LocalModule lambda_tensor(const LocalModule& L1, const LocalModule& L2, const QuasiHopfData& d) {
  return induce_FS(tensor_t(L1.input, L2.input, d), L1.S);
}

namespace {

// operators from e_a M (x) e_b N into F_S(M (x) N), keyed by grade
using Graded = std::map<long, SMat>;

void add_to(Graded& g, long k, const SMat& m) {
  auto it = g.find(k);
  if (it == g.end()) g.emplace(k, m);
  else it->second += m;
}

bool graded_eq(const Graded& a, const Graded& b, std::string& where) {
  std::set<long> keys;
  for (auto& [k, m] : a) keys.insert(k);
  for (auto& [k, m] : b) keys.insert(k);
  for (long k : keys) {
    bool za = !a.count(k) || a.at(k).is_zero(), zb = !b.count(k) || b.at(k).is_zero();
    if (za && zb) continue;
    if (za != zb || a.at(k) != b.at(k)) {
      where = "grade " + std::to_string(k);
      return false;
    }
  }
  return true;
}

}  // namespace

Checks check_FMN(const QuasiHopfData& d, const Rep& M, const Rep& N, const SectorSet& S) {
  int p = d.p, n2 = 2 * p, Nord = 4 * p;
  auto A = d.A;
  auto zeta = cartan_zeta_table(S, CartanZeta::qg, d.t);
  auto z = [&](long a, long b) { return zeta[S.residue(a) * n2 + S.residue(b)]; };
  std::vector<SMat> eM, eN;
  for (int r = 0; r < n2; ++r) {
    eM.push_back(M.act(idempotent_e(A, r)));
    eN.push_back(N.act(idempotent_e(A, r)));
  }
  SMat Et = act(d.coproduct(gen_E(A)), {&M, &N}), Ft = act(d.coproduct(gen_F(A)), {&M, &N});
  // F_{M,N}((1_k (x) X m) (x)_Lambda (1_l (x) Y n)) with X m in sector a, Y n in sector b
  auto fmn = [&](Graded& g, long k, long a, const SMat& X, long l, long b, const SMat& Y) {
    a = S.rep(a);
    b = S.rep(b);
    add_to(g, k + l + kappa(a, b, S), kron(X, Y) * (sgn(a * l, Nord) * z(a, b)));
  };
  const std::vector<std::pair<long, long>> grades{{0, 0}, {1, -1}, {-1, 2}};
  std::string ctx = " on (" + M.name() + ", " + N.name() + ") S=" + S.name();
  Checks out;
  out.push_back(timed("F_{M,N} intertwines H" + ctx, [&] {
    for (long a : S.elements())
      for (long b : S.elements())
        for (auto [k, l] : grades) {
          long c = S.rep(a + b), g = k + l + kappa(a, b, S);
          if (2L * p * k + a + 2L * p * l + b != 2L * p * g + c)
            return Outcome::fail("H mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
    return Outcome::ok();
  }));
  for (int gen = 0; gen < 2; ++gen) {
    out.push_back(timed(std::string("F_{M,N} intertwines ") + (gen == 0 ? "E" : "F") + ctx, [&] {
      for (long a : S.elements())
        for (long b : S.elements()) {
          const SMat &ea = eM[S.residue(a)], &eb = eN[S.residue(b)];
          if (ea.is_zero() || eb.is_zero()) continue;
          for (auto [k, l] : grades) {
            Graded lhs, rhs;
            long c = S.rep(a + b), g = k + l + kappa(a, b, S);
            CycNum base = sgn(a * l, Nord) * z(a, b);
            if (gen == 0) {
              // Delta(E) = 1 (x) E + E (x) K
              fmn(lhs, k, a, ea, l + kappa_pm(b, 1, S), b + 2, N.E() * eb);
              fmn(lhs, k + kappa_pm(a, 1, S), a + 2, M.E() * ea, l, b, eb * qpow(p, b));
              add_to(rhs, g + kappa_pm(c, 1, S), Et * kron(ea, eb) * base);
            } else {
              // Delta(F) = K^-1 (x) F + F (x) 1
              fmn(lhs, k, a, ea * qpow(p, -a), l + kappa_pm(b, -1, S), b - 2, N.F() * eb);
              fmn(lhs, k + kappa_pm(a, -1, S), a - 2, M.F() * ea, l, b, eb);
              add_to(rhs, g + kappa_pm(c, -1, S), Ft * kron(ea, eb) * base);
            }
            std::string where;
            if (!graded_eq(lhs, rhs, where))
              return Outcome::fail("sector (" + std::to_string(a) + "," + std::to_string(b) + ") grades (" +
                                   std::to_string(k) + "," + std::to_string(l) + "): " + where);
          }
        }
      return Outcome::ok();
    }));
  }
  out.push_back(timed("F_{M,N} intertwines the Lambda action" + ctx, [&] {
    for (long a : S.elements())
      for (long b : S.elements()) {
        const SMat &ea = eM[S.residue(a)], &eb = eN[S.residue(b)];
        if (ea.is_zero() || eb.is_zero()) continue;
        for (auto [k, l] : grades)
          for (long s : {1L, -1L, 2L}) {
            Graded base, left, right, moved;
            fmn(base, k, a, ea, l, b, eb);
            Graded shifted;
            for (auto& [g, m] : base) shifted.emplace(g + s, m);
            fmn(left, k + s, a, ea, l, b, eb);
            // the right action passes 1_s through the first factor: c gives q^{2ps h / 2} = (-1)^{s a}
            fmn(right, k, a, ea * sgn(s * a, Nord), l + s, b, eb);
            std::string where;
            if (!graded_eq(left, shifted, where)) return Outcome::fail("left Lambda action, " + where);
            if (!graded_eq(right, shifted, where)) return Outcome::fail("right Lambda action, " + where);
          }
      }
    return Outcome::ok();
  }));
  return out;
}

}  // namespace qhopf
