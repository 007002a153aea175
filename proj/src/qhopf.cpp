#include "qhopf/qhopf.hpp"

#include <sstream>

namespace qhopf {

namespace {

CycNum one(int N) { return CycNum(1L, N); }

// (q - q^-1)^n / [n]!
std::vector<CycNum> r_prefactors(const AlgPtr& A) {
  int p = A->p();
  std::vector<CycNum> out;
  CycNum qq = A->q(1) - A->q(-1), pw = one(A->order());
  for (int n = 0; n < p; ++n) {
    out.push_back(pw * q_factorial(n, p).inverse());
    pw *= qq;
  }
  return out;
}

std::string show(const Elem& x) { return clip(x.str()); }

Outcome compare(const std::string& what, const Elem& lhs, const Elem& rhs) {
  if (lhs == rhs) return Outcome::ok();
  return Outcome::fail(what + ": residual " + show(lhs - rhs));
}

}  // namespace

CycNum zeta_value(int zeta_k, int order) {
  if (order % 4) throw InvalidParameters("zeta needs an order divisible by 4");
  return root_power(order, (order / 4) * (((zeta_k % 4) + 4) % 4));
}

std::string zeta_name(int zeta_k) {
  static const char* names[] = {"1", "i", "-1", "-i"};
  return names[((zeta_k % 4) + 4) % 4];
}

int parse_zeta(const std::string& s) {
  if (s == "1") return 0;
  if (s == "i") return 1;
  if (s == "-1") return 2;
  if (s == "-i") return 3;
  throw InvalidParameters("zeta must be one of 1, -1, i, -i");
}

// ---------------------------------------------------------------------------
// structure elements

Elem coassociator(const AlgPtr& A, int t) {
  Elem e1 = idem_e1(A);
  return Elem::one(A, 3) + tensor({e1, e1, gen_K(A, -t) - Elem::one(A)});
}

Elem r_matrix(const AlgPtr& A, int t) {
  int p = A->p(), tp = 2 * p;
  auto pref = r_prefactors(A);
  CycNum norm(Rat(1, 4 * p), A->order()), one_ = one(A->order());
  Accumulator acc(size_t(p) * tp * tp);
  for (int n = 0; n < p; ++n)
    for (int s = 0; s < tp; ++s)
      for (int r = 0; r < tp; ++r) {
        long tl = t;
        CycNum bracket = one_ + A->qh(2 * tl * r) + A->qh(-2 * tl * (n + s)) + A->qh(tl * tl + 2 * tl * r - 2 * tl * (n + s));
        if (bracket.is_zero()) continue;
        // K^s E^n = q^{2sn} E^n K^s and K^r F^n = q^{-2rn} F^n K^r
        CycNum c = norm * pref[n] * A->qh(long(n) * (n - 1) - 4L * s * r + 4L * n * (s - r)) * bracket;
        int idx[2] = {A->index(n, 0, s), A->index(0, n, r)};
        acc.add(Elem::pack(idx, 2), c);
      }
  return Elem::from_terms(A, 2, acc.take());
}

Elem r_matrix_sectors(const AlgPtr& A, int t) {
  int p = A->p();
  auto pref = r_prefactors(A);
  Elem e0 = idem_e0(A), e1 = idem_e1(A);
  Elem e00 = tensor(e0, e0), e01 = tensor(e0, e1), e10 = tensor(e1, e0), e11 = tensor(e1, e1);
  CycNum norm(Rat(1, p), A->order());
  Elem out(A, 2);
  for (int n = 0; n < p; ++n)
    for (int s = 0; s < p; ++s)
      for (int r = 0; r < p; ++r) {
        long tl = t;
        CycNum c = norm * pref[n] * A->qh(long(n) * (n - 1) + 4L * n * (s - r) - 4L * s * r);
        Elem sec = e00 + A->qh(2 * tl * r) * e01 + A->qh(-2 * tl * (n + s)) * e10 +
                   A->qh(tl * tl + 2 * tl * r - 2 * tl * (n + s)) * e11;
        out += c * (Elem::basis(A, {A->index(n, 0, s), A->index(0, n, r)}, one(A->order())) * sec);
      }
  return out;
}

Elem ribbon_element(const AlgPtr& A) {
  int p = A->p();
  auto pref = r_prefactors(A);
  Elem E = gen_E(A), F = gen_F(A);
  Elem out(A, 1);
  for (int n = 0; n < p; ++n) {
    Elem fe = F.pow(n) * E.pow(n);
    for (int j = 0; j < 2 * p; ++j) {
      long jp = j + p + 1;
      out += (pref[n] * A->qh(2L * n * j - n + jp * jp)) * (fe * gen_K(A, j));
    }
  }
  return gauss_normalizer(p) * out;
}

namespace {

// values of a Cartan (x) Cartan element on e_a (x) e_b, indexed a*2p+b
using Table = std::vector<CycNum>;

Table fourier(const AlgPtr& A, const Table& coef) {
  int tp = A->two_p();
  Table out(tp * tp, CycNum(A->order()));
  for (int s = 0; s < tp; ++s)
    for (int r = 0; r < tp; ++r) {
      const CycNum& c = coef[s * tp + r];
      if (c.is_zero()) continue;
      for (int a = 0; a < tp; ++a)
        for (int b = 0; b < tp; ++b) out[a * tp + b] += c * A->q(long(a) * s + long(b) * r);
    }
  return out;
}

Table inverse_fourier(const AlgPtr& A, const Table& val) {
  int tp = A->two_p();
  CycNum norm(Rat(1, tp * tp), A->order());
  Table out(tp * tp, CycNum(A->order()));
  for (int a = 0; a < tp; ++a)
    for (int b = 0; b < tp; ++b) {
      CycNum c = val[a * tp + b];
      if (c.is_zero()) continue;
      c *= norm;
      for (int s = 0; s < tp; ++s)
        for (int r = 0; r < tp; ++r) out[s * tp + r] += c * A->q(-long(a) * s - long(b) * r);
    }
  return out;
}

}  // namespace

std::optional<Elem> invert_borel_pair(const Elem& R) {
  const AlgPtr& A = R.alg();
  int p = A->p(), tp = 2 * p;
  std::vector<Table> C(p, Table(tp * tp, CycNum(A->order())));
  for (auto& [key, c] : R.terms()) {
    PbwIndex x = A->decode(R.leg(key, 0)), y = A->decode(R.leg(key, 1));
    if (x.b || y.a || x.a != y.b) throw std::invalid_argument("invert_borel_pair: element outside the span");
    C[x.a][x.j * tp + y.j] = c;
  }
  // R = sum_n (E^n (x) F^n) C_n; moving C past E^m (x) F^m shifts its
  // Fourier values by (2m, -2m), so the graded equations become pointwise.
  std::vector<Table> L;
  for (auto& t : C) L.push_back(fourier(A, t));
  auto at = [&](const Table& t, int a, int b) -> const CycNum& {
    return t[((a % tp + tp) % tp) * tp + ((b % tp + tp) % tp)];
  };
  std::vector<Table> D(p, Table(tp * tp, CycNum(A->order())));
  for (int N = 0; N < p; ++N)
    for (int a = 0; a < tp; ++a)
      for (int b = 0; b < tp; ++b) {
        const CycNum& lead = at(L[0], a + 2 * N, b - 2 * N);
        if (lead.is_zero()) return std::nullopt;
        CycNum acc = N == 0 ? one(A->order()) : CycNum(A->order());
        for (int n = 1; n <= N; ++n) {
          int m = N - n;
          acc -= at(L[n], a + 2 * m, b - 2 * m) * D[m][a * tp + b];
        }
        D[N][a * tp + b] = acc * lead.inverse();
      }
  Accumulator out(size_t(p) * tp * tp);
  for (int N = 0; N < p; ++N) {
    Table d = inverse_fourier(A, D[N]);
    for (int s = 0; s < tp; ++s)
      for (int r = 0; r < tp; ++r) {
        int idx[2] = {A->index(N, 0, s), A->index(0, N, r)};
        out.add(Elem::pack(idx, 2), d[s * tp + r]);
      }
  }
  Elem inv = Elem::from_terms(A, 2, out.take());
  Elem unit = Elem::one(A, 2);
  if (R * inv != unit || inv * R != unit) return std::nullopt;
  return inv;
}

AlgMap legacy_coproduct(const AlgPtr& A) {
  Elem E = gen_E(A), F = gen_F(A), K = gen_K(A), Ki = gen_K(A, -1), one_ = Elem::one(A);
  return AlgMap(A, 2, tensor(one_, E) + tensor(E, K), tensor(Ki, F) + tensor(F, one_), tensor(K, K));
}

AntiMap legacy_antipode(const AlgPtr& A) {
  Elem Ki = gen_K(A, -1);
  return AntiMap(A, -(gen_E(A) * Ki), -(gen_K(A) * gen_F(A)), Ki);
}

QhPtr build(int p, int t, int zeta_k) {
  if (p < 2 || p > 12) throw InvalidParameters("p must lie in 2..12");
  if (t % 2 == 0) throw InvalidParameters("t must be odd");
  if (zeta_k < 0 || zeta_k > 3) throw InvalidParameters("zeta must be a fourth root of unity");
  auto d = std::make_shared<QuasiHopfData>();
  AlgPtr A = Algebra::get(p);
  d->A = A;
  d->p = p;
  d->t = t;
  d->zeta_k = zeta_k;
  int N = A->order();
  Elem E = gen_E(A), F = gen_F(A), K = gen_K(A), Ki = gen_K(A, -1), one1 = Elem::one(A);
  Elem e0 = idem_e0(A), e1 = idem_e1(A);
  Elem plus = e0 + A->q(t) * e1, minus = e0 + A->q(-t) * e1;

  d->Delta = std::make_shared<AlgMap>(A, 2, tensor(E, K) + tensor(plus, E), tensor(F, one1) + tensor(minus * Ki, F),
                                      tensor(K, K));
  d->S = std::make_shared<AntiMap>(A, -(E * Ki * plus), -(K * F * minus), Ki);
  d->alpha = one1;
  d->beta = e0 + gen_K(A, -t) * e1;

  d->Phi = coassociator(A, t);
  d->PhiInv = Elem::one(A, 3) + tensor({e1, e1, gen_K(A, t) - one1});
  Elem R = r_matrix(A, t);
  auto Rinv = invert_borel_pair(R);
  if (!Rinv) throw std::runtime_error("R-matrix is not invertible");
  d->R = R;
  d->RInv = *Rinv;

  if (zeta_k != 0) {
    CycNum z = zeta_value(zeta_k, N), z2 = z * z;
    Elem e111 = tensor({e1, e1, e1}), e11 = tensor(e1, e1);
    d->Phi = d->Phi * (Elem::one(A, 3) + (z2 - one(N)) * e111);
    d->PhiInv = (Elem::one(A, 3) + (z2.inverse() - one(N)) * e111) * d->PhiInv;
    d->R = d->R * (Elem::one(A, 2) + (z - one(N)) * e11);
    d->RInv = (Elem::one(A, 2) + (z.inverse() - one(N)) * e11) * d->RInv;
  }
  if (d->Phi * d->PhiInv != Elem::one(A, 3)) throw std::runtime_error("coassociator inverse check failed");
  if (d->R * d->RInv != Elem::one(A, 2)) throw std::runtime_error("R-matrix inverse check failed");

  if (zeta_k == 0) {
    d->v = ribbon_element(A);
    std::vector<int> span;
    for (int a = 0; a < p; ++a)
      for (int j = 0; j < 2 * p; ++j) span.push_back(A->index(a, a, j));
    auto vi = inverse_in_span(d->v, span);
    if (!vi) throw std::runtime_error("ribbon element is not invertible");
    d->vInv = *vi;
    d->has_ribbon = true;
  }
  return d;
}

Elem monodromy(const QuasiHopfData& d) { return flip_legs(d.R) * d.R; }

Elem monodromy_closed_form(const AlgPtr& A, int t) {
  int p = A->p(), tp = 2 * p, N = A->order();
  auto pref = r_prefactors(A);
  Elem E = gen_E(A), F = gen_F(A);
  std::vector<Elem> Ep, Fp;
  for (int n = 0; n < p; ++n) {
    Ep.push_back(E.pow(n));
    Fp.push_back(F.pow(n));
  }
  CycNum norm(Rat(1, tp), N);
  Accumulator acc(size_t(A->dim()) * 16);
  for (int m = 0; m < p; ++m)
    for (int n = 0; n < p; ++n) {
      Elem fe = Fp[m] * Ep[n], ef = Ep[m] * Fp[n];
      for (int i = 0; i < tp; ++i)
        for (int j = 0; j < tp; ++j) {
          long half = long(m) * (m - 1) + long(n) * (n - 1) + 2 * (-long(m) * m + long(m) * (j - i) - long(i) * j);
          CycNum c = norm * pref[m] * pref[n] * A->qh(half);
          if ((i + m) % 2) c *= A->q(long(t) * (m - n));
          Elem left = gen_K(A, j) * fe, right = gen_K(A, i) * ef;
          for (auto& [kl, cl] : left.terms())
            for (auto& [kr, cr] : right.terms()) {
              int idx[2] = {int(kl), int(kr)};
              acc.add(Elem::pack(idx, 2), c * cl * cr);
            }
        }
    }
  return Elem::from_terms(A, 2, acc.take());
}

Elem monodromy_idempotent_form(const AlgPtr& A, int t) {
  int p = A->p(), tp = 2 * p, N = A->order();
  auto pref = r_prefactors(A);
  Elem E = gen_E(A), F = gen_F(A);
  std::vector<Elem> en;
  for (int a = 0; a < tp; ++a) en.push_back(idempotent_e(A, a));
  Accumulator acc(size_t(A->dim()) * 16);
  for (int m = 0; m < p; ++m)
    for (int n = 0; n < p; ++n) {
      Elem fe = F.pow(m) * E.pow(n), ef = E.pow(m) * F.pow(n);
      for (int i = 0; i < tp; ++i) {
        CycNum c = pref[m] * pref[n] * A->qh(long(n) * (n - 1) - long(m) * (m + 1 + 2 * i));
        if ((i + m) % 2) c *= A->q(long(t) * (m - n));
        Elem left = en[((i - m) % tp + tp) % tp] * fe, right = gen_K(A, i) * ef;
        for (auto& [kl, cl] : left.terms())
          for (auto& [kr, cr] : right.terms()) {
            int idx[2] = {int(kl), int(kr)};
            acc.add(Elem::pack(idx, 2), c * cl * cr);
          }
      }
    }
  (void)N;
  return Elem::from_terms(A, 2, acc.take());
}

// ---------------------------------------------------------------------------
// checks

CheckResult check_coproduct_relations(const QuasiHopfData& d) {
  return timed("coproduct respects the defining relations", [&] {
    const AlgPtr& A = d.A;
    int p = d.p;
    Elem dE = d.coproduct(gen_E(A)), dF = d.coproduct(gen_F(A)), dK = d.coproduct(gen_K(A));
    Elem dKi = d.coproduct(gen_K(A, -1));
    Elem one2 = Elem::one(A, 2);
    CycNum inv = (A->q(1) - A->q(-1)).inverse();
    if (!dE.pow(p).is_zero()) return Outcome::fail("Delta(E)^p = " + show(dE.pow(p)));
    if (!dF.pow(p).is_zero()) return Outcome::fail("Delta(F)^p = " + show(dF.pow(p)));
    if (dK.pow(2 * p) != one2) return Outcome::fail("Delta(K)^{2p} != 1");
    if (dK * dKi != one2) return Outcome::fail("Delta(K) Delta(K^-1) != 1");
    Outcome o = compare("[Delta E, Delta F]", dE * dF - dF * dE, inv * (dK - dKi));
    if (o.status != Status::pass) return o;
    o = compare("K E K^-1", dK * dE * dKi, A->q(2) * dE);
    if (o.status != Status::pass) return o;
    return compare("K F K^-1", dK * dF * dKi, A->q(-2) * dF);
  });
}

CheckResult check_quasi_coassociativity(const QuasiHopfData& d) {
  return timed("quasi-coassociativity", [&] {
    const AlgPtr& A = d.A;
    const char* names[] = {"E", "F", "K"};
    Elem gens[] = {gen_E(A), gen_F(A), gen_K(A)};
    for (int g = 0; g < 3; ++g) {
      Elem dg = d.coproduct(gens[g]);
      Elem lhs = d.Phi * d.Delta->on_leg(dg, 1);
      Elem rhs = d.Delta->on_leg(dg, 0) * d.Phi;
      if (lhs != rhs) return Outcome::fail(std::string("generator ") + names[g] + ": residual " + show(lhs - rhs));
    }
    return Outcome::ok("checked on E, F, K; both sides are algebra maps conjugated by Phi, so generators suffice");
  });
}

CheckResult check_pentagon(const QuasiHopfData& d) {
  return timed("pentagon", [&] {
    const Elem& P = d.Phi;
    Elem lhs = d.Delta->on_leg(P, 0) * d.Delta->on_leg(P, 2);
    Elem rhs = leg_embed(P, {0, 1, 2}, 4) * d.Delta->on_leg(P, 1) * leg_embed(P, {1, 2, 3}, 4);
    return compare("pentagon", lhs, rhs);
  });
}

CheckResult check_counit(const QuasiHopfData& d) {
  return timed("counit", [&] {
    const AlgPtr& A = d.A;
    for (int x = 0; x < A->dim(); ++x) {
      Elem bx = Elem::basis(A, {x}, one(A->order()));
      const Elem& dx = d.Delta->on_basis(x);
      if (counit_leg(dx, 0) != bx || counit_leg(dx, 1) != bx)
        return Outcome::fail("counit axiom fails on basis element " + bx.str());
    }
    Elem one2 = Elem::one(A, 2), one1 = Elem::one(A);
    for (int leg = 0; leg < 3; ++leg)
      if (counit_leg(d.Phi, leg) != one2) return Outcome::fail("counit of Phi on leg " + std::to_string(leg) + " is not 1");
    if (counit_leg(d.R, 0) != one1 || counit_leg(d.R, 1) != one1) return Outcome::fail("counit of R is not 1");
    if (counit(d.alpha) * counit(d.beta) != one(A->order())) return Outcome::fail("eps(alpha) eps(beta) != 1");
    return Outcome::ok();
  });
}

CheckResult check_antipode_basis(const QuasiHopfData& d) {
  return timed("antipode: S(a')alpha a'' = eps(a)alpha, a'beta S(a'') = eps(a)beta on the full basis", [&] {
    const AlgPtr& A = d.A;
    Elem aa = tensor(d.alpha, Elem::one(A)), bb = tensor(d.beta, Elem::one(A));
    std::vector<int> bad;
    for (int x = 0; x < A->dim(); ++x) {
      const Elem& dx = d.Delta->on_basis(x);
      CycNum eps = counit(Elem::basis(A, {x}, one(A->order())));
      Elem l1 = collapse(d.S->on_leg(dx, 0) * aa);
      Elem l2 = collapse(d.S->on_leg(dx * bb, 1));
      if (l1 != eps * d.alpha || l2 != eps * d.beta) bad.push_back(x);
    }
    if (bad.empty()) return Outcome::ok(std::to_string(A->dim()) + " basis elements");
    std::ostringstream os;
    os << bad.size() << " failing basis indices:";
    for (size_t i = 0; i < bad.size() && i < 20; ++i) os << " " << bad[i];
    return Outcome::fail(os.str());
  });
}

CheckResult check_antipode_phi(const QuasiHopfData& d) {
  return timed("antipode: S(Phi1)alpha Phi2 beta S(Phi3) = 1 and its inverse form", [&] {
    const AlgPtr& A = d.A;
    Elem one1 = Elem::one(A);
    // alpha sits right of leg 0 and beta right of leg 1
    Elem w1 = d.S->on_leg(d.S->on_leg(d.Phi, 0), 2);
    Elem a1 = collapse(w1 * tensor({d.alpha, d.beta, one1}));
    if (a1 != one1) return Outcome::fail("S(Phi1) alpha Phi2 beta S(Phi3) = " + show(a1));
    Elem w2 = d.S->on_leg(d.PhiInv, 1);
    Elem a2 = collapse(w2 * tensor({d.beta, d.alpha, one1}));
    if (a2 != one1) return Outcome::fail("Phi^-1_1 beta S(Phi^-1_2) alpha Phi^-1_3 = " + show(a2));
    return Outcome::ok();
  });
}

CheckResult check_quasitriangularity(const QuasiHopfData& d) {
  return timed("quasitriangularity", [&] {
    const AlgPtr& A = d.A;
    const char* names[] = {"E", "F", "K"};
    Elem gens[] = {gen_E(A), gen_F(A), gen_K(A)};
    for (int g = 0; g < 3; ++g) {
      Elem dg = d.coproduct(gens[g]);
      Elem lhs = d.R * dg, rhs = flip_legs(dg) * d.R;
      if (lhs != rhs) return Outcome::fail(std::string("R Delta(") + names[g] + ") != Delta^op R: residual " + show(lhs - rhs));
    }
    if (d.zeta_k == 0) {
      Elem sec = r_matrix_sectors(A, d.t);
      if (sec != d.R) return Outcome::fail("four-sector form differs: " + show(sec - d.R));
      // odd-odd sector on e_a (x) e_b
      int p = d.p;
      auto pref = r_prefactors(A);
      for (int a = 1; a < 2 * p; a += 2)
        for (int b = 1; b < 2 * p; b += 2) {
          Elem ea = idempotent_e(A, a), eb = idempotent_e(A, b);
          Elem lhs = d.R * tensor(ea, eb);
          Elem rhs(A, 2);
          for (int n = 0; n < p; ++n) {
            long t = d.t;
            CycNum c = pref[n] * A->qh(long(n) * (n - 1) + 2L * (n * b - n * a + n * t - 2L * n * n) + (a * t - b * t + long(a) * b));
            rhs += c * tensor(gen_E(A).pow(n) * ea, gen_F(A).pow(n) * eb);
          }
          if (lhs != rhs)
            return Outcome::fail("R(e_a (x) e_b) at a=" + std::to_string(a) + ", b=" + std::to_string(b) + ": " + show(lhs - rhs));
        }
    }
    return Outcome::ok();
  });
}

CheckResult check_monodromy_closed_form(const QuasiHopfData& d, const Elem& M) {
  return timed("monodromy closed form", [&] {
    Elem closed = monodromy_closed_form(d.A, d.t);
    if (closed != M) {
      Elem diff = M - closed;
      return Outcome::fail("first mismatch " + show(Elem::from_terms(d.A, 2, {diff.terms().front()})));
    }
    Elem idem = monodromy_idempotent_form(d.A, d.t);
    if (idem != M) return Outcome::fail("idempotent form differs: " + show(M - idem));
    return Outcome::ok(std::to_string(M.size()) + " terms agree");
  });
}

CheckResult check_ribbon(const QuasiHopfData& d, const Elem& M) {
  return timed("ribbon", [&] {
    if (!d.has_ribbon) return Outcome{Status::undetermined, "no ribbon element for this structure"};
    const AlgPtr& A = d.A;
    const char* names[] = {"E", "F", "K"};
    Elem gens[] = {gen_E(A), gen_F(A), gen_K(A)};
    for (int g = 0; g < 3; ++g)
      if (d.v * gens[g] != gens[g] * d.v) return Outcome::fail(std::string("(i) v does not commute with ") + names[g]);
    if (counit(d.v) != one(A->order())) return Outcome::fail("(ii) eps(v) = " + counit(d.v).str());
    if (d.antipode(d.v) != d.v) return Outcome::fail("(iii) S(v) != v: " + show(d.antipode(d.v) - d.v));
    Elem lhs = d.coproduct(d.vInv);
    Elem rhs = tensor(d.vInv, Elem::one(A)) * (tensor(Elem::one(A), d.vInv) * M);
    if (lhs != rhs) return Outcome::fail("(iv) Delta(v^-1) != (v^-1 (x) v^-1) M: " + show(lhs - rhs));
    return Outcome::ok("(i)-(iv)");
  });
}

CheckResult check_f_family(const QuasiHopfData& d) {
  return timed("f-family e_{i-m} F^m E^n is a basis", [&] {
    int r = f_family_rank(d.A);
    return Outcome::check(r == d.A->dim(), "rank " + std::to_string(r) + " of " + std::to_string(d.A->dim()));
  });
}

Checks qhopf_suite(const QuasiHopfData& d, const QhopfSuiteOptions& opt) {
  Checks out;
  out.push_back(check_coproduct_relations(d));
  out.push_back(check_quasi_coassociativity(d));
  out.push_back(check_pentagon(d));
  out.push_back(check_counit(d));
  if (d.zeta_k == 0) {
    out.push_back(check_antipode_basis(d));
    out.push_back(check_antipode_phi(d));
  }
  out.push_back(check_quasitriangularity(d));
  if (d.zeta_k != 0) return out;
  if (!opt.monodromy && !opt.ribbon && !opt.factorisable) return out;
  Elem M = monodromy(d);
  if (opt.monodromy) out.push_back(check_monodromy_closed_form(d, M));
  if (opt.ribbon) out.push_back(check_ribbon(d, M));
  if (opt.factorisable) {
    out.push_back(check_x_element(d));
    Elem D;
    out.push_back(check_dhat_closed_form(d, M, &D));
    if (!D.alg()) {
      out.push_back({"factorisable: rank ?/" + std::to_string(d.A->dim()), Status::fail, "D-hat unavailable", 0});
    } else {
      out.push_back(check_factorisable(d, D));
    }
    out.push_back(check_f_family(d));
  }
  return out;
}

}  // namespace qhopf
