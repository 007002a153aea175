#include "qhopf/reps.hpp"

#include <map>
#include <mutex>
#include <random>
#include <regex>

namespace qhopf {

struct Rep::Words {
  std::once_flag once;
  std::vector<SMat> table;
};

namespace {

void need(bool ok, const std::string& what, const std::string& name) {
  if (!ok) throw InvalidRep(name + ": " + what);
}

}  // namespace

Rep Rep::make(std::string name, int p, SMat E, SMat F, SMat K) {
  int d = E.rows();
  need(E.cols() == d && F.rows() == d && F.cols() == d && K.rows() == d && K.cols() == d, "matrix shapes differ", name);
  CycNum q2 = qhalf(p, 4), qm2 = qhalf(p, -4);
  SMat Kinv = K.pow(2 * p - 1);
  need((K * Kinv).is_identity(), "K^2p != 1", name);
  need(K * E == E * K * q2, "K E != q^2 E K", name);
  need(K * F == F * K * qm2, "K F != q^-2 F K", name);
  CycNum qq = (qhalf(p, 2) - qhalf(p, -2)).inverse();
  need(E * F - F * E == (K - Kinv) * qq, "[E,F] != (K-K^-1)/(q-q^-1)", name);
  need(E.pow(p).is_zero(), "E^p != 0", name);
  need(F.pow(p).is_zero(), "F^p != 0", name);
  Rep r;
  r.name_ = std::move(name);
  r.p_ = p;
  r.E_ = std::move(E);
  r.F_ = std::move(F);
  r.K_ = std::move(K);
  r.words_ = std::make_shared<Words>();
  return r;
}

const SMat& Rep::word(int idx) const {
  std::call_once(words_->once, [&] {
    int p = p_, d = dim();
    std::vector<SMat> ep{SMat::identity(d, order())}, fp{ep[0]}, kp{ep[0]};
    for (int i = 1; i < p; ++i) {
      ep.push_back(ep.back() * E_);
      fp.push_back(fp.back() * F_);
    }
    for (int j = 1; j < 2 * p; ++j) kp.push_back(kp.back() * K_);
    auto A = Algebra::get(p);
    words_->table.resize(A->dim());
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        SMat ef = ep[a] * fp[b];
        for (int j = 0; j < 2 * p; ++j) words_->table[A->index(a, b, j)] = ef * kp[j];
      }
  });
  return words_->table[idx];
}

SMat Rep::act(const Elem& x) const { return qhopf::act(x, {this}); }

SMat act(const Elem& x, const std::vector<const Rep*>& legs) {
  int k = x.rank();
  if (int(legs.size()) != k) throw std::invalid_argument("act: rank and number of modules differ");
  int dim = 1;
  for (auto* r : legs) dim *= r->dim();
  int N = legs[0]->order();
  SMat out(dim, dim, N);
  if (k == 1) {
    for (auto& [key, c] : x.terms()) out += legs[0]->word(int(key)) * c;
    return out;
  }
  // group by the first leg and recurse on the rest
  std::vector<const Rep*> rest(legs.begin() + 1, legs.end());
  uint64_t mask = (uint64_t(1) << (16 * (k - 1))) - 1;
  auto& terms = x.terms();
  size_t i = 0;
  while (i < terms.size()) {
    int lead = x.leg(terms[i].first, 0);
    std::vector<Elem::Term> sub;
    while (i < terms.size() && x.leg(terms[i].first, 0) == lead) {
      sub.emplace_back(terms[i].first & mask, terms[i].second);
      ++i;
    }
    SMat inner = act(Elem::from_terms(x.alg(), k - 1, std::move(sub)), rest);
    out += kron(legs[0]->word(lead), inner);
  }
  return out;
}

Rep module_O(int p, int s, int sign, const CycNum& l1, const CycNum& l2) {
  if (s < 1 || s > p - 1) throw InvalidRep("O-module needs 1 <= s <= p-1");
  if (sign != 1 && sign != -1) throw InvalidRep("O-module sign must be +1 or -1");
  if (l1.is_zero() && l2.is_zero()) throw InvalidRep("O-module needs (l1, l2) != (0, 0)");
  int N = 4 * p, n = p;
  // basis: a_0..a_{s-1}, then b_0..b_{p-s-1}
  auto ia = [](int j) { return j; };
  auto ib = [&](int k) { return s + k; };
  SMat E(n, n, N), F(n, n, N), K(n, n, N);
  CycNum a(long(sign), N);
  for (int j = 0; j < s; ++j) {
    K.set(ia(j), ia(j), a * qpow(p, s - 1 - 2 * j));
    if (j >= 1) E.set(ia(j - 1), ia(j), a * q_number(j, p) * q_number(s - j, p));
    else E.set(ib(p - s - 1), ia(0), l2.embed(N));
    if (j <= s - 2) F.set(ia(j + 1), ia(j), CycNum::one(N));
    else F.set(ib(0), ia(j), l1.embed(N));
  }
  for (int k = 0; k < p - s; ++k) {
    K.set(ib(k), ib(k), -(a * qpow(p, p - s - 1 - 2 * k)));
    if (k >= 1) E.set(ib(k - 1), ib(k), -(a * q_number(k, p) * q_number(p - s - k, p)));
    if (k + 1 < p - s) F.set(ib(k + 1), ib(k), CycNum::one(N));
  }
  // projective label: l2 = 1 when l2 != 0, else [1:0]
  auto label = [](const CycNum& x) { return x.is_rational() ? rat_str(x.coeff(0)) : x.str(); };
  std::string lam = l2.is_zero() ? "1:0" : label(l1 / l2) + ":1";
  std::string name = std::string("O") + (sign > 0 ? "+" : "-") + "_" + std::to_string(s) + "(1;[" + lam + "])";
  return Rep::make(name, p, E, F, K);
}

Rep one_dim(int p, int sign) {
  int N = 4 * p;
  SMat z(1, 1, N), K(1, 1, N);
  K.set(0, 0, CycNum(long(sign), N));
  return Rep::make(sign > 0 ? "triv" : "X-", p, z, z, K);
}

Rep regular_rep(int p) {
  auto A = Algebra::get(p);
  return Rep::make("reg", p, left_regular(gen_E(A)), left_regular(gen_F(A)), left_regular(gen_K(A)));
}

Rep parse_rep(const std::string& desc, int p) {
  std::smatch m;
  if (desc == "triv") return trivial_rep(p);
  if (desc == "reg") return regular_rep(p);
  if (std::regex_match(desc, m, std::regex(R"(X([+-]):1)"))) return one_dim(p, m[1] == "+" ? 1 : -1);
  static const std::regex o(R"(O([+-]):s=(\d+):l=(-?\d+(?:/\d+)?),(-?\d+(?:/\d+)?))");
  if (std::regex_match(desc, m, o)) {
    int N = 4 * p;
    return module_O(p, std::stoi(m[2]), m[1] == "+" ? 1 : -1, CycNum(Rat(m[3].str()), N), CycNum(Rat(m[4].str()), N));
  }
  throw InvalidRep("cannot parse module descriptor '" + desc + "'");
}

std::vector<Rep> test_family(int p) {
  int N = 4 * p;
  CycNum one = CycNum::one(N), zero(N);
  std::vector<Rep> out{trivial_rep(p), one_dim(p, -1)};
  for (int s = 1; s < p; ++s)
    for (int sign : {1, -1}) {
      out.push_back(module_O(p, s, sign, one, zero));
      out.push_back(module_O(p, s, sign, zero, one));
      out.push_back(module_O(p, s, sign, one, one));
    }
  return out;
}

Rep tensor(const Rep& M, const Rep& N, const AlgMap& Delta) {
  auto A = Algebra::get(M.p());
  if (M.p() != N.p()) throw IncompatibleAlgebras("tensor: modules over different p");
  std::vector<const Rep*> legs{&M, &N};
  return Rep::make("(" + M.name() + " x " + N.name() + ")", M.p(), act(Delta(gen_E(A)), legs), act(Delta(gen_F(A)), legs),
                   act(Delta(gen_K(A)), legs));
}

Rep tensor_t(const Rep& M, const Rep& N, const QuasiHopfData& d) { return tensor(M, N, *d.Delta); }

Rep tensor_legacy(const Rep& M, const Rep& N) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<AlgMap>> cache;
  std::shared_ptr<AlgMap> D;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[M.p()];
    if (!slot) slot = std::make_shared<AlgMap>(legacy_coproduct(Algebra::get(M.p())));
    D = slot;
  }
  return tensor(M, N, *D);
}

Rep dual(const Rep& M, const AntiMap& S) {
  auto A = Algebra::get(M.p());
  return Rep::make(M.name() + "*", M.p(), M.act(S(gen_E(A))).transpose(), M.act(S(gen_F(A))).transpose(),
                   M.act(S(gen_K(A))).transpose());
}

std::vector<int> k_character(const Rep& M) {
  auto A = Algebra::get(M.p());
  std::vector<int> out;
  for (int n = 0; n < 2 * M.p(); ++n) out.push_back(M.act(idempotent_e(A, n)).rank());
  return out;
}

bool is_intertwiner(const SMat& T, const Rep& M, const Rep& N) {
  return T * M.E() == N.E() * T && T * M.F() == N.F() * T && T * M.K() == N.K() * T;
}

std::vector<SMat> hom_space(const Rep& M, const Rep& N) {
  if (M.p() != N.p()) throw IncompatibleAlgebras("hom_space: modules over different p");
  int dm = M.dim(), dn = N.dim(), n = dm * dn;
  // unknown T(i, j) sits at column i * dm + j
  RowReducer rr(n);
  for (const auto& pr : {std::pair{&M.E(), &N.E()}, std::pair{&M.F(), &N.F()}, std::pair{&M.K(), &N.K()}}) {
    const SMat &gm = *pr.first, &gn = *pr.second;
    SMat gmt = gm.transpose();
    // (T gm - gn T)(i, j) = sum_k T(i,k) gm(k,j) - sum_k gn(i,k) T(k,j)
    for (int i = 0; i < dn; ++i)
      for (int j = 0; j < dm; ++j) {
        std::map<int, CycNum> row;
        for (auto& [k, v] : gmt.row(j)) row[i * dm + k] += v;
        for (auto& [k, v] : gn.row(i)) row[k * dm + j] -= v;
        SparseVec r;
        for (auto& [c, v] : row)
          if (!v.is_zero()) r.emplace_back(c, v);
        if (!r.empty()) rr.add_row(std::move(r));
      }
  }
  rr.reduce_fully();
  std::vector<SMat> out;
  for (auto& v : rr.nullspace()) {
    SMat T(dn, dm, M.order());
    for (auto& [c, x] : v) T.set(c / dm, c % dm, x);
    out.push_back(std::move(T));
  }
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    default:
      return "undetermined";
  }
}

namespace {

// polynomials in the hom-space coordinates, keyed by exponent vectors
using Poly = std::map<std::vector<int>, CycNum>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto it = out.find(e);
      if (it == out.end()) out.emplace(e, ca * cb);
      else it->second.add_product(ca, cb);
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// det(sum_i x_i T_i) as a polynomial, by Laplace expansion memoised on column sets
std::optional<Poly> generic_determinant(const std::vector<SMat>& basis) {
  int d = basis[0].rows(), m = int(basis.size());
  if (d > 14) return std::nullopt;
  std::vector<std::vector<Poly>> entry(d, std::vector<Poly>(d));
  for (int i = 0; i < m; ++i)
    for (int r = 0; r < d; ++r)
      for (auto& [c, v] : basis[i].row(r)) {
        std::vector<int> e(m, 0);
        e[i] = 1;
        entry[r][c][e] += v;
      }
  std::vector<std::optional<Poly>> memo(size_t(1) << d);
  std::function<Poly(unsigned)> det = [&](unsigned used) -> Poly {
    int row = __builtin_popcount(used);
    if (row == d) return Poly{{std::vector<int>(m, 0), CycNum::one(basis[0].order())}};
    if (memo[used]) return *memo[used];
    Poly acc;
    int sign = 1;
    for (int c = 0; c < d; ++c) {
      if (used & (1u << c)) continue;
      if (!entry[row][c].empty()) {
        Poly sub = poly_mul(entry[row][c], det(used | (1u << c)));
        for (auto& [e, v] : sub) acc[e] += sign > 0 ? v : -v;
      }
      sign = -sign;
    }
    for (auto it = acc.begin(); it != acc.end();) it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    memo[used] = acc;
    return acc;
  };
  return det(0);
}

// ranks of E^a F^b e_n and F^b E^a e_n are isomorphism invariants
std::optional<std::string> rank_profile_mismatch(const Rep& M, const Rep& N) {
  int p = M.p();
  auto A = Algebra::get(p);
  for (int n = 0; n < 2 * p; ++n) {
    Elem e = idempotent_e(A, n);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        if (a + b == 0) continue;
        Elem Ea = gen_E(A).pow(a), Fb = gen_F(A).pow(b);
        for (int order = 0; order < 2; ++order) {
          Elem w = (order == 0 ? Ea * Fb : Fb * Ea) * e;
          if (M.act(w).rank() != N.act(w).rank())
            return (order == 0 ? "E^" + std::to_string(a) + " F^" + std::to_string(b)
                               : "F^" + std::to_string(b) + " E^" + std::to_string(a)) +
                   " e_" + std::to_string(n);
        }
      }
  }
  return std::nullopt;
}

}  // namespace

IsoResult is_isomorphic(const Rep& M, const Rep& N, unsigned seed) {
  IsoResult r;
  if (M.dim() != N.dim()) {
    r.verdict = Verdict::no;
    r.reason = "dimensions differ";
    return r;
  }
  if (k_character(M) != k_character(N)) {
    r.verdict = Verdict::no;
    r.reason = "K-characters differ";
    return r;
  }
  auto H = hom_space(M, N);
  if (H.empty()) {
    r.verdict = Verdict::no;
    r.reason = "hom space is zero";
    return r;
  }
  // M = N forces dim Hom(M,M) = dim Hom(M,N) = dim Hom(N,N)
  size_t hm = hom_space(M, M).size(), hn = hom_space(N, N).size();
  if (hm != H.size() || hn != H.size()) {
    r.verdict = Verdict::no;
    r.reason = "hom dimensions differ: End(M) " + std::to_string(hm) + ", Hom(M,N) " + std::to_string(H.size()) +
               ", End(N) " + std::to_string(hn);
    return r;
  }
  if (auto w = rank_profile_mismatch(M, N)) {
    r.verdict = Verdict::no;
    r.reason = "rank of " + *w + " differs";
    return r;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int attempt = 0; attempt < 10; ++attempt) {
    SMat T(N.dim(), M.dim(), M.order());
    for (auto& b : H) T += b * CycNum(long(coef(rng)), M.order());
    if (T.rank() == M.dim()) {
      r.verdict = Verdict::yes;
      r.witness = T;
      r.reason = "invertible intertwiner found, hom space dimension " + std::to_string(H.size());
      return r;
    }
  }
  auto det = generic_determinant(H);
  if (det && det->empty()) {
    r.verdict = Verdict::no;
    r.reason = "determinant of the generic intertwiner vanishes identically (hom space dimension " +
               std::to_string(H.size()) + ")";
    return r;
  }
  r.reason = "no invertible combination found among 10 samples";
  return r;
}

// ---------------------------------------------------------------------------
// structure maps

SMat assoc(const QuasiHopfData& d, const Rep& M, const Rep& N, const Rep& P) { return act(d.Phi, {&M, &N, &P}); }
SMat assoc_inv(const QuasiHopfData& d, const Rep& M, const Rep& N, const Rep& P) { return act(d.PhiInv, {&M, &N, &P}); }

SMat braid(const QuasiHopfData& d, const Rep& M, const Rep& N) {
  return flip_matrix(M.dim(), N.dim(), M.order()) * act(d.R, {&M, &N});
}

SMat twist(const QuasiHopfData& d, const Rep& M) { return M.act(d.vInv); }

Rep dual_t(const QuasiHopfData& d, const Rep& M) { return dual(M, *d.S); }

SMat ev(const QuasiHopfData& d, const Rep& M) {
  int n = M.dim();
  SMat a = M.act(d.alpha), out(1, n * n, M.order());
  for (int i = 0; i < n; ++i)
    for (auto& [j, v] : a.row(i)) out.set(0, i * n + j, v);
  return out;
}

SMat coev(const QuasiHopfData& d, const Rep& M) {
  int n = M.dim();
  SMat b = M.act(d.beta), out(n * n, 1, M.order());
  for (int k = 0; k < n; ++k)
    for (auto& [i, v] : b.row(k)) out.set(k * n + i, 0, v);
  return out;
}

namespace {

SMat id(const Rep& M) { return SMat::identity(M.dim(), M.order()); }

std::string tuple_name(std::initializer_list<const Rep*> rs) {
  std::string s = "(";
  for (auto* r : rs) s += (s.size() > 1 ? ", " : "") + r->name();
  return s + ")";
}

Outcome mat_eq(const SMat& a, const SMat& b, const std::string& what) {
  if (a == b) return Outcome::ok();
  SMat diff = a - b;
  return Outcome::fail(what + ": residual has " + std::to_string(diff.nnz()) + " nonzero entries");
}

}  // namespace

CheckResult check_pentagon_on(const QuasiHopfData& d, const Rep& M, const Rep& N, const Rep& P, const Rep& Q) {
  return timed("pentagon on " + tuple_name({&M, &N, &P, &Q}), [&] {
    Rep MN = tensor_t(M, N, d), NP = tensor_t(N, P, d), PQ = tensor_t(P, Q, d);
    SMat lhs = assoc(d, MN, P, Q) * assoc(d, M, N, PQ);
    SMat rhs = kron(assoc(d, M, N, P), id(Q)) * assoc(d, M, NP, Q) * kron(id(M), assoc(d, N, P, Q));
    return mat_eq(lhs, rhs, "pentagon");
  });
}

CheckResult check_hexagons_on(const QuasiHopfData& d, const Rep& M, const Rep& N, const Rep& P) {
  return timed("hexagons on " + tuple_name({&M, &N, &P}), [&] {
    Rep NP = tensor_t(N, P, d), MN = tensor_t(M, N, d);
    // H1: (MN)P -> N(PM)
    SMat h1l = assoc_inv(d, N, P, M) * braid(d, M, NP) * assoc_inv(d, M, N, P);
    SMat h1r = kron(id(N), braid(d, M, P)) * assoc_inv(d, N, M, P) * kron(braid(d, M, N), id(P));
    auto o = mat_eq(h1l, h1r, "hexagon H1");
    if (o.status != Status::pass) return o;
    // H2: M(NP) -> (PM)N
    SMat h2l = assoc(d, P, M, N) * braid(d, MN, P) * assoc(d, M, N, P);
    SMat h2r = kron(braid(d, M, P), id(N)) * assoc(d, M, P, N) * kron(id(M), braid(d, N, P));
    return mat_eq(h2l, h2r, "hexagon H2");
  });
}

CheckResult check_balancing_on(const QuasiHopfData& d, const Rep& M, const Rep& N) {
  return timed("balancing on " + tuple_name({&M, &N}), [&] {
    Rep MN = tensor_t(M, N, d);
    SMat lhs = twist(d, MN);
    SMat rhs = kron(twist(d, M), twist(d, N)) * braid(d, N, M) * braid(d, M, N);
    return mat_eq(lhs, rhs, "balancing");
  });
}

CheckResult check_zigzag_on(const QuasiHopfData& d, const Rep& M) {
  return timed("zig-zags on " + M.name(), [&] {
    Rep Ms = dual_t(d, M);
    SMat evm = ev(d, M);  // M* (x) M -> C, f (x) u -> f(alpha u)
    SMat left = kron(evm, id(Ms)) * assoc(d, Ms, M, Ms) * kron(id(Ms), coev(d, M));
    auto o = mat_eq(left, id(Ms), "(ev x id) a (id x coev)");
    if (o.status != Status::pass) return o;
    SMat right = kron(id(M), evm) * assoc_inv(d, M, Ms, M) * kron(coev(d, M), id(M));
    return mat_eq(right, id(M), "(id x ev) a^-1 (coev x id)");
  });
}

CheckResult check_ribbon_dual_on(const QuasiHopfData& d, const Rep& M) {
  return timed("ribbon-dual on " + M.name(), [&] {
    Rep Ms = dual_t(d, M);
    return mat_eq(twist(d, M).transpose(), twist(d, Ms), "theta_M^T vs theta_{M*}");
  });
}

Checks check_coherence_on(const QuasiHopfData& d, const Rep& M, const Rep& N, const Rep& P, const Rep& Q) {
  return {check_pentagon_on(d, M, N, P, Q), check_hexagons_on(d, M, N, P), check_balancing_on(d, M, N),
          check_zigzag_on(d, M), check_ribbon_dual_on(d, M)};
}

std::vector<std::string> transparency_scan(const QuasiHopfData& d, const std::vector<Rep>& candidates,
                                           const std::vector<Rep>& probes) {
  Elem M = monodromy(d);
  std::vector<std::string> out;
  for (auto& X : candidates) {
    bool transparent = true;
    for (auto& P : probes) {
      if (!act(M, {&X, &P}).is_identity()) {
        transparent = false;
        break;
      }
    }
    if (transparent) out.push_back(X.name());
  }
  return out;
}

}  // namespace qhopf
