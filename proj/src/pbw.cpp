#include "qhopf/pbw.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include <boost/container/small_vector.hpp>

namespace qhopf {

namespace {

std::mutex g_alg_mutex;
std::map<int, AlgPtr> g_algs;

using Poly = std::map<std::array<int, 3>, CycNum>;  // (x,y,z) -> coefficient

void poly_add(Poly& P, const std::array<int, 3>& k, const CycNum& c) {
  auto [it, fresh] = P.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) P.erase(it);
  }
}

uint64_t mix(uint64_t k) {
  k ^= k >> 33;
  k *= 0xff51afd7ed558ccdULL;
  k ^= k >> 33;
  return k;
}

}  // namespace

AlgPtr Algebra::get(int p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  {
    std::lock_guard<std::mutex> lk(g_alg_mutex);
    auto it = g_algs.find(p);
    if (it != g_algs.end()) return it->second;
  }
  auto A = std::make_shared<const Algebra>(p);
  std::lock_guard<std::mutex> lk(g_alg_mutex);
  return g_algs.emplace(p, A).first->second;
}

Algebra::Algebra(int p) : p_(p), dim_(2 * p * p * p) {
  if (p < 2 || p > 12) throw std::invalid_argument("p out of supported range 2..12");
  for (int m = 0; m < 4 * p; ++m) qhalf_.push_back(root_power(4 * p, m));
  build_table();
}

void Algebra::set_entry(int c, int b, const std::vector<std::pair<PbwIndex, CycNum>>& terms) {
  auto& out = table_[c * p_ + b];
  out.clear();
  for (auto& [k, coef] : terms) {
    StraightTerm t{k.a, k.b, k.j, {}};
    for (int m = 0; m < p_; ++m) t.scaled.push_back(coef * q(2 * m));
    out.push_back(std::move(t));
  }
}

// F^b E^c by adjacent transpositions:
//   F^y E = (F^{y-1} E) F - F^{y-1} (K - K^-1)/(q - q^-1)
//   F^b E^c = (F^b E^{c-1}) E
void Algebra::build_table() {
  table_.assign(p_ * p_, {});
  CycNum inv_qq = (q(1) - q(-1)).inverse();
  std::vector<Poly> L(p_);  // L[y] = F^y E
  L[0][{1, 0, 0}] = CycNum(1L, order());
  for (int y = 1; y < p_; ++y) {
    Poly P;
    for (auto& [k, c] : L[y - 1]) {
      // E^x F^y' K^z F = q^{-2z} E^x F^{y'+1} K^z
      if (k[1] + 1 >= p_) continue;
      poly_add(P, {k[0], k[1] + 1, k[2]}, c * q(-2 * k[2]));
    }
    poly_add(P, {0, y - 1, 1}, -inv_qq);
    poly_add(P, {0, y - 1, 2 * p_ - 1}, inv_qq);
    L[y] = std::move(P);
  }
  std::vector<Poly> cur(p_);  // cur[b] = F^b E^c for the current c
  for (int b = 0; b < p_; ++b) cur[b][{0, b, 0}] = CycNum(1L, order());
  for (int c = 0; c < p_; ++c) {
    if (c > 0) {
      for (int b = 0; b < p_; ++b) {
        Poly P;
        for (auto& [k, coef] : cur[b]) {
          // E^x F^y K^z E = q^{2z} E^x (F^y E) K^z
          CycNum s = coef * q(2 * k[2]);
          for (auto& [k2, c2] : L[k[1]]) {
            if (k[0] + k2[0] >= p_) continue;
            poly_add(P, {k[0] + k2[0], k2[1], mod2p(k2[2] + k[2])}, s * c2);
          }
        }
        cur[b] = std::move(P);
      }
    }
    for (int b = 0; b < p_; ++b) {
      std::vector<std::pair<PbwIndex, CycNum>> terms;
      for (auto& [k, coef] : cur[b]) terms.push_back({{k[0], k[1], k[2]}, coef});
      set_entry(c, b, terms);
    }
  }
}

std::vector<std::pair<std::pair<int, int>, std::vector<std::pair<PbwIndex, CycNum>>>> Algebra::table_entries() const {
  std::vector<std::pair<std::pair<int, int>, std::vector<std::pair<PbwIndex, CycNum>>>> out;
  for (int c = 0; c < p_; ++c)
    for (int b = 0; b < p_; ++b) {
      std::vector<std::pair<PbwIndex, CycNum>> terms;
      for (auto& t : straight(c, b)) terms.push_back({{t.x, t.y, t.z}, t.scaled[0]});
      out.push_back({{c, b}, std::move(terms)});
    }
  return out;
}

void Algebra::load_table(
    const std::vector<std::pair<std::pair<int, int>, std::vector<std::pair<PbwIndex, CycNum>>>>& e) {
  if (int(e.size()) != p_ * p_) throw std::invalid_argument("straightening table has wrong size");
  for (auto& [k, terms] : e) set_entry(k.first, k.second, terms);
}

// ---------------------------------------------------------------------------

Accumulator::Accumulator(size_t hint) {
  size_t cap = 64;
  while (cap < 2 * hint && cap < (size_t(1) << 26)) cap <<= 1;
  slots_.assign(cap, {0, UINT32_MAX});
  mask_ = cap - 1;
}

void Accumulator::grow() {
  std::vector<std::pair<uint64_t, uint32_t>> old;
  old.swap(slots_);
  slots_.assign(old.size() * 2, {0, UINT32_MAX});
  mask_ = slots_.size() - 1;
  for (auto& s : old) {
    if (s.second == UINT32_MAX) continue;
    size_t h = mix(s.first) & mask_;
    while (slots_[h].second != UINT32_MAX) h = (h + 1) & mask_;
    slots_[h] = s;
  }
}

uint32_t Accumulator::find(uint64_t key) {
  size_t h = mix(key) & mask_;
  while (true) {
    auto& s = slots_[h];
    if (s.second == UINT32_MAX) {
      if (2 * (used_ + 1) > slots_.size()) {
        grow();
        return find(key);
      }
      s = {key, uint32_t(values_.size())};
      values_.emplace_back(key, CycNum());
      ++used_;
      return s.second;
    }
    if (s.first == key) return s.second;
    h = (h + 1) & mask_;
  }
}

void Accumulator::add(uint64_t key, const CycNum& c) {
  if (c.is_zero()) return;
  values_[find(key)].second += c;
}

void Accumulator::add_product(uint64_t key, const CycNum& a, const CycNum& b) {
  uint32_t i = find(key);
  if (b.is_one())
    values_[i].second += a;
  else if (a.is_one())
    values_[i].second += b;
  else
    values_[i].second += a * b;
}

std::vector<Elem::Term> Accumulator::take() {
  std::vector<Elem::Term> out;
  out.reserve(values_.size());
  for (auto& v : values_)
    if (!v.second.is_zero()) out.push_back(std::move(v));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  values_.clear();
  return out;
}

// ---------------------------------------------------------------------------

uint64_t Elem::pack(const int* idx, int rank) {
  uint64_t k = 0;
  for (int i = 0; i < rank; ++i) k = (k << 16) | uint64_t(idx[i]);
  return k;
}

std::vector<int> Elem::legs(uint64_t key) const {
  std::vector<int> out(rank_);
  for (int i = 0; i < rank_; ++i) out[i] = leg(key, i);
  return out;
}

Elem Elem::one(const AlgPtr& alg, int rank) {
  Elem e(alg, rank);
  e.terms_.emplace_back(0, CycNum(1L, alg->order()));
  return e;
}

Elem Elem::basis(const AlgPtr& alg, const std::vector<int>& idx, const CycNum& c) {
  Elem e(alg, int(idx.size()));
  if (!c.is_zero()) e.terms_.emplace_back(pack(idx), c);
  return e;
}

Elem Elem::basis(const AlgPtr& alg, std::initializer_list<int> idx, const CycNum& c) {
  return basis(alg, std::vector<int>(idx), c);
}

Elem Elem::from_terms(const AlgPtr& alg, int rank, std::vector<Term> terms) {
  Accumulator acc(terms.size());
  for (auto& t : terms) acc.add(t.first, t.second);
  Elem e(alg, rank);
  e.terms_ = acc.take();
  return e;
}

CycNum Elem::coeff(const std::vector<int>& idx) const {
  uint64_t k = pack(idx);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& t, uint64_t v) { return t.first < v; });
  if (it != terms_.end() && it->first == k) return it->second;
  return CycNum(alg_->order());
}

Elem Elem::operator-() const {
  Elem r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

static void check_compatible(const Elem& a, const Elem& b) {
  if (!a.alg() || !b.alg()) throw IncompatibleAlgebras("uninitialised element");
  if (a.p() != b.p()) throw IncompatibleAlgebras("elements over different p");
  if (a.rank() != b.rank()) throw IncompatibleAlgebras("elements of different tensor rank");
}

Elem& Elem::operator+=(const Elem& o) {
  if (!alg_) return *this = o;
  check_compatible(*this, o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      CycNum v = std::move(terms_[i].second);
      v += o.terms_[j].second;
      if (!v.is_zero()) out.emplace_back(terms_[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Elem& Elem::operator-=(const Elem& o) { return *this += -o; }

Elem operator*(const CycNum& s, const Elem& a) {
  Elem r(a.alg_, a.rank_);
  if (s.is_zero()) return r;
  r.terms_.reserve(a.terms_.size());
  for (auto& t : a.terms_) r.terms_.emplace_back(t.first, t.second * s);
  return r;
}

bool operator==(const Elem& a, const Elem& b) {
  if (a.rank_ != b.rank_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) return false;
  return true;
}

namespace {

struct LegTerm {
  int idx;
  const CycNum* c;
};
using LegList = boost::container::small_vector<LegTerm, 24>;

}  // namespace

Elem operator*(const Elem& a, const Elem& b) {
  check_compatible(a, b);
  const Algebra& A = *a.alg_;
  int k = a.rank_;
  Elem r(a.alg_, k);
  if (a.is_zero() || b.is_zero()) return r;
  Accumulator acc(std::min<size_t>(a.size() * b.size() * 2, size_t(1) << 22));
  std::array<LegList, 4> lists;
  for (auto& ta : a.terms_) {
    for (auto& tb : b.terms_) {
      bool empty = false;
      for (int i = 0; i < k && !empty; ++i) {
        lists[i].clear();
        int x = a.leg(ta.first, i), y = b.leg(tb.first, i);
        A.mul_basis(x, y, [&](int idx, const CycNum& c) { lists[i].push_back({idx, &c}); });
        empty = lists[i].empty();
      }
      if (empty) continue;
      CycNum c0 = ta.second * tb.second;
      if (k == 1) {
        for (auto& t : lists[0]) acc.add_product(uint64_t(t.idx), c0, *t.c);
        continue;
      }
      // walk the cartesian product of the per-leg expansions
      std::array<size_t, 4> pos{};
      std::array<CycNum, 4> partial;
      int depth = 0;
      while (depth >= 0) {
        if (pos[depth] == lists[depth].size()) {
          pos[depth] = 0;
          --depth;
          if (depth >= 0) ++pos[depth];
          continue;
        }
        const LegTerm& t = lists[depth][pos[depth]];
        const CycNum& prev = depth == 0 ? c0 : partial[depth - 1];
        if (depth == k - 1) {
          uint64_t key = 0;
          for (int i = 0; i < k; ++i) key = (key << 16) | uint64_t(lists[i][pos[i]].idx);
          acc.add_product(key, prev, *t.c);
          ++pos[depth];
        } else {
          partial[depth] = t.c->is_one() ? prev : prev * *t.c;
          ++depth;
        }
      }
    }
  }
  r.terms_ = acc.take();
  return r;
}

Elem Elem::pow(int e) const {
  Elem r = one(alg_, rank_), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::string Elem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (int i = 0; i < rank_; ++i) {
      PbwIndex ix = alg_->decode(leg(key, i));
      os << (i == 0 ? " " : " (x) ");
      std::string mono;
      if (ix.a) mono += "E^" + std::to_string(ix.a);
      if (ix.b) mono += std::string(mono.empty() ? "" : " ") + "F^" + std::to_string(ix.b);
      if (ix.j) mono += std::string(mono.empty() ? "" : " ") + "K^" + std::to_string(ix.j);
      os << (mono.empty() ? "1" : mono);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Elem scalar(const AlgPtr& A, const CycNum& c, int rank) { return c * Elem::one(A, rank); }
Elem gen_E(const AlgPtr& A) { return Elem::basis(A, {A->index(1, 0, 0)}, CycNum(1L, A->order())); }
Elem gen_F(const AlgPtr& A) { return Elem::basis(A, {A->index(0, 1, 0)}, CycNum(1L, A->order())); }
Elem gen_K(const AlgPtr& A, int j) { return Elem::basis(A, {A->index(0, 0, j)}, CycNum(1L, A->order())); }

Elem idempotent_e(const AlgPtr& A, int n) {
  int tp = A->two_p();
  Elem e(A, 1);
  std::vector<Elem::Term> terms;
  CycNum w(Rat(1, tp), A->order());
  for (int l = 0; l < tp; ++l) terms.emplace_back(uint64_t(A->index(0, 0, l)), w * A->q(-long(n) * l));
  return Elem::from_terms(A, 1, std::move(terms));
}

Elem idem_e0(const AlgPtr& A) {
  CycNum h(Rat(1, 2), A->order());
  return h * (Elem::one(A) + gen_K(A, A->p()));
}

Elem idem_e1(const AlgPtr& A) { return Elem::one(A) - idem_e0(A); }

Elem tensor(const Elem& x, const Elem& y) {
  if (x.p() != y.p()) throw IncompatibleAlgebras("tensor of elements over different p");
  int k = x.rank() + y.rank();
  if (k > 4) throw std::invalid_argument("tensor rank above 4");
  std::vector<Elem::Term> terms;
  terms.reserve(x.size() * y.size());
  for (auto& [kx, cx] : x.terms())
    for (auto& [ky, cy] : y.terms()) terms.emplace_back((kx << (16 * y.rank())) | ky, cx * cy);
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Elem r = Elem::from_terms(x.alg(), k, std::move(terms));
  return r;
}

Elem tensor(std::initializer_list<Elem> xs) {
  auto it = xs.begin();
  Elem r = *it++;
  for (; it != xs.end(); ++it) r = tensor(r, *it);
  return r;
}

Elem permute_legs(const Elem& x, const std::vector<int>& perm) {
  int k = x.rank();
  std::vector<Elem::Term> terms;
  terms.reserve(x.size());
  std::array<int, 4> idx{};
  for (auto& [key, c] : x.terms()) {
    for (int i = 0; i < k; ++i) idx[perm[i]] = x.leg(key, i);
    terms.emplace_back(Elem::pack(idx.data(), k), c);
  }
  return Elem::from_terms(x.alg(), k, std::move(terms));
}

Elem flip_legs(const Elem& x) {
  if (x.rank() != 2) throw std::invalid_argument("flip_legs needs rank 2");
  return permute_legs(x, {1, 0});
}

Elem leg_embed(const Elem& x, const std::vector<int>& legs, int k) {
  if (int(legs.size()) != x.rank()) throw std::invalid_argument("leg_embed: wrong number of legs");
  std::vector<Elem::Term> terms;
  std::array<int, 4> idx{};
  for (auto& [key, c] : x.terms()) {
    idx.fill(0);  // index 0 is the unit E^0F^0K^0
    for (int i = 0; i < x.rank(); ++i) idx[legs[i]] = x.leg(key, i);
    terms.emplace_back(Elem::pack(idx.data(), k), c);
  }
  return Elem::from_terms(x.alg(), k, std::move(terms));
}

Elem map_leg(const Elem& x, int leg, int image_rank, const std::function<const Elem&(int)>& f) {
  int k = x.rank();
  int nk = k - 1 + image_rank;
  if (nk > 4) throw std::invalid_argument("map_leg: rank above 4");
  Accumulator acc(x.size() * 4);
  std::array<int, 4> idx{};
  for (auto& [key, c] : x.terms()) {
    const Elem& img = f(x.leg(key, leg));
    for (auto& [ik, ic] : img.terms()) {
      int o = 0;
      for (int i = 0; i < leg; ++i) idx[o++] = x.leg(key, i);
      for (int i = 0; i < image_rank; ++i) idx[o++] = img.leg(ik, i);
      for (int i = leg + 1; i < k; ++i) idx[o++] = x.leg(key, i);
      acc.add_product(Elem::pack(idx.data(), nk), c, ic);
    }
  }
  return Elem::from_terms(x.alg(), nk, acc.take());
}

Elem counit_leg(const Elem& x, int leg) {
  int k = x.rank();
  if (k < 2) throw std::invalid_argument("counit_leg needs rank at least 2");
  Accumulator acc(x.size());
  std::array<int, 4> idx{};
  for (auto& [key, c] : x.terms()) {
    int l = x.leg(key, leg);
    PbwIndex ix = x.alg()->decode(l);
    if (ix.a || ix.b) continue;
    int o = 0;
    for (int i = 0; i < k; ++i)
      if (i != leg) idx[o++] = x.leg(key, i);
    acc.add(Elem::pack(idx.data(), k - 1), c);
  }
  return Elem::from_terms(x.alg(), k - 1, acc.take());
}

Elem merge_legs(const Elem& x, int first, int count) {
  int k = x.rank();
  if (count < 1 || first < 0 || first + count > k) throw std::invalid_argument("merge_legs: bad leg range");
  if (count == 1) return x;
  const Algebra& A = *x.alg();
  int nk = k - count + 1;
  Accumulator acc(x.size() * 4);
  std::vector<std::pair<int, CycNum>> cur, next;
  std::array<int, 4> idx{};
  for (auto& [key, c] : x.terms()) {
    cur.assign(1, {x.leg(key, first), c});
    for (int i = first + 1; i < first + count && !cur.empty(); ++i) {
      next.clear();
      int y = x.leg(key, i);
      for (auto& [l, lc] : cur)
        A.mul_basis(l, y, [&](int r, const CycNum& s) { next.emplace_back(r, s.is_one() ? lc : lc * s); });
      cur.swap(next);
    }
    int o = 0;
    for (int i = 0; i < first; ++i) idx[o++] = x.leg(key, i);
    int slot = o++;
    for (int i = first + count; i < k; ++i) idx[o++] = x.leg(key, i);
    for (auto& [l, lc] : cur) {
      idx[slot] = l;
      acc.add(Elem::pack(idx.data(), nk), lc);
    }
  }
  return Elem::from_terms(x.alg(), nk, acc.take());
}

CycNum counit(const Elem& x) {
  CycNum r(x.alg()->order());
  for (auto& [key, c] : x.terms()) {
    bool ok = true;
    for (int i = 0; i < x.rank(); ++i) {
      PbwIndex ix = x.alg()->decode(x.leg(key, i));
      if (ix.a || ix.b) ok = false;
    }
    if (ok) r += c;
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Elem> powers(const Elem& x, int n) {
  std::vector<Elem> v{Elem::one(x.alg(), x.rank())};
  for (int i = 1; i < n; ++i) v.push_back(v.back() * x);
  return v;
}

}  // namespace

AntiMap::AntiMap(const AlgPtr& A, const Elem& imE, const Elem& imF, const Elem& imK) : A_(A) {
  int p = A->p();
  CycNum inv_qq = (A->q(1) - A->q(-1)).inverse();
  Elem Kinv = imK.pow(2 * p - 1);
  bool ok = imE.pow(p).is_zero() && imF.pow(p).is_zero() && imK.pow(2 * p) == Elem::one(A) &&
            imE * imK == A->q(2) * (imK * imE) && imF * imK == A->q(-2) * (imK * imF) &&
            imF * imE - imE * imF == inv_qq * (imK - Kinv);
  if (!ok) throw InvalidAntimap("generator images violate the defining relations");
  auto pe = powers(imE, p), pf = powers(imF, p), pk = powers(imK, 2 * p);
  table_.resize(A->dim());
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      Elem fe = pf[b] * pe[a];
      for (int j = 0; j < 2 * p; ++j) table_[A->index(a, b, j)] = pk[j] * fe;
    }
}

Elem AntiMap::operator()(const Elem& x) const { return on_leg(x, 0); }

Elem AntiMap::on_leg(const Elem& x, int leg) const {
  return map_leg(x, leg, 1, [this](int i) -> const Elem& { return table_[i]; });
}

AlgMap::AlgMap(const AlgPtr& A, int rank, const Elem& imE, const Elem& imF, const Elem& imK) : A_(A), rank_(rank) {
  int p = A->p();
  CycNum inv_qq = (A->q(1) - A->q(-1)).inverse();
  Elem one = Elem::one(A, rank);
  Elem Kinv = imK.pow(2 * p - 1);
  bool ok = imE.pow(p).is_zero() && imF.pow(p).is_zero() && imK.pow(2 * p) == one &&
            imK * imE == A->q(2) * (imE * imK) && imK * imF == A->q(-2) * (imF * imK) &&
            imE * imF - imF * imE == inv_qq * (imK - Kinv);
  if (!ok) throw std::invalid_argument("generator images violate the defining relations");
  auto pe = powers(imE, p), pf = powers(imF, p), pk = powers(imK, 2 * p);
  table_.resize(A->dim());
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      Elem ef = pe[a] * pf[b];
      for (int j = 0; j < 2 * p; ++j) table_[A->index(a, b, j)] = ef * pk[j];
    }
}

Elem AlgMap::operator()(const Elem& x) const { return on_leg(x, 0); }

Elem AlgMap::on_leg(const Elem& x, int leg) const {
  return map_leg(x, leg, rank_, [this](int i) -> const Elem& { return table_[i]; });
}

SMat left_regular(const Elem& x) {
  const AlgPtr& A = x.alg();
  int n = A->dim();
  SMat m(n, n, A->order());
  for (int y = 0; y < n; ++y) {
    Elem prod = x * Elem::basis(A, {y}, CycNum(1L, A->order()));
    for (auto& [k, c] : prod.terms()) m.set(int(k), y, c);
  }
  return m;
}

std::optional<Elem> inverse_in_span(const Elem& x, const std::vector<int>& span) {
  const AlgPtr& A = x.alg();
  int n = int(span.size());
  std::map<int, int> row_of;
  std::vector<SparseVec> rows;
  for (int col = 0; col < n; ++col) {
    Elem prod = x * Elem::basis(A, {span[col]}, CycNum(1L, A->order()));
    for (auto& [k, c] : prod.terms()) {
      auto [it, fresh] = row_of.try_emplace(int(k), int(rows.size()));
      if (fresh) rows.emplace_back();
      rows[it->second].emplace_back(col, c);
    }
  }
  int unit_row;
  {
    auto [it, fresh] = row_of.try_emplace(0, int(rows.size()));
    if (fresh) rows.emplace_back();
    unit_row = it->second;
  }
  std::vector<CycNum> rhs(rows.size(), CycNum(A->order()));
  rhs[unit_row] = CycNum(1L, A->order());
  auto sol = solve_rows(rows, rhs, n, A->order());
  if (!sol) return std::nullopt;
  std::vector<Elem::Term> terms;
  for (int col = 0; col < n; ++col)
    if (!(*sol)[col].is_zero()) terms.emplace_back(uint64_t(span[col]), (*sol)[col]);
  Elem y = Elem::from_terms(A, 1, std::move(terms));
  if (x * y != Elem::one(A)) return std::nullopt;
  return y;
}

}  // namespace qhopf
