#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <ostream>
#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qhopf/cyclo.hpp"
#include "qhopf/linalg.hpp"

namespace qhopf {

struct IncompatibleAlgebras : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidAntimap : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PbwIndex {
  int a = 0, b = 0, j = 0;
  auto operator<=>(const PbwIndex&) const = default;
};

// One normal-ordered term E^x F^y K^z with its coefficient pre-multiplied by
// q^{2m} for every m in Z_p.
struct StraightTerm {
  int x, y, z;
  std::vector<CycNum> scaled;
};

// The restricted quantum group at q = exp(i pi/p) in the basis E^a F^b K^j.
class Algebra {
 public:
  static std::shared_ptr<const Algebra> get(int p);
  explicit Algebra(int p);

  int p() const { return p_; }
  int order() const { return 4 * p_; }
  int dim() const { return dim_; }
  int two_p() const { return 2 * p_; }

  int index(int a, int b, int j) const { return (a * p_ + b) * 2 * p_ + mod2p(j); }
  int index(const PbwIndex& i) const { return index(i.a, i.b, i.j); }
  PbwIndex decode(int idx) const { return {idx / (2 * p_ * p_), (idx / (2 * p_)) % p_, idx % (2 * p_)}; }
  int mod2p(long j) const { return int(((j % (2 * p_)) + 2 * p_) % (2 * p_)); }

  // q^{m/2}, read from a table
  const CycNum& qh(long m) const { return qhalf_[((m % (4 * p_)) + 4 * p_) % (4 * p_)]; }
  const CycNum& q(long m) const { return qh(2 * m); }

  // F^b E^c in normal order
  const std::vector<StraightTerm>& straight(int c, int b) const { return table_[c * p_ + b]; }

  template <class Fn>
  void mul_basis(int x, int y, Fn&& fn) const {
    int a = x / (2 * p_ * p_), b = (x / (2 * p_)) % p_, j = x % (2 * p_);
    int c = y / (2 * p_ * p_), d = (y / (2 * p_)) % p_, l = y % (2 * p_);
    for (const StraightTerm& t : table_[c * p_ + b]) {
      if (a + t.x >= p_ || t.y + d >= p_) continue;
      long m = (long(j) * (c - d) - long(t.z) * d) % p_;
      if (m < 0) m += p_;
      fn(index(a + t.x, t.y + d, t.z + j + l), t.scaled[m]);
    }
  }

  // table rendering for the cache; entries keyed (E exponent, F exponent)
  std::vector<std::pair<std::pair<int, int>, std::vector<std::pair<PbwIndex, CycNum>>>> table_entries() const;
  void load_table(const std::vector<std::pair<std::pair<int, int>, std::vector<std::pair<PbwIndex, CycNum>>>>& e);

 private:
  int p_, dim_;
  std::vector<CycNum> qhalf_;
  std::vector<std::vector<StraightTerm>> table_;
  void build_table();
  void set_entry(int c, int b, const std::vector<std::pair<PbwIndex, CycNum>>& terms);
};

using AlgPtr = std::shared_ptr<const Algebra>;

// Sparse element of the k-fold tensor power; legs packed 16 bits each with
// leg 0 in the highest position, so key order is lexicographic.
class Elem {
 public:
  using Term = std::pair<uint64_t, CycNum>;

  Elem() = default;
  Elem(AlgPtr alg, int rank) : alg_(std::move(alg)), rank_(rank) {}

  static Elem zero(const AlgPtr& alg, int rank = 1) { return Elem(alg, rank); }
  static Elem one(const AlgPtr& alg, int rank = 1);
  static Elem basis(const AlgPtr& alg, std::initializer_list<int> idx, const CycNum& c);
  static Elem basis(const AlgPtr& alg, const std::vector<int>& idx, const CycNum& c);
  static Elem from_terms(const AlgPtr& alg, int rank, std::vector<Term> terms);

  const AlgPtr& alg() const { return alg_; }
  int rank() const { return rank_; }
  int p() const { return alg_->p(); }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  static uint64_t pack(const int* idx, int rank);
  static uint64_t pack(const std::vector<int>& idx) { return pack(idx.data(), int(idx.size())); }
  int leg(uint64_t key, int i) const { return int((key >> (16 * (rank_ - 1 - i))) & 0xffff); }
  std::vector<int> legs(uint64_t key) const;
  CycNum coeff(const std::vector<int>& idx) const;

  Elem operator-() const;
  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  friend Elem operator+(Elem a, const Elem& b) { return a += b; }
  friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
  friend Elem operator*(const Elem& a, const Elem& b);
  friend Elem operator*(const CycNum& s, const Elem& a);
  friend Elem operator*(const Elem& a, const CycNum& s) { return s * a; }
  friend bool operator==(const Elem& a, const Elem& b);
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

  Elem pow(int e) const;
  std::string str() const;

 private:
  AlgPtr alg_;
  int rank_ = 1;
  std::vector<Term> terms_;  // sorted by key, no zeros
};

inline std::ostream& operator<<(std::ostream& os, const Elem& x) { return os << x.str(); }

using AlgElem = Elem;
using TensorElem = Elem;

// Sums sparse contributions keyed by packed multi-indices.
class Accumulator {
 public:
  explicit Accumulator(size_t hint = 64);
  void add(uint64_t key, const CycNum& c);
  void add_product(uint64_t key, const CycNum& a, const CycNum& b);
  std::vector<Elem::Term> take();

 private:
  std::vector<std::pair<uint64_t, uint32_t>> slots_;
  std::vector<Elem::Term> values_;
  size_t mask_;
  size_t used_ = 0;
  uint32_t find(uint64_t key);
  void grow();
};

// generators and idempotents
Elem gen_E(const AlgPtr& A);
Elem gen_F(const AlgPtr& A);
Elem gen_K(const AlgPtr& A, int j = 1);
Elem idempotent_e(const AlgPtr& A, int n);
Elem idem_e0(const AlgPtr& A);
Elem idem_e1(const AlgPtr& A);
Elem scalar(const AlgPtr& A, const CycNum& c, int rank = 1);

// outer product x (x) y
Elem tensor(const Elem& x, const Elem& y);
Elem tensor(std::initializer_list<Elem> xs);
Elem flip_legs(const Elem& x);
// permute legs: leg i of x goes to leg perm[i] of the result
Elem permute_legs(const Elem& x, const std::vector<int>& perm);
// place x into the given legs of a rank-k tensor, identity elsewhere
Elem leg_embed(const Elem& x, const std::vector<int>& legs, int k);

// replace leg i by the image of a linear map given on basis elements; the
// map returns an element of some rank m, which takes the place of leg i.
Elem map_leg(const Elem& x, int leg, int image_rank, const std::function<const Elem&(int)>& f);
Elem counit_leg(const Elem& x, int leg);
// multiply legs first..first+count-1 into a single leg
Elem merge_legs(const Elem& x, int first, int count);
inline Elem collapse(const Elem& x) { return merge_legs(x, 0, x.rank()); }
CycNum counit(const Elem& x);

// Anti-automorphism extended from images of E, F, K (K^-1 is K^{2p-1}).
class AntiMap {
 public:
  AntiMap(const AlgPtr& A, const Elem& imE, const Elem& imF, const Elem& imK);
  const Elem& on_basis(int idx) const { return table_[idx]; }
  Elem operator()(const Elem& x) const;
  // apply to one leg of a tensor
  Elem on_leg(const Elem& x, int leg) const;

 private:
  AlgPtr A_;
  std::vector<Elem> table_;
};

// Algebra map to the rank-k tensor power, extended from images of E, F, K.
class AlgMap {
 public:
  AlgMap(const AlgPtr& A, int rank, const Elem& imE, const Elem& imF, const Elem& imK);
  const Elem& on_basis(int idx) const { return table_[idx]; }
  int rank() const { return rank_; }
  Elem operator()(const Elem& x) const;
  Elem on_leg(const Elem& x, int leg) const;

 private:
  AlgPtr A_;
  int rank_;
  std::vector<Elem> table_;
};

// left regular representation, columns indexed by the PBW basis
SMat left_regular(const Elem& x);

// solve x y = 1 inside a subspace spanned by basis indices closed under
// left multiplication by x; nullopt if no solution there
std::optional<Elem> inverse_in_span(const Elem& x, const std::vector<int>& span);

}  // namespace qhopf
