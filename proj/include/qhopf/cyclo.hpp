#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <complex>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhopf {

using Rat = mpq_class;

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};
struct IncompatibleOrders : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Q(zeta_N) as Q[x]/Phi_N.  One instance per N, created on first use and
// never mutated afterwards.
struct CycloField {
  int order = 1;
  int phi = 1;
  std::vector<int64_t> poly;     // monic Phi_N, constant term first
  std::vector<int64_t> powers;   // zeta^k reduced, k < N, row-major N x phi
  const int64_t* power(int k) const { return powers.data() + size_t(k) * phi; }
};

const CycloField& cyclo_field(int N);
std::vector<int64_t> cyclotomic_poly(int N);
int euler_phi(int n);

class CycNum {
 public:
  using Small = boost::container::small_vector<int64_t, 8>;
  struct Big {
    std::vector<mpz_class> num;
    mpz_class den;
  };

  CycNum();  // zero, order 1
  explicit CycNum(int N);
  CycNum(long v, int N);
  CycNum(const Rat& r, int N);

  static CycNum zero(int N) { return CycNum(N); }
  static CycNum one(int N) { return CycNum(1L, N); }
  static CycNum zeta_power(int N, long k);

  int order() const { return f_->order; }
  int degree() const { return f_->phi; }
  const CycloField& field() const { return *f_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rat coeff(int i) const;
  std::vector<Rat> coeffs() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator*=(long s);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator*(CycNum a, long s) { return a *= s; }
  friend CycNum operator*(long s, CycNum a) { return a *= s; }
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  CycNum inverse() const;
  CycNum pow(long e) const;
  // complex conjugate, zeta -> zeta^-1
  CycNum conj() const;
  CycNum embed(int M) const;

  std::string str() const;
  static CycNum parse(const std::string& s);
  std::complex<double> to_complex() const;

  // accumulate a*b into *this without temporaries when possible
  void add_product(const CycNum& a, const CycNum& b);

 private:
  const CycloField* f_;
  int64_t den_ = 1;
  Small num_;
  std::shared_ptr<const Big> big_;

  explicit CycNum(const CycloField* f);
  Big to_big() const;
  static CycNum from_big(const CycloField* f, Big b);
  void normalize_small();
  void lift_to(int M);
  static int common_order(const CycNum& a, const CycNum& b);
  friend CycNum mul_big(const CycNum& a, const CycNum& b);
};

CycNum operator*(const CycNum& a, const CycNum& b);
std::ostream& operator<<(std::ostream& os, const CycNum& x);

CycNum root_power(int N, long k);
CycNum embed(const CycNum& x, int M);

// q = exp(i pi / p) lives at order 4p as zeta_{4p}^2; q^{m/2} = zeta_{4p}^m.
CycNum qhalf(int p, long m);
inline CycNum qpow(int p, long m) { return qhalf(p, 2 * m); }
CycNum q_number(long n, int p);
CycNum q_factorial(long n, int p);
CycNum gauss_sum(int p);
CycNum gauss_normalizer(int p);

std::string rat_str(const Rat& r);

}  // namespace qhopf
