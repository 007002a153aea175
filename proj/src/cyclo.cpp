#include "qhopf/cyclo.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace qhopf {

namespace {

using i128 = __int128;

bool fits64(i128 v) { return v > i128(INT64_MIN) && v <= i128(INT64_MAX); }

int bitlen(uint64_t v) { return v ? 64 - __builtin_clzll(v) : 0; }

int64_t iabs(int64_t v) { return v < 0 ? -v : v; }

std::vector<int64_t> poly_divexact(std::vector<int64_t> a, const std::vector<int64_t>& m) {
  // m monic
  int dm = int(m.size()) - 1;
  int da = int(a.size()) - 1;
  std::vector<int64_t> q(da - dm + 1, 0);
  for (int k = da; k >= dm; --k) {
    int64_t c = a[k];
    q[k - dm] = c;
    if (c == 0) continue;
    for (int i = 0; i <= dm; ++i) a[k - dm + i] -= c * m[i];
  }
  for (int i = 0; i < dm; ++i)
    if (a[i] != 0) throw std::logic_error("cyclotomic division not exact");
  return q;
}

std::mutex g_field_mutex;
std::map<int, std::unique_ptr<CycloField>> g_fields;
constexpr int kFastFields = 1024;
std::array<std::atomic<const CycloField*>, kFastFields> g_fast{};

std::unique_ptr<CycloField> make_field(int N) {
  auto f = std::make_unique<CycloField>();
  f->order = N;
  f->poly = cyclotomic_poly(N);
  f->phi = int(f->poly.size()) - 1;
  int phi = f->phi;
  f->powers.assign(size_t(N) * phi, 0);
  std::vector<int64_t> cur(phi, 0);
  cur[0] = 1;
  for (int k = 0; k < N; ++k) {
    std::copy(cur.begin(), cur.end(), f->powers.begin() + size_t(k) * phi);
    // multiply by x and reduce
    int64_t top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < phi; ++i) cur[i] -= top * f->poly[i];
  }
  return f;
}

std::mutex g_q_mutex;
std::map<int, std::vector<CycNum>> g_qhalf;

// polynomial helpers over Q for the inverse
using QPoly = std::vector<mpq_class>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

int euler_phi(int n) {
  int r = n;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      r -= r / d;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

std::vector<int64_t> cyclotomic_poly(int N) {
  if (N < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::vector<int64_t> a(N + 1, 0);
  a[0] = -1;
  a[N] = 1;
  for (int d = 1; d < N; ++d)
    if (N % d == 0) a = poly_divexact(a, cyclo_field(d).poly);
  return a;
}

const CycloField& cyclo_field(int N) {
  if (N < 1) throw std::invalid_argument("cyclotomic order must be positive");
  if (N < kFastFields) {
    if (auto* f = g_fast[N].load(std::memory_order_acquire)) return *f;
  }
  {
    std::lock_guard<std::mutex> lk(g_field_mutex);
    auto it = g_fields.find(N);
    if (it != g_fields.end()) return *it->second;
  }
  // build outside the lock: cyclotomic_poly recurses into smaller orders
  auto f = make_field(N);
  std::lock_guard<std::mutex> lk(g_field_mutex);
  auto [it, inserted] = g_fields.emplace(N, std::move(f));
  if (N < kFastFields) g_fast[N].store(it->second.get(), std::memory_order_release);
  return *it->second;
}

CycNum::CycNum(const CycloField* f) : f_(f), den_(1), num_(f->phi, 0) {}
CycNum::CycNum() : CycNum(&cyclo_field(1)) {}
CycNum::CycNum(int N) : CycNum(&cyclo_field(N)) {}
CycNum::CycNum(long v, int N) : CycNum(&cyclo_field(N)) {
  if (v == INT64_MIN) {
    *this = CycNum(Rat(mpz_class(v)), N);
    return;
  }
  num_[0] = v;
}
CycNum::CycNum(const Rat& r, int N) : CycNum(&cyclo_field(N)) {
  Big b;
  b.num.assign(f_->phi, 0);
  b.num[0] = r.get_num();
  b.den = r.get_den();
  *this = from_big(f_, std::move(b));
}

bool CycNum::is_zero() const {
  if (big_) return false;
  for (auto v : num_)
    if (v) return false;
  return true;
}

bool CycNum::is_one() const {
  if (big_ || den_ != 1 || num_[0] != 1) return false;
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i]) return false;
  return true;
}

bool CycNum::is_rational() const {
  if (big_) {
    for (size_t i = 1; i < big_->num.size(); ++i)
      if (big_->num[i] != 0) return false;
    return true;
  }
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i]) return false;
  return true;
}

Rat CycNum::coeff(int i) const {
  Rat r;
  if (big_) {
    r = Rat(big_->num[i], big_->den);
  } else {
    r = Rat(mpz_class(static_cast<long>(num_[i])), mpz_class(static_cast<long>(den_)));
  }
  r.canonicalize();
  return r;
}

std::vector<Rat> CycNum::coeffs() const {
  std::vector<Rat> out;
  for (int i = 0; i < f_->phi; ++i) out.push_back(coeff(i));
  return out;
}

CycNum::Big CycNum::to_big() const {
  if (big_) return *big_;
  Big b;
  b.num.reserve(num_.size());
  for (auto v : num_) b.num.emplace_back(static_cast<long>(v));
  b.den = static_cast<long>(den_);
  return b;
}

CycNum CycNum::from_big(const CycloField* f, Big b) {
  mpz_class g = b.den;
  for (auto& v : b.num) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  bool all_zero = std::all_of(b.num.begin(), b.num.end(), [](const mpz_class& v) { return v == 0; });
  if (all_zero) return CycNum(f);
  if (g != 1) {
    for (auto& v : b.num) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.den.get_mpz_t(), b.den.get_mpz_t(), g.get_mpz_t());
  }
  if (b.den < 0) {
    b.den = -b.den;
    for (auto& v : b.num) v = -v;
  }
  auto small_ok = [](const mpz_class& v) { return v.fits_slong_p() && v != mpz_class(INT64_MIN); };
  bool fits = small_ok(b.den) && std::all_of(b.num.begin(), b.num.end(), small_ok);
  CycNum r(f);
  if (fits) {
    for (size_t i = 0; i < b.num.size(); ++i) r.num_[i] = b.num[i].get_si();
    r.den_ = b.den.get_si();
  } else {
    r.num_.clear();
    r.big_ = std::make_shared<const Big>(std::move(b));
  }
  return r;
}

void CycNum::normalize_small() {
  if (den_ == 1) return;
  int64_t g = den_;
  bool nz = false;
  for (auto v : num_) {
    if (v) nz = true;
    if (g == 1) break;
    g = std::gcd(g, iabs(v));
  }
  if (!nz) {
    den_ = 1;
    return;
  }
  if (g > 1) {
    for (auto& v : num_) v /= g;
    den_ /= g;
  }
}

int CycNum::common_order(const CycNum& a, const CycNum& b) {
  return std::lcm(a.f_->order, b.f_->order);
}

void CycNum::lift_to(int M) {
  if (M != f_->order) *this = embed(M);
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  if (big_) {
    Big b = *big_;
    for (auto& v : b.num) v = -v;
    r.big_ = std::make_shared<const Big>(std::move(b));
  } else {
    for (auto& v : r.num_) v = -v;
  }
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (f_ != o.f_) {
    if (o.is_zero()) return *this;
    int L = common_order(*this, o);
    lift_to(L);
    if (o.f_->order != L) return *this += o.embed(L);
  }
  if (!big_ && !o.big_) {
    int phi = f_->phi;
    if (den_ == o.den_) {
      bool ok = true;
      for (int i = 0; i < phi && ok; ++i) ok = fits64(i128(num_[i]) + o.num_[i]);
      if (ok) {
        for (int i = 0; i < phi; ++i) num_[i] += o.num_[i];
        normalize_small();
        return *this;
      }
    } else {
      int64_t g = std::gcd(den_, o.den_);
      int64_t m1 = o.den_ / g, m2 = den_ / g;
      int64_t l;
      if (!__builtin_mul_overflow(den_, m1, &l)) {
        bool ok = true;
        for (int i = 0; i < phi && ok; ++i) ok = fits64(i128(num_[i]) * m1 + i128(o.num_[i]) * m2);
        if (ok) {
          for (int i = 0; i < phi; ++i) num_[i] = num_[i] * m1 + o.num_[i] * m2;
          den_ = l;
          normalize_small();
          return *this;
        }
      }
    }
  }
  Big a = to_big(), b = o.to_big();
  for (size_t i = 0; i < a.num.size(); ++i) a.num[i] = a.num[i] * b.den + b.num[i] * a.den;
  a.den *= b.den;
  *this = from_big(f_, std::move(a));
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(long s) {
  if (s == 1) return *this;
  if (s == 0) return *this = CycNum(f_);
  if (!big_) {
    bool ok = true;
    for (auto v : num_) ok = ok && fits64(i128(v) * s);
    if (ok) {
      for (auto& v : num_) v *= s;
      normalize_small();
      return *this;
    }
  }
  Big a = to_big();
  for (auto& v : a.num) v *= s;
  *this = from_big(f_, std::move(a));
  return *this;
}

CycNum mul_big(const CycNum& a, const CycNum& b) {
  const CycloField* f = a.f_;
  int phi = f->phi;
  CycNum::Big x = a.to_big(), y = b.to_big();
  std::vector<mpz_class> acc(2 * phi - 1, 0);
  for (int i = 0; i < phi; ++i) {
    if (x.num[i] == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (y.num[j] != 0) acc[i + j] += x.num[i] * y.num[j];
  }
  for (int k = 2 * phi - 2; k >= phi; --k) {
    if (acc[k] == 0) continue;
    mpz_class c = acc[k];
    for (int i = 0; i < phi; ++i)
      if (f->poly[i]) acc[k - phi + i] -= c * static_cast<long>(f->poly[i]);
    acc[k] = 0;
  }
  CycNum::Big r;
  r.num.assign(acc.begin(), acc.begin() + phi);
  r.den = x.den * y.den;
  return CycNum::from_big(f, std::move(r));
}

CycNum operator*(const CycNum& a0, const CycNum& b0) {
  if (a0.f_ != b0.f_) {
    if (a0.is_zero() || b0.is_zero()) {
      int L = CycNum::common_order(a0, b0);
      return CycNum(L);
    }
    int L = CycNum::common_order(a0, b0);
    return a0.embed(L) * b0.embed(L);
  }
  const CycNum& a = a0;
  const CycNum& b = b0;
  if (a.big_ || b.big_) return mul_big(a, b);
  const CycloField* f = a.f_;
  int phi = f->phi;
  if (phi == 1) {
    i128 v = i128(a.num_[0]) * b.num_[0];
    int64_t d;
    if (fits64(v) && !__builtin_mul_overflow(a.den_, b.den_, &d)) {
      CycNum r(f);
      r.num_[0] = int64_t(v);
      r.den_ = d;
      r.normalize_small();
      return r;
    }
    return mul_big(a, b);
  }
  uint64_t ma = 0, mb = 0;
  int na = 0, nb = 0;
  for (int i = 0; i < phi; ++i) {
    if (a.num_[i]) {
      ma = std::max<uint64_t>(ma, iabs(a.num_[i]));
      ++na;
    }
    if (b.num_[i]) {
      mb = std::max<uint64_t>(mb, iabs(b.num_[i]));
      ++nb;
    }
  }
  if (na == 0 || nb == 0) return CycNum(f);
  int64_t d;
  if (__builtin_mul_overflow(a.den_, b.den_, &d)) return mul_big(a, b);
  if (bitlen(ma) + bitlen(mb) + bitlen(uint64_t(phi)) > 120 || phi > 256) return mul_big(a, b);
  // scalar fast path
  if (na == 1 && a.num_[0] != 0) {
    CycNum r(f);
    for (int i = 0; i < phi; ++i) {
      i128 v = i128(a.num_[0]) * b.num_[i];
      if (!fits64(v)) return mul_big(a, b);
      r.num_[i] = int64_t(v);
    }
    r.den_ = d;
    r.normalize_small();
    return r;
  }
  if (nb == 1 && b.num_[0] != 0) return b * a;
  i128 acc[511];
  int len = 2 * phi - 1;
  for (int k = 0; k < len; ++k) acc[k] = 0;
  for (int i = 0; i < phi; ++i) {
    int64_t x = a.num_[i];
    if (!x) continue;
    for (int j = 0; j < phi; ++j)
      if (b.num_[j]) acc[i + j] += i128(x) * b.num_[j];
  }
  for (int k = len - 1; k >= phi; --k) {
    i128 c = acc[k];
    if (!c) continue;
    for (int i = 0; i < phi; ++i) {
      int64_t pc = f->poly[i];
      if (!pc) continue;
      i128 t;
      if (__builtin_mul_overflow(c, i128(pc), &t) || __builtin_sub_overflow(acc[k - phi + i], t, &acc[k - phi + i]))
        return mul_big(a, b);
    }
  }
  CycNum r(f);
  for (int i = 0; i < phi; ++i) {
    if (!fits64(acc[i])) return mul_big(a, b);
    r.num_[i] = int64_t(acc[i]);
  }
  r.den_ = d;
  r.normalize_small();
  return r;
}

CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

void CycNum::add_product(const CycNum& a, const CycNum& b) { *this += a * b; }

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.f_ != b.f_) {
    int L = CycNum::common_order(a, b);
    return a.embed(L) == b.embed(L);
  }
  if (bool(a.big_) != bool(b.big_)) return false;
  if (a.big_) return a.big_->den == b.big_->den && a.big_->num == b.big_->num;
  return a.den_ == b.den_ && a.num_ == b.num_;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
  int phi = f_->phi;
  Big b = to_big();
  QPoly r0(f_->poly.size()), r1(phi), s0, s1{mpq_class(1)};
  for (size_t i = 0; i < f_->poly.size(); ++i) r0[i] = static_cast<long>(f_->poly[i]);
  for (int i = 0; i < phi; ++i) r1[i] = mpq_class(b.num[i], b.den), r1[i].canonicalize();
  trim(r0);
  trim(r1);
  while (r1.size() > 1) {
    // r0 = qt * r1 + rem
    QPoly rem = r0, qt(r0.size() - r1.size() + 1);
    const mpq_class& lead = r1.back();
    for (int k = int(rem.size()) - 1; k >= int(r1.size()) - 1; --k) {
      if (rem[k] == 0) continue;
      mpq_class c = rem[k] / lead;
      int sh = k - (int(r1.size()) - 1);
      qt[sh] = c;
      for (size_t i = 0; i < r1.size(); ++i) rem[sh + i] -= c * r1[i];
    }
    trim(rem);
    // s_new = s0 - qt * s1
    QPoly sn(std::max(s0.size(), qt.size() + s1.size() - 1), 0);
    for (size_t i = 0; i < s0.size(); ++i) sn[i] = s0[i];
    for (size_t i = 0; i < qt.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j) sn[i + j] -= qt[i] * s1[j];
    trim(sn);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(sn);
  }
  if (r1.empty()) throw DivisionByZero("not invertible");
  mpq_class c = r1[0];
  // reduce s1 / c modulo Phi_N
  QPoly s = s1;
  for (auto& v : s) v /= c;
  for (int k = int(s.size()) - 1; k >= phi; --k) {
    if (s[k] == 0) continue;
    mpq_class t = s[k];
    for (int i = 0; i <= phi; ++i) s[k - phi + i] -= t * static_cast<long>(f_->poly[i]);
  }
  s.resize(phi, 0);
  mpz_class den = 1;
  for (auto& v : s) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  Big out;
  out.den = den;
  for (auto& v : s) out.num.push_back(v.get_num() * (den / v.get_den()));
  return from_big(f_, std::move(out));
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum r(1L, f_->order), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

CycNum CycNum::embed(int M) const {
  int N = f_->order;
  if (M % N != 0) throw IncompatibleOrders("embed: order " + std::to_string(N) + " does not divide " + std::to_string(M));
  if (M == N) return *this;
  const CycloField* g = &cyclo_field(M);
  int ratio = M / N;
  if (!big_) {
    std::vector<i128> acc(g->phi, 0);
    bool ok = true;
    for (int i = 0; i < f_->phi && ok; ++i) {
      if (!num_[i]) continue;
      const int64_t* pw = g->power(i * ratio);
      for (int k = 0; k < g->phi; ++k) {
        if (!pw[k]) continue;
        acc[k] += i128(num_[i]) * pw[k];
        if (!fits64(acc[k])) ok = false;
      }
    }
    if (ok) {
      CycNum r(g);
      for (int k = 0; k < g->phi; ++k) r.num_[k] = int64_t(acc[k]);
      r.den_ = den_;
      r.normalize_small();
      return r;
    }
  }
  Big b = to_big();
  Big out;
  out.num.assign(g->phi, 0);
  out.den = b.den;
  for (int i = 0; i < f_->phi; ++i) {
    if (b.num[i] == 0) continue;
    const int64_t* pw = g->power(i * ratio);
    for (int k = 0; k < g->phi; ++k)
      if (pw[k]) out.num[k] += b.num[i] * static_cast<long>(pw[k]);
  }
  return from_big(g, std::move(out));
}

CycNum CycNum::conj() const {
  int N = f_->order;
  Big b = to_big();
  Big out;
  out.num.assign(f_->phi, 0);
  out.den = b.den;
  for (int i = 0; i < f_->phi; ++i) {
    if (b.num[i] == 0) continue;
    const int64_t* pw = f_->power((N - i) % N);
    for (int k = 0; k < f_->phi; ++k)
      if (pw[k]) out.num[k] += b.num[i] * static_cast<long>(pw[k]);
  }
  return from_big(f_, std::move(out));
}

std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

std::string CycNum::str() const {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (int i = 0; i < f_->phi; ++i) {
    Rat c = coeff(i);
    if (c == 0) continue;
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    std::string body;
    if (i == 0) {
      body = rat_str(a);
    } else {
      std::string mono = i == 1 ? "z" : "z^" + std::to_string(i);
      body = a == 1 ? mono : rat_str(a) + "*" + mono;
    }
    if (first)
      os << (neg ? "-" : "") << body;
    else
      os << (neg ? " - " : " + ") << body;
    first = false;
  }
  if (first) os << '0';
  os << " @ N=" << f_->order << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.str(); }

CycNum CycNum::parse(const std::string& s0) {
  auto fail = [&]() -> CycNum { throw std::invalid_argument("cannot parse cyclotomic number: " + s0); };
  std::string s = s0;
  auto at = s.find("@ N=");
  if (s.empty() || s.front() != '(' || s.back() != ')' || at == std::string::npos) return fail();
  int N = std::stoi(s.substr(at + 4, s.size() - 1 - (at + 4)));
  std::string body = s.substr(1, at - 1);
  const CycloField* f = &cyclo_field(N);
  Big b;
  b.num.assign(f->phi, 0);
  b.den = 1;
  std::vector<Rat> c(f->phi, 0);
  size_t i = 0;
  auto skip = [&] {
    while (i < body.size() && body[i] == ' ') ++i;
  };
  skip();
  bool any = false;
  while (i < body.size()) {
    int sign = 1;
    if (body[i] == '-' || body[i] == '+') {
      if (body[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (any) {
      return fail();
    }
    Rat coef = 1;
    size_t j = i;
    while (j < body.size() && (isdigit(body[j]) || body[j] == '/')) ++j;
    if (j > i) {
      coef = Rat(body.substr(i, j - i));
      coef.canonicalize();
      i = j;
    }
    int power = 0;
    if (i < body.size() && body[i] == '*') ++i;
    if (i < body.size() && body[i] == 'z') {
      ++i;
      power = 1;
      if (i < body.size() && body[i] == '^') {
        ++i;
        size_t k = i;
        while (k < body.size() && isdigit(body[k])) ++k;
        if (k == i) return fail();
        power = std::stoi(body.substr(i, k - i));
        i = k;
      }
    }
    if (power >= f->phi) return fail();
    c[power] += sign * coef;
    any = true;
    skip();
  }
  mpz_class den = 1;
  for (auto& v : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  b.den = den;
  for (int k = 0; k < f->phi; ++k) b.num[k] = c[k].get_num() * (den / c[k].get_den());
  return from_big(f, std::move(b));
}

std::complex<double> CycNum::to_complex() const {
  std::complex<double> z = 0;
  int N = f_->order;
  for (int i = 0; i < f_->phi; ++i) {
    double c = coeff(i).get_d();
    if (c != 0) z += c * std::polar(1.0, 2 * M_PI * i / N);
  }
  return z;
}

CycNum CycNum::zeta_power(int N, long k) {
  if (N < 1) throw std::invalid_argument("root_power: N must be positive");
  const CycloField* f = &cyclo_field(N);
  long m = ((k % N) + N) % N;
  CycNum r(f);
  const int64_t* pw = f->power(int(m));
  for (int i = 0; i < f->phi; ++i) r.num_[i] = pw[i];
  return r;
}

CycNum root_power(int N, long k) { return CycNum::zeta_power(N, k); }

CycNum embed(const CycNum& x, int M) { return x.embed(M); }

CycNum qhalf(int p, long m) {
  std::vector<CycNum>* tab;
  {
    std::lock_guard<std::mutex> lk(g_q_mutex);
    auto it = g_qhalf.find(p);
    if (it == g_qhalf.end()) {
      std::vector<CycNum> v;
      for (int k = 0; k < 4 * p; ++k) v.push_back(root_power(4 * p, k));
      it = g_qhalf.emplace(p, std::move(v)).first;
    }
    tab = &it->second;
  }
  long n = 4L * p;
  return (*tab)[((m % n) + n) % n];
}

CycNum q_number(long n, int p) {
  CycNum num = qpow(p, n) - qpow(p, -n);
  if (num.is_zero()) return CycNum(4 * p);
  return num / (qpow(p, 1) - qpow(p, -1));
}

CycNum q_factorial(long n, int p) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
  CycNum r(1L, 4 * p);
  for (long k = 1; k <= n; ++k) r *= q_number(k, p);
  return r;
}

CycNum gauss_sum(int p) {
  CycNum s(4 * p);
  for (long a = 0; a < 2 * p; ++a) s += qhalf(p, -a * a);
  return s;
}

CycNum gauss_normalizer(int p) {
  if (p < 2) throw std::invalid_argument("gauss_normalizer: p must be at least 2");
  return gauss_sum(p) * CycNum(Rat(1, 2 * p), 4 * p);
}

}  // namespace qhopf
