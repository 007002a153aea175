#pragma once

#include <string>
#include <vector>

#include "qhopf/cyclo.hpp"
#include "qhopf/report.hpp"

namespace qhopf {

// A set of representatives for Z_2p inside Z.
class SectorSet {
 public:
  // throws InvalidParameters unless the list hits every residue exactly once
  SectorSet(int p, std::vector<long> reps, std::string name = "custom");
  static SectorSet standard(int p);   // {0, ..., 2p-1}
  static SectorSet symmetric(int p);  // {-p, ..., p-1}

  int p() const { return p_; }
  int size() const { return 2 * p_; }
  int residue(long x) const { return int(((x % (2 * p_)) + 2 * p_) % (2 * p_)); }
  long rep(long x) const { return by_residue_[residue(x)]; }
  const std::vector<long>& elements() const { return elements_; }
  const std::string& name() const { return name_; }

 private:
  int p_;
  std::vector<long> elements_, by_residue_;
  std::string name_;
};

// (a + b - <a+b>)/2p; throws std::logic_error if it is not an integer
long kappa(long a, long b, const SectorSet& S);
long kappa_pm(long a, int sign, const SectorSet& S);  // kappa(a, +-2)

enum class CartanZeta { trivial, qg };
std::string cartan_zeta_name(CartanZeta z);

// zeta_{a,b} on residues; qg(t) is q^{tb/2} for odd a and 1 otherwise
std::vector<CycNum> cartan_zeta_table(const SectorSet& S, CartanZeta z, int t);

// Coefficient tables of the Cartan model. Every table is indexed by residues
// mod 2p; the sector set decides which integer stands for each residue.
struct CartanData {
  int p = 0, t = 1;
  SectorSet S;
  CartanZeta zeta_choice = CartanZeta::trivial;
  std::vector<CycNum> zeta;   // (2p)^2
  std::vector<CycNum> Phi;    // (2p)^3, coefficient of e_a (x) e_b (x) e_c
  std::vector<CycNum> R;      // (2p)^2
  std::vector<CycNum> v;      // 2p, coefficient of e_a
  std::vector<CycNum> v_K;    // 2p, coefficient of K^l
  std::vector<CycNum> beta;   // 2p

  int n() const { return 2 * p; }
  int order() const { return 4 * p; }
  const CycNum& z(long a, long b) const { return zeta[S.residue(a) * n() + S.residue(b)]; }
  const CycNum& phi(long a, long b, long c) const {
    return Phi[(S.residue(a) * n() + S.residue(b)) * n() + S.residue(c)];
  }
  const CycNum& r(long a, long b) const { return R[S.residue(a) * n() + S.residue(b)]; }
};

CartanData build_cartan(int p, const SectorSet& S, CartanZeta z = CartanZeta::trivial, int t = 1);

// beta as printed next to the antipode: q^{a<0>/2} zeta_{a,-a}/zeta_{-a,a}
std::vector<CycNum> literal_beta(const CartanData& d);
// beta solving both antipode identities for the stored Phi
std::vector<CycNum> derived_beta(const CartanData& d);

CheckResult check_cartan_pentagon(const CartanData& d);
CheckResult check_cartan_hexagons(const CartanData& d);
CheckResult check_cartan_antipode(const CartanData& d, const std::vector<CycNum>& beta);
CheckResult check_cartan_ribbon(const CartanData& d);
CheckResult check_gauss_resummation(const CartanData& d);
CheckResult check_self_braiding(const CartanData& d);
CheckResult check_transparency(const CartanData& d);
CheckResult check_cartan_drinfeld_rank(const CartanData& d);
Checks cartan_suite(const CartanData& d);

// the alpha with q^{alpha beta} = 1 for every beta
std::vector<int> transparent_sectors(const CartanData& d);

// One basis vector 1_k (x) e_a m of F_S(M): grade k and sector a in S.
struct GradedVec {
  long k;
  long a;
  long H(int p) const { return 2L * p * k + a; }
};

struct TransportTerm {
  GradedVec v;
  CycNum c;
};

// F_{M,N} on (1_k (x) e_a m) (x)_Lambda (1_l (x) e_b n), with zeta taken from d
TransportTerm apply_fmn(const CartanData& d, const GradedVec& x, const GradedVec& y);

// Solve the transport equations on basis vectors at the given grades and
// compare the unique solution with the stored tables.
CheckResult check_cartan_transport_assoc(const CartanData& d, long k, long l, long m);
CheckResult check_cartan_transport_braiding(const CartanData& d, long k, long l);
CheckResult check_cartan_transport_twist(const CartanData& d, long k);
// Transport with S' agrees with transport with S twisted by the scalars that
// the natural isomorphism eta_{S,S'} produces on F_{M,N}.
CheckResult check_sector_relabelling(const CartanData& d, const CartanData& d2);
// a Lambda_p-module grade h is local iff q^{2p h} = 1; scans h in (1/den) Z
CheckResult check_locality_grades(int p, int max_den = 4, int range = 6);
Checks cartan_transport(const CartanData& d);

}  // namespace qhopf
