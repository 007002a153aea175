#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhopf/cartan.hpp"
#include "qhopf/linalg.hpp"
#include "qhopf/qhopf.hpp"
#include "qhopf/reps.hpp"

namespace qhopf {

struct InvalidWeightRep : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// q^x = exp(i pi x / p) for rational x; N must be a multiple of 2p * den(x)
CycNum q_rat(int p, const Rat& x, int N);
// [x] for rational x, inside the field of order N
CycNum q_number_rat(int p, const Rat& x, int N);
// smallest order hosting q^{mu nu / 2} for weights with the given denominators
int weight_field_order(int p, long den);

// Finite-dimensional weight module of the unrolled quantum group: E, F as
// matrices, H diagonal with rational entries, K = q^H.
class WeightRep {
 public:
  static WeightRep make(std::string name, int p, int order, SMat E, SMat F, std::vector<Rat> H);

  const std::string& name() const { return name_; }
  int p() const { return p_; }
  int order() const { return order_; }
  int dim() const { return int(H_.size()); }
  const SMat& E() const { return E_; }
  const SMat& F() const { return F_; }
  const std::vector<Rat>& H() const { return H_; }
  SMat K(int power = 1) const;
  // q^{c H^2} as a diagonal matrix, c rational
  SMat q_H2(const Rat& c) const;
  WeightRep embed(int N) const;
  // nonempty when the module is not simple (typical with integer alpha not in pZ)
  std::string warning;

 private:
  std::string name_;
  int p_ = 0, order_ = 1;
  SMat E_, F_;
  std::vector<Rat> H_;
};

WeightRep typical(const Rat& alpha, int p);
WeightRep atypical(int s, long k, int p);
// "V:a=1/2", "S:s=2,k=1"; throws InvalidWeightRep
WeightRep parse_weight_rep(const std::string& desc, int p);
// V_alpha for alpha in {p, 1/2, 3/2} and S_{s,k} for s in 1..p-1, k in {0, 1}
std::vector<WeightRep> weight_probe_family(int p);

WeightRep weight_tensor(const WeightRep& U, const WeightRep& V);
SMat weight_R(const WeightRep& U, const WeightRep& V);
SMat weight_braiding(const WeightRep& U, const WeightRep& V);  // tau R, U (x) V -> V (x) U
SMat weight_v(const WeightRep& U);
SMat weight_twist(const WeightRep& U);  // v^-1

CheckResult check_weight_balancing(const WeightRep& U, const WeightRep& V);
CheckResult check_weight_braiding_natural(const WeightRep& U, const WeightRep& V);
// scalar of c o c on v_0 (x) v_0; both modules must have v_0 as highest weight vector
CycNum double_braiding_highest(const WeightRep& U, const WeightRep& V);
CheckResult check_transparency_scalar(const Rat& alpha, const Rat& beta, int p);
std::vector<std::string> weight_transparency_scan(const std::vector<WeightRep>& candidates,
                                                  const std::vector<WeightRep>& probes);

// F_S(M) = Lambda (x) M, stored through its grade-0 component. The base is
// M rewritten in a K-eigenbasis; grade k carries H = 2pk + lift.
struct LocalModule {
  Rep input;           // M as given
  Rep base;            // M in a K-eigenbasis
  SMat to_input;       // columns: the eigenbasis in the coordinates of input
  SectorSet S;
  std::vector<Rat> lift;     // H at grade 0 per residue mod 2p
  std::vector<int> residue;  // K-residue of each base vector
  // E and F take grade k to grade k + j; keyed by j
  std::map<int, SMat> E_blocks, F_blocks;

  int p() const { return base.p(); }
  int dim() const { return base.dim(); }
  Rat H_at(int i, long k) const { return Rat(2L * p() * k) + lift[residue[i]]; }
};

LocalModule induce_FS(const Rep& M, const SectorSet& S);

// The graded pieces kmin..kmax of a local module as finite matrices. E and F
// leaving the window are dropped, so identities hold on interior grades.
struct Window {
  int p = 0, d = 0;
  long kmin = 0, kmax = 0;
  SMat E, F;
  std::vector<Rat> H;
  SMat shift_up, shift_down;  // rho(1_1), rho(1_-1)
  int index(long k, int i) const { return int((k - kmin) * d + i); }
  int size() const { return int(H.size()); }
};
Window materialise(const LocalModule& L, long kmin = -2, long kmax = 2);

// G_S on a materialised window: H-eigenvectors with eigenvalue in S, with
// E_Q = rho(1_{-kappa_+(a)}) E and F_Q = rho(1_{-kappa_-(a)}) F
Rep restrict_GS(const Window& W, const SectorSet& S);

Checks check_induced_relations(const LocalModule& L);
CheckResult check_locality(const LocalModule& L);
CheckResult check_round_trip_GF(const LocalModule& L);
CheckResult check_round_trip_FG(const LocalModule& L);
// both round-trip isomorphisms commute with F_S(f), G_S F_S(f) for f: M -> N
CheckResult check_naturality(const LocalModule& LM, const LocalModule& LN, const SMat& f);

// F_S(M (x)_t N), the image of F_S(M) (x)_Lambda F_S(N) under F_{M,N}
LocalModule lambda_tensor(const LocalModule& L1, const LocalModule& L2, const QuasiHopfData& d);
// F_{M,N} intertwines H, E, F and the Lambda actions, sector by sector
Checks check_FMN(const QuasiHopfData& d, const Rep& M, const Rep& N, const SectorSet& S);

// transport identities for the quasi-Hopf structure
CheckResult check_transport_assoc(const QuasiHopfData& d, const SectorSet& S);
CheckResult check_transport_braiding(const QuasiHopfData& d, const SectorSet& S);
CheckResult check_transport_odd_odd(const QuasiHopfData& d, const SectorSet& S);
CheckResult check_transport_twist(const QuasiHopfData& d, const SectorSet& S, const std::vector<Rep>& family);
Checks check_transport(const QuasiHopfData& d, const SectorSet& S);

// weight modules, induced modules and F_{M,N}; t selects the coproduct used for F_{M,N}
Checks unrolled_suite(int p, int t = 1);

}  // namespace qhopf
