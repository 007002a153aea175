#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhopf/linalg.hpp"
#include "qhopf/pbw.hpp"
#include "qhopf/qhopf.hpp"
#include "qhopf/report.hpp"

namespace qhopf {

struct InvalidRep : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A finite-dimensional module over the 2p^3-dimensional algebra, given by the
// matrices of E, F, K. The defining relations are checked on construction.
class Rep {
 public:
  static Rep make(std::string name, int p, SMat E, SMat F, SMat K);

  const std::string& name() const { return name_; }
  int p() const { return p_; }
  int dim() const { return E_.rows(); }
  int order() const { return 4 * p_; }
  const SMat& E() const { return E_; }
  const SMat& F() const { return F_; }
  const SMat& K() const { return K_; }

  // matrix of the PBW basis element with the given index
  const SMat& word(int idx) const;
  // action of a rank-1 element
  SMat act(const Elem& x) const;

 private:
  std::string name_;
  int p_ = 0;
  SMat E_, F_, K_;
  struct Words;
  std::shared_ptr<Words> words_;
};

// action of a rank-k element on the tensor product of k modules
SMat act(const Elem& x, const std::vector<const Rep*>& legs);

Rep module_O(int p, int s, int sign, const CycNum& l1, const CycNum& l2);
Rep one_dim(int p, int sign);
inline Rep trivial_rep(int p) { return one_dim(p, +1); }
Rep regular_rep(int p);
// "O+:s=1:l=1,1", "X-:1", "X+:1", "triv", "reg"; throws InvalidRep
Rep parse_rep(const std::string& desc, int p);
// trivial, X-, and O^{+-}_s(1; l) for s in 1..p-1 and l in {[1:0], [0:1], [1:1]}
std::vector<Rep> test_family(int p);

Rep tensor(const Rep& M, const Rep& N, const AlgMap& Delta);
Rep tensor_t(const Rep& M, const Rep& N, const QuasiHopfData& d);
Rep tensor_legacy(const Rep& M, const Rep& N);
// a.f = f(S(a) -)
Rep dual(const Rep& M, const AntiMap& S);

// multiplicity of each K-eigenvalue q^n, n in Z_2p
std::vector<int> k_character(const Rep& M);
bool is_intertwiner(const SMat& T, const Rep& M, const Rep& N);
std::vector<SMat> hom_space(const Rep& M, const Rep& N);

enum class Verdict { yes, no, undetermined };
std::string verdict_name(Verdict v);
struct IsoResult {
  Verdict verdict = Verdict::undetermined;
  std::optional<SMat> witness;  // invertible intertwiner when yes
  std::string reason;
};
// yes only with an invertible intertwiner, no only with an exact certificate
IsoResult is_isomorphic(const Rep& M, const Rep& N, unsigned seed = 1);

// structure maps of the module category
SMat assoc(const QuasiHopfData& d, const Rep& M, const Rep& N, const Rep& P);  // M(NP) -> (MN)P
SMat assoc_inv(const QuasiHopfData& d, const Rep& M, const Rep& N, const Rep& P);
SMat braid(const QuasiHopfData& d, const Rep& M, const Rep& N);  // tau R
SMat twist(const QuasiHopfData& d, const Rep& M);                // v^-1
Rep dual_t(const QuasiHopfData& d, const Rep& M);
SMat ev(const QuasiHopfData& d, const Rep& M);    // M* (x) M -> C
SMat coev(const QuasiHopfData& d, const Rep& M);  // C -> M (x) M*

CheckResult check_pentagon_on(const QuasiHopfData& d, const Rep& M, const Rep& N, const Rep& P, const Rep& Q);
CheckResult check_hexagons_on(const QuasiHopfData& d, const Rep& M, const Rep& N, const Rep& P);
CheckResult check_balancing_on(const QuasiHopfData& d, const Rep& M, const Rep& N);
CheckResult check_zigzag_on(const QuasiHopfData& d, const Rep& M);
CheckResult check_ribbon_dual_on(const QuasiHopfData& d, const Rep& M);
Checks check_coherence_on(const QuasiHopfData& d, const Rep& M, const Rep& N, const Rep& P, const Rep& Q);

struct CoherenceSweep {
  long tuples = 0;
  long failures = 0;
  std::string first_failure;
};
// every single, pair, triple and quadruple drawn from the family
CoherenceSweep coherence_sweep(const QuasiHopfData& d, const std::vector<Rep>& family, int jobs = 1);

// names of the candidates X with M_t acting as the identity on X (x) P for every probe P
std::vector<std::string> transparency_scan(const QuasiHopfData& d, const std::vector<Rep>& candidates,
                                           const std::vector<Rep>& probes);

}  // namespace qhopf
