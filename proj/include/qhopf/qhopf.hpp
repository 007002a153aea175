#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "qhopf/pbw.hpp"
#include "qhopf/report.hpp"

namespace qhopf {

struct InvalidParameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// zeta is stored as an exponent k with zeta = i^k
CycNum zeta_value(int zeta_k, int order);
std::string zeta_name(int zeta_k);
int parse_zeta(const std::string& s);  // "1", "-1", "i", "-i"; throws InvalidParameters

struct QuasiHopfData {
  AlgPtr A;
  int p = 0, t = 1, zeta_k = 0;
  std::shared_ptr<const AlgMap> Delta;
  std::shared_ptr<const AntiMap> S;
  Elem alpha, beta;
  Elem Phi, PhiInv;  // rank 3
  Elem R, RInv;      // rank 2
  bool has_ribbon = false;
  Elem v, vInv;

  Elem coproduct(const Elem& x) const { return (*Delta)(x); }
  Elem antipode(const Elem& x) const { return (*S)(x); }
  int order() const { return A->order(); }
};

using QhPtr = std::shared_ptr<const QuasiHopfData>;

// Throws InvalidParameters for even t, p outside 2..12 or zeta_k outside 0..3.
QhPtr build(int p, int t, int zeta_k = 0);

// the undeformed structure of the restricted quantum group (no R-matrix)
AlgMap legacy_coproduct(const AlgPtr& A);
AntiMap legacy_antipode(const AlgPtr& A);

// closed forms and derived elements
Elem r_matrix(const AlgPtr& A, int t);
Elem r_matrix_sectors(const AlgPtr& A, int t);  // four-sector rewriting over e0/e1
Elem ribbon_element(const AlgPtr& A);
Elem coassociator(const AlgPtr& A, int t);
Elem monodromy(const QuasiHopfData& d);  // flip(R) R by multiplication
Elem monodromy_closed_form(const AlgPtr& A, int t);
Elem monodromy_idempotent_form(const AlgPtr& A, int t);
// graded solve for the inverse of an element of span{E^n K^s (x) F^n K^r}
std::optional<Elem> invert_borel_pair(const Elem& R);

// factorisability
Elem x_element(const QuasiHopfData& d);  // sum Phi1 (x) Phi2 beta S(Phi3)
Elem w_element(const QuasiHopfData& d, const Elem& M);
Elem dhat(const QuasiHopfData& d, const Elem& M);  // from the definition
Elem dhat_closed_form(const QuasiHopfData& d, const Elem& M);
int copairing_rank(const Elem& D);
int f_family_rank(const AlgPtr& A);

// element-level checks
CheckResult check_coproduct_relations(const QuasiHopfData& d);
CheckResult check_quasi_coassociativity(const QuasiHopfData& d);
CheckResult check_pentagon(const QuasiHopfData& d);
CheckResult check_counit(const QuasiHopfData& d);
CheckResult check_antipode_basis(const QuasiHopfData& d);
CheckResult check_antipode_phi(const QuasiHopfData& d);
CheckResult check_quasitriangularity(const QuasiHopfData& d);
CheckResult check_monodromy_closed_form(const QuasiHopfData& d, const Elem& M);
CheckResult check_ribbon(const QuasiHopfData& d, const Elem& M);
CheckResult check_x_element(const QuasiHopfData& d);
CheckResult check_dhat_closed_form(const QuasiHopfData& d, const Elem& M, Elem* out = nullptr);
CheckResult check_factorisable(const QuasiHopfData& d, const Elem& D);
CheckResult check_f_family(const QuasiHopfData& d);

struct QhopfSuiteOptions {
  bool monodromy = true;
  bool ribbon = true;
  bool factorisable = true;
};

// the full element-level suite; checks that do not apply to a zeta-modified
// structure are skipped
Checks qhopf_suite(const QuasiHopfData& d, const QhopfSuiteOptions& opt = {});

}  // namespace qhopf
