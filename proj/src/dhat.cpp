#include "qhopf/qhopf.hpp"

namespace qhopf {

Elem x_element(const QuasiHopfData& d) {
  const AlgPtr& A = d.A;
  Elem one1 = Elem::one(A);
  Elem y = d.S->on_leg(d.Phi, 2) * tensor({one1, d.beta, one1});
  return merge_legs(y, 1, 2);
}

Elem w_element(const QuasiHopfData& d, const Elem& M) {
  const AlgPtr& A = d.A;
  Elem one1 = Elem::one(A);
  Elem left = tensor({one1, d.alpha, one1, d.alpha}) * leg_embed(d.PhiInv, {1, 2, 3}, 4);
  Elem right = leg_embed(d.Phi, {1, 2, 3}, 4) * d.Delta->on_leg(d.PhiInv, 2);
  return (left * leg_embed(M, {1, 2}, 4)) * right;
}

Elem dhat(const QuasiHopfData& d, const Elem& M) {
  Elem X = x_element(d);
  Elem dx = d.Delta->on_leg(d.Delta->on_leg(X, 1), 0);  // X1' X1'' X2' X2''
  Elem Y = w_element(d, M) * dx;
  Elem Z = d.S->on_leg(d.S->on_leg(Y, 2), 0);
  // legs (S(Y1)Y2, S(Y3)Y4), then swap
  Elem merged = merge_legs(merge_legs(Z, 2, 2), 0, 2);
  return flip_legs(merged);
}

Elem dhat_closed_form(const QuasiHopfData& d, const Elem& M) {
  const AlgPtr& A = d.A;
  Elem sm = d.S->on_leg(flip_legs(M), 0);  // S(M2) (x) M1
  Elem e0 = idem_e0(A), e1 = idem_e1(A), one1 = Elem::one(A);
  Elem part0 = tensor(one1, e0) * sm;
  Elem part1 = tensor(gen_K(A, -d.t), e1) * sm * tensor(gen_K(A, d.t), one1);
  return part0 + part1;
}

int copairing_rank(const Elem& D) {
  const AlgPtr& A = D.alg();
  std::vector<SparseVec> rows(A->dim());
  for (auto& [key, c] : D.terms()) rows[D.leg(key, 0)].emplace_back(D.leg(key, 1), c);
  RowReducer rr(A->dim());
  for (auto& r : rows) {
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    rr.add_row(std::move(r));
  }
  return rr.rank();
}

int f_family_rank(const AlgPtr& A) {
  int p = A->p(), tp = 2 * p;
  Elem E = gen_E(A), F = gen_F(A);
  std::vector<Elem> en;
  for (int a = 0; a < tp; ++a) en.push_back(idempotent_e(A, a));
  RowReducer rr(A->dim());
  for (int m = 0; m < p; ++m)
    for (int n = 0; n < p; ++n) {
      Elem fe = F.pow(m) * E.pow(n);
      for (int i = 0; i < tp; ++i) {
        Elem f = en[((i - m) % tp + tp) % tp] * fe;
        SparseVec row;
        for (auto& [k, c] : f.terms()) row.emplace_back(int(k), c);
        rr.add_row(std::move(row));
      }
    }
  return rr.rank();
}

CheckResult check_x_element(const QuasiHopfData& d) {
  return timed("X = 1 (x) 1 + e0 (x) e1 (K^-t - 1)", [&] {
    const AlgPtr& A = d.A;
    Elem want = Elem::one(A, 2) + tensor(idem_e0(A), idem_e1(A) * (gen_K(A, -d.t) - Elem::one(A)));
    Elem X = x_element(d);
    return Outcome::check(X == want, "X - expected = " + clip((X - want).str()));
  });
}

CheckResult check_dhat_closed_form(const QuasiHopfData& d, const Elem& M, Elem* out) {
  return timed("D-hat from its definition equals the closed form", [&] {
    Elem D = dhat(d, M);
    if (out) *out = D;
    Elem closed = dhat_closed_form(d, M);
    if (D != closed) return Outcome::fail("difference " + clip((D - closed).str()));
    return Outcome::ok(std::to_string(D.size()) + " terms");
  });
}

CheckResult check_factorisable(const QuasiHopfData& d, const Elem& D) {
  auto t0 = std::chrono::steady_clock::now();
  int dim = d.A->dim();
  CheckResult r;
  try {
    int rank = copairing_rank(D);
    r.name = "factorisable: rank " + std::to_string(rank) + "/" + std::to_string(dim);
    r.status = rank == dim ? Status::pass : Status::fail;
    if (rank != dim) r.witness = "kernel dimension " + std::to_string(dim - rank);
  } catch (const std::exception& e) {
    r.name = "factorisable: rank ?/" + std::to_string(dim);
    r.status = Status::fail;
    r.witness = std::string("exception: ") + e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace qhopf
