#include "opsplit/splitting.hpp"

#include <stdexcept>
#include <utility>

#include "opsplit/error.hpp"

namespace opsplit {

SplitAlgebra::SplitAlgebra(Tensor3 succ, Tensor3 prec) : succ_(std::move(succ)), prec_(std::move(prec)) {
  dim_ = mult_dim(succ_);
  if (!prec_.cubic(dim_)) throw Error(ErrorCode::DimMismatch, "succ and prec differ in dimension");
  circ_ = succ_ + prec_;
}

SplitAlgebra SplitAlgebra::from_algebra(const Algebra& a, const std::string& succ, const std::string& prec) {
  return SplitAlgebra(a.mult(succ), a.mult(prec));
}

Algebra SplitAlgebra::as_algebra(std::vector<std::string> labels) const {
  return Algebra(dim_, {{"succ", succ_}, {"prec", prec_}, {"circ", circ_}}, std::move(labels));
}

Scalar BilinearForm::operator()(const Vec& u, const Vec& v) const { return dot(u, m * v); }

Scalar BilinearForm::at(std::size_t i, const Vec& w) const {
  Scalar s;
  for (std::size_t q = 0; q < w.size(); ++q)
    if (!is_zero(w[q]) && !is_zero(m(i, q))) s += m(i, q) * w[q];
  return s;
}

Report check_type_m_pre(const SplitAlgebra& s, const RelationSet& rs, const TypeMatrix& m, bool dual) {
  const Tensor3 circ = s.succ() + s.prec();
  MatFamily alpha = left_mult(s.succ());
  MatFamily beta = right_mult(s.prec());
  if (dual) {
    alpha = dual_family(alpha);
    beta = dual_family(beta);
  }
  Report out = prefixed(check_relations(circ, rs), "admissible");
  out.absorb(prefixed(is_representation(circ, rs, combine_reps(alpha, beta, m)), "representation"),
             violation_cap());
  return out;
}

namespace {

void check_operator_shapes(const Tensor3& mult, const MatFamily& alpha, const MatFamily& beta, const Matrix& t) {
  const std::size_t n = mult_dim(mult);
  if (t.rows() != n) throw Error(ErrorCode::DimMismatch, "operator codomain differs from algebra dim");
  const std::size_t m = t.cols();
  if (alpha.size() != n || beta.size() != n) throw Error(ErrorCode::DimMismatch, "action family size");
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha[i].rows() != m || alpha[i].cols() != m || beta[i].rows() != m || beta[i].cols() != m) {
      throw Error(ErrorCode::DimMismatch, "action matrix shape");
    }
  }
}

// alpha(T f_a) for every basis vector f_a of V.
MatFamily pull_back(const MatFamily& fam, const Matrix& t) {
  MatFamily out;
  out.reserve(t.cols());
  for (std::size_t a = 0; a < t.cols(); ++a) out.push_back(apply_family(fam, t.column(a)));
  return out;
}

}  // namespace

Report check_o_operator(const Tensor3& mult, const MatFamily& alpha, const MatFamily& beta, const Matrix& t) {
  check_operator_shapes(mult, alpha, beta, t);
  const std::size_t m = t.cols();
  const MatFamily at = pull_back(alpha, t);
  const MatFamily bt = pull_back(beta, t);
  ReportBuilder rb;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Vec lhs = contract(mult, t.column(a), t.column(b));
      const Vec rhs = t * (at[a].column(b) + bt[b].column(a));
      rb.expect_equal("operator", {a, b}, lhs, rhs);
    }
  return rb.finish();
}

Report classify_o_operator(const Tensor3& mult, const RelationSet& rs, const MatFamily& alpha,
                           const MatFamily& beta, const Matrix& t, const TypeMatrix& m, bool dual) {
  Report out = check_o_operator(mult, alpha, beta, t);
  const Rep rep = dual ? combine_reps(dual_family(alpha), dual_family(beta), m) : combine_reps(alpha, beta, m);
  out.absorb(prefixed(is_representation(mult, rs, rep), "representation"), violation_cap());
  return out;
}

Tensor3 source_product(const MatFamily& alpha, const MatFamily& beta, const Matrix& t) {
  const std::size_t m = t.cols();
  const MatFamily at = pull_back(alpha, t);
  const MatFamily bt = pull_back(beta, t);
  Tensor3 out(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) out.set_fiber(a, b, at[a].column(b) + bt[b].column(a));
  return out;
}

Report check_strong(const Tensor3& mult, const RelationSet& rs, const MatFamily& alpha, const MatFamily& beta,
                    const Matrix& t) {
  if (!check_o_operator(mult, alpha, beta, t).ok) {
    throw Error(ErrorCode::NotAnOperator, "operator identity fails, strongness is undefined");
  }
  return check_relations(source_product(alpha, beta, t), rs);
}

SplitAlgebra induce_splitting(const Tensor3& mult, const MatFamily& alpha, const MatFamily& beta,
                              const Matrix& t) {
  check_operator_shapes(mult, alpha, beta, t);
  const Matrix tinv = invert(t);
  if (!check_o_operator(mult, alpha, beta, t).ok) {
    throw Error(ErrorCode::NotAnOperator, "cannot induce a splitting from a non-operator");
  }
  const std::size_t n = t.rows();
  Tensor3 succ(n), prec(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix sa = t * alpha[i] * tinv;  // y -> x_i succ y
    const Matrix sb = t * beta[i] * tinv;   // x -> x prec e_i
    for (std::size_t j = 0; j < n; ++j) {
      succ.set_fiber(i, j, sa.column(j));
      prec.set_fiber(j, i, sb.column(j));
    }
  }
  SplitAlgebra out(std::move(succ), std::move(prec));
  if (!(out.circ() == mult)) throw std::logic_error("induce_splitting: succ + prec differs from mult");
  return out;
}

SplitAlgebra source_splitting(const MatFamily& alpha, const MatFamily& beta, const Matrix& t) {
  const std::size_t m = t.cols();
  const MatFamily at = pull_back(alpha, t);
  const MatFamily bt = pull_back(beta, t);
  Tensor3 succ(m), prec(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      succ.set_fiber(a, b, at[a].column(b));
      prec.set_fiber(a, b, bt[b].column(a));
    }
  return SplitAlgebra(std::move(succ), std::move(prec));
}

Tensor3 rota_baxter_product(const Tensor3& mult, const Matrix& r, const TypeMatrix& m) {
  const std::size_t n = mult_dim(mult);
  if (r.rows() != n || r.cols() != n) throw Error(ErrorCode::DimMismatch, "Rota-Baxter operator shape");
  Tensor3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec x = unit_vec(n, i), y = unit_vec(n, j);
      const Vec rx = r.column(i), ry = r.column(j);
      Vec v(n);
      axpy(v, m.b2, contract(mult, rx, y));
      axpy(v, -m.a2, contract(mult, y, rx));
      axpy(v, m.a1, contract(mult, x, ry));
      axpy(v, -m.b1, contract(mult, ry, x));
      out.set_fiber(i, j, v);
    }
  return out;
}

Report check_type_m_rota_baxter(const Tensor3& mult, const Matrix& r, const TypeMatrix& m, bool strong,
                                const RelationSet& rs) {
  const Scalar det = m.det();
  if (is_zero(det)) throw Error(ErrorCode::SingularTypeMatrix, "Rota-Baxter check needs |M| != 0");
  const std::size_t n = mult_dim(mult);
  const Tensor3 star = rota_baxter_product(mult, r, m);
  ReportBuilder rb;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec lhs = det * contract(mult, r.column(i), r.column(j));
      rb.expect_equal("rota-baxter", {i, j}, lhs, r * star.fiber(i, j));
    }
  Report out = rb.finish();
  if (strong) out.absorb(prefixed(check_relations(star, rs), "strong"), violation_cap());
  return out;
}

SplitAlgebra mults_from_M_inverse(const Tensor3& mult, const TypeMatrix& m) {
  const Scalar det = m.det();
  if (is_zero(det)) throw Error(ErrorCode::SingularTypeMatrix, "splitting from M^-1 needs |M| != 0");
  const Tensor3 op = opposite(mult);
  const Scalar inv = 1 / det;
  Tensor3 succ = (inv * m.b2) * mult - (inv * m.a2) * op;
  Tensor3 prec = (inv * m.a1) * mult - (inv * m.b1) * op;
  SplitAlgebra out(std::move(succ), std::move(prec));
  const Rep combined = combine_reps(left_mult(out.succ()), right_mult(out.prec()), m);
  if (!(combined.left == left_mult(mult)) || !(combined.right == right_mult(mult))) {
    throw std::logic_error("mults_from_M_inverse: (L_succ, R_prec)M differs from the adjoint pair");
  }
  return out;
}

Report check_type_m_invariance(const Tensor3& mult, const BilinearForm& b, const TypeMatrix& m) {
  const Scalar det = m.det();
  if (is_zero(det)) throw Error(ErrorCode::SingularTypeMatrix, "invariance needs |M| != 0");
  const std::size_t n = mult_dim(mult);
  if (b.m.rows() != n || b.m.cols() != n) throw Error(ErrorCode::DimMismatch, "form shape");
  ReportBuilder rb;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Vec xy = mult.fiber(x, y);
        const Vec w1 = m.b1 * mult.fiber(y, z) - m.a1 * mult.fiber(z, y);
        const Vec w2 = m.a2 * mult.fiber(z, x) - m.b2 * mult.fiber(x, z);
        const Scalar bxy_z = b(xy, unit_vec(n, z));
        rb.expect_zero("invariance", {x, y, z}, det * bxy_z - b.at(x, w1) - b.at(y, w2));
      }
  return rb.finish();
}

SplitAlgebra splitting_from_form(const Tensor3& mult, const RelationSet& rs, const BilinearForm& b,
                                 const TypeMatrix& m) {
  const std::size_t n = mult_dim(mult);
  if (b.m.rows() != n || b.m.cols() != n) throw Error(ErrorCode::DimMismatch, "form shape");
  if (!b.nondegenerate()) throw Error(ErrorCode::DegenerateForm, "form must be nondegenerate");
  const Scalar det = m.det();
  if (is_zero(det)) throw Error(ErrorCode::SingularTypeMatrix, "splitting from a form needs |M| != 0");
  if (!check_relations(mult, rs).ok) throw Error(ErrorCode::RelationViolated, "multiplication violates rs");
  if (!check_type_m_invariance(mult, b, m).ok) throw Error(ErrorCode::NotInvariant, "form is not type-M invariant");

  // B(w, z) = f(z) for all z  <=>  B^T w = f.
  const Matrix solve = invert(b.m.transpose());
  const Scalar inv = 1 / det;
  Tensor3 succ(n), prec(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vec fs(n), fp(n);
      for (std::size_t z = 0; z < n; ++z) {
        const Vec ws = m.a2 * mult.fiber(z, x) - m.b2 * mult.fiber(x, z);
        const Vec wp = m.b1 * mult.fiber(y, z) - m.a1 * mult.fiber(z, y);
        fs[z] = inv * b.at(y, ws);
        fp[z] = inv * b.at(x, wp);
      }
      succ.set_fiber(x, y, solve * fs);
      prec.set_fiber(x, y, solve * fp);
    }
  SplitAlgebra out(std::move(succ), std::move(prec));
  if (!(out.circ() == mult)) throw std::logic_error("splitting_from_form: succ + prec differs from mult");
  const Rep dual = combine_reps(dual_family(left_mult(out.succ())), dual_family(right_mult(out.prec())), m);
  if (!rep_equivalent(adjoint_rep(mult), dual, b.m)) {
    throw std::logic_error("splitting_from_form: form matrix is not an equivalence of representations");
  }
  return out;
}

}  // namespace opsplit
