#pragma once

#include <string>

#include "opsplit/algebra.hpp"

namespace opsplit {

// Two multiplications succ, prec whose sum circ is cached at construction.
class SplitAlgebra {
 public:
  SplitAlgebra(Tensor3 succ, Tensor3 prec);
  // Reads mults "succ" and "prec" (or the given names) from an algebra.
  static SplitAlgebra from_algebra(const Algebra& a, const std::string& succ = "succ",
                                   const std::string& prec = "prec");

  std::size_t dim() const { return dim_; }
  const Tensor3& succ() const { return succ_; }
  const Tensor3& prec() const { return prec_; }
  const Tensor3& circ() const { return circ_; }

  // Algebra with mults "succ", "prec" and "circ".
  Algebra as_algebra(std::vector<std::string> labels = {}) const;

  friend bool operator==(const SplitAlgebra& a, const SplitAlgebra& b) {
    return a.succ_ == b.succ_ && a.prec_ == b.prec_;
  }

 private:
  std::size_t dim_;
  Tensor3 succ_, prec_, circ_;
};

// B(e_i, e_j) = m(i, j).
struct BilinearForm {
  Matrix m;

  std::size_t dim() const { return m.rows(); }
  Scalar operator()(const Vec& u, const Vec& v) const;
  // B(e_i, w)
  Scalar at(std::size_t i, const Vec& w) const;
  bool symmetric() const { return m == m.transpose(); }
  bool antisymmetric() const { return m == -m.transpose(); }
  bool nondegenerate() const { return m.square() && rank(m) == m.rows(); }
};

// Admissibility of circ plus the representation condition on (L_succ, R_prec)M,
// or on the dual pair (L*_succ, R*_prec)M when `dual` is set.
Report check_type_m_pre(const SplitAlgebra& s, const RelationSet& rs, const TypeMatrix& m, bool dual);

// (Tu).(Tv) = T(alpha(Tu)v + beta(Tv)u) for T: V -> A, alpha/beta indexed by a basis of A.
Report check_o_operator(const Tensor3& mult, const MatFamily& alpha, const MatFamily& beta, const Matrix& t);

// Operator identity and the representation condition on (alpha,beta)M (dual: (alpha*,beta*)M).
Report classify_o_operator(const Tensor3& mult, const RelationSet& rs, const MatFamily& alpha,
                           const MatFamily& beta, const Matrix& t, const TypeMatrix& m, bool dual);

// u.v = alpha(Tu)v + beta(Tv)u on V.
Tensor3 source_product(const MatFamily& alpha, const MatFamily& beta, const Matrix& t);

// Whether source_product satisfies rs. Throws Error(NotAnOperator) if T is not an operator.
Report check_strong(const Tensor3& mult, const RelationSet& rs, const MatFamily& alpha, const MatFamily& beta,
                    const Matrix& t);

// x succ y = T(alpha(x) T^-1 y), x prec y = T(beta(y) T^-1 x). Throws Singular / NotAnOperator.
SplitAlgebra induce_splitting(const Tensor3& mult, const MatFamily& alpha, const MatFamily& beta,
                              const Matrix& t);

// u succ v = alpha(Tu)v, u prec v = beta(Tv)u on V.
SplitAlgebra source_splitting(const MatFamily& alpha, const MatFamily& beta, const Matrix& t);

// x * y = b2 R(x).y - a2 y.R(x) + a1 x.R(y) - b1 R(y).x
Tensor3 rota_baxter_product(const Tensor3& mult, const Matrix& r, const TypeMatrix& m);

// |M| R(x).R(y) = R(x * y); with `strong`, rota_baxter_product must also satisfy rs.
// Throws Error(SingularTypeMatrix) if |M| = 0.
Report check_type_m_rota_baxter(const Tensor3& mult, const Matrix& r, const TypeMatrix& m, bool strong,
                                const RelationSet& rs);

// x succ y = |M|^-1 (b2 x.y - a2 y.x), x prec y = |M|^-1 (a1 x.y - b1 y.x).
SplitAlgebra mults_from_M_inverse(const Tensor3& mult, const TypeMatrix& m);

// |M| B(x.y, z) = B(x, b1 y.z - a1 z.y) + B(y, a2 z.x - b2 x.z). Throws SingularTypeMatrix.
Report check_type_m_invariance(const Tensor3& mult, const BilinearForm& b, const TypeMatrix& m);

// Solves |M| B(x succ y, z) = B(y, a2 z.x - b2 x.z) and |M| B(x prec y, z) = B(x, b1 y.z - a1 z.y).
// The map z -> B(., z), i.e. the matrix of B itself, is an equivalence between the adjoint
// representation and (L*_succ, R*_prec)M; this is asserted before returning.
// Throws DegenerateForm, SingularTypeMatrix, NotInvariant, RelationViolated.
SplitAlgebra splitting_from_form(const Tensor3& mult, const RelationSet& rs, const BilinearForm& b,
                                 const TypeMatrix& m);

}  // namespace opsplit
