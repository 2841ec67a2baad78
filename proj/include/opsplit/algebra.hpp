#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "opsplit/linalg.hpp"
#include "opsplit/report.hpp"

namespace opsplit {

// A finite-dimensional algebra with one or more named multiplications.
// Tensor convention: e_i * e_j = sum_k t(i,j,k) e_k.
class Algebra {
 public:
  Algebra(std::size_t dim, std::map<std::string, Tensor3> mults, std::vector<std::string> labels = {});
  Algebra(std::string name, Tensor3 mult, std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::map<std::string, Tensor3>& mults() const { return mults_; }
  bool has(const std::string& name) const { return mults_.count(name) != 0; }
  const Tensor3& mult(const std::string& name) const;  // throws Error(UnknownMult)

 private:
  std::size_t dim_;
  std::map<std::string, Tensor3> mults_;
  std::vector<std::string> labels_;
};

std::size_t mult_dim(const Tensor3& t);  // throws Error(DimMismatch) unless cubic

Vec multiply(const Tensor3& t, const Vec& u, const Vec& v);
Vec multiply(const Algebra& a, const std::string& mult, const Vec& u, const Vec& v);

// The flip t(i,j,k) -> t(j,i,k), i.e. x*'y = y*x.
Tensor3 opposite(const Tensor3& t);

// Structure constants after the change of basis f_i = sum_r g(r,i) e_r.
Tensor3 change_basis(const Tensor3& t, const Matrix& g);

// Quadratic relations: sum_n k[n] * term_n(x,y,z) = 0 with the twelve terms
//   (x.y).z (x.z).y x.(y.z) x.(z.y) (y.z).x (y.x).z
//   y.(z.x) y.(x.z) (z.x).y (z.y).x z.(x.y) z.(y.x)
// plus an optional degree-one symmetry constraint.
enum class Symmetry { None, Symmetric, Antisymmetric };

struct RelationSet {
  std::vector<std::array<Scalar, 12>> relations;
  Symmetry symmetry = Symmetry::None;
};

// x.(y.z) = (x.y).z + y.(x.z), stored as k1 = 1, k3 = -1, k8 = 1.
const RelationSet& leibniz_relations();
// Antisymmetry plus (x.y).z + (y.z).x + (z.x).y = 0, stored as k1 = k5 = k9 = 1.
const RelationSet& lie_relations();

Report check_relations(const Tensor3& t, const RelationSet& rs);
Report check_relations(const Algebra& a, const std::string& mult, const RelationSet& rs);

// Per-basis matrices: family[i] is the operator attached to e_i.
using MatFamily = std::vector<Matrix>;

// L(e_i)(k,j) = t(i,j,k) and R(e_i)(k,j) = t(j,i,k).
MatFamily left_mult(const Tensor3& t);
MatFamily right_mult(const Tensor3& t);

// sum_i x_i family[i]
Matrix apply_family(const MatFamily& f, const Vec& x);
MatFamily family_add(const MatFamily& a, const MatFamily& b);
MatFamily family_scale(const Scalar& s, const MatFamily& a);
MatFamily zero_family(std::size_t count, std::size_t vdim);
// Each matrix m -> -m^T.
MatFamily dual_family(const MatFamily& f);

struct Rep {
  std::size_t vdim = 0;
  MatFamily left;
  MatFamily right;
};

Rep adjoint_rep(const Tensor3& t);
Rep zero_rep(std::size_t dim, std::size_t vdim);
Rep dual_rep(const Rep& r);

// The 2x2 matrix [[a1,b1],[a2,b2]] acting on pairs by (f,g)M = (a1 f + a2 g, b1 f + b2 g).
struct TypeMatrix {
  Scalar a1, b1, a2, b2;

  Scalar det() const { return a1 * b2 - a2 * b1; }
  TypeMatrix inverse() const;  // throws Error(SingularTypeMatrix)
  friend TypeMatrix operator*(const TypeMatrix& m, const TypeMatrix& n);
  friend bool operator==(const TypeMatrix& m, const TypeMatrix& n);

  static TypeMatrix identity() { return {1, 0, 0, 1}; }
};

// Named matrices: L = [[1,-1],[0,-1]], a = [[1,-1],[-1,0]], b = [[1,0],[-1,1]].
TypeMatrix type_L();
TypeMatrix type_a();
TypeMatrix type_b();

Rep combine_reps(const MatFamily& alpha, const MatFamily& beta, const TypeMatrix& m);

// (x+u).(y+v) = x.y + l(x)v + r(y)u on A (+) V, with A first.
Tensor3 semidirect_product(const Tensor3& t, const Rep& rep);
Algebra semidirect_product(const Algebra& a, const std::string& mult, const Rep& rep);

Report is_representation(const Tensor3& t, const RelationSet& rs, const Rep& rep);
Report is_representation(const Algebra& a, const std::string& mult, const RelationSet& rs, const Rep& rep);

// phi: V1 -> V2 invertible with phi l1(x) = l2(x) phi and phi r1(x) = r2(x) phi.
bool rep_equivalent(const Rep& r1, const Rep& r2, const Matrix& phi);

}  // namespace opsplit
