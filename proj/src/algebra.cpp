#include "opsplit/algebra.hpp"

#include <string>
#include <utility>

#include "opsplit/error.hpp"

namespace opsplit {

Algebra::Algebra(std::size_t dim, std::map<std::string, Tensor3> mults, std::vector<std::string> labels)
    : dim_(dim), mults_(std::move(mults)), labels_(std::move(labels)) {
  if (mults_.empty()) throw Error(ErrorCode::BadShape, "an algebra needs at least one multiplication");
  for (const auto& [name, t] : mults_) {
    if (!t.cubic(dim_)) throw Error(ErrorCode::DimMismatch, "multiplication '" + name + "' is not dim^3");
  }
  if (!labels_.empty() && labels_.size() != dim_) {
    throw Error(ErrorCode::DimMismatch, "basis label count differs from dim");
  }
}

Algebra::Algebra(std::string name, Tensor3 mult, std::vector<std::string> labels)
    : Algebra(mult.d0(), std::map<std::string, Tensor3>{{std::move(name), std::move(mult)}}, std::move(labels)) {}

const Tensor3& Algebra::mult(const std::string& name) const {
  auto it = mults_.find(name);
  if (it == mults_.end()) throw Error(ErrorCode::UnknownMult, "no multiplication named '" + name + "'");
  return it->second;
}

std::size_t mult_dim(const Tensor3& t) {
  if (!t.cubic(t.d0())) throw Error(ErrorCode::DimMismatch, "multiplication tensor is not cubic");
  return t.d0();
}

Vec multiply(const Tensor3& t, const Vec& u, const Vec& v) { return contract(t, u, v); }

Vec multiply(const Algebra& a, const std::string& mult, const Vec& u, const Vec& v) {
  return contract(a.mult(mult), u, v);
}

Tensor3 opposite(const Tensor3& t) {
  const std::size_t n = mult_dim(t);
  Tensor3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = t(j, i, k);
  return out;
}

Tensor3 change_basis(const Tensor3& t, const Matrix& g) {
  const std::size_t n = mult_dim(t);
  if (g.rows() != n || g.cols() != n) throw Error(ErrorCode::DimMismatch, "change_basis");
  const Matrix ginv = invert(g);
  std::vector<Vec> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = g.column(i);
  Tensor3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set_fiber(i, j, ginv * contract(t, cols[i], cols[j]));
  return out;
}

namespace {

std::array<Scalar, 12> coeffs(std::initializer_list<std::pair<int, int>> nonzero) {
  std::array<Scalar, 12> k;
  for (auto [pos, val] : nonzero) k[pos - 1] = val;
  return k;
}

// Nested products of basis elements, computed once per check.
struct NestedProducts {
  std::size_t n;
  std::vector<Vec> left;   // (e_i e_j) e_l
  std::vector<Vec> right;  // e_i (e_j e_l)

  explicit NestedProducts(const Tensor3& t) : n(t.d0()), left(n * n * n, Vec(n)), right(n * n * n, Vec(n)) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& c = t(i, j, k);
          if (is_zero(c)) continue;
          // (e_i e_j) e_l gets c * e_k e_l
          for (std::size_t l = 0; l < n; ++l) {
            Vec& dst = left[idx(i, j, l)];
            for (std::size_t m = 0; m < n; ++m)
              if (!is_zero(t(k, l, m))) dst[m] += c * t(k, l, m);
          }
          // e_l (e_i e_j) gets c * e_l e_k
          for (std::size_t l = 0; l < n; ++l) {
            Vec& dst = right[idx(l, i, j)];
            for (std::size_t m = 0; m < n; ++m)
              if (!is_zero(t(l, k, m))) dst[m] += c * t(l, k, m);
          }
        }
  }

  std::size_t idx(std::size_t a, std::size_t b, std::size_t c) const { return (a * n + b) * n + c; }
  const Vec& l(std::size_t a, std::size_t b, std::size_t c) const { return left[idx(a, b, c)]; }
  const Vec& r(std::size_t a, std::size_t b, std::size_t c) const { return right[idx(a, b, c)]; }
};

}  // namespace

const RelationSet& leibniz_relations() {
  static const RelationSet rs{{coeffs({{1, 1}, {3, -1}, {8, 1}})}, Symmetry::None};
  return rs;
}

const RelationSet& lie_relations() {
  static const RelationSet rs{{coeffs({{1, 1}, {5, 1}, {9, 1}})}, Symmetry::Antisymmetric};
  return rs;
}

Report check_relations(const Tensor3& t, const RelationSet& rs) {
  const std::size_t n = mult_dim(t);
  ReportBuilder rb;
  if (rs.symmetry != Symmetry::None) {
    const bool anti = rs.symmetry == Symmetry::Antisymmetric;
    const char* name = anti ? "antisymmetry" : "symmetry";
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Vec res = t.fiber(i, j);
        Vec other = t.fiber(j, i);
        res = anti ? res + other : res - other;
        rb.expect_zero(name, {i, j}, res);
      }
  }
  if (rs.relations.empty()) return rb.finish();
  const NestedProducts np(t);
  for (std::size_t r = 0; r < rs.relations.size(); ++r) {
    const auto& k = rs.relations[r];
    const std::string name = "relation" + std::to_string(r);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const Vec* terms[12] = {&np.l(x, y, z), &np.l(x, z, y), &np.r(x, y, z), &np.r(x, z, y),
                                  &np.l(y, z, x), &np.l(y, x, z), &np.r(y, z, x), &np.r(y, x, z),
                                  &np.l(z, x, y), &np.l(z, y, x), &np.r(z, x, y), &np.r(z, y, x)};
          Vec res(n);
          for (std::size_t m = 0; m < 12; ++m) axpy(res, k[m], *terms[m]);
          rb.expect_zero(name, {x, y, z}, res);
        }
  }
  return rb.finish();
}

Report check_relations(const Algebra& a, const std::string& mult, const RelationSet& rs) {
  return check_relations(a.mult(mult), rs);
}

MatFamily left_mult(const Tensor3& t) {
  const std::size_t n = mult_dim(t);
  MatFamily out(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i](k, j) = t(i, j, k);
  return out;
}

MatFamily right_mult(const Tensor3& t) {
  const std::size_t n = mult_dim(t);
  MatFamily out(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i](k, j) = t(j, i, k);
  return out;
}

Matrix apply_family(const MatFamily& f, const Vec& x) {
  if (f.size() != x.size()) throw Error(ErrorCode::DimMismatch, "apply_family");
  if (f.empty()) return Matrix();
  Matrix out(f[0].rows(), f[0].cols());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!is_zero(x[i])) out += x[i] * f[i];
  }
  return out;
}

MatFamily family_add(const MatFamily& a, const MatFamily& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimMismatch, "family_add");
  MatFamily out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

MatFamily family_scale(const Scalar& s, const MatFamily& a) {
  MatFamily out;
  out.reserve(a.size());
  for (const auto& m : a) out.push_back(s * m);
  return out;
}

MatFamily zero_family(std::size_t count, std::size_t vdim) { return MatFamily(count, Matrix(vdim, vdim)); }

MatFamily dual_family(const MatFamily& f) {
  MatFamily out;
  out.reserve(f.size());
  for (const auto& m : f) out.push_back(-m.transpose());
  return out;
}

Rep adjoint_rep(const Tensor3& t) { return Rep{mult_dim(t), left_mult(t), right_mult(t)}; }

Rep zero_rep(std::size_t dim, std::size_t vdim) {
  return Rep{vdim, zero_family(dim, vdim), zero_family(dim, vdim)};
}

Rep dual_rep(const Rep& r) { return Rep{r.vdim, dual_family(r.left), dual_family(r.right)}; }

TypeMatrix TypeMatrix::inverse() const {
  const Scalar d = det();
  if (is_zero(d)) throw Error(ErrorCode::SingularTypeMatrix, "type matrix has zero determinant");
  return TypeMatrix{b2 / d, -b1 / d, -a2 / d, a1 / d};
}

TypeMatrix operator*(const TypeMatrix& m, const TypeMatrix& n) {
  return TypeMatrix{m.a1 * n.a1 + m.b1 * n.a2, m.a1 * n.b1 + m.b1 * n.b2, m.a2 * n.a1 + m.b2 * n.a2,
                    m.a2 * n.b1 + m.b2 * n.b2};
}

bool operator==(const TypeMatrix& m, const TypeMatrix& n) {
  return m.a1 == n.a1 && m.b1 == n.b1 && m.a2 == n.a2 && m.b2 == n.b2;
}

TypeMatrix type_L() { return {1, -1, 0, -1}; }
TypeMatrix type_a() { return {1, -1, -1, 0}; }
TypeMatrix type_b() { return {1, 0, -1, 1}; }

Rep combine_reps(const MatFamily& alpha, const MatFamily& beta, const TypeMatrix& m) {
  if (alpha.size() != beta.size()) throw Error(ErrorCode::DimMismatch, "combine_reps family sizes");
  const std::size_t vdim = alpha.empty() ? 0 : alpha[0].rows();
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i].rows() != vdim || alpha[i].cols() != vdim || beta[i].rows() != vdim || beta[i].cols() != vdim) {
      throw Error(ErrorCode::DimMismatch, "combine_reps matrix shapes");
    }
  }
  return Rep{vdim, family_add(family_scale(m.a1, alpha), family_scale(m.a2, beta)),
             family_add(family_scale(m.b1, alpha), family_scale(m.b2, beta))};
}

Tensor3 semidirect_product(const Tensor3& t, const Rep& rep) {
  const std::size_t n = mult_dim(t);
  const std::size_t m = rep.vdim;
  if (rep.left.size() != n || rep.right.size() != n) throw Error(ErrorCode::DimMismatch, "rep family size");
  for (std::size_t i = 0; i < n; ++i) {
    if (rep.left[i].rows() != m || rep.left[i].cols() != m || rep.right[i].rows() != m ||
        rep.right[i].cols() != m) {
      throw Error(ErrorCode::DimMismatch, "rep matrix shape");
    }
  }
  Tensor3 out(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = t(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        out(i, n + a, n + b) = rep.left[i](b, a);
        out(n + a, i, n + b) = rep.right[i](b, a);
      }
  return out;
}

Algebra semidirect_product(const Algebra& a, const std::string& mult, const Rep& rep) {
  return Algebra(mult, semidirect_product(a.mult(mult), rep));
}

Report is_representation(const Tensor3& t, const RelationSet& rs, const Rep& rep) {
  return check_relations(semidirect_product(t, rep), rs);
}

Report is_representation(const Algebra& a, const std::string& mult, const RelationSet& rs, const Rep& rep) {
  return is_representation(a.mult(mult), rs, rep);
}

bool rep_equivalent(const Rep& r1, const Rep& r2, const Matrix& phi) {
  if (phi.rows() != r2.vdim || phi.cols() != r1.vdim || r1.vdim != r2.vdim) return false;
  if (r1.left.size() != r2.left.size() || r1.right.size() != r2.right.size()) return false;
  if (rank(phi) != phi.rows()) return false;
  for (std::size_t i = 0; i < r1.left.size(); ++i) {
    if (!(phi * r1.left[i] == r2.left[i] * phi)) return false;
    if (!(phi * r1.right[i] == r2.right[i] * phi)) return false;
  }
  return true;
}

}  // namespace opsplit
