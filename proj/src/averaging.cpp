#include "opsplit/averaging.hpp"

#include <stdexcept>
#include <string>

#include "opsplit/error.hpp"

namespace opsplit {

namespace {

void require_lie(const Tensor3& lie) {
  if (!check_relations(lie, lie_relations()).ok) throw Error(ErrorCode::NotLie, "bracket is not a Lie bracket");
}

void require_square(const Matrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::DimMismatch, what);
}

}  // namespace

Report check_averaging(const Tensor3& lie, const Matrix& p) {
  const std::size_t n = mult_dim(lie);
  require_square(p, n, "averaging operator shape");
  require_lie(lie);
  ReportBuilder rb;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vec px = p.column(x);
      rb.expect_equal("averaging", {x, y}, contract(lie, px, p.column(y)), p * contract(lie, px, unit_vec(n, y)));
    }
  return rb.finish();
}

Tensor3 induced_leibniz(const Tensor3& lie, const Matrix& p) {
  const std::size_t n = mult_dim(lie);
  require_square(p, n, "averaging operator shape");
  Tensor3 out(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) out.set_fiber(x, y, contract(lie, p.column(x), unit_vec(n, y)));
  return out;
}

Report check_admissible(const Tensor3& lie, const Matrix& p, const Matrix& q) {
  const std::size_t n = mult_dim(lie);
  require_square(q, n, "admissible partner shape");
  if (!check_averaging(lie, p).ok) throw Error(ErrorCode::NotAveraging, "P is not an averaging operator");
  ReportBuilder rb;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vec px = p.column(x);
      const Vec lhs = contract(lie, px, q.column(y));
      rb.expect_equal("admissible-left", {x, y}, lhs, q * contract(lie, px, unit_vec(n, y)));
      rb.expect_equal("admissible-right", {x, y}, lhs, q * contract(lie, unit_vec(n, x), q.column(y)));
    }
  return rb.finish();
}

Report validate_averaging(const AveragingLieAlgebra& al) {
  Report lie = prefixed(check_relations(al.bracket, lie_relations()), "lie");
  if (!lie.ok) return lie;
  Report out = check_averaging(al.bracket, al.p);
  if (out.ok && al.q) out = check_admissible(al.bracket, al.p, *al.q);
  return out;
}

Report check_invariant_form(const Tensor3& lie, const BilinearForm& b) {
  const std::size_t n = mult_dim(lie);
  require_square(b.m, n, "form shape");
  ReportBuilder rb;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        rb.expect_zero("invariant", {x, y, z}, b(lie.fiber(x, y), unit_vec(n, z)) - b.at(x, lie.fiber(y, z)));
      }
  return rb.finish();
}

Matrix adjoint_map(const Matrix& p, const BilinearForm& b) {
  if (!b.nondegenerate()) throw Error(ErrorCode::DegenerateForm, "adjoint map needs a nondegenerate form");
  require_square(p, b.dim(), "operator shape");
  const Matrix hat = invert(b.m) * p.transpose() * b.m;
  // B(P x, y) = x^T P^T B y and B(x, Phat y) = x^T B Phat y
  if (!(p.transpose() * b.m == b.m * hat)) throw std::logic_error("adjoint_map: defining identity fails");
  return hat;
}

Report check_avg_rep(const Tensor3& lie, const Matrix& p, const MatFamily& rho, const Matrix& alpha) {
  const std::size_t n = mult_dim(lie);
  require_square(p, n, "averaging operator shape");
  const std::size_t m = alpha.rows();
  require_square(alpha, m, "module operator shape");
  const Rep module{m, rho, family_scale(-1, rho)};
  if (!is_representation(lie, lie_relations(), module).ok) {
    throw Error(ErrorCode::NotLieRep, "rho is not a representation of the Lie algebra");
  }
  ReportBuilder rb;
  for (std::size_t x = 0; x < n; ++x) {
    const Matrix rpx = apply_family(rho, p.column(x));
    const Matrix lhs = rpx * alpha;
    rb.expect_equal("avg-rep-commute", {x}, lhs, alpha * rpx);
    rb.expect_equal("avg-rep-absorb", {x}, lhs, alpha * rho[x] * alpha);
  }
  return rb.finish();
}

Report check_avg_rep_semidirect(const Tensor3& lie, const Matrix& p, const MatFamily& rho, const Matrix& alpha) {
  const std::size_t m = alpha.rows();
  const Rep module{m, rho, family_scale(-1, rho)};
  const Tensor3 sd = semidirect_product(lie, module);
  if (!check_relations(sd, lie_relations()).ok) {
    throw Error(ErrorCode::NotLieRep, "rho is not a representation of the Lie algebra");
  }
  return check_averaging(sd, block_diag(p, alpha));
}

SplitAlgebra admissible_split(const Tensor3& lie, const Matrix& p, const Matrix& q) {
  const std::size_t n = mult_dim(lie);
  require_square(p, n, "averaging operator shape");
  require_square(q, n, "admissible partner shape");
  Tensor3 succ(n), prec(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vec qb = q * lie.fiber(x, y);
      succ.set_fiber(x, y, contract(lie, p.column(x), unit_vec(n, y)) - qb);
      prec.set_fiber(x, y, qb);
    }
  return SplitAlgebra(std::move(succ), std::move(prec));
}

SDPLAlgebra sdpl_from_admissible(const Tensor3& lie, const Matrix& p, const Matrix& q) {
  return SDPLAlgebra(admissible_split(lie, p, q));
}

AveragingLieAlgebra endo_double(const Tensor3& mult, std::size_t cap) {
  const std::size_t n = mult_dim(mult);
  const std::size_t nn = n * n;
  const std::size_t total = nn + n;
  if (total > cap) {
    throw Error(ErrorCode::CapExceeded, "End(A)+A has dimension " + std::to_string(total) + " > " + std::to_string(cap));
  }
  auto e = [n](std::size_t i, std::size_t j) { return i * n + j; };
  Tensor3 br(total);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          // [E_ij, E_kl] = delta_jk E_il - delta_li E_kj
          if (j == k) br(e(i, j), e(k, l), e(i, l)) += 1;
          if (l == i) br(e(i, j), e(k, l), e(k, j)) -= 1;
        }
      // [E_ij, e_j] = e_i and [e_j, E_ij] = -e_i
      br(e(i, j), nn + j, nn + i) = 1;
      br(nn + j, e(i, j), nn + i) = -1;
    }
  Matrix p(total, total), q(total, total);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        p(e(a, b), nn + k) = mult(k, b, a);   // L(e_k)(a,b)
        q(e(a, b), nn + k) = -mult(b, k, a);  // -R(e_k)(a,b)
      }
  return AveragingLieAlgebra{std::move(br), std::move(p), std::move(q)};
}

}  // namespace opsplit
