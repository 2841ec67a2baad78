#include "opsplit/leibniz.hpp"

#include <stdexcept>

#include "opsplit/error.hpp"

namespace opsplit {

namespace {

Matrix at(const MatFamily& f, const Vec& x) { return apply_family(f, x); }

void require_leibniz(const Tensor3& circ) {
  if (!check_relations(circ, leibniz_relations()).ok) {
    throw Error(ErrorCode::NotLeibniz, "multiplication is not a Leibniz product");
  }
}

void require_form(const Tensor3& t, const BilinearForm& b) {
  const std::size_t n = mult_dim(t);
  if (b.m.rows() != n || b.m.cols() != n) throw Error(ErrorCode::DimMismatch, "form shape");
}

}  // namespace

Report check_leibniz_rep(const Tensor3& circ, const Rep& rep) {
  require_leibniz(circ);
  const std::size_t n = mult_dim(circ);
  if (rep.left.size() != n || rep.right.size() != n) throw Error(ErrorCode::DimMismatch, "rep family size");
  const MatFamily& l = rep.left;
  const MatFamily& r = rep.right;
  ReportBuilder rb;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vec xy = circ.fiber(x, y);
      rb.expect_equal("rep-left", {x, y}, at(l, xy), l[x] * l[y] - l[y] * l[x]);
      rb.expect_equal("rep-right", {x, y}, at(r, xy), l[x] * r[y] - r[y] * l[x]);
      rb.expect_equal("rep-mixed", {x, y}, r[y] * l[x], -(r[y] * r[x]));
    }
  return rb.finish();
}

Rep dualize_leibniz_rep(const Rep& rep) {
  const MatFamily ls = dual_family(rep.left);
  const MatFamily rs = dual_family(rep.right);
  return Rep{rep.vdim, ls, family_scale(-1, family_add(ls, rs))};
}

Tensor3 bullet_product(const SplitAlgebra& s) { return s.succ() - opposite(s.prec()); }

Report check_type_a(const SplitAlgebra& s, TypeARoute route) {
  switch (route) {
    case TypeARoute::TypeA:
      return check_type_m_pre(s, leibniz_relations(), type_a(), false);
    case TypeARoute::DualTypeB:
      return check_type_m_pre(s, leibniz_relations(), type_b(), true);
    case TypeARoute::Identities:
      break;
  }
  const std::size_t n = s.dim();
  const Tensor3 circ = s.succ() + s.prec();
  Report out = prefixed(check_relations(circ, leibniz_relations()), "admissible");
  const MatFamily lb = left_mult(bullet_product(s));
  const MatFamily rp = right_mult(s.prec());
  ReportBuilder rb;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vec xy = circ.fiber(x, y);
      // (x.y) b z = x b (y b z) - y b (x b z)
      rb.expect_equal("bullet-derivation", {x, y}, at(lb, xy), lb[x] * lb[y] - lb[y] * lb[x]);
      // z prec (x.y) = x b (z prec y) - (x b z) prec y
      rb.expect_equal("prec-derivation", {x, y}, at(rp, xy), lb[x] * rp[y] - rp[y] * lb[x]);
      // x b (z prec y) = -(z prec y) prec x
      rb.expect_equal("bullet-prec", {x, y}, lb[x] * rp[y], -(rp[x] * rp[y]));
    }
  out.absorb(rb.finish(), violation_cap());
  return out;
}

Report check_sdpl(const SplitAlgebra& s) {
  const std::size_t n = s.dim();
  const Tensor3 circ = s.succ() + s.prec();
  ReportBuilder rb;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) rb.expect_zero("prec-antisymmetry", {x, y}, s.prec().fiber(x, y) + s.prec().fiber(y, x));
  rb.absorb(prefixed(check_relations(circ, leibniz_relations()), "leibniz"));
  const MatFamily lc = left_mult(circ);
  const MatFamily lp = left_mult(s.prec());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Matrix lhs = lc[x] * lp[y];
      rb.expect_equal("prec-compatibility", {x, y}, lhs, at(lp, circ.fiber(x, y)) + lp[y] * lc[x]);
      rb.expect_equal("prec-associativity", {x, y}, lhs, lp[x] * lp[y]);
    }
  return rb.finish();
}

SDPLAlgebra::SDPLAlgebra(SplitAlgebra s) : split_(std::move(s)) {
  const Report r = check_sdpl(split_);
  if (!r.ok) {
    throw Error(ErrorCode::InvalidSdpl, "identity '" + r.violations.front().identity + "' fails");
  }
}

Report check_left_invariant(const Tensor3& circ, const BilinearForm& b) {
  require_form(circ, b);
  const std::size_t n = circ.d0();
  const MatFamily l = left_mult(circ);
  ReportBuilder rb;
  // B(L(x)y, z) + B(y, L(x)z) = [L(x)^T B + B L(x)](y, z)
  for (std::size_t x = 0; x < n; ++x) rb.expect_zero("left-invariance", {x}, l[x].transpose() * b.m + b.m * l[x]);
  return rb.finish();
}

Report check_left_invariant_expanded(const Tensor3& circ, const BilinearForm& b) {
  require_form(circ, b);
  const std::size_t n = circ.d0();
  ReportBuilder rb;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Scalar lhs = b(circ.fiber(x, y), unit_vec(n, z));
        const Scalar rhs = -b.at(y, circ.fiber(x, z) + circ.fiber(z, x)) - b.at(x, circ.fiber(z, y));
        rb.expect_zero("left-invariance-expanded", {x, y, z}, lhs - rhs);
      }
  return rb.finish();
}

Report check_left_invariant_exchange(const Tensor3& circ, const BilinearForm& b) {
  require_form(circ, b);
  const std::size_t n = circ.d0();
  ReportBuilder rb;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Scalar lhs = b(circ.fiber(x, y), unit_vec(n, z));
        rb.expect_zero("exchange-first", {x, y, z}, lhs + b.at(y, circ.fiber(x, z)));
        rb.expect_zero("exchange-second", {x, y, z}, lhs + b(circ.fiber(x, z), unit_vec(n, y)));
      }
  return rb.finish();
}

Report check_prec_invariance(const SplitAlgebra& s, const BilinearForm& b) {
  require_form(s.succ(), b);
  const std::size_t n = s.dim();
  ReportBuilder rb;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Scalar lhs = b(s.prec().fiber(x, y), unit_vec(n, z));
        rb.expect_zero("prec-invariance", {x, y, z}, lhs + b.at(x, s.circ().fiber(z, y)));
      }
  return rb.finish();
}

Report check_succ_balance(const SplitAlgebra& s, const BilinearForm& b) {
  require_form(s.succ(), b);
  const std::size_t n = s.dim();
  ReportBuilder rb;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Scalar lhs = b(s.succ().fiber(x, y), unit_vec(n, z));
        rb.expect_zero("succ-balance", {x, y, z}, lhs + b.at(y, s.circ().fiber(x, z) + s.circ().fiber(z, x)));
      }
  return rb.finish();
}

Report check_succ_exchange(const SplitAlgebra& s, const BilinearForm& b) {
  require_form(s.succ(), b);
  const std::size_t n = s.dim();
  ReportBuilder rb;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Scalar lhs = b(s.succ().fiber(x, y), unit_vec(n, z));
        rb.expect_zero("succ-exchange", {x, y, z}, lhs - b.at(x, s.succ().fiber(z, y)));
      }
  return rb.finish();
}

SDPLAlgebra sdpl_from_form(const Tensor3& circ, const BilinearForm& b) {
  require_form(circ, b);
  require_leibniz(circ);
  if (!b.nondegenerate()) throw Error(ErrorCode::DegenerateForm, "form must be nondegenerate");
  if (!b.symmetric()) throw Error(ErrorCode::NotSymmetric, "form must be symmetric");
  if (!check_left_invariant(circ, b).ok) throw Error(ErrorCode::NotLeftInvariant, "form must be left-invariant");
  SDPLAlgebra out(splitting_from_form(circ, leibniz_relations(), b, type_b()));
  // The form matrix also carries (L.circ, -L_succ) onto (L*_circ, -L*_circ - R*_circ).
  const Rep lhs{out.dim(), left_mult(circ), family_scale(-1, left_mult(out.succ()))};
  if (!rep_equivalent(lhs, dualize_leibniz_rep(adjoint_rep(circ)), b.m)) {
    throw std::logic_error("sdpl_from_form: second equivalence fails");
  }
  return out;
}

Report quadratic_form_of(const SDPLAlgebra& s, const BilinearForm& b) {
  require_form(s.succ(), b);
  ReportBuilder rb;
  if (!b.symmetric()) rb.fail("symmetric");
  if (!b.nondegenerate()) rb.fail("nondegenerate");
  rb.absorb(check_prec_invariance(s.split(), b));
  return rb.finish();
}

Report check_sdpl_rep(const SDPLAlgebra& s, const SDPLRep& rep) {
  const std::size_t n = s.dim();
  if (rep.l_succ.size() != n || rep.r_succ.size() != n || rep.l_prec.size() != n) {
    throw Error(ErrorCode::DimMismatch, "SDPL rep family size");
  }
  const MatFamily lc = rep.l_circ();
  const MatFamily rc = rep.r_circ();
  const MatFamily& lp = rep.l_prec;
  Report out = prefixed(check_leibniz_rep(s.circ(), Rep{rep.vdim, lc, rc}), "leibniz");
  ReportBuilder rb;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Matrix first = lc[x] * lp[y];
      rb.expect_equal("prec-compatibility", {x, y}, first, at(lp, s.circ().fiber(x, y)) + lp[y] * lc[x]);
      rb.expect_equal("prec-associativity", {x, y}, first, lp[x] * lp[y]);
      const Vec xpy = s.prec().fiber(x, y);
      const Matrix second = at(rc, xpy);
      rb.expect_equal("right-prec", {x, y}, second, lp[x] * rc[y] - lp[y] * rc[x]);
      rb.expect_equal("right-prec-left", {x, y}, second, -at(lp, xpy));
    }
  out.absorb(rb.finish(), violation_cap());
  return out;
}

SDPLRep adjoint_sdpl_rep(const SDPLAlgebra& s) {
  return SDPLRep{s.dim(), left_mult(s.succ()), right_mult(s.succ()), left_mult(s.prec())};
}

SDPLRep dual_sdpl_rep(const SDPLRep& rep) {
  const MatFamily ls = dual_family(rep.l_succ);
  const MatFamily rs = dual_family(rep.r_succ);
  const MatFamily rc = dual_family(rep.r_circ());
  return SDPLRep{rep.vdim, family_add(ls, rs), family_scale(-1, rs), family_scale(-1, rc)};
}

SDPLRep coadjoint_sdpl_rep(const SDPLAlgebra& s) { return dual_sdpl_rep(adjoint_sdpl_rep(s)); }

}  // namespace opsplit
