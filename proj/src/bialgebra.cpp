#include "opsplit/bialgebra.hpp"

#include <stdexcept>

#include "opsplit/error.hpp"

namespace opsplit {

namespace {

void require_comult(const Comult& c, std::size_t n, const char* what) {
  if (!c.coeffs.cubic(n)) throw Error(ErrorCode::DimMismatch, what);
}

void require_square(const Matrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::DimMismatch, what);
}

Vec flatten(const Tensor3& t) {
  Vec out;
  out.reserve(t.d0() * t.d1() * t.d2());
  for (std::size_t i = 0; i < t.d0(); ++i)
    for (std::size_t j = 0; j < t.d1(); ++j)
      for (std::size_t k = 0; k < t.d2(); ++k) out.push_back(t(i, j, k));
  return out;
}

// (c1 (x) id)c2(e_k) as [p][q][j]
Tensor3 compose_left(const Comult& c1, const Comult& c2, std::size_t k) {
  const std::size_t n = c2.dim();
  Tensor3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& w = c2.coeffs(k, i, j);
      if (w == 0) continue;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) out(p, q, j) += w * c1.coeffs(i, p, q);
    }
  return out;
}

// (id (x) c1)c2(e_k) as [i][p][q]
Tensor3 compose_right(const Comult& c1, const Comult& c2, std::size_t k) {
  const std::size_t n = c2.dim();
  Tensor3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& w = c2.coeffs(k, i, j);
      if (w == 0) continue;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) out(i, p, q) += w * c1.coeffs(j, p, q);
    }
  return out;
}

// (tau (x) id) on three legs
Tensor3 flip12(const Tensor3& t) {
  Tensor3 out(t.d1(), t.d0(), t.d2());
  for (std::size_t i = 0; i < t.d0(); ++i)
    for (std::size_t j = 0; j < t.d1(); ++j)
      for (std::size_t k = 0; k < t.d2(); ++k) out(j, i, k) = t(i, j, k);
  return out;
}

MatFamily dual_left(const Tensor3& t) { return dual_family(left_mult(t)); }
MatFamily dual_right(const Tensor3& t) { return dual_family(right_mult(t)); }

// The three compatibility identities for the action of `other` on `self`:
// x runs over `other`, a and b over `self`.
void matched_block(ReportBuilder& rb, const Tensor3& self, const MatFamily& l_on, const MatFamily& r_on,
                   const MatFamily& l_back, const MatFamily& r_back, const char* const names[3]) {
  const std::size_t m = self.d0();
  const std::size_t n = l_on.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        const Vec ea = unit_vec(m, a);
        const Vec eb = unit_vec(m, b);
        const Vec ab = self.fiber(a, b);
        const Vec lxa = l_on[x].column(a);
        const Vec lxb = l_on[x].column(b);
        const Vec rxa = r_on[x].column(a);
        const Vec rxb = r_on[x].column(b);
        const Matrix l_rax = apply_family(l_on, r_back[a].column(x));
        const Matrix l_lax = apply_family(l_on, l_back[a].column(x));

        Vec first = r_on[x] * ab - contract(self, ea, rxb) + contract(self, eb, rxa);
        first = first - apply_family(r_on, l_back[b].column(x)).column(a);
        first = first + apply_family(r_on, l_back[a].column(x)).column(b);
        rb.expect_zero(names[0], {x, a, b}, first);

        Vec second = l_on[x] * ab - contract(self, lxa, eb) - contract(self, ea, lxb);
        second = second - l_rax.column(b);
        second = second - apply_family(r_on, r_back[b].column(x)).column(a);
        rb.expect_zero(names[1], {x, a, b}, second);

        Vec third = contract(self, lxa, eb) + l_rax.column(b) + contract(self, rxa, eb) + l_lax.column(b);
        rb.expect_zero(names[2], {x, a, b}, third);
      }
}

void require_families(const MatchedPairData& d) {
  const std::size_t n = mult_dim(d.a);
  const std::size_t m = mult_dim(d.b);
  auto check = [](const MatFamily& f, std::size_t count, std::size_t dim) {
    if (f.size() != count) throw Error(ErrorCode::DimMismatch, "matched pair family size");
    for (const Matrix& x : f) {
      if (x.rows() != dim || x.cols() != dim) throw Error(ErrorCode::DimMismatch, "matched pair family shape");
    }
  };
  check(d.l_a, n, m);
  check(d.r_a, n, m);
  check(d.l_b, m, n);
  check(d.r_b, m, n);
}

void check_closure(ReportBuilder& rb, const Tensor3& t, std::size_t n, const char* prefix) {
  const std::string lower = std::string(prefix) + "closure-a";
  const std::string upper = std::string(prefix) + "closure-dual";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec low(n), high(n);
      for (std::size_t k = 0; k < n; ++k) {
        low[k] = t(i, j, n + k);
        high[k] = t(n + i, n + j, k);
      }
      rb.expect_zero(lower, {i, j}, low);
      rb.expect_zero(upper, {n + i, n + j}, high);
    }
}

std::size_t half_dim(std::size_t total) {
  if (total % 2 != 0) throw Error(ErrorCode::BadShape, "double must have even dimension");
  return total / 2;
}

Matrix delta_at(const Comult& c, const Vec& v) { return c.image(v); }

}  // namespace

Matrix Comult::image(std::size_t k) const {
  const std::size_t n = dim();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = coeffs(k, i, j);
  return out;
}

Matrix Comult::image(const Vec& v) const {
  const std::size_t n = dim();
  if (v.size() != n) throw Error(ErrorCode::DimMismatch, "comultiplication argument");
  Matrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (v[k] == 0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) += v[k] * coeffs(k, i, j);
  }
  return out;
}

Comult zero_comult(std::size_t n) { return Comult{Tensor3(n)}; }

Comult operator+(const Comult& a, const Comult& b) { return Comult{a.coeffs + b.coeffs}; }

Comult dualize_mult(const Tensor3& m) {
  Tensor3 out(m.d2(), m.d0(), m.d1());
  for (std::size_t i = 0; i < m.d0(); ++i)
    for (std::size_t j = 0; j < m.d1(); ++j)
      for (std::size_t k = 0; k < m.d2(); ++k) out(k, i, j) = m(i, j, k);
  return Comult{std::move(out)};
}

Tensor3 dualize_comult(const Comult& c) {
  const Tensor3& d = c.coeffs;
  Tensor3 out(d.d1(), d.d2(), d.d0());
  for (std::size_t k = 0; k < d.d0(); ++k)
    for (std::size_t i = 0; i < d.d1(); ++i)
      for (std::size_t j = 0; j < d.d2(); ++j) out(i, j, k) = d(k, i, j);
  return out;
}

Report check_leibniz_coalgebra(const Comult& c) {
  const std::size_t n = c.dim();
  require_comult(c, n, "comultiplication shape");
  ReportBuilder rb;
  for (std::size_t k = 0; k < n; ++k) {
    const Tensor3 outer = compose_right(c, c, k);
    Tensor3 res = compose_left(c, c, k) + flip12(outer) - outer;
    rb.expect_zero("leibniz-coalgebra", {k}, flatten(res));
  }
  return rb.finish();
}

Report check_sdpl_coalgebra(const Comult& vartheta, const Comult& theta) {
  const std::size_t n = vartheta.dim();
  require_comult(vartheta, n, "comultiplication shape");
  require_comult(theta, n, "comultiplication shape");
  const Comult eta = vartheta + theta;
  ReportBuilder rb;
  rb.absorb(check_leibniz_coalgebra(eta));
  for (std::size_t k = 0; k < n; ++k) {
    const Matrix t = theta.image(k);
    rb.expect_zero("co-antisymmetry", {k}, t + t.transpose());
    const Tensor3 lhs = compose_right(theta, eta, k);
    const Tensor3 rhs = compose_left(eta, theta, k) + flip12(compose_right(eta, theta, k));
    rb.expect_zero("co-compatibility", {k}, flatten(lhs - rhs));
    rb.expect_zero("co-annihilation", {k}, flatten(compose_right(theta, vartheta, k)));
  }
  return rb.finish();
}

Report check_sdpl_bialgebra(const SDPLAlgebra& s, const Comult& vartheta, const Comult& theta) {
  const std::size_t n = s.dim();
  require_comult(vartheta, n, "comultiplication shape");
  require_comult(theta, n, "comultiplication shape");
  if (!check_sdpl_coalgebra(vartheta, theta).ok) {
    throw Error(ErrorCode::NotCoalgebra, "(vartheta, theta) is not an SDPL coalgebra");
  }
  const Comult eta = vartheta + theta;
  const MatFamily lc = left_mult(s.circ());
  const MatFamily rc = right_mult(s.circ());
  const MatFamily lp = left_mult(s.prec());
  const MatFamily rp = right_mult(s.prec());
  std::vector<Matrix> h(n), th(n);
  for (std::size_t k = 0; k < n; ++k) {
    h[k] = eta.image(k);
    th[k] = theta.image(k);
  }
  ReportBuilder rb;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vec ab_circ = s.circ().fiber(a, b);
      // eta(x prec y) = (1 - tau)(id (x) L_prec(x))eta(y) + (1 - tau)(id (x) R_prec(y))eta(x)
      const Matrix x1 = h[b] * lp[a].transpose();
      const Matrix y1 = h[a] * rp[b].transpose();
      rb.expect_equal("bialg-prec", {a, b}, eta.image(s.prec().fiber(a, b)),
                      x1 - x1.transpose() + y1 - y1.transpose());
      rb.expect_equal("bialg-left", {a, b}, lc[a] * h[b],
                      lp[a] * h[b] + h[a] * rc[b].transpose() - th[a] * rc[b].transpose());
      rb.expect_equal("bialg-theta", {a, b}, theta.image(ab_circ),
                      th[b] * lc[a].transpose() + lc[a] * th[b] - th[a] * lc[b].transpose() - lc[b] * th[a]);
      rb.expect_equal("bialg-eta", {a, b}, eta.image(ab_circ),
                      h[a] * rc[b].transpose() + h[b] * lc[a].transpose() + lp[a] * h[b] - lp[b] * th[a]);
    }
  return rb.finish();
}

SDPLBialgebra::SDPLBialgebra(SDPLAlgebra s, Comult vartheta, Comult theta)
    : sdpl_(std::move(s)), vartheta_(std::move(vartheta)), theta_(std::move(theta)) {
  const Report r = check_sdpl_bialgebra(sdpl_, vartheta_, theta_);
  if (!r.ok) throw Error(ErrorCode::NotBialgebra, "identity '" + r.violations.front().identity + "' fails");
}

SDPLAlgebra SDPLBialgebra::dual_sdpl() const {
  return SDPLAlgebra(dualize_comult(vartheta_), dualize_comult(theta_));
}

Tensor3 matched_pair_product(const MatchedPairData& d) {
  require_families(d);
  const std::size_t n = mult_dim(d.a);
  const std::size_t m = mult_dim(d.b);
  Tensor3 out(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = d.a(i, j, k);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) out(n + a, n + b, n + c) = d.b(a, b, c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t k = 0; k < n; ++k) {
        out(i, n + a, k) = d.r_b[a](k, i);
        out(n + a, i, k) = d.l_b[a](k, i);
      }
      for (std::size_t c = 0; c < m; ++c) {
        out(i, n + a, n + c) = d.l_a[i](c, a);
        out(n + a, i, n + c) = d.r_a[i](c, a);
      }
    }
  return out;
}

Report check_matched_pair(const MatchedPairData& d) {
  require_families(d);
  const std::size_t n = mult_dim(d.a);
  const std::size_t m = mult_dim(d.b);
  ReportBuilder rb;
  const Report la = check_relations(d.a, leibniz_relations());
  const Report lb = check_relations(d.b, leibniz_relations());
  rb.absorb(prefixed(la, "leibniz-a"));
  rb.absorb(prefixed(lb, "leibniz-b"));
  if (la.ok) rb.absorb(prefixed(check_leibniz_rep(d.a, Rep{m, d.l_a, d.r_a}), "rep-a"));
  if (lb.ok) rb.absorb(prefixed(check_leibniz_rep(d.b, Rep{n, d.l_b, d.r_b}), "rep-b"));
  static const char* const on_b[3] = {"mp1", "mp2", "mp3"};
  static const char* const on_a[3] = {"mp4", "mp5", "mp6"};
  matched_block(rb, d.b, d.l_a, d.r_a, d.l_b, d.r_b, on_b);
  matched_block(rb, d.a, d.l_b, d.r_b, d.l_a, d.r_a, on_a);
  return rb.finish();
}

Report check_matched_pair_via_product(const MatchedPairData& d, const RelationSet& rs) {
  return check_relations(matched_pair_product(d), rs);
}

MatchedPairData leibniz_double_data(const SplitAlgebra& a, const SplitAlgebra& astar) {
  if (a.dim() != astar.dim()) throw Error(ErrorCode::DimMismatch, "A and A* must have equal dimension");
  return MatchedPairData{a.circ(),
                         astar.circ(),
                         dual_left(a.circ()),
                         family_scale(-1, dual_left(a.prec())),
                         dual_left(astar.circ()),
                         family_scale(-1, dual_left(astar.prec()))};
}

Tensor3 build_leibniz_double(const SplitAlgebra& a, const SplitAlgebra& astar) {
  return matched_pair_product(leibniz_double_data(a, astar));
}

SplitAlgebra build_sdpl_double(const SplitAlgebra& a, const SplitAlgebra& astar) {
  if (a.dim() != astar.dim()) throw Error(ErrorCode::DimMismatch, "A and A* must have equal dimension");
  const MatFamily rs_a = dual_right(a.succ());
  const MatFamily rs_b = dual_right(astar.succ());
  const MatFamily rc_a = dual_right(a.circ());
  const MatFamily rc_b = dual_right(astar.circ());
  const MatchedPairData succ{a.succ(),
                             astar.succ(),
                             family_add(dual_left(a.succ()), rs_a),
                             family_scale(-1, rs_a),
                             family_add(dual_left(astar.succ()), rs_b),
                             family_scale(-1, rs_b)};
  const MatchedPairData prec{a.prec(), astar.prec(), family_scale(-1, rc_a), rc_a, family_scale(-1, rc_b), rc_b};
  return SplitAlgebra(matched_pair_product(succ), matched_pair_product(prec));
}

BilinearForm pairing_form(std::size_t n) {
  Matrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, n + i) = 1;
    m(n + i, i) = 1;
  }
  return BilinearForm{std::move(m)};
}

Tensor3 restrict_block(const Tensor3& t, std::size_t offset, std::size_t n) {
  if (offset + n > t.d0() || !t.cubic(t.d0())) throw Error(ErrorCode::DimMismatch, "block out of range");
  Tensor3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = t(offset + i, offset + j, offset + k);
  return out;
}

Report check_manin_triple(const Tensor3& circ) {
  const std::size_t n = half_dim(mult_dim(circ));
  ReportBuilder rb;
  const Report leib = check_relations(circ, leibniz_relations());
  rb.absorb(prefixed(leib, "leibniz"));
  check_closure(rb, circ, n, "");
  rb.absorb(check_left_invariant(circ, pairing_form(n)));
  return rb.finish();
}

Report check_manin_triple(const SplitAlgebra& split, ManinKind kind) {
  if (kind == ManinKind::LeibnizLeftInv) return check_manin_triple(split.circ());
  const std::size_t n = half_dim(split.dim());
  ReportBuilder rb;
  rb.absorb(prefixed(check_sdpl(split), "sdpl"));
  check_closure(rb, split.succ(), n, "succ-");
  check_closure(rb, split.prec(), n, "prec-");
  rb.absorb(check_prec_invariance(split, pairing_form(n)));
  return rb.finish();
}

ManinChain evaluate_manin_chain(const SplitAlgebra& a, const SplitAlgebra& astar) {
  if (a.dim() != astar.dim()) throw Error(ErrorCode::DimMismatch, "A and A* must have equal dimension");
  const std::size_t n = a.dim();
  auto restricts = [&](const SplitAlgebra& d) {
    return restrict_block(d.succ(), 0, n) == a.succ() && restrict_block(d.prec(), 0, n) == a.prec() &&
           restrict_block(d.succ(), n, n) == astar.succ() && restrict_block(d.prec(), n, n) == astar.prec();
  };
  auto closed = [&](const SplitAlgebra& d) {
    ReportBuilder rb;
    check_closure(rb, d.succ(), n, "");
    check_closure(rb, d.prec(), n, "");
    return rb.ok();
  };

  ManinChain out;
  const bool both_sdpl = check_sdpl(a).ok && check_sdpl(astar).ok;
  if (both_sdpl) {
    try {
      out.bialgebra =
          check_sdpl_bialgebra(SDPLAlgebra(a), dualize_mult(astar.succ()), dualize_mult(astar.prec())).ok;
    } catch (const Error&) {
      out.bialgebra = false;
    }
  }

  const Tensor3 circ_d = build_leibniz_double(a, astar);
  out.leibniz_double = check_relations(circ_d, leibniz_relations()).ok;
  if (check_manin_triple(circ_d).ok) {
    try {
      const SDPLAlgebra induced = sdpl_from_form(circ_d, pairing_form(n));
      out.leibniz_manin = closed(induced.split()) && restricts(induced.split());
    } catch (const Error&) {
      out.leibniz_manin = false;
    }
  }

  const SplitAlgebra split_d = build_sdpl_double(a, astar);
  out.sdpl_double = check_sdpl(split_d).ok;
  out.sdpl_manin = check_manin_triple(split_d, ManinKind::SdplQuadratic).ok && restricts(split_d);
  return out;
}

Report check_lie_bialgebra(const Tensor3& lie, const Comult& delta) {
  const std::size_t n = mult_dim(lie);
  require_comult(delta, n, "comultiplication shape");
  if (!check_relations(lie, lie_relations()).ok) throw Error(ErrorCode::NotLie, "bracket is not a Lie bracket");
  const MatFamily ad = left_mult(lie);
  std::vector<Matrix> dm(n);
  for (std::size_t k = 0; k < n; ++k) dm[k] = delta.image(k);
  ReportBuilder rb;
  for (std::size_t k = 0; k < n; ++k) {
    rb.expect_zero("co-antisymmetry", {k}, dm[k] + dm[k].transpose());
    const Tensor3 t = compose_right(delta, delta, k);
    Tensor3 cyc(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) cyc(a, b, c) = t(a, b, c) + t(b, c, a) + t(c, a, b);
    rb.expect_zero("co-jacobi", {k}, flatten(cyc));
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Matrix rhs =
          ad[x] * dm[y] + dm[y] * ad[x].transpose() - ad[y] * dm[x] - dm[x] * ad[y].transpose();
      rb.expect_equal("cocycle", {x, y}, delta.image(lie.fiber(x, y)), rhs);
    }
  return rb.finish();
}

Tensor3 lie_double(const Tensor3& lie, const Tensor3& lie_star) {
  if (mult_dim(lie) != mult_dim(lie_star)) throw Error(ErrorCode::DimMismatch, "A and A* must have equal dimension");
  const MatFamily ad_a = dual_left(lie);
  const MatFamily ad_b = dual_left(lie_star);
  return matched_pair_product(
      MatchedPairData{lie, lie_star, ad_a, family_scale(-1, ad_a), ad_b, family_scale(-1, ad_b)});
}

Report check_lie_bialgebra_via_double(const Tensor3& lie, const Comult& delta) {
  const std::size_t n = mult_dim(lie);
  require_comult(delta, n, "comultiplication shape");
  if (!check_relations(lie, lie_relations()).ok) throw Error(ErrorCode::NotLie, "bracket is not a Lie bracket");
  const Tensor3 d = lie_double(lie, dualize_comult(delta));
  ReportBuilder rb;
  const Report lie_ok = check_relations(d, lie_relations());
  rb.absorb(prefixed(lie_ok, "double-lie"));
  rb.absorb(prefixed(check_invariant_form(d, pairing_form(n)), "double"));
  return rb.finish();
}

Report check_avg_lie_bialgebra(const AvgLieBialgebra& b) {
  const std::size_t n = mult_dim(b.bracket);
  require_comult(b.delta, n, "comultiplication shape");
  require_square(b.p, n, "P shape");
  require_square(b.q, n, "Q shape");
  ReportBuilder rb;
  if (!check_relations(b.bracket, lie_relations()).ok) {
    rb.fail("lie");
    return rb.finish();
  }
  rb.absorb(check_lie_bialgebra(b.bracket, b.delta));
  const Report avg = check_averaging(b.bracket, b.p);
  rb.absorb(avg);
  if (avg.ok) rb.absorb(check_admissible(b.bracket, b.p, b.q));
  const Matrix qt = b.q.transpose();
  const Matrix pt = b.p.transpose();
  for (std::size_t x = 0; x < n; ++x) {
    const Matrix dx = b.delta.image(x);
    const Matrix dpx = delta_at(b.delta, b.p.column(x));
    rb.expect_equal("co-averaging", {x}, b.q * dx * qt, b.q * delta_at(b.delta, b.q.column(x)));
    const Matrix mixed = b.q * dx * pt;
    rb.expect_equal("co-admissible-left", {x}, mixed, b.q * dpx);
    rb.expect_equal("co-admissible-right", {x}, mixed, dpx * pt);
  }
  return rb.finish();
}

Report check_avg_lie_bialgebra_via_double(const AvgLieBialgebra& b) {
  const std::size_t n = mult_dim(b.bracket);
  require_comult(b.delta, n, "comultiplication shape");
  require_square(b.p, n, "P shape");
  require_square(b.q, n, "Q shape");
  ReportBuilder rb;
  if (!check_relations(b.bracket, lie_relations()).ok) {
    rb.fail("lie");
    return rb.finish();
  }
  const Report bi = check_lie_bialgebra_via_double(b.bracket, b.delta);
  rb.absorb(bi);
  if (!bi.ok) return rb.finish();
  const Tensor3 d = lie_double(b.bracket, dualize_comult(b.delta));
  rb.absorb(prefixed(check_averaging(d, block_diag(b.p, b.q.transpose())), "double"));
  return rb.finish();
}

SDPLBialgebra induce_sdpl_bialgebra(const AvgLieBialgebra& b) {
  const Report r = check_avg_lie_bialgebra(b);
  if (!r.ok) {
    throw Error(ErrorCode::NotAvgLieBialgebra, "identity '" + r.violations.front().identity + "' fails");
  }
  const std::size_t n = mult_dim(b.bracket);
  Tensor3 vt(n), th(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Matrix dpk = delta_at(b.delta, b.p.column(k));
    const Matrix v = b.q * b.delta.image(k) - dpk;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        vt(k, i, j) = v(i, j);
        th(k, i, j) = dpk(i, j);
      }
  }
  SDPLBialgebra out(sdpl_from_admissible(b.bracket, b.p, b.q), Comult{std::move(vt)}, Comult{std::move(th)});
  // The A* side must be the split of the dual bracket by (Q^T, P^T).
  if (!(admissible_split(dualize_comult(b.delta), b.q.transpose(), b.p.transpose()) == out.dual_sdpl().split())) {
    throw std::logic_error("induce_sdpl_bialgebra: dual split mismatch");
  }
  return out;
}

ManinDoubles avg_manin_to_leibniz_manin(const AvgLieBialgebra& b) {
  const Report r = check_avg_lie_bialgebra(b);
  if (!r.ok) {
    throw Error(ErrorCode::NotAvgLieBialgebra, "identity '" + r.violations.front().identity + "' fails");
  }
  const Tensor3 d = lie_double(b.bracket, dualize_comult(b.delta));
  const Matrix avg = block_diag(b.p, b.q.transpose());
  const Matrix partner = block_diag(b.q, b.p.transpose());
  ManinDoubles out{induced_leibniz(d, avg), admissible_split(d, avg, partner)};
  if (!(out.split.circ() == out.circ)) throw std::logic_error("avg_manin_to_leibniz_manin: split does not sum to circ");
  if (!check_manin_triple(out.circ).ok || !check_manin_triple(out.split, ManinKind::SdplQuadratic).ok) {
    throw std::logic_error("avg_manin_to_leibniz_manin: Manin triple check fails");
  }
  return out;
}

}  // namespace opsplit
