#include <gtest/gtest.h>

#include "opsplit/leibniz.hpp"
#include "support/testing.hpp"

using namespace opsplit;
using namespace opsplit::testing;

namespace {

SplitAlgebra transport(const SplitAlgebra& s, const Matrix& g) {
  return SplitAlgebra(change_basis(s.succ(), g), change_basis(s.prec(), g));
}

BilinearForm transport(const BilinearForm& b, const Matrix& g) { return BilinearForm{g.transpose() * b.m * g}; }

SplitAlgebra sl2_split() { return SplitAlgebra(sl2_succ(), sl2_prec()); }

// Splits of dimension 3 that are expected to be type-a.
SplitAlgebra valid_split(Rng& rng) {
  const Matrix g = random_invertible(rng, 3);
  switch (uniform_int(rng, 0, 3)) {
    case 0:
      return transport(sl2_split(), g);
    case 1:
      return SplitAlgebra(random_leibniz(rng, 3), Tensor3(3));
    case 2: {
      static const std::vector<Matrix> ps = search_averaging(heisenberg(), -1, 1);
      const Matrix& p = ps[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(ps.size()) - 1))];
      const std::vector<Matrix> qs = search_admissible(heisenberg(), p, 0, 1);
      return transport(admissible_split(heisenberg(), p, qs[static_cast<std::size_t>(
                                                           uniform_int(rng, 0, static_cast<long>(qs.size()) - 1))]),
                       g);
    }
    default: {
      const Matrix p = small_rational(rng) * sl2_averaging();
      return transport(admissible_split(sl2_bracket(), p, uniform_int(rng, 0, 1) ? p : Matrix(3, 3)), g);
    }
  }
}

// A split of a random Leibniz product into two arbitrary pieces.
SplitAlgebra leibniz_circ_split(Rng& rng) {
  const Tensor3 circ = random_leibniz(rng, 3);
  const Tensor3 prec = random_tensor(rng, 3, -1, 1, 0.2);
  return SplitAlgebra(circ - prec, prec);
}

// Enumerates symmetric n x n matrices with entries in [lo, hi].
std::vector<BilinearForm> symmetric_forms(std::size_t n, long lo, long hi) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
  std::vector<long> d(cells.size(), lo);
  std::vector<BilinearForm> out;
  for (;;) {
    Matrix m(n, n);
    for (std::size_t c = 0; c < cells.size(); ++c) m(cells[c].first, cells[c].second) = m(cells[c].second, cells[c].first) = d[c];
    out.push_back(BilinearForm{m});
    std::size_t c = 0;
    while (c < d.size() && d[c] == hi) d[c++] = lo;
    if (c == d.size()) return out;
    ++d[c];
  }
}

bool left_invariant_direct(const Tensor3& circ, const BilinearForm& b) {
  const std::size_t n = circ.d0();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t e = 0; e < n; ++e) {
        const Vec x = unit_vec(n, a), y = unit_vec(n, c), z = unit_vec(n, e);
        if (b(mul(circ, x, y), z) + b(y, mul(circ, x, z)) != 0) return false;
      }
  return true;
}

MatFamily conjugate(const MatFamily& f, const Matrix& g) {
  const Matrix gi = invert(g);
  MatFamily out;
  for (const Matrix& m : f) out.push_back(gi * m * g);
  return out;
}

SDPLRep conjugate(const SDPLRep& r, const Matrix& g) {
  return SDPLRep{r.vdim, conjugate(r.l_succ, g), conjugate(r.r_succ, g), conjugate(r.l_prec, g)};
}

const TypeMatrix kTypeL{1, -1, 0, -1};

}  // namespace

TEST(LeibnizRep, Examples) {
  const Tensor3 circ = sl2_induced();
  EXPECT_TRUE(check_leibniz_rep(circ, adjoint_rep(circ)).ok);
  const Rep dual{3, dual_family(left_mult(circ)),
                 family_add(family_scale(-1, dual_family(left_mult(circ))), family_scale(-1, dual_family(right_mult(circ))))};
  EXPECT_TRUE(check_leibniz_rep(circ, dual).ok);
  // P has rank one, so R(y)L(x) = R(y)R(x) = 0 and negating R keeps a representation here
  const Rep flipped{3, left_mult(circ), family_scale(-1, right_mult(circ))};
  EXPECT_TRUE(check_leibniz_rep(circ, flipped).ok);
  EXPECT_TRUE(leibniz_direct(semidirect_product(circ, flipped)));
  const Tensor3 br = sl2_bracket();
  const Rep flipped_br{3, left_mult(br), family_scale(-1, right_mult(br))};
  EXPECT_FALSE(check_leibniz_rep(br, flipped_br).ok);
  EXPECT_FALSE(leibniz_direct(semidirect_product(br, flipped_br)));
  EXPECT_EQ(code_of([] { check_leibniz_rep(table(2, {{0, 0, {0, 1}}, {1, 0, {1, 0}}}), zero_rep(2, 1)); }),
            ErrorCode::NotLeibniz);
}

TEST(LeibnizRep, AgreesWithSemidirectRoute) {
  Rng rng(201);
  int positives = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 3));
    const Tensor3 circ = random_leibniz(rng, n);
    Rep rep;
    switch (t % 5) {
      case 0:
        rep = adjoint_rep(circ);
        break;
      case 1:
        rep = dualize_leibniz_rep(adjoint_rep(circ));
        break;
      case 2: {
        const Matrix g = random_invertible(rng, n);
        const Rep a = adjoint_rep(circ);
        rep = Rep{n, conjugate(a.left, g), conjugate(a.right, g)};
        break;
      }
      case 3:
        rep = Rep{2, random_family(rng, n, 2, -1, 1), random_family(rng, n, 2, -1, 1)};
        break;
      default:
        rep = Rep{n, left_mult(circ), zero_family(n, n)};
    }
    const bool direct = check_leibniz_rep(circ, rep).ok;
    positives += direct;
    EXPECT_EQ(direct, is_representation(circ, leibniz_relations(), rep).ok);
    EXPECT_EQ(direct, leibniz_direct(semidirect_product(circ, rep)));
  }
  EXPECT_GT(positives, 100);
}

TEST(DualizeRep, Examples) {
  const Rep z = dualize_leibniz_rep(zero_rep(3, 2));
  EXPECT_EQ(z.left, zero_family(3, 2));
  EXPECT_EQ(z.right, zero_family(3, 2));
  EXPECT_TRUE(check_leibniz_rep(sl2_induced(), dualize_leibniz_rep(adjoint_rep(sl2_induced()))).ok);
  // (l, r)L with the duals: (l*, -l* - r*)
  const Rep a = adjoint_rep(sl2_induced());
  const Rep d = dualize_leibniz_rep(a);
  const Rep via_l = combine_reps(dual_family(a.left), dual_family(a.right), kTypeL);
  EXPECT_EQ(d.left, via_l.left);
  EXPECT_EQ(d.right, via_l.right);
}

TEST(DualizeRep, TransportsEquivalences) {
  Rng rng(202);
  for (int t = 0; t < 50; ++t) {
    const Tensor3 circ = random_leibniz(rng, 3);
    const Rep a = adjoint_rep(circ);
    const Matrix phi = random_invertible(rng, 3);
    const Matrix phii = invert(phi);
    Rep b{3, {}, {}};
    for (std::size_t i = 0; i < 3; ++i) {
      b.left.push_back(phi * a.left[i] * phii);
      b.right.push_back(phi * a.right[i] * phii);
    }
    ASSERT_TRUE(rep_equivalent(a, b, phi));
    EXPECT_TRUE(rep_equivalent(dualize_leibniz_rep(a), dualize_leibniz_rep(b), phii.transpose()));
    EXPECT_TRUE(check_leibniz_rep(circ, dualize_leibniz_rep(b)).ok);
  }
}

TEST(TypeA, Sl2AndZero) {
  for (TypeARoute r : {TypeARoute::TypeA, TypeARoute::DualTypeB, TypeARoute::Identities}) {
    EXPECT_TRUE(check_type_a(sl2_split(), r).ok);
    EXPECT_TRUE(check_type_a(SplitAlgebra(Tensor3(3), Tensor3(3)), r).ok);
  }
}

TEST(TypeA, NonAdmissibleFailsEverywhere) {
  Rng rng(203);
  int tried = 0;
  while (tried < 20) {
    const SplitAlgebra s(random_tensor(rng, 3, -2, 2), random_tensor(rng, 3, -2, 2));
    if (leibniz_direct(s.circ())) continue;
    ++tried;
    for (TypeARoute r : {TypeARoute::TypeA, TypeARoute::DualTypeB, TypeARoute::Identities})
      EXPECT_FALSE(check_type_a(s, r).ok);
  }
}

TEST(TypeA, RoutesAgree) {
  Rng rng(204);
  int valid = 0, invalid = 0;
  for (int t = 0; t < 200; ++t) {
    SplitAlgebra s = t % 2 == 0 ? valid_split(rng) : leibniz_circ_split(rng);
    if (t % 7 == 0) s = SplitAlgebra(perturb(rng, s.succ()), s.prec());
    const bool a = check_type_a(s, TypeARoute::TypeA).ok;
    EXPECT_EQ(a, check_type_a(s, TypeARoute::DualTypeB).ok) << t;
    EXPECT_EQ(a, check_type_a(s, TypeARoute::Identities).ok) << t;
    (a ? valid : invalid) += 1;
  }
  EXPECT_GT(valid, 50);
  EXPECT_GT(invalid, 50);
}

TEST(TypeA, MatrixDuality) {
  Rng rng(205);
  const std::vector<TypeMatrix> fixed = {TypeMatrix::identity(), type_a(), type_b(), TypeMatrix{0, -1, 1, 1},
                                         TypeMatrix{2, 1, -1, 1}};
  int positives = 0;
  for (int t = 0; t < 200; ++t) {
    SplitAlgebra s = t % 3 == 0 ? leibniz_circ_split(rng) : valid_split(rng);
    if (t % 3 == 1) {
      const Tensor3 circ = random_leibniz(rng, 3);
      const Tensor3 op = opposite(circ);
      s = uniform_int(rng, 0, 1) ? SplitAlgebra(circ - op, op) : mults_from_M_inverse(circ, fixed[4]);
    }
    TypeMatrix m = fixed[static_cast<std::size_t>(t) % fixed.size()];
    if (t % 4 == 3) m = TypeMatrix{uniform_int(rng, -2, 2), uniform_int(rng, -2, 2), uniform_int(rng, -2, 2),
                                   uniform_int(rng, -2, 2)};
    ASSERT_TRUE(leibniz_direct(s.circ()));
    const bool plain = check_type_m_pre(s, leibniz_relations(), m, false).ok;
    positives += plain;
    EXPECT_EQ(plain, check_type_m_pre(s, leibniz_relations(), m * kTypeL, true).ok) << t;
  }
  EXPECT_GT(positives, 30);
}

TEST(Sdpl, Examples) {
  EXPECT_TRUE(check_sdpl(sl2_split()).ok);
  Rng rng(206);
  for (int t = 0; t < 20; ++t) EXPECT_TRUE(check_sdpl(SplitAlgebra(random_leibniz(rng, 3), Tensor3(3))).ok);
  Tensor3 prec = sl2_prec();
  for (std::size_t k = 0; k < 3; ++k) prec(0, 2, k) = -prec(0, 2, k);
  const Report r = check_sdpl(SplitAlgebra(sl2_succ(), prec));
  EXPECT_FALSE(r.ok);
  bool antisym = false;
  for (const Violation& v : r.violations) antisym = antisym || v.identity == "prec-antisymmetry";
  EXPECT_TRUE(antisym);
  EXPECT_EQ(code_of([&] { SDPLAlgebra(sl2_succ(), prec); }), ErrorCode::InvalidSdpl);
}

TEST(Sdpl, AgreesWithTypeAAndAntisymmetry) {
  Rng rng(207);
  int positives = 0;
  for (int t = 0; t < 150; ++t) {
    SplitAlgebra s = t % 2 == 0 ? valid_split(rng) : leibniz_circ_split(rng);
    if (t % 5 == 0) s = SplitAlgebra(s.succ(), perturb(rng, s.prec()));
    bool antisym = true;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) antisym = antisym && s.prec().fiber(i, j) == -1 * s.prec().fiber(j, i);
    const bool sdpl = check_sdpl(s).ok;
    positives += sdpl;
    EXPECT_EQ(sdpl, antisym && check_type_a(s, TypeARoute::TypeA).ok) << t;
  }
  EXPECT_GT(positives, 30);
}

TEST(FormLemmas, ExpandedVariantEquivalentForSymmetricForms) {
  Rng rng(208);
  const std::vector<BilinearForm> forms2 = symmetric_forms(2, -1, 1);
  const std::vector<BilinearForm> forms3 = symmetric_forms(3, -1, 1);
  int positives = 0;
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = t % 2 ? 2 : 3;
    const Tensor3 circ = t == 0 ? sl2_induced() : random_leibniz(rng, n);
    for (const BilinearForm& b : circ.d0() == 2 ? forms2 : forms3) {
      const bool li = check_left_invariant(circ, b).ok;
      EXPECT_EQ(li, left_invariant_direct(circ, b));
      EXPECT_EQ(li, check_left_invariant_expanded(circ, b).ok);
      if (li) {
        ++positives;
        EXPECT_TRUE(check_left_invariant_exchange(circ, b).ok);
      }
    }
  }
  EXPECT_GT(positives, 30);
}

TEST(FormLemmas, Sl2Form) {
  const BilinearForm b = sl2_form();
  EXPECT_TRUE(check_left_invariant(sl2_induced(), b).ok);
  EXPECT_TRUE(check_left_invariant_expanded(sl2_induced(), b).ok);
  EXPECT_TRUE(check_left_invariant_exchange(sl2_induced(), b).ok);
}

TEST(SdplFromForm, Sl2Table) {
  const SDPLAlgebra s = sdpl_from_form(sl2_induced(), sl2_form());
  EXPECT_EQ(s.succ(), sl2_succ());
  EXPECT_EQ(s.prec(), sl2_prec());
}

TEST(SdplFromForm, ZeroAndErrors) {
  const SDPLAlgebra z = sdpl_from_form(Tensor3(2), BilinearForm{Matrix{{1, 1}, {1, 0}}});
  EXPECT_EQ(z.succ(), Tensor3(2));
  EXPECT_EQ(z.prec(), Tensor3(2));
  EXPECT_EQ(code_of([] { sdpl_from_form(sl2_induced(), BilinearForm{Matrix(3, 3)}); }), ErrorCode::DegenerateForm);
  Matrix ns = sl2_form().m;
  ns(0, 1) = 1;
  EXPECT_EQ(code_of([&] { sdpl_from_form(sl2_induced(), BilinearForm{ns}); }), ErrorCode::NotSymmetric);
  EXPECT_EQ(code_of([] { sdpl_from_form(sl2_induced(), BilinearForm{Matrix::identity(3)}); }),
            ErrorCode::NotLeftInvariant);
  EXPECT_EQ(code_of([] { sdpl_from_form(table(2, {{0, 0, {0, 1}}, {1, 0, {1, 0}}}), BilinearForm{Matrix::identity(2)}); }),
            ErrorCode::NotLeibniz);
}

TEST(SdplFromForm, RoundTripWithQuadraticForms) {
  Rng rng(209);
  std::vector<std::pair<Tensor3, BilinearForm>> seeds = {{sl2_induced(), sl2_form()}, {sl2_bracket(), sl2_form()}};
  for (int t = 0; t < 40; ++t) {
    const Tensor3 circ = random_leibniz(rng, 2);
    for (const BilinearForm& b : search_left_invariant_forms(circ, -1, 1)) seeds.emplace_back(circ, b);
  }
  ASSERT_GT(seeds.size(), 4u);
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    const Matrix g = random_invertible(rng, seeds[k].first.d0());
    const Tensor3 circ = change_basis(seeds[k].first, g);
    const BilinearForm b = transport(seeds[k].second, g);
    const SDPLAlgebra s = sdpl_from_form(circ, b);
    EXPECT_EQ(s.circ(), circ);
    EXPECT_TRUE(quadratic_form_of(s, b).ok);
    // reading circ and B back gives the same SDPL
    EXPECT_EQ(sdpl_from_form(s.circ(), b), s);
  }
}

TEST(QuadraticForm, Sl2AndConsequences) {
  const SDPLAlgebra s(sl2_succ(), sl2_prec());
  const BilinearForm b = sl2_form();
  EXPECT_TRUE(quadratic_form_of(s, b).ok);
  EXPECT_TRUE(check_left_invariant(s.circ(), b).ok);
  EXPECT_TRUE(check_succ_balance(s.split(), b).ok);
  EXPECT_TRUE(check_succ_exchange(s.split(), b).ok);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        EXPECT_EQ(b(s.succ().fiber(i, j), unit_vec(3, k)), b(unit_vec(3, i), s.succ().fiber(k, j)));
  EXPECT_FALSE(quadratic_form_of(s, BilinearForm{Matrix(3, 3)}).ok);
}

TEST(QuadraticForm, ConsequencesOnRandomInstances) {
  Rng rng(210);
  int positives = 0, negatives = 0;
  const std::vector<BilinearForm> forms = symmetric_forms(3, -1, 1);
  for (int t = 0; t < 30; ++t) {
    const SplitAlgebra sp = valid_split(rng);
    if (!check_sdpl(sp).ok) continue;
    const SDPLAlgebra s(sp);
    for (std::size_t f = 0; f < forms.size(); f += 7) {
      const BilinearForm& b = forms[f];
      const bool q = quadratic_form_of(s, b).ok;
      if (!q) {
        negatives += b.nondegenerate();
        continue;
      }
      ++positives;
      EXPECT_TRUE(check_left_invariant(s.circ(), b).ok);
      EXPECT_TRUE(check_succ_balance(s.split(), b).ok);
      EXPECT_TRUE(check_succ_exchange(s.split(), b).ok);
    }
    // the transported sl2 form is always quadratic for transported sl2 data
    const Matrix g = random_invertible(rng, 3);
    const SDPLAlgebra s2(transport(sl2_split(), g));
    const BilinearForm b2 = transport(sl2_form(), g);
    ASSERT_TRUE(quadratic_form_of(s2, b2).ok);
    ++positives;
    EXPECT_TRUE(check_succ_exchange(s2.split(), b2).ok);
  }
  EXPECT_GT(positives, 10);
  EXPECT_GT(negatives, 10);
}

TEST(SdplRep, AdjointCoadjointAndZero) {
  const SDPLAlgebra s(sl2_succ(), sl2_prec());
  const SDPLRep ad = adjoint_sdpl_rep(s);
  EXPECT_EQ(ad.l_succ, left_mult(sl2_succ()));
  EXPECT_EQ(ad.r_succ, right_mult(sl2_succ()));
  EXPECT_EQ(ad.l_prec, left_mult(sl2_prec()));
  EXPECT_TRUE(check_sdpl_rep(s, ad).ok);
  const SDPLRep co = coadjoint_sdpl_rep(s);
  EXPECT_EQ(co.l_succ, family_add(dual_family(left_mult(sl2_succ())), dual_family(right_mult(sl2_succ()))));
  EXPECT_EQ(co.r_succ, family_scale(-1, dual_family(right_mult(sl2_succ()))));
  EXPECT_EQ(co.l_prec, family_scale(-1, dual_family(right_mult(s.circ()))));
  EXPECT_TRUE(check_sdpl_rep(s, co).ok);
  const SDPLAlgebra z(Tensor3(2), Tensor3(2));
  const SDPLRep zr{2, zero_family(2, 2), zero_family(2, 2), zero_family(2, 2)};
  EXPECT_TRUE(check_sdpl_rep(z, zr).ok);
  const SDPLRep zc = coadjoint_sdpl_rep(z);
  EXPECT_EQ(zc.l_succ, zero_family(2, 2));
  EXPECT_EQ(zc.r_succ, zero_family(2, 2));
  EXPECT_EQ(zc.l_prec, zero_family(2, 2));
}

TEST(SdplRep, DualOfRepresentationIsRepresentation) {
  Rng rng(211);
  int checked = 0, rejected = 0;
  for (int t = 0; t < 60; ++t) {
    const SplitAlgebra sp = valid_split(rng);
    if (!check_sdpl(sp).ok) continue;
    const SDPLAlgebra s(sp);
    SDPLRep r = t % 2 ? adjoint_sdpl_rep(s) : coadjoint_sdpl_rep(s);
    r = conjugate(r, random_invertible(rng, 3));
    ASSERT_TRUE(check_sdpl_rep(s, r).ok);
    EXPECT_TRUE(check_sdpl_rep(s, dual_sdpl_rep(r)).ok);
    ++checked;
    SDPLRep bad = r;
    bad.l_prec[static_cast<std::size_t>(uniform_int(rng, 0, 2))](0, 0) += 1;
    rejected += !check_sdpl_rep(s, bad).ok;
  }
  EXPECT_GT(checked, 20);
  EXPECT_GT(rejected, 0);
}

TEST(Bullet, DefinedFromPieces) {
  const SplitAlgebra s = sl2_split();
  const Tensor3 b = bullet_product(s);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(b.fiber(i, j), s.succ().fiber(i, j) - s.prec().fiber(j, i));
}
