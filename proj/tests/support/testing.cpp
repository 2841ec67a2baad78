#include "testing.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace opsplit::testing {

long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Scalar small_rational(Rng& rng) {
  Scalar s(uniform_int(rng, -3, 3), uniform_int(rng, 1, 3));
  s.canonicalize();
  return s;
}

Vec random_vec(Rng& rng, std::size_t n, long lo, long hi) {
  Vec v(n);
  for (auto& x : v) x = uniform_int(rng, lo, hi);
  return v;
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform_int(rng, lo, hi);
  return m;
}

Matrix random_invertible(Rng& rng, std::size_t n, long lo, long hi) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n, lo, hi);
    if (rank(m) == n) return m;
  }
}

Tensor3 random_tensor(Rng& rng, std::size_t n, long lo, long hi, double density) {
  std::bernoulli_distribution keep(density);
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (keep(rng)) t(i, j, k) = uniform_int(rng, lo, hi);
  return t;
}

MatFamily random_family(Rng& rng, std::size_t count, std::size_t dim, long lo, long hi) {
  MatFamily f;
  for (std::size_t i = 0; i < count; ++i) f.push_back(random_matrix(rng, dim, dim, lo, hi));
  return f;
}

Tensor3 table(std::size_t n, const std::vector<Product>& products) {
  Tensor3 t(n);
  for (const Product& p : products)
    for (std::size_t k = 0; k < n; ++k) t(p.i, p.j, k) = p.coeffs.at(k);
  return t;
}

namespace {
constexpr std::size_t X = 0, H = 1, Y = 2;
}

Tensor3 sl2_bracket() {
  return table(3, {{H, X, {2, 0, 0}},
                   {X, H, {-2, 0, 0}},
                   {H, Y, {0, 0, -2}},
                   {Y, H, {0, 0, 2}},
                   {X, Y, {0, 1, 0}},
                   {Y, X, {0, -1, 0}}});
}

Matrix sl2_averaging() {
  Matrix p(3, 3);
  p.set_column(X, Vec{2, 2, 4});
  p.set_column(H, Vec{2, 2, 4});
  p.set_column(Y, Vec{1, 1, 2});
  return p;
}

BilinearForm sl2_form() {
  Matrix m(3, 3);
  m(X, Y) = 1;
  m(Y, X) = 1;
  m(H, H) = 2;
  return BilinearForm{m};
}

Tensor3 sl2_induced() {
  return table(3, {{X, X, {4, -4, 0}},
                   {H, X, {4, -4, 0}},
                   {X, Y, {0, 2, -4}},
                   {H, Y, {0, 2, -4}},
                   {X, H, {-4, 0, 8}},
                   {H, H, {-4, 0, 8}},
                   {Y, X, {2, -2, 0}},
                   {Y, Y, {0, 1, -2}},
                   {Y, H, {-2, 0, 4}}});
}

Tensor3 sl2_succ() {
  return table(3, {{X, X, {4, -4, 0}},
                   {X, Y, {-2, 0, -8}},
                   {X, H, {0, 4, 16}},
                   {Y, X, {4, 0, 4}},
                   {Y, Y, {0, 1, -2}},
                   {Y, H, {-4, -2, 0}},
                   {H, X, {0, -8, -8}},
                   {H, Y, {2, 4, 0}},
                   {H, H, {-4, 0, 8}}});
}

Tensor3 sl2_prec() {
  // three listed products, completed by anticommutativity
  return table(3, {{X, Y, {2, 2, 4}},
                   {Y, X, {-2, -2, -4}},
                   {X, H, {-4, -4, -8}},
                   {H, X, {4, 4, 8}},
                   {Y, H, {2, 2, 4}},
                   {H, Y, {-2, -2, -4}}});
}

Vec mul(const Tensor3& t, const Vec& u, const Vec& v) {
  const std::size_t n = t.d2();
  Vec out(n);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (u[i] == 0 || v[j] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] += u[i] * v[j] * t(i, j, k);
    }
  return out;
}

bool leibniz_direct(const Tensor3& t) {
  const std::size_t n = t.d0();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Vec x = unit_vec(n, a), y = unit_vec(n, b), z = unit_vec(n, c);
        const Vec lhs = mul(t, x, mul(t, y, z));
        const Vec rhs = mul(t, mul(t, x, y), z) + mul(t, y, mul(t, x, z));
        if (lhs != rhs) return false;
      }
  return true;
}

bool lie_direct(const Tensor3& t) {
  const std::size_t n = t.d0();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (t.fiber(a, b) + t.fiber(b, a) != zero_vec(n)) return false;
      for (std::size_t c = 0; c < n; ++c) {
        const Vec x = unit_vec(n, a), y = unit_vec(n, b), z = unit_vec(n, c);
        const Vec jac = mul(t, x, mul(t, y, z)) + mul(t, y, mul(t, z, x)) + mul(t, z, mul(t, x, y));
        if (jac != zero_vec(n)) return false;
      }
    }
  return true;
}

bool averaging_direct(const Tensor3& lie, const Matrix& p) {
  const std::size_t n = lie.d0();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vec px = p * unit_vec(n, a);
      if (mul(lie, px, p * unit_vec(n, b)) != p * mul(lie, px, unit_vec(n, b))) return false;
    }
  return true;
}

Tensor3 abelian(std::size_t n) { return Tensor3(n); }

Tensor3 affine_2d() { return table(2, {{0, 1, {0, 1}}, {1, 0, {0, -1}}}); }

Tensor3 heisenberg() { return table(3, {{0, 1, {0, 0, 1}}, {1, 0, {0, 0, -1}}}); }

Tensor3 affine_plus_line() { return table(3, {{0, 1, {0, 1, 0}}, {1, 0, {0, -1, 0}}}); }

namespace {

const std::vector<Matrix>& heisenberg_averaging() {
  static const std::vector<Matrix> ops = search_averaging(heisenberg(), -1, 1);
  return ops;
}

const std::vector<Matrix>& affine_averaging() {
  static const std::vector<Matrix> ops = search_averaging(affine_2d(), -2, 2);
  return ops;
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(v.size()) - 1))];
}

Tensor3 raw_leibniz(Rng& rng, std::size_t n) {
  const long family = uniform_int(rng, 0, 4);
  switch (family) {
    case 0: {
      // e0 acting on the span of the others by a random matrix
      Tensor3 t(n);
      for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b) t(0, b, a) = uniform_int(rng, -2, 2);
      return t;
    }
    case 1: {
      Tensor3 t(n);
      t(0, 0, 1) = 1;
      if (n == 3 && uniform_int(rng, 0, 1) == 1) t(0, 2, 1) = uniform_int(rng, -1, 1);
      return t;
    }
    case 2: {
      if (n == 2) return affine_2d();
      Tensor3 t = affine_plus_line();
      t(0, 2, 2) = uniform_int(rng, -2, 2);
      return t;
    }
    case 3: {
      if (n == 2) return induced_leibniz(affine_2d(), pick(rng, affine_averaging()));
      if (uniform_int(rng, 0, 1) == 0) return induced_leibniz(sl2_bracket(), small_rational(rng) * sl2_averaging());
      return induced_leibniz(heisenberg(), pick(rng, heisenberg_averaging()));
    }
    default:
      return n == 2 ? affine_2d() : (uniform_int(rng, 0, 1) == 0 ? sl2_bracket() : heisenberg());
  }
}

}  // namespace

Tensor3 random_leibniz(Rng& rng, std::size_t n) {
  Tensor3 t = raw_leibniz(rng, n);
  return change_basis(t, random_invertible(rng, n));
}

Tensor3 random_lie(Rng& rng) {
  static const std::vector<Tensor3> bases = {sl2_bracket(), heisenberg(), affine_plus_line(), abelian(3)};
  return change_basis(pick(rng, bases), random_invertible(rng, 3));
}

namespace {

// Calls f on every n x n matrix with entries in [lo, hi].
void for_each_matrix(std::size_t n, long lo, long hi, const std::function<void(const Matrix&)>& f) {
  Matrix m(n, n);
  const std::size_t cells = n * n;
  std::vector<long> digits(cells, lo);
  for (;;) {
    for (std::size_t c = 0; c < cells; ++c) m(c / n, c % n) = digits[c];
    f(m);
    std::size_t c = 0;
    while (c < cells && digits[c] == hi) digits[c++] = lo;
    if (c == cells) return;
    ++digits[c];
  }
}

}  // namespace

std::vector<Matrix> search_averaging(const Tensor3& lie, long lo, long hi) {
  std::vector<Matrix> out;
  for_each_matrix(lie.d0(), lo, hi, [&](const Matrix& p) {
    if (averaging_direct(lie, p)) out.push_back(p);
  });
  return out;
}

std::vector<Matrix> search_admissible(const Tensor3& lie, const Matrix& p, long lo, long hi) {
  const std::size_t n = lie.d0();
  std::vector<Matrix> out;
  for_each_matrix(n, lo, hi, [&](const Matrix& q) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Vec px = p * unit_vec(n, a);
        const Vec lhs = mul(lie, px, q * unit_vec(n, b));
        if (lhs != q * mul(lie, px, unit_vec(n, b))) return;
        if (lhs != q * mul(lie, unit_vec(n, a), q * unit_vec(n, b))) return;
      }
    out.push_back(q);
  });
  return out;
}

Comult delta_dual_affine() {
  Tensor3 d(2);
  d(1, 0, 1) = 1;
  d(1, 1, 0) = -1;
  return Comult{d};
}

std::vector<BilinearForm> search_left_invariant_forms(const Tensor3& circ, long lo, long hi) {
  const std::size_t n = circ.d0();
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
  std::vector<long> digits(cells.size(), lo);
  std::vector<BilinearForm> out;
  for (;;) {
    Matrix m(n, n);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      m(cells[c].first, cells[c].second) = digits[c];
      m(cells[c].second, cells[c].first) = digits[c];
    }
    bool ok = rank(m) == n;
    for (std::size_t a = 0; ok && a < n; ++a)
      for (std::size_t b = 0; ok && b < n; ++b)
        for (std::size_t c = 0; ok && c < n; ++c) {
          const Vec x = unit_vec(n, a), y = unit_vec(n, b), z = unit_vec(n, c);
          ok = dot(mul(circ, x, y), m * z) + dot(y, m * mul(circ, x, z)) == 0;
        }
    if (ok) out.push_back(BilinearForm{m});
    std::size_t c = 0;
    while (c < cells.size() && digits[c] == hi) digits[c++] = lo;
    if (c == cells.size()) return out;
    ++digits[c];
  }
}

Tensor3 perturb(Rng& rng, const Tensor3& t) {
  Tensor3 out = t;
  const auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(t.d0()) - 1));
  const auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(t.d1()) - 1));
  const auto k = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(t.d2()) - 1));
  out(i, j, k) += uniform_int(rng, 0, 1) == 0 ? -1 : 1;
  return out;
}

}  // namespace opsplit::testing
