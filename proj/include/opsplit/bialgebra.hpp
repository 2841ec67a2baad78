#pragma once

#include "opsplit/algebra.hpp"
#include "opsplit/averaging.hpp"
#include "opsplit/leibniz.hpp"
#include "opsplit/splitting.hpp"

namespace opsplit {

// eta(e_k) = sum_{i,j} coeffs(k,i,j) e_i (x) e_j
struct Comult {
  Tensor3 coeffs;

  std::size_t dim() const { return coeffs.d0(); }
  // eta(e_k) as the matrix X(i,j) of e_i (x) e_j coefficients.
  Matrix image(std::size_t k) const;
  // eta(v) for a vector v.
  Matrix image(const Vec& v) const;

  friend bool operator==(const Comult& a, const Comult& b) { return a.coeffs == b.coeffs; }
};

Comult zero_comult(std::size_t n);
Comult operator+(const Comult& a, const Comult& b);

// The comultiplication dual to a multiplication on the dual space: d(k,i,j) = m(i,j,k).
Comult dualize_mult(const Tensor3& m);
Tensor3 dualize_comult(const Comult& c);

// (eta (x) id)eta + (tau (x) id)(id (x) eta)eta - (id (x) eta)eta = 0
Report check_leibniz_coalgebra(const Comult& c);

// eta = vartheta + theta Leibniz, theta = -tau theta,
// (id (x) theta)eta = (eta (x) id)theta + (tau (x) id)(id (x) eta)theta, (id (x) theta)vartheta = 0.
Report check_sdpl_coalgebra(const Comult& vartheta, const Comult& theta);

// The four compatibility identities between an SDPL algebra and an SDPL coalgebra.
// Throws Error(NotCoalgebra) when (vartheta, theta) is not an SDPL coalgebra.
Report check_sdpl_bialgebra(const SDPLAlgebra& s, const Comult& vartheta, const Comult& theta);

class SDPLBialgebra {
 public:
  // Throws NotCoalgebra or NotBialgebra.
  SDPLBialgebra(SDPLAlgebra s, Comult vartheta, Comult theta);

  const SDPLAlgebra& sdpl() const { return sdpl_; }
  const Comult& vartheta() const { return vartheta_; }
  const Comult& theta() const { return theta_; }
  // The SDPL structure on A* dual to (vartheta, theta).
  SDPLAlgebra dual_sdpl() const;

 private:
  SDPLAlgebra sdpl_;
  Comult vartheta_, theta_;
};

// Product on A (+) B:
//   (x+a)(y+b) = xy + l_b(a)y + r_b(b)x + ab + l_a(x)b + r_a(y)a
// l_a, r_a are indexed by a basis of A and act on B; l_b, r_b the other way round.
struct MatchedPairData {
  Tensor3 a, b;
  MatFamily l_a, r_a, l_b, r_b;
};

Tensor3 matched_pair_product(const MatchedPairData& d);

// Leibniz matched pair: both factors Leibniz, both pairs representations, and the six
// compatibility identities "mp1".."mp6".
Report check_matched_pair(const MatchedPairData& d);
// Same question answered by running the relations on matched_pair_product.
Report check_matched_pair_via_product(const MatchedPairData& d, const RelationSet& rs);

// A (+) A* with A at indices 0..n-1 and A* at n..2n-1; A* tensors are in the dual basis.
MatchedPairData leibniz_double_data(const SplitAlgebra& a, const SplitAlgebra& astar);
Tensor3 build_leibniz_double(const SplitAlgebra& a, const SplitAlgebra& astar);
SplitAlgebra build_sdpl_double(const SplitAlgebra& a, const SplitAlgebra& astar);

// B_d(x + a*, y + b*) = <x, b*> + <a*, y>
BilinearForm pairing_form(std::size_t n);

enum class ManinKind { LeibnizLeftInv, SdplQuadratic };

// Leibniz kind: circ Leibniz, both halves closed, B_d left-invariant.
// SDPL kind: split is SDPL, both halves closed under succ and prec, B_d prec-invariant.
// The first half is A, the second A*. Throws Error(BadShape) for odd dimension.
Report check_manin_triple(const Tensor3& circ);
Report check_manin_triple(const SplitAlgebra& split, ManinKind kind);

// Block [offset, offset + n) of a multiplication on a larger space.
Tensor3 restrict_block(const Tensor3& t, std::size_t offset, std::size_t n);

// The five equivalent conditions for a pair of splits on A and A*.
struct ManinChain {
  bool bialgebra = false;        // (a)
  bool leibniz_manin = false;    // (b)
  bool sdpl_manin = false;       // (c)
  bool leibniz_double = false;   // (d)
  bool sdpl_double = false;      // (e)
};
ManinChain evaluate_manin_chain(const SplitAlgebra& a, const SplitAlgebra& astar);

// delta = -tau delta, cyclic co-Jacobi, and the cocycle identity. Throws Error(NotLie).
Report check_lie_bialgebra(const Tensor3& lie, const Comult& delta);
// Same verdict via lie_double: Lie and B_d invariant.
Report check_lie_bialgebra_via_double(const Tensor3& lie, const Comult& delta);

// [x+a*, y+b*] = [x,y] + ad*(a*)y - ad*(b*)x + [a*,b*] + ad*(x)b* - ad*(y)a*
Tensor3 lie_double(const Tensor3& lie, const Tensor3& lie_star);

struct AvgLieBialgebra {
  Tensor3 bracket;
  Comult delta;
  Matrix p, q;
};

// All identities checked directly: Lie bialgebra, averaging, admissible pair, and
//   (Q (x) Q)delta(x) = (Q (x) id)delta(Qx)
//   (Q (x) P)delta(x) = (Q (x) id)delta(Px) = (id (x) P)delta(Px)
Report check_avg_lie_bialgebra(const AvgLieBialgebra& b);
// Lie bialgebra via the double, plus P + Q^T averaging on the double.
Report check_avg_lie_bialgebra_via_double(const AvgLieBialgebra& b);

// vartheta(x) = (Q (x) id)delta(x) - delta(Px), theta(x) = delta(Px), with the SDPL
// structure from (P, Q). Throws Error(NotAvgLieBialgebra).
SDPLBialgebra induce_sdpl_bialgebra(const AvgLieBialgebra& b);

struct ManinDoubles {
  Tensor3 circ;        // [(P + Q^T) u, v] on the Lie double
  SplitAlgebra split;  // succ = circ - prec, prec = (Q + P^T)[u, v]
};
// Throws Error(NotAvgLieBialgebra).
ManinDoubles avg_manin_to_leibniz_manin(const AvgLieBialgebra& b);

}  // namespace opsplit
