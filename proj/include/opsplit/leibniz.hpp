#pragma once

#include "opsplit/algebra.hpp"
#include "opsplit/splitting.hpp"

namespace opsplit {

// Direct check of the Leibniz module identities on (l, r, V):
//   l(x.y) = l(x)l(y) - l(y)l(x)
//   r(x.y) = l(x)r(y) - r(y)l(x)
//   r(y)l(x) = -r(y)r(x)
// Throws Error(NotLeibniz) if circ is not Leibniz.
Report check_leibniz_rep(const Tensor3& circ, const Rep& rep);

// (l, r) -> (l*, -l* - r*).
Rep dualize_leibniz_rep(const Rep& rep);

// x bullet y = x succ y - y prec x
Tensor3 bullet_product(const SplitAlgebra& s);

enum class TypeARoute { TypeA, DualTypeB, Identities };

// Three equivalent characterizations of a type-a pre-Leibniz algebra.
Report check_type_a(const SplitAlgebra& s, TypeARoute route);

// prec anticommutative, circ Leibniz, and
//   x.(y prec z) = (x.y) prec z + y prec (x.z) = x prec (y prec z).
Report check_sdpl(const SplitAlgebra& s);

// A split algebra that passed check_sdpl at construction.
class SDPLAlgebra {
 public:
  // Throws Error(InvalidSdpl) naming the first violated identity.
  explicit SDPLAlgebra(SplitAlgebra s);
  SDPLAlgebra(Tensor3 succ, Tensor3 prec) : SDPLAlgebra(SplitAlgebra(std::move(succ), std::move(prec))) {}

  const SplitAlgebra& split() const { return split_; }
  std::size_t dim() const { return split_.dim(); }
  const Tensor3& succ() const { return split_.succ(); }
  const Tensor3& prec() const { return split_.prec(); }
  const Tensor3& circ() const { return split_.circ(); }

  friend bool operator==(const SDPLAlgebra& a, const SDPLAlgebra& b) { return a.split_ == b.split_; }

 private:
  SplitAlgebra split_;
};

// Form identities on a multiplication.
//   left invariance:   B(x.y, z) + B(y, x.z) = 0
//   expanded variant:  B(x.y, z) = -B(y, x.z + z.x) - B(x, z.y)
//   exchange pair:     B(x.y, z) = -B(y, x.z) = -B(x.z, y)
Report check_left_invariant(const Tensor3& circ, const BilinearForm& b);
Report check_left_invariant_expanded(const Tensor3& circ, const BilinearForm& b);
Report check_left_invariant_exchange(const Tensor3& circ, const BilinearForm& b);

// Form identities on a split.
//   prec invariance:  B(x prec y, z) = -B(x, z.y)
//   succ balance:     B(x succ y, z) = -B(y, x.z + z.x)
//   succ exchange:    B(x succ y, z) = B(x, z succ y)
Report check_prec_invariance(const SplitAlgebra& s, const BilinearForm& b);
Report check_succ_balance(const SplitAlgebra& s, const BilinearForm& b);
Report check_succ_exchange(const SplitAlgebra& s, const BilinearForm& b);

// Splits a Leibniz algebra with a nondegenerate symmetric left-invariant form by
//   B(x succ y, z) = -B(y, x.z + z.x),  B(x prec y, z) = -B(x, z.y).
// Throws NotLeibniz, DegenerateForm, NotSymmetric, NotLeftInvariant.
SDPLAlgebra sdpl_from_form(const Tensor3& circ, const BilinearForm& b);

// B symmetric, nondegenerate and prec-invariant.
Report quadratic_form_of(const SDPLAlgebra& s, const BilinearForm& b);

// Representation (l_succ, r_succ, l_prec, V) with l_circ = l_succ + l_prec, r_circ = r_succ - l_prec.
struct SDPLRep {
  std::size_t vdim = 0;
  MatFamily l_succ, r_succ, l_prec;

  MatFamily l_circ() const { return family_add(l_succ, l_prec); }
  MatFamily r_circ() const { return family_add(r_succ, family_scale(-1, l_prec)); }
};

// (l_circ, r_circ) is a Leibniz representation and
//   l_circ(x)l_prec(y) = l_prec(x.y) + l_prec(y)l_circ(x) = l_prec(x)l_prec(y)
//   r_circ(x prec y) = l_prec(x)r_circ(y) - l_prec(y)r_circ(x) = -l_prec(x prec y)
Report check_sdpl_rep(const SDPLAlgebra& s, const SDPLRep& rep);

SDPLRep adjoint_sdpl_rep(const SDPLAlgebra& s);  // (L_succ, R_succ, L_prec)
// (l*_succ + r*_succ, -r*_succ, -r*_circ) on V*.
SDPLRep dual_sdpl_rep(const SDPLRep& rep);
SDPLRep coadjoint_sdpl_rep(const SDPLAlgebra& s);

}  // namespace opsplit
