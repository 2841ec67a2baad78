#pragma once

#include <optional>

#include "opsplit/algebra.hpp"
#include "opsplit/leibniz.hpp"
#include "opsplit/splitting.hpp"

namespace opsplit {

// Candidate (Lie bracket, P, optional Q). Nothing is validated on construction;
// use validate_averaging for the invariants.
struct AveragingLieAlgebra {
  Tensor3 bracket;
  Matrix p;
  std::optional<Matrix> q;
};

// [P(x), P(y)] = P([P(x), y]). Throws Error(NotLie).
Report check_averaging(const Tensor3& lie, const Matrix& p);

// x.y = [P(x), y]
Tensor3 induced_leibniz(const Tensor3& lie, const Matrix& p);

// [P(x), Q(y)] = Q([P(x), y]) = Q([x, Q(y)]). Throws Error(NotAveraging) (or NotLie).
Report check_admissible(const Tensor3& lie, const Matrix& p, const Matrix& q);

// Bracket is Lie, P averaging, and (P, Q) admissible when Q is present. Never throws on
// identity failures.
Report validate_averaging(const AveragingLieAlgebra& al);

// B([x, y], z) = B(x, [y, z])
Report check_invariant_form(const Tensor3& lie, const BilinearForm& b);

// The map with B(P(x), y) = B(x, Phat(y)), i.e. B^-1 P^T B. Throws Error(DegenerateForm).
Matrix adjoint_map(const Matrix& p, const BilinearForm& b);

// rho(Px)alpha(v) = alpha(rho(Px)v) = alpha(rho(x)alpha(v)) checked directly.
// Throws Error(NotLieRep) unless (rho, -rho) is a Lie representation.
Report check_avg_rep(const Tensor3& lie, const Matrix& p, const MatFamily& rho, const Matrix& alpha);
// Same verdict via the semidirect Lie algebra and the averaging check on P + alpha.
Report check_avg_rep_semidirect(const Tensor3& lie, const Matrix& p, const MatFamily& rho, const Matrix& alpha);

// x succ y = [P(x), y] - Q([x, y]),  x prec y = Q([x, y]).
SplitAlgebra admissible_split(const Tensor3& lie, const Matrix& p, const Matrix& q);
// The same split, validated. Throws InvalidSdpl when it is not an SDPL algebra.
SDPLAlgebra sdpl_from_admissible(const Tensor3& lie, const Matrix& p, const Matrix& q);

// Lie algebra End(A) (+) A with [f+x, g+y] = [f,g] + f(y) - g(x), P(f+x) = L(x), Q(f+x) = -R(x).
// Basis: E_ij at index i*n + j (E_ij e_k = delta_jk e_i), then e_k at n*n + k.
// Throws Error(CapExceeded) when n*n + n > cap.
AveragingLieAlgebra endo_double(const Tensor3& mult, std::size_t cap = 64);

}  // namespace opsplit
