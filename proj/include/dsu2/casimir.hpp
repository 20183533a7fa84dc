#pragma once

#include <optional>

#include "dsu2/algebra.hpp"
#include "dsu2/repbuild.hpp"

namespace dsu2 {

/// A solution rho of  s rho(z) - rho(G(z)) = f(z)  in an exponential
/// polynomial ansatz.
struct CasimirSolution {
  ExpPoly rho;
  /// Dimension of the homogeneous solution space inside the ansatz.
  unsigned kernel_dim = 0;
  /// s rho(z) - rho(G(z)) - f(z); zero (exact) or below 1e-10 (float).
  ExpPoly residual;
  unsigned max_degree = 0;
};

/// Solves the consistency equation with the ansatz z^j b^z, j <= max_degree,
/// b ranging over 1, the bases of f, and their images under b -> b^alpha for
/// affine G = alpha z + beta. Without an explicit max_degree, tries
/// deg(f)+1 .. deg(f)+3. The returned rho has no component along the kernel
/// (orthogonal in the monomial-coefficient inner product), so it is unique.
/// Throws NoSolutionInAnsatz or ClosureError.
CasimirSolution solve_rho(const AlgebraSpec& spec, std::optional<unsigned> max_degree = std::nullopt);

/// s^m rho(eta): the eigenvalue of C on F(eta, m).
Scalar casimir_eigenvalue(const AlgebraSpec& spec, const ExpPoly& rho, const Scalar& eta, unsigned m);

/// C = J+ J- + rho(J0) on the module.
Matrix casimir_matrix(const ModuleRep& rep, const ExpPoly& rho);

/// [C, J0] = 0, [J-, C]_s = 0, [C, J+]_s = 0 and C = diag(s^m rho(eta)); for
/// s = -1 additionally C^2 commutes with all three generators.
CheckReport check_casimir_matrix(const ModuleRep& rep, const ExpPoly& rho, double tol = 1e-10);

/// For s = exp(2 pi i / k): D = C^k commutes with J0, J+ and J- and acts as
/// rho(eta)^k on every basis vector.
CheckReport check_root_of_unity_casimir(const ModuleRep& rep, const ExpPoly& rho, unsigned k, double tol = 1e-8);

}  // namespace dsu2
