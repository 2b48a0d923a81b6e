#pragma once

#include <optional>

#include "tvcat/report.hpp"
#include "tvcat/tcategory.hpp"

namespace tvcat {

/// Tightest violated cell of phi o a <= phi or b o phi <= phi.
std::optional<Violation> distributor_violation(const VMatrix& phi, const TCategory& x, const TCategory& y);
Checked<Distributor> check_distributor(VMatrix phi, CategoryRef x, CategoryRef y);

/// The structure a of X as the identity distributor 1_X^* : X -o-> X.
Distributor unit_distributor(CategoryRef x);

/// beta o alpha for alpha : X -o-> Y and beta : Y -o-> Z.
Distributor kleisli_compose(const Distributor& beta, const Distributor& alpha);

/// gamma ⟜ alpha : Y -o-> Z for gamma : X -o-> Z and alpha : X -o-> Y, the
/// largest delta with delta o alpha <= gamma.
Distributor extension(const Distributor& gamma, const Distributor& alpha);

bool distributor_leq(const Distributor& a, const Distributor& b);

/// y -> phi(-, y), a T-functor Y -> V^{|X|}; finite V only.
TFunctor mate(const Distributor& phi, std::size_t cap = 4096);

struct AdjointCandidate {
  Distributor gamma;  // extension(1_X^*, phi) : Y -o-> X
  bool is_right_adjoint = false;
};
/// gamma -| phi exactly when 1_Y^* <= phi o gamma.
AdjointCandidate left_adjoint_candidate(const Distributor& phi);

/// All distributors X -o-> Y over a finite quantale, in lexicographic order of
/// entries; throws cap_exceeded when the candidate matrices exceed `cap`.
std::vector<Distributor> enumerate_distributors(CategoryRef x, CategoryRef y, std::size_t cap = 1 << 16);

std::string to_string(const Distributor& d);

}  // namespace tvcat
