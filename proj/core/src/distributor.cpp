#include "tvcat/distributor.hpp"

#include "tvcat/enumerate.hpp"
#include "tvcat/error.hpp"

namespace tvcat {

namespace {

void require_shape(const VMatrix& phi, const TCategory& x, const TCategory& y) {
  if (!x.theory().same_as(y.theory())) fail(ErrorKind::mismatch, "distributor: categories over different theories");
  if (phi.rows() != x.t_size() || phi.cols() != y.size())
    fail(ErrorKind::mismatch, "distributor matrix must be " + std::to_string(x.t_size()) + "x" +
                                  std::to_string(y.size()) + ", got " + std::to_string(phi.rows()) + "x" +
                                  std::to_string(phi.cols()));
}

std::optional<Violation> first_excess(const VMatrix& lhs, const VMatrix& phi, const TCategory& x, const TCategory& y,
                                      const char* law) {
  const Quantale& q = phi.quantale();
  const FinSet tx = x.t_carrier();
  for (std::size_t u = 0; u < phi.rows(); ++u)
    for (std::size_t v = 0; v < phi.cols(); ++v)
      if (!q.leq(lhs(u, v), phi(u, v)))
        return Violation{law, "x=" + tx.elements[u] + ", y=" + y.carrier().elements[v] + ": " + q.format(lhs(u, v)) +
                                  " > " + q.format(phi(u, v))};
  return std::nullopt;
}

}  // namespace

std::optional<Violation> distributor_violation(const VMatrix& phi, const TCategory& x, const TCategory& y) {
  require_shape(phi, x, y);
  const Theory& th = x.theory();
  if (auto v = first_excess(kleisli(th, phi, x.structure(), x.size()), phi, x, y, "phi o a <= phi")) return v;
  return first_excess(kleisli(th, y.structure(), phi, x.size()), phi, x, y, "b o phi <= phi");
}

Checked<Distributor> check_distributor(VMatrix phi, CategoryRef x, CategoryRef y) {
  if (auto v = distributor_violation(phi, *x, *y)) return *v;
  return Distributor{std::move(x), std::move(y), std::move(phi)};
}

Distributor unit_distributor(CategoryRef x) {
  VMatrix a = x->structure();
  return Distributor{x, x, std::move(a)};
}

Distributor kleisli_compose(const Distributor& beta, const Distributor& alpha) {
  if (alpha.cod->size() != beta.dom->size() || !alpha.cod->theory().same_as(beta.dom->theory()))
    fail(ErrorKind::mismatch, "kleisli_compose: middle categories differ");
  return Distributor{alpha.dom, beta.cod,
                     kleisli(alpha.dom->theory(), beta.matrix, alpha.matrix, alpha.dom->size())};
}

Distributor extension(const Distributor& gamma, const Distributor& alpha) {
  if (gamma.dom->size() != alpha.dom->size()) fail(ErrorKind::mismatch, "extension: distributors have different domains");
  const Theory& th = alpha.dom->theory();
  const VMatrix lift = kleisli_lift(th, alpha.matrix, alpha.dom->size());
  return Distributor{alpha.cod, gamma.cod, right_extension(gamma.matrix, lift)};
}

bool distributor_leq(const Distributor& a, const Distributor& b) { return leq_matrix(a.matrix, b.matrix); }

TFunctor mate(const Distributor& phi, std::size_t cap) {
  const TCategory& x = *phi.dom;
  CategoryRef e = exponential_VX(x, cap);
  Map m(phi.cod->size());
  for (std::size_t y = 0; y < m.size(); ++y) m[y] = function_index(x.quantale(), phi.matrix.column(y));
  return TFunctor{phi.cod, std::move(e), std::move(m)};
}

AdjointCandidate left_adjoint_candidate(const Distributor& phi) {
  AdjointCandidate c{extension(unit_distributor(phi.dom), phi), false};
  const Distributor round = kleisli_compose(phi, c.gamma);
  c.is_right_adjoint = leq_matrix(phi.cod->structure(), round.matrix);
  return c;
}

std::vector<Distributor> enumerate_distributors(CategoryRef x, CategoryRef y, std::size_t cap) {
  std::vector<Distributor> out;
  for_each_matrix(x->quantale_ref(), x->t_size(), y->size(), cap, [&](const VMatrix& m) {
    if (!distributor_violation(m, *x, *y)) out.push_back(Distributor{x, y, m});
  });
  return out;
}

std::string to_string(const Distributor& d) { return to_string(d.matrix); }

}  // namespace tvcat
