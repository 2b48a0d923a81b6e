#pragma once

// Exhaustive law checks shared by the unit tests and the acceptance run.
// Each check counts the instances it examined and keeps the first failure.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tvcat/completion.hpp"

namespace laws {

struct Result {
  std::size_t checked = 0;
  std::optional<std::string> failure;
  bool ok() const { return !failure && checked > 0; }
  void fail(std::string what) {
    if (!failure) failure = std::move(what);
  }
  void merge(const Result& other) {
    checked += other.checked;
    if (other.failure) fail(*other.failure);
  }
};

/// s.r <= t iff s <= t ⟜ r and r.s <= t iff s <= r ⊸ t, plus the hom
/// adjunction on the carrier, over every matrix with sides <= max_dim.
Result galois(const std::string& quantale, std::size_t max_dim);

/// Lawvere hom against the 1/12 grid oracle on random triples, with the
/// adjunction u + w >= v iff w <= hom(u, v) checked at each w.
Result lawvere_grid(std::size_t triples, std::uint64_t seed);

/// Compose and extension over lawvere against min-plus and shortest path
/// oracles on n-node instances.
Result lawvere_min_plus(std::size_t nodes, std::uint64_t seed);

/// Every T-category on at most max_size points (labelled).
std::vector<tvcat::CategoryRef> all_categories(const tvcat::TheoryRef& th, std::size_t max_size);

/// psi(x) = <T y(x), psi> on PX and y fully faithful.
Result yoneda_lemma(const tvcat::TheoryRef& th, std::size_t max_size);

/// <T mate(psi)(z), mate(phi)(y)> = (phi ⟜ psi)(z, y).
Result yoneda_theorem(const tvcat::TheoryRef& th, std::size_t max_size);

/// The three clauses of the calculus rules for extensions, over every
/// distributor between categories of the universe (up to isomorphism).
Result calculus_rules(const tvcat::TheoryRef& th, std::size_t max_size);

/// The three cancellation clauses for phi-dense functors on triangles
/// h ≅ g . f.
Result composition_cancellation(const tvcat::TheoryRef& th, const tvcat::PhiClass& phi, std::size_t max_size);

struct Survey {
  tvcat::CategoryRef category;
  tvcat::CocompleteVerdict verdict;
};

/// cocomplete_check on every labelled category up to max_size, sharing one
/// injectivity universe with |B| <= max_b.
std::vector<Survey> cocomplete_survey(const tvcat::TheoryRef& th, const tvcat::PhiClass& phi, std::size_t max_size,
                                      std::size_t max_b);

std::string describe(const tvcat::TCategory& x);

}  // namespace laws
