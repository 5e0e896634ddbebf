#pragma once

#include <vector>

#include "groupcx/group.hpp"
#include "groupcx/simplicial_complex.hpp"

namespace groupcx {

/// Gruenberg-Kegel complex: vertices are the prime divisors of |G|; a prime
/// subset is a simplex iff the product of its primes occurs as an element
/// order.
struct GKComplex {
  std::vector<int> primes;    // sorted, aligned with complex vertices
  SimplicialComplex complex;
};

GKComplex gk_complex(const FiniteGroup& g);

/// Exactly one facet, equal to the whole prime set. A complex on a single
/// prime is a simplex.
bool is_simplex(const GKComplex& c);

/// d(G): fewest faces of GKC(G) whose vertices cover all primes of |G|.
/// Exact set cover by branch and bound over the facets.
int gk_cover_number(const GKComplex& c, const Caps& caps = {});
int gk_cover_number(const FiniteGroup& g, const Caps& caps = {});

/// GKC(G^n) without constructing G^n: element orders in the power are lcms
/// across components, so a squarefree product appears iff its prime set is a
/// union of at most n faces of GKC(G).
GKComplex gk_power_complex(const GKComplex& base, int n);
GKComplex gk_power_complex(const FiniteGroup& g, int n);

}  // namespace groupcx
