#include "groupcx/gk.hpp"

#include <algorithm>
#include <unordered_set>

namespace groupcx {

namespace {

std::vector<std::string> prime_labels(const std::vector<int>& primes) {
  std::vector<std::string> out;
  out.reserve(primes.size());
  for (int p : primes) out.push_back(std::to_string(p));
  return out;
}

// facets of a complex over prime-index bitmasks; small universes only
GKComplex complex_from_masks(std::vector<int> primes,
                             const std::vector<uint32_t>& simplex_masks) {
  std::vector<std::vector<int>> candidates;
  candidates.reserve(simplex_masks.size());
  for (uint32_t mask : simplex_masks) {
    std::vector<int> f;
    for (size_t i = 0; i < primes.size(); ++i)
      if (mask & (1u << i)) f.push_back(int(i));
    candidates.push_back(std::move(f));
  }
  GKComplex out;
  out.complex = SimplicialComplex::from_facets(prime_labels(primes),
                                               std::move(candidates));
  out.primes = std::move(primes);
  return out;
}

uint32_t mask_of_facet(const Simplex& f) {
  uint32_t m = 0;
  for (int v : f.vertices) m |= 1u << v;
  return m;
}

// fewest facet masks whose union covers `target`; facets are pre-intersected
// with the target by the callers
int min_cover(uint32_t target, const std::vector<uint32_t>& pieces, int best_cap) {
  if (target == 0) return 0;
  // branch on the lowest uncovered prime
  int bit = __builtin_ctz(target);
  int best = best_cap;
  for (uint32_t piece : pieces) {
    if (!(piece & (1u << bit))) continue;
    if (best <= 1) break;
    int sub = min_cover(target & ~piece, pieces, best - 1);
    if (sub + 1 < best) best = sub + 1;
  }
  return best;
}

}  // namespace

GKComplex gk_complex(const FiniteGroup& g) {
  std::vector<int> primes = g.prime_divisors();
  std::unordered_set<long long> orders;
  for (int o : g.order_spectrum()) orders.insert(o);

  const int np = int(primes.size());
  std::vector<uint32_t> simplices;
  for (uint32_t mask = 1; mask < (1u << np); ++mask) {
    long long product = 1;
    for (int i = 0; i < np; ++i)
      if (mask & (1u << i)) product *= primes[i];
    if (orders.count(product)) simplices.push_back(mask);
  }
  return complex_from_masks(std::move(primes), simplices);
}

bool is_simplex(const GKComplex& c) {
  if (c.primes.empty()) return true;  // trivial group: empty simplex
  return c.complex.facets().size() == 1 &&
         c.complex.facets()[0].size() == int(c.primes.size());
}

int gk_cover_number(const GKComplex& c, const Caps& caps) {
  const int np = int(c.primes.size());
  if (np > caps.primes_cap) throw CapExceeded::primes(np, caps.primes_cap);
  if (np == 0) return 1;  // trivial group: one empty simplex covers nothing
  std::vector<uint32_t> pieces;
  pieces.reserve(c.complex.facets().size());
  for (const auto& f : c.complex.facets()) pieces.push_back(mask_of_facet(f));
  uint32_t all = np == 32 ? ~0u : (1u << np) - 1;
  return min_cover(all, pieces, np + 1);
}

int gk_cover_number(const FiniteGroup& g, const Caps& caps) {
  return gk_cover_number(gk_complex(g), caps);
}

GKComplex gk_power_complex(const GKComplex& base, int n) {
  if (n < 1)
    throw ValidationError(ValidationError::Kind::BadSpec,
                          "gk_power_complex: n must be positive");
  const int np = int(base.primes.size());
  std::vector<uint32_t> facet_masks;
  for (const auto& f : base.complex.facets())
    facet_masks.push_back(mask_of_facet(f));

  std::vector<uint32_t> simplices;
  for (uint32_t mask = 1; mask < (1u << np); ++mask) {
    // faces of the base complex inside `mask` are facet-intersections
    std::vector<uint32_t> pieces;
    for (uint32_t fm : facet_masks)
      if (fm & mask) pieces.push_back(fm & mask);
    if (min_cover(mask, pieces, np + 1) <= n) simplices.push_back(mask);
  }
  return complex_from_masks(base.primes, simplices);
}

GKComplex gk_power_complex(const FiniteGroup& g, int n) {
  return gk_power_complex(gk_complex(g), n);
}

}  // namespace groupcx
