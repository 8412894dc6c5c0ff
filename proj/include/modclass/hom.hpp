#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "modclass/module.hpp"
#include "modclass/zpa.hpp"

namespace modclass {

// Hom_R(dom, cod) as a finite abelian group: an independent generating
// family (each generator given by the images of the additive basis of dom)
// and the order of each generator. The group is the direct sum of the cyclic
// groups they generate.
struct HomSpace {
  ModulePtr dom;
  ModulePtr cod;
  std::vector<std::vector<std::uint32_t>> gens;
  std::vector<std::uint64_t> orders;

  // |Hom|, saturating at UINT64_MAX
  std::uint64_t count() const;
  bool enumerable() const;  // count() <= hom cap
  ModuleHom generator(std::size_t i) const { return hom_from_basis_images(dom, cod, gens[i]); }
  std::vector<ModuleHom> generator_homs() const;
  // basis images of sum c_i gens_i
  std::vector<std::uint32_t> combine(const std::vector<std::uint64_t>& coeffs) const;

  // Visits the basis images of every element; a callback returning true stops
  // the walk. Throws HomSpaceTooLarge past the cap.
  template <class F>
  void for_each(F&& f) const {
    require_enumerable();
    const std::size_t k = gens.size();
    const std::size_t r = dom->group().rank();
    std::vector<std::uint32_t> cur(r, 0);
    std::vector<std::uint64_t> digit(k, 0);
    while (true) {
      if constexpr (std::is_same_v<std::invoke_result_t<F&, const std::vector<std::uint32_t>&>, bool>) {
        if (f(std::as_const(cur))) return;
      } else {
        f(std::as_const(cur));
      }
      std::size_t i = k;
      while (i-- > 0) {
        for (std::size_t b = 0; b < r; ++b) cur[b] = cod->add(cur[b], gens[i][b]);
        if (++digit[i] < orders[i]) break;
        digit[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) return;
    }
  }
  std::vector<ModuleHom> all() const;

 private:
  void require_enumerable() const;
};

HomSpace hom_space(const ModulePtr& dom, const ModulePtr& cod);
// End(M), cached on M.
HomSpace endomorphisms(const ModulePtr& m);

// Solves alpha∘u = f for alpha: Y -> Z given u: X -> Y, many f at once.
class Factorizer {
 public:
  Factorizer(const ModuleHom& u, const ModulePtr& target);
  // Basis images of some alpha with alpha∘u = f, if one exists.
  std::optional<std::vector<std::uint32_t>> solve(const ModuleHom& f) const;
  std::optional<std::vector<std::uint32_t>> solve_images(const std::vector<std::uint32_t>& f_basis_images) const;
  const HomSpace& homs() const { return homs_; }

 private:
  struct PrimeBlock {
    std::uint32_t prime = 0;
    std::uint32_t top = 0;                // exponent A of the target p-part
    std::vector<std::size_t> unknowns;    // generator indices
    std::vector<std::size_t> target_factors;
    std::optional<ZpaSolver> solver;
  };
  ModuleHom u_;
  ModulePtr target_;
  HomSpace homs_;
  std::vector<PrimeBlock> blocks_;
};

std::optional<ModuleHom> factor_through(const ModuleHom& u, const ModuleHom& f);

// Given the inclusion A -> M and f: A -> T, some h: M -> T restricting to f.
std::optional<ModuleHom> extend_along(const ModuleHom& inclusion, const ModuleHom& f);
std::optional<ModuleHom> extension_exists(const Submodule& a, const ModuleHom& f_on_realized_a);

// Retraction test. Returns a complement when A is a direct summand of M.
std::optional<IndexSet> retraction_complement(const ModulePtr& m, const IndexSet& a);
bool is_summand(const ModulePtr& m, const IndexSet& a);
// First complement in canonical submodule order (falls back to the kernel of
// a retraction when the lattice is past its cap).
std::optional<Submodule> summand_complement(const Submodule& a);

struct IsoResult {
  bool isomorphic = false;
  std::optional<ModuleHom> witness;
  std::string method;  // "fingerprint", "enumeration", "random-search"
};
IsoResult are_isomorphic(const ModulePtr& a, const ModulePtr& b);

struct Fingerprint {
  std::uint32_t size = 0;
  std::vector<std::uint32_t> invariants;
  std::size_t socle_size = 0;
  std::size_t radical_size = 0;
  std::size_t length = 0;
  bool operator==(const Fingerprint&) const = default;
  auto operator<=>(const Fingerprint&) const = default;
  std::uint64_t hash() const;
};
Fingerprint fingerprint(const FiniteModule& m);

// Order of the subgroup of M generated by the given elements.
std::uint64_t subgroup_order(const FiniteModule& m, const std::vector<std::uint32_t>& elems);
// The group homomorphism with these basis images is injective.
bool injective_images(const FiniteModule& dom, const FiniteModule& cod, const std::vector<std::uint32_t>& images);

}  // namespace modclass
