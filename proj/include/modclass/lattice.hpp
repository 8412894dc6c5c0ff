#pragma once

#include <memory>
#include <vector>

#include "modclass/module.hpp"

namespace modclass {

// All submodules in canonical order (size, then members). Cached per module.
// Throws LatticeTooLarge past the lattice cap.
std::shared_ptr<const std::vector<IndexSet>> submodule_lattice(const FiniteModule& m);
std::vector<Submodule> all_submodules(const ModulePtr& m);

// Distinct nonzero cyclic submodules in canonical order.
std::shared_ptr<const std::vector<IndexSet>> cyclic_submodules(const FiniteModule& m);

// Jacobson radical of R as a set of ring elements: r with 1 - rs a unit for all s.
std::shared_ptr<const IndexSet> jacobson_elements(const FiniteRing& r);
// An additive generating set of J(R).
std::shared_ptr<const std::vector<std::uint32_t>> jacobson_generators(const FiniteRing& r);
Submodule jacobson_radical(const RingPtr& r);
bool is_semisimple_ring(const FiniteRing& r);

// soc(M) = {x : xJ = 0}
const IndexSet& socle(const FiniteModule& m);
// rad(M) = MJ
const IndexSet& radical(const FiniteModule& m);
std::size_t composition_length(const FiniteModule& m);
Submodule socle_of(const ModulePtr& m);
Submodule radical_of(const ModulePtr& m);

// Reference versions straight from the definitions, used as test oracles.
IndexSet socle_by_simple_cyclics(const FiniteModule& m);
IndexSet radical_by_maximal_submodules(const FiniteModule& m);

bool is_simple(const FiniteModule& m);
bool is_semisimple(const FiniteModule& m);

// A ⊆ U: every nonzero cyclic submodule of U meets A.
bool is_essential(const FiniteModule& m, const IndexSet& a, const IndexSet& u);
// Same decision through U ∩ soc(M) ⊆ A.
bool is_essential_by_socle(const FiniteModule& m, const IndexSet& a, const IndexSet& u);

// Every two nonzero cyclic submodules intersect nontrivially.
bool is_uniform(const FiniteModule& m);
bool socle_is_simple(const FiniteModule& m);

// |N + xR| without forming the join.
std::size_t join_size_with_cyclic(const FiniteModule& m, const IndexSet& n, std::size_t n_count, std::uint32_t x);

}  // namespace modclass
