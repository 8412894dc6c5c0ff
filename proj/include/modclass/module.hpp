#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "modclass/abelian.hpp"
#include "modclass/index_set.hpp"
#include "modclass/ring.hpp"

namespace modclass {

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;

// A finite right module. The additive group is described by an AbelianLayout;
// the scalar action is a dense table with act(x, r) = x·r.
class FiniteModule {
 public:
  const FiniteRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::uint32_t size() const { return m_; }
  const AbelianLayout& group() const { return group_; }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const { return group_.add(x, y); }
  std::uint32_t neg(std::uint32_t x) const { return group_.neg(x); }
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return group_.sub(x, y); }
  std::uint32_t act(std::uint32_t x, std::uint32_t r) const { return act_[std::size_t{r} * m_ + x]; }

  const DerivedCache& cache() const { return cache_; }

  nlohmann::json to_json() const;

  // Validates the module axioms; throws AxiomViolation or SizeLimit.
  static ModulePtr create(RingPtr ring, AbelianLayout group, std::vector<std::uint32_t> act);
  // act[r][x] = x·r
  static ModulePtr from_tables(RingPtr ring, const std::vector<std::vector<std::uint32_t>>& add,
                               const std::vector<std::vector<std::uint32_t>>& act);
  static ModulePtr from_json(const nlohmann::json& j, RingPtr ring);

  // Skipping validation is for modules derived from already validated ones.
  static ModulePtr build(RingPtr ring, AbelianLayout group, std::vector<std::uint32_t> act, bool validate);

  // The same module viewed over a table-equal ring object.
  ModulePtr rebind(RingPtr ring) const;

 private:
  FiniteModule() = default;

  RingPtr ring_;
  std::uint32_t m_ = 1;
  AbelianLayout group_;
  std::vector<std::uint32_t> act_;
  DerivedCache cache_;
};

// Throws SizeLimit when a module of this size over R would exceed the caps.
void check_module_size(const FiniteRing& r, std::uint64_t size);

struct Submodule {
  ModulePtr parent;
  IndexSet members;

  std::size_t size() const { return members.count(); }
  bool contains(std::uint32_t x) const { return members.contains(x); }
  std::vector<std::uint32_t> elements() const { return members.to_vector(); }
  bool operator==(const Submodule& o) const { return parent == o.parent && members == o.members; }
};

// Canonical order: by size, then lexicographically by sorted members.
bool canonical_less(const IndexSet& a, const IndexSet& b);

struct ModuleHom {
  ModulePtr dom;
  ModulePtr cod;
  std::vector<std::uint32_t> map;

  std::uint32_t operator()(std::uint32_t x) const { return map[x]; }
  bool is_injective() const;
  bool is_surjective() const;
  bool is_zero() const;
  Submodule image() const;
  Submodule kernel() const;
  // Throws AxiomViolation unless the map is additive and equivariant.
  void validate() const;
  bool operator==(const ModuleHom& o) const { return dom == o.dom && cod == o.cod && map == o.map; }
};

ModuleHom compose(const ModuleHom& g, const ModuleHom& f);  // g∘f
ModuleHom identity_hom(const ModulePtr& m);
ModuleHom zero_hom(const ModulePtr& dom, const ModulePtr& cod);
ModuleHom add_homs(const ModuleHom& f, const ModuleHom& g);

// Images of the additive basis of dom determine a group homomorphism; this
// expands them into the full map (no equivariance check).
std::vector<std::uint32_t> expand_basis_images(const FiniteModule& dom, const FiniteModule& cod,
                                               const std::vector<std::uint32_t>& images);
std::uint32_t apply_basis_images(const FiniteModule& dom, const FiniteModule& cod,
                                 const std::vector<std::uint32_t>& images, std::uint32_t x);
ModuleHom hom_from_basis_images(const ModulePtr& dom, const ModulePtr& cod, const std::vector<std::uint32_t>& images);
std::vector<std::uint32_t> basis_images(const ModuleHom& f);

ModulePtr regular_module(const RingPtr& r);
ModulePtr zero_module(const RingPtr& r);

struct DirectSum {
  ModulePtr sum;
  std::vector<ModuleHom> injections;
  std::vector<ModuleHom> projections;
};

// Element (x_0, ..., x_{k-1}) has index x_0·|M_1|···|M_{k-1}| + ... + x_{k-1}.
DirectSum direct_sum(const std::vector<ModulePtr>& parts);
DirectSum direct_sum(const ModulePtr& a, const ModulePtr& b);
ModulePtr power(const ModulePtr& m, std::size_t k);

IndexSet cyclic_submodule(const FiniteModule& m, std::uint32_t x);
IndexSet generated_set(const FiniteModule& m, const std::vector<std::uint32_t>& gens);
Submodule generated_submodule(const ModulePtr& m, const std::vector<std::uint32_t>& gens);
// smallest submodule containing both
IndexSet join(const FiniteModule& m, const IndexSet& a, const IndexSet& b);
IndexSet zero_set(const FiniteModule& m);
IndexSet full_set(const FiniteModule& m);

// Submodule realized as a module in its own right; elements are the members
// in ascending order.
struct RealizedSubmodule {
  ModulePtr module;
  ModuleHom inclusion;
};
RealizedSubmodule realize(const Submodule& s);

// Quotient with least-index coset representatives, ordered ascending.
struct Quotient {
  ModulePtr module;
  ModuleHom projection;
};
Quotient quotient(const Submodule& a);

}  // namespace modclass
