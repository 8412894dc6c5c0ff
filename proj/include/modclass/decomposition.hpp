#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "modclass/hom.hpp"
#include "modclass/module.hpp"

namespace modclass {

enum class SearchOrder { canonical, permuted };

struct DecompositionClass {
  ModulePtr module;               // representative, realized
  std::vector<Submodule> copies;  // the copies inside the parent
  std::size_t multiplicity() const { return copies.size(); }
};

// Internal direct sum of indecomposables, grouped into isomorphism classes.
struct Decomposition {
  ModulePtr parent;
  std::vector<DecompositionClass> summands;
  // projection onto each copy along the others, in the order of the copies
  std::vector<ModuleHom> idempotents;
  // false when some piece was declared indecomposable by random search alone
  bool exact = true;

  std::size_t piece_count() const;
  std::vector<ModulePtr> pieces() const;
  nlohmann::json to_json() const;
};

// A nontrivial idempotent of End(M) if one exists.
std::optional<ModuleHom> nontrivial_idempotent(const ModulePtr& m, SearchOrder order = SearchOrder::canonical);
bool is_indecomposable(const ModulePtr& m);
Decomposition decompose(const ModulePtr& m, SearchOrder order = SearchOrder::canonical);

// Same multiset of isomorphism classes.
bool same_decomposition_type(const Decomposition& a, const Decomposition& b);

struct UniformDecompositionReport {
  Decomposition decomposition;
  std::vector<bool> uniform;  // per class
  bool c1 = false;
  bool consistent = false;  // c1 implies every summand uniform
  nlohmann::json to_json() const;
};
UniformDecompositionReport check_uniform_decomposition(const ModulePtr& m,
                                                       const std::function<bool(const ModulePtr&)>& is_c1);

}  // namespace modclass
