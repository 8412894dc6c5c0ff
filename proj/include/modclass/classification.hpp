#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "modclass/decomposition.hpp"
#include "modclass/hom.hpp"
#include "modclass/module.hpp"

namespace modclass {

// Structural shortcuts (semisimple, injective, uniform, indecomposable) are
// sound; turning them off forces the lattice search.
struct SearchOptions {
  bool shortcuts = true;
};

struct C1Result {
  bool holds = true;
  // a closed submodule that is not a summand, hence essential in no summand
  std::optional<IndexSet> witness;
};
C1Result check_C1(const ModulePtr& m, SearchOptions opt = {});
bool is_C1(const ModulePtr& m);

struct PairResult {
  bool holds = true;
  std::optional<std::pair<IndexSet, IndexSet>> witness;
};
// witness: a non-summand and a summand isomorphic to it
PairResult check_C2(const ModulePtr& m, SearchOptions opt = {});
bool is_C2(const ModulePtr& m);
// witness: independent summands whose sum is not a summand
PairResult check_C3(const ModulePtr& m, SearchOptions opt = {});
bool is_C3(const ModulePtr& m);

// Submodules of M that are direct summands, in canonical order. Cached.
const std::vector<IndexSet>& summand_list(const ModulePtr& m);

enum class QuasiInjectiveTest { extension, hull_invariance };
bool is_quasi_injective(const ModulePtr& m, QuasiInjectiveTest test = QuasiInjectiveTest::extension,
                        SearchOptions opt = {});

struct ClassificationFlags {
  bool injective = false;
  bool c1 = false;
  bool c2 = false;
  bool c3 = false;
  bool c4 = false;  // quasi-continuous
  bool c5 = false;  // continuous
  bool c6 = false;  // quasi-injective
  bool uniform = false;
  bool operator==(const ClassificationFlags&) const = default;
  // 0 = injective, i = C_i
  bool get(int cls) const;
};

struct ClassificationReport {
  Fingerprint fingerprint;
  ClassificationFlags flags;
  std::size_t length = 0;
  std::size_t socle_size = 0;
  std::optional<Decomposition> decomposition;
  std::optional<IndexSet> c1_witness;
  std::optional<std::pair<IndexSet, IndexSet>> c2_witness;
  std::optional<std::pair<IndexSet, IndexSet>> c3_witness;
  nlohmann::json to_json() const;
};

struct ClassifyOptions {
  bool decompose = true;
  // run both quasi-injectivity tests and require agreement
  bool cross_check = false;
};
// Throws ChainViolation if the computed flags break an implication between
// the classes.
ClassificationReport classify(const ModulePtr& m, ClassifyOptions opt = {});
void check_chain(const ClassificationFlags& f);

// Class identifiers: "injective", "C1".."C6".
int class_index(const std::string& name);
std::string class_name(int cls);
bool in_class(const ModulePtr& m, int cls);

// For a non-injective N: M = N ⊕ E(N), A = N ⊕ 0, B = {(n, e(n))}.
struct SummandSumWitness {
  ModulePtr n;
  ModulePtr m;
  IndexSet a;
  IndexSet b;
  bool isomorphic = false;
  bool a_summand = false;
  bool b_summand = false;
  bool independent = false;
  bool sum_not_summand = false;
  bool passes() const { return isomorphic && a_summand && b_summand && independent && sum_not_summand; }
  nlohmann::json to_json() const;
};
SummandSumWitness summand_sum_witness(const ModulePtr& n);

}  // namespace modclass
