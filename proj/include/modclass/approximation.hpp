#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "modclass/classification.hpp"
#include "modclass/module.hpp"

namespace modclass {

struct CorpusEntry {
  ModulePtr module;
  std::vector<std::size_t> multiplicities;  // over Corpus::pool
};

// Direct sums of indecomposables up to a size bound. The pool is the uniform
// modules together with the indecomposable summands of quotients of R^G.
struct Corpus {
  RingPtr ring;
  std::size_t bound = 0;
  std::size_t generator_bound = 0;
  std::vector<ModulePtr> pool;
  std::vector<CorpusEntry> entries;  // by size, then multiplicities

  std::optional<std::size_t> find(const std::vector<std::size_t>& multiplicities) const;
  nlohmann::json to_json() const;
};

// Cached per ring and parameters.
const Corpus& module_corpus(const RingPtr& r, std::size_t bound, std::size_t generator_bound = 2);

// Membership, or nullopt when a cap stops the decision.
std::optional<bool> membership(const ModulePtr& m, int cls);

struct PreenvelopeCheck {
  bool passes = true;
  std::size_t targets_checked = 0;
  std::size_t maps_checked = 0;
  // index into the target list and the map that does not factor
  std::optional<std::pair<std::size_t, ModuleHom>> counterexample;
  struct Factorization {
    std::size_t target = 0;
    std::size_t generator = 0;
    std::vector<std::uint32_t> alpha;  // basis images of α with α∘u = f
  };
  std::vector<Factorization> log;
  nlohmann::json to_json() const;
};
// Every generator of Hom(N, E') factors through u, for each target E'.
PreenvelopeCheck verify_preenvelope(const ModuleHom& u, const std::vector<ModulePtr>& targets);

struct ConditionReport {
  bool holds = true;
  struct Row {
    ModulePtr module;
    std::size_t length = 0;
    bool injective = false;
    bool ok = false;
  };
  std::vector<Row> uniforms;
  // filled when a corpus is supplied and the condition holds
  std::optional<bool> c1_modules_split;
  std::size_t c1_modules_checked = 0;
  nlohmann::json to_json() const;
};
// Each uniform module is simple, or injective of length 2.
ConditionReport verify_uniform_condition(const RingPtr& r, const Corpus* corpus = nullptr);

struct PreenvelopeCertificate {
  ModulePtr source;
  ModuleHom u;
  std::string class_name = "C1";
  std::string label;  // "CONCLUSIVE" or "BOUNDED-EVIDENCE"
  std::string target_membership;  // "computed" or "structural"
  bool target_in_class = false;
  bool split_mono = false;
  std::optional<bool> envelope;  // every self-factorization bijective, when decidable
  std::size_t corpus_bound = 0;
  std::size_t generator_bound = 0;
  std::size_t undecided_targets = 0;
  PreenvelopeCheck check;
  bool passes() const { return target_in_class && check.passes; }
  nlohmann::json to_json() const;
};
PreenvelopeCertificate construct_C1_preenvelope(const ModulePtr& n, std::size_t bound, std::size_t generator_bound = 2);

struct ClosureReport {
  bool closed = true;
  std::size_t members = 0;
  std::size_t pairs_checked = 0;
  std::size_t undecided = 0;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;  // corpus indices
  nlohmann::json to_json(const Corpus& c) const;
};
// Pairs whose sum stays within the corpus bound.
ClosureReport closure_check(int cls, const Corpus& corpus);

struct Claim {
  std::string name;
  bool pass = false;
  nlohmann::json evidence;
};

struct SuiteReport {
  std::string suite;
  nlohmann::json ring;
  std::size_t bound = 0;
  std::size_t generator_bound = 0;
  std::vector<Claim> claims;
  bool pass() const;
  void add(std::string name, bool pass, nlohmann::json evidence = nlohmann::json::object());
  nlohmann::json to_json() const;
};

SuiteReport verify_sum_closure(const RingPtr& r, int cls, std::size_t bound, std::size_t generator_bound = 2);
SuiteReport verify_commutative_c1(const RingPtr& r, std::size_t bound, std::size_t generator_bound = 2);
// Corpus C1 modules with no nonzero map into E(R) are injective.
SuiteReport verify_hom_free_c1_injective(const RingPtr& r, std::size_t bound, std::size_t generator_bound = 2);

struct SuiteOptions {
  std::size_t bound = 64;
  std::size_t generator_bound = 2;
};
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const RingPtr& r, SuiteOptions opt = {});

}  // namespace modclass
