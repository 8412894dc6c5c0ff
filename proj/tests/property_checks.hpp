#pragma once

#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "modclass/approximation.hpp"
#include "modclass/classification.hpp"
#include "modclass/decomposition.hpp"
#include "modclass/errors.hpp"
#include "modclass/injectivity.hpp"

namespace props {

using namespace modclass;

inline const std::vector<std::string>& ring_pool() {
  static const std::vector<std::string> specs{
      "zmod:4",
      "zmod:8",
      "zmod:9",
      "zmod:6",
      "gf:4",
      "ut2:2",
      "ut2rel:2,2",
      R"({"type":"poly_quotient","q":2,"f":[0,0,1]})",
      R"({"type":"poly_quotient","q":2,"f":[0,0,0,1]})",
      R"({"type":"product","factors":[{"type":"zmod","n":2},{"type":"ut2","q":2}]})",
  };
  return specs;
}

struct Sample {
  std::string ring;
  ModulePtr module;
  std::string origin;
};

// Corpus members, and now and then a cyclic submodule or a quotient of one.
inline std::vector<Sample> draw_modules(std::size_t count, std::uint64_t seed, std::size_t bound = 64) {
  std::mt19937_64 rng(seed);
  std::vector<RingPtr> rings;
  for (const auto& s : ring_pool()) rings.push_back(build_ring(RingSpec::parse(s)));
  std::vector<Sample> out;
  while (out.size() < count) {
    const std::size_t ri = rng() % rings.size();
    const Corpus& c = module_corpus(rings[ri], bound);
    if (c.entries.empty()) continue;
    const ModulePtr m = c.entries[rng() % c.entries.size()].module;
    const int kind = static_cast<int>(rng() % 4);
    const std::uint32_t x = static_cast<std::uint32_t>(rng() % m->size());
    if (kind == 2 && x != 0) {
      ModulePtr sub = realize({m, cyclic_submodule(*m, x)}).module;
      out.push_back({ring_pool()[ri], sub, "cyclic submodule"});
    } else if (kind == 3 && x != 0) {
      ModulePtr q = quotient({m, cyclic_submodule(*m, x)}).module;
      if (q->size() > 1) out.push_back({ring_pool()[ri], q, "quotient"});
    } else {
      out.push_back({ring_pool()[ri], m, "corpus"});
    }
  }
  return out;
}

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;
  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      ++failed;
      if (failures.size() < 20) failures.push_back(what);
    }
  }
  bool pass() const { return failed == 0 && checked > 0; }
};

// (a) class implications never violated
inline bool chain_holds(const ModulePtr& m) {
  try {
    classify(m, {false, false});
    return true;
  } catch (const ChainViolation&) {
    return false;
  }
}

// (b) hull is injective, essential over the image, its own hull, and keeps the socle
inline bool hull_sound(const ModulePtr& m) {
  const HullResult h = injective_hull(m);
  const IndexSet image = h.embedding.image().members;
  if (!h.embedding.is_injective() || !is_injective(h.hull)) return false;
  if (!is_essential(*h.hull, image, full_set(*h.hull))) return false;
  const ModuleHom again = injective_hull(h.hull).embedding;
  if (!again.is_injective() || !again.is_surjective()) return false;
  IndexSet soc_image(h.hull->size());
  socle(*m).for_each([&](std::uint32_t x) { soc_image.insert(h.embedding(x)); });
  return soc_image == socle(*h.hull);
}

// (c) M** ≅ M through the evaluation map
inline bool double_dual_iso(const ModulePtr& m) {
  const ModulePtr dd = double_dual(m);
  const ModuleHom ev = evaluation(m, dd);
  return ev.is_injective() && ev.is_surjective() && are_isomorphic(m, dd).isomorphic;
}

// (d) the two quasi-injectivity tests agree
inline bool quasi_injective_tests_agree(const ModulePtr& m) {
  return is_quasi_injective(m, QuasiInjectiveTest::extension, {false}) ==
         is_quasi_injective(m, QuasiInjectiveTest::hull_invariance, {false});
}

// (e) C1 modules split into uniform summands
inline bool c1_splits_into_uniforms(const ModulePtr& m) {
  if (!is_C1(m)) return true;
  for (const auto& p : decompose(m).pieces()) {
    if (!is_uniform(*p)) return false;
  }
  return true;
}

// (f) Krull-Schmidt multiset independent of search order
inline bool decomposition_order_free(const ModulePtr& m) {
  return same_decomposition_type(decompose(m, SearchOrder::canonical), decompose(m, SearchOrder::permuted));
}

// (g) hom counts match raw function enumeration
inline bool hom_counts_match(const ModulePtr& a, const ModulePtr& b) {
  return hom_space(a, b).count() == fixtures::brute_force_hom_count(*a, *b);
}

struct PropertyReport {
  std::size_t modules = 0;
  Tally chain, hull, dual, quasi, uniform, order, homs;
  bool pass() const {
    return modules >= 100 && chain.pass() && hull.pass() && dual.pass() && quasi.pass() && uniform.pass() &&
           order.pass() && homs.pass();
  }
};

inline PropertyReport run_properties(std::size_t count, std::uint64_t seed) {
  PropertyReport rep;
  const auto samples = draw_modules(count, seed);
  rep.modules = samples.size();
  std::vector<const Sample*> small;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Sample& s = samples[i];
    const ModulePtr& m = s.module;
    const std::string tag = "#" + std::to_string(i) + " " + s.ring + " " + s.origin + " size " + std::to_string(m->size());
    rep.chain.record(chain_holds(m), tag);
    rep.hull.record(hull_sound(m), tag);
    rep.dual.record(double_dual_iso(m), tag);
    rep.quasi.record(quasi_injective_tests_agree(m), tag);
    rep.uniform.record(c1_splits_into_uniforms(m), tag);
    rep.order.record(decomposition_order_free(m), tag);
    if (m->size() <= 8) small.push_back(&s);
  }
  for (const Sample* a : small) {
    for (const Sample* b : small) {
      if (a->ring != b->ring || b->module->size() * a->module->size() > 64) continue;
      rep.homs.record(hom_counts_match(a->module, b->module), a->ring + " sizes " + std::to_string(a->module->size()) +
                                                                 " -> " + std::to_string(b->module->size()));
    }
  }
  return rep;
}

}  // namespace props
