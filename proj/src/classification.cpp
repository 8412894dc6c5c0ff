#include "modclass/classification.hpp"

#include <unordered_map>
#include <unordered_set>

#include "modclass/errors.hpp"
#include "modclass/injectivity.hpp"
#include "modclass/lattice.hpp"

namespace modclass {

namespace {

using SetOfSets = std::unordered_set<IndexSet, IndexSetHash>;

bool trivially_injective_like(const ModulePtr& m) {
  return m->size() == 1 || is_semisimple(*m) || is_injective(m);
}

const SetOfSets& summand_set(const ModulePtr& m) {
  return *m->cache().get_or_compute<SetOfSets>("summand_set", [&] {
    const auto& s = summand_list(m);
    return SetOfSets(s.begin(), s.end());
  });
}

nlohmann::json set_json(const IndexSet& s) { return s.to_vector(); }

}  // namespace

const std::vector<IndexSet>& summand_list(const ModulePtr& m) {
  return *m->cache().get_or_compute<std::vector<IndexSet>>("summand_list", [&] {
    const auto& lat = *submodule_lattice(*m);
    std::unordered_map<std::size_t, std::vector<std::size_t>> by_size;
    for (std::size_t i = 0; i < lat.size(); ++i) by_size[lat[i].count()].push_back(i);
    std::vector<char> summand(lat.size(), 0);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      if (summand[i]) continue;
      const std::size_t want = m->size() / lat[i].count();
      auto it = by_size.find(want);
      if (it == by_size.end()) continue;
      for (std::size_t j : it->second) {
        if (lat[i].intersection_count(lat[j]) == 1) {
          summand[i] = summand[j] = 1;
          break;
        }
      }
    }
    std::vector<IndexSet> out;
    for (std::size_t i = 0; i < lat.size(); ++i) {
      if (summand[i]) out.push_back(lat[i]);
    }
    return out;
  });
}

C1Result check_C1(const ModulePtr& m, SearchOptions opt) {
  C1Result r;
  if (opt.shortcuts && (socle_is_simple(*m) || trivially_injective_like(m))) return r;
  if (m->size() == 1) return r;
  const auto& lat = *submodule_lattice(*m);
  const IndexSet& soc = socle(*m);
  std::unordered_map<IndexSet, std::vector<std::size_t>, IndexSetHash> groups;
  for (std::size_t i = 0; i < lat.size(); ++i) groups[lat[i] & soc].push_back(i);
  const auto& summands = summand_set(m);
  std::optional<std::size_t> first;
  for (const auto& [key, idx] : groups) {
    for (std::size_t i : idx) {
      bool closed = true;
      for (std::size_t j : idx) {
        if (lat[j].count() > lat[i].count() && lat[i].is_subset_of(lat[j])) {
          closed = false;
          break;
        }
      }
      if (closed && !summands.count(lat[i]) && (!first || i < *first)) first = i;
    }
  }
  if (first) {
    r.holds = false;
    r.witness = lat[*first];
  }
  return r;
}

bool is_C1(const ModulePtr& m) {
  return *m->cache().get_or_compute<bool>("C1", [&] { return check_C1(m).holds; });
}

PairResult check_C2(const ModulePtr& m, SearchOptions opt) {
  PairResult r;
  if (opt.shortcuts && trivially_injective_like(m)) return r;
  if (m->size() == 1) return r;
  const auto& lat = *submodule_lattice(*m);
  const auto& summands = summand_set(m);
  // one representative summand per isomorphism class
  std::vector<std::pair<IndexSet, ModulePtr>> reps;
  for (const auto& s : summand_list(m)) {
    ModulePtr sm = realize({m, s}).module;
    bool dup = false;
    for (const auto& [set, rm] : reps) {
      if (rm->size() == sm->size() && are_isomorphic(rm, sm).isomorphic) {
        dup = true;
        break;
      }
    }
    if (!dup) reps.emplace_back(s, sm);
  }
  for (const auto& a : lat) {
    if (summands.count(a)) continue;
    ModulePtr am;
    for (const auto& [set, rm] : reps) {
      if (rm->size() != a.count()) continue;
      if (!am) am = realize({m, a}).module;
      if (are_isomorphic(am, rm).isomorphic) {
        r.holds = false;
        r.witness = std::make_pair(a, set);
        return r;
      }
    }
  }
  return r;
}

bool is_C2(const ModulePtr& m) {
  return *m->cache().get_or_compute<bool>("C2", [&] { return check_C2(m).holds; });
}

PairResult check_C3(const ModulePtr& m, SearchOptions opt) {
  PairResult r;
  if (opt.shortcuts && trivially_injective_like(m)) return r;
  if (m->size() == 1) return r;
  const auto& list = summand_list(m);
  const auto& summands = summand_set(m);
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].count() == 1 || list[i].count() == m->size()) continue;
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      if (list[j].count() == m->size() || list[i].intersection_count(list[j]) != 1) continue;
      if (!summands.count(join(*m, list[i], list[j]))) {
        r.holds = false;
        r.witness = std::make_pair(list[i], list[j]);
        return r;
      }
    }
  }
  return r;
}

bool is_C3(const ModulePtr& m) {
  return *m->cache().get_or_compute<bool>("C3", [&] { return check_C3(m).holds; });
}

bool is_quasi_injective(const ModulePtr& m, QuasiInjectiveTest test, SearchOptions opt) {
  if (opt.shortcuts && trivially_injective_like(m)) return true;
  if (m->size() == 1) return true;
  if (test == QuasiInjectiveTest::hull_invariance) {
    HullResult h = injective_hull(m);
    const IndexSet image = h.embedding.image().members;
    std::vector<std::uint32_t> gens;
    for (std::size_t i = 0; i < m->group().rank(); ++i) gens.push_back(h.embedding(m->group().basis_element(i)));
    for (const auto& g : endomorphisms(h.hull).gens) {
      for (std::uint32_t x : gens) {
        if (!image.contains(apply_basis_images(*h.hull, *h.hull, g, x))) return false;
      }
    }
    return true;
  }
  return *m->cache().get_or_compute<bool>("quasi_injective", [&] {
    for (const auto& n : *submodule_lattice(*m)) {
      if (n.count() == 1 || n.count() == m->size()) continue;
      RealizedSubmodule rn = realize({m, n});
      Factorizer fz(rn.inclusion, m);
      for (const auto& g : hom_space(rn.module, m).gens) {
        if (!fz.solve_images(g)) return false;
      }
    }
    return true;
  });
}

bool ClassificationFlags::get(int cls) const {
  switch (cls) {
    case 0: return injective;
    case 1: return c1;
    case 2: return c2;
    case 3: return c3;
    case 4: return c4;
    case 5: return c5;
    case 6: return c6;
    default: throw InvalidSpec("unknown class index " + std::to_string(cls));
  }
}

void check_chain(const ClassificationFlags& f) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ChainViolation(std::string("implication violated: ") + what);
  };
  require(!f.c6 || f.c5, "C6 => C5");
  require(!f.c5 || f.c4, "C5 => C4");
  require(!f.c4 || f.c3, "C4 => C3");
  require(!f.c2 || f.c3, "C2 => C3");
  require(!f.injective || f.c6, "injective => C6");
  require(f.c5 == (f.c1 && f.c2), "C5 = C1 and C2");
  require(f.c4 == (f.c1 && f.c3), "C4 = C1 and C3");
  require(!f.uniform || f.c1, "uniform => C1");
}

ClassificationReport classify(const ModulePtr& m, ClassifyOptions opt) {
  ClassificationReport r;
  r.fingerprint = fingerprint(*m);
  r.length = r.fingerprint.length;
  r.socle_size = r.fingerprint.socle_size;
  auto& f = r.flags;
  f.injective = is_injective(m);
  const C1Result c1 = check_C1(m);
  const PairResult c2 = check_C2(m);
  const PairResult c3 = check_C3(m);
  f.c1 = c1.holds;
  f.c2 = c2.holds;
  f.c3 = c3.holds;
  r.c1_witness = c1.witness;
  r.c2_witness = c2.witness;
  r.c3_witness = c3.witness;
  f.c6 = is_quasi_injective(m);
  if (opt.cross_check && f.c6 != is_quasi_injective(m, QuasiInjectiveTest::hull_invariance)) {
    throw ChainViolation("quasi-injectivity tests disagree on a module of size " + std::to_string(m->size()));
  }
  f.c5 = f.c1 && f.c2;
  f.c4 = f.c1 && f.c3;
  f.uniform = m->size() > 1 && socle_is_simple(*m);
  check_chain(f);
  if (opt.decompose) r.decomposition = decompose(m);
  return r;
}

nlohmann::json ClassificationReport::to_json() const {
  nlohmann::json j;
  j["fingerprint"] = {{"size", fingerprint.size},
                      {"invariants", fingerprint.invariants},
                      {"socle_size", fingerprint.socle_size},
                      {"radical_size", fingerprint.radical_size},
                      {"length", fingerprint.length},
                      {"hash", fingerprint.hash()}};
  j["flags"] = {{"injective", flags.injective},   {"C1", flags.c1}, {"C2", flags.c2}, {"C3", flags.c3},
                {"C4", flags.c4},                 {"C5", flags.c5}, {"C6", flags.c6}, {"uniform", flags.uniform}};
  j["length"] = length;
  j["socle_size"] = socle_size;
  j["summands"] = decomposition ? decomposition->to_json()["summands"] : nlohmann::json::array();
  nlohmann::json w = nlohmann::json::object();
  if (c1_witness) w["C1"] = {{"closed_non_summand", set_json(*c1_witness)}};
  if (c2_witness) w["C2"] = {{"non_summand", set_json(c2_witness->first)}, {"summand", set_json(c2_witness->second)}};
  if (c3_witness) w["C3"] = {{"summand_a", set_json(c3_witness->first)}, {"summand_b", set_json(c3_witness->second)}};
  j["witnesses"] = w;
  return j;
}

int class_index(const std::string& name) {
  if (name == "injective" || name == "inj") return 0;
  if (name.size() == 2 && (name[0] == 'C' || name[0] == 'c') && name[1] >= '1' && name[1] <= '6') return name[1] - '0';
  throw InvalidSpec("unknown class '" + name + "'");
}

std::string class_name(int cls) { return cls == 0 ? "injective" : "C" + std::to_string(cls); }

bool in_class(const ModulePtr& m, int cls) {
  switch (cls) {
    case 0: return is_injective(m);
    case 1: return is_C1(m);
    case 2: return is_C2(m);
    case 3: return is_C3(m);
    case 4: return is_C1(m) && is_C3(m);
    case 5: return is_C1(m) && is_C2(m);
    case 6: return is_quasi_injective(m);
    default: throw InvalidSpec("unknown class index " + std::to_string(cls));
  }
}

nlohmann::json SummandSumWitness::to_json() const {
  return {{"n_size", n->size()},
          {"m_size", m->size()},
          {"a", set_json(a)},
          {"b", set_json(b)},
          {"a_isomorphic_to_b", isomorphic},
          {"a_summand", a_summand},
          {"b_summand", b_summand},
          {"independent", independent},
          {"sum_not_summand", sum_not_summand},
          {"passes", passes()},
          {"scope", "verifies that N + E(N) is not C3; absence of preenvelopes is not decided here"}};
}

SummandSumWitness summand_sum_witness(const ModulePtr& n) {
  if (is_injective(n)) throw PreconditionViolated("module of size " + std::to_string(n->size()) + " is injective");
  SummandSumWitness w;
  w.n = n;
  HullResult h = injective_hull(n);
  DirectSum ds = direct_sum(n, h.hull);
  w.m = ds.sum;
  w.a = IndexSet(w.m->size());
  w.b = IndexSet(w.m->size());
  for (std::uint32_t x = 0; x < n->size(); ++x) {
    const std::uint32_t ax = ds.injections[0](x);
    w.a.insert(ax);
    w.b.insert(w.m->add(ax, ds.injections[1](h.embedding(x))));
  }
  w.isomorphic = are_isomorphic(realize({w.m, w.a}).module, realize({w.m, w.b}).module).isomorphic;
  w.a_summand = is_summand(w.m, w.a);
  w.b_summand = is_summand(w.m, w.b);
  w.independent = w.a.intersection_count(w.b) == 1;
  w.sum_not_summand = !is_summand(w.m, join(*w.m, w.a, w.b));
  return w;
}

}  // namespace modclass
