#include "modclass/approximation.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "modclass/decomposition.hpp"
#include "modclass/errors.hpp"
#include "modclass/hom.hpp"
#include "modclass/injectivity.hpp"
#include "modclass/lattice.hpp"

namespace modclass {

namespace {

void add_unique(std::vector<ModulePtr>& pool, const ModulePtr& m) {
  for (const auto& p : pool) {
    if (p->size() == m->size() && are_isomorphic(p, m).isomorphic) return;
  }
  pool.push_back(m);
}

std::vector<ModulePtr> indecomposable_pool(const RingPtr& r, std::size_t bound, std::size_t g) {
  std::vector<ModulePtr> pool;
  for (const auto& u : uniform_modules(r)) {
    if (u->size() <= bound) add_unique(pool, u);
  }
  if (g > 0) {
    // every g-generated module is a summand of some R^g / K with K in rad(R^g)
    const ModulePtr free = power(regular_module(r), g);
    RealizedSubmodule rad = realize(radical_of(free));
    for (const auto& k : *submodule_lattice(*rad.module)) {
      IndexSet kp(free->size());
      k.for_each([&](std::uint32_t x) { kp.insert(rad.inclusion(x)); });
      const ModulePtr q = quotient({free, kp}).module;
      for (const auto& piece : decompose(q).summands) {
        if (piece.module->size() <= bound) add_unique(pool, piece.module);
      }
    }
  }
  std::stable_sort(pool.begin(), pool.end(), [](const ModulePtr& a, const ModulePtr& b) {
    return std::make_pair(a->size(), composition_length(*a)) < std::make_pair(b->size(), composition_length(*b));
  });
  return pool;
}

nlohmann::json module_summary(const ModulePtr& m) {
  return {{"size", m->size()}, {"invariants", m->group().invariants()}, {"length", composition_length(*m)}};
}

bool is_single_uniform(const Corpus& c, std::size_t idx) {
  const auto& mult = c.entries[idx].multiplicities;
  std::size_t total = 0;
  std::size_t which = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    total += mult[i];
    if (mult[i]) which = i;
  }
  return total == 1 && socle_is_simple(*c.pool[which]);
}

}  // namespace

// ---------------------------------------------------------------- corpus

std::optional<std::size_t> Corpus::find(const std::vector<std::size_t>& mult) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].multiplicities == mult) return i;
  }
  return std::nullopt;
}

nlohmann::json Corpus::to_json() const {
  nlohmann::json pj = nlohmann::json::array();
  for (const auto& p : pool) pj.push_back(module_summary(p));
  nlohmann::json ej = nlohmann::json::array();
  for (const auto& e : entries) ej.push_back({{"size", e.module->size()}, {"multiplicities", e.multiplicities}});
  return {{"bound", bound}, {"generator_bound", generator_bound}, {"pool", pj}, {"modules", ej}};
}

const Corpus& module_corpus(const RingPtr& r, std::size_t bound, std::size_t g) {
  const std::string key = "corpus:" + std::to_string(bound) + ":" + std::to_string(g);
  return *r->cache().get_or_compute<Corpus>(key, [&] {
    Corpus c;
    c.ring = r;
    c.bound = bound;
    c.generator_bound = g;
    c.pool = indecomposable_pool(r, bound, g);
    std::vector<std::size_t> mult(c.pool.size(), 0);
    std::vector<std::vector<std::size_t>> found;
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t size) {
      if (i == c.pool.size()) {
        if (size > 1) found.push_back(mult);
        return;
      }
      rec(i + 1, size);
      std::uint64_t s = size;
      while (s * c.pool[i]->size() <= bound) {
        s *= c.pool[i]->size();
        ++mult[i];
        rec(i + 1, s);
      }
      mult[i] = 0;
    };
    rec(0, 1);
    for (const auto& m : found) {
      std::vector<ModulePtr> parts;
      for (std::size_t i = 0; i < m.size(); ++i) parts.insert(parts.end(), m[i], c.pool[i]);
      c.entries.push_back({parts.size() == 1 ? parts[0] : direct_sum(parts).sum, m});
    }
    std::stable_sort(c.entries.begin(), c.entries.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
      if (a.module->size() != b.module->size()) return a.module->size() < b.module->size();
      return a.multiplicities > b.multiplicities;
    });
    return c;
  });
}

std::optional<bool> membership(const ModulePtr& m, int cls) {
  try {
    return in_class(m, cls);
  } catch (const CapExceeded&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------- preenvelopes

nlohmann::json PreenvelopeCheck::to_json() const {
  nlohmann::json lj = nlohmann::json::array();
  for (const auto& f : log) lj.push_back({{"target", f.target}, {"generator", f.generator}, {"alpha", f.alpha}});
  nlohmann::json j{{"passes", passes},
                   {"targets_checked", targets_checked},
                   {"maps_checked", maps_checked},
                   {"factorizations", lj}};
  if (counterexample) {
    j["counterexample"] = {{"target", counterexample->first},
                           {"target_size", counterexample->second.cod->size()},
                           {"map", counterexample->second.map}};
  }
  return j;
}

PreenvelopeCheck verify_preenvelope(const ModuleHom& u, const std::vector<ModulePtr>& targets) {
  PreenvelopeCheck c;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const ModulePtr& e = targets[t];
    Factorizer fz(u, e);
    ++c.targets_checked;
    // factoring is additive in f, so generators suffice
    const auto gens = hom_space(u.dom, e).gens;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      ++c.maps_checked;
      auto alpha = fz.solve_images(gens[k]);
      if (!alpha) {
        c.passes = false;
        c.counterexample = std::make_pair(t, hom_from_basis_images(u.dom, e, gens[k]));
        return c;
      }
      c.log.push_back({t, k, std::move(*alpha)});
    }
  }
  return c;
}

nlohmann::json ConditionReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : uniforms) {
    rows.push_back({{"size", r.module->size()}, {"length", r.length}, {"injective", r.injective}, {"ok", r.ok}});
  }
  nlohmann::json j{{"holds", holds}, {"uniform_modules", rows}};
  if (c1_modules_split) {
    j["c1_modules_semisimple_plus_injective"] = *c1_modules_split;
    j["c1_modules_checked"] = c1_modules_checked;
  }
  return j;
}

ConditionReport verify_uniform_condition(const RingPtr& r, const Corpus* corpus) {
  ConditionReport rep;
  for (const auto& u : uniform_modules(r)) {
    ConditionReport::Row row;
    row.module = u;
    row.length = composition_length(*u);
    row.injective = is_injective(u);
    row.ok = row.length == 1 || (row.injective && row.length == 2);
    rep.holds = rep.holds && row.ok;
    rep.uniforms.push_back(row);
  }
  if (corpus && rep.holds) {
    // corpus entries are sums of pool members, so their summands are known
    bool split = true;
    for (const auto& e : corpus->entries) {
      if (membership(e.module, 1) != true) continue;
      ++rep.c1_modules_checked;
      for (std::size_t i = 0; i < e.multiplicities.size(); ++i) {
        if (e.multiplicities[i] == 0) continue;
        const ModulePtr& p = corpus->pool[i];
        if (!is_simple(*p) && !is_injective(p)) split = false;
      }
    }
    rep.c1_modules_split = split;
  }
  return rep;
}

nlohmann::json PreenvelopeCertificate::to_json() const {
  nlohmann::json j{{"source", module_summary(source)},
                   {"target", module_summary(u.cod)},
                   {"class", class_name},
                   {"label", label},
                   {"target_membership", target_membership},
                   {"target_in_class", target_in_class},
                   {"split_mono", split_mono},
                   {"corpus_bound", corpus_bound},
                   {"generator_bound", generator_bound},
                   {"undecided_targets", undecided_targets},
                   {"check", check.to_json()},
                   {"passes", passes()}};
  j["envelope"] = envelope ? nlohmann::json(*envelope) : nlohmann::json("undecided");
  return j;
}

PreenvelopeCertificate construct_C1_preenvelope(const ModulePtr& n, std::size_t bound, std::size_t g) {
  const RingPtr& r = n->ring_ptr();
  PreenvelopeCertificate cert;
  cert.source = n;
  cert.corpus_bound = bound;
  cert.generator_bound = g;
  const bool condition = verify_uniform_condition(r).holds;
  cert.label = condition ? "CONCLUSIVE" : "BOUNDED-EVIDENCE";

  std::vector<ModulePtr> targets;
  for (const auto& s : simple_modules(r)) add_unique(targets, s);
  for (const auto& e : indecomposable_injectives(r)) add_unique(targets, e);
  std::vector<ModuleHom> maps;
  std::vector<ModulePtr> parts;
  for (const auto& t : targets) {
    for (const auto& h : hom_space(n, t).generator_homs()) {
      maps.push_back(h);
      parts.push_back(t);
    }
  }
  std::vector<std::uint32_t> map(n->size(), 0);
  ModulePtr c;
  if (parts.empty()) {
    c = zero_module(r);
  } else {
    DirectSum ds = direct_sum(parts);
    c = ds.sum;
    for (std::uint32_t x = 0; x < n->size(); ++x) {
      std::uint32_t y = 0;
      for (std::size_t k = 0; k < maps.size(); ++k) y = c->add(y, ds.injections[k](maps[k](x)));
      map[x] = y;
    }
  }
  cert.u = ModuleHom{n, c, std::move(map)};

  if (auto in = membership(c, 1)) {
    cert.target_membership = "computed";
    cert.target_in_class = *in;
  } else if (condition) {
    // a sum of simples and injectives, which the condition places in the class
    cert.target_membership = "structural";
    cert.target_in_class = true;
  } else {
    cert.target_membership = "undecided";
  }
  cert.split_mono = n->size() > 1 && factor_through(cert.u, identity_hom(n)).has_value();

  const HomSpace end = endomorphisms(c);
  if (end.enumerable()) {
    const AbelianLayout& ng = n->group();
    std::vector<std::uint32_t> ub;
    for (std::size_t i = 0; i < ng.rank(); ++i) ub.push_back(cert.u(ng.basis_element(i)));
    bool all_bijective = true;
    end.for_each([&](const std::vector<std::uint32_t>& a) {
      for (auto y : ub) {
        if (apply_basis_images(*c, *c, a, y) != y) return false;
      }
      if (!injective_images(*c, *c, a)) {
        all_bijective = false;
        return true;
      }
      return false;
    });
    cert.envelope = all_bijective;
  }

  const Corpus& corpus = module_corpus(r, bound, g);
  std::vector<ModulePtr> members;
  for (const auto& e : corpus.entries) {
    auto in = membership(e.module, 1);
    if (!in) {
      ++cert.undecided_targets;
    } else if (*in) {
      members.push_back(e.module);
    }
  }
  cert.check = verify_preenvelope(cert.u, members);
  return cert;
}

// ---------------------------------------------------------------- closure

nlohmann::json ClosureReport::to_json(const Corpus& c) const {
  nlohmann::json j{{"closed", closed}, {"members", members}, {"pairs_checked", pairs_checked}, {"undecided", undecided}};
  if (counterexample) {
    j["counterexample"] = {module_summary(c.entries[counterexample->first].module),
                           module_summary(c.entries[counterexample->second].module)};
  }
  return j;
}

ClosureReport closure_check(int cls, const Corpus& corpus) {
  ClosureReport rep;
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < corpus.entries.size(); ++i) {
    auto in = membership(corpus.entries[i].module, cls);
    if (!in) {
      ++rep.undecided;
    } else if (*in) {
      members.push_back(i);
    }
  }
  rep.members = members.size();
  struct Pair {
    std::uint32_t size;
    std::size_t i, j, sum;
  };
  std::vector<Pair> pairs;
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a; b < members.size(); ++b) {
      const auto& ea = corpus.entries[members[a]];
      const auto& eb = corpus.entries[members[b]];
      if (std::uint64_t{ea.module->size()} * eb.module->size() > corpus.bound) continue;
      std::vector<std::size_t> mult = ea.multiplicities;
      for (std::size_t k = 0; k < mult.size(); ++k) mult[k] += eb.multiplicities[k];
      auto s = corpus.find(mult);
      if (s) pairs.push_back({corpus.entries[*s].module->size(), members[a], members[b], *s});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) { return x.size < y.size; });
  for (const auto& p : pairs) {
    ++rep.pairs_checked;
    auto in = membership(corpus.entries[p.sum].module, cls);
    if (!in) {
      ++rep.undecided;
      continue;
    }
    if (!*in) {
      rep.closed = false;
      rep.counterexample = std::make_pair(p.i, p.j);
      return rep;
    }
  }
  return rep;
}

// ---------------------------------------------------------------- suites

bool SuiteReport::pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

void SuiteReport::add(std::string name, bool ok, nlohmann::json evidence) {
  claims.push_back({std::move(name), ok, std::move(evidence)});
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json cj = nlohmann::json::array();
  for (const auto& c : claims) cj.push_back({{"claim", c.name}, {"pass", c.pass}, {"evidence", c.evidence}});
  return {{"suite", suite},
          {"ring", ring},
          {"bound", bound},
          {"generator_bound", generator_bound},
          {"claims", cj},
          {"pass", pass()}};
}

namespace {

SuiteReport start(const std::string& name, const RingPtr& r, std::size_t bound, std::size_t g) {
  SuiteReport s;
  s.suite = name;
  s.ring = r->spec().to_json();
  s.bound = bound;
  s.generator_bound = g;
  return s;
}

void merge(SuiteReport& into, const SuiteReport& from, const std::string& prefix) {
  for (const auto& c : from.claims) into.claims.push_back({prefix + c.name, c.pass, c.evidence});
}

struct MembersInjective {
  bool all = true;
  std::size_t members = 0;
  std::size_t undecided = 0;
  std::optional<std::size_t> counterexample;
};

MembersInjective members_injective(int cls, const Corpus& corpus) {
  MembersInjective r;
  for (std::size_t i = 0; i < corpus.entries.size(); ++i) {
    const ModulePtr& m = corpus.entries[i].module;
    auto in = membership(m, cls);
    if (!in) {
      ++r.undecided;
      continue;
    }
    if (!*in) continue;
    ++r.members;
    if (!is_injective(m) && r.all) {
      r.all = false;
      r.counterexample = i;
    }
  }
  return r;
}

SuiteReport suite_c1_condition(const RingPtr& r, std::size_t bound, std::size_t g) {
  SuiteReport s = start("mainC1", r, bound, g);
  const Corpus& corpus = module_corpus(r, bound, g);
  const ConditionReport cond = verify_uniform_condition(r, &corpus);
  const ClosureReport closure = closure_check(1, corpus);
  s.add("uniform condition decided", true, cond.to_json());
  s.add("condition iff C1 closed under sums at the bound", cond.holds == closure.closed, closure.to_json(corpus));
  if (cond.holds) {
    s.add("C1 corpus modules are semisimple plus injective", cond.c1_modules_split.value_or(false),
          {{"checked", cond.c1_modules_checked}});
  } else {
    const bool among_uniform = closure.counterexample && is_single_uniform(corpus, closure.counterexample->first) &&
                               is_single_uniform(corpus, closure.counterexample->second);
    s.add("non-closure counterexample consists of uniform modules", among_uniform, closure.to_json(corpus));
  }
  return s;
}

SuiteReport suite_ut2(const RingPtr& r, std::size_t bound, std::size_t g) {
  SuiteReport s = start("ut2", r, bound, g);
  const auto& un = uniform_modules(r);
  std::vector<std::tuple<std::uint32_t, std::size_t, bool>> profile;
  for (const auto& u : un) profile.emplace_back(u->size(), composition_length(*u), is_injective(u));
  std::sort(profile.begin(), profile.end());
  nlohmann::json pj = nlohmann::json::array();
  for (const auto& [sz, len, inj] : profile) pj.push_back({{"size", sz}, {"length", len}, {"injective", inj}});
  const decltype(profile) expected{{2, 1, false}, {2, 1, true}, {4, 2, true}};
  s.add("three uniform classes (2,1,no) (2,1,yes) (4,2,yes)", profile == expected, pj);

  const Corpus& corpus = module_corpus(r, bound, g);
  s.add("indecomposables are the uniform modules", corpus.pool.size() == un.size(),
        {{"pool", corpus.to_json()["pool"]}});
  std::size_t c1 = 0;
  std::size_t undecided = 0;
  for (const auto& e : corpus.entries) {
    auto in = membership(e.module, 1);
    if (!in) ++undecided;
    if (in == true) ++c1;
  }
  s.add("every corpus module is C1", c1 == corpus.entries.size(),
        {{"modules", corpus.entries.size()}, {"c1", c1}, {"undecided", undecided}});
  const ConditionReport cond = verify_uniform_condition(r, &corpus);
  s.add("uniform condition holds", cond.holds, cond.to_json());
  return s;
}

SuiteReport suite_ut2kl(const RingPtr& r, std::size_t bound, std::size_t g) {
  SuiteReport s = start("ut2kl", r, bound, g);
  const ConditionReport cond = verify_uniform_condition(r);
  s.add("uniform condition holds", cond.holds, cond.to_json());

  std::vector<std::pair<std::uint32_t, std::size_t>> inj;
  for (const auto& e : indecomposable_injectives(r)) inj.emplace_back(e->size(), composition_length(*e));
  std::sort(inj.begin(), inj.end());
  nlohmann::json ij = nlohmann::json::array();
  for (const auto& [sz, len] : inj) ij.push_back({{"size", sz}, {"length", len}});
  const bool inj_ok = inj.size() == 2 && inj[0].second == 1 && inj[1].second == 2 && inj[1].first == 2 * inj[0].first;
  s.add("two indecomposable injectives: a simple one and one of length 2", inj_ok, ij);

  ModulePtr p;
  for (const auto& c : decompose(regular_module(r)).summands) {
    if (!is_simple(*c.module) && (!p || c.module->size() > p->size())) p = c.module;
  }
  if (!p) {
    s.add("non-simple indecomposable projective exists", false);
    return s;
  }
  const C1Result c1 = check_C1(p);
  s.add("non-simple indecomposable projective is not C1", !c1.holds,
        {{"module", module_summary(p)}, {"witness", c1.witness ? c1.witness->to_vector() : std::vector<std::uint32_t>{}}});
  const PreenvelopeCertificate cert = construct_C1_preenvelope(p, bound, g);
  s.add("C1-preenvelope of the projective is conclusive and passes", cert.passes() && cert.label == "CONCLUSIVE",
        cert.to_json());
  s.add("preenvelope map is not a split monomorphism", !cert.split_mono);
  return s;
}

SuiteReport suite_summand_sum(const RingPtr& r, std::size_t bound, std::size_t g) {
  SuiteReport s = start("key_trick", r, bound, g);
  const Corpus& corpus = module_corpus(r, bound, g);
  std::size_t tested = 0;
  std::size_t simples = 0;
  std::size_t skipped = 0;
  for (const auto& e : corpus.entries) {
    const ModulePtr& n = e.module;
    if (is_injective(n) || membership(n, 6) != true) continue;
    std::optional<SummandSumWitness> w;
    try {
      w = summand_sum_witness(n);
    } catch (const CapExceeded&) {
      ++skipped;
      continue;
    }
    ++tested;
    if (is_simple(*n)) ++simples;
    s.add("N + E(N) not C3 for N of size " + std::to_string(n->size()) + " multiplicities " +
              nlohmann::json(e.multiplicities).dump(),
          w->passes(), w->to_json());
  }
  std::size_t noninjective_simples = 0;
  for (const auto& sm : simple_modules(r)) {
    if (!is_injective(sm) && sm->size() <= bound) ++noninjective_simples;
  }
  s.add("every non-injective simple was tested", simples == noninjective_simples,
        {{"tested", tested}, {"simples", simples}, {"skipped_by_cap", skipped}});
  return s;
}

SuiteReport suite_chain(const RingPtr& r, std::size_t bound, std::size_t g) {
  SuiteReport s = start("chain", r, bound, g);
  const Corpus& corpus = module_corpus(r, bound, g);
  std::size_t ok = 0;
  std::size_t undecided = 0;
  std::vector<std::string> failures;
  for (const auto& e : corpus.entries) {
    try {
      classify(e.module, {false, false});
      ++ok;
    } catch (const ChainViolation& ex) {
      failures.push_back(ex.what());
    } catch (const CapExceeded&) {
      ++undecided;
    }
  }
  s.add("class implications hold on every corpus module", failures.empty(),
        {{"classified", ok}, {"undecided", undecided}, {"failures", failures}});
  return s;
}

}  // namespace

SuiteReport verify_sum_closure(const RingPtr& r, int cls, std::size_t bound, std::size_t g) {
  SuiteReport s = start("rare", r, bound, g);
  const Corpus& corpus = module_corpus(r, bound, g);
  const ClosureReport closure = closure_check(cls, corpus);
  const MembersInjective mi = members_injective(cls, corpus);
  const bool closed = closure.closed;
  const bool injective = mi.all;
  nlohmann::json ev{{"closed", closure.to_json(corpus)},
                    {"members_injective", injective},
                    {"members", mi.members},
                    {"undecided", mi.undecided}};
  if (mi.counterexample) ev["non_injective_member"] = module_summary(corpus.entries[*mi.counterexample].module);
  const std::string c = class_name(cls);
  s.add(c + ": closed under sums iff every member is injective", closed == injective, ev);
  if (cls >= 2 && cls <= 5) {
    const bool semisimple = is_semisimple_ring(*r);
    s.add(c + ": closed under sums iff the ring is semisimple", closed == semisimple,
          {{"closed", closed}, {"semisimple", semisimple}});
    s.add(c + ": members injective iff the ring is semisimple", injective == semisimple,
          {{"members_injective", injective}, {"semisimple", semisimple}});
  }
  return s;
}

namespace {

struct LocalFactor {
  IndexSet elements;  // eR
  bool local = false;
  bool principal = false;
  std::size_t length = 0;
};

std::vector<LocalFactor> local_factors(const RingPtr& r) {
  const ModulePtr reg = regular_module(r);
  std::vector<std::uint32_t> idem;
  for (std::uint32_t e = 1; e < r->size(); ++e) {
    if (r->mul(e, e) == e) idem.push_back(e);
  }
  std::vector<LocalFactor> out;
  for (std::uint32_t e : idem) {
    bool primitive = true;
    for (std::uint32_t f : idem) {
      if (f != e && r->mul(f, e) == f) primitive = false;
    }
    if (!primitive) continue;
    LocalFactor lf;
    lf.elements = cyclic_submodule(*reg, e);
    RealizedSubmodule er = realize({reg, lf.elements});
    lf.length = composition_length(*er.module);
    lf.local = is_simple(*quotient(radical_of(er.module)).module);
    lf.principal = true;
    for (const auto& ideal : *submodule_lattice(*er.module)) {
      bool cyclic = false;
      ideal.for_each([&](std::uint32_t x) { cyclic = cyclic || cyclic_submodule(*er.module, x) == ideal; });
      if (ideal.count() > 1 && !cyclic) lf.principal = false;
    }
    out.push_back(std::move(lf));
  }
  return out;
}

}  // namespace

SuiteReport verify_commutative_c1(const RingPtr& r, std::size_t bound, std::size_t g) {
  if (!r->is_commutative()) throw NotCommutative("ring " + r->spec().describe() + " is not commutative");
  SuiteReport s = start("comC1", r, bound, g);
  const auto factors = local_factors(r);
  bool structure = true;
  nlohmann::json fj = nlohmann::json::array();
  for (const auto& f : factors) {
    structure = structure && f.local && f.principal && f.length <= 2;
    fj.push_back({{"size", f.elements.count()}, {"local", f.local}, {"principal", f.principal}, {"length", f.length}});
  }
  const Corpus& corpus = module_corpus(r, bound, g);
  std::size_t c1 = 0;
  std::size_t undecided = 0;
  std::optional<std::size_t> first_bad;
  for (std::size_t i = 0; i < corpus.entries.size(); ++i) {
    auto in = membership(corpus.entries[i].module, 1);
    if (!in) ++undecided;
    if (in == true) ++c1;
    if (in == false && !first_bad) first_bad = i;
  }
  const bool all_c1 = c1 == corpus.entries.size();
  const bool condition = verify_uniform_condition(r).holds;
  nlohmann::json cj{{"modules", corpus.entries.size()}, {"c1", c1}, {"undecided", undecided}};
  if (first_bad) cj["non_c1"] = module_summary(corpus.entries[*first_bad].module);
  s.add("product of local principal ideal rings of length at most 2 (decided)", true,
        {{"holds", structure}, {"factors", fj}});
  s.add("every corpus module is C1 (decided)", true, {{"holds", all_c1}, {"evidence", cj}});
  s.add("ring structure iff every corpus module is C1", structure == all_c1);
  s.add("ring structure iff uniform condition", structure == condition, {{"condition", condition}});
  bool certified = true;
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& p : corpus.pool) {
    const PreenvelopeCertificate cert = construct_C1_preenvelope(p, bound, g);
    certified = certified && cert.passes() && cert.label == "CONCLUSIVE";
    certs.push_back({{"source", module_summary(p)}, {"label", cert.label}, {"passes", cert.passes()}});
  }
  if (condition) {
    s.add("C1-preenvelopes of indecomposables are conclusive and pass", certified, certs);
  } else {
    s.add("C1-preenvelopes of indecomposables (bounded evidence only)", true, certs);
  }
  return s;
}

SuiteReport verify_hom_free_c1_injective(const RingPtr& r, std::size_t bound, std::size_t g) {
  SuiteReport s = start("c1_injective", r, bound, g);
  const Corpus& corpus = module_corpus(r, bound, g);
  const ClosureReport closure = closure_check(1, corpus);
  s.add("C1 closure under sums at the bound (decided)", true, closure.to_json(corpus));
  const ModulePtr e = injective_hull(regular_module(r)).hull;
  std::size_t hom_free = 0;
  std::size_t bad = 0;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& entry : corpus.entries) {
    if (membership(entry.module, 1) != true) continue;
    if (hom_space(entry.module, e).count() != 1) continue;
    ++hom_free;
    const bool inj = is_injective(entry.module);
    if (!inj) ++bad;
    rows.push_back({{"module", module_summary(entry.module)}, {"injective", inj}});
  }
  s.add("C1 modules with no map into E(R) are injective", bad == 0,
        {{"hom_free_c1_modules", hom_free}, {"modules", rows}});
  return s;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"rare", "mainC1", "comC1", "ut2", "ut2kl", "key_trick", "chain",
                                              "c1_injective"};
  return names;
}

SuiteReport run_suite(const std::string& name, const RingPtr& r, SuiteOptions opt) {
  const std::size_t b = opt.bound;
  const std::size_t g = opt.generator_bound;
  if (name == "rare") {
    SuiteReport s = start(name, r, b, g);
    for (int i = 2; i <= 6; ++i) merge(s, verify_sum_closure(r, i, b, g), "");
    return s;
  }
  if (name == "mainC1") return suite_c1_condition(r, b, g);
  if (name == "comC1") return verify_commutative_c1(r, b, g);
  if (name == "ut2") return suite_ut2(r, b, g);
  if (name == "ut2kl") return suite_ut2kl(r, b, g);
  if (name == "key_trick") return suite_summand_sum(r, b, g);
  if (name == "chain") return suite_chain(r, b, g);
  if (name == "c1_injective") return verify_hom_free_c1_injective(r, b, g);
  throw InvalidSpec("unknown suite '" + name + "'");
}

}  // namespace modclass
