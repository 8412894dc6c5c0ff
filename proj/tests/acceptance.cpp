#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "property_checks.hpp"

using namespace modclass;

namespace {

RingPtr ring(const char* s) { return build_ring(RingSpec::parse(s)); }

const nlohmann::json* evidence(const SuiteReport& s, const std::string& prefix) {
  for (const auto& c : s.claims) {
    if (c.name.rfind(prefix, 0) == 0) return &c.evidence;
  }
  return nullptr;
}

struct Criterion {
  int id;
  std::string title;
  double seconds;  // time budget
  std::function<bool(std::ostream&)> body;
};

bool uniform_suite(std::ostream& log) {
  const RingPtr r = ring("ut2:2");
  const SuiteReport s = run_suite("ut2", r, {64, 2});
  for (const auto& c : s.claims) log << "    " << (c.pass ? "ok   " : "FAIL ") << c.name << "\n";
  return s.pass() && verify_uniform_condition(r).holds && uniform_modules(r).size() == 3;
}

bool commutative_suite(std::ostream& log) {
  bool ok = true;
  for (const char* spec : {"zmod:4", "zmod:9"}) {
    const SuiteReport s = verify_commutative_c1(ring(spec), 64);
    const auto* structure = evidence(s, "product of local");
    const auto* all_c1 = evidence(s, "every corpus module");
    const bool certified = evidence(s, "C1-preenvelopes of indecomposables are conclusive") != nullptr;
    const bool here = s.pass() && structure && (*structure)["holds"] == true && all_c1 &&
                      (*all_c1)["holds"] == true && certified;
    log << "    " << spec << ": " << (here ? "ok" : "FAIL") << "\n";
    ok = ok && here;
  }
  return ok;
}

bool z8_negative(std::ostream& log) {
  const RingPtr r = ring("zmod:8");
  const bool condition_fails = !verify_uniform_condition(r).holds;
  const ModulePtr m = direct_sum(fixtures::zmod_cyclic(r, 2), regular_module(r)).sum;
  const C1Result c1 = check_C1(m);
  const bool witnessed = !c1.holds && c1.witness && !is_summand(m, *c1.witness);
  const Corpus& corpus = module_corpus(r, 64);
  const ClosureReport closure = closure_check(1, corpus);
  bool pair = false;
  if (!closure.closed && closure.counterexample) {
    const auto& a = corpus.entries[closure.counterexample->first].module;
    const auto& b = corpus.entries[closure.counterexample->second].module;
    pair = a->group().invariants() == std::vector<std::uint32_t>{2} &&
           b->group().invariants() == std::vector<std::uint32_t>{8};
  }
  log << "    condition fails: " << condition_fails << ", Z2+Z8 witness: " << witnessed << ", pair (Z2, Z8): " << pair
      << "\n";
  return condition_fails && witnessed && pair;
}

bool summand_sum_suite(std::ostream& log) {
  bool ok = true;
  for (const char* spec : {"zmod:4", "zmod:8", "ut2:2"}) {
    const SuiteReport s = run_suite("key_trick", ring(spec), {64, 2});
    const auto* tally = evidence(s, "every non-injective simple");
    const bool here = s.pass() && tally && (*tally)["simples"].get<std::size_t>() > 0;
    log << "    " << spec << ": " << (tally ? (*tally)["tested"].get<std::size_t>() : 0) << " modules, "
        << (here ? "ok" : "FAIL") << "\n";
    ok = ok && here;
  }
  return ok;
}

bool sum_closure_suite(std::ostream& log) {
  bool ok = true;
  for (const char* spec : {"zmod:6", "zmod:4", "ut2:2"}) {
    const RingPtr r = ring(spec);
    const SuiteReport s = run_suite("rare", r, {64, 2});
    bool here = s.pass();
    const bool semisimple = is_semisimple_ring(*r);
    for (int i = 2; i <= 5; ++i) {
      const auto* ev = evidence(s, class_name(i) + ": closed under sums iff the ring");
      here = here && ev && (*ev)["closed"] == semisimple;
    }
    log << "    " << spec << ": " << (here ? "ok" : "FAIL") << "\n";
    ok = ok && here;
  }
  return ok;
}

bool relative_suite(std::ostream& log) {
  const RingPtr r = ring("ut2rel:2,2");
  const SuiteReport s = run_suite("ut2kl", r, {256, 2});
  for (const auto& c : s.claims) log << "    " << (c.pass ? "ok   " : "FAIL ") << c.name << "\n";
  std::vector<std::uint32_t> sizes;
  for (const auto& e : indecomposable_injectives(r)) sizes.push_back(e->size());
  std::sort(sizes.begin(), sizes.end());
  return s.pass() && sizes == std::vector<std::uint32_t>{4, 8};
}

bool property_suite(std::ostream& log) {
  const auto rep = props::run_properties(120, 0x5eed2026);
  const std::pair<const char*, const props::Tally*> rows[] = {
      {"(a) class implications", &rep.chain},   {"(b) injective hull", &rep.hull},
      {"(c) double dual", &rep.dual},           {"(d) quasi-injectivity tests", &rep.quasi},
      {"(e) C1 uniform summands", &rep.uniform}, {"(f) decomposition order", &rep.order},
      {"(g) hom counts", &rep.homs}};
  log << "    modules drawn: " << rep.modules << "\n";
  for (const auto& [name, t] : rows) log << "    " << name << ": " << t->checked - t->failed << "/" << t->checked << "\n";
  return rep.pass();
}

bool hom_free_suite(std::ostream& log) {
  bool ok = true;
  for (const char* spec : {"zmod:4", "ut2:2"}) {
    const SuiteReport s = verify_hom_free_c1_injective(ring(spec), 64);
    const auto* ev = evidence(s, "C1 modules with no map");
    log << "    " << spec << ": " << (ev ? (*ev)["hom_free_c1_modules"].get<std::size_t>() : 0)
        << " hom-free C1 modules, " << (s.pass() ? "ok" : "FAIL") << "\n";
    ok = ok && s.pass();
  }
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "UT2(F2): three uniform classes, every corpus module C1, uniform condition holds", 60, uniform_suite},
      {2, "Z/4 and Z/9: local principal of length 2, all corpus modules C1, conclusive certificates", 60,
       commutative_suite},
      {3, "Z/8: uniform condition fails, Z2+Z8 not C1 with witness, closure counterexample (Z2, Z8)", 60, z8_negative},
      {4, "Z/4, Z/8, UT2(F2): N + E(N) has independent isomorphic summands with non-summand sum", 60,
       summand_sum_suite},
      {5, "Z/6, Z/4, UT2(F2): sum closure iff members injective iff semisimple (C2..C5)", 180, sum_closure_suite},
      {6, "UT2(F4,F2): condition holds, injectives of sizes 4 and 8, P not C1, conclusive preenvelope", 300,
       relative_suite},
      {7, "randomized properties over at least 100 modules", 300, property_suite},
      {8, "Z/4 and UT2(F2): C1 modules with no map into E(R) are injective", 60, hom_free_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::ostringstream log;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.body(log);
    } catch (const std::exception& e) {
      log << "    exception: " << e.what() << "\n";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.seconds;
    if (!in_time) log << "    over the time budget of " << c.seconds << " s\n";
    ok = ok && in_time;
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << std::fixed
              << std::setprecision(2) << secs << " s)\n"
              << log.str();
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
