#include <doctest.h>

#include "fixtures.hpp"
#include "modclass/approximation.hpp"
#include "modclass/errors.hpp"
#include "modclass/injectivity.hpp"

using namespace modclass;

namespace {

RingPtr ring(const char* s) { return build_ring(RingSpec::parse(s)); }

std::vector<std::uint32_t> sizes(const std::vector<ModulePtr>& ms) {
  std::vector<std::uint32_t> out;
  for (const auto& m : ms) out.push_back(m->size());
  return out;
}

bool claim(const SuiteReport& s, const std::string& prefix) {
  for (const auto& c : s.claims) {
    if (c.name.rfind(prefix, 0) == 0) return c.pass;
  }
  FAIL("no claim " << prefix);
  return false;
}

const nlohmann::json& evidence(const SuiteReport& s, const std::string& prefix) {
  for (const auto& c : s.claims) {
    if (c.name.rfind(prefix, 0) == 0) return c.evidence;
  }
  static const nlohmann::json none;
  FAIL("no claim " << prefix);
  return none;
}

// every f: N -> T factors as α∘u, with f from raw enumeration and α from the full hom set
bool factors_exhaustively(const ModuleHom& u, const ModulePtr& t) {
  const auto alphas = hom_space(u.cod, t).all();
  for (const auto& f : fixtures::brute_force_homs(*u.dom, *t)) {
    bool found = false;
    for (const auto& a : alphas) {
      bool eq = true;
      for (std::uint32_t x = 0; x < u.dom->size() && eq; ++x) eq = a(u(x)) == f[x];
      if (eq) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("corpus examples") {
  const Corpus& f2 = module_corpus(ring("gf:2"), 8);
  CHECK(sizes(f2.pool) == std::vector<std::uint32_t>{2});
  REQUIRE(f2.entries.size() == 3);
  CHECK(f2.entries[0].module->size() == 2);
  CHECK(f2.entries[2].module->size() == 8);
  CHECK(f2.generator_bound == 2);

  const Corpus& z4 = module_corpus(ring("zmod:4"), 16);
  CHECK(sizes(z4.pool) == std::vector<std::uint32_t>{2, 4});
  CHECK(z4.entries.size() == 8);
  for (const auto& e : z4.entries) CHECK(e.module->size() <= 16);
  CHECK(z4.find({1, 1}).has_value());
  CHECK_FALSE(z4.find({5, 0}).has_value());

  auto u = fixtures::ut2();
  const Corpus& c = module_corpus(u.ring, 16);
  REQUIRE(c.pool.size() == 3);
  for (const auto& named : {u.A, u.B, u.C}) {
    std::size_t hits = 0;
    for (const auto& p : c.pool) hits += fixtures::brute_force_isomorphic(*p, *named);
    CHECK(hits == 1);
  }
  // nonempty (a, b, c) with 2^a 2^b 4^c <= 16
  CHECK(c.entries.size() == 21);
  CHECK(&module_corpus(u.ring, 16) == &c);
}

TEST_CASE("closure examples") {
  auto z8 = ring("zmod:8");
  const Corpus& c8 = module_corpus(z8, 64);
  auto r8 = closure_check(1, c8);
  CHECK_FALSE(r8.closed);
  REQUIRE(r8.counterexample);
  const auto& a = c8.entries[r8.counterexample->first].module;
  const auto& b = c8.entries[r8.counterexample->second].module;
  CHECK(a->size() == 2);
  CHECK(b->size() == 8);
  CHECK(fixtures::brute_force_is_c1(*a));
  CHECK(fixtures::brute_force_is_c1(*b));
  CHECK_FALSE(fixtures::brute_force_is_c1(*direct_sum(a, b).sum));

  const Corpus& c4 = module_corpus(ring("zmod:4"), 64);
  auto r4 = closure_check(1, c4);
  CHECK(r4.closed);
  CHECK(r4.undecided == 0);
  CHECK(r4.members == c4.entries.size());
  for (const auto& e : c4.entries) {
    if (e.module->size() <= 16) CHECK(fixtures::brute_force_is_c1(*e.module));
  }

  const Corpus& c6 = module_corpus(ring("zmod:6"), 64);
  for (int cls = 0; cls <= 6; ++cls) CHECK(closure_check(cls, c6).closed);
}

TEST_CASE("preenvelope checker") {
  auto z4 = ring("zmod:4");
  auto n = fixtures::zmod_cyclic(z4, 2);
  auto hull = injective_hull(n);
  std::vector<ModulePtr> injectives{regular_module(z4), power(regular_module(z4), 2)};
  auto ok = verify_preenvelope(hull.embedding, injectives);
  CHECK(ok.passes);
  CHECK(ok.targets_checked == 2);
  for (const auto& f : ok.log) {
    const auto& t = injectives[f.target];
    const auto alpha = hom_from_basis_images(hull.hull, t, f.alpha);
    const auto g = hom_space(n, t).generator(f.generator);
    CHECK(compose(alpha, hull.embedding) == g);
  }

  auto zero = zero_hom(n, zero_module(z4));
  auto bad = verify_preenvelope(zero, injectives);
  CHECK_FALSE(bad.passes);
  REQUIRE(bad.counterexample);
  CHECK_FALSE(bad.counterexample->second.is_zero());
  CHECK(bad.to_json().contains("counterexample"));
}

TEST_CASE("C1-preenvelope of Z2+Z4") {
  auto z4 = ring("zmod:4");
  auto n = direct_sum(fixtures::zmod_cyclic(z4, 2), regular_module(z4)).sum;
  auto cert = construct_C1_preenvelope(n, 64);
  CHECK(cert.passes());
  CHECK(cert.label == "CONCLUSIVE");
  CHECK(cert.target_membership == "computed");
  CHECK(cert.undecided_targets == 0);
  for (const auto& p : decompose(cert.u.cod).pieces()) CHECK((p->size() == 2 || p->size() == 4));
  CHECK(cert.u.cod->size() == 64);
  CHECK(cert.split_mono);
  cert.u.validate();

  // the generator check agrees with full enumeration on small targets
  for (const auto& e : module_corpus(z4, 16).entries) {
    CAPTURE(e.module->size());
    CHECK(factors_exhaustively(cert.u, e.module));
  }
  auto j = cert.to_json();
  CHECK(j["passes"] == true);
  CHECK(j["check"]["factorizations"].size() == cert.check.maps_checked);
}

TEST_CASE("C1 modules embed as summands of their preenvelope") {
  auto u = fixtures::ut2();
  for (const auto& n : {regular_module(ring("zmod:4")), fixtures::zmod_cyclic(ring("zmod:4"), 2), u.A, u.C,
                        direct_sum(u.A, u.B).sum}) {
    REQUIRE(fixtures::brute_force_is_c1(*n));
    auto cert = construct_C1_preenvelope(n, 32);
    CHECK(cert.split_mono);
    CHECK(cert.passes());
  }
}

TEST_CASE("non-C1 projective over the relative upper triangular ring") {
  auto r = ring("ut2rel:2,2");
  ModulePtr p;
  for (const auto& c : decompose(regular_module(r)).summands) {
    if (!is_simple(*c.module)) p = c.module;
  }
  REQUIRE(p);
  CHECK(p->size() == 16);
  CHECK_FALSE(is_C1(p));
  auto cert = construct_C1_preenvelope(p, 64);
  CHECK(cert.passes());
  CHECK(cert.label == "CONCLUSIVE");
  CHECK_FALSE(cert.split_mono);
}

TEST_CASE("uniform condition verdicts") {
  auto u = verify_uniform_condition(fixtures::ut2().ring);
  CHECK(u.holds);
  CHECK(u.uniforms.size() == 3);

  auto z8 = verify_uniform_condition(ring("zmod:8"));
  CHECK_FALSE(z8.holds);
  std::size_t bad = 0;
  for (const auto& row : z8.uniforms) {
    if (!row.ok) {
      ++bad;
      CHECK(row.length >= 2);
      CHECK((row.length == 3 || !row.injective));
    }
  }
  CHECK(bad == 2);

  auto r = ring("ut2rel:2,2");
  auto kl = verify_uniform_condition(r, &module_corpus(r, 64));
  CHECK(kl.holds);
  REQUIRE(kl.c1_modules_split);
  CHECK(*kl.c1_modules_split);
  CHECK(kl.c1_modules_checked > 0);
}

TEST_CASE("sum closure against injectivity") {
  auto z6 = ring("zmod:6");
  for (int i = 2; i <= 6; ++i) {
    auto s = verify_sum_closure(z6, i, 64);
    CHECK(s.pass());
    CHECK(evidence(s, class_name(i) + ": closed")["closed"]["closed"] == true);
  }
  auto s3 = verify_sum_closure(ring("zmod:4"), 3, 64);
  CHECK(s3.pass());
  const auto& ev = evidence(s3, "C3: closed under sums iff every");
  CHECK(ev["closed"]["closed"] == false);
  CHECK(ev["members_injective"] == false);

  auto s2 = verify_sum_closure(fixtures::ut2().ring, 2, 64);
  CHECK(s2.pass());
  CHECK(evidence(s2, "C2: closed under sums iff the ring")["semisimple"] == false);
  CHECK(evidence(s2, "C2: closed under sums iff the ring")["closed"] == false);

  CHECK(verify_sum_closure(fixtures::ut2().ring, 6, 64).claims.size() == 1);
}

TEST_CASE("commutative rings where every module is C1") {
  for (const char* spec : {"zmod:4", "zmod:9"}) {
    auto s = verify_commutative_c1(ring(spec), 64);
    CHECK(s.pass());
    CHECK(evidence(s, "product of local")["holds"] == true);
    CHECK(evidence(s, "every corpus module")["holds"] == true);
    CHECK(claim(s, "C1-preenvelopes of indecomposables are conclusive"));
  }
  auto s8 = verify_commutative_c1(ring("zmod:8"), 64);
  CHECK(s8.pass());
  CHECK(evidence(s8, "product of local")["holds"] == false);
  CHECK(evidence(s8, "every corpus module")["holds"] == false);
  CHECK(evidence(s8, "every corpus module")["evidence"]["non_c1"]["invariants"] == std::vector<int>{2, 8});

  CHECK(verify_commutative_c1(ring("zmod:6"), 64).pass());
  CHECK_THROWS_AS(verify_commutative_c1(fixtures::ut2().ring, 64), NotCommutative);
}

TEST_CASE("named suites") {
  auto u = fixtures::ut2().ring;
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    if (name == "comC1" || name == "ut2kl") continue;
    auto s = run_suite(name, u, {32, 2});
    CHECK(s.pass());
    auto j = s.to_json();
    CHECK(j["suite"] == name);
    CHECK(j["generator_bound"] == 2);
    CHECK(j["pass"] == s.pass());
  }
  auto bad = run_suite("ut2", ring("zmod:8"), {32, 2});
  CHECK_FALSE(bad.pass());
  CHECK_THROWS_AS(run_suite("nope", u), InvalidSpec);

  SuiteReport r;
  r.add("a", true);
  CHECK(r.pass());
  r.add("b", false);
  CHECK_FALSE(r.pass());
}
