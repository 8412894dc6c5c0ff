#include <doctest.h>

#include "fixtures.hpp"
#include "modclass/errors.hpp"
#include "modclass/hom.hpp"
#include "modclass/lattice.hpp"
#include "modclass/limits.hpp"

using namespace modclass;
using fixtures::brute_force_hom_count;
using fixtures::brute_force_submodules;

namespace {

RingPtr z4() { return build_ring(RingSpec::zmod(4)); }

// Z/2 ⊕ Z/4 over Z/4; element (a, b) has index 4a + b
ModulePtr z2_z4() {
  auto r = z4();
  return direct_sum(fixtures::zmod_cyclic(r, 2), regular_module(r)).sum;
}

IndexSet set_of(const FiniteModule& m, std::initializer_list<std::uint32_t> xs) {
  IndexSet s(m.size());
  for (auto x : xs) s.insert(x);
  return s;
}

}  // namespace

TEST_CASE("generated submodules") {
  auto r = z4();
  auto m = regular_module(r);
  CHECK(generated_submodule(m, {2}).members == set_of(*m, {0, 2}));
  CHECK(generated_submodule(m, {}).members == set_of(*m, {0}));

  auto s = z2_z4();
  // (1,1) -> index 5; (0,2) -> 2; (1,3) -> 7
  CHECK(generated_submodule(s, {5}).members == set_of(*s, {0, 5, 2, 7}));
}

TEST_CASE("submodule lattices agree with subset enumeration") {
  auto r = z4();
  CHECK(submodule_lattice(*regular_module(r))->size() == 3);
  auto f2 = build_ring(RingSpec::gf(2));
  CHECK(submodule_lattice(*power(regular_module(f2), 2))->size() == 5);
  auto s = z2_z4();
  const auto lat = *submodule_lattice(*s);
  CHECK(lat.size() == 8);
  CHECK(lat == brute_force_submodules(*s));

  auto u = fixtures::ut2();
  for (const auto& m : {u.regular, u.A, u.B, u.C, direct_sum(u.A, u.C).sum}) {
    CHECK(*submodule_lattice(*m) == brute_force_submodules(*m));
  }
  auto z6 = build_ring(RingSpec::zmod(6));
  auto z3 = fixtures::zmod_cyclic(z6, 3);
  CHECK(*submodule_lattice(*power(z3, 2)) == brute_force_submodules(*power(z3, 2)));
}

TEST_CASE("lattice laws") {
  auto u = fixtures::ut2();
  for (const auto& m : {z2_z4(), u.regular, direct_sum(u.B, u.C).sum}) {
    const auto& lat = *submodule_lattice(*m);
    CHECK(lat.front() == zero_set(*m));
    CHECK(lat.back() == full_set(*m));
    for (const auto& a : lat) {
      for (const auto& b : lat) {
        CHECK(std::find(lat.begin(), lat.end(), a & b) != lat.end());
        CHECK(std::find(lat.begin(), lat.end(), join(*m, a, b)) != lat.end());
      }
    }
  }
}

TEST_CASE("lattice cap is an explicit error") {
  auto f2 = build_ring(RingSpec::gf(2));
  Limits l = limits();
  l.lattice_size = 10;
  ScopedLimits lim(l);
  CHECK_THROWS_AS(submodule_lattice(*power(regular_module(f2), 3)), LatticeTooLarge);
}

TEST_CASE("quotients") {
  auto r = z4();
  auto m = regular_module(r);
  auto q = quotient(generated_submodule(m, {2}));
  CHECK(q.module->size() == 2);
  CHECK(are_isomorphic(q.module, fixtures::zmod_cyclic(r, 2)).isomorphic);
  q.projection.validate();

  auto same = quotient({m, zero_set(*m)});
  CHECK(same.module->size() == 4);
  CHECK(are_isomorphic(same.module, m).isomorphic);

  auto u = fixtures::ut2();
  auto top = quotient(jacobson_radical(u.ring)).module;
  CHECK(top->size() == 4);
  CHECK(is_semisimple(*top));
  CHECK(are_isomorphic(top, direct_sum(u.A, u.B).sum).isomorphic);
}

TEST_CASE("direct sums satisfy the biproduct identities") {
  auto u = fixtures::ut2();
  auto ds = direct_sum({u.A, u.B, u.C});
  CHECK(ds.sum->size() == 16);
  auto s = direct_sum(z2_z4(), zero_module(z4()));
  CHECK(are_isomorphic(s.sum, z2_z4()).isomorphic);
  for (std::size_t i = 0; i < 3; ++i) {
    ds.injections[i].validate();
    ds.projections[i].validate();
    for (std::size_t j = 0; j < 3; ++j) {
      auto pij = compose(ds.projections[i], ds.injections[j]);
      if (i == j) {
        CHECK(pij == identity_hom(ds.injections[i].dom));
      } else {
        CHECK(pij.is_zero());
      }
    }
  }
  auto total = zero_hom(ds.sum, ds.sum);
  for (std::size_t i = 0; i < 3; ++i) total = add_homs(total, compose(ds.injections[i], ds.projections[i]));
  CHECK(total == identity_hom(ds.sum));
}

TEST_CASE("hom spaces") {
  auto r = z4();
  auto z2 = fixtures::zmod_cyclic(r, 2);
  auto z4m = regular_module(r);
  auto h = hom_space(z2, z4m);
  CHECK(h.count() == 2);
  std::vector<std::uint32_t> images;
  for (const auto& f : h.all()) {
    f.validate();
    images.push_back(z4m->group().code_of(f(z2->group().basis_element(0))));
  }
  std::sort(images.begin(), images.end());
  CHECK(images == std::vector<std::uint32_t>{0, 2});

  CHECK(hom_space(zero_module(r), z4m).count() == 1);

  auto u = fixtures::ut2();
  CHECK(hom_space(u.A, u.B).count() == 1);
  CHECK(hom_space(u.B, u.A).count() == 1);
  CHECK(hom_space(u.A, u.C).count() == 2);
  CHECK(hom_space(u.C, u.B).count() == 2);
}

TEST_CASE("hom counts match function enumeration") {
  auto u = fixtures::ut2();
  auto r = z4();
  auto z6 = build_ring(RingSpec::zmod(6));
  std::vector<std::vector<ModulePtr>> families = {
      {u.A, u.B, u.C, direct_sum(u.A, u.B).sum, direct_sum(u.A, u.A).sum, u.regular},
      {fixtures::zmod_cyclic(r, 2), regular_module(r), z2_z4(), power(fixtures::zmod_cyclic(r, 2), 2)},
      {regular_module(z6), fixtures::zmod_cyclic(z6, 2), fixtures::zmod_cyclic(z6, 3)},
  };
  for (const auto& fam : families) {
    for (const auto& a : fam) {
      for (const auto& b : fam) {
        CHECK(hom_space(a, b).count() == brute_force_hom_count(*a, *b));
        for (const auto& g : hom_space(a, b).generator_homs()) g.validate();
      }
    }
  }
}

TEST_CASE("isomorphism") {
  auto r = z4();
  auto m = regular_module(r);
  auto z2 = fixtures::zmod_cyclic(r, 2);
  auto ideal = realize(generated_submodule(m, {2})).module;
  auto iso = are_isomorphic(z2, ideal);
  CHECK(iso.isomorphic);
  REQUIRE(iso.witness);
  iso.witness->validate();
  CHECK(iso.witness->is_injective());
  CHECK_FALSE(are_isomorphic(power(z2, 2), m).isomorphic);
  auto u = fixtures::ut2();
  CHECK_FALSE(are_isomorphic(u.A, u.B).isomorphic);
  CHECK(are_isomorphic(direct_sum(u.A, u.C).sum, direct_sum(u.C, u.A).sum).isomorphic);
  CHECK(are_isomorphic(u.regular, direct_sum(u.A, u.C).sum).isomorphic);
}

TEST_CASE("socle radical and length") {
  auto r = z4();
  auto m = regular_module(r);
  CHECK(socle(*m) == set_of(*m, {0, 2}));
  CHECK(composition_length(*m) == 2);
  CHECK(composition_length(*zero_module(r)) == 0);
  auto u = fixtures::ut2();
  CHECK(composition_length(*u.regular) == 3);
  CHECK(socle(*u.regular).count() == 4);
  CHECK(composition_length(*u.C) == 2);
  CHECK(composition_length(*u.A) == 1);

  auto z6 = build_ring(RingSpec::zmod(6));
  for (const auto& x : {m, z2_z4(), u.regular, u.C, direct_sum(u.B, u.C).sum, regular_module(z6),
                        power(regular_module(z6), 2)}) {
    CHECK(socle(*x) == socle_by_simple_cyclics(*x));
    CHECK(radical(*x) == radical_by_maximal_submodules(*x));
  }
  CHECK(composition_length(*direct_sum(u.regular, u.C).sum) == 5);
  CHECK(composition_length(*power(regular_module(z6), 2)) == 4);
}

TEST_CASE("jacobson radical") {
  CHECK(jacobson_radical(build_ring(RingSpec::zmod(6))).size() == 1);
  auto z = z4();
  CHECK(jacobson_radical(z).members == set_of(*regular_module(z), {0, 2}));
  auto u = fixtures::ut2();
  auto j = jacobson_radical(u.ring);
  CHECK(j.members == set_of(*u.regular, {0, fixtures::ut2_index(0, 1, 0)}));
  CHECK(j.members == radical_by_maximal_submodules(*u.regular));
}

TEST_CASE("essential submodules") {
  auto m = regular_module(z4());
  CHECK(is_essential(*m, set_of(*m, {0, 2}), full_set(*m)));
  CHECK(is_essential(*m, set_of(*m, {0, 2}), set_of(*m, {0, 2})));
  auto s = z2_z4();
  CHECK_FALSE(is_essential(*s, set_of(*s, {0, 4}), full_set(*s)));
  auto u = fixtures::ut2();
  for (const auto& x : {s, u.regular, direct_sum(u.A, u.C).sum}) {
    const auto& lat = *submodule_lattice(*x);
    for (const auto& a : lat) {
      for (const auto& b : lat) {
        if (!a.is_subset_of(b)) continue;
        CHECK(is_essential(*x, a, b) == is_essential_by_socle(*x, a, b));
      }
      if (is_essential(*x, a, full_set(*x))) CHECK(socle(*x).is_subset_of(a));
    }
  }
}

TEST_CASE("uniform modules") {
  auto r = z4();
  CHECK(is_uniform(*regular_module(r)));
  CHECK_FALSE(is_uniform(*power(fixtures::zmod_cyclic(r, 2), 2)));
  auto u = fixtures::ut2();
  CHECK(is_uniform(*u.C));
  CHECK_FALSE(is_uniform(*u.regular));
  for (const auto& x : {u.A, u.B, u.C, u.regular, z2_z4(), regular_module(r), zero_module(r)}) {
    CHECK(is_uniform(*x) == socle_is_simple(*x));
  }
}

TEST_CASE("summands and complements") {
  auto m = regular_module(z4());
  CHECK_FALSE(summand_complement({m, set_of(*m, {0, 2})}).has_value());
  auto c0 = summand_complement({m, zero_set(*m)});
  REQUIRE(c0);
  CHECK(c0->members == full_set(*m));
  auto s = z2_z4();
  auto c = summand_complement({s, set_of(*s, {0, 4})});
  REQUIRE(c);
  CHECK(c->members == set_of(*s, {0, 1, 2, 3}));

  auto u = fixtures::ut2();
  for (const auto& x : {s, u.regular, direct_sum(u.A, u.C).sum, direct_sum(u.B, u.B).sum}) {
    for (const auto& a : *submodule_lattice(*x)) {
      auto comp = summand_complement({x, a});
      CHECK(comp.has_value() == fixtures::brute_force_is_summand(*x, a));
      if (comp) {
        CHECK(a.count() * comp->size() == x->size());
        auto rebuilt = direct_sum(realize({x, a}).module, realize(*comp).module).sum;
        CHECK(are_isomorphic(rebuilt, x).isomorphic);
      }
    }
  }
}

TEST_CASE("extensions") {
  auto r = z4();
  auto m = regular_module(r);
  Submodule two{m, set_of(*m, {0, 2})};
  auto real = realize(two);
  auto a = real.module;
  auto h = extension_exists(two, real.inclusion);
  REQUIRE(h.has_value());
  CHECK(compose(*h, real.inclusion) == real.inclusion);
  // the identity of 2Z/4 would need h(2) = 2h(1) = 2, impossible in a group of exponent 2
  CHECK_FALSE(extension_exists(two, identity_hom(a)).has_value());
  auto z = zero_hom(a, fixtures::zmod_cyclic(r, 2));
  CHECK(extension_exists(two, z).has_value());
  // {0,2} -> Z/2 sending 2 to the generator: any h: Z/4 -> Z/2 has h(2) = 0
  auto z2 = fixtures::zmod_cyclic(r, 2);
  ModuleHom f{a, z2, {0, 1}};
  f.validate();
  CHECK_FALSE(extension_exists(two, f).has_value());
}

TEST_CASE("module axioms are validated") {
  auto r = z4();
  // Z/2 with 1 acting as 0 is not unital
  CHECK_THROWS_AS(FiniteModule::from_tables(r, {{0, 1}, {1, 0}}, {{0, 0}, {0, 0}, {0, 0}, {0, 0}}), AxiomViolation);
  auto ok = FiniteModule::from_tables(r, {{0, 1}, {1, 0}}, {{0, 0}, {0, 1}, {0, 0}, {0, 1}});
  CHECK(are_isomorphic(ok, fixtures::zmod_cyclic(r, 2)).isomorphic);
  auto back = FiniteModule::from_json(z2_z4()->to_json(), r);
  CHECK(are_isomorphic(back, z2_z4()).isomorphic);
}

TEST_CASE("module size cap") {
  auto f2 = build_ring(RingSpec::gf(2));
  Limits l = limits();
  l.module_size = 16;
  ScopedLimits lim(l);
  CHECK_THROWS_AS(power(regular_module(f2), 5), SizeLimit);
}
