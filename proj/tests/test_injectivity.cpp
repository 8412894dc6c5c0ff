#include <doctest.h>

#include "fixtures.hpp"
#include "modclass/errors.hpp"
#include "modclass/hom.hpp"
#include "modclass/injectivity.hpp"

using namespace modclass;

namespace {

RingPtr ring(const char* s) { return build_ring(RingSpec::parse(s)); }

std::vector<std::uint32_t> sizes(const std::vector<ModulePtr>& ms) {
  std::vector<std::uint32_t> out;
  for (const auto& m : ms) out.push_back(m->size());
  return out;
}

std::vector<ModulePtr> small_family() {
  auto u = fixtures::ut2();
  auto z4 = ring("zmod:4");
  auto z8 = ring("zmod:8");
  return {u.A,
          u.B,
          u.C,
          u.regular,
          direct_sum(u.A, u.B).sum,
          direct_sum(u.B, u.C).sum,
          fixtures::zmod_cyclic(z4, 2),
          regular_module(z4),
          direct_sum(fixtures::zmod_cyclic(z4, 2), regular_module(z4)).sum,
          fixtures::zmod_cyclic(z8, 4),
          regular_module(z8)};
}

}  // namespace

TEST_CASE("injectivity examples") {
  auto z4 = ring("zmod:4");
  CHECK(is_injective(regular_module(z4)));
  CHECK_FALSE(is_injective(fixtures::zmod_cyclic(z4, 2)));
  auto z6 = ring("zmod:6");
  CHECK(is_injective(fixtures::zmod_cyclic(z6, 2)));
  CHECK(is_injective(power(regular_module(z6), 2)));
  auto u = fixtures::ut2();
  CHECK_FALSE(is_injective(u.A));
  CHECK(is_injective(u.B));
  CHECK(is_injective(u.C));
}

TEST_CASE("injectivity agrees with the Baer oracle") {
  for (const auto& m : small_family()) {
    const bool expected = fixtures::brute_force_is_injective(m);
    CHECK(is_injective(m, BaerMode::essential_ideals) == expected);
    CHECK(is_injective(m, BaerMode::all_ideals) == expected);
  }
}

TEST_CASE("injectivity of direct sums") {
  auto fam = small_family();
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i; j < 6; ++j) {
      CHECK(is_injective(direct_sum(fam[i], fam[j]).sum) == (is_injective(fam[i]) && is_injective(fam[j])));
    }
  }
}

TEST_CASE("character modules") {
  auto z4 = ring("zmod:4");
  auto m = direct_sum(fixtures::zmod_cyclic(z4, 2), regular_module(z4)).sum;
  CHECK(character_module(m)->size() == 8);

  auto u = fixtures::ut2();
  auto reg_dual = character_module(u.regular);
  CHECK(is_injective(reg_dual));
  auto q = injective_cogenerator(u.ring);
  CHECK(q->size() == u.ring->size());
  CHECK(is_injective(q));

  for (const auto& x : small_family()) {
    auto cm = character_module(x);
    CHECK(cm->size() == x->size());
    auto dd = double_dual(x);
    auto ev = evaluation(x, dd);
    ev.validate();
    CHECK(ev.is_injective());
    CHECK(ev.is_surjective());
  }
  CHECK(are_isomorphic(double_dual(u.regular), u.regular).isomorphic);

  // the dual of a simple module is simple
  for (const auto& s : simple_modules(u.ring)) CHECK(is_simple(*character_module(s)));
}

TEST_CASE("injective hull examples") {
  auto z4 = ring("zmod:4");
  auto h = injective_hull(fixtures::zmod_cyclic(z4, 2));
  CHECK(h.hull->size() == 4);
  CHECK(are_isomorphic(h.hull, regular_module(z4)).isomorphic);

  auto hi = injective_hull(regular_module(z4));
  CHECK(hi.embedding.is_surjective());

  auto u = fixtures::ut2();
  auto ha = injective_hull(u.A);
  CHECK(ha.hull->size() == 4);
  CHECK(are_isomorphic(ha.hull, u.C).isomorphic);
  CHECK(ha.to_json()["hull_size"] == 4);
}

TEST_CASE("hull properties") {
  for (const auto& m : small_family()) {
    for (auto method : {HullMethod::cogenerator, HullMethod::socle}) {
      auto h = injective_hull(m, method);
      h.embedding.validate();
      CHECK(h.embedding.is_injective());
      CHECK(is_injective(h.hull));
      CHECK(is_essential(*h.hull, h.embedding.image().members, full_set(*h.hull)));
      CHECK(h.hull->size() >= m->size());
      CHECK((h.hull->size() == m->size()) == is_injective(m));
      auto again = injective_hull(h.hull, method);
      CHECK(again.embedding.is_surjective());
      auto soc_m = realize(socle_of(m)).module;
      auto soc_e = realize(socle_of(h.hull)).module;
      CHECK(are_isomorphic(soc_m, soc_e).isomorphic);
    }
    CHECK(are_isomorphic(injective_hull(m, HullMethod::cogenerator).hull, injective_hull(m, HullMethod::socle).hull)
              .isomorphic);
  }
}

TEST_CASE("simple modules") {
  CHECK(sizes(simple_modules(ring("zmod:4"))) == std::vector<std::uint32_t>{2});
  auto u = fixtures::ut2();
  const auto& s = simple_modules(u.ring);
  CHECK(sizes(s) == std::vector<std::uint32_t>{2, 2});
  CHECK(simple_type(u.A) != simple_type(u.B));
  CHECK(sizes(simple_modules(ring("zmod:6"))) == std::vector<std::uint32_t>{2, 3});
  CHECK(sizes(simple_modules(ring("gf:4"))) == std::vector<std::uint32_t>{4});
  CHECK_THROWS_AS(simple_type(u.C), PreconditionViolated);
}

TEST_CASE("indecomposable injectives") {
  auto u = fixtures::ut2();
  auto inj = indecomposable_injectives(u.ring);
  REQUIRE(inj.size() == 2);
  std::vector<std::uint32_t> sz = sizes(inj);
  std::sort(sz.begin(), sz.end());
  CHECK(sz == std::vector<std::uint32_t>{2, 4});
  bool has_b = false;
  bool has_c = false;
  for (const auto& e : inj) {
    has_b = has_b || are_isomorphic(e, u.B).isomorphic;
    has_c = has_c || are_isomorphic(e, u.C).isomorphic;
  }
  CHECK(has_b);
  CHECK(has_c);

  auto z4 = ring("zmod:4");
  CHECK(sizes(indecomposable_injectives(z4)) == std::vector<std::uint32_t>{4});

  auto kl = ring("ut2rel:2,2");
  auto ikl = indecomposable_injectives(kl);
  std::vector<std::uint32_t> skl = sizes(ikl);
  std::sort(skl.begin(), skl.end());
  CHECK(skl == std::vector<std::uint32_t>{4, 8});
  for (const auto& e : ikl) CHECK(composition_length(*e) == (e->size() == 4 ? 1U : 2U));
}

TEST_CASE("uniform modules") {
  CHECK(sizes(uniform_modules(ring("zmod:4"))) == std::vector<std::uint32_t>{2, 4});
  CHECK(sizes(uniform_modules(ring("zmod:8"))) == std::vector<std::uint32_t>{2, 4, 8});
  auto u = fixtures::ut2();
  const auto& un = uniform_modules(u.ring);
  REQUIRE(un.size() == 3);
  std::vector<std::tuple<std::uint32_t, std::size_t, bool>> seen;
  for (const auto& m : un) seen.emplace_back(m->size(), composition_length(*m), is_injective(m));
  std::sort(seen.begin(), seen.end());
  CHECK(seen == std::vector<std::tuple<std::uint32_t, std::size_t, bool>>{{2, 1, false}, {2, 1, true}, {4, 2, true}});
  for (const auto& m : un) CHECK(is_uniform(*m));
}
