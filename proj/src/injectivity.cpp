#include "modclass/injectivity.hpp"

#include <algorithm>

#include "modclass/errors.hpp"
#include "modclass/hom.hpp"
#include "modclass/lattice.hpp"
#include "modclass/limits.hpp"

namespace modclass {

namespace {

RingPtr cached_opposite(const RingPtr& r) {
  return *r->cache().get_or_compute<RingPtr>("opposite", [&] { return opposite_ring(*r); });
}

// digit i of a code in the layout built by from_factors
std::uint32_t code_digit(const AbelianLayout& g, std::uint32_t code, std::size_t i) {
  std::uint32_t stride = 1;
  for (std::size_t j = g.rank(); j-- > i + 1;) stride *= g.factors()[j].order;
  return (code / stride) % g.factors()[i].order;
}

std::vector<std::uint32_t> positions(const IndexSet& s) {
  std::vector<std::uint32_t> pos(s.universe(), 0);
  std::uint32_t k = 0;
  s.for_each([&](std::uint32_t x) { pos[x] = k++; });
  return pos;
}

struct SimpleHulls {
  std::vector<ModulePtr> simples;
  std::vector<HullResult> hulls;
  std::vector<ModulePtr> uniforms;
};

std::uint64_t cogenerator_power_size(const FiniteRing& r, std::size_t k) {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < k; ++i) {
    s *= r.size();
    if (s > (std::uint64_t{1} << 40)) return s;
  }
  return s;
}

std::vector<std::uint32_t> character_generators(const FiniteModule& cm) {
  std::vector<std::uint32_t> gens;
  IndexSet span = zero_set(cm);
  while (span.count() < cm.size()) {
    // the largest cyclic outside the span keeps the count low
    std::uint32_t best = 0;
    std::size_t best_size = 0;
    for (std::uint32_t x = 1; x < cm.size(); ++x) {
      if (span.contains(x)) continue;
      const std::size_t s = join_size_with_cyclic(cm, span, span.count(), x);
      if (s > best_size) {
        best_size = s;
        best = x;
      }
    }
    gens.push_back(best);
    span = join(cm, span, cyclic_submodule(cm, best));
  }
  return gens;
}

HullResult finish(const ModulePtr& m, ModulePtr hull, std::vector<std::uint32_t> map, std::string method) {
  HullResult h;
  h.hull = std::move(hull);
  h.embedding = ModuleHom{m, h.hull, std::move(map)};
  h.method = std::move(method);
  if (!h.embedding.is_injective()) throw HullPostconditionFailure("hull embedding is not injective");
  h.essential = is_essential_by_socle(*h.hull, h.embedding.image().members, full_set(*h.hull));
  h.injective = is_injective(h.hull);
  if (!h.essential || !h.injective) {
    throw HullPostconditionFailure(std::string("hull of a module of size ") + std::to_string(m->size()) + " is " +
                                   (h.injective ? "not essential" : "not injective"));
  }
  return h;
}

HullResult hull_by_cogenerator(const ModulePtr& m, const std::vector<std::uint32_t>& chars) {
  const RingPtr& r = m->ring_ptr();
  const ModulePtr q = injective_cogenerator(r);
  const std::size_t k = chars.size();
  const ModulePtr c = power(q, k);
  const AbelianLayout& qg = q->group();
  const AbelianLayout& rg = r->additive();
  const std::uint64_t dm = m->group().exponent();

  // x -> (s -> chi_j(x s))_j
  std::vector<std::uint32_t> phi(m->size());
  for (std::uint32_t x = 0; x < m->size(); ++x) {
    std::uint32_t idx = 0;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::uint32_t> coords(qg.rank());
      for (std::size_t i = 0; i < rg.rank(); ++i) {
        const std::uint64_t v = character_value(*m, chars[j], m->act(x, rg.basis_element(i)));
        coords[i] = static_cast<std::uint32_t>(v * rg.factors()[i].order / dm);
      }
      idx = idx * q->size() + qg.from_coords(coords);
    }
    phi[x] = idx;
  }

  IndexSet u(c->size());
  for (auto y : phi) u.insert(y);
  IndexSet w = join(*c, u, socle(*c));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t x = 1; x < c->size(); ++x) {
      if (u.contains(x)) continue;
      const IndexSet cyc = cyclic_submodule(*c, x);
      bool ok = true;
      cyc.for_each([&](std::uint32_t y) { ok = ok && (!w.contains(y) || u.contains(y)); });
      if (!ok) continue;
      u = join(*c, u, cyc);
      w = join(*c, w, cyc);
      changed = true;
    }
  }

  RealizedSubmodule hull = realize({c, u});
  const auto pos = positions(u);
  for (auto& y : phi) y = pos[y];
  HullResult h = finish(m, hull.module, std::move(phi), "cogenerator");
  h.cogenerator_power = k;
  return h;
}

// simple submodules whose internal sum is the semisimple module s
std::vector<IndexSet> simple_pieces(const FiniteModule& s) {
  std::vector<IndexSet> out;
  IndexSet sum = zero_set(s);
  while (sum.count() < s.size()) {
    IndexSet best;
    for (std::uint32_t x = 1; x < s.size(); ++x) {
      if (sum.contains(x)) continue;
      IndexSet c = cyclic_submodule(s, x);
      if (c.intersection_count(sum) != 1) continue;
      if (best.universe() == 0 || c.count() < best.count()) best = std::move(c);
    }
    sum = join(s, sum, best);
    out.push_back(std::move(best));
  }
  return out;
}

const SimpleHulls& simple_data(const RingPtr& r);

HullResult hull_by_socle(const ModulePtr& m) {
  const RingPtr& r = m->ring_ptr();
  RealizedSubmodule soc = realize(socle_of(m));
  const auto pieces = simple_pieces(*soc.module);
  const auto& simples = simple_data(r);

  std::vector<ModulePtr> targets;
  std::vector<ModuleHom> to_hull;  // piece -> E(S_t)
  std::uint64_t total = 1;
  for (const auto& p : pieces) {
    RealizedSubmodule rp = realize({soc.module, p});
    const std::size_t t = simple_type(rp.module);
    const HullResult& e = simples.hulls[t];
    targets.push_back(e.hull);
    total *= e.hull->size();
    check_module_size(*r, total);
    IsoResult iso = are_isomorphic(rp.module, simples.simples[t]);
    to_hull.push_back(compose(e.embedding, *iso.witness));
  }
  DirectSum target = direct_sum(targets);

  // f on soc(M): sum of the pieces' images
  const std::size_t k = pieces.size();
  std::vector<std::vector<std::uint32_t>> elems;
  std::vector<std::vector<std::uint32_t>> pos;
  for (const auto& p : pieces) {
    elems.push_back(p.to_vector());
    pos.push_back(positions(p));
  }
  std::vector<std::uint32_t> f(soc.module->size(), 0);
  std::vector<std::size_t> digit(k, 0);
  while (true) {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint32_t e = elems[i][digit[i]];
      x = soc.module->add(x, e);
      y = target.sum->add(y, target.injections[i](to_hull[i](pos[i][e])));
    }
    f[x] = y;
    std::size_t i = k;
    while (i-- > 0) {
      if (++digit[i] < elems[i].size()) break;
      digit[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  auto ext = factor_through(soc.inclusion, ModuleHom{soc.module, target.sum, std::move(f)});
  if (!ext) throw HullPostconditionFailure("socle map does not extend into a sum of injectives");
  return finish(m, target.sum, ext->map, "socle");
}

const SimpleHulls& simple_data(const RingPtr& r) {
  return *r->cache().get_or_compute<SimpleHulls>("simple_data", [&] {
    SimpleHulls d;
    const ModulePtr reg = regular_module(r);
    const auto& lat = *submodule_lattice(*reg);
    const std::size_t n = lat.size();
    std::vector<ModulePtr> found;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      bool maximal = true;
      for (std::size_t j = i + 1; j + 1 < n && maximal; ++j) {
        if (lat[j].count() > lat[i].count() && lat[i].is_subset_of(lat[j])) maximal = false;
      }
      if (!maximal) continue;
      ModulePtr s = quotient({reg, lat[i]}).module;
      bool dup = false;
      for (const auto& t : found) dup = dup || are_isomorphic(s, t).isomorphic;
      if (!dup) found.push_back(s);
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const ModulePtr& a, const ModulePtr& b) { return a->size() < b->size(); });
    d.simples = found;
    for (const auto& s : d.simples) d.hulls.push_back(injective_hull(s, HullMethod::cogenerator));

    for (const auto& h : d.hulls) {
      for (const auto& sub : *submodule_lattice(*h.hull)) {
        if (sub.count() == 1) continue;
        ModulePtr u = realize({h.hull, sub}).module;
        bool dup = false;
        for (const auto& t : d.uniforms) dup = dup || are_isomorphic(u, t).isomorphic;
        if (!dup) d.uniforms.push_back(u);
      }
    }
    std::stable_sort(d.uniforms.begin(), d.uniforms.end(), [](const ModulePtr& a, const ModulePtr& b) {
      return std::make_pair(a->size(), composition_length(*a)) < std::make_pair(b->size(), composition_length(*b));
    });
    return d;
  });
}

}  // namespace

bool is_injective(const ModulePtr& m, BaerMode mode) {
  const std::string key = mode == BaerMode::essential_ideals ? "injective" : "injective_all";
  return *m->cache().get_or_compute<bool>(key, [&] {
    const RingPtr& r = m->ring_ptr();
    if (is_semisimple_ring(*r) || m->size() == 1) return true;
    const ModulePtr reg = regular_module(r);
    const IndexSet all = full_set(*reg);
    for (const auto& ideal : *submodule_lattice(*reg)) {
      if (ideal.count() == 1 || ideal.count() == reg->size()) continue;
      if (mode == BaerMode::essential_ideals && !is_essential(*reg, ideal, all)) continue;
      RealizedSubmodule i = realize({reg, ideal});
      Factorizer fz(i.inclusion, m);
      for (const auto& g : hom_space(i.module, m).gens) {
        if (!fz.solve_images(g)) return false;
      }
    }
    return true;
  });
}

std::uint32_t character_value(const FiniteModule& m, std::uint32_t chi, std::uint32_t x) {
  const AbelianLayout& g = m.group();
  const std::uint64_t d = g.exponent();
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const std::uint64_t o = g.factors()[i].order;
    v += std::uint64_t{g.coord(x, i)} * code_digit(g, chi, i) % o * (d / o);
  }
  return static_cast<std::uint32_t>(v % d);
}

ModulePtr character_module(const ModulePtr& m) {
  const RingPtr rop = cached_opposite(m->ring_ptr());
  const AbelianLayout& g = m->group();
  AbelianLayout dual = AbelianLayout::from_factors(g.factors());
  const std::uint64_t d = g.exponent();
  const std::uint32_t n = m->size();
  std::vector<std::uint32_t> act(std::size_t{rop->size()} * n);
  std::vector<std::uint32_t> coords(g.rank());
  for (std::uint32_t r = 0; r < rop->size(); ++r) {
    for (std::uint32_t chi = 0; chi < n; ++chi) {
      for (std::size_t i = 0; i < g.rank(); ++i) {
        const std::uint64_t v = character_value(*m, chi, m->act(g.basis_element(i), r));
        coords[i] = static_cast<std::uint32_t>(v * g.factors()[i].order / d);
      }
      act[std::size_t{r} * n + chi] = dual.from_coords(coords);
    }
  }
  return FiniteModule::build(rop, std::move(dual), std::move(act), false);
}

ModulePtr double_dual(const ModulePtr& m) {
  return character_module(character_module(m))->rebind(m->ring_ptr());
}

ModuleHom evaluation(const ModulePtr& m, const ModulePtr& mdd) {
  const AbelianLayout& g = m->group();
  const AbelianLayout& dg = mdd->group();
  const std::uint64_t d = g.exponent();
  std::vector<std::uint32_t> map(m->size());
  std::vector<std::uint32_t> coords(dg.rank());
  for (std::uint32_t x = 0; x < m->size(); ++x) {
    for (std::size_t i = 0; i < g.rank(); ++i) {
      // the i-th basis character has code equal to the i-th basis code
      const std::uint32_t beta = AbelianLayout::from_factors(g.factors()).basis_element(i);
      const std::uint64_t v = character_value(*m, beta, x);
      coords[i] = static_cast<std::uint32_t>(v * g.factors()[i].order / d);
    }
    map[x] = dg.from_coords(coords);
  }
  return ModuleHom{m, mdd, std::move(map)};
}

ModulePtr injective_cogenerator(const RingPtr& r) {
  return *r->cache().get_or_compute<ModulePtr>("cogenerator", [&] {
    return character_module(regular_module(cached_opposite(r)))->rebind(r);
  });
}

nlohmann::json HullResult::to_json() const {
  return {{"hull_size", hull->size()},
          {"hull_invariants", hull->group().invariants()},
          {"source_size", embedding.dom->size()},
          {"method", method},
          {"cogenerator_power", cogenerator_power},
          {"essential", essential},
          {"injective", injective}};
}

HullResult injective_hull(const ModulePtr& m, HullMethod method) {
  if (m->size() == 1) return finish(m, m, {0}, "trivial");
  if (method == HullMethod::socle) return hull_by_socle(m);
  const auto chars = character_generators(*character_module(m));
  const std::uint64_t csize = cogenerator_power_size(m->ring(), chars.size());
  const bool fits = csize <= limits().module_size && csize * m->ring().size() <= limits().action_entries;
  if (method == HullMethod::cogenerator || fits) {
    if (!fits) {
      throw SizeLimit("cogenerator power of size " + std::to_string(csize) + " exceeds the module cap");
    }
    return hull_by_cogenerator(m, chars);
  }
  return hull_by_socle(m);
}

const std::vector<ModulePtr>& simple_modules(const RingPtr& r) { return simple_data(r).simples; }

const std::vector<ModulePtr>& indecomposable_injectives(const RingPtr& r) {
  return *r->cache().get_or_compute<std::vector<ModulePtr>>("indecomposable_injectives", [&] {
    std::vector<ModulePtr> out;
    for (const auto& h : simple_data(r).hulls) out.push_back(h.hull);
    return out;
  });
}

const std::vector<ModulePtr>& uniform_modules(const RingPtr& r) { return simple_data(r).uniforms; }

std::size_t simple_type(const ModulePtr& s) {
  const auto& simples = simple_modules(s->ring_ptr());
  for (std::size_t i = 0; i < simples.size(); ++i) {
    if (are_isomorphic(s, simples[i]).isomorphic) return i;
  }
  throw PreconditionViolated("module of size " + std::to_string(s->size()) + " is not simple");
}

}  // namespace modclass
