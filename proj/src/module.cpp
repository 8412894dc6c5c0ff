#include "modclass/module.hpp"

#include <algorithm>

#include "modclass/errors.hpp"
#include "modclass/limits.hpp"

namespace modclass {

void check_module_size(const FiniteRing& r, std::uint64_t size) {
  const Limits lim = limits();
  if (size > lim.module_size) {
    throw SizeLimit("module of size " + std::to_string(size) + " exceeds the module cap " + std::to_string(lim.module_size));
  }
  if (size * r.size() > lim.action_entries) {
    throw SizeLimit("action table of a module of size " + std::to_string(size) + " over a ring of size " +
                    std::to_string(r.size()) + " exceeds the action cap");
  }
}

ModulePtr FiniteModule::build(RingPtr ring, AbelianLayout group, std::vector<std::uint32_t> act, bool validate) {
  check_module_size(*ring, group.size());
  const std::uint32_t m = group.size();
  const std::uint32_t n = ring->size();
  if (act.size() != std::size_t{n} * m) throw InvalidSpec("action table has the wrong shape");
  for (auto v : act) {
    if (v >= m) throw InvalidSpec("action table entry out of range");
  }
  auto mod = std::shared_ptr<FiniteModule>(new FiniteModule());
  mod->ring_ = std::move(ring);
  mod->m_ = m;
  mod->group_ = std::move(group);
  mod->act_ = std::move(act);
  if (!validate) return mod;

  const FiniteModule& M = *mod;
  const FiniteRing& R = M.ring();
  const AbelianLayout& rg = R.additive();
  std::vector<std::uint32_t> mb;
  for (std::size_t i = 0; i < M.group_.rank(); ++i) mb.push_back(M.group_.basis_element(i));
  std::vector<std::uint32_t> rb;
  for (std::size_t j = 0; j < rg.rank(); ++j) rb.push_back(rg.basis_element(j));
  auto where = [](std::uint32_t x, std::uint32_t r) {
    return " at x=" + std::to_string(x) + ", r=" + std::to_string(r);
  };

  for (std::uint32_t g : rb) {
    for (std::uint32_t x = 0; x < m; ++x) {
      for (std::uint32_t b : mb) {
        if (M.act(M.add(x, b), g) != M.add(M.act(x, g), M.act(b, g))) {
          throw AxiomViolation("(x+y)·r != x·r + y·r" + where(x, g) + ", y=" + std::to_string(b));
        }
      }
    }
  }
  for (std::uint32_t r = 0; r < n; ++r) {
    for (std::uint32_t g : rb) {
      const std::uint32_t rg_sum = R.add(r, g);
      for (std::uint32_t x = 0; x < m; ++x) {
        if (M.act(x, rg_sum) != M.add(M.act(x, r), M.act(x, g))) {
          throw AxiomViolation("x·(r+s) != x·r + x·s" + where(x, r) + ", s=" + std::to_string(g));
        }
      }
    }
  }
  for (std::uint32_t b : mb) {
    if (M.act(b, R.one()) != b) throw AxiomViolation("x·1 != x at x=" + std::to_string(b));
    for (std::uint32_t r = 0; r < n; ++r) {
      for (std::uint32_t g : rb) {
        if (M.act(b, R.mul(r, g)) != M.act(M.act(b, r), g)) {
          throw AxiomViolation("x·(rs) != (x·r)·s" + where(b, r) + ", s=" + std::to_string(g));
        }
      }
    }
  }
  return mod;
}

ModulePtr FiniteModule::create(RingPtr ring, AbelianLayout group, std::vector<std::uint32_t> act) {
  return build(std::move(ring), std::move(group), std::move(act), true);
}

ModulePtr FiniteModule::from_tables(RingPtr ring, const std::vector<std::vector<std::uint32_t>>& add,
                                    const std::vector<std::vector<std::uint32_t>>& act) {
  const std::size_t m = add.size();
  if (m == 0) throw InvalidSpec("module add table is empty");
  check_module_size(*ring, m);
  for (const auto& row : add) {
    if (row.size() != m) throw InvalidSpec("module add table must be square");
    for (auto v : row) {
      if (v >= m) throw InvalidSpec("module add table entry out of range");
    }
  }
  for (std::uint32_t x = 0; x < m; ++x) {
    if (add[0][x] != x || add[x][0] != x) throw AxiomViolation("0 is not an additive identity at " + std::to_string(x));
  }
  const auto M = static_cast<std::uint32_t>(m);
  AbelianLayout layout = AbelianLayout::discover(M, [&add](std::uint32_t a, std::uint32_t b) { return add[a][b]; });
  for (std::uint32_t a = 0; a < M; ++a) {
    for (std::uint32_t b = 0; b < M; ++b) {
      if (layout.add(a, b) != add[a][b]) {
        throw AxiomViolation("module addition is not an abelian group operation at (" + std::to_string(a) + "," +
                             std::to_string(b) + ")");
      }
    }
  }
  if (act.size() != ring->size()) throw InvalidSpec("action table needs one row per ring element");
  std::vector<std::uint32_t> flat;
  flat.reserve(ring->size() * m);
  for (const auto& row : act) {
    if (row.size() != m) throw InvalidSpec("action table rows must have one entry per module element");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return create(std::move(ring), std::move(layout), std::move(flat));
}

nlohmann::json FiniteModule::to_json() const {
  std::vector<std::vector<std::uint32_t>> add(m_, std::vector<std::uint32_t>(m_));
  for (std::uint32_t a = 0; a < m_; ++a)
    for (std::uint32_t b = 0; b < m_; ++b) add[a][b] = this->add(a, b);
  std::vector<std::vector<std::uint32_t>> act(ring_->size(), std::vector<std::uint32_t>(m_));
  for (std::uint32_t r = 0; r < ring_->size(); ++r)
    for (std::uint32_t x = 0; x < m_; ++x) act[r][x] = this->act(x, r);
  return {{"ring", ring_->spec().to_json()}, {"size", m_}, {"add", add}, {"act", act}};
}

ModulePtr FiniteModule::from_json(const nlohmann::json& j, RingPtr ring) {
  if (!j.is_object() || !j.contains("add") || !j.contains("act")) {
    throw InvalidSpec("module JSON needs \"add\" and \"act\" tables");
  }
  std::vector<std::vector<std::uint32_t>> add, act;
  try {
    add = j.at("add").get<std::vector<std::vector<std::uint32_t>>>();
    act = j.at("act").get<std::vector<std::vector<std::uint32_t>>>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidSpec("module tables must be matrices of element indices");
  }
  return from_tables(std::move(ring), add, act);
}

ModulePtr FiniteModule::rebind(RingPtr ring) const {
  if (!same_ring(*ring, *ring_)) throw InvalidSpec("cannot rebind a module to a different ring");
  return build(std::move(ring), group_, act_, false);
}

bool canonical_less(const IndexSet& a, const IndexSet& b) {
  const std::size_t ca = a.count();
  const std::size_t cb = b.count();
  if (ca != cb) return ca < cb;
  return a.lex_less_same_size(b);
}

// ---------------------------------------------------------------- homs

bool ModuleHom::is_injective() const {
  for (std::uint32_t x = 1; x < dom->size(); ++x) {
    if (map[x] == 0) return false;
  }
  return true;
}

bool ModuleHom::is_surjective() const {
  IndexSet hit(cod->size());
  for (auto y : map) hit.insert(y);
  return hit.count() == cod->size();
}

bool ModuleHom::is_zero() const {
  return std::all_of(map.begin(), map.end(), [](std::uint32_t y) { return y == 0; });
}

Submodule ModuleHom::image() const {
  IndexSet s(cod->size());
  for (auto y : map) s.insert(y);
  return {cod, std::move(s)};
}

Submodule ModuleHom::kernel() const {
  IndexSet s(dom->size());
  for (std::uint32_t x = 0; x < dom->size(); ++x) {
    if (map[x] == 0) s.insert(x);
  }
  return {dom, std::move(s)};
}

void ModuleHom::validate() const {
  if (!same_ring(dom->ring(), cod->ring())) throw AxiomViolation("hom between modules over different rings");
  if (map.size() != dom->size()) throw AxiomViolation("hom map has the wrong length");
  for (auto y : map) {
    if (y >= cod->size()) throw AxiomViolation("hom value out of range");
  }
  if (map[0] != 0) throw AxiomViolation("hom does not fix 0");
  const auto& g = dom->group();
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const std::uint32_t b = g.basis_element(i);
    for (std::uint32_t x = 0; x < dom->size(); ++x) {
      if (map[dom->add(x, b)] != cod->add(map[x], map[b])) {
        throw AxiomViolation("hom is not additive at " + std::to_string(x));
      }
    }
    for (std::uint32_t r = 0; r < dom->ring().size(); ++r) {
      if (map[dom->act(b, r)] != cod->act(map[b], r)) {
        throw AxiomViolation("hom is not equivariant at x=" + std::to_string(b) + ", r=" + std::to_string(r));
      }
    }
  }
}

ModuleHom compose(const ModuleHom& g, const ModuleHom& f) {
  ModuleHom h{f.dom, g.cod, std::vector<std::uint32_t>(f.dom->size())};
  for (std::uint32_t x = 0; x < f.dom->size(); ++x) h.map[x] = g.map[f.map[x]];
  return h;
}

ModuleHom identity_hom(const ModulePtr& m) {
  ModuleHom h{m, m, std::vector<std::uint32_t>(m->size())};
  for (std::uint32_t x = 0; x < m->size(); ++x) h.map[x] = x;
  return h;
}

ModuleHom zero_hom(const ModulePtr& dom, const ModulePtr& cod) {
  return {dom, cod, std::vector<std::uint32_t>(dom->size(), 0)};
}

ModuleHom add_homs(const ModuleHom& f, const ModuleHom& g) {
  ModuleHom h{f.dom, f.cod, std::vector<std::uint32_t>(f.dom->size())};
  for (std::uint32_t x = 0; x < f.dom->size(); ++x) h.map[x] = f.cod->add(f.map[x], g.map[x]);
  return h;
}

std::vector<std::uint32_t> expand_basis_images(const FiniteModule& dom, const FiniteModule& cod,
                                               const std::vector<std::uint32_t>& images) {
  const auto& g = dom.group();
  const std::size_t k = g.rank();
  std::vector<std::uint32_t> wrap(k);
  for (std::size_t i = 0; i < k; ++i) wrap[i] = cod.group().times(g.factors()[i].order, images[i]);
  std::vector<std::uint32_t> out(dom.size());
  std::vector<std::uint32_t> digits(k, 0);
  std::uint32_t cur = 0;
  for (std::uint32_t code = 0; code < dom.size(); ++code) {
    out[g.index_of(code)] = cur;
    for (std::size_t i = k; i-- > 0;) {
      cur = cod.add(cur, images[i]);
      if (++digits[i] < g.factors()[i].order) break;
      digits[i] = 0;
      cur = cod.sub(cur, wrap[i]);
    }
  }
  return out;
}

std::uint32_t apply_basis_images(const FiniteModule& dom, const FiniteModule& cod,
                                 const std::vector<std::uint32_t>& images, std::uint32_t x) {
  const auto& g = dom.group();
  std::uint32_t y = 0;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const std::uint32_t c = g.coord(x, i);
    if (c) y = cod.add(y, cod.group().times(c, images[i]));
  }
  return y;
}

ModuleHom hom_from_basis_images(const ModulePtr& dom, const ModulePtr& cod, const std::vector<std::uint32_t>& images) {
  return {dom, cod, expand_basis_images(*dom, *cod, images)};
}

std::vector<std::uint32_t> basis_images(const ModuleHom& f) {
  std::vector<std::uint32_t> out;
  const auto& g = f.dom->group();
  for (std::size_t i = 0; i < g.rank(); ++i) out.push_back(f.map[g.basis_element(i)]);
  return out;
}

// ---------------------------------------------------------------- constructions

ModulePtr regular_module(const RingPtr& r) {
  return *r->cache().get_or_compute<ModulePtr>("regular", [&] {
    const std::uint32_t n = r->size();
    std::vector<std::uint32_t> act(std::size_t{n} * n);
    for (std::uint32_t s = 0; s < n; ++s)
      for (std::uint32_t x = 0; x < n; ++x) act[std::size_t{s} * n + x] = r->mul(x, s);
    return FiniteModule::build(r, r->additive(), std::move(act), false);
  });
}

ModulePtr zero_module(const RingPtr& r) {
  return FiniteModule::create(r, AbelianLayout{}, std::vector<std::uint32_t>(r->size(), 0));
}

DirectSum direct_sum(const std::vector<ModulePtr>& parts) {
  if (parts.empty()) throw InvalidSpec("direct sum of no modules");
  const RingPtr& ring = parts[0]->ring_ptr();
  std::uint64_t total = 1;
  for (const auto& p : parts) {
    if (!same_ring(p->ring(), *ring)) throw InvalidSpec("direct sum of modules over different rings");
    total *= p->size();
    check_module_size(*ring, total);
  }
  const std::size_t k = parts.size();
  std::vector<std::uint32_t> stride(k, 1);
  for (std::size_t i = k - 1; i-- > 0;) stride[i] = stride[i + 1] * parts[i + 1]->size();
  const auto m = static_cast<std::uint32_t>(total);

  std::vector<CyclicFactor> factors;
  bool identity = true;
  for (const auto& p : parts) {
    factors.insert(factors.end(), p->group().factors().begin(), p->group().factors().end());
    identity = identity && p->group().identity_indexing();
  }
  std::vector<std::uint32_t> code_of;
  if (!identity) {
    code_of.assign(m, 0);
    for (std::uint32_t x = 0; x < m; ++x) {
      std::uint32_t c = 0;
      for (std::size_t i = 0; i < k; ++i) c += parts[i]->group().code_of((x / stride[i]) % parts[i]->size()) * stride[i];
      code_of[x] = c;
    }
  } else {
    code_of.resize(m);
    for (std::uint32_t x = 0; x < m; ++x) code_of[x] = x;
  }
  AbelianLayout layout = AbelianLayout::with_codes(std::move(factors), std::move(code_of));

  const std::uint32_t n = ring->size();
  std::vector<std::uint32_t> act(std::size_t{n} * m);
  for (std::uint32_t r = 0; r < n; ++r) {
    for (std::uint32_t x = 0; x < m; ++x) {
      std::uint32_t y = 0;
      for (std::size_t i = 0; i < k; ++i) y += parts[i]->act((x / stride[i]) % parts[i]->size(), r) * stride[i];
      act[std::size_t{r} * m + x] = y;
    }
  }
  DirectSum out;
  out.sum = FiniteModule::build(ring, std::move(layout), std::move(act), false);
  for (std::size_t i = 0; i < k; ++i) {
    ModuleHom inj{parts[i], out.sum, std::vector<std::uint32_t>(parts[i]->size())};
    for (std::uint32_t x = 0; x < parts[i]->size(); ++x) inj.map[x] = x * stride[i];
    ModuleHom proj{out.sum, parts[i], std::vector<std::uint32_t>(m)};
    for (std::uint32_t x = 0; x < m; ++x) proj.map[x] = (x / stride[i]) % parts[i]->size();
    out.injections.push_back(std::move(inj));
    out.projections.push_back(std::move(proj));
  }
  return out;
}

DirectSum direct_sum(const ModulePtr& a, const ModulePtr& b) { return direct_sum(std::vector<ModulePtr>{a, b}); }

ModulePtr power(const ModulePtr& m, std::size_t k) {
  if (k == 0) return zero_module(m->ring_ptr());
  return direct_sum(std::vector<ModulePtr>(k, m)).sum;
}

IndexSet zero_set(const FiniteModule& m) {
  IndexSet s(m.size());
  s.insert(0);
  return s;
}

IndexSet full_set(const FiniteModule& m) {
  IndexSet s(m.size());
  for (std::uint32_t x = 0; x < m.size(); ++x) s.insert(x);
  return s;
}

IndexSet cyclic_submodule(const FiniteModule& m, std::uint32_t x) {
  IndexSet s(m.size());
  for (std::uint32_t r = 0; r < m.ring().size(); ++r) s.insert(m.act(x, r));
  return s;
}

IndexSet join(const FiniteModule& m, const IndexSet& a, const IndexSet& b) {
  if (b.is_subset_of(a)) return a;
  if (a.is_subset_of(b)) return b;
  const std::vector<std::uint32_t> av = a.to_vector();
  IndexSet out(m.size());
  b.for_each([&](std::uint32_t y) {
    if (out.contains(y)) return;
    for (std::uint32_t x : av) out.insert(m.add(x, y));
  });
  return out;
}

IndexSet generated_set(const FiniteModule& m, const std::vector<std::uint32_t>& gens) {
  IndexSet cur = zero_set(m);
  for (std::uint32_t g : gens) {
    if (g >= m.size()) throw InvalidSpec("generator index out of range");
    if (!cur.contains(g)) cur = join(m, cur, cyclic_submodule(m, g));
  }
  return cur;
}

Submodule generated_submodule(const ModulePtr& m, const std::vector<std::uint32_t>& gens) {
  return {m, generated_set(*m, gens)};
}

RealizedSubmodule realize(const Submodule& s) {
  const FiniteModule& p = *s.parent;
  const std::vector<std::uint32_t> mem = s.elements();
  const auto k = static_cast<std::uint32_t>(mem.size());
  std::vector<std::uint32_t> pos(p.size(), 0xFFFFFFFFU);
  for (std::uint32_t i = 0; i < k; ++i) pos[mem[i]] = i;
  AbelianLayout layout;
  if (k == p.size()) {
    layout = p.group();
  } else {
    layout = AbelianLayout::discover(k, [&](std::uint32_t a, std::uint32_t b) { return pos[p.add(mem[a], mem[b])]; });
  }
  const std::uint32_t n = p.ring().size();
  std::vector<std::uint32_t> act(std::size_t{n} * k);
  for (std::uint32_t r = 0; r < n; ++r)
    for (std::uint32_t i = 0; i < k; ++i) act[std::size_t{r} * k + i] = pos[p.act(mem[i], r)];
  RealizedSubmodule out;
  out.module = FiniteModule::build(p.ring_ptr(), std::move(layout), std::move(act), false);
  out.inclusion = ModuleHom{out.module, s.parent, mem};
  return out;
}

Quotient quotient(const Submodule& a) {
  const FiniteModule& p = *a.parent;
  const std::vector<std::uint32_t> av = a.elements();
  std::vector<std::uint32_t> cls(p.size(), 0xFFFFFFFFU);
  std::vector<std::uint32_t> rep;
  for (std::uint32_t x = 0; x < p.size(); ++x) {
    if (cls[x] != 0xFFFFFFFFU) continue;
    const auto c = static_cast<std::uint32_t>(rep.size());
    rep.push_back(x);
    for (std::uint32_t y : av) cls[p.add(x, y)] = c;
  }
  const auto q = static_cast<std::uint32_t>(rep.size());
  AbelianLayout layout =
      AbelianLayout::discover(q, [&](std::uint32_t u, std::uint32_t v) { return cls[p.add(rep[u], rep[v])]; });
  const std::uint32_t n = p.ring().size();
  std::vector<std::uint32_t> act(std::size_t{n} * q);
  for (std::uint32_t r = 0; r < n; ++r)
    for (std::uint32_t i = 0; i < q; ++i) act[std::size_t{r} * q + i] = cls[p.act(rep[i], r)];
  Quotient out;
  out.module = FiniteModule::build(p.ring_ptr(), std::move(layout), std::move(act), false);
  out.projection = ModuleHom{a.parent, out.module, std::move(cls)};
  return out;
}

}  // namespace modclass
