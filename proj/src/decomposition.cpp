#include "modclass/decomposition.hpp"

#include <algorithm>
#include <random>
#include <tuple>

#include "modclass/errors.hpp"
#include "modclass/lattice.hpp"

namespace modclass {

namespace {

struct Split {
  IndexSet image;
  IndexSet kernel;
};

IndexSet kernel_of(const std::vector<std::uint32_t>& map) {
  IndexSet k(map.size());
  for (std::uint32_t x = 0; x < map.size(); ++x) {
    if (map[x] == 0) k.insert(x);
  }
  return k;
}

IndexSet image_of(const std::vector<std::uint32_t>& map) {
  IndexSet s(map.size());
  for (auto y : map) s.insert(y);
  return s;
}

bool has_simple_top(const ModulePtr& m) { return is_simple(*quotient(radical_of(m)).module); }

std::optional<std::vector<std::uint32_t>> idempotent_by_enumeration(const ModulePtr& m, const HomSpace& end,
                                                                    SearchOrder order) {
  HomSpace h = end;
  if (order == SearchOrder::permuted) {
    std::reverse(h.gens.begin(), h.gens.end());
    std::reverse(h.orders.begin(), h.orders.end());
  }
  const AbelianLayout& g = m->group();
  std::optional<std::vector<std::uint32_t>> found;
  h.for_each([&](const std::vector<std::uint32_t>& images) {
    bool zero = true;
    bool identity = true;
    for (std::size_t b = 0; b < images.size(); ++b) {
      zero = zero && images[b] == 0;
      identity = identity && images[b] == g.basis_element(b);
    }
    if (zero || identity) return false;
    for (std::size_t b = 0; b < images.size(); ++b) {
      if (apply_basis_images(*m, *m, images, images[b]) != images[b]) return false;
    }
    found = images;
    return true;
  });
  return found;
}

// Fitting: for large k, M = ker f^k ⊕ im f^k.
std::optional<Split> fitting_split(const ModulePtr& m, const std::vector<std::uint32_t>& images) {
  const auto f = expand_basis_images(*m, *m, images);
  std::vector<std::uint32_t> g = f;
  std::size_t size = image_of(g).count();
  while (true) {
    std::vector<std::uint32_t> next(g.size());
    for (std::uint32_t x = 0; x < g.size(); ++x) next[x] = f[g[x]];
    const std::size_t s = image_of(next).count();
    g = std::move(next);
    if (s == size) break;
    size = s;
  }
  if (size == 1 || size == m->size()) return std::nullopt;
  return Split{image_of(g), kernel_of(g)};
}

std::optional<Split> find_split(const ModulePtr& m, SearchOrder order, bool& exact) {
  if (m->size() == 1) return std::nullopt;
  if (socle_is_simple(*m) || has_simple_top(m)) return std::nullopt;
  const HomSpace end = endomorphisms(m);
  if (end.enumerable()) {
    auto e = idempotent_by_enumeration(m, end, order);
    if (!e) return std::nullopt;
    const auto map = expand_basis_images(*m, *m, *e);
    return Split{image_of(map), kernel_of(map)};
  }
  std::mt19937_64 rng(order == SearchOrder::canonical ? 0x5eed5eedULL : 0x5eed5eeeULL);
  std::vector<std::uint64_t> coeffs(end.gens.size());
  for (int attempt = 0; attempt < 400; ++attempt) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = rng() % end.orders[i];
    if (auto s = fitting_split(m, end.combine(coeffs))) return s;
  }
  exact = false;
  return std::nullopt;
}

IndexSet push_forward(const ModuleHom& inclusion, const IndexSet& s) {
  IndexSet out(inclusion.cod->size());
  s.for_each([&](std::uint32_t x) { out.insert(inclusion(x)); });
  return out;
}

std::vector<ModuleHom> projections(const ModulePtr& m, const std::vector<IndexSet>& pieces) {
  const std::size_t k = pieces.size();
  std::vector<std::vector<std::uint32_t>> elems;
  for (const auto& p : pieces) elems.push_back(p.to_vector());
  std::vector<std::vector<std::uint32_t>> comp(k, std::vector<std::uint32_t>(m->size(), 0));
  std::vector<std::size_t> digit(k, 0);
  std::vector<std::uint32_t> partial(k + 1, 0);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) partial[i + 1] = m->add(partial[i], elems[i][digit[i]]);
    const std::uint32_t x = partial[k];
    for (std::size_t i = 0; i < k; ++i) comp[i][x] = elems[i][digit[i]];
    std::size_t i = k;
    while (i-- > 0) {
      if (++digit[i] < elems[i].size()) break;
      digit[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  std::vector<ModuleHom> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(ModuleHom{m, m, std::move(comp[i])});
  return out;
}

auto class_key(const FiniteModule& m) { return std::make_tuple(m.size(), m.group().invariants(), fingerprint(m).hash()); }

}  // namespace

std::size_t Decomposition::piece_count() const {
  std::size_t n = 0;
  for (const auto& c : summands) n += c.multiplicity();
  return n;
}

std::vector<ModulePtr> Decomposition::pieces() const {
  std::vector<ModulePtr> out;
  for (const auto& c : summands) {
    for (std::size_t i = 0; i < c.multiplicity(); ++i) out.push_back(c.module);
  }
  return out;
}

nlohmann::json Decomposition::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : summands) {
    list.push_back({{"size", c.module->size()},
                    {"invariants", c.module->group().invariants()},
                    {"length", composition_length(*c.module)},
                    {"multiplicity", c.multiplicity()}});
  }
  return {{"summands", list}, {"exact", exact}};
}

std::optional<ModuleHom> nontrivial_idempotent(const ModulePtr& m, SearchOrder order) {
  bool exact = true;
  auto s = find_split(m, order, exact);
  if (!s) return std::nullopt;
  return projections(m, {s->image, s->kernel})[0];
}

bool is_indecomposable(const ModulePtr& m) {
  if (m->size() == 1) throw PreconditionViolated("the zero module is not indecomposable");
  bool exact = true;
  return !find_split(m, SearchOrder::canonical, exact).has_value();
}

Decomposition decompose(const ModulePtr& m, SearchOrder order) {
  Decomposition d;
  d.parent = m;
  if (m->size() == 1) return d;

  std::vector<IndexSet> work{full_set(*m)};
  std::vector<std::pair<IndexSet, ModulePtr>> done;
  while (!work.empty()) {
    IndexSet piece = std::move(work.back());
    work.pop_back();
    RealizedSubmodule r;
    if (piece.count() == m->size()) {
      r = {m, identity_hom(m)};
    } else {
      r = realize({m, piece});
    }
    auto s = find_split(r.module, order, d.exact);
    if (!s) {
      done.emplace_back(std::move(piece), r.module);
      continue;
    }
    work.push_back(push_forward(r.inclusion, s->kernel));
    work.push_back(push_forward(r.inclusion, s->image));
  }

  std::sort(done.begin(), done.end(), [](const auto& a, const auto& b) {
    const auto ka = class_key(*a.second);
    const auto kb = class_key(*b.second);
    if (ka != kb) return ka < kb;
    return canonical_less(a.first, b.first);
  });
  for (auto& [set, mod] : done) {
    bool merged = false;
    for (auto& c : d.summands) {
      if (class_key(*c.module) != class_key(*mod)) continue;
      if (are_isomorphic(c.module, mod).isomorphic) {
        c.copies.push_back({m, set});
        merged = true;
        break;
      }
    }
    if (!merged) d.summands.push_back({mod, {{m, set}}});
  }
  std::vector<IndexSet> sets;
  for (const auto& c : d.summands) {
    for (const auto& s : c.copies) sets.push_back(s.members);
  }
  d.idempotents = projections(m, sets);
  return d;
}

bool same_decomposition_type(const Decomposition& a, const Decomposition& b) {
  if (a.summands.size() != b.summands.size()) return false;
  std::vector<bool> used(b.summands.size(), false);
  for (const auto& ca : a.summands) {
    bool found = false;
    for (std::size_t j = 0; j < b.summands.size() && !found; ++j) {
      const auto& cb = b.summands[j];
      if (used[j] || cb.multiplicity() != ca.multiplicity()) continue;
      if (are_isomorphic(ca.module, cb.module).isomorphic) found = used[j] = true;
    }
    if (!found) return false;
  }
  return true;
}

nlohmann::json UniformDecompositionReport::to_json() const {
  nlohmann::json j = decomposition.to_json();
  for (std::size_t i = 0; i < uniform.size(); ++i) j["summands"][i]["uniform"] = static_cast<bool>(uniform[i]);
  j["c1"] = c1;
  j["consistent"] = consistent;
  return j;
}

UniformDecompositionReport check_uniform_decomposition(const ModulePtr& m,
                                                       const std::function<bool(const ModulePtr&)>& is_c1) {
  UniformDecompositionReport r;
  r.decomposition = decompose(m);
  bool all_uniform = true;
  for (const auto& c : r.decomposition.summands) {
    r.uniform.push_back(socle_is_simple(*c.module));
    all_uniform = all_uniform && r.uniform.back();
  }
  r.c1 = is_c1(m);
  r.consistent = !r.c1 || all_uniform;
  return r;
}

}  // namespace modclass
