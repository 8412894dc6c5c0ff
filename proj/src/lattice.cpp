#include "modclass/lattice.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "modclass/errors.hpp"
#include "modclass/limits.hpp"

namespace modclass {

std::shared_ptr<const std::vector<IndexSet>> cyclic_submodules(const FiniteModule& m) {
  return m.cache().get_or_compute<std::vector<IndexSet>>("cyclics", [&] {
    std::unordered_set<IndexSet, IndexSetHash> seen;
    std::vector<IndexSet> out;
    for (std::uint32_t x = 1; x < m.size(); ++x) {
      IndexSet c = cyclic_submodule(m, x);
      if (seen.insert(c).second) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  });
}

std::shared_ptr<const std::vector<IndexSet>> submodule_lattice(const FiniteModule& m) {
  return m.cache().get_or_compute<std::vector<IndexSet>>("lattice", [&] {
    const std::size_t cap = limits().lattice_size;
    const auto cyc = cyclic_submodules(m);
    std::unordered_set<IndexSet, IndexSetHash> seen;
    std::vector<IndexSet> out;
    auto add = [&](IndexSet s) {
      if (!seen.insert(s).second) return;
      out.push_back(std::move(s));
      if (out.size() > cap) {
        throw LatticeTooLarge("module of size " + std::to_string(m.size()) + " has more than " + std::to_string(cap) +
                              " submodules");
      }
    };
    add(zero_set(m));
    for (const auto& c : *cyc) add(c);
    for (std::size_t i = 1; i < out.size(); ++i) {
      for (const auto& c : *cyc) {
        if (c.is_subset_of(out[i])) continue;
        add(join(m, out[i], c));
      }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  });
}

std::vector<Submodule> all_submodules(const ModulePtr& m) {
  std::vector<Submodule> out;
  for (const auto& s : *submodule_lattice(*m)) out.push_back({m, s});
  return out;
}

std::shared_ptr<const IndexSet> jacobson_elements(const FiniteRing& r) {
  return r.cache().get_or_compute<IndexSet>("jacobson", [&] {
    const std::uint32_t n = r.size();
    std::vector<char> unit(n, 0);
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        if (r.mul(a, b) == r.one()) {
          unit[a] = 1;
          break;
        }
      }
    }
    IndexSet j(n);
    for (std::uint32_t a = 0; a < n; ++a) {
      bool in = true;
      for (std::uint32_t s = 0; s < n && in; ++s) in = unit[r.sub(r.one(), r.mul(a, s))] != 0;
      if (in) j.insert(a);
    }
    return j;
  });
}

std::shared_ptr<const std::vector<std::uint32_t>> jacobson_generators(const FiniteRing& r) {
  return r.cache().get_or_compute<std::vector<std::uint32_t>>("jacobson_gens", [&] {
    const IndexSet& j = *jacobson_elements(r);
    IndexSet span(r.size());
    span.insert(0);
    std::vector<std::uint32_t> gens;
    j.for_each([&](std::uint32_t a) {
      if (span.contains(a)) return;
      gens.push_back(a);
      // span += <a>
      std::vector<std::uint32_t> cur = span.to_vector();
      std::uint32_t t = a;
      while (!span.contains(t)) {
        for (std::uint32_t x : cur) span.insert(r.add(x, t));
        t = r.add(t, a);
      }
    });
    return gens;
  });
}

Submodule jacobson_radical(const RingPtr& r) { return {regular_module(r), *jacobson_elements(*r)}; }

bool is_semisimple_ring(const FiniteRing& r) { return jacobson_elements(r)->count() == 1; }

const IndexSet& socle(const FiniteModule& m) {
  return *m.cache().get_or_compute<IndexSet>("socle", [&] {
    const auto& gens = *jacobson_generators(m.ring());
    IndexSet s(m.size());
    for (std::uint32_t x = 0; x < m.size(); ++x) {
      bool killed = true;
      for (std::uint32_t j : gens) {
        if (m.act(x, j) != 0) {
          killed = false;
          break;
        }
      }
      if (killed) s.insert(x);
    }
    return s;
  });
}

const IndexSet& radical(const FiniteModule& m) {
  return *m.cache().get_or_compute<IndexSet>("radical", [&] {
    const auto& gens = *jacobson_generators(m.ring());
    std::vector<std::uint32_t> prods;
    for (std::size_t i = 0; i < m.group().rank(); ++i) {
      const std::uint32_t b = m.group().basis_element(i);
      for (std::uint32_t j : gens) prods.push_back(m.act(b, j));
    }
    return generated_set(m, prods);
  });
}

Submodule socle_of(const ModulePtr& m) { return {m, socle(*m)}; }
Submodule radical_of(const ModulePtr& m) { return {m, radical(*m)}; }

std::size_t join_size_with_cyclic(const FiniteModule& m, const IndexSet& n, std::size_t n_count, std::uint32_t x) {
  const IndexSet c = cyclic_submodule(m, x);
  return n_count * c.count() / c.intersection_count(n);
}

std::size_t composition_length(const FiniteModule& m) {
  return *m.cache().get_or_compute<std::size_t>("length", [&]() -> std::size_t {
    const auto& gens = *jacobson_generators(m.ring());
    std::size_t length = 0;
    IndexSet lower = zero_set(m);
    while (lower.count() < m.size()) {
      // preimage of soc(M / lower)
      IndexSet layer(m.size());
      for (std::uint32_t x = 0; x < m.size(); ++x) {
        bool in = true;
        for (std::uint32_t j : gens) {
          if (!lower.contains(m.act(x, j))) {
            in = false;
            break;
          }
        }
        if (in) layer.insert(x);
      }
      IndexSet cur = lower;
      std::size_t cur_count = cur.count();
      const std::size_t layer_count = layer.count();
      while (cur_count < layer_count) {
        // the smallest extension by one cyclic is a simple extension
        std::uint32_t best = 0;
        std::size_t best_size = 0;
        layer.for_each([&](std::uint32_t x) {
          if (cur.contains(x)) return;
          const std::size_t s = join_size_with_cyclic(m, cur, cur_count, x);
          if (best_size == 0 || s < best_size) {
            best_size = s;
            best = x;
          }
        });
        cur = join(m, cur, cyclic_submodule(m, best));
        cur_count = cur.count();
        ++length;
      }
      lower = std::move(layer);
    }
    return length;
  });
}

bool is_simple(const FiniteModule& m) {
  if (m.size() == 1) return false;
  for (std::uint32_t x = 1; x < m.size(); ++x) {
    if (cyclic_submodule(m, x).count() != m.size()) return false;
  }
  return true;
}

bool is_semisimple(const FiniteModule& m) { return radical(m).count() == 1; }

IndexSet socle_by_simple_cyclics(const FiniteModule& m) {
  IndexSet s = zero_set(m);
  for (const auto& c : *cyclic_submodules(m)) {
    bool simple = true;
    c.for_each([&](std::uint32_t y) {
      if (simple && y != 0 && cyclic_submodule(m, y).count() != c.count()) simple = false;
    });
    if (simple) s = join(m, s, c);
  }
  return s;
}

IndexSet radical_by_maximal_submodules(const FiniteModule& m) {
  const auto& lat = *submodule_lattice(m);
  IndexSet r = full_set(m);
  for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j + 1 < lat.size() && maximal; ++j) {
      if (lat[j].count() > lat[i].count() && lat[i].is_subset_of(lat[j])) maximal = false;
    }
    if (maximal) r &= lat[i];
  }
  return r;
}

bool is_essential(const FiniteModule& m, const IndexSet& a, const IndexSet& u) {
  bool ok = true;
  u.for_each([&](std::uint32_t x) {
    if (!ok || x == 0 || a.contains(x)) return;
    if (cyclic_submodule(m, x).intersection_count(a) <= 1) ok = false;
  });
  return ok;
}

bool is_essential_by_socle(const FiniteModule& m, const IndexSet& a, const IndexSet& u) {
  return (u & socle(m)).is_subset_of(a);
}

bool is_uniform(const FiniteModule& m) {
  if (m.size() == 1) return false;
  const auto& cyc = *cyclic_submodules(m);
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    for (std::size_t j = i + 1; j < cyc.size(); ++j) {
      if (cyc[i].intersection_count(cyc[j]) <= 1) return false;
    }
  }
  return true;
}

bool socle_is_simple(const FiniteModule& m) {
  if (m.size() == 1) return false;
  const IndexSet& s = socle(m);
  bool simple = true;
  s.for_each([&](std::uint32_t x) {
    if (simple && x != 0 && (cyclic_submodule(m, x) & s).count() != s.count()) simple = false;
  });
  return simple;
}

}  // namespace modclass
