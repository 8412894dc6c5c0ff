#pragma once

// Shared constructions and brute-force reference computations for the tests.

#include <algorithm>
#include <functional>
#include <vector>

#include "modclass/lattice.hpp"
#include "modclass/module.hpp"
#include "modclass/ring.hpp"

namespace fixtures {

using namespace modclass;

// Upper triangular 2x2 matrices over GF(2); element (a,b;0,c) has index
// (2a + b)·2 + c.
struct Ut2 {
  RingPtr ring;
  ModulePtr regular;
  ModulePtr A;  // simple projective, e22·R
  ModulePtr B;  // simple injective, top of e11·R
  ModulePtr C;  // projective injective, e11·R
};

inline std::uint32_t ut2_index(std::uint32_t a, std::uint32_t b, std::uint32_t c) { return (2 * a + b) * 2 + c; }

inline Ut2 ut2() {
  Ut2 u;
  u.ring = build_ring(RingSpec::ut2(2));
  u.regular = regular_module(u.ring);
  u.A = realize(generated_submodule(u.regular, {ut2_index(0, 0, 1)})).module;
  auto c = generated_submodule(u.regular, {ut2_index(1, 0, 0)});
  u.C = realize(c).module;
  u.B = quotient(socle_of(u.C)).module;
  return u;
}

inline ModulePtr zmod_cyclic(const RingPtr& r, std::uint32_t d) {
  // the ideal generated by n/d in Z/n, which is isomorphic to Z/d
  const std::uint32_t n = r->size();
  return realize(generated_submodule(regular_module(r), {n / d % n})).module;
}

// Every subset containing 0 that is closed under addition and the action.
inline std::vector<IndexSet> brute_force_submodules(const FiniteModule& m) {
  const std::uint32_t n = m.size();
  std::vector<IndexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    IndexSet s(n);
    s.insert(0);
    for (std::uint32_t x = 1; x < n; ++x) {
      if ((mask >> (x - 1)) & 1U) s.insert(x);
    }
    bool closed = true;
    for (std::uint32_t x = 0; x < n && closed; ++x) {
      if (!s.contains(x)) continue;
      for (std::uint32_t y = 0; y < n && closed; ++y) {
        if (s.contains(y) && !s.contains(m.add(x, y))) closed = false;
      }
      for (std::uint32_t r = 0; r < m.ring().size() && closed; ++r) {
        if (!s.contains(m.act(x, r))) closed = false;
      }
    }
    if (closed) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// Every map f: dom -> cod that is additive and equivariant, found by
// assigning f(0), f(1), ... in turn and pruning on every constraint whose
// arguments are already assigned.
inline std::vector<std::vector<std::uint32_t>> brute_force_homs(const FiniteModule& dom, const FiniteModule& cod) {
  const std::uint32_t m = dom.size();
  const std::uint32_t nr = dom.ring().size();
  std::vector<std::uint32_t> f(m, 0);
  std::vector<std::vector<std::uint32_t>> out;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t x) {
    if (x == m) {
      out.push_back(f);
      return;
    }
    for (std::uint32_t v = 0; v < cod.size(); ++v) {
      if (x == 0 && v != 0) break;
      f[x] = v;
      bool ok = true;
      for (std::uint32_t y = 0; y <= x && ok; ++y) {
        const std::uint32_t s = dom.add(x, y);
        if (s <= x && f[s] != cod.add(f[x], f[y])) ok = false;
        for (std::uint32_t z = 0; z < x && ok; ++z) {
          if (y < x && dom.add(y, z) == x && f[x] != cod.add(f[y], f[z])) ok = false;
        }
      }
      for (std::uint32_t r = 0; r < nr && ok; ++r) {
        const std::uint32_t xr = dom.act(x, r);
        if (xr <= x && f[xr] != cod.act(f[x], r)) ok = false;
        for (std::uint32_t y = 0; y < x && ok; ++y) {
          if (dom.act(y, r) == x && f[x] != cod.act(f[y], r)) ok = false;
        }
      }
      if (ok) rec(x + 1);
    }
  };
  rec(0);
  return out;
}

inline std::uint64_t brute_force_hom_count(const FiniteModule& dom, const FiniteModule& cod) {
  return brute_force_homs(dom, cod).size();
}

// Baer with maps R -> M written as r -> x·r: for every right ideal I and
// every hom f: I -> M some x has f(i) = x·i on I.
inline bool brute_force_is_injective(const ModulePtr& m) {
  const RingPtr& r = m->ring_ptr();
  const ModulePtr reg = regular_module(r);
  for (const auto& ideal : brute_force_submodules(*reg)) {
    const auto elems = ideal.to_vector();
    RealizedSubmodule ri = realize({reg, ideal});
    for (const auto& f : brute_force_homs(*ri.module, *m)) {
      bool extends = false;
      for (std::uint32_t x = 0; x < m->size() && !extends; ++x) {
        bool all = true;
        for (std::size_t k = 0; k < elems.size() && all; ++k) all = f[k] == m->act(x, elems[k]);
        extends = all;
      }
      if (!extends) return false;
    }
  }
  return true;
}

// Every nonzero submodule of U inside the lattice meets A.
inline bool brute_force_is_essential(const std::vector<IndexSet>& lattice, const IndexSet& a, const IndexSet& u) {
  for (const auto& b : lattice) {
    if (b.count() > 1 && b.is_subset_of(u) && a.intersection_count(b) == 1) return false;
  }
  return true;
}

// A is a summand iff some submodule B has A ∩ B = 0 and |A||B| = |M|.
inline bool brute_force_is_summand(const FiniteModule& m, const IndexSet& a) {
  for (const auto& b : brute_force_submodules(m)) {
    if (a.intersection_count(b) == 1 && a.count() * b.count() == m.size()) return true;
  }
  return false;
}

// Every submodule is essential in a summand.
inline bool brute_force_is_c1(const FiniteModule& m) {
  const auto lat = brute_force_submodules(m);
  std::vector<IndexSet> summands;
  for (const auto& u : lat) {
    for (const auto& b : lat) {
      if (u.intersection_count(b) == 1 && u.count() * b.count() == m.size()) {
        summands.push_back(u);
        break;
      }
    }
  }
  for (const auto& a : lat) {
    bool found = false;
    for (const auto& u : summands) {
      if (a.is_subset_of(u) && brute_force_is_essential(lat, a, u)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

inline std::vector<IndexSet> brute_force_summands(const FiniteModule& m) {
  std::vector<IndexSet> out;
  for (const auto& a : brute_force_submodules(m)) {
    if (brute_force_is_summand(m, a)) out.push_back(a);
  }
  return out;
}

inline bool brute_force_isomorphic(const FiniteModule& a, const FiniteModule& b) {
  if (a.size() != b.size()) return false;
  for (const auto& f : brute_force_homs(a, b)) {
    std::vector<char> hit(b.size(), 0);
    bool bij = true;
    for (auto y : f) {
      if (hit[y]) bij = false;
      hit[y] = 1;
    }
    if (bij) return true;
  }
  return false;
}

inline bool brute_force_is_c2(const ModulePtr& m) {
  const auto summands = brute_force_summands(*m);
  for (const auto& a : brute_force_submodules(*m)) {
    if (std::find(summands.begin(), summands.end(), a) != summands.end()) continue;
    const auto ra = realize({m, a}).module;
    for (const auto& s : summands) {
      if (s.count() == a.count() && brute_force_isomorphic(*ra, *realize({m, s}).module)) return false;
    }
  }
  return true;
}

inline bool brute_force_is_c3(const ModulePtr& m) {
  const auto summands = brute_force_summands(*m);
  for (const auto& a : summands) {
    for (const auto& b : summands) {
      if (a.intersection_count(b) != 1) continue;
      if (std::find(summands.begin(), summands.end(), join(*m, a, b)) == summands.end()) return false;
    }
  }
  return true;
}

// Every hom from a submodule into M is the restriction of an endomorphism.
inline bool brute_force_is_quasi_injective(const ModulePtr& m) {
  const auto ends = brute_force_homs(*m, *m);
  for (const auto& n : brute_force_submodules(*m)) {
    const auto elems = n.to_vector();
    for (const auto& f : brute_force_homs(*realize({m, n}).module, *m)) {
      bool extends = false;
      for (const auto& g : ends) {
        bool all = true;
        for (std::size_t k = 0; k < elems.size() && all; ++k) all = g[elems[k]] == f[k];
        if (all) {
          extends = true;
          break;
        }
      }
      if (!extends) return false;
    }
  }
  return true;
}

}  // namespace fixtures
