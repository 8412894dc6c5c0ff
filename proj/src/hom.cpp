#include "modclass/hom.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "modclass/errors.hpp"
#include "modclass/lattice.hpp"
#include "modclass/limits.hpp"

namespace modclass {

namespace {

std::uint32_t log_p(std::uint32_t p, std::uint64_t order) {
  std::uint32_t e = 0;
  while (order > 1) {
    order /= p;
    ++e;
  }
  return e;
}

std::vector<std::size_t> factors_with_prime(const AbelianLayout& g, std::uint32_t p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (g.factors()[i].prime == p) out.push_back(i);
  }
  return out;
}

std::vector<std::uint32_t> primes_of(const AbelianLayout& g) {
  std::vector<std::uint32_t> out;
  for (const auto& f : g.factors()) {
    if (std::find(out.begin(), out.end(), f.prime) == out.end()) out.push_back(f.prime);
  }
  return out;
}

struct HomData {
  std::vector<std::vector<std::uint32_t>> gens;
  std::vector<std::uint64_t> orders;
};

HomData compute_homs(const FiniteModule& dom, const FiniteModule& cod) {
  if (!same_ring(dom.ring(), cod.ring())) throw InvalidSpec("hom space between modules over different rings");
  const AbelianLayout& dg = dom.group();
  const AbelianLayout& cg = cod.group();
  const AbelianLayout& rg = dom.ring().additive();
  std::vector<std::uint32_t> ring_basis;
  for (std::size_t j = 0; j < rg.rank(); ++j) ring_basis.push_back(rg.basis_element(j));

  HomData out;
  for (std::uint32_t p : primes_of(dg)) {
    const auto I = factors_with_prime(dg, p);
    const auto L = factors_with_prime(cg, p);
    if (I.empty() || L.empty()) continue;
    std::vector<std::uint32_t> e(L.size());
    std::uint32_t top = 0;
    for (std::size_t l = 0; l < L.size(); ++l) {
      e[l] = log_p(p, cg.factors()[L[l]].order);
      top = std::max(top, e[l]);
    }
    const ZpaRing z(p, top);
    const std::size_t nl = L.size();
    const std::size_t unknowns = I.size() * nl;
    auto var = [nl](std::size_t i, std::size_t l) { return i * nl + l; };

    // coordinates of (cod basis l)·g in the p-part
    std::vector<std::vector<std::vector<std::uint32_t>>> beta_g(nl);
    for (std::size_t l = 0; l < nl; ++l) {
      const std::uint32_t b = cg.basis_element(L[l]);
      for (std::uint32_t g : ring_basis) {
        const auto c = cg.coords(cod.act(b, g));
        std::vector<std::uint32_t> sel(nl);
        for (std::size_t t = 0; t < nl; ++t) sel[t] = c[L[t]];
        beta_g[l].push_back(std::move(sel));
      }
    }

    std::vector<std::vector<std::uint64_t>> rows;
    for (std::size_t i = 0; i < I.size(); ++i) {
      const std::uint32_t bi = dg.basis_element(I[i]);
      for (std::size_t gi = 0; gi < ring_basis.size(); ++gi) {
        const auto cx = dg.coords(dom.act(bi, ring_basis[gi]));
        for (std::size_t t = 0; t < nl; ++t) {
          std::vector<std::uint64_t> row(unknowns, 0);
          for (std::size_t k = 0; k < I.size(); ++k) row[var(k, t)] = z.add(row[var(k, t)], cx[I[k]]);
          for (std::size_t l = 0; l < nl; ++l) row[var(i, l)] = z.sub(row[var(i, l)], beta_g[l][gi][t] % z.modulus());
          const std::uint64_t scale = z.pow(top - e[t]);
          bool nonzero = false;
          for (auto& v : row) {
            v = z.mul(v, scale);
            nonzero = nonzero || v != 0;
          }
          if (nonzero) rows.push_back(std::move(row));
        }
      }
      for (std::size_t t = 0; t < nl; ++t) {
        const std::uint64_t c = z.mul(dg.factors()[I[i]].order % z.modulus(), z.pow(top - e[t]));
        if (c == 0) continue;
        std::vector<std::uint64_t> row(unknowns, 0);
        row[var(i, t)] = c;
        rows.push_back(std::move(row));
      }
    }
    ZpaMatrix b(rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < unknowns; ++c) b.at(r, c) = rows[r][c];
    const ZpaBasis ker = kernel_basis(z, b);

    std::vector<std::uint32_t> exps(unknowns);
    for (std::size_t i = 0; i < I.size(); ++i)
      for (std::size_t l = 0; l < nl; ++l) exps[var(i, l)] = e[l];
    std::vector<std::vector<std::uint64_t>> reduced;
    for (const auto& w : ker.vectors) {
      std::vector<std::uint64_t> v(unknowns);
      for (std::size_t u = 0; u < unknowns; ++u) v[u] = w[u] % z.pow(exps[u]);
      reduced.push_back(std::move(v));
    }
    const ZpaBasis basis = subgroup_basis(p, exps, reduced);
    for (std::size_t k = 0; k < basis.vectors.size(); ++k) {
      std::vector<std::uint32_t> images(dg.rank(), 0);
      for (std::size_t i = 0; i < I.size(); ++i) {
        std::vector<std::uint32_t> c(cg.rank(), 0);
        for (std::size_t l = 0; l < nl; ++l) c[L[l]] = static_cast<std::uint32_t>(basis.vectors[k][var(i, l)]);
        images[I[i]] = cg.from_coords(c);
      }
      out.gens.push_back(std::move(images));
      out.orders.push_back(basis.orders[k]);
    }
  }
  return out;
}

}  // namespace

std::uint64_t HomSpace::count() const {
  std::uint64_t c = 1;
  for (auto o : orders) {
    if (c > UINT64_MAX / o) return UINT64_MAX;
    c *= o;
  }
  return c;
}

bool HomSpace::enumerable() const { return count() <= limits().hom_size; }

void HomSpace::require_enumerable() const {
  if (!enumerable()) {
    throw HomSpaceTooLarge("hom space with " + std::to_string(gens.size()) + " generators has more than " +
                           std::to_string(limits().hom_size) + " elements");
  }
}

std::vector<ModuleHom> HomSpace::generator_homs() const {
  std::vector<ModuleHom> out;
  for (std::size_t i = 0; i < gens.size(); ++i) out.push_back(generator(i));
  return out;
}

std::vector<std::uint32_t> HomSpace::combine(const std::vector<std::uint64_t>& coeffs) const {
  std::vector<std::uint32_t> cur(dom->group().rank(), 0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::uint64_t c = coeffs[i] % orders[i];
    if (c == 0) continue;
    for (std::size_t b = 0; b < cur.size(); ++b) cur[b] = cod->add(cur[b], cod->group().times(c, gens[i][b]));
  }
  return cur;
}

std::vector<ModuleHom> HomSpace::all() const {
  std::vector<ModuleHom> out;
  for_each([&](const std::vector<std::uint32_t>& images) { out.push_back(hom_from_basis_images(dom, cod, images)); });
  return out;
}

HomSpace hom_space(const ModulePtr& dom, const ModulePtr& cod) {
  HomData d = compute_homs(*dom, *cod);
  return HomSpace{dom, cod, std::move(d.gens), std::move(d.orders)};
}

HomSpace endomorphisms(const ModulePtr& m) {
  auto d = m->cache().get_or_compute<HomData>("end", [&] { return compute_homs(*m, *m); });
  return HomSpace{m, m, d->gens, d->orders};
}

// ---------------------------------------------------------------- factoring

Factorizer::Factorizer(const ModuleHom& u, const ModulePtr& target)
    : u_(u), target_(target), homs_(hom_space(u.cod, target)) {
  const AbelianLayout& xg = u.dom->group();
  const AbelianLayout& zg = target->group();
  std::vector<std::vector<std::uint32_t>> values(homs_.gens.size());
  for (std::size_t j = 0; j < homs_.gens.size(); ++j) {
    for (std::size_t b = 0; b < xg.rank(); ++b) {
      values[j].push_back(apply_basis_images(*u.cod, *target, homs_.gens[j], u.map[xg.basis_element(b)]));
    }
  }
  for (std::uint32_t p : primes_of(zg)) {
    PrimeBlock blk;
    blk.prime = p;
    blk.target_factors = factors_with_prime(zg, p);
    for (auto l : blk.target_factors) blk.top = std::max(blk.top, log_p(p, zg.factors()[l].order));
    for (std::size_t j = 0; j < homs_.gens.size(); ++j) {
      if (prime_power(homs_.orders[j]).first == p) blk.unknowns.push_back(j);
    }
    const ZpaRing z(p, blk.top);
    ZpaMatrix b(xg.rank() * blk.target_factors.size(), blk.unknowns.size());
    for (std::size_t x = 0; x < xg.rank(); ++x) {
      for (std::size_t t = 0; t < blk.target_factors.size(); ++t) {
        const std::size_t l = blk.target_factors[t];
        const std::uint64_t scale = z.pow(blk.top - log_p(p, zg.factors()[l].order));
        for (std::size_t k = 0; k < blk.unknowns.size(); ++k) {
          b.at(x * blk.target_factors.size() + t, k) = z.mul(zg.coord(values[blk.unknowns[k]][x], l), scale);
        }
      }
    }
    blk.solver.emplace(z, std::move(b));
    blocks_.push_back(std::move(blk));
  }
}

std::optional<std::vector<std::uint32_t>> Factorizer::solve(const ModuleHom& f) const {
  return solve_images(basis_images(f));
}

std::optional<std::vector<std::uint32_t>> Factorizer::solve_images(const std::vector<std::uint32_t>& fimg) const {
  const AbelianLayout& xg = u_.dom->group();
  const AbelianLayout& zg = target_->group();
  std::vector<std::uint64_t> coeffs(homs_.gens.size(), 0);
  for (const auto& blk : blocks_) {
    const ZpaRing z(blk.prime, blk.top);
    std::vector<std::uint64_t> rhs(xg.rank() * blk.target_factors.size());
    for (std::size_t x = 0; x < xg.rank(); ++x) {
      for (std::size_t t = 0; t < blk.target_factors.size(); ++t) {
        const std::size_t l = blk.target_factors[t];
        const std::uint64_t scale = z.pow(blk.top - log_p(blk.prime, zg.factors()[l].order));
        rhs[x * blk.target_factors.size() + t] = z.mul(zg.coord(fimg[x], l), scale);
      }
    }
    auto sol = blk.solver->solve(rhs);
    if (!sol) return std::nullopt;
    for (std::size_t k = 0; k < blk.unknowns.size(); ++k) coeffs[blk.unknowns[k]] = (*sol)[k];
  }
  return homs_.combine(coeffs);
}

std::optional<ModuleHom> factor_through(const ModuleHom& u, const ModuleHom& f) {
  Factorizer fz(u, f.cod);
  auto a = fz.solve(f);
  if (!a) return std::nullopt;
  return hom_from_basis_images(u.cod, f.cod, *a);
}

std::optional<ModuleHom> extend_along(const ModuleHom& inclusion, const ModuleHom& f) {
  return factor_through(inclusion, f);
}

std::optional<ModuleHom> extension_exists(const Submodule& a, const ModuleHom& f) {
  RealizedSubmodule r = realize(a);
  if (f.dom->size() != r.module->size()) throw InvalidSpec("extension: map is not defined on the submodule");
  ModuleHom g{r.module, f.cod, f.map};
  return extend_along(r.inclusion, g);
}

// ---------------------------------------------------------------- summands

std::optional<IndexSet> retraction_complement(const ModulePtr& m, const IndexSet& a) {
  const std::size_t ac = a.count();
  if (ac == 1) return full_set(*m);
  if (ac == m->size()) return zero_set(*m);
  RealizedSubmodule r = realize({m, a});
  Factorizer fz(r.inclusion, r.module);
  auto rho = fz.solve(identity_hom(r.module));
  if (!rho) return std::nullopt;
  const auto map = expand_basis_images(*m, *r.module, *rho);
  IndexSet ker(m->size());
  for (std::uint32_t x = 0; x < m->size(); ++x) {
    if (map[x] == 0) ker.insert(x);
  }
  return ker;
}

bool is_summand(const ModulePtr& m, const IndexSet& a) { return retraction_complement(m, a).has_value(); }

std::optional<Submodule> summand_complement(const Submodule& a) {
  auto ker = retraction_complement(a.parent, a.members);
  if (!ker) return std::nullopt;
  try {
    const std::size_t want = a.parent->size() / a.size();
    for (const auto& b : *submodule_lattice(*a.parent)) {
      if (b.count() == want && b.intersection_count(a.members) == 1) return Submodule{a.parent, b};
    }
  } catch (const LatticeTooLarge&) {
  }
  return Submodule{a.parent, *ker};
}

// ---------------------------------------------------------------- isomorphism

std::uint64_t Fingerprint::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(size);
  for (auto v : invariants) mix(v);
  mix(socle_size);
  mix(radical_size);
  mix(length);
  return h;
}

Fingerprint fingerprint(const FiniteModule& m) {
  return *m.cache().get_or_compute<Fingerprint>("fingerprint", [&] {
    Fingerprint f;
    f.size = m.size();
    f.invariants = m.group().invariants();
    f.socle_size = socle(m).count();
    f.radical_size = radical(m).count();
    f.length = composition_length(m);
    return f;
  });
}

std::uint64_t subgroup_order(const FiniteModule& m, const std::vector<std::uint32_t>& elems) {
  const AbelianLayout& g = m.group();
  std::uint64_t total = 1;
  for (std::uint32_t p : primes_of(g)) {
    const auto L = factors_with_prime(g, p);
    std::vector<std::uint32_t> exps;
    for (auto l : L) exps.push_back(log_p(p, g.factors()[l].order));
    std::vector<std::vector<std::uint64_t>> gens;
    for (std::uint32_t x : elems) {
      std::vector<std::uint64_t> c;
      bool nonzero = false;
      for (auto l : L) {
        c.push_back(g.coord(x, l));
        nonzero = nonzero || c.back() != 0;
      }
      if (nonzero) gens.push_back(std::move(c));
    }
    for (auto o : subgroup_basis(p, exps, gens).orders) total *= o;
  }
  return total;
}

bool injective_images(const FiniteModule& dom, const FiniteModule& cod, const std::vector<std::uint32_t>& images) {
  // injective iff the image has |dom| elements
  return subgroup_order(cod, images) == dom.size();
}

IsoResult are_isomorphic(const ModulePtr& a, const ModulePtr& b) {
  IsoResult res;
  res.method = "fingerprint";
  if (!same_ring(a->ring(), b->ring())) return res;
  if (a->size() != b->size() || a->group().invariants() != b->group().invariants()) return res;
  if (fingerprint(*a) != fingerprint(*b)) return res;
  const HomSpace h = hom_space(a, b);
  if (h.enumerable()) {
    res.method = "enumeration";
    std::optional<std::vector<std::uint32_t>> found;
    h.for_each([&](const std::vector<std::uint32_t>& images) {
      if (!injective_images(*a, *b, images)) return false;
      found = images;
      return true;
    });
    if (found) {
      res.isomorphic = true;
      res.witness = hom_from_basis_images(a, b, *found);
    }
    return res;
  }
  // When a ≅ b the isomorphisms are a fixed positive fraction of Hom(a, b),
  // bounded below in terms of the simple types only, so a long seeded search
  // settles it.
  res.method = "random-search";
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<std::uint64_t> coeffs(h.gens.size());
  for (int attempt = 0; attempt < 400; ++attempt) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = rng() % h.orders[i];
    auto images = h.combine(coeffs);
    if (injective_images(*a, *b, images)) {
      res.isomorphic = true;
      res.witness = hom_from_basis_images(a, b, images);
      return res;
    }
  }
  return res;
}

}  // namespace modclass
