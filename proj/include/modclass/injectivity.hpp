#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "modclass/module.hpp"

namespace modclass {

enum class BaerMode { essential_ideals, all_ideals };

// Baer: every map from a right ideal into M extends to R.
bool is_injective(const ModulePtr& m, BaerMode mode = BaerMode::essential_ideals);

// Character value of chi at x as v / exponent(M) in Q/Z; the character with
// index c has coordinates equal to those of c in M.
std::uint32_t character_value(const FiniteModule& m, std::uint32_t chi, std::uint32_t x);

// M* = Hom(M, Q/Z), a right module over the opposite ring with
// (chi·r)(x) = chi(x r). Same additive layout as M.
ModulePtr character_module(const ModulePtr& m);
// M** viewed over the ring of M.
ModulePtr double_dual(const ModulePtr& m);
// The evaluation map M -> M**.
ModuleHom evaluation(const ModulePtr& m, const ModulePtr& mdd);

// (R over its opposite ring)*, an injective cogenerator over R.
ModulePtr injective_cogenerator(const RingPtr& r);

struct HullResult {
  ModulePtr hull;
  ModuleHom embedding;
  std::string method;  // "cogenerator" or "socle"
  std::size_t cogenerator_power = 0;
  bool essential = false;
  bool injective = false;
  nlohmann::json to_json() const;
};

enum class HullMethod { automatic, cogenerator, socle };
// Throws HullPostconditionFailure unless the result is injective with
// essential image.
HullResult injective_hull(const ModulePtr& m, HullMethod method = HullMethod::automatic);

// Up to isomorphism, in canonical order. Cached per ring.
const std::vector<ModulePtr>& simple_modules(const RingPtr& r);
// E(S) for each simple S, in the order of simple_modules.
const std::vector<ModulePtr>& indecomposable_injectives(const RingPtr& r);
const std::vector<ModulePtr>& uniform_modules(const RingPtr& r);

// Index into simple_modules of the simple module isomorphic to s.
std::size_t simple_type(const ModulePtr& s);

}  // namespace modclass
