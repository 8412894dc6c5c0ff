#pragma once

#include <any>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "modclass/abelian.hpp"

namespace modclass {

// Description of a finite ring to build. Canonical JSON forms:
//   {"type":"zmod","n":4}
//   {"type":"gf","q":4}
//   {"type":"poly_quotient","q":2,"f":[1,1,1]}   coefficients low degree first
//   {"type":"ut2","q":2}
//   {"type":"ut2_rel","q":2,"d":2}
//   {"type":"product","factors":[...]}
//   {"type":"tables","add":[[...]],"mul":[[...]],"one":1}
struct RingSpec {
  enum class Kind { ZMod, GF, PolyQuotient, UT2, UT2Rel, Product, Tables };

  Kind kind = Kind::ZMod;
  std::uint32_t n = 1;  // zmod
  std::uint32_t q = 0;  // gf, poly_quotient, ut2, ut2_rel
  std::uint32_t d = 1;  // ut2_rel
  std::vector<std::uint32_t> poly;  // poly_quotient, ascending degree
  std::vector<RingSpec> factors;    // product
  std::vector<std::vector<std::uint32_t>> add_table, mul_table;  // tables
  std::uint32_t one = 0;                                          // tables

  static RingSpec zmod(std::uint32_t n);
  static RingSpec gf(std::uint32_t q);
  static RingSpec poly_quotient(std::uint32_t q, std::vector<std::uint32_t> f);
  static RingSpec ut2(std::uint32_t q);
  static RingSpec ut2_rel(std::uint32_t q, std::uint32_t d);
  static RingSpec product(std::vector<RingSpec> factors);

  nlohmann::json to_json() const;
  static RingSpec from_json(const nlohmann::json& j);
  // Accepts canonical JSON or the shorthands zmod:8, gf:4, ut2:2, ut2rel:2,2.
  static RingSpec parse(const std::string& text);
  std::string describe() const;

  bool operator==(const RingSpec&) const = default;
};

// Thread-safe memo table for values derived from an immutable object.
class DerivedCache {
 public:
  template <class T, class F>
  std::shared_ptr<const T> get_or_compute(const std::string& key, F&& compute) const {
    {
      std::lock_guard lock(mutex_);
      auto it = entries_.find(key);
      if (it != entries_.end()) return std::static_pointer_cast<const T>(it->second);
    }
    auto value = std::make_shared<const T>(compute());
    std::lock_guard lock(mutex_);
    auto [it, inserted] = entries_.emplace(key, value);
    return std::static_pointer_cast<const T>(it->second);
  }

 private:
  mutable std::mutex mutex_;
  mutable std::map<std::string, std::shared_ptr<const void>> entries_;
};

// A finite associative unital ring stored as dense Cayley tables. Element 0 is
// the additive identity. Instances are validated at construction and never
// modified afterwards.
class FiniteRing {
 public:
  std::uint32_t size() const { return n_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[std::size_t{a} * n_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[std::size_t{a} * n_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t one() const { return one_; }
  std::uint32_t characteristic() const { return characteristic_; }
  const RingSpec& spec() const { return spec_; }
  const AbelianLayout& additive() const { return additive_; }

  bool is_commutative() const;
  bool same_tables(const FiniteRing& o) const { return n_ == o.n_ && one_ == o.one_ && add_ == o.add_ && mul_ == o.mul_; }

  std::vector<std::vector<std::uint32_t>> add_table() const;
  std::vector<std::vector<std::uint32_t>> mul_table() const;

  // Human-readable label of an element in the natural coordinates of the spec.
  std::string element_label(std::uint32_t x) const;

  const DerivedCache& cache() const { return cache_; }

  // Validates everything; throws AxiomViolation naming the first violation.
  static std::shared_ptr<const FiniteRing> from_tables(std::vector<std::vector<std::uint32_t>> add,
                                                       std::vector<std::vector<std::uint32_t>> mul,
                                                       std::uint32_t one, RingSpec origin,
                                                       std::vector<std::string> labels = {});

 private:
  FiniteRing() = default;

  std::uint32_t n_ = 0;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<std::uint32_t> neg_;
  std::uint32_t one_ = 0;
  std::uint32_t characteristic_ = 1;
  RingSpec spec_;
  AbelianLayout additive_;
  std::vector<std::string> labels_;
  DerivedCache cache_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

RingPtr build_ring(const RingSpec& spec);
RingPtr opposite_ring(const FiniteRing& r);

// Pointer-equal or table-equal.
bool same_ring(const FiniteRing& a, const FiniteRing& b);

// Arithmetic of GF(q) with elements indexed by polynomial coordinates
// (highest-degree coefficient most significant).
class GaloisField {
 public:
  explicit GaloisField(std::uint32_t q);
  std::uint32_t size() const { return q_; }
  std::uint32_t prime() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t power(std::uint32_t a, std::uint64_t e) const;
  // elements x with x^s = x, ascending: the subfield of order s
  std::vector<std::uint32_t> subfield(std::uint32_t s) const;
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

 private:
  std::uint32_t q_, p_, k_;
  std::vector<std::uint32_t> modulus_;  // monic irreducible, ascending degree
  std::vector<std::uint32_t> add_, mul_;
};

}  // namespace modclass
