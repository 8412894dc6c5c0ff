#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace modclass {

// One cyclic factor Z/p^e of a finite abelian group.
struct CyclicFactor {
  std::uint32_t prime = 0;
  std::uint32_t order = 0;  // p^e, always >= 2

  bool operator==(const CyclicFactor&) const = default;
};

// Coordinates for a finite abelian group: a list of prime-power cyclic factors
// together with a bijection between element indices and mixed-radix codes.
// Factor 0 is the most significant digit. Index 0 is always the identity.
class AbelianLayout {
 public:
  using AddFn = std::function<std::uint32_t(std::uint32_t, std::uint32_t)>;

  AbelianLayout() = default;  // the trivial group

  // Index equals code.
  static AbelianLayout from_factors(std::vector<CyclicFactor> factors);

  // Finds prime-power coordinates for a group on indices 0..n-1 given its
  // addition. Basis choice is deterministic (smallest indices win ties).
  static AbelianLayout discover(std::uint32_t n, const AddFn& add);

  // Explicit index -> code bijection over the given factors.
  static AbelianLayout with_codes(std::vector<CyclicFactor> factors, std::vector<std::uint32_t> code_of);

  std::uint32_t size() const { return size_; }
  std::size_t rank() const { return factors_.size(); }
  const std::vector<CyclicFactor>& factors() const { return factors_; }
  bool identity_indexing() const { return code_of_.empty(); }

  std::uint32_t code_of(std::uint32_t x) const { return code_of_.empty() ? x : code_of_[x]; }
  std::uint32_t index_of(std::uint32_t code) const { return index_of_.empty() ? code : index_of_[code]; }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    if (xor_fast_) return x ^ y;
    return index_of(add_codes(code_of(x), code_of(y)));
  }
  std::uint32_t neg(std::uint32_t x) const;
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return add(x, neg(y)); }
  std::uint32_t times(std::uint64_t k, std::uint32_t x) const;

  // digit of factor i in element x
  std::uint32_t coord(std::uint32_t x, std::size_t i) const {
    return (code_of(x) / stride_[i]) % factors_[i].order;
  }
  void coords(std::uint32_t x, std::span<std::uint32_t> out) const;
  std::vector<std::uint32_t> coords(std::uint32_t x) const;
  std::uint32_t from_coords(std::span<const std::uint32_t> c) const;
  std::uint32_t basis_element(std::size_t i) const { return index_of(stride_[i]); }

  std::uint64_t exponent() const;
  std::uint32_t element_order(std::uint32_t x) const;
  // sorted elementary divisors (prime-power orders)
  std::vector<std::uint32_t> invariants() const;

  bool same_group_type(const AbelianLayout& o) const { return invariants() == o.invariants(); }

 private:
  void finish();
  std::uint32_t add_codes(std::uint32_t a, std::uint32_t b) const;

  std::vector<CyclicFactor> factors_;
  std::vector<std::uint32_t> stride_;
  std::uint32_t size_ = 1;
  std::vector<std::uint32_t> code_of_;
  std::vector<std::uint32_t> index_of_;
  bool xor_fast_ = false;
};

// Smallest prime factor and prime-power helpers.
bool is_prime(std::uint64_t n);
// Returns {p, e} with n = p^e, or {0, 0} if n is not a prime power (n >= 2).
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t n);
std::vector<std::uint32_t> prime_factors(std::uint64_t n);

}  // namespace modclass
