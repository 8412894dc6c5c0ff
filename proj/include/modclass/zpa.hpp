#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace modclass {

// Linear algebra over the local ring Z/p^a. Every nonzero entry is a unit
// times a power of p, so elimination by least valuation keeps all arithmetic
// in machine integers.
class ZpaRing {
 public:
  ZpaRing(std::uint32_t p, std::uint32_t a);

  std::uint32_t p() const { return p_; }
  std::uint32_t exponent() const { return a_; }
  std::uint64_t modulus() const { return mod_; }
  std::uint64_t pow(std::uint32_t k) const { return pows_.at(k); }

  std::uint64_t reduce(std::int64_t x) const;
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const { return (x * y) % mod_; }
  std::uint64_t add(std::uint64_t x, std::uint64_t y) const { return (x + y) % mod_; }
  std::uint64_t sub(std::uint64_t x, std::uint64_t y) const { return (x + mod_ - y) % mod_; }
  // valuation of x; returns a for x == 0
  std::uint32_t valuation(std::uint64_t x) const;
  std::uint64_t unit_inverse(std::uint64_t u) const;

 private:
  std::uint32_t p_;
  std::uint32_t a_;
  std::uint64_t mod_;
  std::vector<std::uint64_t> pows_;
};

class ZpaMatrix {
 public:
  ZpaMatrix() = default;
  ZpaMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static ZpaMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> data_;
};

// L * B * Q = D with D diagonal, diagonal entries p^valuations[i] for
// i < rank and zero afterwards.
struct SmithForm {
  std::vector<std::uint32_t> valuations;
  std::size_t rank = 0;
  ZpaMatrix left;       // L (rows x rows), when requested
  ZpaMatrix right;      // Q (cols x cols), when requested
  ZpaMatrix right_inv;  // Q^{-1}, when requested
};

struct SmithRequest {
  bool left = false;
  bool right = false;
  bool right_inv = false;
};

SmithForm smith(const ZpaRing& ring, ZpaMatrix b, SmithRequest want);

// An independent generating family: vector i has additive order orders[i] and
// the group they span is the direct sum of the cyclic groups they generate.
struct ZpaBasis {
  std::vector<std::vector<std::uint64_t>> vectors;
  std::vector<std::uint64_t> orders;
};

// Basis of {w : B w = 0} inside (Z/p^a)^cols.
ZpaBasis kernel_basis(const ZpaRing& ring, const ZpaMatrix& b);

// Basis of the subgroup generated by `gens` inside the group
// Z/p^{e_0} + ... + Z/p^{e_{k-1}} (coordinates given as residues).
ZpaBasis subgroup_basis(std::uint32_t p, const std::vector<std::uint32_t>& exps,
                        const std::vector<std::vector<std::uint64_t>>& gens);

// Solves B x = rhs over Z/p^a for many right-hand sides with one elimination.
class ZpaSolver {
 public:
  ZpaSolver(const ZpaRing& ring, ZpaMatrix b);
  std::optional<std::vector<std::uint64_t>> solve(const std::vector<std::uint64_t>& rhs) const;

 private:
  ZpaRing ring_;
  std::size_t rows_;
  std::size_t cols_;
  SmithForm form_;
};

}  // namespace modclass
