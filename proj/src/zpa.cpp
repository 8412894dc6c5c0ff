#include "modclass/zpa.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace modclass {

ZpaRing::ZpaRing(std::uint32_t p, std::uint32_t a) : p_(p), a_(a), mod_(1) {
  pows_.push_back(1);
  for (std::uint32_t i = 0; i < a; ++i) {
    mod_ *= p;
    pows_.push_back(mod_);
  }
  if (mod_ > (std::uint64_t{1} << 31)) throw std::logic_error("ZpaRing: modulus too large");
}

std::uint64_t ZpaRing::reduce(std::int64_t x) const {
  std::int64_t m = static_cast<std::int64_t>(mod_);
  std::int64_t r = x % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::uint32_t ZpaRing::valuation(std::uint64_t x) const {
  x %= mod_;
  if (x == 0) return a_;
  std::uint32_t v = 0;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
  }
  return v;
}

std::uint64_t ZpaRing::unit_inverse(std::uint64_t u) const {
  std::int64_t a = static_cast<std::int64_t>(u % mod_);
  std::int64_t m = static_cast<std::int64_t>(mod_);
  std::int64_t t = 0;
  std::int64_t nt = 1;
  std::int64_t r = m;
  std::int64_t nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw std::logic_error("unit_inverse: not a unit");
  return reduce(t);
}

ZpaMatrix ZpaMatrix::identity(std::size_t n) {
  ZpaMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

void swap_rows(ZpaMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(ZpaMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

void scale_row(const ZpaRing& z, ZpaMatrix& m, std::size_t r, std::uint64_t u) {
  for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = z.mul(m.at(r, c), u);
}

// row dst -= k * row src
void axpy_row(const ZpaRing& z, ZpaMatrix& m, std::size_t dst, std::size_t src, std::uint64_t k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const std::uint64_t s = m.at(src, c);
    if (s) m.at(dst, c) = z.sub(m.at(dst, c), z.mul(k, s));
  }
}

// col dst -= k * col src
void axpy_col(const ZpaRing& z, ZpaMatrix& m, std::size_t dst, std::size_t src, std::uint64_t k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const std::uint64_t s = m.at(r, src);
    if (s) m.at(r, dst) = z.sub(m.at(r, dst), z.mul(k, s));
  }
}

}  // namespace

SmithForm smith(const ZpaRing& z, ZpaMatrix b, SmithRequest want) {
  const std::size_t rows = b.rows();
  const std::size_t cols = b.cols();
  SmithForm f;
  if (want.left) f.left = ZpaMatrix::identity(rows);
  if (want.right) f.right = ZpaMatrix::identity(cols);
  if (want.right_inv) f.right_inv = ZpaMatrix::identity(cols);

  const std::size_t steps = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < steps; ++t) {
    std::uint32_t best_v = z.exponent();
    std::size_t bi = 0;
    std::size_t bj = 0;
    for (std::size_t i = t; i < rows && best_v > 0; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        const std::uint64_t x = b.at(i, j);
        if (x == 0) continue;
        const std::uint32_t v = z.valuation(x);
        if (v < best_v) {
          best_v = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    }
    if (best_v == z.exponent()) break;

    swap_rows(b, t, bi);
    if (want.left) swap_rows(f.left, t, bi);
    swap_cols(b, t, bj);
    if (want.right) swap_cols(f.right, t, bj);
    if (want.right_inv) swap_rows(f.right_inv, t, bj);

    const std::uint64_t pv = z.pow(best_v);
    const std::uint64_t unit = b.at(t, t) / pv;
    const std::uint64_t uinv = z.unit_inverse(unit);
    scale_row(z, b, t, uinv);
    if (want.left) scale_row(z, f.left, t, uinv);

    for (std::size_t i = t + 1; i < rows; ++i) {
      const std::uint64_t x = b.at(i, t);
      if (x == 0) continue;
      const std::uint64_t k = x / pv;
      axpy_row(z, b, i, t, k);
      if (want.left) axpy_row(z, f.left, i, t, k);
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      const std::uint64_t x = b.at(t, j);
      if (x == 0) continue;
      const std::uint64_t k = x / pv;
      // col j -= k col t; the inverse operation is row t += k row j on Q^{-1}
      b.at(t, j) = 0;
      if (want.right) axpy_col(z, f.right, j, t, k);
      if (want.right_inv) axpy_row(z, f.right_inv, t, j, z.sub(0, k));
    }
    f.valuations.push_back(best_v);
  }
  f.rank = t;
  return f;
}

ZpaBasis kernel_basis(const ZpaRing& z, const ZpaMatrix& b) {
  SmithForm f = smith(z, b, {.right = true});
  const std::size_t cols = b.cols();
  ZpaBasis out;
  for (std::size_t i = 0; i < cols; ++i) {
    const std::uint32_t v = i < f.rank ? f.valuations[i] : z.exponent();
    if (v == 0) continue;
    const std::uint64_t scale = z.pow(z.exponent() - v);
    std::vector<std::uint64_t> w(cols);
    for (std::size_t r = 0; r < cols; ++r) w[r] = z.mul(f.right.at(r, i), scale);
    out.vectors.push_back(std::move(w));
    out.orders.push_back(z.pow(v));
  }
  return out;
}

ZpaBasis subgroup_basis(std::uint32_t p, const std::vector<std::uint32_t>& exps,
                        const std::vector<std::vector<std::uint64_t>>& gens) {
  ZpaBasis out;
  if (exps.empty() || gens.empty()) return out;
  const std::uint32_t top = *std::max_element(exps.begin(), exps.end());
  if (top == 0) return out;
  ZpaRing z(p, top);
  const std::size_t k = exps.size();
  ZpaMatrix m(gens.size(), k);
  for (std::size_t r = 0; r < gens.size(); ++r) {
    for (std::size_t c = 0; c < k; ++c) m.at(r, c) = z.mul(gens[r][c] % z.pow(exps[c]), z.pow(top - exps[c]));
  }
  SmithForm f = smith(z, std::move(m), {.right_inv = true});
  for (std::size_t i = 0; i < f.rank; ++i) {
    const std::uint32_t v = f.valuations[i];
    std::vector<std::uint64_t> h(k);
    for (std::size_t c = 0; c < k; ++c) {
      const std::uint64_t x = z.mul(f.right_inv.at(i, c), z.pow(v));
      const std::uint64_t s = z.pow(top - exps[c]);
      if (x % s != 0) throw std::logic_error("subgroup_basis: row space left the embedded subgroup");
      h[c] = x / s;
    }
    out.vectors.push_back(std::move(h));
    out.orders.push_back(z.pow(top - v));
  }
  return out;
}

ZpaSolver::ZpaSolver(const ZpaRing& ring, ZpaMatrix b)
    : ring_(ring), rows_(b.rows()), cols_(b.cols()), form_(smith(ring, std::move(b), {.left = true, .right = true})) {}

std::optional<std::vector<std::uint64_t>> ZpaSolver::solve(const std::vector<std::uint64_t>& rhs) const {
  std::vector<std::uint64_t> lb(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < rows_; ++j) {
      const std::uint64_t l = form_.left.at(i, j);
      if (l && rhs[j]) s = ring_.add(s, ring_.mul(l, rhs[j] % ring_.modulus()));
    }
    lb[i] = s;
  }
  std::vector<std::uint64_t> y(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i < form_.rank) {
      const std::uint64_t pv = ring_.pow(form_.valuations[i]);
      if (lb[i] % pv != 0) return std::nullopt;
      y[i] = lb[i] / pv;
    } else if (lb[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<std::uint64_t> x(cols_, 0);
  for (std::size_t r = 0; r < cols_; ++r) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < form_.rank; ++i) {
      if (y[i]) s = ring_.add(s, ring_.mul(form_.right.at(r, i), y[i]));
    }
    x[r] = s;
  }
  return x;
}

}  // namespace modclass
