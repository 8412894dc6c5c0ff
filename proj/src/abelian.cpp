#include "modclass/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "modclass/errors.hpp"
#include "modclass/index_set.hpp"

namespace modclass {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t n) {
  if (n < 2) return {0, 0};
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  std::uint32_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), e};
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(static_cast<std::uint32_t>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

AbelianLayout AbelianLayout::from_factors(std::vector<CyclicFactor> factors) {
  AbelianLayout l;
  l.factors_ = std::move(factors);
  l.finish();
  return l;
}

AbelianLayout AbelianLayout::with_codes(std::vector<CyclicFactor> factors, std::vector<std::uint32_t> code_of) {
  AbelianLayout l;
  l.factors_ = std::move(factors);
  l.finish();
  if (code_of.size() != l.size_) throw std::logic_error("with_codes: size mismatch");
  bool identity = true;
  for (std::uint32_t i = 0; i < code_of.size(); ++i) identity = identity && code_of[i] == i;
  if (!identity) {
    if (code_of[0] != 0) throw std::logic_error("with_codes: index 0 must be the identity");
    l.index_of_.assign(l.size_, 0);
    for (std::uint32_t i = 0; i < code_of.size(); ++i) l.index_of_[code_of[i]] = i;
    l.code_of_ = std::move(code_of);
    l.xor_fast_ = false;
  }
  return l;
}

void AbelianLayout::finish() {
  stride_.assign(factors_.size(), 1);
  std::uint64_t s = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    stride_[i] = static_cast<std::uint32_t>(s);
    s *= factors_[i].order;
    if (s > 0xFFFFFFFFULL) throw SizeLimit("abelian group too large");
  }
  size_ = static_cast<std::uint32_t>(s);
  xor_fast_ = std::all_of(factors_.begin(), factors_.end(), [](const CyclicFactor& f) { return f.order == 2; });
}

std::uint32_t AbelianLayout::add_codes(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::uint32_t o = factors_[i].order;
    const std::uint32_t s = stride_[i];
    std::uint32_t d = (a / s) % o + (b / s) % o;
    if (d >= o) d -= o;
    r += d * s;
  }
  return r;
}

std::uint32_t AbelianLayout::neg(std::uint32_t x) const {
  if (xor_fast_) return x;
  const std::uint32_t c = code_of(x);
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::uint32_t o = factors_[i].order;
    const std::uint32_t d = (c / stride_[i]) % o;
    r += ((o - d) % o) * stride_[i];
  }
  return index_of(r);
}

std::uint32_t AbelianLayout::times(std::uint64_t k, std::uint32_t x) const {
  const std::uint32_t c = code_of(x);
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::uint32_t o = factors_[i].order;
    const std::uint64_t d = (c / stride_[i]) % o;
    r += static_cast<std::uint32_t>(((k % o) * d) % o) * stride_[i];
  }
  return index_of(r);
}

void AbelianLayout::coords(std::uint32_t x, std::span<std::uint32_t> out) const {
  const std::uint32_t c = code_of(x);
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = (c / stride_[i]) % factors_[i].order;
}

std::vector<std::uint32_t> AbelianLayout::coords(std::uint32_t x) const {
  std::vector<std::uint32_t> out(factors_.size());
  coords(x, out);
  return out;
}

std::uint32_t AbelianLayout::from_coords(std::span<const std::uint32_t> c) const {
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) r += (c[i] % factors_[i].order) * stride_[i];
  return index_of(r);
}

std::uint64_t AbelianLayout::exponent() const {
  std::uint64_t e = 1;
  for (const auto& f : factors_) e = std::lcm(e, std::uint64_t{f.order});
  return e;
}

std::uint32_t AbelianLayout::element_order(std::uint32_t x) const {
  const std::uint32_t c = code_of(x);
  std::uint64_t e = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::uint32_t o = factors_[i].order;
    const std::uint32_t d = (c / stride_[i]) % o;
    e = std::lcm(e, std::uint64_t{o / std::gcd(o, d == 0 ? o : d)});
  }
  return static_cast<std::uint32_t>(e);
}

std::vector<std::uint32_t> AbelianLayout::invariants() const {
  std::vector<std::uint32_t> v;
  v.reserve(factors_.size());
  for (const auto& f : factors_) v.push_back(f.order);
  std::sort(v.begin(), v.end());
  return v;
}

AbelianLayout AbelianLayout::discover(std::uint32_t n, const AddFn& add) {
  if (n == 0) throw std::logic_error("discover: empty group");
  if (n == 1) return AbelianLayout{};

  std::vector<std::uint32_t> order(n, 1);
  for (std::uint32_t x = 1; x < n; ++x) {
    std::uint32_t k = 1;
    std::uint32_t y = x;
    while (y != 0) {
      y = add(y, x);
      ++k;
      if (k > n) throw AxiomViolation("addition is not a group operation (element of unbounded order)");
    }
    order[x] = k;
  }
  auto times = [&](std::uint64_t k, std::uint32_t x) {
    std::uint32_t r = 0;
    for (std::uint64_t i = 0; i < k; ++i) r = add(r, x);
    return r;
  };
  auto neg = [&](std::uint32_t x) { return times(order[x] - 1, x); };

  std::vector<CyclicFactor> factors;
  std::vector<std::uint32_t> basis;
  for (std::uint32_t p : prime_factors(n)) {
    std::vector<std::uint32_t> part;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (prime_power(order[x]).first == p || order[x] == 1) part.push_back(x);
    }
    IndexSet in_h(n);
    in_h.insert(0);
    std::vector<std::uint32_t> h_members{0};
    while (h_members.size() < part.size()) {
      std::uint32_t best_t = 0;
      std::uint32_t best_y = 0;
      for (std::uint32_t y : part) {
        if (in_h.contains(y)) continue;
        std::uint32_t t = 1;
        std::uint32_t z = y;
        while (!in_h.contains(z)) {
          z = add(z, y);
          if (++t > n) throw AxiomViolation("addition is not a group operation");
        }
        if (t > best_t) {
          best_t = t;
          best_y = y;
        }
      }
      // Adjust the chosen element so that its order equals its relative order.
      const std::uint32_t target = times(best_t, best_y);
      std::uint32_t correction = 0;
      bool found = false;
      for (std::uint32_t h : h_members) {
        if (times(best_t, h) == target) {
          correction = h;
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("discover: no lift of maximal relative order");
      const std::uint32_t g = add(best_y, neg(correction));
      factors.push_back({p, best_t});
      basis.push_back(g);
      const std::size_t old = h_members.size();
      std::uint32_t cur = 0;
      for (std::uint32_t k = 1; k < best_t; ++k) {
        cur = add(cur, g);
        for (std::size_t i = 0; i < old; ++i) {
          const std::uint32_t e = add(h_members[i], cur);
          if (!in_h.contains(e)) {
            in_h.insert(e);
            h_members.push_back(e);
          }
        }
      }
    }
  }

  AbelianLayout l;
  l.factors_ = factors;
  l.finish();
  if (l.size_ != n) throw AxiomViolation("addition does not define an abelian group of the stated size");
  std::vector<std::uint32_t> index_of(n, 0);
  std::vector<std::uint32_t> digits(factors.size(), 0);
  std::uint32_t cur = 0;
  for (std::uint32_t code = 0; code < n; ++code) {
    index_of[code] = cur;
    for (std::size_t i = factors.size(); i-- > 0;) {
      cur = add(cur, basis[i]);
      if (++digits[i] < factors[i].order) break;
      digits[i] = 0;
    }
  }
  std::vector<std::uint32_t> code_of(n, 0xFFFFFFFFU);
  for (std::uint32_t c = 0; c < n; ++c) {
    if (code_of[index_of[c]] != 0xFFFFFFFFU) throw AxiomViolation("addition is not commutative or not a group");
    code_of[index_of[c]] = c;
  }
  return with_codes(std::move(factors), std::move(code_of));
}

}  // namespace modclass
