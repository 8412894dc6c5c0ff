#pragma once

#include <cstddef>

namespace modclass {

// Size bounds. Every bound is surfaced as an explicit error when hit; nothing
// is ever truncated silently.
struct Limits {
  std::size_t ring_size = 4096;
  std::size_t module_size = 65536;
  std::size_t lattice_size = 20000;
  std::size_t hom_size = 65536;
  // ring size times module size, i.e. entries of a scalar-action table
  std::size_t action_entries = std::size_t{1} << 25;
};

Limits limits();
void set_limits(const Limits& l);

// Reads MODCLASS_MAX_MODULE_SIZE and applies it on top of the current limits.
void apply_environment_overrides();

class ScopedLimits {
 public:
  explicit ScopedLimits(const Limits& l);
  ~ScopedLimits();
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  Limits saved_;
};

}  // namespace modclass
