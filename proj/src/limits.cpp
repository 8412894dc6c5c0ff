#include "modclass/limits.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

#include "modclass/errors.hpp"

namespace modclass {

namespace {
std::mutex g_mutex;
Limits g_limits;
}  // namespace

Limits limits() {
  std::lock_guard lock(g_mutex);
  return g_limits;
}

void set_limits(const Limits& l) {
  if (l.ring_size == 0 || l.module_size == 0 || l.lattice_size == 0 || l.hom_size == 0) {
    throw InvalidSpec("limits must be positive");
  }
  std::lock_guard lock(g_mutex);
  g_limits = l;
}

void apply_environment_overrides() {
  const char* v = std::getenv("MODCLASS_MAX_MODULE_SIZE");
  if (v == nullptr || *v == '\0') return;
  char* end = nullptr;
  unsigned long long n = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0' || n == 0) {
    throw InvalidSpec(std::string("MODCLASS_MAX_MODULE_SIZE is not a positive integer: ") + v);
  }
  Limits l = limits();
  l.module_size = static_cast<std::size_t>(n);
  set_limits(l);
}

ScopedLimits::ScopedLimits(const Limits& l) : saved_(limits()) { set_limits(l); }
ScopedLimits::~ScopedLimits() { set_limits(saved_); }

}  // namespace modclass
