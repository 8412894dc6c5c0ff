#pragma once

#include <string>

#include "modclass/module.hpp"

namespace modclass::cli {

// Grammar:
//   spec  := regular | zero | simple:i | inj:i | uniform:i
//          | sum(spec, spec, ...) | power(spec, k) | hull(spec)
//          | {raw tables JSON} | @path-to-json
// Indices follow the order printed by `simples`, `injectives`, `uniforms`.
// Errors are InvalidSpec and quote the offending fragment.
ModulePtr parse_module_spec(const RingPtr& r, const std::string& text);

}  // namespace modclass::cli
