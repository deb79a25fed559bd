#pragma once

// Named analysis constants used across the toolkit, kept as exact rationals.
// Every entry can be overridden by name; reports record which entries differ
// from the defaults so results stay reproducible.

#include "edgesum/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace edgesum {

struct ConstantsTable {
  Rat c0;  // 10^46
  Rat c1;  // 110
  Rat c2;  // 10^16
  Rat c3;  // 28
  Rat eps0;  // 10^-9
  Rat eps1;  // 10^-18
  Rat eps2;  // 10^-6
  Rat eps3;  // 10^-2
  Rat eps4;  // 1/10
  Rat eps5;  // 1/4
};

ConstantsTable default_constants();

/// Override names in canonical order: C0, C1, C2, C3, eps0, ..., eps5.
const std::vector<std::string>& constant_names();

/// Throws UsageError on an unknown name.
Rat get_constant(const ConstantsTable& table, const std::string& name);

/// Throws UsageError on an unknown name or a value <= 0 (all entries are
/// strictly positive by contract).
void set_constant(ConstantsTable& table, const std::string& name, const Rat& value);

/// (name, "p/q") for every entry that differs from the default table, in
/// canonical name order.  Empty for an untouched table.
std::vector<std::pair<std::string, std::string>> constant_overrides(const ConstantsTable& table);

}  // namespace edgesum
