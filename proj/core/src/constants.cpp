#include "edgesum/constants.hpp"

#include "edgesum/errors.hpp"

namespace edgesum {

namespace {

const Rat* entry(const ConstantsTable& table, const std::string& name) {
  if (name == "C0") return &table.c0;
  if (name == "C1") return &table.c1;
  if (name == "C2") return &table.c2;
  if (name == "C3") return &table.c3;
  if (name == "eps0") return &table.eps0;
  if (name == "eps1") return &table.eps1;
  if (name == "eps2") return &table.eps2;
  if (name == "eps3") return &table.eps3;
  if (name == "eps4") return &table.eps4;
  if (name == "eps5") return &table.eps5;
  return nullptr;
}

Rat* entry(ConstantsTable& table, const std::string& name) {
  return const_cast<Rat*>(entry(static_cast<const ConstantsTable&>(table), name));
}

}  // namespace

ConstantsTable default_constants() {
  ConstantsTable t;
  t.c0 = Rat(pow10(46));
  t.c1 = Rat(110);
  t.c2 = Rat(pow10(16));
  t.c3 = Rat(28);
  t.eps0 = Rat(BigInt(1), pow10(9));
  t.eps1 = Rat(BigInt(1), pow10(18));
  t.eps2 = Rat(BigInt(1), pow10(6));
  t.eps3 = Rat(1, 100);
  t.eps4 = Rat(1, 10);
  t.eps5 = Rat(1, 4);
  return t;
}

const std::vector<std::string>& constant_names() {
  static const std::vector<std::string> names = {"C0",   "C1",   "C2",   "C3",   "eps0",
                                                 "eps1", "eps2", "eps3", "eps4", "eps5"};
  return names;
}

Rat get_constant(const ConstantsTable& table, const std::string& name) {
  if (const Rat* slot = entry(table, name)) return *slot;
  throw UsageError("get_constant: unknown constant \"" + name + "\"");
}

void set_constant(ConstantsTable& table, const std::string& name, const Rat& value) {
  Rat* slot = entry(table, name);
  if (slot == nullptr) throw UsageError("set_constant: unknown constant \"" + name + "\"");
  if (value <= 0) {
    throw UsageError("set_constant: " + name + " must be > 0, got " + to_fraction_string(value));
  }
  *slot = value;
}

std::vector<std::pair<std::string, std::string>> constant_overrides(const ConstantsTable& table) {
  const ConstantsTable defaults = default_constants();
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& name : constant_names()) {
    const Rat current = get_constant(table, name);
    if (current != get_constant(defaults, name)) {
      out.emplace_back(name, to_fraction_string(current));
    }
  }
  return out;
}

}  // namespace edgesum
