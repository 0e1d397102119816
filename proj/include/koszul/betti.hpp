#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "koszul/resolution.hpp"

namespace koszul {

/// Graded Betti numbers β_{i,j} read from a minimal resolution, with the
/// homological cutoff it was computed to.
struct BettiTable {
  std::string ring;
  std::string module;
  std::map<std::pair<int, int>, std::size_t> entries;
  int hmax = 0;
  /// Entries vanish beyond the last recorded column.
  bool complete = false;

  static BettiTable from_resolution(const Resolution& res, std::string ring_name = "", std::string module_name = "");

  std::size_t at(int i, int j) const;
  std::size_t total(int i) const;
  /// Largest i with a nonzero entry, -1 for the zero module.
  int last_column() const;

  /// Conventional layout: column i, row j - i.
  std::string to_text() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries == b.entries; }
};

}  // namespace koszul
