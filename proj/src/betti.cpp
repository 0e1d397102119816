#include "koszul/betti.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace koszul {

BettiTable BettiTable::from_resolution(const Resolution& res, std::string ring_name, std::string module_name) {
  if (!res.minimal) throw std::invalid_argument("Betti numbers need a minimal resolution");
  BettiTable t;
  t.ring = ring_name.empty() ? res.ring->describe() : std::move(ring_name);
  t.module = module_name.empty() ? module_kind_name(res.module) : std::move(module_name);
  t.complete = res.complete;
  t.hmax = res.complete ? std::max(res.length(), 0) : res.hmax;
  for (int i = 0; i <= static_cast<int>(res.differentials.size()); ++i)
    for (int j : res.free_module(i).twists) ++t.entries[{i, j}];
  return t;
}

std::size_t BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

std::size_t BettiTable::total(int i) const {
  std::size_t n = 0;
  for (const auto& [key, v] : entries)
    if (key.first == i) n += v;
  return n;
}

int BettiTable::last_column() const {
  int last = -1;
  for (const auto& [key, v] : entries) last = std::max(last, key.first);
  return last;
}

std::string BettiTable::to_text() const {
  std::ostringstream os;
  if (entries.empty()) return "zero module\n";
  int cols = std::max(last_column(), 0);
  int lo = INT32_MAX, hi = INT32_MIN;
  for (const auto& [key, v] : entries) {
    lo = std::min(lo, key.second - key.first);
    hi = std::max(hi, key.second - key.first);
  }
  std::size_t width = 1;
  for (const auto& [key, v] : entries) width = std::max(width, std::to_string(v).size());
  width += 1;
  os << std::setw(6) << "";
  for (int i = 0; i <= cols; ++i) os << std::setw(static_cast<int>(width)) << i;
  os << "\n" << std::setw(6) << "total:";
  for (int i = 0; i <= cols; ++i) os << std::setw(static_cast<int>(width)) << total(i);
  os << "\n";
  for (int r = lo; r <= hi; ++r) {
    os << std::setw(5) << r << ":";
    for (int i = 0; i <= cols; ++i) {
      std::size_t v = at(i, i + r);
      os << std::setw(static_cast<int>(width)) << (v ? std::to_string(v) : "-");
    }
    os << "\n";
  }
  if (!complete) os << "(computed through homological degree " << hmax << ")\n";
  return os.str();
}

}  // namespace koszul
