#include "kcpart/colored.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace kcpart {

ColoredPartition canonicalize(std::vector<ColoredPart> parts, int k) {
  if (k < 1) throw std::invalid_argument("canonicalize: need k >= 1");
  for (const ColoredPart& p : parts) {
    if (p.size < 1)
      throw std::invalid_argument("canonicalize: part size must be >= 1");
    if (p.color < 1 || p.color > k)
      throw std::invalid_argument("canonicalize: color " +
                                  std::to_string(p.color) +
                                  " outside [1, " + std::to_string(k) + "]");
  }
  std::sort(parts.begin(), parts.end(),
            [](const ColoredPart& a, const ColoredPart& b) { return b < a; });
  ColoredPartition out;
  out.weight = std::accumulate(
      parts.begin(), parts.end(), 0L,
      [](long acc, const ColoredPart& p) { return acc + p.size; });
  out.parts = std::move(parts);
  return out;
}

bool is_canonical(const ColoredPartition& p) {
  long weight = 0;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (p.parts[i].size < 1 || p.parts[i].color < 1) return false;
    if (i > 0 && p.parts[i - 1] < p.parts[i]) return false;
    weight += p.parts[i].size;
  }
  return weight == p.weight;
}

bool satisfies(const ColoredPartition& p, const ConstraintProfile& profile) {
  const auto& forbidden = profile.forbidden_units();
  const auto& required = profile.required_units();
  std::vector<int> units;
  for (const ColoredPart& part : p.parts) {
    if (part.size != 1) continue;
    if (std::binary_search(forbidden.begin(), forbidden.end(), part.color))
      return false;
    units.push_back(part.color);
  }
  for (int c : required)
    if (std::find(units.begin(), units.end(), c) == units.end()) return false;
  return true;
}

std::string to_text(const ColoredPartition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i > 0) out += '+';
    out += std::to_string(p.parts[i].size);
    out += '_';
    out += std::to_string(p.parts[i].color);
  }
  return out;
}

ColoredPartition parse_partition(const std::string& text, int k) {
  std::vector<ColoredPart> parts;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_space = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_number = [&](const char* what) -> int {
    std::size_t start = i;
    long value = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1000000)
        throw std::invalid_argument("partition parse: number too large");
      ++i;
    }
    if (i == start)
      throw std::invalid_argument(std::string("partition parse: expected ") +
                                  what + " at offset " +
                                  std::to_string(start));
    return static_cast<int>(value);
  };
  skip_space();
  if (i == n) return ColoredPartition{};
  for (;;) {
    skip_space();
    int size = read_number("part size");
    if (i == n || text[i] != '_')
      throw std::invalid_argument(
          "partition parse: expected '_' after size at offset " +
          std::to_string(i));
    ++i;
    int color = read_number("color");
    parts.push_back({size, color});
    skip_space();
    if (i == n) break;
    if (text[i] != '+')
      throw std::invalid_argument(
          "partition parse: expected '+' between parts at offset " +
          std::to_string(i));
    ++i;
  }
  return canonicalize(std::move(parts), k);
}

Natural oracle_count(int k, long n, const ConstraintProfile& profile) {
  unsigned long count = 0;
  enumerate(k, n, profile, [&](const ColoredPartition&) { ++count; });
  return Natural(count);
}

std::vector<ColoredPartition> collect_partitions(
    int k, long n, const ConstraintProfile& profile) {
  std::vector<ColoredPartition> out;
  enumerate(k, n, profile,
            [&](const ColoredPartition& p) { out.push_back(p); });
  return out;
}

}  // namespace kcpart
