#ifndef KCPART_COLORED_HPP
#define KCPART_COLORED_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "kcpart/counts.hpp"

namespace kcpart {

// One part of a colored partition: a size with a 1-based color.
struct ColoredPart {
  int size = 0;
  int color = 0;

  friend auto operator<=>(const ColoredPart&, const ColoredPart&) = default;
};

// A colored partition in canonical form: parts weakly decreasing under the
// (size, color) lexicographic order, weight equal to the sum of sizes.  The
// empty partition (of weight 0) is valid.  Ordering between partitions is
// lexicographic on the part lists.
struct ColoredPartition {
  std::vector<ColoredPart> parts;
  long weight = 0;

  bool empty() const { return parts.empty(); }
  std::size_t count() const { return parts.size(); }

  friend auto operator<=>(const ColoredPartition& a,
                          const ColoredPartition& b) {
    return a.parts <=> b.parts;
  }
  friend bool operator==(const ColoredPartition& a,
                         const ColoredPartition& b) {
    return a.parts == b.parts;
  }
};

// Sorts parts into canonical order and computes the weight.  Throws
// std::invalid_argument on a part with size < 1 or color outside [1, k].
ColoredPartition canonicalize(std::vector<ColoredPart> parts, int k);

bool is_canonical(const ColoredPartition& p);

// Whether the partition respects a unit-part profile: no forbidden 1_c, and
// at least one 1_c for every required color c.
bool satisfies(const ColoredPartition& p, const ConstraintProfile& profile);

// "4_2+2_3+2_3+2_1+1_2+1_1"; the empty partition renders as "".
std::string to_text(const ColoredPartition& p);

// Parses the textual form, accepting parts in any order, and canonicalizes.
// Throws std::invalid_argument on malformed input or parts invalid for k.
ColoredPartition parse_partition(const std::string& text, int k);

namespace detail {

struct EnumFrame {
  int k;
  const ConstraintProfile* profile;
  std::vector<char> forbidden;   // indexed by color
  std::vector<char> required;
  std::vector<int> color_count;  // multiplicity of 1_c currently placed
  int missing_required = 0;
  ColoredPartition current;
};

template <typename Visitor>
bool enum_rec(EnumFrame& f, long remaining, int bound_size, int bound_color,
              Visitor& visit) {
  if (remaining == 0) {
    if (f.missing_required != 0) return true;
    if constexpr (std::is_void_v<decltype(visit(f.current))>) {
      visit(f.current);
      return true;
    } else {
      return static_cast<bool>(visit(f.current));
    }
  }
  // Each still-missing required color needs a unit of its own.
  if (remaining < f.missing_required) return true;
  int s0 = bound_size < remaining ? bound_size : static_cast<int>(remaining);
  for (int s = s0; s >= 1; --s) {
    int c0 = (s == bound_size) ? bound_color : f.k;
    for (int c = c0; c >= 1; --c) {
      if (s == 1 && f.forbidden[c]) continue;
      if (s == 1) {
        if (++f.color_count[c] == 1 && f.required[c]) --f.missing_required;
      }
      f.current.parts.push_back({s, c});
      f.current.weight += s;
      bool keep = enum_rec(f, remaining - s, s, c, visit);
      f.current.parts.pop_back();
      f.current.weight -= s;
      if (s == 1) {
        if (--f.color_count[c] == 0 && f.required[c]) ++f.missing_required;
      }
      if (!keep) return false;
    }
  }
  return true;
}

}  // namespace detail

// Visits every k-colored partition of n satisfying the profile, in strictly
// descending lexicographic order of canonical part lists.  The visitor gets
// a reference valid only during the call (copy to keep); return false to
// stop early, or return void to always continue.  Returns false iff the
// visitor stopped the walk.
template <typename Visitor>
bool enumerate(int k, long n, const ConstraintProfile& profile,
               Visitor&& visit) {
  if (k < 1) throw std::invalid_argument("enumerate: need k >= 1");
  if (n < 0) throw std::invalid_argument("enumerate: need n >= 0");
  profile.validate_for(k);
  detail::EnumFrame f;
  f.k = k;
  f.profile = &profile;
  f.forbidden.assign(static_cast<std::size_t>(k) + 1, 0);
  f.required.assign(static_cast<std::size_t>(k) + 1, 0);
  f.color_count.assign(static_cast<std::size_t>(k) + 1, 0);
  for (int c : profile.forbidden_units()) f.forbidden[c] = 1;
  for (int c : profile.required_units()) f.required[c] = 1;
  f.missing_required = static_cast<int>(profile.required_units().size());
  f.current.parts.reserve(static_cast<std::size_t>(n));
  return detail::enum_rec(f, n, n > 0 ? static_cast<int>(n) : 1, k, visit);
}

// Counts by exhaustive enumeration.  Deliberately independent of CountStore:
// this is the model the recurrences are checked against.
Natural oracle_count(int k, long n, const ConstraintProfile& profile);

std::vector<ColoredPartition> collect_partitions(int k, long n,
                                                 const ConstraintProfile& profile);

}  // namespace kcpart

#endif
