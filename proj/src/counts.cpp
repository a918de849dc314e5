#include "kcpart/counts.hpp"

#include <algorithm>
#include <cassert>
#include <iterator>
#include <string>
#include <utility>

namespace kcpart {

namespace {

std::vector<int> normalized_colors(std::vector<int> colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  if (!colors.empty() && colors.front() < 1)
    throw std::invalid_argument("constraint profile: colors are 1-based");
  return colors;
}

}  // namespace

ConstraintProfile::ConstraintProfile(std::vector<int> forbidden,
                                     std::vector<int> required)
    : forbidden_(normalized_colors(std::move(forbidden))),
      required_(normalized_colors(std::move(required))) {
  std::vector<int> both;
  std::set_intersection(forbidden_.begin(), forbidden_.end(),
                        required_.begin(), required_.end(),
                        std::back_inserter(both));
  if (!both.empty())
    throw std::invalid_argument(
        "constraint profile: color " + std::to_string(both.front()) +
        " cannot be both forbidden and required");
}

ConstraintProfile ConstraintProfile::forbid(std::vector<int> colors) {
  return ConstraintProfile(std::move(colors), {});
}

ConstraintProfile ConstraintProfile::require(std::vector<int> colors) {
  return ConstraintProfile({}, std::move(colors));
}

void ConstraintProfile::validate_for(int k) const {
  if (!forbidden_.empty() && forbidden_.back() > k)
    throw std::invalid_argument("constraint profile: forbidden color " +
                                std::to_string(forbidden_.back()) +
                                " exceeds k = " + std::to_string(k));
  if (!required_.empty() && required_.back() > k)
    throw std::invalid_argument("constraint profile: required color " +
                                std::to_string(required_.back()) +
                                " exceeds k = " + std::to_string(k));
}

const Natural& CountTable::at(long n) const {
  if (n < 0 || n > limit())
    throw std::out_of_range("count table index " + std::to_string(n) +
                            " outside [0, " + std::to_string(limit()) + "]");
  return values_[static_cast<std::size_t>(n)];
}

const Natural& CountTable::at_or_zero(long n) const {
  static const Natural zero{0};
  if (n < 0) return zero;
  return at(n);
}

CountStore::CountStore(long max_n) : max_n_(max_n) {
  if (max_n < 0)
    throw std::invalid_argument("CountStore: max_n must be >= 0");
}

TablePtr CountStore::table(int k, long limit) {
  return table(k, ConstraintProfile{}, limit);
}

TablePtr CountStore::table(int k, const ConstraintProfile& profile,
                           long limit) {
  if (k < 1) throw std::invalid_argument("table: need k >= 1");
  if (limit < 0) throw std::invalid_argument("table: need limit >= 0");
  profile.validate_for(k);
  std::lock_guard<std::mutex> lock(mu_);
  return ensure_locked(k, profile, limit);
}

TablePtr CountStore::ensure_locked(int k, const ConstraintProfile& profile,
                                   long limit) {
  if (limit > max_n_)
    throw CapacityError("count table for k = " + std::to_string(k) +
                        " would need n = " + std::to_string(limit) +
                        " beyond the capacity limit " +
                        std::to_string(max_n_));
  Key key{k, profile};
  auto it = tables_.find(key);
  std::vector<Natural> old_values;
  if (it != tables_.end()) {
    if (it->second->limit() >= limit) return it->second;
    old_values = it->second->values();
  }
  // Grow geometrically so repeated small extensions stay linear overall.
  long have = static_cast<long>(old_values.size()) - 1;
  long target = limit;
  if (have >= 1) target = std::max(limit, std::min(max_n_, 2 * have));
  auto values =
      build_values_locked(k, profile, std::move(old_values), target);
  auto built = TablePtr(new CountTable(k, profile, std::move(values)));
  tables_[key] = built;
  return built;
}

std::vector<Natural> CountStore::build_values_locked(
    int k, const ConstraintProfile& profile, std::vector<Natural> values,
    long limit) {
  values.reserve(static_cast<std::size_t>(limit) + 1);
  long from = static_cast<long>(values.size());
  if (profile.empty()) {
    if (k == 1) {
      if (from == 0) {
        values.emplace_back(1);
        from = 1;
      }
      /* Euler:  p(n) = sum_{j>=1} (-1)^{j+1}
       *                [ p(n - j(3j-1)/2) + p(n - j(3j+1)/2) ]          */
      for (long n = from; n <= limit; ++n) {
        Natural acc{0};
        for (long j = 1;; ++j) {
          long g1 = j * (3 * j - 1) / 2;
          if (g1 > n) break;
          long g2 = j * (3 * j + 1) / 2;
          if (j % 2 == 1) {
            acc += values[n - g1];
            if (g2 <= n) acc += values[n - g2];
          } else {
            acc -= values[n - g1];
            if (g2 <= n) acc -= values[n - g2];
          }
        }
        values.push_back(std::move(acc));
      }
    } else {
      TablePtr dep = ensure_locked(k - 1, ConstraintProfile{}, limit);
      TablePtr base = ensure_locked(1, ConstraintProfile{}, limit);
      const auto& dv = dep->values();
      const auto& bv = base->values();
      for (long n = from; n <= limit; ++n) {
        Natural acc{0};
        for (long j = 0; j <= n; ++j) acc += dv[j] * bv[n - j];
        values.push_back(std::move(acc));
      }
    }
  } else if (profile.only_forbids()) {
    // Forbidding the unit parts of f colors multiplies the generating
    // function by (1-q)^f, so
    //   count(n) = sum_j (-1)^j C(f, j) count_k(n - j).
    TablePtr base = ensure_locked(k, ConstraintProfile{}, limit);
    const auto& bv = base->values();
    long f = static_cast<long>(profile.forbidden_units().size());
    Natural binom;
    for (long n = from; n <= limit; ++n) {
      Natural acc{0};
      for (long j = 0; j <= std::min(f, n); ++j) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(f),
                     static_cast<unsigned long>(j));
        if (j % 2 == 0)
          acc += binom * bv[n - j];
        else
          acc -= binom * bv[n - j];
      }
      values.push_back(std::move(acc));
    }
  } else {
    // Peel one required color c:
    //   count(F, R) = count(F, R \ {c}) - count(F + {c}, R \ {c}).
    std::vector<int> rest = profile.required_units();
    int c = rest.back();
    rest.pop_back();
    ConstraintProfile without(profile.forbidden_units(), rest);
    std::vector<int> forbidden = profile.forbidden_units();
    forbidden.push_back(c);
    ConstraintProfile with_forbid(std::move(forbidden), std::move(rest));
    TablePtr t_without = ensure_locked(k, without, limit);
    TablePtr t_forbid = ensure_locked(k, with_forbid, limit);
    for (long n = from; n <= limit; ++n)
      values.push_back(t_without->values()[n] - t_forbid->values()[n]);
  }
  assert(static_cast<long>(values.size()) == limit + 1);
  assert(!profile.only_forbids() || values[0] == 1);
  return values;
}

Natural CountStore::partition_count(long n) { return colored_count(1, n); }

Natural CountStore::colored_count(int k, long n) {
  if (n < 0) throw std::invalid_argument("colored_count: need n >= 0");
  return table(k, n)->at(n);
}

Natural CountStore::constrained_count(int k, long n,
                                      const ConstraintProfile& profile) {
  if (n < 0) throw std::invalid_argument("constrained_count: need n >= 0");
  return table(k, profile, n)->at(n);
}

bool CountStore::verify_convolution_identity(int k, int split, long n_max) {
  if (k < 2)
    throw std::invalid_argument("verify_convolution_identity: need k >= 2");
  if (split < 1 || split >= k)
    throw std::invalid_argument(
        "verify_convolution_identity: need 1 <= split < k");
  if (n_max < 0)
    throw std::invalid_argument("verify_convolution_identity: need n_max >= 0");
  TablePtr left = table(split, n_max);
  TablePtr right = table(k - split, n_max);
  TablePtr full = table(k, n_max);
  for (long n = 0; n <= n_max; ++n) {
    Natural acc{0};
    for (long j = 0; j <= n; ++j)
      acc += left->values()[j] * right->values()[n - j];
    if (acc != full->values()[n]) return false;
  }
  return true;
}

TablePtr CountStore::adopt(int k, const ConstraintProfile& profile,
                           std::vector<Natural> values) {
  if (k < 1) throw std::invalid_argument("adopt: need k >= 1");
  profile.validate_for(k);
  if (values.empty()) throw CacheError("adopt: table has no entries");
  long limit = static_cast<long>(values.size()) - 1;
  if (limit > max_n_)
    throw CapacityError("adopt: table extends to n = " + std::to_string(limit) +
                        " beyond the capacity limit " + std::to_string(max_n_));
  for (const Natural& v : values)
    if (v < 0) throw CacheError("adopt: negative count");
  std::lock_guard<std::mutex> lock(mu_);
  long check = std::min<long>(limit, 2);
  TablePtr fresh = ensure_locked(k, profile, check);
  for (long n = 0; n <= check; ++n)
    if (fresh->values()[n] != values[n])
      throw CacheError("adopt: entry " + std::to_string(n) + " is " +
                       values[n].get_str() + " but recomputation gives " +
                       fresh->values()[n].get_str());
  Key key{k, profile};
  auto it = tables_.find(key);
  if (it != tables_.end()) {
    const auto& have = it->second->values();
    std::size_t common = std::min(have.size(), values.size());
    for (std::size_t i = 0; i < common; ++i)
      if (have[i] != values[i])
        throw CacheError("adopt: entry " + std::to_string(i) +
                         " conflicts with an already computed table");
    if (have.size() >= values.size()) return it->second;
  }
  auto built = TablePtr(new CountTable(k, profile, std::move(values)));
  tables_[key] = built;
  return built;
}

}  // namespace kcpart
