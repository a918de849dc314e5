#ifndef KCPART_COUNTS_HPP
#define KCPART_COUNTS_HPP

#include <gmpxx.h>

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "kcpart/errors.hpp"

namespace kcpart {

// Exact nonnegative integers.  Counts overflow 64 bits early: the two-color
// count of 500 already has 28 digits.
using Natural = mpz_class;

// Restrictions on parts of size 1.  A profile forbids parts 1_c for every
// color c in forbidden_units(), and demands at least one part 1_c for every
// color c in required_units().  The two sets must be disjoint; colors are
// 1-based and must not exceed the color count they are used with.
class ConstraintProfile {
 public:
  ConstraintProfile() = default;
  ConstraintProfile(std::vector<int> forbidden, std::vector<int> required);

  static ConstraintProfile forbid(std::vector<int> colors);
  static ConstraintProfile require(std::vector<int> colors);

  const std::vector<int>& forbidden_units() const { return forbidden_; }
  const std::vector<int>& required_units() const { return required_; }

  bool empty() const { return forbidden_.empty() && required_.empty(); }
  bool only_forbids() const { return required_.empty(); }

  // Throws std::invalid_argument if any color lies outside [1, k].
  void validate_for(int k) const;

  friend auto operator<=>(const ConstraintProfile&,
                          const ConstraintProfile&) = default;

 private:
  std::vector<int> forbidden_;  // sorted, duplicate-free
  std::vector<int> required_;   // sorted, duplicate-free
};

// An immutable prefix of a count sequence: values()[n] is the number of
// k-colored partitions of n satisfying the profile, for 0 <= n <= limit().
// Instances are only built by CountStore and never change once published,
// so holding a TablePtr is safe across concurrent store growth.
class CountTable {
 public:
  int k() const { return k_; }
  const ConstraintProfile& profile() const { return profile_; }
  long limit() const { return static_cast<long>(values_.size()) - 1; }

  // Throws std::out_of_range outside [0, limit()].
  const Natural& at(long n) const;

  // Like at(), but negative n yields zero (the usual convention when
  // recurrences reach below the origin).
  const Natural& at_or_zero(long n) const;

  const std::vector<Natural>& values() const { return values_; }

 private:
  friend class CountStore;
  CountTable(int k, ConstraintProfile profile, std::vector<Natural> values)
      : k_(k), profile_(std::move(profile)), values_(std::move(values)) {}

  int k_;
  ConstraintProfile profile_;
  std::vector<Natural> values_;
};

using TablePtr = std::shared_ptr<const CountTable>;

/* Lazily grown tables of colored partition counts.
 *
 * The one-color table is filled by the pentagonal-number recurrence
 *
 *   p(n) = sum_{j>=1} (-1)^{j+1} [ p(n - j(3j-1)/2) + p(n - j(3j+1)/2) ],
 *
 * the k-color table by convolving the (k-1)-color table with it, and
 * constrained tables by inclusion-exclusion over the forbidden unit colors
 * (a forbidden 1_c is removed by subtracting the shifted full count), with
 * required units reduced to forbidden ones via
 *
 *   #(>=1 of 1_c) = #(no constraint on c) - #(no 1_c).
 *
 * Tables grow geometrically and are published as immutable snapshots; reads
 * through a TablePtr never block, and a single mutex serializes growth.
 */
class CountStore {
 public:
  static constexpr long kDefaultMaxN = 100000;

  explicit CountStore(long max_n = kDefaultMaxN);

  long max_n() const { return max_n_; }

  // Returns a table covering at least [0, limit].  Throws CapacityError if
  // limit exceeds max_n(), std::invalid_argument on bad k or profile.
  TablePtr table(int k, long limit);
  TablePtr table(int k, const ConstraintProfile& profile, long limit);

  // Single-value conveniences over table().
  Natural partition_count(long n);
  Natural colored_count(int k, long n);
  Natural constrained_count(int k, long n, const ConstraintProfile& profile);

  // Checks that the split-color convolution
  //   sum_j count_{split}(j) * count_{k-split}(n-j) == count_k(n)
  // holds for every n in [0, n_max].  Requires 1 <= split < k.
  bool verify_convolution_identity(int k, int split, long n_max);

  // Installs externally supplied values (the cache path).  The leading
  // entries are recomputed and compared before anything is published, and
  // an already-published longer table must agree on the common prefix;
  // disagreement throws CacheError.  Returns the published table, which may
  // be longer than the input.
  TablePtr adopt(int k, const ConstraintProfile& profile,
                 std::vector<Natural> values);

 private:
  struct Key {
    int k;
    ConstraintProfile profile;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  TablePtr ensure_locked(int k, const ConstraintProfile& profile, long limit);
  std::vector<Natural> build_values_locked(int k,
                                           const ConstraintProfile& profile,
                                           std::vector<Natural> old_values,
                                           long limit);

  long max_n_;
  std::mutex mu_;
  std::map<Key, TablePtr> tables_;
};

}  // namespace kcpart

#endif
