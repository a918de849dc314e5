#ifndef KCPART_INJECTIONS_HPP
#define KCPART_INJECTIONS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "kcpart/colored.hpp"

namespace kcpart {

// The split of a canonical partition of c+d at tail weight d: index is the
// largest 1-based i with lambda_i + ... + lambda_t >= d, and lambda_i = x+y
// where x = d - (lambda_{i+1} + ... + lambda_t) >= 1 tops the tail up to
// exactly d and y = lambda_i - x >= 0 is the remainder.
struct SplitData {
  std::size_t index = 0;  // 1-based
  long x = 0;
  long y = 0;

  friend bool operator==(const SplitData&, const SplitData&) = default;
};

// The tail-unit map comes in two readings of its size->size-1 case: one
// resets the color of the shrunk part to 1, the other keeps it.
enum class MapVariant { AsWritten, ColorPreserving };

const char* to_string(MapVariant v);
MapVariant parse_variant(const std::string& text);

// Computes the split of lambda (a partition of c+d) at tail weight d:
// the largest 1-based i with lambda_i + ... + lambda_t >= d, plus the
// decomposition lambda_i = x + y where x = d - (lambda_{i+1}+...+lambda_t).
// Throws std::invalid_argument unless lambda is canonical of weight c+d
// with c >= d >= 1.
SplitData split_point(const ColoredPartition& lambda, long c, long d);

// The split-based map on k-colored partitions of c+d with no 1_1 and no
// 1_2 parts.  Produces (mu, nu) with weight(mu) = c, weight(nu) = d;
// intended codomain: mu avoiding 1_1, nu avoiding 1_2.  Requires
// c >= d >= 1 and c >= 2.
std::pair<ColoredPartition, ColoredPartition> apply_f(
    int k, long c, long d, const ColoredPartition& lambda);

// The last-part map on k-colored partitions of a+1 with no 1_1 part.
// Produces (mu, nu) with weight(mu) = a, weight(nu) = 1; intended codomain:
// mu avoiding 1_1, nu a single unit.  Requires a >= 2.
std::pair<ColoredPartition, ColoredPartition> apply_g(
    int k, long a, const ColoredPartition& lambda, MapVariant variant);

struct AuditLimits {
  long max_weight = 14;          // largest domain weight enumerated
  int max_k = 4;                 // largest color count
  std::size_t unhit_sample = 16; // codomain pairs listed before truncation
};

struct CollisionRecord {
  ColoredPartition first;   // earlier domain element (enumeration order)
  ColoredPartition second;  // later domain element with the same image
  ColoredPartition out_mu;
  ColoredPartition out_nu;
};

struct ViolationRecord {
  ColoredPartition input;
  ColoredPartition out_mu;
  ColoredPartition out_nu;
  std::string reason;
};

struct PairRecord {
  ColoredPartition mu;
  ColoredPartition nu;
};

// Everything an exhaustive audit of one map instance establishes.  Domain
// and codomain are fully enumerated; the verdicts are exact, not sampled.
// Collisions are ordered by (first, second) domain enumeration positions,
// unhit examples by (mu, nu) enumeration position.
struct AuditReport {
  std::string map;  // "f" or "g"
  int k = 0;
  long c = 0;                        // f only
  long d = 0;                        // f only
  long a = 0;                        // g only
  std::optional<MapVariant> variant; // g only
  Natural domain_size{0};
  Natural codomain_size{0};
  std::vector<ViolationRecord> codomain_violations;
  std::vector<CollisionRecord> collisions;
  std::vector<PairRecord> unhit_examples;
  std::size_t unhit_total = 0;
  bool injective = false;
  bool surjective = false;
};

// Exhaustively audits f at (k, c, d) or g at (k, a).  Throws ScaleError if
// the instance exceeds the limits, std::invalid_argument on bad parameters.
AuditReport audit_f(int k, long c, long d, const AuditLimits& limits = {});
AuditReport audit_g(int k, long a, MapVariant variant,
                    const AuditLimits& limits = {});

nlohmann::ordered_json to_json(const AuditReport& report);
std::string to_text(const AuditReport& report);
std::string to_csv(const AuditReport& report);

}  // namespace kcpart

#endif
