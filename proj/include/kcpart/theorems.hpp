#ifndef KCPART_THEOREMS_HPP
#define KCPART_THEOREMS_HPP

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "kcpart/counts.hpp"

namespace kcpart {

enum class Relation { StrictGreater, Equal, StrictLess };

const char* to_string(Relation r);

// An exact three-way comparison together with both sides, so a report can
// show the margin and a reader can re-derive the verdict.
struct ComparisonOutcome {
  Relation relation = Relation::Equal;
  Natural lhs{0};
  Natural rhs{0};
};

ComparisonOutcome compare_exact(Natural lhs, Natural rhs);

// count_k(a) * count_k(b) versus count_k(a + b).
ComparisonOutcome classify_product(CountStore& store, int k, long a, long b);

// Named parameters of one scanned cell, in a fixed rendering order.
using ScanParams = std::vector<std::pair<std::string, long>>;

struct ScanCell {
  ScanParams params;
  ComparisonOutcome outcome;
};

// Result of sweeping one inequality family over a parameter box.  The
// exception list contains exactly the cells violating the claimed relation,
// in scan order; `appendix` holds cells outside the claim's range that the
// scan classifies anyway (only the additivity scan uses it).  The stated
// reference list is the published set of exceptions restricted to the
// scanned box, attached for comparison only: a mismatch goes into
// `discrepancies`, it never alters `exceptions`.
struct ScanReport {
  std::string id;
  std::string ranges;
  unsigned long long total_checked = 0;
  std::vector<ScanCell> exceptions;
  std::vector<ScanCell> appendix;
  std::vector<ScanParams> stated_exceptions;
  std::vector<std::string> discrepancies;
};

// Per-cell classifiers used by the scans below (and handy in tests).
// lhs and rhs are as in the corresponding scan; the additivity cell is
// classify_product itself (k = 1 gives the one-color case).
ComparisonOutcome classify_unit_split(CountStore& store, int k, long c,
                                      long d);
ComparisonOutcome classify_unit_last(CountStore& store, int k, long a);
ComparisonOutcome classify_unit_pair(CountStore& store, int k, long a, long b);
ComparisonOutcome classify_ratio_step(CountStore& store, int k, long n,
                                      long m);
ComparisonOutcome classify_log_concavity(CountStore& store, long n, long m);

// count_k(a)*count_k(b) > count_k(a+b) over a >= b >= 1, a+b <= sum_max,
// 2 <= k <= k_max; every Equal or StrictLess cell is an exception.
ScanReport scan_theorem2(CountStore& store, int k_max, long sum_max,
                         unsigned jobs = 1);

// The classical one-color additivity claim p(a)p(b) > p(a+b) on
// a >= b > 1, 9 < a+b <= sum_max; cells with a >= b > 1 and a+b <= 9 are
// classified into the appendix.
ScanReport scan_bessenrodt_ono(CountStore& store, long sum_max,
                               unsigned jobs = 1);

// count_k(c | no 1_1) * count_k(d | no 1_2) >= count_k(c+d | no 1_1, 1_2)
// over c >= d >= 1, c + d <= sum_max, 2 <= k <= k_max; exceptions are the
// StrictLess cells.
ScanReport scan_lemma_key(CountStore& store, int k_max, long sum_max,
                          unsigned jobs = 1);

// count_k(a | no 1_1) * count_k(1) > count_k(a+1 | no 1_1) over
// 1 <= a <= a_max, 2 <= k <= k_max; exceptions are non-StrictGreater cells.
ScanReport scan_lemma_g(CountStore& store, int k_max, long a_max,
                        unsigned jobs = 1);

// count_k(a | no 1_1) * count_k(b) > count_k(a+b | no 1_1) over
// a >= b >= 1, a + b <= sum_max, 2 <= k <= k_max; exceptions are
// non-StrictGreater cells.
ScanReport scan_lemma_ab(CountStore& store, int k_max, long sum_max,
                         unsigned jobs = 1);

// count_k(2 | no 1_1) * count_k(2) - count_k(4 | no 1_1) == 5*C(k+2, 4)
// for every k in [k_min, k_max].
bool verify_base_identity(CountStore& store, int k_min, int k_max);

// count_k(n-1)*count_k(m+1) >= count_k(n)*count_k(m) over
// 1 <= m < n <= n_max, 2 <= k <= k_max (the ratio count_k(n)/count_k(n-1)
// never increases, conjecturally); exceptions are the StrictLess cells.
ScanReport scan_conjecture(CountStore& store, int k_max, long n_max,
                           unsigned jobs = 1);

// One-color log-concavity.  Weak form: p(n)^2 >= p(n-1)p(n+1) over
// 25 < n <= n_max, exceptions StrictLess.  Strong form: p(n)^2 >
// p(n-m)p(n+m) over n > m > 1, n + m <= n_max, exceptions non-StrictGreater.
// m_max additionally caps m when positive.
ScanReport scan_log_concavity_p(CountStore& store, long n_max, bool strong,
                                long m_max = 0, unsigned jobs = 1);

// The published exception lists the reports annotate themselves with,
// unrestricted by any range.  Recognized ids: "theorem2", "bo",
// "lemma-key", "lemma-g", "lemma-ab", "conjecture", "logconcave".
std::vector<ScanParams> reference_exceptions(const std::string& scan_id);

enum class MaxMode { BruteForce, ClosedForm };

// The largest product of count_k over the parts of a partition of n,
// with every maximizing size-multiset (colors do not matter: the count
// attached to a part depends only on its size).  Maximizers are listed in
// descending lexicographic order of their sorted-descending size lists.
struct MaxResult {
  int k = 0;
  long n = 0;
  MaxMode mode = MaxMode::BruteForce;
  Natural value{0};
  std::vector<std::vector<long>> maximizers;
};

// BruteForce enumerates all size-multisets of n; ClosedForm evaluates the
// proven formulas (k = 2: 5^{n/2} resp. 2*5^{(n-1)/2}; k = 3: 3^n; k >= 4:
// k^n) together with their maximizer families.  Requires n >= 1, k >= 2.
MaxResult max_product(CountStore& store, int k, long n, MaxMode mode);

nlohmann::ordered_json to_json(const ScanReport& report);
std::string to_text(const ScanReport& report);
std::string to_csv(const ScanReport& report);

nlohmann::ordered_json to_json(const MaxResult& result);
std::string to_text(const MaxResult& result);
std::string to_csv(const MaxResult& result);

}  // namespace kcpart

#endif
