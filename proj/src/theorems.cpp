#include "kcpart/theorems.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

#include "kcpart/parallel.hpp"

namespace kcpart {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::StrictGreater:
      return "StrictGreater";
    case Relation::Equal:
      return "Equal";
    case Relation::StrictLess:
      return "StrictLess";
  }
  return "?";
}

ComparisonOutcome compare_exact(Natural lhs, Natural rhs) {
  ComparisonOutcome out;
  int c = cmp(lhs, rhs);
  out.relation = c > 0   ? Relation::StrictGreater
                 : c < 0 ? Relation::StrictLess
                         : Relation::Equal;
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  return out;
}

ComparisonOutcome classify_product(CountStore& store, int k, long a, long b) {
  if (k < 1 || a < 1 || b < 1)
    throw std::invalid_argument("classify_product: need k, a, b >= 1");
  TablePtr t = store.table(k, a + b);
  return compare_exact(t->at(a) * t->at(b), t->at(a + b));
}

ComparisonOutcome classify_unit_split(CountStore& store, int k, long c,
                                      long d) {
  if (k < 2 || c < 1 || d < 1)
    throw std::invalid_argument("classify_unit_split: need k >= 2, c, d >= 1");
  Natural lhs =
      store.constrained_count(k, c, ConstraintProfile::forbid({1})) *
      store.constrained_count(k, d, ConstraintProfile::forbid({2}));
  Natural rhs =
      store.constrained_count(k, c + d, ConstraintProfile::forbid({1, 2}));
  return compare_exact(std::move(lhs), std::move(rhs));
}

ComparisonOutcome classify_unit_last(CountStore& store, int k, long a) {
  if (k < 1 || a < 1)
    throw std::invalid_argument("classify_unit_last: need k >= 1, a >= 1");
  auto no_unit1 = ConstraintProfile::forbid({1});
  Natural lhs =
      store.constrained_count(k, a, no_unit1) * store.colored_count(k, 1);
  Natural rhs = store.constrained_count(k, a + 1, no_unit1);
  return compare_exact(std::move(lhs), std::move(rhs));
}

ComparisonOutcome classify_unit_pair(CountStore& store, int k, long a,
                                     long b) {
  if (k < 1 || a < 1 || b < 1)
    throw std::invalid_argument("classify_unit_pair: need k, a, b >= 1");
  auto no_unit1 = ConstraintProfile::forbid({1});
  Natural lhs =
      store.constrained_count(k, a, no_unit1) * store.colored_count(k, b);
  Natural rhs = store.constrained_count(k, a + b, no_unit1);
  return compare_exact(std::move(lhs), std::move(rhs));
}

ComparisonOutcome classify_ratio_step(CountStore& store, int k, long n,
                                      long m) {
  if (k < 1 || m < 1 || n <= m)
    throw std::invalid_argument("classify_ratio_step: need k >= 1, n > m >= 1");
  TablePtr t = store.table(k, n);
  return compare_exact(t->at(n - 1) * t->at(m + 1), t->at(n) * t->at(m));
}

ComparisonOutcome classify_log_concavity(CountStore& store, long n, long m) {
  if (m < 1 || n <= m)
    throw std::invalid_argument("classify_log_concavity: need n > m >= 1");
  TablePtr t = store.table(1, n + m);
  return compare_exact(t->at(n) * t->at(n), t->at(n - m) * t->at(n + m));
}

namespace {

long param(const ScanParams& ps, const char* name) {
  for (const auto& [n, v] : ps)
    if (n == name) return v;
  throw std::logic_error(std::string("scan parameter '") + name +
                         "' missing");
}

std::string params_key(const ScanParams& ps) {
  std::string s;
  for (const auto& [n, v] : ps) {
    if (!s.empty()) s += ' ';
    s += n;
    s += '=';
    s += std::to_string(v);
  }
  return s;
}

using Classifier = std::function<ComparisonOutcome(const ScanParams&)>;

void classify_cells(std::vector<ScanCell>& cells, unsigned jobs,
                    const Classifier& classify) {
  for_each_index(cells.size(), jobs, [&](std::size_t i) {
    cells[i].outcome = classify(cells[i].params);
  });
}

// Filters exceptions, attaches the published list restricted to the scanned
// box, diffs the two, and re-verifies every exception with fresh lookups.
void finish_report(ScanReport& rep, const std::vector<ScanCell>& cells,
                   const std::function<bool(const ComparisonOutcome&)>& bad,
                   const std::function<bool(const ScanParams&)>& in_range,
                   const Classifier& classify) {
  rep.total_checked = cells.size();
  for (const auto& cell : cells)
    if (bad(cell.outcome)) rep.exceptions.push_back(cell);
  for (const auto& stated : reference_exceptions(rep.id))
    if (in_range(stated)) rep.stated_exceptions.push_back(stated);

  std::set<std::string> found_keys, stated_keys;
  for (const auto& e : rep.exceptions) found_keys.insert(params_key(e.params));
  for (const auto& s : rep.stated_exceptions)
    stated_keys.insert(params_key(s));
  for (const auto& e : rep.exceptions)
    if (!stated_keys.count(params_key(e.params)))
      rep.discrepancies.push_back(
          "found but not stated: " + params_key(e.params) + " (" +
          to_string(e.outcome.relation) + " " + e.outcome.lhs.get_str() +
          " vs " + e.outcome.rhs.get_str() + ")");
  for (const auto& s : rep.stated_exceptions)
    if (!found_keys.count(params_key(s)))
      rep.discrepancies.push_back("stated but not found: " + params_key(s));

  for (const auto& e : rep.exceptions) {
    ComparisonOutcome again = classify(e.params);
    if (again.relation != e.outcome.relation || again.lhs != e.outcome.lhs ||
        again.rhs != e.outcome.rhs)
      throw std::logic_error("scan " + rep.id +
                             ": exception failed re-verification at " +
                             params_key(e.params));
  }
}

bool non_strict(const ComparisonOutcome& o) {
  return o.relation != Relation::StrictGreater;
}

bool strict_less(const ComparisonOutcome& o) {
  return o.relation == Relation::StrictLess;
}

}  // namespace

ScanReport scan_theorem2(CountStore& store, int k_max, long sum_max,
                         unsigned jobs) {
  if (k_max < 2) throw std::invalid_argument("scan_theorem2: need k_max >= 2");
  if (sum_max < 2)
    throw std::invalid_argument("scan_theorem2: need sum_max >= 2");
  for (int k = 2; k <= k_max; ++k) store.table(k, sum_max);
  std::vector<ScanCell> cells;
  for (int k = 2; k <= k_max; ++k)
    for (long a = 1; a < sum_max; ++a)
      for (long b = 1; b <= a && a + b <= sum_max; ++b)
        cells.push_back({{{"a", a}, {"b", b}, {"k", k}}, {}});
  Classifier classify = [&store](const ScanParams& ps) {
    return classify_product(store, static_cast<int>(param(ps, "k")),
                            param(ps, "a"), param(ps, "b"));
  };
  classify_cells(cells, jobs, classify);
  ScanReport rep;
  rep.id = "theorem2";
  rep.ranges = "2 <= k <= " + std::to_string(k_max) +
               ", a >= b >= 1, a + b <= " + std::to_string(sum_max);
  finish_report(
      rep, cells, non_strict,
      [&](const ScanParams& s) {
        return param(s, "k") <= k_max &&
               param(s, "a") + param(s, "b") <= sum_max;
      },
      classify);
  return rep;
}

ScanReport scan_bessenrodt_ono(CountStore& store, long sum_max,
                               unsigned jobs) {
  if (sum_max <= 9)
    throw std::invalid_argument("scan_bessenrodt_ono: need sum_max > 9");
  store.table(1, sum_max);
  std::vector<ScanCell> region, appendix;
  for (long a = 2; a + 2 <= sum_max; ++a)
    for (long b = 2; b <= a && a + b <= sum_max; ++b)
      (a + b > 9 ? region : appendix)
          .push_back({{{"a", a}, {"b", b}}, {}});
  Classifier classify = [&store](const ScanParams& ps) {
    return classify_product(store, 1, param(ps, "a"), param(ps, "b"));
  };
  classify_cells(region, jobs, classify);
  classify_cells(appendix, jobs, classify);
  ScanReport rep;
  rep.id = "bo";
  rep.ranges = "a >= b > 1, 9 < a + b <= " + std::to_string(sum_max) +
               "; appendix a + b <= 9";
  finish_report(rep, region, non_strict,
                [](const ScanParams&) { return true; }, classify);
  rep.appendix = std::move(appendix);
  return rep;
}

ScanReport scan_lemma_key(CountStore& store, int k_max, long sum_max,
                          unsigned jobs) {
  if (k_max < 2) throw std::invalid_argument("scan_lemma_key: need k_max >= 2");
  if (sum_max < 2)
    throw std::invalid_argument("scan_lemma_key: need sum_max >= 2");
  for (int k = 2; k <= k_max; ++k) {
    store.table(k, ConstraintProfile::forbid({1}), sum_max - 1);
    store.table(k, ConstraintProfile::forbid({2}), sum_max - 1);
    store.table(k, ConstraintProfile::forbid({1, 2}), sum_max);
  }
  std::vector<ScanCell> cells;
  for (int k = 2; k <= k_max; ++k)
    for (long c = 1; c < sum_max; ++c)
      for (long d = 1; d <= c && c + d <= sum_max; ++d)
        cells.push_back({{{"c", c}, {"d", d}, {"k", k}}, {}});
  Classifier classify = [&store](const ScanParams& ps) {
    return classify_unit_split(store, static_cast<int>(param(ps, "k")),
                               param(ps, "c"), param(ps, "d"));
  };
  classify_cells(cells, jobs, classify);
  ScanReport rep;
  rep.id = "lemma-key";
  rep.ranges = "2 <= k <= " + std::to_string(k_max) +
               ", c >= d >= 1, c + d <= " + std::to_string(sum_max);
  finish_report(
      rep, cells, strict_less,
      [&](const ScanParams& s) {
        return param(s, "k") <= k_max &&
               param(s, "c") + param(s, "d") <= sum_max;
      },
      classify);
  return rep;
}

ScanReport scan_lemma_g(CountStore& store, int k_max, long a_max,
                        unsigned jobs) {
  if (k_max < 2) throw std::invalid_argument("scan_lemma_g: need k_max >= 2");
  if (a_max < 1) throw std::invalid_argument("scan_lemma_g: need a_max >= 1");
  for (int k = 2; k <= k_max; ++k)
    store.table(k, ConstraintProfile::forbid({1}), a_max + 1);
  std::vector<ScanCell> cells;
  for (int k = 2; k <= k_max; ++k)
    for (long a = 1; a <= a_max; ++a)
      cells.push_back({{{"a", a}, {"k", k}}, {}});
  Classifier classify = [&store](const ScanParams& ps) {
    return classify_unit_last(store, static_cast<int>(param(ps, "k")),
                              param(ps, "a"));
  };
  classify_cells(cells, jobs, classify);
  ScanReport rep;
  rep.id = "lemma-g";
  rep.ranges = "2 <= k <= " + std::to_string(k_max) +
               ", 1 <= a <= " + std::to_string(a_max);
  finish_report(
      rep, cells, non_strict,
      [&](const ScanParams& s) {
        return param(s, "k") <= k_max && param(s, "a") <= a_max;
      },
      classify);
  return rep;
}

ScanReport scan_lemma_ab(CountStore& store, int k_max, long sum_max,
                         unsigned jobs) {
  if (k_max < 2) throw std::invalid_argument("scan_lemma_ab: need k_max >= 2");
  if (sum_max < 2)
    throw std::invalid_argument("scan_lemma_ab: need sum_max >= 2");
  for (int k = 2; k <= k_max; ++k) {
    store.table(k, ConstraintProfile::forbid({1}), sum_max);
    store.table(k, sum_max);
  }
  std::vector<ScanCell> cells;
  for (int k = 2; k <= k_max; ++k)
    for (long a = 1; a < sum_max; ++a)
      for (long b = 1; b <= a && a + b <= sum_max; ++b)
        cells.push_back({{{"a", a}, {"b", b}, {"k", k}}, {}});
  Classifier classify = [&store](const ScanParams& ps) {
    return classify_unit_pair(store, static_cast<int>(param(ps, "k")),
                              param(ps, "a"), param(ps, "b"));
  };
  classify_cells(cells, jobs, classify);
  ScanReport rep;
  rep.id = "lemma-ab";
  rep.ranges = "2 <= k <= " + std::to_string(k_max) +
               ", a >= b >= 1, a + b <= " + std::to_string(sum_max);
  finish_report(
      rep, cells, non_strict,
      [&](const ScanParams& s) {
        return param(s, "k") <= k_max &&
               param(s, "a") + param(s, "b") <= sum_max;
      },
      classify);
  return rep;
}

bool verify_base_identity(CountStore& store, int k_min, int k_max) {
  if (k_min < 2)
    throw std::invalid_argument("verify_base_identity: need k >= 2");
  if (k_max < k_min)
    throw std::invalid_argument("verify_base_identity: empty range");
  auto no_unit1 = ConstraintProfile::forbid({1});
  for (int k = k_min; k <= k_max; ++k) {
    Natural lhs = store.constrained_count(k, 2, no_unit1) *
                      store.colored_count(k, 2) -
                  store.constrained_count(k, 4, no_unit1);
    Natural rhs;
    mpz_bin_uiui(rhs.get_mpz_t(), static_cast<unsigned long>(k) + 2, 4);
    rhs *= 5;
    if (lhs != rhs) return false;
  }
  return true;
}

ScanReport scan_conjecture(CountStore& store, int k_max, long n_max,
                           unsigned jobs) {
  if (k_max < 2)
    throw std::invalid_argument("scan_conjecture: need k_max >= 2");
  if (n_max < 2) throw std::invalid_argument("scan_conjecture: need n_max >= 2");
  for (int k = 2; k <= k_max; ++k) store.table(k, n_max);
  std::vector<ScanCell> cells;
  for (int k = 2; k <= k_max; ++k)
    for (long n = 2; n <= n_max; ++n)
      for (long m = 1; m < n; ++m)
        cells.push_back({{{"k", k}, {"n", n}, {"m", m}}, {}});
  Classifier classify = [&store](const ScanParams& ps) {
    return classify_ratio_step(store, static_cast<int>(param(ps, "k")),
                               param(ps, "n"), param(ps, "m"));
  };
  classify_cells(cells, jobs, classify);
  ScanReport rep;
  rep.id = "conjecture";
  rep.ranges = "2 <= k <= " + std::to_string(k_max) +
               ", 1 <= m < n <= " + std::to_string(n_max);
  finish_report(
      rep, cells, strict_less,
      [&](const ScanParams& s) {
        return param(s, "k") <= k_max && param(s, "n") <= n_max;
      },
      classify);
  return rep;
}

ScanReport scan_log_concavity_p(CountStore& store, long n_max, bool strong,
                                long m_max, unsigned jobs) {
  if (n_max < 27)
    throw std::invalid_argument("scan_log_concavity_p: need n_max > 26");
  store.table(1, strong ? n_max : n_max + 1);
  std::vector<ScanCell> cells;
  if (strong) {
    for (long n = 3; n + 2 <= n_max; ++n)
      for (long m = 2; m < n && n + m <= n_max; ++m) {
        if (m_max > 0 && m > m_max) break;
        cells.push_back({{{"n", n}, {"m", m}}, {}});
      }
  } else {
    for (long n = 26; n <= n_max; ++n)
      cells.push_back({{{"n", n}}, {}});
  }
  Classifier classify = [&store, strong](const ScanParams& ps) {
    return classify_log_concavity(store, param(ps, "n"),
                                  strong ? param(ps, "m") : 1);
  };
  classify_cells(cells, jobs, classify);
  ScanReport rep;
  rep.id = "logconcave";
  if (strong) {
    rep.ranges = "strong: n > m > 1, n + m <= " + std::to_string(n_max);
    if (m_max > 0) rep.ranges += ", m <= " + std::to_string(m_max);
  } else {
    rep.ranges = "weak: 25 < n <= " + std::to_string(n_max);
  }
  finish_report(rep, cells, strong ? non_strict : strict_less,
                [](const ScanParams&) { return true; }, classify);
  return rep;
}

std::vector<ScanParams> reference_exceptions(const std::string& scan_id) {
  if (scan_id == "theorem2")
    return {{{"a", 1}, {"b", 1}, {"k", 2}},
            {{"a", 2}, {"b", 1}, {"k", 2}},
            {{"a", 3}, {"b", 1}, {"k", 2}},
            {{"a", 1}, {"b", 1}, {"k", 3}}};
  if (scan_id == "lemma-key") return {{{"c", 1}, {"d", 1}, {"k", 2}}};
  if (scan_id == "lemma-g")
    return {{{"a", 1}, {"k", 2}}, {{"a", 1}, {"k", 3}}};
  if (scan_id == "lemma-ab")
    return {{{"a", 1}, {"b", 1}, {"k", 2}}, {{"a", 1}, {"b", 1}, {"k", 3}}};
  if (scan_id == "conjecture") return {{{"k", 2}, {"n", 6}, {"m", 4}}};
  if (scan_id == "bo" || scan_id == "logconcave") return {};
  throw std::invalid_argument("unknown scan id: " + scan_id);
}

MaxResult max_product(CountStore& store, int k, long n, MaxMode mode) {
  if (k < 2) throw std::invalid_argument("max_product: need k >= 2");
  if (n < 1) throw std::invalid_argument("max_product: need n >= 1");
  MaxResult res;
  res.k = k;
  res.n = n;
  res.mode = mode;
  if (mode == MaxMode::BruteForce) {
    TablePtr tab = store.table(k, n);
    std::vector<long> current;
    // Size-multisets in descending lexicographic order, so the maximizer
    // list comes out ordered without a final sort.
    std::function<void(long, long, const Natural&)> walk =
        [&](long remaining, long bound, const Natural& product) {
          if (remaining == 0) {
            int c = cmp(product, res.value);
            if (c > 0) {
              res.value = product;
              res.maximizers.clear();
            }
            if (c >= 0) res.maximizers.push_back(current);
            return;
          }
          for (long s = std::min(bound, remaining); s >= 1; --s) {
            current.push_back(s);
            walk(remaining - s, s, product * tab->at(s));
            current.pop_back();
          }
        };
    walk(n, n, Natural(1));
  } else {
    auto power = [](unsigned long base, unsigned long exp) {
      Natural v;
      mpz_ui_pow_ui(v.get_mpz_t(), base, exp);
      return v;
    };
    if (k == 2) {
      if (n % 2 == 0) {
        res.value = power(5, static_cast<unsigned long>(n / 2));
        res.maximizers.push_back(std::vector<long>(n / 2, 2));
      } else if (n == 1) {
        res.value = 2;
        res.maximizers.push_back({1});
      } else {
        res.value = 2 * power(5, static_cast<unsigned long>((n - 1) / 2));
        std::vector<long> first{3};
        first.insert(first.end(), (n - 3) / 2, 2);
        std::vector<long> second((n - 1) / 2, 2);
        second.push_back(1);
        res.maximizers.push_back(std::move(first));
        res.maximizers.push_back(std::move(second));
      }
    } else if (k == 3) {
      res.value = power(3, static_cast<unsigned long>(n));
      for (long m = n / 2; m >= 0; --m) {
        std::vector<long> sizes(m, 2);
        sizes.insert(sizes.end(), n - 2 * m, 1);
        res.maximizers.push_back(std::move(sizes));
      }
    } else {
      res.value = power(static_cast<unsigned long>(k),
                        static_cast<unsigned long>(n));
      res.maximizers.push_back(std::vector<long>(n, 1));
    }
  }
  return res;
}

namespace {

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::StrictGreater:
      return ">";
    case Relation::Equal:
      return "=";
    case Relation::StrictLess:
      return "<";
  }
  return "?";
}

nlohmann::ordered_json cell_json(const ScanCell& cell) {
  nlohmann::ordered_json j;
  for (const auto& [name, value] : cell.params) j[name] = value;
  j["relation"] = to_string(cell.outcome.relation);
  j["lhs"] = cell.outcome.lhs.get_str();
  j["rhs"] = cell.outcome.rhs.get_str();
  return j;
}

void cell_text(std::ostringstream& out, const ScanCell& cell) {
  out << "  " << params_key(cell.params) << "  "
      << to_string(cell.outcome.relation) << "  "
      << cell.outcome.lhs.get_str() << ' '
      << relation_symbol(cell.outcome.relation) << ' '
      << cell.outcome.rhs.get_str() << "\n";
}

std::string sizes_text(const std::vector<long>& sizes) {
  std::string s;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i > 0) s += '+';
    s += std::to_string(sizes[i]);
  }
  return s;
}

}  // namespace

nlohmann::ordered_json to_json(const ScanReport& rep) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["id"] = rep.id;
  j["ranges"] = rep.ranges;
  j["total_checked"] = rep.total_checked;
  auto exceptions = nlohmann::ordered_json::array();
  for (const auto& cell : rep.exceptions) exceptions.push_back(cell_json(cell));
  j["exceptions"] = std::move(exceptions);
  auto stated = nlohmann::ordered_json::array();
  for (const auto& ps : rep.stated_exceptions) {
    nlohmann::ordered_json entry;
    for (const auto& [name, value] : ps) entry[name] = value;
    stated.push_back(std::move(entry));
  }
  j["stated_exceptions"] = std::move(stated);
  j["discrepancies"] = rep.discrepancies;
  auto appendix = nlohmann::ordered_json::array();
  for (const auto& cell : rep.appendix) appendix.push_back(cell_json(cell));
  j["appendix"] = std::move(appendix);
  return j;
}

std::string to_text(const ScanReport& rep) {
  std::ostringstream out;
  out << "scan " << rep.id << "\n";
  out << "ranges: " << rep.ranges << "\n";
  out << "cells checked: " << rep.total_checked << "\n";
  if (rep.exceptions.empty()) {
    out << "exceptions: none\n";
  } else {
    out << "exceptions (" << rep.exceptions.size() << "):\n";
    for (const auto& cell : rep.exceptions) cell_text(out, cell);
  }
  if (!rep.stated_exceptions.empty()) {
    out << "stated exceptions (" << rep.stated_exceptions.size() << "):\n";
    for (const auto& ps : rep.stated_exceptions)
      out << "  " << params_key(ps) << "\n";
  }
  if (rep.discrepancies.empty()) {
    out << "discrepancies: none\n";
  } else {
    out << "discrepancies (" << rep.discrepancies.size() << "):\n";
    for (const auto& line : rep.discrepancies) out << "  " << line << "\n";
  }
  if (!rep.appendix.empty()) {
    out << "appendix (" << rep.appendix.size() << "):\n";
    for (const auto& cell : rep.appendix) cell_text(out, cell);
  }
  return out.str();
}

std::string to_csv(const ScanReport& rep) {
  std::ostringstream out;
  out << "section,cell,relation,lhs,rhs\n";
  for (const auto& cell : rep.exceptions)
    out << "exception," << params_key(cell.params) << ','
        << to_string(cell.outcome.relation) << ','
        << cell.outcome.lhs.get_str() << ',' << cell.outcome.rhs.get_str()
        << "\n";
  for (const auto& cell : rep.appendix)
    out << "appendix," << params_key(cell.params) << ','
        << to_string(cell.outcome.relation) << ','
        << cell.outcome.lhs.get_str() << ',' << cell.outcome.rhs.get_str()
        << "\n";
  return out.str();
}

nlohmann::ordered_json to_json(const MaxResult& res) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["k"] = res.k;
  j["n"] = res.n;
  j["mode"] = res.mode == MaxMode::BruteForce ? "brute-force" : "closed-form";
  j["value"] = res.value.get_str();
  auto maximizers = nlohmann::ordered_json::array();
  for (const auto& sizes : res.maximizers) maximizers.push_back(sizes);
  j["maximizers"] = std::move(maximizers);
  return j;
}

std::string to_text(const MaxResult& res) {
  std::ostringstream out;
  out << "max product  k=" << res.k << " n=" << res.n << "  ("
      << (res.mode == MaxMode::BruteForce ? "brute-force" : "closed-form")
      << ")\n";
  out << "value: " << res.value.get_str() << "\n";
  out << "maximizers (" << res.maximizers.size() << "):\n";
  for (const auto& sizes : res.maximizers)
    out << "  " << sizes_text(sizes) << "\n";
  return out.str();
}

std::string to_csv(const MaxResult& res) {
  std::ostringstream out;
  out << "value,maximizer\n";
  for (const auto& sizes : res.maximizers)
    out << res.value.get_str() << ',' << sizes_text(sizes) << "\n";
  return out.str();
}

}  // namespace kcpart
