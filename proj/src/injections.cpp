#include "kcpart/injections.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <sstream>

namespace kcpart {

const char* to_string(MapVariant v) {
  return v == MapVariant::AsWritten ? "as-written" : "color-preserving";
}

MapVariant parse_variant(const std::string& text) {
  if (text == "as-written") return MapVariant::AsWritten;
  if (text == "color-preserving") return MapVariant::ColorPreserving;
  throw std::invalid_argument("unknown map variant '" + text +
                              "' (expected as-written or color-preserving)");
}

namespace {

void check_map_input(const ColoredPartition& lambda, int k, long weight,
                     bool forbid_unit2, const char* who) {
  if (!is_canonical(lambda))
    throw std::invalid_argument(std::string(who) +
                                ": partition is not canonical");
  if (lambda.weight != weight)
    throw std::invalid_argument(std::string(who) + ": weight is " +
                                std::to_string(lambda.weight) + ", expected " +
                                std::to_string(weight));
  for (const ColoredPart& p : lambda.parts) {
    if (p.color > k)
      throw std::invalid_argument(std::string(who) +
                                  ": part color exceeds k = " +
                                  std::to_string(k));
    if (p.size == 1 && p.color == 1)
      throw std::invalid_argument(std::string(who) +
                                  ": domain excludes 1_1 parts");
    if (forbid_unit2 && p.size == 1 && p.color == 2)
      throw std::invalid_argument(std::string(who) +
                                  ": domain excludes 1_2 parts");
  }
}

}  // namespace

SplitData split_point(const ColoredPartition& lambda, long c, long d) {
  if (c < 1 || d < 1)
    throw std::invalid_argument("split_point: need c >= 1 and d >= 1");
  if (!is_canonical(lambda))
    throw std::invalid_argument("split_point: partition is not canonical");
  if (lambda.parts.empty())
    throw std::invalid_argument("split_point: partition is empty");
  if (lambda.weight != c + d)
    throw std::invalid_argument("split_point: weight is " +
                                std::to_string(lambda.weight) +
                                ", expected c + d = " + std::to_string(c + d));
  long tail = 0;
  for (std::size_t j = lambda.parts.size(); j >= 1; --j) {
    long size = lambda.parts[j - 1].size;
    tail += size;
    if (tail >= d) {
      long x = d - (tail - size);
      return SplitData{j, x, size - x};
    }
  }
  throw std::logic_error("split_point: no index found for valid input");
}

std::pair<ColoredPartition, ColoredPartition> apply_f(
    int k, long c, long d, const ColoredPartition& lambda) {
  if (k < 2) throw std::invalid_argument("apply_f: need k >= 2");
  if (d < 1 || c < d || c < 2)
    throw std::invalid_argument("apply_f: need c >= d >= 1 and c >= 2");
  check_map_input(lambda, k, c + d, /*forbid_unit2=*/true, "apply_f");

  SplitData sp = split_point(lambda, c, d);
  const auto& parts = lambda.parts;
  const std::size_t i = sp.index;  // 1-based
  ColoredPart cut = parts[i - 1];

  std::vector<ColoredPart> mu(parts.begin(),
                              parts.begin() + static_cast<long>(i) - 1);
  std::vector<ColoredPart> nu(parts.begin() + static_cast<long>(i),
                              parts.end());
  if (sp.y == 0) {
    // the cut part belongs wholly to the tail
    nu.insert(nu.begin(), cut);
  } else if (sp.y >= 2) {
    mu.push_back({static_cast<int>(sp.y), cut.color});
    nu.insert(nu.end(), static_cast<std::size_t>(sp.x), ColoredPart{1, 1});
  } else if (cut.color == 1) {
    // y = 1 on a color-1 part: fold the previous part and the leftover
    // unit into units of color 2 (i >= 2 is forced by c >= 2)
    assert(i >= 2);
    int prev = parts[i - 2].size;
    mu.pop_back();
    mu.insert(mu.end(), static_cast<std::size_t>(prev) + 1,
              ColoredPart{1, 2});
    nu.insert(nu.end(), static_cast<std::size_t>(sp.x), ColoredPart{1, 1});
  } else {
    mu.push_back({1, cut.color});
    nu.insert(nu.end(), static_cast<std::size_t>(sp.x), ColoredPart{1, 1});
  }

  auto out = std::make_pair(canonicalize(std::move(mu), k),
                            canonicalize(std::move(nu), k));
  assert(out.first.weight == c);
  assert(out.second.weight == d);
  return out;
}

std::pair<ColoredPartition, ColoredPartition> apply_g(
    int k, long a, const ColoredPartition& lambda, MapVariant variant) {
  if (k < 2) throw std::invalid_argument("apply_g: need k >= 2");
  if (a < 2) throw std::invalid_argument("apply_g: need a >= 2");
  check_map_input(lambda, k, a + 1, /*forbid_unit2=*/false, "apply_g");

  const auto& parts = lambda.parts;
  ColoredPart last = parts.back();
  std::vector<ColoredPart> mu(parts.begin(), parts.end() - 1);
  std::vector<ColoredPart> nu;
  if (last.size >= 3) {
    int color = variant == MapVariant::AsWritten ? 1 : last.color;
    mu.push_back({last.size - 1, color});
    nu.push_back({1, 1});
  } else if (last.size == 2 && last.color == 1) {
    // a lone 2_1 would mean weight 2 = a + 1 with a >= 2
    assert(!mu.empty());
    int prev = mu.back().size;
    mu.pop_back();
    mu.insert(mu.end(), static_cast<std::size_t>(prev) + 1,
              ColoredPart{1, 2});
    nu.push_back({1, 1});
  } else if (last.size == 2) {
    mu.push_back({1, last.color});
    nu.push_back({1, 1});
  } else {
    // last.size == 1; its color is >= 2 because 1_1 is excluded
    nu.push_back({1, last.color});
  }

  auto out = std::make_pair(canonicalize(std::move(mu), k),
                            canonicalize(std::move(nu), k));
  assert(out.first.weight == a);
  assert(out.second.weight == 1);
  return out;
}

namespace {

struct AuditSetup {
  AuditReport header;
  long domain_weight = 0;
  ConstraintProfile domain_profile;
  long mu_weight = 0;
  ConstraintProfile mu_profile;
  long nu_weight = 0;
  ConstraintProfile nu_profile;
  std::function<std::pair<ColoredPartition, ColoredPartition>(
      const ColoredPartition&)>
      apply;
};

AuditReport run_audit(const AuditSetup& setup, const AuditLimits& limits) {
  if (setup.domain_weight > limits.max_weight)
    throw ScaleError("audit at weight " + std::to_string(setup.domain_weight) +
                     " exceeds the enumeration bound " +
                     std::to_string(limits.max_weight));
  if (setup.header.k > limits.max_k)
    throw ScaleError("audit at k = " + std::to_string(setup.header.k) +
                     " exceeds the bound k <= " +
                     std::to_string(limits.max_k));

  AuditReport rep = setup.header;
  auto domain =
      collect_partitions(rep.k, setup.domain_weight, setup.domain_profile);
  auto cod_mu = collect_partitions(rep.k, setup.mu_weight, setup.mu_profile);
  auto cod_nu = collect_partitions(rep.k, setup.nu_weight, setup.nu_profile);
  rep.domain_size = Natural(static_cast<unsigned long>(domain.size()));
  rep.codomain_size = Natural(static_cast<unsigned long>(cod_mu.size())) *
                      Natural(static_cast<unsigned long>(cod_nu.size()));

  using OutputPair = std::pair<ColoredPartition, ColoredPartition>;
  std::map<OutputPair, std::vector<std::size_t>> image;
  std::vector<OutputPair> outputs(domain.size());
  for (std::size_t idx = 0; idx < domain.size(); ++idx) {
    OutputPair out = setup.apply(domain[idx]);
    std::string why;
    if (out.first.weight != setup.mu_weight)
      why = "left weight " + std::to_string(out.first.weight) +
            " != expected " + std::to_string(setup.mu_weight);
    else if (!satisfies(out.first, setup.mu_profile))
      why = "left component carries a forbidden unit";
    else if (out.second.weight != setup.nu_weight)
      why = "right weight " + std::to_string(out.second.weight) +
            " != expected " + std::to_string(setup.nu_weight);
    else if (!satisfies(out.second, setup.nu_profile))
      why = "right component carries a forbidden unit";
    if (!why.empty())
      rep.codomain_violations.push_back(
          {domain[idx], out.first, out.second, why});
    image[out].push_back(idx);
    outputs[idx] = std::move(out);
  }

  std::vector<std::pair<std::size_t, std::size_t>> colliding;
  for (const auto& [out, indices] : image)
    for (std::size_t u = 0; u < indices.size(); ++u)
      for (std::size_t v = u + 1; v < indices.size(); ++v)
        colliding.emplace_back(indices[u], indices[v]);
  std::sort(colliding.begin(), colliding.end());
  for (auto [u, v] : colliding)
    rep.collisions.push_back(
        {domain[u], domain[v], outputs[u].first, outputs[u].second});
  rep.injective = rep.collisions.empty();

  for (const auto& mu : cod_mu) {
    for (const auto& nu : cod_nu) {
      if (image.find({mu, nu}) != image.end()) continue;
      ++rep.unhit_total;
      if (rep.unhit_examples.size() < limits.unhit_sample)
        rep.unhit_examples.push_back({mu, nu});
    }
  }
  rep.surjective = rep.unhit_total == 0;
  return rep;
}

}  // namespace

AuditReport audit_f(int k, long c, long d, const AuditLimits& limits) {
  if (k < 2) throw std::invalid_argument("audit_f: need k >= 2");
  if (d < 1 || c < d || c < 2)
    throw std::invalid_argument("audit_f: need c >= d >= 1 and c >= 2");
  AuditSetup setup;
  setup.header.map = "f";
  setup.header.k = k;
  setup.header.c = c;
  setup.header.d = d;
  setup.domain_weight = c + d;
  setup.domain_profile = ConstraintProfile::forbid({1, 2});
  setup.mu_weight = c;
  setup.mu_profile = ConstraintProfile::forbid({1});
  setup.nu_weight = d;
  setup.nu_profile = ConstraintProfile::forbid({2});
  setup.apply = [k, c, d](const ColoredPartition& lam) {
    return apply_f(k, c, d, lam);
  };
  return run_audit(setup, limits);
}

AuditReport audit_g(int k, long a, MapVariant variant,
                    const AuditLimits& limits) {
  if (k < 2) throw std::invalid_argument("audit_g: need k >= 2");
  if (a < 2) throw std::invalid_argument("audit_g: need a >= 2");
  AuditSetup setup;
  setup.header.map = "g";
  setup.header.k = k;
  setup.header.a = a;
  setup.header.variant = variant;
  setup.domain_weight = a + 1;
  setup.domain_profile = ConstraintProfile::forbid({1});
  setup.mu_weight = a;
  setup.mu_profile = ConstraintProfile::forbid({1});
  setup.nu_weight = 1;
  setup.nu_profile = ConstraintProfile{};
  setup.apply = [k, a, variant](const ColoredPartition& lam) {
    return apply_g(k, a, lam, variant);
  };
  return run_audit(setup, limits);
}

namespace {

nlohmann::ordered_json pair_json(const ColoredPartition& mu,
                                 const ColoredPartition& nu) {
  return {{"mu", to_text(mu)}, {"nu", to_text(nu)}};
}

std::string pair_text(const ColoredPartition& mu, const ColoredPartition& nu) {
  return "(" + to_text(mu) + "; " + to_text(nu) + ")";
}

}  // namespace

nlohmann::ordered_json to_json(const AuditReport& rep) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["map"] = rep.map;
  j["k"] = rep.k;
  if (rep.map == "f") {
    j["c"] = rep.c;
    j["d"] = rep.d;
  } else {
    j["a"] = rep.a;
  }
  if (rep.variant) j["variant"] = to_string(*rep.variant);
  j["domain_size"] = rep.domain_size.get_str();
  j["codomain_size"] = rep.codomain_size.get_str();
  j["injective"] = rep.injective;
  j["surjective"] = rep.surjective;
  auto collisions = nlohmann::ordered_json::array();
  for (const auto& col : rep.collisions) {
    nlohmann::ordered_json entry;
    entry["first"] = to_text(col.first);
    entry["second"] = to_text(col.second);
    entry["image"] = pair_json(col.out_mu, col.out_nu);
    collisions.push_back(std::move(entry));
  }
  j["collisions"] = std::move(collisions);
  auto violations = nlohmann::ordered_json::array();
  for (const auto& bad : rep.codomain_violations) {
    nlohmann::ordered_json entry;
    entry["input"] = to_text(bad.input);
    entry["image"] = pair_json(bad.out_mu, bad.out_nu);
    entry["reason"] = bad.reason;
    violations.push_back(std::move(entry));
  }
  j["codomain_violations"] = std::move(violations);
  j["unhit_total"] = rep.unhit_total;
  auto unhit = nlohmann::ordered_json::array();
  for (const auto& pair : rep.unhit_examples)
    unhit.push_back(pair_json(pair.mu, pair.nu));
  j["unhit_examples"] = std::move(unhit);
  return j;
}

std::string to_text(const AuditReport& rep) {
  std::ostringstream out;
  out << "audit " << rep.map << "  k=" << rep.k;
  if (rep.map == "f")
    out << " c=" << rep.c << " d=" << rep.d;
  else
    out << " a=" << rep.a;
  if (rep.variant) out << "  variant=" << to_string(*rep.variant);
  out << "\n";
  out << "domain " << rep.domain_size.get_str() << "  codomain "
      << rep.codomain_size.get_str() << "\n";
  if (rep.collisions.empty()) {
    out << "collisions: none\n";
  } else {
    out << "collisions (" << rep.collisions.size() << "):\n";
    for (const auto& col : rep.collisions)
      out << "  " << to_text(col.first) << "  and  " << to_text(col.second)
          << "  ->  " << pair_text(col.out_mu, col.out_nu) << "\n";
  }
  if (rep.codomain_violations.empty()) {
    out << "codomain violations: none\n";
  } else {
    out << "codomain violations (" << rep.codomain_violations.size()
        << "):\n";
    for (const auto& bad : rep.codomain_violations)
      out << "  " << to_text(bad.input) << "  ->  "
          << pair_text(bad.out_mu, bad.out_nu) << "  [" << bad.reason
          << "]\n";
  }
  if (rep.unhit_total == 0) {
    out << "unhit codomain pairs: none\n";
  } else {
    out << "unhit codomain pairs (" << rep.unhit_examples.size() << " of "
        << rep.unhit_total << " shown):\n";
    for (const auto& pair : rep.unhit_examples)
      out << "  " << pair_text(pair.mu, pair.nu) << "\n";
  }
  out << "verdict: " << (rep.injective ? "injective" : "not injective")
      << ", " << (rep.surjective ? "surjective" : "not surjective") << "\n";
  return out.str();
}

std::string to_csv(const AuditReport& rep) {
  std::ostringstream out;
  out << "section,input1,input2,mu,nu,note\n";
  for (const auto& col : rep.collisions)
    out << "collision," << to_text(col.first) << ',' << to_text(col.second)
        << ',' << to_text(col.out_mu) << ',' << to_text(col.out_nu) << ",\n";
  for (const auto& bad : rep.codomain_violations)
    out << "violation," << to_text(bad.input) << ",," << to_text(bad.out_mu)
        << ',' << to_text(bad.out_nu) << ',' << bad.reason << "\n";
  for (const auto& pair : rep.unhit_examples)
    out << "unhit,,," << to_text(pair.mu) << ',' << to_text(pair.nu)
        << ",\n";
  return out.str();
}

}  // namespace kcpart
