#include "kcpart/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kcpart/cache.hpp"
#include "kcpart/colored.hpp"
#include "kcpart/counts.hpp"
#include "kcpart/errors.hpp"
#include "kcpart/injections.hpp"
#include "kcpart/theorems.hpp"

namespace kcpart {

namespace {

std::string dump_json(const nlohmann::ordered_json& j) {
  return j.dump(2) + "\n";
}

std::string int_list(const std::vector<int>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ' ';
    s += std::to_string(values[i]);
  }
  return s;
}

TablePtr fetch_table(CountStore& store, const CommandConfig& cfg, int k,
                     const ConstraintProfile& profile, long limit,
                     std::ostream& err) {
  if (cfg.cache_dir.empty()) return store.table(k, profile, limit);
  std::filesystem::path dir(cfg.cache_dir);
  return load_or_build_cache(store, dir / cache_file_name(k, profile), k,
                             limit, err, profile);
}

int run_table(CountStore& store, const CommandConfig& cfg, std::ostream& err,
              std::string& rendered) {
  if (cfg.k_min < 1 || cfg.k_max < cfg.k_min)
    throw std::invalid_argument("table: need 1 <= kmin <= kmax");
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
    throw std::invalid_argument("table: need 1 <= nmin <= nmax");
  std::vector<TablePtr> tables;
  for (int k = cfg.k_min; k <= cfg.k_max; ++k)
    tables.push_back(fetch_table(store, cfg, k, {}, cfg.n_max, err));

  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["k_min"] = cfg.k_min;
    j["k_max"] = cfg.k_max;
    j["n_min"] = cfg.n_min;
    j["n_max"] = cfg.n_max;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& t : tables) {
      nlohmann::ordered_json row;
      row["k"] = t->k();
      auto counts = nlohmann::ordered_json::array();
      for (long n = cfg.n_min; n <= cfg.n_max; ++n)
        counts.push_back(t->at(n).get_str());
      row["counts"] = std::move(counts);
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    rendered = dump_json(j);
    return 0;
  }

  // Both remaining formats are a grid with corner label "k\n": columns are
  // the n values, one row per k.
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"k\\n"};
  for (long n = cfg.n_min; n <= cfg.n_max; ++n)
    header.push_back(std::to_string(n));
  grid.push_back(std::move(header));
  for (const auto& t : tables) {
    std::vector<std::string> row{std::to_string(t->k())};
    for (long n = cfg.n_min; n <= cfg.n_max; ++n)
      row.push_back(t->at(n).get_str());
    grid.push_back(std::move(row));
  }

  std::ostringstream out;
  if (cfg.format == "csv") {
    for (const auto& row : grid) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << row[i];
      out << "\n";
    }
  } else {
    std::vector<std::size_t> widths(grid[0].size(), 0);
    for (const auto& row : grid)
      for (std::size_t i = 0; i < row.size(); ++i)
        widths[i] = std::max(widths[i], row[i].size());
    for (const auto& row : grid) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) out << "  ";
        out << std::string(widths[i] - row[i].size(), ' ') << row[i];
      }
      out << "\n";
    }
  }
  rendered = out.str();
  return 0;
}

int run_count(CountStore& store, const CommandConfig& cfg, std::ostream& err,
              std::string& rendered) {
  ConstraintProfile profile(cfg.forbid, cfg.require);
  profile.validate_for(cfg.k);
  TablePtr t = fetch_table(store, cfg, cfg.k, profile, cfg.n, err);
  Natural value = t->at(cfg.n);

  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["k"] = cfg.k;
    j["n"] = cfg.n;
    j["profile"] = {{"forbidden_units", profile.forbidden_units()},
                    {"required_units", profile.required_units()}};
    j["count"] = value.get_str();
    rendered = dump_json(j);
  } else if (cfg.format == "csv") {
    std::ostringstream out;
    out << "k,n,forbid,require,count\n";
    out << cfg.k << ',' << cfg.n << ',' << int_list(profile.forbidden_units())
        << ',' << int_list(profile.required_units()) << ','
        << value.get_str() << "\n";
    rendered = out.str();
  } else {
    std::ostringstream out;
    out << "p_{-" << cfg.k << "}(" << cfg.n;
    if (!profile.empty()) {
      out << " |";
      if (!profile.forbidden_units().empty())
        out << " forbid " << int_list(profile.forbidden_units());
      if (!profile.required_units().empty())
        out << (profile.forbidden_units().empty() ? " " : "; ")
            << "require " << int_list(profile.required_units());
    }
    out << ") = " << value.get_str() << "\n";
    rendered = out.str();
  }
  return 0;
}

int run_scan(CountStore& store, const CommandConfig& cfg,
             std::string& rendered) {
  ScanReport rep;
  const std::string& id = cfg.target;
  if (id == "theorem2")
    rep = scan_theorem2(store, cfg.k_max, cfg.sum_max, cfg.jobs);
  else if (id == "bo")
    rep = scan_bessenrodt_ono(store, cfg.sum_max, cfg.jobs);
  else if (id == "lemma-key")
    rep = scan_lemma_key(store, cfg.k_max, cfg.sum_max, cfg.jobs);
  else if (id == "lemma-g")
    rep = scan_lemma_g(store, cfg.k_max, cfg.a_max, cfg.jobs);
  else if (id == "lemma-ab")
    rep = scan_lemma_ab(store, cfg.k_max, cfg.sum_max, cfg.jobs);
  else if (id == "conjecture")
    rep = scan_conjecture(store, cfg.k_max, cfg.n_max, cfg.jobs);
  else if (id == "logconcave")
    rep = scan_log_concavity_p(store, cfg.n_max, cfg.strong, cfg.m_max,
                               cfg.jobs);
  else
    throw std::invalid_argument("unknown scan id: " + id);

  if (cfg.format == "json")
    rendered = dump_json(to_json(rep));
  else if (cfg.format == "csv")
    rendered = to_csv(rep);
  else
    rendered = to_text(rep);
  return 0;
}

int run_audit(const CommandConfig& cfg, std::string& rendered) {
  AuditReport rep;
  if (cfg.target == "f") {
    if (cfg.k < 1 || cfg.c < 1 || cfg.d < 1)
      throw std::invalid_argument("audit f: need --k, --c, --d >= 1");
    rep = audit_f(cfg.k, cfg.c, cfg.d);
  } else if (cfg.target == "g") {
    if (cfg.k < 1 || cfg.a < 1)
      throw std::invalid_argument("audit g: need --k and --a >= 1");
    rep = audit_g(cfg.k, cfg.a, parse_variant(cfg.variant));
  } else {
    throw std::invalid_argument("unknown audit map: " + cfg.target);
  }

  if (cfg.format == "json")
    rendered = dump_json(to_json(rep));
  else if (cfg.format == "csv")
    rendered = to_csv(rep);
  else
    rendered = to_text(rep);
  return 0;
}

int run_max(CountStore& store, const CommandConfig& cfg,
            std::string& rendered) {
  MaxResult res = max_product(
      store, cfg.k, cfg.n,
      cfg.brute ? MaxMode::BruteForce : MaxMode::ClosedForm);
  if (cfg.format == "json")
    rendered = dump_json(to_json(res));
  else if (cfg.format == "csv")
    rendered = to_csv(res);
  else
    rendered = to_text(res);
  return 0;
}

int run_verify(CountStore& store, const CommandConfig& cfg,
               std::string& rendered) {
  bool ok = false;
  std::string detail;
  if (cfg.target == "convolution") {
    if (cfg.k < 2)
      throw std::invalid_argument("verify convolution: need --k >= 2");
    if (cfg.split < 0 || cfg.split >= cfg.k)
      throw std::invalid_argument(
          "verify convolution: need 0 <= split < k (0 = all)");
    ok = true;
    if (cfg.split == 0) {
      for (int j = 1; j < cfg.k; ++j)
        ok = ok && store.verify_convolution_identity(cfg.k, j, cfg.n_max);
      detail = "k=" + std::to_string(cfg.k) + " splits=all n_max=" +
               std::to_string(cfg.n_max);
    } else {
      ok = store.verify_convolution_identity(cfg.k, cfg.split, cfg.n_max);
      detail = "k=" + std::to_string(cfg.k) + " split=" +
               std::to_string(cfg.split) + " n_max=" +
               std::to_string(cfg.n_max);
    }
    detail = "convolution identity: " + detail;
  } else if (cfg.target == "base") {
    ok = verify_base_identity(store, cfg.k_min, cfg.k_max);
    detail = "base identity: k in [" + std::to_string(cfg.k_min) + "," +
             std::to_string(cfg.k_max) + "]";
  } else {
    throw std::invalid_argument("unknown verify target: " + cfg.target);
  }

  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["check"] = cfg.target;
    j["detail"] = detail;
    j["ok"] = ok;
    rendered = dump_json(j);
  } else if (cfg.format == "csv") {
    rendered = "check,ok\n" + detail + "," + (ok ? "true" : "false") + "\n";
  } else {
    rendered = detail + (ok ? " ok" : " FAILED") + "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact k-colored partition counts, scans, and injection audits",
               "kcpart"};
  app.require_subcommand(1);
  CommandConfig cfg;

  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--jobs", cfg.jobs, "worker threads for scans");
  app.add_option("--max-n", cfg.max_n, "capacity ceiling for count tables");
  app.add_option("--cache", cfg.cache_dir, "count cache directory")
      ->envname("KCPART_CACHE_DIR");
  app.add_option("--expect", cfg.expect_path,
                 "compare output to this file; differences exit 1");

  CLI::App* table = app.add_subcommand("table", "print a p_{-k}(n) grid");
  table->fallthrough();
  table->add_option("--kmin", cfg.k_min, "smallest color count");
  table->add_option("--kmax", cfg.k_max, "largest color count");
  table->add_option("--nmin", cfg.n_min, "smallest weight");
  table->add_option("--nmax", cfg.n_max, "largest weight");

  CLI::App* count = app.add_subcommand("count", "one constrained count");
  count->fallthrough();
  count->add_option("--k", cfg.k, "color count")->required();
  count->add_option("--n", cfg.n, "weight")->required();
  count->add_option("--forbid", cfg.forbid, "forbidden unit colors");
  count->add_option("--require", cfg.require, "required unit colors");

  CLI::App* scan = app.add_subcommand(
      "scan", "scan an inequality over a parameter box and list exceptions");
  scan->fallthrough();
  scan->add_option("id", cfg.target,
                   "theorem2|bo|lemma-key|lemma-g|lemma-ab|conjecture|"
                   "logconcave")
      ->required();
  CLI::Option* scan_kmax = scan->add_option("--kmax", cfg.k_max);
  CLI::Option* scan_nmax = scan->add_option("--nmax", cfg.n_max);
  CLI::Option* scan_summax = scan->add_option("--summax", cfg.sum_max);
  CLI::Option* scan_amax = scan->add_option("--amax", cfg.a_max);
  scan->add_option("--mmax", cfg.m_max, "cap on m for strong log-concavity");
  scan->add_flag("--strong", cfg.strong, "strong log-concavity scan");

  CLI::App* audit = app.add_subcommand(
      "audit", "exhaustively audit an injection over its finite domain");
  audit->fallthrough();
  audit->add_option("map", cfg.target, "f|g")->required();
  audit->add_option("--k", cfg.k, "color count")->required();
  audit->add_option("--c", cfg.c, "left weight (map f)");
  audit->add_option("--d", cfg.d, "right weight (map f)");
  audit->add_option("--a", cfg.a, "weight (map g)");
  audit->add_option("--variant", cfg.variant,
                    "as-written|color-preserving (map g)");

  CLI::App* mx =
      app.add_subcommand("max", "largest product of counts over size splits");
  mx->fallthrough();
  mx->add_option("--k", cfg.k, "color count")->required();
  mx->add_option("--n", cfg.n, "total weight")->required();
  mx->add_flag("--brute", cfg.brute, "brute force instead of closed form");

  CLI::App* verify = app.add_subcommand("verify", "check internal identities");
  verify->fallthrough();
  verify->add_option("what", cfg.target, "convolution|base")->required();
  verify->add_option("--k", cfg.k, "color count");
  verify->add_option("--split", cfg.split, "convolution split (0 = all)");
  CLI::Option* verify_nmax =
      verify->add_option("--nmax", cfg.n_max, "largest weight checked");
  verify->add_option("--kmin", cfg.k_min);
  verify->add_option("--kmax", cfg.k_max);

  int rc = 0;
  std::string rendered;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));

    if (scan->parsed()) {
      const std::string& id = cfg.target;
      if (id == "theorem2") {
        if (!*scan_kmax) cfg.k_max = 8;
        if (!*scan_summax) cfg.sum_max = 60;
      } else if (id == "bo") {
        if (!*scan_summax) cfg.sum_max = 100;
      } else if (id == "lemma-key" || id == "lemma-ab") {
        if (!*scan_kmax) cfg.k_max = 4;
        if (!*scan_summax) cfg.sum_max = 14;
      } else if (id == "lemma-g") {
        if (!*scan_kmax) cfg.k_max = 4;
        if (!*scan_amax) cfg.a_max = 12;
      } else if (id == "conjecture") {
        if (!*scan_kmax) cfg.k_max = 10;
        if (!*scan_nmax) cfg.n_max = 40;
      } else if (id == "logconcave") {
        if (!*scan_nmax) cfg.n_max = cfg.strong ? 400 : 2000;
      }
    }
    if (verify->parsed() && !*verify_nmax) cfg.n_max = 50;

    CountStore store(cfg.max_n);
    if (table->parsed()) {
      cfg.subcommand = "table";
      rc = run_table(store, cfg, err, rendered);
    } else if (count->parsed()) {
      cfg.subcommand = "count";
      rc = run_count(store, cfg, err, rendered);
    } else if (scan->parsed()) {
      cfg.subcommand = "scan";
      rc = run_scan(store, cfg, rendered);
    } else if (audit->parsed()) {
      cfg.subcommand = "audit";
      rc = run_audit(cfg, rendered);
    } else if (mx->parsed()) {
      cfg.subcommand = "max";
      rc = run_max(store, cfg, rendered);
    } else if (verify->parsed()) {
      cfg.subcommand = "verify";
      rc = run_verify(store, cfg, rendered);
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ScaleError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CacheError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  out << rendered;
  if (rc == 0 && !cfg.expect_path.empty()) {
    std::ifstream in(cfg.expect_path, std::ios::binary);
    if (!in) {
      err << "error: cannot read expectation file " << cfg.expect_path
          << "\n";
      return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (buf.str() != rendered) {
      err << "expectation mismatch: output differs from " << cfg.expect_path
          << "\n";
      rc = 1;
    }
  }
  return rc;
}

}  // namespace kcpart
