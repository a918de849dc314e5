#include "kcpart/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace kcpart {

namespace {

struct ParsedCache {
  int k = 0;
  ConstraintProfile profile;
  std::vector<Natural> values;
};

// Throws CacheError on anything malformed; the caller decides whether that
// means "rebuild" (unreadable file) or "refuse" (readable but wrong header).
ParsedCache parse_cache_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("schema") ||
      !doc["schema"].is_number_integer() || doc["schema"].get<int>() != 1)
    throw CacheError("cache: missing or unsupported schema marker");
  if (!doc.contains("k") || !doc["k"].is_number_integer())
    throw CacheError("cache: missing color count");
  if (!doc.contains("profile") || !doc["profile"].is_object())
    throw CacheError("cache: missing constraint profile");
  if (!doc.contains("counts") || !doc["counts"].is_array())
    throw CacheError("cache: missing counts array");

  ParsedCache parsed;
  parsed.k = doc["k"].get<int>();
  const auto& prof = doc["profile"];
  if (!prof.contains("forbidden_units") ||
      !prof["forbidden_units"].is_array() ||
      !prof.contains("required_units") || !prof["required_units"].is_array())
    throw CacheError("cache: malformed constraint profile");
  std::vector<int> forbidden, required;
  for (const auto& v : prof["forbidden_units"]) {
    if (!v.is_number_integer()) throw CacheError("cache: non-numeric color");
    forbidden.push_back(v.get<int>());
  }
  for (const auto& v : prof["required_units"]) {
    if (!v.is_number_integer()) throw CacheError("cache: non-numeric color");
    required.push_back(v.get<int>());
  }
  try {
    parsed.profile = ConstraintProfile(forbidden, required);
  } catch (const std::invalid_argument& e) {
    throw CacheError(std::string("cache: invalid profile: ") + e.what());
  }
  for (const auto& v : doc["counts"]) {
    if (!v.is_string()) throw CacheError("cache: counts must be strings");
    const std::string& text = v.get_ref<const std::string&>();
    Natural value;
    if (text.empty() || value.set_str(text, 10) != 0)
      throw CacheError("cache: non-numeric count '" + text + "'");
    parsed.values.push_back(std::move(value));
  }
  if (parsed.values.empty()) throw CacheError("cache: empty counts array");
  return parsed;
}

nlohmann::ordered_json render_cache(const CountTable& table) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["k"] = table.k();
  doc["profile"] = {
      {"forbidden_units", table.profile().forbidden_units()},
      {"required_units", table.profile().required_units()},
  };
  auto counts = nlohmann::ordered_json::array();
  for (const auto& v : table.values()) counts.push_back(v.get_str());
  doc["counts"] = std::move(counts);
  return doc;
}

}  // namespace

std::string cache_file_name(int k, const ConstraintProfile& profile) {
  std::string name = "k" + std::to_string(k);
  if (!profile.forbidden_units().empty()) {
    name += "-f";
    for (int c : profile.forbidden_units()) name += std::to_string(c);
  }
  if (!profile.required_units().empty()) {
    name += "-r";
    for (int c : profile.required_units()) name += std::to_string(c);
  }
  return name + ".json";
}

void write_cache_file(const CountTable& table,
                      const std::filesystem::path& path) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out)
      throw CacheError("cache: cannot write " + tmp.string());
    out << render_cache(table).dump(2) << "\n";
    if (!out)
      throw CacheError("cache: write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

TablePtr load_or_build_cache(CountStore& store,
                             const std::filesystem::path& path, int k,
                             long limit, std::ostream& warn,
                             const ConstraintProfile& profile) {
  if (k < 1) throw std::invalid_argument("cache: need k >= 1");
  if (limit < 0) throw std::invalid_argument("cache: need limit >= 0");
  profile.validate_for(k);

  if (!std::filesystem::exists(path)) {
    TablePtr table = store.table(k, profile, limit);
    write_cache_file(*table, path);
    return table;
  }

  nlohmann::json doc;
  bool readable = false;
  {
    std::ifstream in(path);
    if (in) {
      doc = nlohmann::json::parse(in, nullptr, false);
      readable = !doc.is_discarded();
    }
  }
  ParsedCache parsed;
  bool parsed_ok = false;
  std::string parse_error;
  if (readable) {
    try {
      parsed = parse_cache_json(doc);
      parsed_ok = true;
    } catch (const CacheError& e) {
      parse_error = e.what();
    }
  } else {
    parse_error = "cache: not valid JSON";
  }
  if (!parsed_ok) {
    warn << "warning: rebuilding unreadable cache " << path.string() << " ("
         << parse_error << ")\n";
    TablePtr table = store.table(k, profile, limit);
    write_cache_file(*table, path);
    return table;
  }

  // A readable file that describes a different table is a refusal, not a
  // rebuild: silently replacing it could mask a misconfigured cache dir.
  if (parsed.k != k || parsed.profile != profile)
    throw CacheError("cache: " + path.string() +
                     " holds a different table (k=" +
                     std::to_string(parsed.k) + ")");

  TablePtr table = store.adopt(k, parsed.profile, parsed.values);
  if (table->limit() < limit) {
    table = store.table(k, profile, limit);
    write_cache_file(*table, path);
  }
  return table;
}

}  // namespace kcpart
