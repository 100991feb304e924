/// \file
/// On-disk cache of irreducible character tables.
///
/// One JSON file per n, `chartable-n<N>.json`:
///
///     {"format": "hooklie-character-table", "version": 1, "n": 4,
///      "entries": [{"lambda": [4], "mu": [4], "value": "1"}, ...],
///      "checksum": "fnv1a64:<16 hex digits>"}
///
/// The checksum covers the entries in the order written. Loading validates
/// everything before a single value enters the process-wide memo.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "hooklie/characters.hpp"

namespace hooklie {

inline constexpr int kCharacterTableVersion = 1;
inline constexpr const char* kCharacterTableFormat = "hooklie-character-table";
inline constexpr const char* kCacheDirEnv = "HOOKLIE_CACHE_DIR";

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string checksum_of(const nlohmann::ordered_json& entries) {
  std::string canon;
  for (const auto& e : entries) {
    for (int p : e.at("lambda")) canon += std::to_string(p) + ",";
    canon += "|";
    for (int p : e.at("mu")) canon += std::to_string(p) + ",";
    canon += "|" + e.at("value").get<std::string>() + "\n";
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex;
  os.width(16);
  os.fill('0');
  os << fnv1a64(canon);
  return os.str();
}

inline Partition partition_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array()) throw CacheError("character table: partition is not an array");
  std::vector<int> parts;
  for (const auto& p : j) {
    if (!p.is_number_integer()) throw CacheError("character table: non-integer part");
    parts.push_back(p.get<int>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw CacheError(std::string("character table: ") + e.what());
  }
}

}  // namespace detail

/// Full table chi^lambda(mu) for lambda, mu |- n.
inline nlohmann::ordered_json character_table_json(int n) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  const auto parts = partitions_of(n);
  for (const auto& lambda : parts)
    for (const auto& mu : parts)
      entries.push_back({{"lambda", lambda.parts()},
                         {"mu", mu.parts()},
                         {"value", std::to_string(mn_character(lambda, mu))}});
  nlohmann::ordered_json doc;
  doc["format"] = kCharacterTableFormat;
  doc["version"] = kCharacterTableVersion;
  doc["n"] = n;
  doc["entries"] = entries;
  doc["checksum"] = detail::checksum_of(entries);
  return doc;
}

/// Validates a table document; returns its n. Nothing is inserted.
inline int validate_character_table(const nlohmann::ordered_json& doc,
                                    std::optional<int> expected_n = std::nullopt) {
  if (!doc.is_object() || !doc.contains("format") || doc["format"] != kCharacterTableFormat)
    throw CacheError("character table: unknown format");
  if (!doc.contains("version") || !doc["version"].is_number_integer())
    throw CacheError("character table: missing version");
  if (doc["version"].get<int>() != kCharacterTableVersion)
    throw CacheError("character table: version mismatch (found " + doc["version"].dump() +
                     ", expected " + std::to_string(kCharacterTableVersion) + ")");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw CacheError("character table: missing n");
  const int n = doc["n"].get<int>();
  if (expected_n && n != *expected_n)
    throw CacheError("character table: holds n = " + std::to_string(n) + ", expected " +
                     std::to_string(*expected_n));
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw CacheError("character table: missing entries");
  const auto& entries = doc["entries"];
  if (!doc.contains("checksum") || !doc["checksum"].is_string())
    throw CacheError("character table: missing checksum");
  try {
    if (doc["checksum"].get<std::string>() != detail::checksum_of(entries))
      throw CacheError("character table: checksum failure");
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(std::string("character table: malformed entry: ") + e.what());
  }
  const std::size_t p = partitions_of(n).size();
  if (entries.size() != p * p) throw CacheError("character table: wrong number of entries");
  for (const auto& e : entries) {
    Partition lambda = detail::partition_from_json(e.at("lambda"));
    Partition mu = detail::partition_from_json(e.at("mu"));
    if (lambda.size() != n || mu.size() != n) throw CacheError("character table: partition of the wrong size");
    const auto& v = e.at("value").get<std::string>();
    std::size_t used = 0;
    try {
      (void)std::stoll(v, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != v.size()) throw CacheError("character table: value is not an integer");
  }
  return n;
}

/// Validates, then inserts every value into the memo. A value that
/// contradicts one already in the memo is an error.
inline int load_character_table(const nlohmann::ordered_json& doc,
                                 std::optional<int> expected_n = std::nullopt) {
  const int n = validate_character_table(doc, expected_n);
  auto& memo = character_memo();
  for (const auto& e : doc["entries"]) {
    CharacterMemo::Key key{e["lambda"].get<std::vector<int>>(), e["mu"].get<std::vector<int>>()};
    if (!memo.insert(key, std::stoll(e["value"].get<std::string>())))
      throw CacheError("character table: cached value contradicts the computed one");
  }
  return n;
}

inline std::filesystem::path character_table_path(const std::filesystem::path& dir, int n) {
  return dir / ("chartable-n" + std::to_string(n) + ".json");
}

/// The explicit directory if given, else the environment override, else none.
inline std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

inline nlohmann::ordered_json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CacheError("cannot open " + path.string());
  try {
    return nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw CacheError(path.string() + ": " + e.what());
  }
}

/// Writes the table for n. An existing file that fails validation is left
/// untouched and reported.
inline std::filesystem::path dump_character_table(const std::filesystem::path& dir, int n) {
  const auto path = character_table_path(dir, n);
  if (std::filesystem::exists(path)) validate_character_table(read_json_file(path), n);
  std::filesystem::create_directories(dir);
  const auto doc = character_table_json(n);
  std::ofstream out(path);
  if (!out) throw CacheError("cannot write " + path.string());
  out << doc.dump(1) << "\n";
  return path;
}

/// Loads the cached table for n if the file exists; returns whether it did.
inline bool load_character_table_file(const std::filesystem::path& dir, int n) {
  const auto path = character_table_path(dir, n);
  if (!std::filesystem::exists(path)) return false;
  load_character_table(read_json_file(path), n);
  return true;
}

}  // namespace hooklie
