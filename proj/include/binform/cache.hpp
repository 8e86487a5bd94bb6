#pragma once

// Content-addressed cache for expensive symbolic results. A cache entry is
// keyed by (operation name, parameters, engine version) and stores the
// canonical serialization of a polynomial together with a content hash;
// entries that fail the hash check are silently recomputed.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <string>

#include "binform/serialize.hpp"

namespace binform {

inline constexpr int kEngineVersion = 1;

namespace detail {

inline std::filesystem::path& cache_dir_override() {
  static std::filesystem::path p;
  return p;
}

inline std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

inline std::string fnv1a_hex(std::string_view payload) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

inline std::string sanitize_key(std::string_view s) {
  std::string out;
  for (char c : s)
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-') ? c : '_';
  return out;
}

}  // namespace detail

// Overrides the cache directory for this process (CLI --cache-dir).
inline void set_cache_dir(const std::filesystem::path& p) {
  std::lock_guard<std::mutex> lock(detail::cache_mutex());
  detail::cache_dir_override() = p;
}

inline std::filesystem::path cache_dir() {
  {
    std::lock_guard<std::mutex> lock(detail::cache_mutex());
    if (!detail::cache_dir_override().empty()) return detail::cache_dir_override();
  }
  if (const char* env = std::getenv("BINFORM_CACHE_DIR"); env && *env)
    return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "binform";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "binform";
  return std::filesystem::path(".binform-cache");
}

// Loads the cached value for (op, params) or computes and stores it.
// Corrupt entries are recomputed and overwritten.
inline Poly cached_poly(const std::string& op, const std::string& params,
                        const std::function<Poly()>& compute) {
  namespace fs = std::filesystem;
  const std::string fname = detail::sanitize_key(op) +
                            (params.empty() ? "" : "-" + detail::sanitize_key(params)) +
                            "-v" + std::to_string(kEngineVersion) + ".bfc";
  const fs::path dir = cache_dir();
  const fs::path file = dir / fname;

  {
    std::lock_guard<std::mutex> lock(detail::cache_mutex());
    std::ifstream in(file);
    if (in) {
      std::string magic, op_line, params_line, hash_line, payload;
      std::getline(in, magic);
      std::getline(in, op_line);
      std::getline(in, params_line);
      std::getline(in, hash_line);
      std::getline(in, payload);
      if (magic == "binform-cache 1" && op_line == op && params_line == params &&
          hash_line == detail::fnv1a_hex(payload)) {
        try {
          return parse_poly(payload);
        } catch (const std::exception&) {
          // fall through to recompute
        }
      }
    }
  }

  Poly value = compute();

  std::lock_guard<std::mutex> lock(detail::cache_mutex());
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!ec) {
    const std::string payload = poly_to_string(value);
    fs::path tmp = file;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << "binform-cache 1\n"
          << op << "\n"
          << params << "\n"
          << detail::fnv1a_hex(payload) << "\n"
          << payload << "\n";
    }
    fs::rename(tmp, file, ec);
  }
  return value;
}

}  // namespace binform
