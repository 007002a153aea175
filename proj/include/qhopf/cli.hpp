#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhopf/pbw.hpp"
#include "qhopf/report.hpp"

namespace qhopf {

// ---------------------------------------------------------------------------
// structure-constant cache

inline constexpr int kCacheSchema = 1;
inline constexpr int kReportSchema = 1;

using StraightTable = std::vector<std::pair<std::pair<int, int>, std::vector<std::pair<PbwIndex, CycNum>>>>;

// QHOPF_CACHE_DIR, else $HOME/.cache/qhopf, else ./.qhopf-cache
std::filesystem::path cache_dir();
std::filesystem::path cache_file(const std::filesystem::path& dir, int p);

std::string render_cache(int p, const StraightTable& t);
// nullopt with a reason on schema mismatch or malformed content
std::optional<StraightTable> parse_cache(const std::string& text, int p, std::string* why = nullptr);

struct CacheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// writes the table for p; throws CacheError if the directory is not writable
void cache_write(const std::filesystem::path& dir, int p);
// reads the table for p; a stale or corrupt file is rebuilt with a warning on log
StraightTable cache_load(const std::filesystem::path& dir, int p, std::ostream& log);
int cache_clear(const std::filesystem::path& dir);  // number of files removed

struct CacheEntryInfo {
  int p = 0;
  int entries = 0;
  std::uintmax_t bytes = 0;
  bool valid = false;
};
std::vector<CacheEntryInfo> cache_info(const std::filesystem::path& dir);

// ---------------------------------------------------------------------------
// suites and reports

struct VerifyOptions {
  int p = 2, t = 1, zeta_k = 0;
  std::string suite = "all";  // cartan, qhopf, reps, unrolled, transport, all
  std::string S = "std";      // std or sym
  unsigned seed = 1;
  int jobs = 1;
  bool timings = true;  // false writes elapsed_ms as 0 for byte-identical reports
};

const std::vector<std::string>& suite_names();
// throws InvalidParameters on bad p, t, zeta, S or suite
Checks run_verify(const VerifyOptions& o);
std::string report_json(const VerifyOptions& o, const Checks& checks);

}  // namespace qhopf
