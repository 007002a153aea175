#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "qhopf/cli.hpp"

namespace qhopf {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

fs::path cache_dir() {
  if (const char* e = std::getenv("QHOPF_CACHE_DIR"); e && *e) return fs::path(e);
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "qhopf";
  return fs::path(".qhopf-cache");
}

fs::path cache_file(const fs::path& dir, int p) { return dir / ("straighten_p" + std::to_string(p) + ".json"); }

std::string render_cache(int p, const StraightTable& t) {
  ojson j;
  j["schema_version"] = kCacheSchema;
  j["p"] = p;
  ojson entries = ojson::array();
  for (auto& [key, terms] : t) {
    ojson e;
    e["a"] = key.first;
    e["b"] = key.second;
    ojson ts = ojson::array();
    for (auto& [idx, c] : terms) ts.push_back({{"E", idx.a}, {"F", idx.b}, {"K", idx.j}, {"c", c.str()}});
    e["terms"] = ts;
    entries.push_back(e);
  }
  j["entries"] = entries;
  return j.dump(1) + "\n";
}

std::optional<StraightTable> parse_cache(const std::string& text, int p, std::string* why) {
  auto bad = [&](const std::string& w) -> std::optional<StraightTable> {
    if (why) *why = w;
    return std::nullopt;
  };
  ojson j = ojson::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return bad("not valid JSON");
  if (!j.contains("schema_version") || j["schema_version"] != kCacheSchema) return bad("schema version mismatch");
  if (j.value("p", -1) != p) return bad("file is for another p");
  StraightTable out;
  try {
    for (auto& e : j.at("entries")) {
      std::vector<std::pair<PbwIndex, CycNum>> terms;
      for (auto& t : e.at("terms"))
        terms.push_back({{t.at("E").get<int>(), t.at("F").get<int>(), t.at("K").get<int>()},
                         CycNum::parse(t.at("c").get<std::string>())});
      out.push_back({{e.at("a").get<int>(), e.at("b").get<int>()}, std::move(terms)});
    }
  } catch (const std::exception& ex) {
    return bad(std::string("malformed entry: ") + ex.what());
  }
  if (int(out.size()) != p * p) return bad("expected " + std::to_string(p * p) + " entries");
  return out;
}

void cache_write(const fs::path& dir, int p) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw CacheError("cannot create cache directory " + dir.string());
  auto text = render_cache(p, Algebra::get(p)->table_entries());
  fs::path tmp = cache_file(dir, p);
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw CacheError("cache directory " + dir.string() + " is not writable");
    f << text;
    if (!f) throw CacheError("write failed in " + dir.string());
  }
  fs::rename(tmp, cache_file(dir, p), ec);
  if (ec) throw CacheError("cannot replace " + cache_file(dir, p).string() + ": " + ec.message());
}

StraightTable cache_load(const fs::path& dir, int p, std::ostream& log) {
  fs::path f = cache_file(dir, p);
  if (fs::exists(f)) {
    std::ifstream in(f, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string why;
    if (auto t = parse_cache(ss.str(), p, &why)) return *t;
    log << "warning: " << f.string() << ": " << why << "; rebuilding\n";
  }
  cache_write(dir, p);
  return Algebra::get(p)->table_entries();
}

int cache_clear(const fs::path& dir) {
  int n = 0;
  if (!fs::is_directory(dir)) return 0;
  static const std::regex name(R"(straighten_p\d+\.json(\.tmp)?)");
  for (auto& e : fs::directory_iterator(dir))
    if (std::regex_match(e.path().filename().string(), name)) {
      fs::remove(e.path());
      ++n;
    }
  return n;
}

std::vector<CacheEntryInfo> cache_info(const fs::path& dir) {
  std::vector<CacheEntryInfo> out;
  if (!fs::is_directory(dir)) return out;
  static const std::regex name(R"(straighten_p(\d+)\.json)");
  for (auto& e : fs::directory_iterator(dir)) {
    std::smatch m;
    std::string fn = e.path().filename().string();
    if (!std::regex_match(fn, m, name)) continue;
    CacheEntryInfo info;
    info.p = std::stoi(m[1]);
    info.bytes = fs::file_size(e.path());
    std::ifstream in(e.path(), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    if (auto t = parse_cache(ss.str(), info.p)) {
      info.valid = true;
      info.entries = int(t->size());
    }
    out.push_back(info);
  }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.p < b.p; });
  return out;
}

}  // namespace qhopf
