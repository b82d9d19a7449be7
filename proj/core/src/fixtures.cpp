#include "jetalg/fixtures.hpp"

#include <map>
#include <mutex>

#include "jetalg/loader.hpp"

namespace jetalg::fixtures {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded();
}  // namespace detail

namespace {

bool is_atlas(std::string_view text) { return text.find("\"transitions\"") != std::string_view::npos; }

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::vector<std::string> chart_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : detail::embedded())
    if (!is_atlas(text)) out.emplace_back(name);
  return out;
}

std::vector<std::string> atlas_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : detail::embedded())
    if (is_atlas(text)) out.emplace_back(name);
  return out;
}

std::optional<std::string_view> source(std::string_view name) {
  for (const auto& [n, text] : detail::embedded())
    if (n == name) return text;
  return std::nullopt;
}

ChartPtr chart(const std::string& name) {
  static std::map<std::string, ChartPtr> cache;
  std::lock_guard<std::mutex> lock(cache_mutex());
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  auto text = source(name);
  if (!text || is_atlas(*text)) throw Error("unknown built-in chart '@" + name + "'");
  return cache.emplace(name, parse_chart(*text)).first->second;
}

Atlas atlas(const std::string& name) {
  static std::map<std::string, Atlas> cache;
  std::lock_guard<std::mutex> lock(cache_mutex());
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  auto text = source(name);
  if (!text || !is_atlas(*text)) throw Error("unknown built-in atlas '@" + name + "'");
  return cache.emplace(name, parse_atlas(*text)).first->second;
}

}  // namespace jetalg::fixtures
