#include "jetalg/report.hpp"

#include <json.hpp>
#include <sstream>

#include "jetalg/pbw.hpp"

#ifndef JETALG_VERSION
#define JETALG_VERSION "0.0.0"
#endif

namespace jetalg {

const char* version() { return JETALG_VERSION; }

std::size_t Report::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 1 : 0;
  return n;
}

std::string Report::to_json(int indent) const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["tool"] = "jetalg";
  j["version"] = version();
  j["suite"] = suite;
  j["seed"] = seed;
  j["inputs"] = inputs;
  j["pbw_order"] = kPBWOrder;
  j["summary"] = {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}};
  ordered_json list = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json r;
    r["id"] = c.id;
    r["statement"] = c.statement;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    r["params"] = params;
    r["status"] = c.pass ? "pass" : "fail";
    if (!c.pass) r["witness"] = {{"repro", c.repro}, {"detail", c.detail}};
    list.push_back(std::move(r));
  }
  j["checks"] = list;
  return j.dump(indent) + "\n";
}

std::string Report::to_text(bool verbose) const {
  std::ostringstream out;
  for (const auto& c : checks) {
    if (c.pass && !verbose) continue;
    out << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.statement << "\n";
    if (!c.pass) {
      if (!c.detail.empty()) out << "    detail: " << c.detail << "\n";
      out << "    repro:  " << c.repro << "\n";
    }
  }
  out << "suite " << suite << " seed " << seed << ": " << passed() << "/" << checks.size() << " checks passed";
  if (failed() > 0) out << ", " << failed() << " failed";
  out << "\n";
  return out.str();
}

}  // namespace jetalg
