#include "kgr/report.hpp"

#include <json.hpp>

namespace kgr {

std::string render_line(const CheckLine& line) {
  std::string s = "IDENTITY " + line.identity + " " + line.instance + " ";
  if (line.ok)
    s += "OK";
  else
    s += "FAIL(" + line.witness + ")";
  return s;
}

std::string render_text(const Report& report) {
  std::string out;
  for (const auto& l : report.lines) {
    out += render_line(l);
    out += '\n';
  }
  return out;
}

std::string render_records(const Report& report) {
  std::string out;
  for (const auto& l : report.lines) {
    nlohmann::json j;
    j["identity"] = l.identity;
    j["instance"] = l.instance;
    j["status"] = l.ok ? "OK" : "FAIL";
    if (!l.ok) j["witness"] = l.witness;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace kgr
