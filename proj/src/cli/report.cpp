#include "coiso/cli/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace coiso::cli {

std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "error";
}

void Report::check(std::string name, bool ok, std::vector<std::string> witness) {
  checks.push_back({std::move(name), ok ? Status::pass : Status::fail, ok ? std::vector<std::string>{} : std::move(witness)});
}

void Report::error(std::string name, const std::string& message) {
  checks.push_back({std::move(name), Status::error, {message}});
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::pass; });
}

std::string Report::text() const {
  std::ostringstream out;
  out << "command: " << command << "\n";
  out << "structure: " << structure << "\n";
  for (const auto& [k, v] : info) out << k << ": " << v << "\n";
  for (const Check& c : checks) {
    std::string tag = status_name(c.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    out << tag << " " << c.name << "\n";
    for (const auto& w : c.witness) out << "  witness: " << w << "\n";
  }
  out << "conventions:\n";
  for (const auto& c : conventions) out << "  " << c << "\n";
  out << "result: " << (passed() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["structure"] = structure;
  j["info"] = nlohmann::ordered_json::array();
  for (const auto& [k, v] : info) j["info"].push_back({{"key", k}, {"value", v}});
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : checks) j["checks"].push_back({{"name", c.name}, {"status", status_name(c.status)}, {"witness", c.witness}});
  j["conventions"] = conventions;
  j["result"] = passed() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

}  // namespace coiso::cli
