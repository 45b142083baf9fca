#pragma once

#include <string>
#include <utility>
#include <vector>

namespace coiso::cli {

enum class Status { pass, fail, error };

struct Check {
  std::string name;
  Status status = Status::pass;
  std::vector<std::string> witness;
};

// Deterministic: no timings, entries kept in insertion order.
struct Report {
  std::string command;
  std::string structure;
  std::vector<std::pair<std::string, std::string>> info;
  std::vector<Check> checks;
  std::vector<std::string> conventions;

  void add(std::string key, std::string value) { info.emplace_back(std::move(key), std::move(value)); }
  void check(std::string name, bool ok, std::vector<std::string> witness = {});
  void error(std::string name, const std::string& message);
  bool passed() const;
  int exit_code() const { return passed() ? 0 : 1; }

  std::string text() const;
  std::string json() const;
};

std::string status_name(Status s);

}  // namespace coiso::cli
