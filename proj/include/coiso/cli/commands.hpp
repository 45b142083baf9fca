#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coiso/cli/report.hpp"
#include "coiso/cli/structure_file.hpp"

namespace coiso::cli {

struct Options {
  std::uint64_t seed = 1;
  int order = -1;  // command default when negative
  int max_arity = 3;
  std::optional<std::string> section;  // "u=x, p=1" overrides the file's section
};

Report cmd_check_jacobi(const StructureFile& f);
Report cmd_brackets(const StructureFile& f, const Options& o);
Report cmd_mc(const StructureFile& f, const Options& o);
Report cmd_formal(const StructureFile& f, const Options& o);
Report cmd_gauge(const StructureFile& f, const Options& o);
Report cmd_poissonize(const StructureFile& f, const Options& o);
Report cmd_ohpark(const StructureFile& f, const Options& o);

std::vector<std::string> conventions();

// Exit codes: 0 every check passed, 1 some check failed, 2 malformed input or usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coiso::cli
