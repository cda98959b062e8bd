#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rankcalc::cli {

enum class OutputMode { human, structured };

struct CommandRequest {
  std::string subcommand;
  std::string input = "-";  // presentation for `validate`; "-" is stdin
  std::string category;     // --cat
  std::string rank;         // --rank
  std::string values;       // --values
  std::string output;       // -o
  std::string morphism;     // NAME, id:EXPR or basis:X:Y:k
  std::string object;
  std::string instance;
  std::vector<std::string> triangles;
  int n = 0;
  std::optional<std::size_t> window;
  bool serial = false;
  OutputMode mode = OutputMode::human;
};

struct ParsedCommand {
  std::optional<CommandRequest> request;
  int exit_code = 0;  // meaningful when request is empty (help or usage error)
};

/// `args` excludes the program name. `env_format` is the value of
/// RANKCALC_FORMAT, if set; --format overrides it.
ParsedCommand parse_command_line(const std::vector<std::string>& args, const char* env_format, std::ostream& out,
                                 std::ostream& err);

/// Exit status: 0 success, 1 domain failure (invalid presentation, unsolvable
/// values, refused conversion, failed axioms), 2 I/O, parse or usage error.
int run(const CommandRequest& request, std::istream& in, std::ostream& out, std::ostream& err);

int main_entry(int argc, char** argv);

}  // namespace rankcalc::cli
