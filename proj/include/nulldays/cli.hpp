#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace nulldays::cli {

// Process exit status contract.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

enum class OutputMode { Text, Json };

struct Environment {
  // Value of NULLDAYS_COLOR: "auto", "always" or "never". Unset means auto.
  std::optional<std::string> color;
  bool stdout_is_tty = false;

  static Environment from_process();
};

struct Streams {
  std::ostream& out;  // data
  std::ostream& err;  // diagnostics
  bool color = false;
};

int cmd_weekday(const std::string& date_text, OutputMode mode, const Streams& io);
int cmd_explain(const std::string& date_text, OutputMode mode, const Streams& io);
int cmd_verify(const std::string& from_text, const std::string& to_text, OutputMode mode,
               unsigned jobs, const Streams& io);
int cmd_bench(std::int64_t iterations, OutputMode mode, const Streams& io);
int cmd_table(OutputMode mode, const Streams& io);

// Parses arguments (args[0] is the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace nulldays::cli
