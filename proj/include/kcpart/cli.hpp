#ifndef KCPART_CLI_HPP
#define KCPART_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kcpart {

// Everything one invocation resolved to after parsing: which subcommand,
// which ranges and options, where output goes.  Filled by run_cli and handed
// to the per-subcommand drivers; exposed for tests that want to poke a
// driver directly.
struct CommandConfig {
  std::string subcommand;       // table, count, scan, audit, max, verify
  std::string target;           // scan id / audit map / verify kind
  std::string format = "text";  // text, csv, json
  unsigned jobs = 1;
  long max_n = 100000;
  std::string cache_dir;        // empty = caching off
  std::string expect_path;      // empty = no expectation check

  int k = 0;
  int k_min = 2;
  int k_max = 10;
  long n = 0;
  long n_min = 1;
  long n_max = 11;
  long m_max = 0;
  long sum_max = 0;
  long a = 0;
  long a_max = 0;
  long c = 0;
  long d = 0;
  int split = 0;
  bool strong = false;
  bool brute = false;
  std::string variant = "color-preserving";
  std::vector<int> forbid;
  std::vector<int> require;
};

// Runs one command line (excluding argv[0]) against the given streams.
// Exit status: 0 success, 1 an embedded expectation failed (a verify that
// came out false, or an --expect file that did not match), 2 usage errors,
// capacity/scale limits, or cache validation failures.  All regular output
// goes to `out`, diagnostics to `err`; rendering is byte-deterministic for
// a given command line, independent of --jobs.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace kcpart

#endif
