#ifndef KITTAB_SESSION_HPP
#define KITTAB_SESSION_HPP

#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "kittab/free_module.hpp"
#include "kittab/ideal.hpp"

namespace kittab {

struct Location {
  int line = 1;
  int column = 1;
};

struct Argument {
  enum class Kind { ideal, matrix, count };
  Kind kind;
  /// Identifier or decimal literal as written.
  std::string text;
  Location where;
};

struct Node {
  enum class Kind { ring, ideal, matrix, scalar, command };
  Kind kind;
  /// Declared name, or the command name.
  std::string name;
  /// Command arguments, resolved against the declarations before them.
  std::vector<Argument> args;
  Location where;
};

/// Parsed session: one ring, declarations bound to values, commands in order.
struct Session {
  RingPtr ring;
  std::vector<Node> nodes;
  std::map<std::string, Ideal, std::less<>> ideals;
  std::map<std::string, PolyMatrix, std::less<>> matrices;
  std::map<std::string, std::size_t, std::less<>> scalars;

  std::size_t command_count() const;
};

/// Throws ParseError with the line and column of the offending token.
Session parse_session(std::string_view text);

/// Names of the commands `run` understands.
const std::vector<std::string>& command_names();

struct RunOptions {
  bool json = false;
};

struct RunSummary {
  std::size_t commands = 0;
  /// Commands that threw a computation error.
  std::size_t errors = 0;
  /// Reports with a failed check.
  std::size_t failed_reports = 0;
  bool ok() const { return errors == 0 && failed_reports == 0; }
};

/// Executes the commands in order, writing one block (text) or one JSON line
/// per command. Errors are written as structured failures and do not stop the run.
RunSummary run_session(const Session& session, std::ostream& out, const RunOptions& options = {});

}  // namespace kittab

#endif  // KITTAB_SESSION_HPP
