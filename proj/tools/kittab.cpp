#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "kittab/acceptance.hpp"
#include "kittab/errors.hpp"
#include "kittab/session.hpp"

namespace {

enum Exit { kOk = 0, kComputationFailure = 1, kParseError = 2, kTimeout = 3 };

int run(const std::string& path, bool json, double timeout_secs) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << path << ": cannot open\n";
    return kParseError;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  kittab::Session session;
  try {
    session = kittab::parse_session(buffer.str());
  } catch (const kittab::ParseError& e) {
    std::cerr << path << ":" << e.line() << ":" << e.column() << ": " << e.message() << "\n";
    return kParseError;
  }
  kittab::RunOptions options{json};
  auto task = std::packaged_task<kittab::RunSummary()>(
      [&] { return kittab::run_session(session, std::cout, options); });
  auto result = task.get_future();
  std::thread worker(std::move(task));
  if (timeout_secs > 0 &&
      result.wait_for(std::chrono::duration<double>(timeout_secs)) == std::future_status::timeout) {
    std::cerr << "timeout after " << timeout_secs << " s\n";
    std::cerr.flush();
    std::_Exit(kTimeout);
  }
  worker.join();
  return result.get().ok() ? kOk : kComputationFailure;
}

int selftest(bool slow) {
  using namespace kittab::acceptance;
  bool ok = true;
  for (const auto& r : run_acceptance({slow, std::nullopt})) {
    std::cout << format_line(r) << std::endl;
    ok &= r.verdict != kittab::Verdict::fail;
  }
  return ok ? kOk : kComputationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kitt ideals, generic residuals and their verification"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  double timeout = 0;
  auto* run_cmd = app.add_subcommand("run", "execute a session file");
  run_cmd->add_option("file", file, "session file")->required();
  run_cmd->add_flag("--json", json, "one JSON object per command");
  run_cmd->add_option("--timeout-secs", timeout, "abort after N seconds (exit 3)")
      ->check(CLI::PositiveNumber);

  bool slow = false;
  auto* self_cmd = app.add_subcommand("selftest", "run the acceptance criteria");
  self_cmd->add_flag("--slow", slow, "include the slow tier");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }
  if (*run_cmd) return run(file, json, timeout);
  return selftest(slow);
}
