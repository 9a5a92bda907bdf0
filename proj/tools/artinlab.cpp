// artinlab: command-line front end. Exit codes are listed in the README.

#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "artinlab/report.hpp"

#ifndef ARTINLAB_FIXTURES
#define ARTINLAB_FIXTURES "fixtures"
#endif

namespace {

std::atomic<bool> interrupted{false};

extern "C" void on_interrupt(int) { interrupted.store(true); }

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string read_file(const std::string& path) {
  if (path == "-") return slurp(std::cin);
  std::ifstream in(path);
  if (!in) artinlab::fail(artinlab::ErrorKind::InvalidArgument, "cannot open " + path);
  return slurp(in);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace artinlab;
  CLI::App app{"Solvability invariants of finite-dimensional quotient algebras K[x]/I"};
  std::string vars, order, mode, format = "text", fixture, file, fixtures_dir = ARTINLAB_FIXTURES;
  std::optional<int> cap;
  std::vector<std::string> input;
  app.add_option("--vars", vars, "Variables, e.g. x,y,z");
  app.add_option("--order", order, "lex | deglex | degrevlex, optionally :priority such as deglex:y>x");
  app.add_option("--mode", mode, "analyze | moduli | groebner | derivations | split");
  app.add_option("--format", format, "text | structured");
  app.add_option("--truncation-cap", cap, "Largest localisation exponent tried before giving up");
  app.add_option("--fixture", fixture, "Run a named fixture from the corpus");
  app.add_option("--fixtures-dir", fixtures_dir, "Fixture directory");
  app.add_option("--file", file, "Job file ('-' for stdin)");
  app.add_option("input", input, "Generators (or p for moduli/split)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_code(ErrorKind::Parse);
  }

  std::stop_source stop;
  std::signal(SIGINT, on_interrupt);
  std::jthread watcher([&stop](std::stop_token self) {
    while (!self.stop_requested()) {
      if (interrupted.load()) {
        stop.request_stop();
        return;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(50));
    }
  });

  try {
    JobSpec job;
    if (!fixture.empty()) {
      job = parse_fixture_job(read_file(fixtures_dir + "/" + fixture + ".json"));
    } else if (!file.empty() || (input.empty() && vars.empty())) {
      job = parse_job(read_file(file.empty() ? "-" : file));
    } else {
      if (vars.empty()) throw ParseError("--vars is required with inline input", 0);
      const auto vs = parse_varset(vars);
      job.variables.assign(vs->names().begin(), vs->names().end());
    }
    if (!input.empty()) {
      std::string joined;
      for (const auto& s : input) joined += (joined.empty() ? "" : ", ") + s;
      job.input = joined;
    }
    if (!vars.empty() && (!fixture.empty() || !file.empty())) {
      const auto vs = parse_varset(vars);
      job.variables.assign(vs->names().begin(), vs->names().end());
    }
    if (!order.empty()) job.order = order;
    if (!mode.empty()) job.mode = parse_mode(mode);
    if (cap) job.truncation_cap = *cap;
    if (job.input.empty()) throw ParseError("no polynomial input", 0);

    const auto fmt = parse_format(format);
    const auto report = run(job, stop.get_token());
    std::cout << serialize(report, fmt);
    return 0;
  } catch (const Error& e) {
    std::cerr << "artinlab: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "artinlab: internal error: " << e.what() << "\n";
    return exit_code(ErrorKind::InvariantViolation);
  }
}
