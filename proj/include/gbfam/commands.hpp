#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gbfam/session.hpp"

namespace gbfam {

enum class Command {
  Gb,
  Initial,
  Coeffs,
  Contract,
  FlatLocus,
  GoodPoint,
  Specialize,
  IsoLocus,
  FiniteLocus,
  Saturate,
  QuolemCheck,
  MonoCoeffs,
  MonoFiber,
  MonoDiagram,
};

std::optional<Command> command_from_name(std::string_view name);
std::string command_name(Command c);

struct CommandOptions {
  std::string ideal;    // empty -> the sole ideal of the session
  std::string point;    // named point or "a=1,b=0"
  std::string prime;    // named prime or "(gens)"
  std::string element;  // localizing element for saturate
  std::string window;   // "RxC"
  std::string q;        // prime for mono-fiber
};

// Structured report; the JSON form is the source of truth and the text
// form is derived from it, so render(json) round-trips.
struct Report {
  nlohmann::ordered_json data;
};

Report execute_command(Session& session, Command cmd,
                       const CommandOptions& opts);

enum class Format { Text, Json };

std::string render(const Report& report, Format format);

// Full command-line entry point; returns the process exit status
// (0 success, 1 usage, 2 parse diagnostics, 3 analysis preconditions).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gbfam
