#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "json.hpp"

namespace koszul::cli {

struct Options {
  std::string command;
  std::size_t max_degree = 6;
  /// Defaults to N + 1.
  std::optional<std::size_t> slack;
  /// "2", "3", "general" or "auto".
  std::string dim = "auto";
  std::optional<std::size_t> gldim;
  std::string format = "text";
};

struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Report for one command on the text of an algebra file.
nlohmann::ordered_json report(Options const& o, std::string const& file_text);

/// report() rendered in the requested format; errors become a diagnostic and
/// the exit code of their class.
Outcome run(Options const& o, std::string const& file_text);

std::string render_text(nlohmann::ordered_json const& j);

}  // namespace koszul::cli
