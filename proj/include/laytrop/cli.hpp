#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "laytrop/layered.hpp"

namespace laytrop::cli {

enum class Format { Json, Csv };

struct CommandRequest {
  std::string subcommand;  // eval | trop | explode | roots | locus | layering | essential | congruence | kapranov
  std::vector<std::string> inputs;  // polynomial texts, or the congruence JSON path
  LFlavor layers = LFlavor::NaturalInf;
  bool laurent = false;
  std::optional<std::string> point;
  std::optional<std::string> grid;
  std::optional<std::string> grid_layers;
  std::string locus_mode = "corner";  // corner | combined
  std::string var = "L";
  std::size_t degree = 3;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  Format format = Format::Json;
  unsigned threads = 1;
};

/// Exit status: 0 success, 1 domain error or failed verification, 2 usage or syntax error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Dispatches an already validated request.
int execute(const CommandRequest& req, std::ostream& out, std::ostream& err);

}  // namespace laytrop::cli
