#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numsg/arith.hpp"
#include "numsg/verify.hpp"

namespace numsg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInvalidInput = 2;

inline constexpr std::uint64_t kDefaultSeed = 20140101;

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// "6,15,7" -> {6, 15, 7}. Errors: EmptyInput, InvalidArgument.
std::vector<Int> parse_generators(std::string_view text);

/// "(2,3);(2,5)" -> {(2, 3), (2, 5)} as (q, p) pairs. Errors: InvalidArgument.
std::vector<std::pair<Int, Int>> parse_steps(std::string_view text);

CommandResult cmd_info(std::string_view gens, bool json);
CommandResult cmd_apery(std::string_view gens, std::optional<Int> base, bool json);
CommandResult cmd_table(std::string_view gens, bool json);
CommandResult cmd_hilbert(std::string_view gens, bool json);
CommandResult cmd_glue(std::string_view s1, std::string_view s2, Int p, Int q, bool analyze, bool json);
CommandResult cmd_verify(std::string_view theorem, const verify::SamplerConfig& config, std::uint64_t seed,
                         bool json);
CommandResult cmd_free(std::string_view steps, bool json);

/// Full command line without the program name, e.g. {"info", "6,15,7"}.
CommandResult run(const std::vector<std::string>& args);

}  // namespace numsg::cli
