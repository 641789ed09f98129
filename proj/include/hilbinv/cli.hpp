#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hilbinv/hilbcone.hpp"

/// The command layer behind the `hilbinv` executable. Every command renders
/// into strings so output is reproducible and testable without a process
/// boundary.
///
/// Exit codes: 0 success, 1 usage or domain error, 2 a mathematically
/// surprising finding (some C_n > 1, or full and appendix modes disagree).
namespace hilbinv::cli {

enum class Format { Text, Json, Csv };

Format parse_format(std::string_view name);
hilbcone::WallMode parse_mode(std::string_view name);

struct CommandResult {
  std::string out;
  std::string err;
  int exit_code = 0;
};

struct ScanArgs {
  std::int64_t n_min = 2;
  std::int64_t n_max = 200;
  hilbcone::WallMode mode = hilbcone::WallMode::Appendix;
  Format format = Format::Text;
  unsigned jobs = 1;
};

/// Largest n covered by the published computation; rows above it are
/// labelled as an extension.
inline constexpr std::int64_t kVerifiedMaxN = 200;

CommandResult cmd_scan(const ScanArgs& args);
CommandResult cmd_walls(std::int64_t n, hilbcone::WallMode mode, Format format, bool verify);
CommandResult cmd_sigma(std::int64_t n, Format format, bool verify);
CommandResult cmd_strata(std::int64_t n, Format format, bool verify);
CommandResult cmd_lemmas(std::int64_t n, std::optional<std::int64_t> bound, Format format);

enum class PellKind { Fundamental, Negative, Mixed };
PellKind parse_pell_kind(std::string_view name);

/// Mixed solves p x^2 - d y^2 = -1 and needs `p`.
CommandResult cmd_pell(const std::string& d, PellKind kind, std::optional<std::string> p, Format format,
                       bool verify);
CommandResult cmd_eichler(std::int64_t n, Format format, bool verify);
CommandResult cmd_formulas(std::int64_t n, Format format, bool verify);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view field);

}  // namespace hilbinv::cli
