#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "ahp/core.hpp"

namespace ahp {

enum class MatrixKind { Pcm, Reciprocal };

std::string_view to_string(MatrixKind kind);
std::optional<MatrixKind> parse_kind(std::string_view text);

/// A matrix as read from disk, before validation into a core type.
struct MatrixFile {
  MatrixKind kind;
  RawMatrix matrix;
};

/// Parses either of the two accepted layouts, picked by the first
/// non-blank byte:
///
///   '{'   structured text: {"kind": "pcm" | "reciprocal", "matrix": [[...]]}
///   else  CSV: one row per line, comma-separated decimal literals, no
///         header; blank lines are ignored and fractions are rejected.
///
/// CSV input is read as a comparison matrix unless `kind_override` says
/// otherwise; the override also wins over the "kind" field. Parse errors
/// throw Error(ParseError) naming the 1-based row and column.
MatrixFile parse_matrix_text(std::string_view text,
                             std::optional<MatrixKind> kind_override = {});

/// Reads `path` and forwards to parse_matrix_text. An unreadable file is a
/// ParseError.
MatrixFile read_matrix_file(const std::filesystem::path& path,
                            std::optional<MatrixKind> kind_override = {});

/// Decimal rendering with 15 significant digits, independent of locale.
std::string format_number(double value);

/// CSV layout accepted by parse_matrix_text, newline-terminated rows.
std::string format_matrix_csv(const RawMatrix& matrix);

}  // namespace ahp
