#include "ahp/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

namespace ahp {
namespace {

constexpr std::string_view kBlank = " \t\r";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(kBlank);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kBlank);
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_error(std::size_t row, std::size_t col,
                              std::string_view what) {
  throw Error(ErrorCode::ParseError,
              fmt::format("row {}, column {}: {}", row, col, what));
}

double parse_decimal(std::string_view field, std::size_t row,
                     std::size_t col) {
  if (field.empty()) parse_error(row, col, "empty field");
  if (field.find('/') != std::string_view::npos) {
    parse_error(row, col,
                fmt::format("'{}' is a fraction; write a decimal instead",
                            field));
  }
  double value = 0.0;
  const char* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    parse_error(row, col, fmt::format("'{}' is not a decimal number", field));
  }
  return value;
}

RawMatrix parse_csv(std::string_view text) {
  RawMatrix rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    if (trim(line).empty()) continue;

    std::vector<double> row;
    std::size_t col = 0;
    while (true) {
      ++col;
      const auto comma = line.find(',');
      row.push_back(parse_decimal(trim(line.substr(0, comma)), line_no, col));
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) parse_error(1, 1, "no matrix rows found");
  return rows;
}

MatrixFile parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                fmt::format("malformed structured matrix at byte {}", e.byte));
  }
  if (!doc.is_object()) parse_error(1, 1, "top level must be an object");

  MatrixFile out{MatrixKind::Pcm, {}};
  if (const auto it = doc.find("kind"); it != doc.end()) {
    const auto kind = it->is_string()
                          ? parse_kind(it->get<std::string>())
                          : std::nullopt;
    if (!kind) parse_error(1, 1, "\"kind\" must be \"pcm\" or \"reciprocal\"");
    out.kind = *kind;
  }

  const auto matrix = doc.find("matrix");
  if (matrix == doc.end() || !matrix->is_array()) {
    parse_error(1, 1, "\"matrix\" must be an array of rows");
  }
  for (std::size_t i = 0; i < matrix->size(); ++i) {
    const auto& row = (*matrix)[i];
    if (!row.is_array()) parse_error(i + 1, 1, "row is not an array");
    std::vector<double> values;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_number()) parse_error(i + 1, j + 1, "entry is not a number");
      values.push_back(row[j].get<double>());
    }
    out.matrix.push_back(std::move(values));
  }
  if (out.matrix.empty()) parse_error(1, 1, "no matrix rows found");
  return out;
}

}  // namespace

std::string_view to_string(MatrixKind kind) {
  return kind == MatrixKind::Pcm ? "pcm" : "reciprocal";
}

std::optional<MatrixKind> parse_kind(std::string_view text) {
  if (text == "pcm") return MatrixKind::Pcm;
  if (text == "reciprocal") return MatrixKind::Reciprocal;
  return std::nullopt;
}

MatrixFile parse_matrix_text(std::string_view text,
                             std::optional<MatrixKind> kind_override) {
  const auto first = text.find_first_not_of(" \t\r\n");
  MatrixFile out = (first != std::string_view::npos && text[first] == '{')
                       ? parse_json(text)
                       : MatrixFile{MatrixKind::Pcm, parse_csv(text)};
  if (kind_override) out.kind = *kind_override;
  return out;
}

MatrixFile read_matrix_file(const std::filesystem::path& path,
                            std::optional<MatrixKind> kind_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::ParseError,
                fmt::format("cannot read '{}'", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_text(buffer.str(), kind_override);
}

std::string format_number(double value) {
  return fmt::format("{:.15g}", value);
}

std::string format_matrix_csv(const RawMatrix& matrix) {
  std::string out;
  for (const auto& row : matrix) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ',';
      out += format_number(row[j]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace ahp
