#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "protometric/classify.hpp"
#include "protometric/labeled_matrix.hpp"
#include "protometric/transforms.hpp"
#include "protometric/verdict.hpp"

namespace protometric::io {

enum class Format { csv, json, text };

std::optional<Format> parse_format(std::string_view name);
std::string_view to_string(Format format);

/// JSON when the first non-blank character is '{', CSV otherwise.
Format detect_format(std::string_view text);

/// Shortest decimal that parses back to the identical double.
std::string format_number(double value);

/// CSV: optional header row and optional leading label column. A first row
/// with an empty first cell, or with no numeric cell at all, is a header.
/// Rows start with a label when the header has a corner cell or when the
/// first body cell is not numeric. Missing labels become x1..xn.
/// JSON: {"labels": [...] (optional), "matrix": [[...], ...]}.
LabeledMatrix parse_matrix(std::string_view text, Format format);
LabeledMatrix parse_matrix(std::string_view text);

/// Canonical form: labels always written; CSV gets a corner cell.
std::string serialize_matrix(const LabeledMatrix& m, Format format);

/// Two-column CSV (label,value, optional header) or a JSON object.
LabelFunction parse_label_function(std::string_view text);
std::string serialize_label_function(const LabelFunction& f, Format format);

std::string serialize_report(const ClassificationReport& report, Format format);
std::string serialize_verdict(const PropertyVerdict& verdict, std::string_view property,
                              Format format);

/// {"d": <matrix>, "f": {label: value, ...}}
std::string serialize_decomposition(const Decomposition& parts);
Decomposition parse_decomposition(std::string_view text);
/// True when `text` is a JSON object with "d" and "f" members.
bool looks_like_decomposition(std::string_view text);

std::string serialize_zero_coordinates(const ZeroCoordinates& coords);
std::string serialize_preorder(const PreorderResult& preorder, Format format);

}  // namespace protometric::io
