#pragma once

#include <filesystem>
#include <string>

#include "framekit/family.hpp"

namespace framekit::io {

/// Family file layout (JSON):
///   {
///     "field":  "R" | "C",
///     "n":      dimension,
///     "points": [ {"weight": w, "value": [...]}, ... ],
///     "meta":   {"label": str, "tail_bound": num}   (optional)
///   }
/// A value entry is a plain number for field "R" and a [re, im] pair for
/// field "C". Numbers are emitted in shortest round-trip decimal form, so a
/// write/read cycle reproduces the family value-identically.

/// Parses a family file. Throws InputError naming the file and, where it
/// applies, the offending point for: unreadable file, malformed JSON,
/// missing or mistyped fields, wrong value arity, non-finite numbers,
/// negative weights, or a complex entry that is not a [re, im] pair.
WeightedFamily read_family(const std::filesystem::path& path);

/// Serializes a family. Throws InputError when the destination cannot be
/// written.
void write_family(const WeightedFamily& fam, const std::filesystem::path& path);

/// In-memory equivalents used by the structured CLI output and the tests.
std::string family_to_json_text(const WeightedFamily& fam);
WeightedFamily family_from_json_text(const std::string& text, const std::string& origin);

}  // namespace framekit::io
