#pragma once
/**
 * Flat-file formats.
 *
 * Point set files are UTF-8 CSV: a header line "# scale=<k>" declaring the
 * number of decimal places, then one record "index,x,y" per point with
 * decimal coordinates. Indices must be 0..n-1 in order. Coordinates with
 * more than <k> decimals are a parse error; files without a header default
 * to scale 9. Serialization is canonical (trailing zeros trimmed), so
 * serializing a parsed canonical file reproduces it byte for byte.
 *
 * Landmark sidecars are JSON maps name -> vertex index, stored next to the
 * point file as <base>.landmarks.json.
 */

#include <cstdint>
#include <map>
#include <string>

#include "yao4/generate.hpp"
#include "yao4/point_set.hpp"

namespace yao4 {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "12.5" at scale 3 -> 12500 ticks. Rejects malformed text, more than
// `scale` decimals, and values beyond the coordinate limit.
coord_t parse_decimal(const std::string& text, int scale);

// Canonical decimal rendering of a tick count; trailing zeros trimmed.
std::string format_decimal(coord_t ticks, int scale);

std::string serialize_point_set(const PointSet& ps);
PointSet parse_point_set(const std::string& text);

void write_point_set_file(const std::string& path, const PointSet& ps);
PointSet read_point_set_file(const std::string& path);

// foo.csv -> foo.landmarks.json
std::string landmarks_sidecar_path(const std::string& point_path);
void write_landmarks_file(const std::string& path, const std::map<std::string, int>& landmarks);
std::map<std::string, int> read_landmarks_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// FNV-1a 64 digest of the canonical serialization, as 16 hex digits.
std::string point_set_digest(const PointSet& ps);

}  // namespace yao4
