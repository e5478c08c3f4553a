#include "yao4/io.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace yao4 {

namespace {

coord_t pow10_ticks(int scale) {
  coord_t v = 1;
  for (int i = 0; i < scale; ++i) v *= 10;
  return v;
}

}  // namespace

coord_t parse_decimal(const std::string& text, int scale) {
  if (text.empty()) throw parse_error("empty coordinate");
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw parse_error("bare sign in coordinate '" + text + "'");

  coord_t int_part = 0;
  bool any_digit = false;
  const coord_t limit = kCoordLimit;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    int_part = int_part * 10 + (text[pos] - '0');
    if (int_part > limit) throw parse_error("coordinate '" + text + "' out of range");
    any_digit = true;
    ++pos;
  }
  coord_t frac_part = 0;
  int frac_digits = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      frac_part = frac_part * 10 + (text[pos] - '0');
      ++frac_digits;
      any_digit = true;
      if (frac_digits > scale) {
        throw parse_error("coordinate '" + text + "' has more than " + std::to_string(scale) +
                          " decimal places");
      }
      ++pos;
    }
  }
  if (!any_digit || pos != text.size()) {
    throw parse_error("malformed coordinate '" + text + "'");
  }
  for (int i = frac_digits; i < scale; ++i) frac_part *= 10;
  const coord_t unit = pow10_ticks(scale);
  if (int_part > limit / unit) throw parse_error("coordinate '" + text + "' out of range");
  coord_t ticks = int_part * unit + frac_part;
  if (ticks > limit) throw parse_error("coordinate '" + text + "' out of range");
  return negative ? -ticks : ticks;
}

std::string format_decimal(coord_t ticks, int scale) {
  const coord_t unit = pow10_ticks(scale);
  const bool negative = ticks < 0;
  const coord_t mag = negative ? -ticks : ticks;
  const coord_t int_part = mag / unit;
  coord_t frac = mag % unit;
  std::string out = negative ? "-" : "";
  out += std::to_string(int_part);
  if (frac != 0) {
    std::string digits(std::size_t(scale), '0');
    coord_t f = frac;
    for (int i = scale - 1; i >= 0; --i) {
      digits[std::size_t(i)] = char('0' + f % 10);
      f /= 10;
    }
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

std::string serialize_point_set(const PointSet& ps) {
  std::string out = "# scale=" + std::to_string(ps.scale) + "\n";
  for (int i = 0; i < ps.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += format_decimal(ps[i].x, ps.scale);
    out += ',';
    out += format_decimal(ps[i].y, ps.scale);
    out += '\n';
  }
  return out;
}

PointSet parse_point_set(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int scale = 9;
  std::vector<Point> pts;
  int expected_index = 0;
  bool saw_header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string header = line.substr(1);
      const std::size_t eq = header.find('=');
      if (!saw_header && header.find("scale") != std::string::npos && eq != std::string::npos) {
        try {
          scale = std::stoi(header.substr(eq + 1));
        } catch (...) {
          throw parse_error("line " + std::to_string(line_no) + ": bad scale header");
        }
        if (scale < 0 || scale > 18) {
          throw parse_error("line " + std::to_string(line_no) + ": scale out of range");
        }
        saw_header = true;
      }
      continue;
    }
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    if (c2 == std::string::npos) {
      throw parse_error("line " + std::to_string(line_no) + ": expected 'index,x,y'");
    }
    int index = -1;
    try {
      index = std::stoi(line.substr(0, c1));
    } catch (...) {
      throw parse_error("line " + std::to_string(line_no) + ": bad index");
    }
    if (index != expected_index) {
      throw parse_error("line " + std::to_string(line_no) + ": index " + std::to_string(index) +
                        " out of order (expected " + std::to_string(expected_index) + ")");
    }
    ++expected_index;
    try {
      pts.push_back(Point{parse_decimal(line.substr(c1 + 1, c2 - c1 - 1), scale),
                          parse_decimal(line.substr(c2 + 1), scale)});
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (pts.empty()) throw parse_error("no points in file");
  return make_point_set(std::move(pts), scale);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void write_point_set_file(const std::string& path, const PointSet& ps) {
  write_text_file(path, serialize_point_set(ps));
}

PointSet read_point_set_file(const std::string& path) {
  return parse_point_set(read_text_file(path));
}

std::string landmarks_sidecar_path(const std::string& point_path) {
  const std::size_t slash = point_path.find_last_of("/\\");
  const std::size_t dot = point_path.find_last_of('.');
  const std::string base = (dot == std::string::npos || (slash != std::string::npos && dot < slash))
                               ? point_path
                               : point_path.substr(0, dot);
  return base + ".landmarks.json";
}

void write_landmarks_file(const std::string& path, const std::map<std::string, int>& landmarks) {
  nlohmann::json doc(landmarks);  // std::map keys are already sorted
  write_text_file(path, doc.dump(2) + "\n");
}

std::map<std::string, int> read_landmarks_file(const std::string& path) {
  const nlohmann::json doc = nlohmann::json::parse(read_text_file(path));
  std::map<std::string, int> out;
  for (const auto& [key, value] : doc.items()) out[key] = value.get<int>();
  return out;
}

std::string point_set_digest(const PointSet& ps) {
  const std::string text = serialize_point_set(ps);
  std::uint64_t hash = 1469598103934665603ull;
  for (const unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  std::array<char, 17> hex;
  std::snprintf(hex.data(), hex.size(), "%016llx", (unsigned long long)hash);
  return std::string(hex.data(), 16);
}

}  // namespace yao4
