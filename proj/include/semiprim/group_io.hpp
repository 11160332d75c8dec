#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "semiprim/perm.hpp"

/**
 * @file group_io.hpp
 * @brief Reader/writer for the `.perm` generator-file format.
 *
 * Format (UTF-8 text): first significant line is `degree N`; every following
 * non-empty line whose first non-blank character is not `#` is one generator,
 * written as N space-separated 1-based image points. The writer emits the
 * canonical form (no comments, single spaces, trailing newline), so
 * write(read(f)) reproduces f up to comment/whitespace normalization.
 */

namespace semiprim {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &source, std::size_t line,
             const std::string &message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " +
                           message),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

struct PermFile {
  Point degree = 0;
  std::vector<Perm> generators;
};

namespace detail {

inline bool is_comment_or_blank(const std::string &line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r')
      continue;
    return c == '#';
  }
  return true;
}

inline std::vector<std::uint64_t> parse_numbers(const std::string &source,
                                                std::size_t line_no,
                                                const std::string &line) {
  std::vector<std::uint64_t> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) {
    std::uint64_t value = 0;
    for (char c : tok) {
      if (c < '0' || c > '9')
        throw ParseError(source, line_no, "expected integer, got '" + tok + "'");
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
      if (value > UINT32_MAX)
        throw ParseError(source, line_no, "integer out of range: '" + tok + "'");
    }
    out.push_back(value);
  }
  return out;
}

} // namespace detail

inline PermFile read_perm_stream(std::istream &in,
                                 const std::string &source = "<stream>") {
  PermFile file;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_comment_or_blank(line))
      continue;

    if (!header_seen) {
      std::istringstream iss(line);
      std::string keyword;
      std::uint64_t n = 0;
      if (!(iss >> keyword >> n) || keyword != "degree" || n == 0 ||
          n > UINT32_MAX)
        throw ParseError(source, line_no, "expected header 'degree N'");
      std::string rest;
      if (iss >> rest)
        throw ParseError(source, line_no, "trailing tokens after header");
      file.degree = static_cast<Point>(n);
      header_seen = true;
      continue;
    }

    auto nums = detail::parse_numbers(source, line_no, line);
    if (nums.size() != file.degree)
      throw ParseError(source, line_no,
                       "expected " + std::to_string(file.degree) +
                           " images, got " + std::to_string(nums.size()));
    std::vector<Point> images(file.degree);
    for (Point i = 0; i < file.degree; ++i) {
      if (nums[i] < 1 || nums[i] > file.degree)
        throw ParseError(source, line_no,
                         "image " + std::to_string(nums[i]) +
                             " out of range 1.." + std::to_string(file.degree));
      images[i] = static_cast<Point>(nums[i] - 1);
    }
    try {
      file.generators.emplace_back(std::move(images));
    } catch (const std::invalid_argument &) {
      throw ParseError(source, line_no, "image sequence is not a bijection");
    }
  }

  if (!header_seen)
    throw ParseError(source, line_no, "missing 'degree N' header");
  return file;
}

inline PermFile read_perm_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open file: " + path);
  return read_perm_stream(in, path);
}

inline void write_perm_stream(std::ostream &out, Point degree,
                              const std::vector<Perm> &generators) {
  out << "degree " << degree << "\n";
  for (const Perm &g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("write_perm_stream: degree mismatch");
    for (Point x = 0; x < degree; ++x) {
      if (x)
        out << ' ';
      out << g[x] + 1;
    }
    out << "\n";
  }
}

inline void write_perm_file(const std::string &path, Point degree,
                            const std::vector<Perm> &generators) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot open file for writing: " + path);
  write_perm_stream(out, degree, generators);
}

/// Canonical text form of a generator set (same bytes the file writer emits).
inline std::string perm_file_text(Point degree,
                                  const std::vector<Perm> &generators) {
  std::ostringstream oss;
  write_perm_stream(oss, degree, generators);
  return oss.str();
}

} // namespace semiprim
