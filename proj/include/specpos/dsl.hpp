#pragma once

#include <string>

#include "specpos/poset.hpp"

namespace specpos {

struct ParsedSpace {
  std::string name;
  SpectralPoset poset;
};

// Reads the .space text format:
//
//   # comment, runs to the end of the line
//   space NAME
//   point ID [ID ...]
//   cover LOWER < UPPER
//   infinite ID
//
// Tokens are separated by whitespace, so ids may contain punctuation such
// as "(v,w,x,y-1)"; a token starting with '#' comments out the rest of its
// line. `cover A < B` declares an immediate specialization: A lies in the
// closure of B with nothing strictly between. The `space` line must come
// first; every id must be introduced by a `point` line before any other
// use; re-declaring a point, repeating a cover, or repeating an `infinite`
// flag is an error.
//
// Malformed input raises ParseError carrying the offending line and
// column. Structural defects only visible once the whole document is read
// (a cycle through the covers, a cover already implied by a longer path)
// are rethrown as their library error with the position of the responsible
// `cover` line attached.
ParsedSpace parse_space(const std::string& text);

// The poset alone, for callers that do not need the name.
SpectralPoset parse(const std::string& text);

// A .space document that reproduces the poset byte-for-byte stably: points
// one per line in stored order, covers in stored order, infinite flags
// last. parse_space(render(p, name)) yields p and name again.
std::string render(const SpectralPoset& poset, const std::string& name);

}  // namespace specpos
