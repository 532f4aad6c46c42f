#include "specpos/dsl.hpp"

#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "specpos/errors.hpp"

namespace specpos {

namespace {

struct Token {
  std::string text;
  SourcePos pos;
};

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
}

// One vector of tokens per directive line; comment-only and blank lines
// are dropped.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 1;
  size_t i = 0;
  while (i <= text.size()) {
    size_t end = text.find('\n', i);
    if (end == std::string::npos) end = text.size();
    std::vector<Token> tokens;
    size_t k = i;
    while (k < end) {
      if (is_space(text[k])) {
        ++k;
        continue;
      }
      if (text[k] == '#') break;
      size_t start = k;
      while (k < end && !is_space(text[k])) ++k;
      tokens.push_back(Token{text.substr(start, k - start),
                             SourcePos{line_no, static_cast<int>(start - i) + 1}});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (end == text.size()) break;
    i = end + 1;
    ++line_no;
  }
  return lines;
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

[[noreturn]] void fail(const std::string& message, const Token& at) {
  throw ParseError(message, at.pos);
}

}  // namespace

ParsedSpace parse_space(const std::string& text) {
  std::vector<std::vector<Token>> lines = tokenize(text);

  bool space_seen = false;
  std::string name;
  SourcePos space_pos{1, 1};

  std::vector<std::string> points;
  std::map<std::string, SourcePos> point_pos;
  std::vector<std::pair<std::string, std::string>> covers;
  std::map<std::pair<std::string, std::string>, SourcePos> cover_pos;
  std::vector<std::string> flags;
  std::set<std::string> flagged;

  for (const auto& line : lines) {
    const Token& head = line.front();
    if (head.text == "space") {
      if (space_seen) fail("duplicate 'space' directive", head);
      if (line.size() < 2) fail("'space' needs a name", head);
      if (line.size() > 2) fail("'space' takes exactly one name", line[2]);
      space_seen = true;
      name = line[1].text;
      space_pos = head.pos;
      continue;
    }
    if (!space_seen) {
      fail("the 'space' directive must come before " + quoted(head.text),
           head);
    }
    if (head.text == "point") {
      if (line.size() < 2) fail("'point' needs at least one id", head);
      for (size_t k = 1; k < line.size(); ++k) {
        const Token& id = line[k];
        if (id.text == "<") fail("'<' is not a valid point id", id);
        if (!point_pos.emplace(id.text, id.pos).second) {
          fail("duplicate point " + quoted(id.text), id);
        }
        points.push_back(id.text);
      }
      continue;
    }
    if (head.text == "cover") {
      if (line.size() != 4 || line[2].text != "<") {
        const Token& at = line.size() > 4   ? line[4]
                          : line.size() > 2 ? line[2]
                                            : head;
        fail("'cover' takes the form: cover LOWER < UPPER", at);
      }
      for (int k : {1, 3}) {
        if (!point_pos.count(line[k].text)) {
          fail("unknown point " + quoted(line[k].text) +
                   " in cover (declare it with 'point' first)",
               line[k]);
        }
      }
      std::pair<std::string, std::string> cover{line[1].text, line[3].text};
      if (!cover_pos.emplace(cover, head.pos).second) {
        fail("duplicate cover " + quoted(cover.first + " < " + cover.second),
             head);
      }
      covers.push_back(std::move(cover));
      continue;
    }
    if (head.text == "infinite") {
      if (line.size() < 2) fail("'infinite' needs a point id", head);
      if (line.size() > 2) fail("'infinite' takes exactly one id", line[2]);
      const Token& id = line[1];
      if (!point_pos.count(id.text)) {
        fail("unknown point " + quoted(id.text) +
                 " in 'infinite' (declare it with 'point' first)",
             id);
      }
      if (!flagged.insert(id.text).second) {
        fail("duplicate 'infinite' flag for " + quoted(id.text), id);
      }
      flags.push_back(id.text);
      continue;
    }
    fail("unknown directive " + quoted(head.text), head);
  }

  if (!space_seen) {
    throw ParseError("missing 'space' directive", SourcePos{1, 1});
  }
  if (points.empty()) {
    throw ParseError("space " + quoted(name) + " declares no points",
                     space_pos);
  }

  try {
    return ParsedSpace{name, SpectralPoset::build(std::move(points),
                                                  std::move(covers), flags)};
  } catch (const NotReducedError& e) {
    throw NotReducedError(e.message(), e.cover(), cover_pos.at(e.cover()));
  } catch (const CycleError& e) {
    // Attach the earliest cover declaration on the offending cycle.
    const std::vector<std::string>& cycle = e.cycle();
    SourcePos best{0, 0};
    for (size_t k = 0; k < cycle.size(); ++k) {
      auto it = cover_pos.find({cycle[k], cycle[(k + 1) % cycle.size()]});
      if (it == cover_pos.end()) continue;
      if (best.line == 0 || it->second.line < best.line ||
          (it->second.line == best.line && it->second.column < best.column)) {
        best = it->second;
      }
    }
    if (best.line == 0) throw;  // defensive: no declaration matched
    throw CycleError(e.message(), cycle, best);
  }
}

SpectralPoset parse(const std::string& text) {
  return parse_space(text).poset;
}

std::string render(const SpectralPoset& poset, const std::string& name) {
  std::ostringstream out;
  out << "# A space lists points and immediate specializations: 'cover A < B'\n"
         "# puts A in the closure of B with nothing strictly between, so\n"
         "# minimal points are closed and maximal points are generic.\n";
  out << "space " << name << "\n";
  for (const auto& pt : poset.points()) out << "point " << pt << "\n";
  for (const auto& [lo, hi] : poset.cover_names()) {
    out << "cover " << lo << " < " << hi << "\n";
  }
  for (const auto& pt : poset.infinite_points()) {
    out << "infinite " << pt << "\n";
  }
  return out.str();
}

}  // namespace specpos
