#include "montype/text_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "montype/error.hpp"

namespace montype {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view v) {
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
  return v;
}

// Non-empty lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + why);
}

long parse_number(std::string_view v, std::size_t line) {
  v = trim(v);
  long value = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (v.empty() || ec != std::errc() || p != v.data() + v.size()) {
    fail(line, "expected a number, got '" + std::string(v) + "'");
  }
  return value;
}

std::vector<Monomial::Entry> parse_generator(const Line& line, int& ambient) {
  std::vector<Monomial::Entry> entries;
  std::string_view rest = line.text;
  while (true) {
    const std::size_t star = rest.find('*');
    std::string_view factor = trim(rest.substr(0, star));
    if (factor.size() < 2 || factor[0] != 'x') fail(line.number, "bad factor '" + std::string(factor) + "'");
    factor.remove_prefix(1);
    long e = 1;
    if (auto caret = factor.find('^'); caret != std::string_view::npos) {
      e = parse_number(factor.substr(caret + 1), line.number);
      factor = factor.substr(0, caret);
    }
    const long v = parse_number(factor, line.number);
    if (v < 1 || v > 100000) fail(line.number, "variable index out of range");
    if (e < 1) fail(line.number, "exponent must be positive");
    entries.emplace_back(static_cast<Var>(v), static_cast<int>(e));
    ambient = std::max(ambient, static_cast<int>(v));
    if (star == std::string_view::npos) break;
    rest = rest.substr(star + 1);
  }
  return entries;
}

VertexSet parse_vertices(std::string_view text, std::size_t line) {
  text = trim(text);
  bool braced = false;
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') fail(line, "missing '}'");
    text = text.substr(1, text.size() - 2);
    braced = true;
  }
  VertexSet out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) ||
                                 (braced && text[pos] == ','))) {
      ++pos;
    }
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != ',') {
      ++end;
    }
    if (end > pos) {
      const long v = parse_number(text.substr(pos, end - pos), line);
      if (v < 1 || v > 100000) fail(line, "vertex out of range");
      out.push_back(static_cast<int>(v));
    }
    pos = end;
  }
  if (out.empty()) fail(line, "empty facet");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PatchSpec parse_patch(const Line& line) {
  std::string_view rest = trim(line.text.substr(5));
  const std::size_t close = rest.find('}');
  const std::size_t covers = rest.find("covers");
  if (rest.empty() || rest.front() != '{' || close == std::string_view::npos ||
      covers == std::string_view::npos || covers < close) {
    fail(line.number, "expected 'patch {..} covers i j'");
  }
  PatchSpec spec;
  spec.patch = parse_vertices(rest.substr(0, close + 1), line.number);
  std::istringstream pair{std::string(rest.substr(covers + 6))};
  long i = 0;
  long j = 0;
  std::string extra;
  if (!(pair >> i >> j) || (pair >> extra)) fail(line.number, "expected two facet numbers after 'covers'");
  if (i < 1 || j < 1) fail(line.number, "facet numbers are 1-based");
  spec.first = static_cast<std::size_t>(i - 1);
  spec.second = static_cast<std::size_t>(j - 1);
  return spec;
}

}  // namespace

SquarefreeIdeal parse_ideal(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::EmptyInput, "no generators");
  int ambient = 0;
  std::vector<std::vector<Monomial::Entry>> raw;
  for (const auto& line : lines) raw.push_back(parse_generator(line, ambient));
  std::vector<Monomial> gens;
  for (auto& entries : raw) gens.emplace_back(ambient, std::move(entries));
  return minimal_generators(gens);
}

ParsedInput parse_complex(std::string_view text) {
  const auto lines = content_lines(text);
  std::vector<VertexSet> facets;
  ParsedInput in;
  in.kind = InputKind::Complex;
  for (const auto& line : lines) {
    if (line.text.starts_with("patch")) {
      in.patches.push_back(parse_patch(line));
    } else {
      if (!in.patches.empty()) fail(line.number, "facets must precede patches");
      facets.push_back(parse_vertices(line.text, line.number));
    }
  }
  int n = 0;
  for (const auto& f : facets) n = std::max(n, f.back());
  for (const auto& p : in.patches) n = std::max(n, p.patch.back());
  in.base = build_complex(std::move(facets), n);
  in.complex = in.patches.empty() ? in.base : attach_patches(in.base, in.patches);
  in.ideal = facet_ideal(in.complex);
  return in;
}

ParsedInput parse_input(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::EmptyInput, "input has no content");
  const Line& first = lines.front();
  const char c = first.text.front();
  if (c == 'x') {
    ParsedInput in;
    in.kind = InputKind::Ideal;
    in.ideal = parse_ideal(text);
    in.complex = from_ideal(in.ideal);
    in.base = in.complex;
    return in;
  }
  if (c == '{' || std::isdigit(static_cast<unsigned char>(c))) return parse_complex(text);
  fail(first.number, "cannot tell whether this is an ideal or a complex");
}

ParsedInput read_input(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_input(buffer.str());
}

std::string format_patch(const PatchSpec& patch) {
  return "patch " + sets::to_string(patch.patch) + " covers " + std::to_string(patch.first + 1) + " " +
         std::to_string(patch.second + 1);
}

}  // namespace montype
