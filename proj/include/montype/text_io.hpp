#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "montype/classify.hpp"
#include "montype/complex.hpp"
#include "montype/ideal.hpp"

namespace montype {

enum class InputKind { Ideal, Complex };

struct ParsedInput {
  InputKind kind = InputKind::Ideal;
  SimplicialComplex base;  // facets as written, without patches
  std::vector<PatchSpec> patches;
  SimplicialComplex complex;  // base plus patches
  SquarefreeIdeal ideal;      // facet ideal of `complex`
};

/// One generator per line, `x1*x2*x3`; `#` starts a comment.
SquarefreeIdeal parse_ideal(std::string_view text);

/// One facet per line, `{1,2,3}` or `1 2 3`, plus optional
/// `patch {3,8,9} covers 2 3` lines (facet numbers 1-based).
ParsedInput parse_complex(std::string_view text);

/// Chooses by the first content line: `x...` is an ideal, `{` or a digit a
/// complex. Parse failures throw ParseError naming the line.
ParsedInput parse_input(std::string_view text);
ParsedInput read_input(const std::string& path);

std::string format_patch(const PatchSpec& patch);

}  // namespace montype
