#pragma once

// Text fixtures for the worked examples: two rotation blocks at n=6, the
// n=6 snake boundary table, the 57-codeword Kendall block at n=7 and the
// n=7 snake boundary table.

#include <optional>
#include <string>
#include <vector>

#include "rankmod/blocks.hpp"
#include "rankmod/constructions.hpp"

namespace rankmod::cli {

struct Figure {
  std::string file_name;
  std::string text;
};

/// "# <title> size=<M>", optional "# transitions: ..." line, then one
/// codeword per line.
[[nodiscard]] std::string render_block(const NoncyclicBlock& block, const std::string& title,
                                       bool list_transitions);

/// First and last codeword of every block, the boundary transitions between
/// them, and the closing row sigma_M = sigma_0.
[[nodiscard]] std::string render_boundary_table(const ChainedSnake& snake);

/// fig1.txt .. fig5.txt.
[[nodiscard]] std::vector<Figure> render_figures();

struct FigureMismatch {
  std::string file_name;
  std::size_t line = 0;  // 1-based; 0 when the file is missing
  std::string expected;
  std::string actual;
};

/// Compares `generated` against the text of the committed file.
[[nodiscard]] std::optional<FigureMismatch> first_difference(const Figure& generated,
                                                             const std::string& committed);

}  // namespace rankmod::cli
