#include "figures.hpp"

#include <sstream>

#include "rankmod/ksnake.hpp"

namespace rankmod::cli {

namespace {

std::string row(const Permutation& p) { return p.to_string(); }

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

std::string render_block(const NoncyclicBlock& block, const std::string& title,
                         bool list_transitions) {
  std::ostringstream os;
  os << "# " << title << " size=" << block.size() << '\n';
  if (list_transitions) os << "# transitions: " << format_sequence(block.transitions) << '\n';
  for (const auto& p : block.codewords()) os << row(p) << '\n';
  return os.str();
}

std::string render_boundary_table(const ChainedSnake& snake) {
  const auto table = CodewordTable::from_code(snake.code);
  std::ostringstream os;
  os << "# snake n=" << snake.code.n() << " size=" << snake.code.size() << '\n';
  for (const auto& b : snake.blocks) {
    os << "sigma_" << b.first << " = " << row(table.permutation(b.first)) << '\n';
    os << "  => block";
    if (b.variant) os << " variant=" << static_cast<int>(*b.variant);
    os << '\n';
    const auto last = b.first + b.size - 1;
    os << "sigma_" << last << " = " << row(table.permutation(last)) << '\n';
    os << "  -> " << b.boundary << '\n';
  }
  os << "sigma_" << snake.code.size() << " = " << row(snake.code.start) << '\n';
  return os.str();
}

std::vector<Figure> render_figures() {
  const Permutation sigma0 = rmgc_snake_start(6);
  const Permutation lifted0 = kendall_lifted_start(7);
  const auto k5 = embedded_a5_snake();
  return {
      {"fig1.txt", render_block(rotation_block(sigma0, BlockVariant::preserve),
                                "rotation block n=6 variant=preserve", true)},
      {"fig2.txt", render_block(rotation_block(sigma0, BlockVariant::exchange),
                                "rotation block n=6 variant=exchange", true)},
      {"fig3.txt", render_boundary_table(rmgc_snake(6))},
      {"fig4.txt", render_block(kendall_block(lifted0, k5.transitions), "kendall block n=7", false)},
      {"fig5.txt", render_boundary_table(kendall_lifted_snake(7, k5))},
  };
}

std::optional<FigureMismatch> first_difference(const Figure& generated, const std::string& committed) {
  const auto want = lines_of(committed);
  const auto got = lines_of(generated.text);
  const std::size_t n = std::max(want.size(), got.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::string w = i < want.size() ? want[i] : "<end of file>";
    const std::string g = i < got.size() ? got[i] : "<end of file>";
    if (w != g) return FigureMismatch{generated.file_name, i + 1, w, g};
  }
  // Same lines; a trailing newline difference still breaks byte identity.
  if (committed != generated.text) {
    return FigureMismatch{generated.file_name, n, "<trailing bytes differ>", ""};
  }
  return std::nullopt;
}

}  // namespace rankmod::cli
