#include "treecount/graph6.hpp"

#include "treecount/error.hpp"

namespace treecount {

namespace {

constexpr int kMaxShortN = 62;

// Bit k of the upper triangle in graph6 column order: x(0,1), x(0,2), x(1,2), ...
std::size_t bit_index(int i, int j) {
  return static_cast<std::size_t>(j) * (j - 1) / 2 + i;
}

}  // namespace

bool SimpleGraph::is_tree() const {
  if (n < 1 || static_cast<int>(edges.size()) != n - 1) return false;
  try {
    (void)Tree::from_edges(n, edges);
  } catch (const DomainError&) {
    return false;
  }
  return true;
}

Tree SimpleGraph::to_tree() const {
  try {
    return Tree::from_edges(n, edges);
  } catch (const DomainError& e) {
    throw ParseError(std::string("graph is not a tree: ") + e.what());
  }
}

SimpleGraph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("graph6: empty input");

  const int header = static_cast<unsigned char>(text[0]);
  if (header == 126) throw ParseError("graph6: long-form header (n > 62) is not supported");
  if (header < 63 || header > 63 + kMaxShortN)
    throw ParseError("graph6: bad header byte " + std::to_string(header));
  SimpleGraph g;
  g.n = header - 63;

  const std::size_t bits = static_cast<std::size_t>(g.n) * (g.n - 1) / 2;
  const std::size_t chunks = (bits + 5) / 6;
  if (text.size() - 1 < chunks)
    throw ParseError("graph6: truncated bit vector (need " + std::to_string(chunks) +
                     " bytes, got " + std::to_string(text.size() - 1) + ")");
  if (text.size() - 1 > chunks) throw ParseError("graph6: trailing bytes after the bit vector");

  std::vector<char> adjacency_bits(chunks * 6, 0);
  for (std::size_t c = 0; c < chunks; ++c) {
    const int byte = static_cast<unsigned char>(text[c + 1]);
    if (byte < 63 || byte > 126)
      throw ParseError("graph6: character out of range at offset " + std::to_string(c + 1));
    const int value = byte - 63;
    for (int b = 0; b < 6; ++b) adjacency_bits[c * 6 + b] = static_cast<char>((value >> (5 - b)) & 1);
  }
  for (std::size_t k = bits; k < adjacency_bits.size(); ++k)
    if (adjacency_bits[k]) throw ParseError("graph6: nonzero padding bits");

  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i)
      if (adjacency_bits[bit_index(i, j)]) g.edges.emplace_back(i, j);
  return g;
}

Tree parse_graph6_tree(std::string_view text) { return parse_graph6(text).to_tree(); }

std::string emit_graph6(const Tree& t) {
  const int n = t.size();
  if (n > kMaxShortN) throw DomainError("graph6: only n <= 62 is supported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<char> adjacency_bits((bits + 5) / 6 * 6, 0);
  for (const Edge& e : t.edges()) adjacency_bits[bit_index(e.u, e.v)] = 1;

  std::string out(1, static_cast<char>(63 + n));
  for (std::size_t c = 0; c * 6 < adjacency_bits.size(); ++c) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = (value << 1) | adjacency_bits[c * 6 + b];
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

}  // namespace treecount
