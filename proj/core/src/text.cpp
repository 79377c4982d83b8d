#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "setpart/partition.hpp"

namespace setpart {

namespace {

std::string join_elements(std::span<const int> elems) {
  const bool compact = std::all_of(elems.begin(), elems.end(), [](int e) { return e >= 0 && e < 10; });
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(elems[i]);
  }
  return out;
}

std::string join_blocks(const std::vector<Block>& blocks) {
  bool compact = true;
  for (const auto& b : blocks) {
    compact = compact && std::all_of(b.begin(), b.end(), [](int e) { return e < 10; });
  }
  std::string out;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (j > 0) out += '/';
    for (std::size_t i = 0; i < blocks[j].size(); ++i) {
      if (!compact && i > 0) out += ',';
      out += std::to_string(blocks[j][i]);
    }
  }
  return out;
}

int parse_int(std::string_view token, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument("bad integer '" + std::string(token) + "' in '" +
                                std::string(context) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Digit string, or comma-separated integers when a comma is present.
Word parse_elements(std::string_view text, std::string_view context) {
  Word out;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      auto comma = text.find(',', start);
      out.push_back(parse_int(trim(text.substr(start, comma - start)), context));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("bad character '" + std::string(1, c) + "' in '" +
                                    std::string(context) + "'");
      }
      out.push_back(c - '0');
    }
  }
  return out;
}

}  // namespace

std::string format_word(std::span<const int> word) { return join_elements(word); }
std::string format_rgf(const Rgf& w) { return join_elements(w.letters()); }
std::string format_permutation(const Permutation& p) { return join_elements(p.word()); }
std::string format_partition(const SetPartition& p) { return join_blocks(p.blocks()); }
std::string format_generic_partition(const GenericPartition& g) { return join_blocks(g.blocks()); }

Word parse_word(std::string_view text) { return parse_elements(trim(text), text); }

Rgf parse_rgf(std::string_view text) { return Rgf(parse_word(text)); }

Permutation parse_permutation(std::string_view text) { return Permutation(parse_word(text)); }

SetPartition parse_partition(std::string_view text) {
  const std::string_view body = trim(text);
  std::vector<Block> blocks;
  int n = 0;
  if (!body.empty()) {
    std::size_t start = 0;
    while (true) {
      auto slash = body.find('/', start);
      Block b = parse_elements(trim(body.substr(start, slash - start)), text);
      if (b.empty()) throw std::invalid_argument("empty block in '" + std::string(text) + "'");
      n += static_cast<int>(b.size());
      blocks.push_back(std::move(b));
      if (slash == std::string_view::npos) break;
      start = slash + 1;
    }
  }
  try {
    return SetPartition(n, std::move(blocks));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("'" + std::string(text) + "': " + e.what());
  }
}

}  // namespace setpart
