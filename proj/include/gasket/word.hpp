#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gasket {

// Finite word over {0,1,2} addressing the cell K_w = F_w(K). The empty word
// addresses the whole gasket. Digits are stored most-significant first:
// appending a digit descends one level.
class Word {
 public:
  Word() = default;
  explicit Word(std::string_view digits);
  Word(std::initializer_list<int> digits);
  static Word repeated(int digit, int count);
  static Word from_index(std::uint64_t index, int level);

  int size() const { return static_cast<int>(d_.size()); }
  bool empty() const { return d_.empty(); }
  int at(int i) const { return d_[static_cast<std::size_t>(i)]; }
  int back() const { return d_.back(); }

  void append(int digit);
  void pop_back() { d_.pop_back(); }
  Word concat(const Word& tail) const;
  Word prefix(int len) const;
  // Digits after the first `len`.
  Word suffix_from(int len) const;

  bool is_prefix_of(const Word& other) const;
  // Number of leading digits equal to `digit`.
  int leading_run(int digit) const;
  bool all_equal(int digit) const;

  // Base-3 cell index at this word's level (first digit most significant).
  std::uint64_t index() const;

  std::string str() const;

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<std::uint8_t> d_;
};

// The point F_w q_corner. The pair carries orientation: operations that say
// "from K_w" use exactly this word, so (0,1) and (1,0) denote the same point
// with opposite orientations.
struct VertexAddress {
  Word word;
  int corner = 0;

  bool operator==(const VertexAddress&) const = default;
};

// "w:i", e.g. "01:2"; ":0" is the boundary point q_0.
VertexAddress parse_address(const std::string& s);
std::string address_str(const VertexAddress& a);

// Canonical form of the same geometric point: boundary points become
// (empty, i); junction points keep the lexicographically smaller word of the
// two minimal addresses. Idempotent.
VertexAddress canonicalize(VertexAddress a);

// The other minimal-length address of a junction point, none for q_0,q_1,q_2.
std::optional<VertexAddress> twin(const VertexAddress& a);

// Addresses (w,0), (w,1), (w,2) of the corners of K_w.
std::array<VertexAddress, 3> corner_addresses(const Word& w);

// Minimal |w| over the addresses of the point; the point is in V_n iff
// level <= n.
int level_of(const VertexAddress& a);

bool is_boundary_point(const VertexAddress& a);

// The level-n cells containing the point, each paired with the corner index
// the point occupies there when n >= level (one entry for boundary points,
// two for junctions). For n < level the point is interior to a single cell
// and the corner index is meaningless (-1).
std::vector<VertexAddress> covering_corners(const VertexAddress& a, int n);

// Just the words of covering_corners.
std::vector<Word> cells_containing(const VertexAddress& a, int n);

}  // namespace gasket
