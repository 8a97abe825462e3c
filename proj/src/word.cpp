#include "gasket/word.hpp"

#include <cassert>
#include <stdexcept>

#include "gasket/errors.hpp"

namespace gasket {

namespace {

int parse_digit(char c) {
  if (c < '0' || c > '2')
    throw std::invalid_argument(std::string("word digit out of range: ") + c);
  return c - '0';
}

int check_corner(int i) {
  if (i < 0 || i > 2) throw std::invalid_argument("corner index out of range");
  return i;
}

}  // namespace

Word::Word(std::string_view digits) {
  d_.reserve(digits.size());
  for (char c : digits) d_.push_back(static_cast<std::uint8_t>(parse_digit(c)));
}

Word::Word(std::initializer_list<int> digits) {
  d_.reserve(digits.size());
  for (int x : digits) {
    assert(x >= 0 && x <= 2);
    d_.push_back(static_cast<std::uint8_t>(x));
  }
}

Word Word::repeated(int digit, int count) {
  assert(digit >= 0 && digit <= 2 && count >= 0);
  Word w;
  w.d_.assign(static_cast<std::size_t>(count), static_cast<std::uint8_t>(digit));
  return w;
}

Word Word::from_index(std::uint64_t index, int level) {
  Word w;
  w.d_.assign(static_cast<std::size_t>(level), 0);
  for (int i = level - 1; i >= 0; --i) {
    w.d_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(index % 3);
    index /= 3;
  }
  return w;
}

void Word::append(int digit) {
  assert(digit >= 0 && digit <= 2);
  d_.push_back(static_cast<std::uint8_t>(digit));
}

Word Word::concat(const Word& tail) const {
  Word w = *this;
  w.d_.insert(w.d_.end(), tail.d_.begin(), tail.d_.end());
  return w;
}

Word Word::prefix(int len) const {
  assert(len >= 0 && len <= size());
  Word w;
  w.d_.assign(d_.begin(), d_.begin() + len);
  return w;
}

Word Word::suffix_from(int len) const {
  assert(len >= 0 && len <= size());
  Word w;
  w.d_.assign(d_.begin() + len, d_.end());
  return w;
}

bool Word::is_prefix_of(const Word& other) const {
  if (size() > other.size()) return false;
  for (int i = 0; i < size(); ++i)
    if (d_[static_cast<std::size_t>(i)] != other.d_[static_cast<std::size_t>(i)])
      return false;
  return true;
}

int Word::leading_run(int digit) const {
  int n = 0;
  while (n < size() && at(n) == digit) ++n;
  return n;
}

bool Word::all_equal(int digit) const { return leading_run(digit) == size(); }

std::uint64_t Word::index() const {
  assert(size() <= 40);
  std::uint64_t idx = 0;
  for (std::uint8_t d : d_) idx = idx * 3 + d;
  return idx;
}

std::string Word::str() const {
  std::string s;
  s.reserve(d_.size());
  for (std::uint8_t d : d_) s.push_back(static_cast<char>('0' + d));
  return s;
}

VertexAddress parse_address(const std::string& s) {
  auto pos = s.rfind(':');
  if (pos == std::string::npos)
    throw std::invalid_argument("address must be \"w:i\", got '" + s + "'");
  Word w(std::string_view(s).substr(0, pos));
  std::string corner = s.substr(pos + 1);
  if (corner.size() != 1)
    throw std::invalid_argument("address corner must be one digit: '" + s + "'");
  return VertexAddress{w, check_corner(parse_digit(corner[0]))};
}

std::string address_str(const VertexAddress& a) {
  return a.word.str() + ":" + std::to_string(a.corner);
}

VertexAddress canonicalize(VertexAddress a) {
  check_corner(a.corner);
  // F_{wi} q_i = F_w q_i: strip trailing copies of the corner digit.
  while (!a.word.empty() && a.word.back() == a.corner) a.word.pop_back();
  if (a.word.empty()) return a;  // boundary point q_corner
  // Junction: the twin swaps the last digit with the corner; keep the
  // lexicographically smaller word.
  const int last = a.word.back();
  Word other = a.word;
  other.pop_back();
  other.append(a.corner);
  if (other < a.word) return VertexAddress{other, last};
  return a;
}

std::optional<VertexAddress> twin(const VertexAddress& a) {
  VertexAddress c = canonicalize(a);
  if (c.word.empty()) return std::nullopt;
  const int last = c.word.back();
  Word other = c.word;
  other.pop_back();
  other.append(c.corner);
  return VertexAddress{other, last};
}

std::array<VertexAddress, 3> corner_addresses(const Word& w) {
  return {VertexAddress{w, 0}, VertexAddress{w, 1}, VertexAddress{w, 2}};
}

int level_of(const VertexAddress& a) { return canonicalize(a).word.size(); }

bool is_boundary_point(const VertexAddress& a) {
  return canonicalize(a).word.empty();
}

std::vector<VertexAddress> covering_corners(const VertexAddress& a, int n) {
  if (n < 0) throw std::invalid_argument("covering_corners: negative level");
  VertexAddress c = canonicalize(a);
  const int lvl = c.word.size();
  if (n < lvl) {
    // Interior to a single level-n cell (the point is not a level-n vertex).
    return {VertexAddress{c.word.prefix(n), -1}};
  }
  if (c.word.empty()) {
    return {VertexAddress{Word::repeated(c.corner, n), c.corner}};
  }
  VertexAddress t = *twin(c);
  std::vector<VertexAddress> out;
  out.push_back(VertexAddress{
      c.word.concat(Word::repeated(c.corner, n - lvl)), c.corner});
  out.push_back(VertexAddress{
      t.word.concat(Word::repeated(t.corner, n - lvl)), t.corner});
  return out;
}

std::vector<Word> cells_containing(const VertexAddress& a, int n) {
  std::vector<Word> cells;
  for (const auto& cc : covering_corners(a, n)) cells.push_back(cc.word);
  return cells;
}

}  // namespace gasket
