#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gasket/word.hpp"

using namespace gasket;

TEST_CASE("word parsing, printing, ordering") {
  CHECK(Word("012").str() == "012");
  CHECK(Word().str() == "");
  CHECK(Word("012").size() == 3);
  CHECK(Word("01") < Word("02"));
  CHECK(Word("10") < Word("12"));
  CHECK(Word("0").is_prefix_of(Word("012")));
  CHECK(!Word("1").is_prefix_of(Word("012")));
  CHECK(Word("0012").suffix_from(2).str() == "12");
  CHECK(Word::repeated(2, 3).str() == "222");
  CHECK(Word("0211").leading_run(0) == 1);
  CHECK(Word("1100").all_equal(1) == false);
  CHECK(Word::from_index(Word("0212").index(), 4) == Word("0212"));
}

TEST_CASE("address parsing") {
  const VertexAddress a = parse_address("01:2");
  CHECK(a.word == Word("01"));
  CHECK(a.corner == 2);
  CHECK(address_str(a) == "01:2");
  CHECK(parse_address(":0").word.empty());
  CHECK_THROWS(parse_address("013"));
  CHECK_THROWS(parse_address("01:3"));
}

TEST_CASE("canonicalize examples") {
  CHECK(canonicalize({Word("00"), 0}) == VertexAddress{Word(), 0});
  CHECK(canonicalize({Word("0"), 1}) == VertexAddress{Word("0"), 1});
  // the two minimal addresses of the point are (10,2) and (12,0)
  CHECK(canonicalize({Word("10"), 2}) == VertexAddress{Word("10"), 2});
  CHECK(canonicalize({Word("12"), 0}) == VertexAddress{Word("10"), 2});
}

TEST_CASE("twin examples") {
  CHECK(*twin({Word("0"), 1}) == VertexAddress{Word("1"), 0});
  CHECK(!twin({Word(), 2}).has_value());
  CHECK(*twin({Word("01"), 2}) == VertexAddress{Word("02"), 1});
}

TEST_CASE("corner addresses") {
  const auto c = corner_addresses(Word("12"));
  CHECK(c[0] == VertexAddress{Word("12"), 0});
  CHECK(c[2] == VertexAddress{Word("12"), 2});
}

TEST_CASE("cells containing a point") {
  CHECK(cells_containing({Word(), 0}, 2) == std::vector<Word>{Word("00")});
  CHECK(cells_containing({Word("0"), 1}, 1) ==
        std::vector<Word>{Word("0"), Word("1")});
  CHECK(cells_containing({Word("0"), 1}, 2) ==
        std::vector<Word>{Word("01"), Word("10")});
  // below the point's level the point is interior to a single cell
  CHECK(cells_containing({Word("0"), 1}, 0) == std::vector<Word>{Word()});
}

TEST_CASE("canonicalization properties up to level 8") {
  for (int len = 0; len <= 8; ++len) {
    std::size_t count = 1;
    for (int i = 0; i < len; ++i) count *= 3;
    for (std::size_t c = 0; c < count; ++c) {
      const Word w = Word::from_index(c, len);
      for (int corner = 0; corner < 3; ++corner) {
        const VertexAddress a{w, corner};
        const VertexAddress canon = canonicalize(a);
        CHECK(canonicalize(canon) == canon);
        const auto t = twin(a);
        if (is_boundary_point(a)) {
          CHECK(!t.has_value());
          CHECK(cells_containing(a, len).size() == 1);
        } else {
          REQUIRE(t.has_value());
          CHECK(canonicalize(*twin(*t)) == canon);
          CHECK(level_of(a) == canon.word.size());
          CHECK(cells_containing(a, level_of(a)).size() == 2);
        }
      }
    }
  }
}
