#include <doctest.h>

#include <set>

#include "algebrarium/algebra.hpp"
#include "algebrarium/cipher.hpp"
#include "algebrarium/cube.hpp"
#include "algebrarium/enigma.hpp"
#include "algebrarium/error.hpp"
#include "algebrarium/knitting.hpp"
#include "algebrarium/notation.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace algebrarium;

namespace {

std::vector<CubeToken> to_tokens(const oracle::Moves& ms) {
  std::vector<CubeToken> out;
  for (const auto& m : ms) out.push_back({static_cast<Face>(m.face), static_cast<std::uint8_t>(m.turns)});
  return out;
}

oracle::Moves to_moves(const std::vector<CubeToken>& ts) {
  oracle::Moves out;
  for (const auto& t : ts) out.push_back({static_cast<int>(t.face), t.turns});
  return out;
}

bool is_parse_error(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == ErrorCode::ParseError;
  }
  return false;
}

}  // namespace

TEST_CASE("cipher alphabet is the bijection 0..6 <-> a..g") {
  std::set<char> letters;
  for (int d = 0; d < 7; ++d) {
    const char c = cipher::encode_digit(d);
    CHECK(c == "abcdefg"[d]);
    CHECK(cipher::decode_digit(c) == d);
    letters.insert(c);
  }
  CHECK(letters.size() == 7);
  CHECK_FALSE(cipher::decode_digit('h').has_value());
}

TEST_CASE("eh_parse") {
  CHECK(cipher::parse("FWD(ad)") == Element::offset(3));
  CHECK(cipher::parse("BACK(ef)") == Element::offset(-33));
  CHECK(cipher::parse("FWD(a)") == Element::offset(0));
  CHECK(cipher::parse("BACK(a)") == Element::offset(0));
  CHECK(cipher::parse("FWD(ad)") == cipher::parse("FWD(d)"));
  CHECK(cipher::parse("FWD(aaad)") == Element::offset(3));
  for (const char* bad : {"FWD()", "fwd(b)", "LEFT(b)", "FWD(h)", "FWD(b", "FWD(b) ", "FWD(B)", ""}) {
    CAPTURE(bad);
    CHECK(is_parse_error([&] { cipher::parse(bad); }));
  }
}

TEST_CASE("eh_render") {
  CHECK(cipher::render(Element::offset(-30)) == "BACK(ec)");
  CHECK(cipher::render(Element::offset(0)) == "FWD(a)");
  CHECK(cipher::render(Element::offset(7)) == "FWD(ba)");
  CHECK(cipher::render(Element::offset(342)) == "FWD(ggg)");
  CHECK(cipher::render(Element::offset(-343)) == "BACK(baaa)");
}

TEST_CASE("enigma grammar") {
  CHECK(enigma::parse("A,C,Z") == Element::rotors(0, 2, 25));
  CHECK(enigma::render(Element::rotors(1, 3, 1)) == "B,D,B");
  const Element wrapped = combine(Element::rotors(25, 25, 25), Element::rotors(1, 1, 1));
  CHECK(wrapped == Element::rotors(0, 0, 0));
  CHECK(enigma::render(wrapped) == "A,A,A");
  CHECK(enigma::parse("A, C, Z") == Element::rotors(0, 2, 25));
  for (const char* bad : {"A,C", "A,C,Z,B", "a,c,z", "A,CC,Z", "A,1,Z", "", ",,"}) {
    CAPTURE(bad);
    CHECK(is_parse_error([&] { enigma::parse(bad); }));
  }
}

TEST_CASE("knit_reduce") {
  CHECK(knitting::knit_reduce("kpPK").is_identity());
  CHECK(knitting::render(knitting::knit_reduce("kp")) == "kp");
  CHECK(knitting::render(knitting::knit_reduce("kKkKk")) == "k");
  CHECK(knitting::knit_reduce("").is_identity());
  CHECK(knitting::knit_reduce("\xCE\xB5").is_identity());
  CHECK(knitting::render(identity(DomainId::Knitting)) == "\xCE\xB5");
  CHECK(is_parse_error([] { knitting::knit_reduce("kx"); }));
  CHECK(is_parse_error([] { knitting::knit_reduce("k p"); }));
}

TEST_CASE("knit stack pass equals the unique fixpoint of arbitrary-order cancellation") {
  for (int len = 0; len <= 6; ++len) {
    oracle::for_each_sequence(4, len, [](const std::vector<int>& seq) {
      std::string w;
      for (int i : seq) w.push_back("kpKP"[i]);
      const auto forms = oracle::knit_normal_forms(w);
      REQUIRE(forms.size() == 1);
      const auto reduced = knitting::reduce(w);
      REQUIRE(reduced.has_value());
      REQUIRE(*reduced == *forms.begin());
      // idempotent
      REQUIRE(knitting::reduce(*reduced) == reduced);
    });
  }
}

TEST_CASE("cube_canonicalize examples") {
  CHECK(cube::render(cube::parse("R R2")) == "R#");
  CHECK(cube::render(cube::parse("L R")) == "R L");
  CHECK(cube::render(cube::parse("R L R")) == "R2 L");
  CHECK(cube::parse("R R R R").is_identity());
  CHECK(cube::parse("R R#").is_identity());
  CHECK(cube::render(cube::parse("R U R#")) == "R U R#");
  CHECK(cube::render(cube::parse("B F D U L R")) == "F B U D R L");
  // Cancelling an inner block exposes same-axis neighbours.
  CHECK(cube::render(cube::parse("R U U# L")) == "R L");
  CHECK(cube::render(cube::parse("L U U# R")) == "R L");
  CHECK(cube::parse("R'") == cube::parse("R#"));
  CHECK(cube::parse("") == identity(DomainId::RubiksCube));
  CHECK(cube::parse("\xCE\xB5") == identity(DomainId::RubiksCube));
  CHECK(cube::render(identity(DomainId::RubiksCube)) == "\xCE\xB5");
  for (const char* bad : {"X", "R3", "R##", "r", "R-"}) {
    CAPTURE(bad);
    CHECK(is_parse_error([&] { cube::parse(bad); }));
  }
}

TEST_CASE("cube canonical form matches the rewrite closure") {
  auto check = [](const oracle::Moves& ms) {
    const auto forms = oracle::cube_normal_forms(ms);
    REQUIRE(forms.size() == 1);
    const auto canon = cube::canonical_moves(to_tokens(ms));
    REQUIRE(to_moves(canon) == *forms.begin());
    REQUIRE(cube::canonical_moves(canon) == canon);
  };
  SUBCASE("exhaustive up to length 4") {
    for (int len = 0; len <= 4; ++len) {
      oracle::for_each_sequence(18, len, [&](const std::vector<int>& seq) {
        oracle::Moves ms;
        for (int x : seq) ms.push_back({x / 3, x % 3 + 1});
        check(ms);
      });
    }
  }
  SUBCASE("sampled lengths 5 to 7") {
    rng::Stream s(31);
    for (int i = 0; i < 1500; ++i) {
      oracle::Moves ms(static_cast<std::size_t>(s.uniform_int(5, 7)));
      // Draw from two axes so that long same-axis runs and cancellations are common.
      for (auto& m : ms) m = {static_cast<int>(s.uniform_int(0, 3)), static_cast<int>(s.uniform_int(1, 3))};
      check(ms);
    }
  }
}

TEST_CASE("sticker permutations") {
  CHECK(cube::cube_permutation(identity(DomainId::RubiksCube)) == cube::identity_permutation());
  const std::vector<CubeToken> r4(4, CubeToken{Face::R, 1});
  CHECK(cube::sticker_permutation(r4) == cube::identity_permutation());
  for (Face f : cube::kFaces) {
    const auto p = cube::face_turn_permutation(f);
    std::set<int> image(p.begin(), p.end());
    CHECK(image.size() == 48);          // bijection
    int moved = 0;
    for (std::size_t i = 0; i < p.size(); ++i) moved += p[i] != i;
    CHECK(moved == 20);                 // 8 face stickers + 12 side stickers
  }
  const auto raw = cube::parse_tokens("R U R#");
  CHECK(cube::sticker_permutation(raw) == cube::cube_permutation(cube::parse("R U R#")));
  // Non-opposite faces really do not commute on the cube.
  CHECK(cube::sticker_permutation(cube::parse_tokens("R U")) != cube::sticker_permutation(cube::parse_tokens("U R")));
  CHECK(cube::sticker_permutation(cube::parse_tokens("R L")) == cube::sticker_permutation(cube::parse_tokens("L R")));
}

TEST_CASE("rewrite soundness: canonicalization preserves the sticker permutation") {
  rng::Stream s(77);
  for (int i = 0; i < 2000; ++i) {
    const auto raw = gen::raw_cube_tokens(s, 10);
    REQUIRE(cube::sticker_permutation(raw) == cube::sticker_permutation(cube::canonical_moves(raw)));
  }
}

TEST_CASE("parse(render(x)) == x in all domains") {
  rng::Stream s(8);
  for (DomainId d : kAllDomains) {
    for (int i = 0; i < 1000; ++i) {
      const Element x = gen::element(d, s);
      REQUIRE(parse_element(d, render(x)) == x);
    }
  }
}

TEST_CASE("non-canonical spellings parse to canonical elements") {
  rng::Stream s(13);
  for (int i = 0; i < 500; ++i) {
    const auto w = gen::raw_knit_word(s, 10);
    const Element e = parse_element(DomainId::Knitting, w.empty() ? std::string("\xCE\xB5") : w);
    REQUIRE(render(parse_element(DomainId::Knitting, render(e))) == render(e));
    const auto toks = gen::raw_cube_tokens(s, 8);
    const Element c = parse_element(DomainId::RubiksCube, cube::render_tokens(toks));
    REQUIRE(c == Element::cube(toks));
  }
  CHECK_FALSE(try_parse_element(DomainId::Enigma, "nope").has_value());
}
