#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "polycomp/framing.hpp"
#include "polycomp/rsd.hpp"

using namespace polycomp;
using fixtures::code_of;

TEST_SUITE("framing") {
  TEST_CASE("codec tags") {
    CHECK(codec_tag(CodecId::Comma, Transform::DeltaMin) == '0');
    CHECK(codec_tag(CodecId::Comma, Transform::DeltaConsec) == '1');
    CHECK(codec_tag(CodecId::Lzw, Transform::DeltaConsec) == 'N');
    for (auto c : kAllCodecs) {
      for (auto t : {Transform::DeltaMin, Transform::DeltaConsec}) {
        CHECK(parse_codec_tag(codec_tag(c, t)) == std::pair{c, t});
      }
    }
    CHECK(code_of([] { parse_codec_tag('O'); }) == Errc::UnknownSentinel);
  }

  TEST_CASE("plain frame") {
    Encoded e{CodecId::Var, Transform::DeltaMin, "Z7"};
    auto f = frame("Flood warning", e);
    const char tag = codec_tag(CodecId::Var, Transform::DeltaMin);
    CHECK(f.text == std::string("Flood warning#p") + tag + "Z7#");
    CHECK(f.payload_start == 16);
    CHECK(f.payload_length == 2);
    CHECK(f.sentinel == 'p');
    CHECK_FALSE(f.warning);
    auto u = unframe(f.text);
    CHECK(u.message == "Flood warning");
    CHECK(u.encoded == e);
  }

  TEST_CASE("hash in the message is doubled") {
    Encoded e{CodecId::Big, Transform::DeltaConsec, "C12"};
    auto f = frame("use #5", e);
    CHECK(f.text.rfind("use ##5#p", 0) == 0);
    CHECK(unframe(f.text).message == "use #5");
    CHECK(unframe(frame("#", e).text).message == "#");
    CHECK(unframe(frame("##x#", e).text).message == "##x#");
  }

  TEST_CASE("poly sentinels") {
    Encoded var{CodecId::Poly, Transform::DeltaConsec, "0O9q4Flta8O"};
    auto q = frame("", var);
    CHECK(q.text == "#qO9q4Flta8O#");
    CHECK(unframe(q.text).encoded == var);

    Encoded s1{CodecId::Poly, Transform::DeltaConsec, "1BkMy0"};
    CHECK(frame("", s1).text == "#rBkMy0#");
    CHECK(unframe("#rBkMy0#").encoded == s1);
    Encoded s2{CodecId::Poly, Transform::DeltaConsec, "2abc"};
    CHECK(frame("", s2).text == "#sabc#");
    CHECK(unframe("#sabc#").encoded == s2);
    Encoded s3{CodecId::Poly, Transform::DeltaConsec, "3abc"};
    CHECK(frame("", s3).text == std::string("#p") + codec_tag(CodecId::Poly, Transform::DeltaConsec) + "3abc#");

    Encoded pm{CodecId::Poly, Transform::DeltaMin, "0abc"};
    CHECK(frame("", pm).sentinel == 'p');
  }

  TEST_CASE("overhead per sentinel") {
    for (const auto& e : {Encoded{CodecId::Var, Transform::DeltaMin, "abc"},
                          Encoded{CodecId::Poly, Transform::DeltaConsec, "0abc"},
                          Encoded{CodecId::Poly, Transform::DeltaConsec, "1abc"},
                          Encoded{CodecId::Poly, Transform::DeltaConsec, "2abc"}}) {
      auto over = frame("msg", e).text.size() - 3 - e.payload.size();
      CHECK(over >= 2);
      CHECK(over <= 4);
    }
  }

  TEST_CASE("budget warning") {
    Encoded e{CodecId::Var, Transform::DeltaMin, "abcdefghij"};
    CHECK_FALSE(frame(std::string(76, 'x'), e).warning);
    CHECK(frame(std::string(77, 'x'), e).warning);
    CHECK_FALSE(frame(std::string(77, 'x'), e, Alphabet::canonical(), 100).warning);
  }

  TEST_CASE("errors") {
    CHECK(code_of([] { unframe("no frame here"); }) == Errc::MissingFrame);
    CHECK(code_of([] { unframe("text ## only"); }) == Errc::MissingFrame);
    CHECK(code_of([] { unframe("text #p0abc"); }) == Errc::UnterminatedFrame);
    CHECK(code_of([] { unframe("text #"); }) == Errc::UnterminatedFrame);
    CHECK(code_of([] { unframe("text #zabc#"); }) == Errc::UnknownSentinel);
    CHECK(code_of([] { unframe("#p"); }) == Errc::UnterminatedFrame);
    CHECK(code_of([] { frame("m", Encoded{CodecId::Var, Transform::DeltaMin, "a#b"}); }) == Errc::InvalidArgument);
  }

  TEST_CASE("random round trips") {
    std::mt19937_64 rng(31);
    const std::string msg_chars = "abc XYZ#.,!#@-";
    const auto& digits = Alphabet::canonical().chars();
    for (int i = 0; i < 5000; ++i) {
      std::string m;
      for (auto k = rng() % 40; k > 0; --k) m.push_back(msg_chars[rng() % msg_chars.size()]);
      Encoded e;
      e.codec = kAllCodecs[rng() % kAllCodecs.size()];
      e.transform = rng() % 2 ? Transform::DeltaConsec : Transform::DeltaMin;
      for (auto k = 1 + rng() % 30; k > 0; --k) e.payload.push_back(digits[rng() % digits.size()]);
      auto f = frame(m, e);
      auto u = unframe(f.text);
      REQUIRE(u.message == m);
      REQUIRE(u.encoded == e);
      REQUIRE(f.text.substr(f.payload_start, f.payload_length).find('#') == std::string::npos);
    }
  }
}
