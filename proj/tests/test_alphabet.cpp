#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "polycomp/alphabet.hpp"

using namespace polycomp;
using fixtures::code_of;

TEST_SUITE("alphabet") {
  TEST_CASE("canonical order") {
    const auto& a = Alphabet::canonical();
    CHECK(a.base() == 70);
    CHECK(a.chars() == "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz!$%&()*+");
    for (std::size_t i = 0; i < a.base(); ++i) CHECK(a.index_of(a.char_at(i)) == i);
    CHECK_FALSE(a.contains('#'));
    CHECK_FALSE(a.contains('@'));
    CHECK_FALSE(a.contains('-'));
    CHECK(a.reserved().quotient[0] == '+');
    CHECK(a.reserved().quotient[7] == '!');
  }

  TEST_CASE("int_to_base") {
    const auto& a = Alphabet::canonical();
    CHECK(int_to_base(70, a) == "10");
    CHECK(int_to_base(0, a) == "0");
    CHECK(int_to_base(0, a.prefix(2)) == "0");
    CHECK(int_to_base(3843, a.prefix(62)) == "zz");
    CHECK(int_to_base(69, a) == "+");
  }

  TEST_CASE("base_to_int") {
    const auto& a = Alphabet::canonical();
    CHECK(base_to_int("y", a) == 60);
    CHECK(base_to_int("10", a) == 70);
    CHECK(code_of([&] { base_to_int("1#", a); }) == Errc::UnknownCharacter);
    try {
      base_to_int("12?4", a);
    } catch (const Error& e) {
      CHECK(e.position() == 2);
    }
    CHECK(code_of([&] { base_to_int("++++++++++++++", a); }) == Errc::ValueOutOfRange);
  }

  TEST_CASE("fixed width") {
    const auto& a = Alphabet::canonical();
    CHECK(int_to_base_fixed(5, 3, a) == "005");
    CHECK(code_of([&] { int_to_base_fixed(70 * 70, 2, a); }) == Errc::FieldOverflow);
  }

  TEST_CASE("length law and round trip") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint64_t> dist(1, 1000000000);
    for (std::size_t base : {2, 10, 61, 62, 63, 64, 70}) {
      auto a = Alphabet::canonical().prefix(base);
      for (int i = 0; i < 2000; ++i) {
        auto n = dist(rng);
        auto s = int_to_base(n, a);
        REQUIRE(base_to_int(s, a) == n);
        std::size_t len = 0;
        for (auto m = n; m > 0; m /= base) ++len;
        REQUIRE(s.size() == len);
      }
    }
  }

  TEST_CASE("file format") {
    auto a = Alphabet::parse("0123456789abcdef\nreserved sentinel=#\nreserved q1=+\n");
    CHECK(a.base() == 16);
    CHECK(Alphabet::parse(a.serialize()) == a);
    CHECK(Alphabet::parse(Alphabet::canonical().serialize()) == Alphabet::canonical());
    CHECK(code_of([] { Alphabet::parse("01#\n"); }) != static_cast<Errc>(-1));
    CHECK(code_of([] { Alphabet::parse("0012\n"); }) != static_cast<Errc>(-1));
    CHECK(code_of([] { Alphabet("0"); }) != static_cast<Errc>(-1));
  }
}
