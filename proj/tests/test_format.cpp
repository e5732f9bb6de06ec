#include <doctest.h>

#include <filesystem>
#include <random>

#include "blf/format.hpp"
#include "support.hpp"

using namespace blf;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> bundled_texts() {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(blf::testing::diagrams_dir())) {
    if (e.path().extension() == ".blf") out.push_back(blf::testing::read_file(e.path().string()));
  }
  return out;
}

ParseError parse_failure(const std::string& text) {
  try {
    parse_diagram(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("parsed: " << text);
  return ParseError(ErrorCode::invalid_argument, 0, 0, "");
}

const std::string kMinimal = "blf 1\nfaces\nface f fiber=c0:1\n";

}  // namespace

TEST_SUITE("format") {

TEST_CASE("bundled files round-trip byte for byte") {
  const auto texts = bundled_texts();
  REQUIRE(texts.size() >= 6);
  for (const auto& t : texts) {
    CHECK(serialize(parse_diagram(t)) == t);
  }
}

TEST_CASE("serialization is canonical") {
  const auto d = parse_diagram(kMinimal);
  CHECK(d.fibers.at("f").total_genus() == 1);
  const auto s = serialize(d);
  CHECK(s.find("basepoints\ncount 0\nsections 0\n") != std::string::npos);
  CHECK(serialize(parse_diagram(s)) == s);
}

TEST_CASE("random diagrams round-trip") {
  blf::testing::Generator gen(17);
  for (int i = 0; i < 200; ++i) {
    const auto d = gen.immersed(2).diagram;
    const auto s = serialize(d);
    CHECK(parse_diagram(s) == d);
    CHECK(serialize(parse_diagram(s)) == s);
  }
}

TEST_CASE("value parsers") {
  CHECK(parse_fiber("c0:2,c1:0") == FiberDescription({{"c0", 2}, {"c1", 0}}));
  CHECK(parse_surgery("sep(c0,1,2)") == SurgeryDescriptor::separating("c0", 1, 2));
  CHECK(parse_surgery("nonsep(x)") == SurgeryDescriptor::nonseparating("x"));
  CHECK(parse_cycle("").empty());
  CHECK(parse_cycle("1,-2") == std::vector<std::int64_t>{1, -2});
  CHECK_THROWS_AS(parse_fiber("c0:-1"), Error);
  CHECK_THROWS_AS(parse_fiber("c0:1,c0:2"), Error);
  CHECK_THROWS_AS(parse_surgery("sep(c0,1)"), Error);
  CHECK_THROWS_AS(parse_integer("99999999999999999999", 0, 10), Error);
  CHECK(is_identifier("a.0_b-c"));
  CHECK_FALSE(is_identifier("a b"));
  CHECK_FALSE(is_identifier(""));
}

TEST_CASE("diagnostics point at the offending token") {
  SUBCASE("bad header") {
    const auto e = parse_failure("blf 2\n");
    CHECK(e.code() == ErrorCode::syntax_error);
    CHECK(e.line() == 1);
  }
  SUBCASE("bad genus") {
    const auto e = parse_failure("blf 1\nfaces\nface f fiber=c0:x\n");
    CHECK(e.code() == ErrorCode::syntax_error);
    CHECK(e.line() == 3);
    CHECK(e.column() > 1);
    CHECK(e.diagnostic().rfind("3:", 0) == 0);
  }
  SUBCASE("duplicate face") {
    const auto e = parse_failure(kMinimal + "face f fiber=c0:2\n");
    CHECK(e.code() == ErrorCode::duplicate_id);
    CHECK(e.line() == 4);
  }
  SUBCASE("unknown reference") {
    const auto e = parse_failure("blf 1\narrangement\ncircle r0 left=a right=b\nfaces\nface a fiber=c0:1\n");
    CHECK(e.code() == ErrorCode::unknown_reference);
    CHECK(e.line() == 3);
  }
  SUBCASE("sections out of order") {
    const auto e = parse_failure("blf 1\nfaces\nface f fiber=c0:1\narrangement\n");
    CHECK(e.code() == ErrorCode::syntax_error);
    CHECK(e.line() == 4);
  }
}

TEST_CASE("mutated inputs only raise parse errors") {
  std::mt19937_64 rng(23);
  const auto texts = bundled_texts();
  int rejected = 0;
  for (int i = 0; i < 2000; ++i) {
    const std::string t = blf::testing::mutate(rng, texts[rng() % texts.size()]);
    try {
      serialize(parse_diagram(t));
    } catch (const ParseError& e) {
      ++rejected;
      CHECK_FALSE(e.diagnostic().empty());
    }
  }
  CHECK(rejected > 1000);
}

TEST_CASE("graph export") {
  const auto g = export_graph(parse_diagram(blf::testing::read_file(blf::testing::diagrams_dir() + "/cp2.blf")));
  CHECK(g.rfind("graph vertices=0 edges=0 circles=2 faces=3", 0) == 0);
  CHECK(g.find("loop r0 inside=middle outside=outer arrow=outer->middle") != std::string::npos);
  CHECK(g.find("point p2 region=outer order=2") != std::string::npos);
}

}
