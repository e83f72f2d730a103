#include <doctest.h>

#include "ietflip/constructions.hpp"
#include "ietflip/svg.hpp"
#include "ietflip/text.hpp"
#include "ietflip/verify.hpp"
#include "test_util.hpp"

using namespace ietflip;
using tut::arc;
using tut::cp;
using tut::rat;

static const FieldSpec kF2(2);

TEST_CASE("scalar grammar") {
  CHECK(parse_scalar("1/3", kF2) == rat(1, 3));
  CHECK(parse_scalar("-1/4", kF2) == rat(-1, 4));
  CHECK(parse_scalar("0+1/1*sqrt(2)", kF2) == tut::sqrt2());
  CHECK(parse_scalar("0-1*sqrt(2)", kF2) == -tut::sqrt2());
  CHECK(parse_scalar("2/4", kF2) == rat(1, 2));  // reduced on read
  CHECK(parse_scalar(" 1/2 + 1/3 * sqrt(2) ", kF2) == rat(1, 2) + tut::sqrt2() * rat(1, 3));

  CHECK_THROWS_AS(parse_scalar("1/0", kF2), SyntaxError);
  CHECK_THROWS_AS(parse_scalar("1/-2", kF2), SyntaxError);
  CHECK_THROWS_AS(parse_scalar("x", kF2), SyntaxError);
  CHECK_THROWS_AS(parse_scalar("1 2", kF2), SyntaxError);
  CHECK_THROWS_AS(parse_scalar("0+1*sqrt(4)", kF2), SyntaxError);  // not squarefree
  // wrong field is a semantic error
  CHECK_THROWS_AS(parse_scalar("0+1*sqrt(3)", kF2), DomainError);
  CHECK_THROWS_AS(parse_scalar("0+1*sqrt(2)", FieldSpec(0)), DomainError);
}

TEST_CASE("map grammar") {
  CHECK(parse_map("[0,1) -> +x+1/3", kF2) == rotation(cp(1, 3)));
  CHECK(parse_map("[0,1) -> -x", kF2) == global_flip());
  MapClass phi = parse_map("[0,1/4) -> +x+1/4 ; [1/4,1/2) -> +x-1/4 ; [1/2,1) -> +x", kF2);
  CHECK(phi == exchange(arc(0, 1, 1, 4), arc(1, 4, 1, 2)));
  // a wrapped cut of the full circle is still the rotation
  CHECK(parse_map("[1/4,5/4) -> +x+1/3", kF2) == rotation(cp(1, 3)));

  CHECK_THROWS_AS(parse_map("[0,1/2) -> +x ; [1/4,1) -> +x", kF2), DomainError);
  CHECK_THROWS_AS(parse_map("[0,1) + x", kF2), SyntaxError);
  CHECK_THROWS_AS(parse_map("", kF2), SyntaxError);

  // error positions are reported 1-based
  try {
    parse_map("[0,1) -> +y", kF2);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.col() == 11);
  }
}

TEST_CASE("serialize: fixed forms") {
  CHECK(map_text(rotation(cp(1, 3))) == "[0,1) -> +x+1/3");
  CHECK(map_text(MapClass::identity()) == "[0,1) -> +x");
  CHECK(map_text(global_flip()) == "[0,1) -> -x");
  MapClass phi = exchange(arc(0, 1, 1, 4), arc(1, 4, 1, 2));
  CHECK(map_text(phi) == "[0,1/4) -> +x+1/4 ; [1/4,1/2) -> +x+3/4 ; [1/2,1) -> +x");

  MapClass f3 = make_triple_flip(rat(1, 2), rat(1, 4), rat(1, 4));
  CHECK(parse_map(map_text(f3), kF2) == f3);

  Lift L = left_lift(phi);
  std::string t = lift_text(L);
  CHECK(t == "[0,1/4) -> +x+1/4 ; [1/4,1/2) -> +x+3/4 ; [1/2,1) -> +x"
             "\n@ 0 -> 0\n@ 1/4 -> 1/2\n@ 1/2 -> 1/4");
  CHECK(parse_lift(t, kF2) == L);

  SidedPoint p{cp(1, 3), Side::minus};
  CHECK(sided_text(p) == "1/3^-");
  CHECK(parse_sided("1/3^-", kF2) == p);
  CHECK(parse_sided(" 2/3 ^ + ", kF2) == SidedPoint{cp(2, 3), Side::plus});
}

TEST_CASE("roundtrip is bit-exact, randomized") {
  verify::Rng rng(97);
  for (int i = 0; i < 100; ++i) {
    MapClass f = verify::random_class(rng, 6, true);
    std::string s = map_text(f);
    CHECK(parse_map(s, kF2) == f);
    CHECK(map_text(parse_map(s, kF2)) == s);
  }
}

TEST_CASE("documents") {
  std::string text =
      "# generators\n"
      "field 2\n"
      "\n"
      "r = [0,1) -> +x+1/3\n"
      "phi = [0,1/4) -> +x+1/4 ; [1/4,1/2) -> +x+3/4 ; [1/2,1) -> +x\n"
      "@ 0 -> 0\n"
      "@ 1/4 -> 1/2\n"
      "@ 1/2 -> 1/4\n";
  Document doc = parse_document(text, FieldSpec(0));
  CHECK(doc.field.m == 2);
  REQUIRE(doc.bindings.size() == 2);
  CHECK(doc.class_of("r") == rotation(cp(1, 3)));
  CHECK(doc.lift_of("phi") == left_lift(exchange(arc(0, 1, 1, 4), arc(1, 4, 1, 2))));
  CHECK(doc.lift_of("r").table().empty());  // continuous classes promote
  CHECK_THROWS_AS(doc.class_of("nope"), DomainError);
  CHECK_THROWS_AS(doc.lift_of("phi2"), DomainError);

  // a class with singularities does not silently promote to a lift
  Document doc2 = parse_document("phi = [0,1/4) -> +x+1/4 ; [1/4,1/2) -> +x+3/4 ; [1/2,1) -> +x\n",
                                 kF2);
  CHECK_THROWS_AS(doc2.lift_of("phi"), DomainError);

  CHECK_THROWS_AS(parse_document("@ 0 -> 0\n", kF2), SyntaxError);
  CHECK_THROWS_AS(parse_document("a = [0,1) -> +x\na = [0,1) -> +x\n", kF2), SyntaxError);
  CHECK_THROWS_AS(parse_document("a = [0,1) -> +x\nfield 2\n", kF2), SyntaxError);

  // document serialization roundtrips
  Document doc3 = parse_document(document_text(doc), FieldSpec(0));
  CHECK(document_text(doc3) == document_text(doc));
}

TEST_CASE("svg output") {
  std::string one = plot_svg({MapClass::identity()});
  CHECK(one == plot_svg({MapClass::identity()}));  // byte-deterministic
  // identity graph: the diagonal, no markers
  CHECK(std::count(one.begin(), one.end(), '\n') >= 3);
  std::size_t lines = 0, pos = 0;
  while ((pos = one.find("<line", pos)) != std::string::npos) {
    ++lines;
    pos += 5;
  }
  CHECK(lines == 1);

  std::string rot = plot_svg({rotation(cp(1, 3))});
  lines = 0;
  pos = 0;
  while ((pos = rot.find("<line", pos)) != std::string::npos) {
    ++lines;
    pos += 5;
  }
  CHECK(lines == 2);  // two parallel slope-1 segments

  MapClass f132 = make_132_flip(cp(1, 3), cp(2, 3));
  std::string flip = plot_svg({f132});
  lines = 0;
  pos = 0;
  while ((pos = flip.find("<line", pos)) != std::string::npos) {
    ++lines;
    pos += 5;
  }
  CHECK(lines == 3);  // one per branch, one of negative slope
  CHECK(flip.find("circle") != std::string::npos);

  // lifts add filled dots
  std::string withdots = plot_svg({enumerate_hyperclean_lifts(f132)[0]});
  CHECK(withdots.find("fill=\"#000\"") != std::string::npos);

  CHECK_THROWS_AS(plot_svg({}), DomainError);
  CHECK_THROWS_AS(plot_svg(std::vector<PlotItem>(9, MapClass::identity())), DomainError);
}
