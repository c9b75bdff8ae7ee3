#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tensym/dot.hpp"
#include "tensym/tensym.hpp"

using namespace tensym;
using namespace tensym::instances;

TEST_CASE("parsing the format examples") {
  SUBCASE("B2 on a single line") {
    const auto m = parse_model(
        "algebra { m:1 elements: 0 1 leq: (0,1) N: 0->1 1->0 G: 0->0 1->1 H: 0->0 1->1 }");
    REQUIRE(m.kind == ModelKind::algebra);
    CHECK(*m.algebra == b2());
    CHECK(m.names == std::vector<std::string>{"0", "1"});
  }
  SUBCASE("one-point space with N/A order") {
    const auto m =
        parse_model("space { m:1 points: p leq: N/A g: p->p RG: (p,p) RH: (p,p) }");
    REQUIRE(m.kind == ModelKind::space);
    CHECK(*m.space == point_space(true));
  }
  SUBCASE("comments and newlines are free") {
    const auto m = parse_model(
        "# a comment\nalgebra {\n  m: 1  # inline too\n  elements: 0 1\n  leq: (0,1)\n"
        "  N: 0->1 1->0\n  G: 0->0 1->1\n  H: 0->0 1->1\n}\n");
    CHECK(*m.algebra == b2());
  }
}

TEST_CASE("parse errors carry positions") {
  SUBCASE("missing brace") {
    try {
      parse_model("algebra m:1");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 1);
      CHECK(e.col == 9);
    }
  }
  SUBCASE("bad token on a later line") {
    try {
      parse_model("algebra {\n  m: 1\n  elements: 0 ! 1\n}");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
    }
  }
  SUBCASE("stray dash") {
    CHECK_THROWS_AS(parse_model("algebra { m: 1 elements: a-b }"), ParseError);
  }
  SUBCASE("trailing garbage") {
    CHECK_THROWS_AS(parse_model("algebra { m:1 elements: 0 1 leq: (0,1) N: 0->1 1->0 "
                                "G: 0->0 1->1 H: 0->0 1->1 } extra"),
                    ParseError);
  }
}

TEST_CASE("semantic errors") {
  SUBCASE("partial table") {
    CHECK_THROWS_WITH_AS(
        parse_model("algebra { m:1 elements: 0 1 leq: (0,1) N: 0->1 G: 0->0 1->1 H: 0->0 1->1 }"),
        "N not total", SemanticError);
  }
  SUBCASE("unknown element") {
    CHECK_THROWS_AS(
        parse_model("algebra { m:1 elements: 0 1 leq: (0,zz) N: 0->1 1->0 G: 0->0 1->1 H: 0->0 1->1 }"),
        SemanticError);
  }
  SUBCASE("wrong kind keys") {
    CHECK_THROWS_AS(parse_model("algebra { m:1 elements: 0 g: 0->0 }"), SemanticError);
    CHECK_THROWS_AS(parse_model("space { m:1 points: p N: p->p }"), SemanticError);
  }
  SUBCASE("duplicate section") {
    CHECK_THROWS_AS(parse_model("space { m:1 m:2 points: p g: p->p }"), SemanticError);
  }
  SUBCASE("duplicate name") {
    CHECK_THROWS_AS(parse_model("space { m:1 points: p p g: p->p }"), SemanticError);
  }
  SUBCASE("missing m") {
    CHECK_THROWS_AS(parse_model("space { points: p g: p->p }"), SemanticError);
  }
  SUBCASE("double map entry") {
    CHECK_THROWS_AS(parse_model("space { m:1 points: p g: p->p p->p }"), SemanticError);
  }
  SUBCASE("a cyclic order is rejected while building") {
    CHECK_THROWS_AS(
        parse_model("space { m:1 points: p q leq: (p,q) (q,p) g: p->q q->p }"),
        CycleError);
  }
  SUBCASE("a non-lattice algebra order is rejected") {
    CHECK_THROWS_AS(
        parse_model("algebra { m:1 elements: 0 a b leq: (0,a) (0,b) N: 0->0 a->a b->b "
                    "G: 0->0 a->a b->b H: 0->0 a->a b->b }"),
        NotALattice);
  }
}

TEST_CASE("render and reparse is the identity") {
  SUBCASE("named instances") {
    for (const TmsAlgebra& a : {b2(), k3(), dm4(), b2_bad_t3()}) {
      const auto m = parse_model(render_model(a));
      CHECK(*m.algebra == a);
    }
    for (const TmsSpace& s : {point_space(true), b16_space(), dual_space(dm4())}) {
      const auto m = parse_model(render_model(s));
      CHECK(*m.space == s);
    }
  }
  SUBCASE("the whole small corpus") {
    for (const auto& e : build_corpus(3, {1, 2}).entries) {
      CHECK(*parse_model(render_model(e.space)).space == e.space);
      CHECK(*parse_model(render_model(e.algebra)).algebra == e.algebra);
    }
  }
}

TEST_CASE("mutated model text never escapes the typed error surface") {
  std::mt19937 rng(424242);
  const std::string base = render_model(dm4()) + render_model(dual_space(k3()));
  std::uniform_int_distribution<std::size_t> pos(0, base.size() - 1);
  std::uniform_int_distribution<int> ch(32, 126);
  for (int i = 0; i < 400; ++i) {
    std::string text = i % 2 ? render_model(dm4()) : render_model(dual_space(k3()));
    const int edits = 1 + i % 3;
    for (int e = 0; e < edits && !text.empty(); ++e) {
      const std::size_t p = pos(rng) % text.size();
      switch (i % 4) {
        case 0: text[p] = static_cast<char>(ch(rng)); break;
        case 1: text.erase(p, 1); break;
        case 2: text.insert(p, 1, static_cast<char>(ch(rng))); break;
        default: text.resize(p); break;
      }
    }
    try {
      (void)parse_model(text);  // many mutations still parse, which is fine
    } catch (const Error&) {
    }
  }
}

TEST_CASE("dot output") {
  SUBCASE("B2 golden rendering") {
    const std::string want =
        "digraph algebra {\n"
        "  rankdir=BT;\n"
        "  node [shape=box];\n"
        "  n0 [label=\"0\"];\n"
        "  n1 [label=\"1\"];\n"
        "  n0 -> n1;\n"
        "  n0 -> n1 [style=dashed,label=\"N\"];\n"
        "  n1 -> n0 [style=dashed,label=\"N\"];\n"
        "  n0 -> n0 [color=blue,label=\"G\"];\n"
        "  n1 -> n1 [color=blue,label=\"G\"];\n"
        "  n0 -> n0 [color=red,label=\"H\"];\n"
        "  n1 -> n1 [color=red,label=\"H\"];\n"
        "}\n";
    CHECK(render_dot(b2()) == want);
  }
  SUBCASE("K3's dual golden rendering") {
    const std::string want =
        "digraph space {\n"
        "  rankdir=BT;\n"
        "  node [shape=circle];\n"
        "  n0 [label=\"0\"];\n"
        "  n1 [label=\"1\"];\n"
        "  n0 -> n1;\n"
        "  n0 -> n1 [style=dashed,label=\"g\"];\n"
        "  n1 -> n0 [style=dashed,label=\"g\"];\n"
        "  n0 -> n0 [color=blue,label=\"RG\"];\n"
        "  n1 -> n0 [color=blue,label=\"RG\"];\n"
        "  n1 -> n1 [color=blue,label=\"RG\"];\n"
        "  n0 -> n0 [color=red,label=\"RH\"];\n"
        "  n1 -> n0 [color=red,label=\"RH\"];\n"
        "  n1 -> n1 [color=red,label=\"RH\"];\n"
        "}\n";
    CHECK(render_dot(dual_space(k3())) == want);
  }
  SUBCASE("byte-stable across repeated rendering") {
    for (const auto& e : build_corpus(2, {1}).entries) {
      CHECK(render_dot(e.space) == render_dot(e.space));
      CHECK(render_dot(e.algebra) == render_dot(e.algebra));
    }
  }
  SUBCASE("an empty relation draws no colored edges") {
    const TmsSpace s = point_space(false);
    const std::string d = render_dot(s);
    CHECK(d.find("RG") == std::string::npos);
    CHECK(d.find("RH") == std::string::npos);
  }
}
