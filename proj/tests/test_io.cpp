#include <doctest.h>

#include "rl/errors.hpp"
#include "rl/io.hpp"

using namespace rl;

TEST_CASE("graph json and text formats") {
  Graph g = graph_from_json(R"({"n":4,"edges":[[1,2],[2,3],[3,4],[4,2]]})");
  CHECK(g.order() == 4);
  CHECK(g.adjacent(2, 4));

  Graph t = graph_from_text("4\n1 2\n2 3\n3 4\n4 2\n");
  CHECK(t == g);

  Graph back = graph_from_json(graph_to_json(g));
  CHECK(back == g);

  CHECK_THROWS_AS(graph_from_json(R"({"n":2,"edges":[[1,1]]})"), invalid_input);
  CHECK_THROWS_AS(graph_from_json(R"({"edges":[]})"), invalid_input);
  CHECK_THROWS_AS(graph_from_json("nonsense"), invalid_input);
  CHECK_THROWS_AS(graph_from_text("2\n1 2\n2 1\n"), invalid_input);
  CHECK_THROWS_AS(graph_from_text("junk"), invalid_input);
  CHECK_THROWS_AS(graph_from_text("3\n1 2\n3\n"), invalid_input);
  CHECK_THROWS_AS(graph_from_text("3\n1 2\n2 x\n"), invalid_input);
}

TEST_CASE("matrix json: rational and floating backings") {
  SymMatrix a = matrix_from_json(
      R"({"n":2,"entries":[[0,"1/3"],["1/3","-0.25"]]})");
  CHECK(a.exact());
  CHECK(a.rat(1, 2) == Rat(1, 3));
  CHECK(a.rat(2, 2) == Rat(-1, 4));

  SymMatrix f = matrix_from_json(R"({"n":2,"entries":[[0.5,1],[1,0.5]]})");
  CHECK_FALSE(f.exact());
  CHECK(f.value(1, 1) == 0.5);

  CHECK_THROWS_AS(matrix_from_json(R"({"n":2,"entries":[[0,1],[2,0]]})"),
                  invalid_input);
  CHECK_THROWS_AS(matrix_from_json(R"({"n":2,"entries":[[0,1]]})"),
                  invalid_input);
}

TEST_CASE("rational literals") {
  CHECK(rat_from_string("3/4") == Rat(3, 4));
  CHECK(rat_from_string("-6/8") == Rat(-3, 4));
  CHECK(rat_from_string("2") == Rat(2));
  CHECK(rat_from_string("0.125") == Rat(1, 8));
  CHECK(rat_from_string("-1.5") == Rat(-3, 2));
  CHECK(rat_to_string(Rat(-3, 7)) == "-3/7");
  CHECK(rat_from_string("010") == Rat(10));  // decimal, never octal
  CHECK_THROWS_AS(rat_from_string("x"), invalid_input);
  CHECK_THROWS_AS(rat_from_string(""), invalid_input);
  CHECK_THROWS_AS(rat_from_string("1/0"), invalid_input);
}
