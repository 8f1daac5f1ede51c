#include <lpack/errors.hpp>
#include <lpack/generators.hpp>
#include <lpack/json_io.hpp>
#include <lpack/solver.hpp>

#include <doctest.h>

using namespace lpack;

TEST_CASE("round trips")
{
    Rng rng = trial_rng(31, 0);
    auto g = make_dodecahedron();
    CHECK(graph_from_json(graph_to_json(g)) == g);

    auto h = Bigraph::from_edges(4, std::vector<BiEdge>{{0, 1}, {1, 1}, {3, 0}, {2, 3}});
    CHECK(bigraph_from_json(bigraph_to_json(h)) == h);
    CHECK(bigraph_from_json(Json::parse(R"({"s": 4, "edges": [[0,1],[1,1],[3,0],[2,3]]})")) == h);

    auto c = random_cover(make_cycle(5), 4, rng);
    CHECK(cover_from_json(cover_to_json(c)) == c);

    auto p = solve_packing(c);
    REQUIRE(p.has_value());
    CHECK(packing_from_json(packing_to_json(*p)) == *p);

    ListAssignment l{make_cycle(4), 2, {{0, 1}, {0, 2}, {1, 2}, {1, 2}}};
    CHECK(lists_from_json(lists_to_json(l)) == l);
    auto bare = lists_to_json(l, false);
    CHECK_FALSE(bare.contains("graph"));
    CHECK(lists_from_json(bare, &l.graph) == l);

    auto text = dump(cover_to_json(c));
    CHECK(text.back() == '\n');
    CHECK(dump(Json::parse(text)) == text);
}

TEST_CASE("arcs may point either way")
{
    auto j = Json::parse(R"({"k": 3, "graph": {"n": 2, "edges": [[0,1]]}, "arcs": [{"u": 1, "v": 0, "perm": [1,2,0]}]})");
    auto c = cover_from_json(j);
    CHECK(c.map(1, 0)(0) == 1);
    CHECK(c.map(0, 1)(1) == 0);
}

TEST_CASE("malformed input is an input error")
{
    for (auto text : {
            R"({"n": 3})",
            R"({"n": 3, "edges": [[0, 3]]})",
            R"({"n": 3, "edges": [[1, 1]]})",
            R"({"n": -1, "edges": []})",
            R"({"n": 3, "edges": [[0, "1"]]})",
            R"([1, 2])"})
        CHECK_THROWS_AS(graph_from_json(Json::parse(text)), InputError);

    for (auto text : {
            R"({"s": 17, "rows": []})",
            R"({"s": 2, "rows": [1]})",
            R"({"s": 2, "rows": [1, 4]})",
            R"({"s": 2, "edges": [[0, 2]]})"})
        CHECK_THROWS_AS(bigraph_from_json(Json::parse(text)), InputError);

    for (auto text : {
            R"({"k": 2, "graph": {"n": 2, "edges": [[0,1]]}, "arcs": []})",
            R"({"k": 2, "graph": {"n": 2, "edges": [[0,1]]}, "arcs": [{"u": 0, "v": 1, "perm": [0,0]}]})",
            R"({"k": 2, "graph": {"n": 2, "edges": [[0,1]]}, "arcs": [{"u": 0, "v": 1, "perm": [0,1,2]}]})",
            R"({"k": 2, "graph": {"n": 3, "edges": [[0,1]]}, "arcs": [{"u": 0, "v": 2, "perm": [0,1]}]})"})
        CHECK_THROWS_AS(cover_from_json(Json::parse(text)), InputError);

    CHECK_THROWS_AS(lists_from_json(Json::parse(R"({"k": 2, "graph": {"n": 1, "edges": []}, "lists": {"0": [1, 1]}})"), nullptr), InputError);
    CHECK_THROWS_AS(lists_from_json(Json::parse(R"({"k": 2, "lists": {"0": [0, 1]}})"), nullptr), InputError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
}
