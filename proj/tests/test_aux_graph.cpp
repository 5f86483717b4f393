#include <doctest.h>

#include "golden_io.hpp"
#include "pretzel/aux_graph.hpp"

using namespace pretzel;

TEST_CASE("graph of the alternating knot") {
    const auto g = build_graph(SignSeq::parse("+-+-+"));
    CHECK(g.edges_a == std::vector<DirectedEdge>{{1, 2, Direction::Ccw}, {3, 4, Direction::Ccw}});
    CHECK(g.edges_b == std::vector<DirectedEdge>{{0, 1, Direction::Cw}, {2, 3, Direction::Cw}});
    const auto v = is_path(g);
    CHECK(v.is_path);
    CHECK(v.path == std::vector<std::size_t>{0, 1, 2, 3, 4});
}

TEST_CASE("graph of +++--") {
    const auto g = build_graph(SignSeq::parse("+++--"));
    CHECK(g.edges_a == std::vector<DirectedEdge>{{3, 1, Direction::Ccw}, {4, 0, Direction::Ccw}});
    CHECK(g.edges_b == std::vector<DirectedEdge>{{2, 3, Direction::Cw}, {1, 4, Direction::Cw}});
    const auto v = is_path(g);
    CHECK(v.is_path);
    CHECK(v.path == std::vector<std::size_t>{0, 4, 1, 3, 2});
}

TEST_CASE("single vertex is a path") {
    const auto g = build_graph(SignSeq::parse("+"));
    CHECK(g.edge_count() == 0);
    const auto v = is_path(g);
    CHECK(v.is_path);
    CHECK(v.path == std::vector<std::size_t>{0});
}

TEST_CASE("negative controls") {
    AuxGraph two_cycle;
    two_cycle.size = 3;
    two_cycle.edges_a = {{0, 1, Direction::Ccw}};
    two_cycle.edges_b = {{1, 0, Direction::Cw}};
    auto v = is_path(two_cycle);
    CHECK_FALSE(v.is_path);
    CHECK(v.cycle.size() == 2);

    AuxGraph square;
    square.size = 4;
    square.edges_a = {{0, 1, Direction::Ccw}, {2, 3, Direction::Ccw}};
    square.edges_b = {{1, 2, Direction::Cw}, {3, 0, Direction::Cw}};
    v = is_path(square);
    CHECK_FALSE(v.is_path);
    CHECK(v.cycle.size() == 4);

    AuxGraph split;
    split.size = 4;
    split.edges_a = {{0, 1, Direction::Ccw}};
    split.edges_b = {{2, 3, Direction::Cw}};
    v = is_path(split);
    CHECK_FALSE(v.is_path);
    CHECK(v.components == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}});

    AuxGraph star;
    star.size = 4;
    star.edges_a = {{0, 1, Direction::Ccw}, {0, 2, Direction::Ccw}, {0, 3, Direction::Ccw}};
    v = is_path(star);
    CHECK_FALSE(v.is_path);
    CHECK(v.branch_vertex == 0);
}

TEST_CASE("even-length graphs carry a cycle") {
    // 2n vertices and 2n edges cannot form a path.
    const auto v = is_path(build_graph(SignSeq::parse("++--")));
    CHECK_FALSE(v.is_path);
    CHECK(v.cycle.size() == 2);
}

TEST_CASE("gap sets") {
    const auto g = build_graph(SignSeq::parse("++--+"));
    CHECK(gap_set(g, {2, 0, Direction::Ccw}) == std::vector<std::size_t>{3, 4});
    const auto alt = build_graph(SignSeq::parse("+-+-+"));
    CHECK(gap_set(alt, {1, 2, Direction::Ccw}).empty());
    const auto h = build_graph(SignSeq::parse("+++--"));
    CHECK(gap_set(h, {1, 4, Direction::Cw}) == std::vector<std::size_t>{2, 3});
    CHECK_THROWS_AS(gap_set(h, {0, 1, Direction::Ccw}), std::invalid_argument);
}

TEST_CASE("path theorem, balance and orientation up to 13 boxes") {
    for (std::size_t n = 0; n <= 6; ++n) {
        for (const SignSeq& s : enumerate_balanced(n, Mode::OddKnot)) {
            const auto g = build_graph(s);
            CAPTURE(s.str());
            CHECK(g.edges_a.size() == n);
            CHECK(g.edges_b.size() == n);
            CHECK(is_path(g).is_path);
            std::vector<int> deg_a(s.size()), deg_b(s.size());
            for (const auto& e : g.edges_a) {
                CHECK(s.is_minus(e.tail));
                CHECK(s.is_plus(e.head));
                ++deg_a[e.tail];
                ++deg_a[e.head];
            }
            for (const auto& e : g.edges_b) {
                CHECK(s.is_plus(e.tail));
                CHECK(s.is_minus(e.head));
                ++deg_b[e.tail];
                ++deg_b[e.head];
            }
            CHECK(*std::max_element(deg_a.begin(), deg_a.end()) <= 1);
            CHECK(*std::max_element(deg_b.begin(), deg_b.end()) <= 1);
            for (const auto* family : {&g.edges_a, &g.edges_b}) {
                for (const auto& e : *family) {
                    int balance = 0;
                    for (std::size_t v : gap_set(g, e)) balance += s.is_plus(v) ? 1 : -1;
                    CHECK(balance == 0);
                }
            }
        }
    }
}

TEST_CASE("DOT export matches golden files") {
    CHECK(to_dot(build_graph(SignSeq::parse("+-+-+"))) == read_golden("G_alternating_5.dot"));
    CHECK(to_dot(build_graph(SignSeq::parse("+++--"))) == read_golden("G_modelex_5.dot"));
}
