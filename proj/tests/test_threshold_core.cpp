#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "twalk/block_form.hpp"
#include "twalk/graph.hpp"

using namespace twalk;

TEST_CASE("creation sequence parsing") {
    const CreationSequence seq = parse_creation_sequence("0011011");
    CHECK(seq.size() == 7);
    CHECK(seq.connected());

    const CreationSequence k2 = parse_creation_sequence("01");
    CHECK(k2.size() == 2);
    CHECK(k2.connected());

    CHECK_THROWS_AS(parse_creation_sequence("012"), std::invalid_argument);
    CHECK_THROWS_AS(parse_creation_sequence(""), std::invalid_argument);
    CHECK_FALSE(parse_creation_sequence("0110").connected());

    // The seed letter carries no information and is normalized to 0.
    CHECK(parse_creation_sequence("11").word() == "01");
}

TEST_CASE("creation sequence to block form") {
    CHECK(creation_to_block_form(parse_creation_sequence("0011011")).internal_blocks() ==
          std::vector<int>{2, 2, 1, 2});
    CHECK(creation_to_block_form(parse_creation_sequence("0011")).internal_blocks() ==
          std::vector<int>{2, 2});

    // K_3: the odd clique-first shape is stored with the O_1 prefix.
    const BlockForm k3 = creation_to_block_form(parse_creation_sequence("011"));
    CHECK(k3.internal_blocks() == std::vector<int>{1, 2});
    CHECK(k3.odd_origin());
    CHECK(k3.canonical_blocks() == std::vector<int>{3});
    CHECK(degree_sequence(block_form_to_graph(k3)) ==
          degree_sequence(testing::graph_from_word("011")));

    CHECK_THROWS_WITH(creation_to_block_form(parse_creation_sequence("0010")),
                      Catch::Matchers::ContainsSubstring("disconnected"));
}

TEST_CASE("block form parsing and display") {
    CHECK(BlockForm::parse("2,6,4,4").internal_blocks() == std::vector<int>{2, 6, 4, 4});
    CHECK(BlockForm::parse("7").internal_blocks() == std::vector<int>{1, 6});
    CHECK(BlockForm::parse("7").str() == "7");
    CHECK(BlockForm::parse("1,1").canonical_blocks() == std::vector<int>{2});
    CHECK(BlockForm::parse("2,2,1,2").str() == "2,2,1,2");
    CHECK_THROWS_AS(BlockForm::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(BlockForm::parse("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(BlockForm::parse("2,0"), std::invalid_argument);
    CHECK_THROWS_AS(BlockForm::parse("1,2,3"), std::invalid_argument);
}

TEST_CASE("block form to graph") {
    const Graph g22 = block_form_to_graph(BlockForm::parse("2,2"));
    CHECK(degree_sequence(g22) == DegreeSequence{2, 2, 3, 3});
    CHECK_FALSE(g22.adjacent(1, 2));
    CHECK(g22.adjacent(3, 4));

    const Graph k2 = block_form_to_graph(BlockForm::parse("1,1"));
    CHECK(degree_sequence(k2) == DegreeSequence{1, 1});

    CHECK(degree_sequence(block_form_to_graph(BlockForm::parse("2,2,1,2"))) ==
          DegreeSequence{2, 4, 4, 5, 5, 6, 6});
}

TEST_CASE("laplacian entries") {
    const SymmetricMatrix k2 = laplacian(block_form_to_graph(BlockForm::parse("1,1")));
    CHECK(k2(0, 0) == 1.0);
    CHECK(k2(0, 1) == -1.0);

    const SymmetricMatrix l = laplacian(block_form_to_graph(BlockForm::parse("2,2")));
    const double expected[4][4] = {{2, 0, -1, -1}, {0, 2, -1, -1}, {-1, -1, 3, -1}, {-1, -1, -1, 3}};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(l(r, c) == expected[r][c]);

    const SymmetricMatrix empty = laplacian(Graph(3));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(empty(r, c) == 0.0);

    // Rows sum to zero on a nontrivial instance.
    const SymmetricMatrix big = laplacian(block_form_to_graph(BlockForm::parse("2,6,4,4")));
    for (int r = 0; r < big.order(); ++r) {
        double sum = 0.0;
        for (int c = 0; c < big.order(); ++c) sum += big(r, c);
        CHECK(sum == 0.0);
    }
}

TEST_CASE("conjugate spectrum") {
    CHECK(conjugate_spectrum({2, 4, 4, 5, 5, 6, 6}) == std::vector<int>{7, 7, 6, 6, 4, 2, 0});
    CHECK(conjugate_spectrum({1, 1}) == std::vector<int>{2, 0});
    CHECK(conjugate_spectrum({2, 2, 3, 3}) == std::vector<int>{4, 4, 2, 0});
}

TEST_CASE("sum of conjugate spectrum equals twice the edge count") {
    for (int len = 2; len <= 9; ++len)
        for (const auto& word : testing::all_words(len)) {
            const Graph g = testing::graph_from_word(word);
            const DegreeSequence d = degree_sequence(g);
            const std::vector<int> spectrum = conjugate_spectrum(d);
            long long degree_sum = 0, spectrum_sum = 0;
            for (int x : d) degree_sum += x;
            for (int x : spectrum) spectrum_sum += x;
            REQUIRE(degree_sum == 2LL * static_cast<long long>(g.edges().size()));
            REQUIRE(spectrum_sum == degree_sum);
        }
}

TEST_CASE("threshold recognition") {
    // K_4 minus one edge strips to 0011.
    Graph g = complete_graph(4);
    g.set_edge(1, 2, false);
    const auto word = recognize_threshold(g);
    REQUIRE(word.has_value());
    CHECK(word->word() == "0011");

    CHECK_FALSE(recognize_threshold(testing::path_graph(4)).has_value());
    CHECK_FALSE(recognize_threshold(testing::cycle_graph(4)).has_value());
    REQUIRE(recognize_threshold(Graph(1)).has_value());
    CHECK(recognize_threshold(Graph(1))->word() == "0");
}

TEST_CASE("recognition succeeds on every block-form graph") {
    for (int len = 2; len <= 8; ++len)
        for (const auto& word : testing::all_connected_words(len)) {
            const BlockForm form = creation_to_block_form(CreationSequence(word));
            const Graph g = block_form_to_graph(form);
            const auto recovered = recognize_threshold(g);
            REQUIRE(recovered.has_value());
            // Isomorphy via degree sequences, which characterize threshold graphs.
            REQUIRE(degree_sequence(testing::graph_from_word(recovered->word())) == degree_sequence(g));
        }
}

TEST_CASE("round trip: word -> block form -> graph matches direct construction") {
    for (int len = 2; len <= 10; ++len)
        for (const auto& word : testing::all_connected_words(len)) {
            const BlockForm form = creation_to_block_form(CreationSequence(word));
            REQUIRE(form.order() == len);
            REQUIRE(degree_sequence(block_form_to_graph(form)) ==
                    degree_sequence(testing::graph_from_word(word)));
        }
}

TEST_CASE("vertex deletion on block forms") {
    CHECK(delete_vertex_block_form(BlockForm::parse("2,6"), 1).internal_blocks() ==
          std::vector<int>{1, 6});
    CHECK(delete_vertex_block_form(BlockForm::parse("2,6"), 1).str() == "7");
    CHECK(delete_vertex_block_form(BlockForm::parse("2,6,4,4"), 3).internal_blocks() ==
          std::vector<int>{2, 6, 3, 4});
    CHECK(delete_vertex_block_form(BlockForm::parse("2,2,1,2"), 3).internal_blocks() ==
          std::vector<int>{2, 4});

    // Degree-sequence cross-check of the merge: deleting the O_1 vertex of
    // Gamma(2,2,1,2) leaves Gamma(2,4).
    Graph direct = block_form_to_graph(BlockForm::parse("2,2,1,2"));
    std::vector<int> degrees;
    for (int v = 1; v <= 7; ++v)
        if (v != 5) {
            int d = 0;
            for (int u = 1; u <= 7; ++u)
                if (u != 5 && direct.adjacent(u, v)) ++d;
            degrees.push_back(d);
        }
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == degree_sequence(block_form_to_graph(BlockForm::parse("2,4"))));

    CHECK_THROWS_WITH(delete_vertex_block_form(BlockForm::parse("2,1"), 2),
                      Catch::Matchers::ContainsSubstring("disconnects"));
    CHECK_THROWS_AS(delete_vertex_block_form(BlockForm::parse("2,6"), 3), std::invalid_argument);
    CHECK_THROWS_AS(delete_vertex_block_form(BlockForm::parse("1,1"), 1), std::invalid_argument);

    // Odd canonical forms: indices refer to canonical blocks.
    CHECK(delete_vertex_block_form(BlockForm::parse("2,2,4"), 3).internal_blocks() ==
          std::vector<int>{1, 1, 2, 3});
    CHECK(delete_vertex_block_form(BlockForm::parse("2,6,4"), 1).str() == "7,4");
}
