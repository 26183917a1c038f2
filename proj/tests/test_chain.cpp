#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "ehp/chain.hpp"
#include "ehp/oracle.hpp"
#include "support.hpp"

using ehp::BenzenoidGraph;
using ehp::ChainSpec;
using ehp::Graph;

namespace {

std::string swap_lr(std::string turns) {
    for (char& c : turns) {
        if (c == 'L') c = 'R';
        else if (c == 'R') c = 'L';
    }
    return turns;
}

}  // namespace

TEST_CASE("parse_spec accepts the h[:turns] grammar") {
    ChainSpec one = ehp::parse_spec("1");
    CHECK(one.hexagons == 1);
    CHECK(one.turns.empty());

    ChainSpec tetra = ehp::parse_spec("4:SS");
    CHECK(tetra.hexagons == 4);
    CHECK(tetra.turns == "SS");
    CHECK(tetra.is_linear());

    CHECK(ehp::parse_spec("2").turns.empty());
    CHECK(ehp::parse_spec("5:LRS").turns == "LRS");
    CHECK_FALSE(ehp::parse_spec("5:LRS").is_linear());
}

TEST_CASE("parse_spec rejects malformed input") {
    CHECK_THROWS_AS(ehp::parse_spec("3:X"), std::invalid_argument);
    CHECK_THROWS_AS(ehp::parse_spec(""), std::invalid_argument);
    CHECK_THROWS_AS(ehp::parse_spec("abc"), std::invalid_argument);
    CHECK_THROWS_AS(ehp::parse_spec("0"), std::invalid_argument);
    CHECK_THROWS_AS(ehp::parse_spec("-2"), std::invalid_argument);
    CHECK_THROWS_AS(ehp::parse_spec("4:S"), std::invalid_argument);    // too short
    CHECK_THROWS_AS(ehp::parse_spec("4:SSS"), std::invalid_argument);  // too long
    CHECK_THROWS_AS(ehp::parse_spec("2:S"), std::invalid_argument);
    CHECK_THROWS_AS(ehp::parse_spec("99999999999999999999"), std::invalid_argument);
    CHECK_THROWS_AS(ehp::parse_spec("4:ss"), std::invalid_argument);  // lowercase
}

TEST_CASE("spec round-trips through to_string") {
    for (const char* text : {"1", "2", "3:L", "7:LSRSL"}) {
        CHECK(ehp::to_string(ehp::parse_spec(text)) == text);
    }
}

TEST_CASE("build_graph: single hexagon is a 6-cycle") {
    BenzenoidGraph g = ehp::build_graph(ChainSpec{1, ""});
    CHECK(g.graph.vertex_count() == 6);
    CHECK(g.graph.edge_count() == 6);
    for (std::uint32_t v = 0; v < 6; ++v) CHECK(g.graph.degree(v) == 2);
    CHECK(g.graph.is_connected());
    CHECK_FALSE(g.overlapping);
    CHECK(g.hexagon_cycles.size() == 1);
    CHECK(g.attachment_edges.size() == 1);
}

TEST_CASE("build_graph: naphthalene skeleton") {
    BenzenoidGraph g = ehp::build_graph(ChainSpec{2, ""});
    CHECK(g.graph.vertex_count() == 10);
    CHECK(g.graph.edge_count() == 11);
    int degree_three = 0;
    for (std::uint32_t v = 0; v < 10; ++v) {
        CHECK((g.graph.degree(v) == 2 || g.graph.degree(v) == 3));
        if (g.graph.degree(v) == 3) ++degree_three;
    }
    CHECK(degree_three == 2);
    // The fused edge joins the two degree-3 vertices.
    ehp::Edge fused = g.attachment_edges[0];
    CHECK(g.graph.degree(fused.u) == 3);
    CHECK(g.graph.degree(fused.v) == 3);
}

TEST_CASE("build_graph: vertex and edge counts follow 4h+2 and 5h+1") {
    for (const ChainSpec& spec :
         {ChainSpec{4, "SS"}, ChainSpec{5, "LRL"}, ChainSpec{7, "LLLLL"}, ChainSpec{6, "RSRS"}}) {
        BenzenoidGraph g = ehp::build_graph(spec);
        std::size_t h = static_cast<std::size_t>(spec.hexagons);
        CHECK(g.graph.vertex_count() == 4 * h + 2);
        CHECK(g.graph.edge_count() == 5 * h + 1);
        CHECK(g.graph.is_connected());
        std::size_t max_degree = 0;
        for (std::uint32_t v = 0; v < g.graph.vertex_count(); ++v) {
            max_degree = std::max(max_degree, g.graph.degree(v));
        }
        CHECK(max_degree == 3);
        CHECK(g.hexagon_cycles.size() == h);
        CHECK(g.attachment_edges.size() == h);
        // Every hexagon cycle really is a 6-cycle in the graph.
        for (const auto& cycle : g.hexagon_cycles) {
            for (int j = 0; j < 6; ++j) {
                CHECK(g.graph.find_edge(cycle[j], cycle[(j + 1) % 6]).has_value());
            }
        }
        // Attachment endpoints of the last hexagon stay at degree 2.
        CHECK(g.graph.degree(g.attachment().u) == 2);
        CHECK(g.graph.degree(g.attachment().v) == 2);
    }
}

TEST_CASE("consecutive hexagons share exactly one edge, others none") {
    BenzenoidGraph g = ehp::build_graph(ChainSpec{5, "LSR"});
    auto shared_vertices = [&](int i, int j) {
        int count = 0;
        for (auto a : g.hexagon_cycles[i]) {
            for (auto b : g.hexagon_cycles[j]) {
                if (a == b) ++count;
            }
        }
        return count;
    };
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            CHECK(shared_vertices(i, j) == (j == i + 1 ? 2 : 0));
        }
    }
}

TEST_CASE("enumerate_chains lists every turn string") {
    CHECK(ehp::enumerate_chains(1).size() == 1);
    CHECK(ehp::enumerate_chains(2).size() == 1);
    auto three = ehp::enumerate_chains(3);
    REQUIRE(three.size() == 3);
    CHECK(three[0].turns == "L");
    CHECK(three[1].turns == "S");
    CHECK(three[2].turns == "R");
    CHECK(ehp::enumerate_chains(7).size() == 243);
    CHECK_THROWS_AS(ehp::enumerate_chains(13), std::invalid_argument);
    CHECK_THROWS_AS(ehp::enumerate_chains(5, 4), std::invalid_argument);
}

TEST_CASE("mirror image of a chain is isomorphic") {
    for (const ChainSpec& spec : {ChainSpec{3, "L"}, ChainSpec{3, "R"}, ChainSpec{3, "S"}}) {
        ChainSpec mirrored{spec.hexagons, swap_lr(spec.turns)};
        CHECK(ehp::testing::graphs_isomorphic(ehp::build_graph(spec).graph,
                                              ehp::build_graph(mirrored).graph));
    }
    // Larger chains: compare the full distance census instead.
    for (int h = 4; h <= 6; ++h) {
        for (const ChainSpec& spec : ehp::enumerate_chains(h)) {
            ChainSpec mirrored{spec.hexagons, swap_lr(spec.turns)};
            CHECK(ehp::oracle::edge_hosoya(ehp::build_graph(spec).graph) ==
                  ehp::oracle::edge_hosoya(ehp::build_graph(mirrored).graph));
        }
    }
}

TEST_CASE("reversed turn string encodes an isomorphic chain") {
    for (const ChainSpec& spec :
         {ChainSpec{4, "LS"}, ChainSpec{5, "LRS"}, ChainSpec{6, "LLSR"}}) {
        ChainSpec reversed{spec.hexagons, {spec.turns.rbegin(), spec.turns.rend()}};
        CHECK(ehp::oracle::edge_hosoya(ehp::build_graph(spec).graph) ==
              ehp::oracle::edge_hosoya(ehp::build_graph(reversed).graph));
    }
}

TEST_CASE("helicene-like all-L chain sets the overlap flag from h=6 on") {
    CHECK_FALSE(ehp::build_graph(ChainSpec{5, "LLL"}).overlapping);
    BenzenoidGraph g = ehp::build_graph(ChainSpec{6, "LLLL"});
    CHECK(g.overlapping);
    // Still a perfectly valid abstract chain.
    CHECK(g.graph.vertex_count() == 26);
    CHECK(g.graph.edge_count() == 31);
    CHECK(g.graph.is_connected());
    CHECK(ehp::build_graph(ChainSpec{7, "LLLLL"}).overlapping);
}

TEST_CASE("edge-list output round-trips through the reader") {
    BenzenoidGraph g = ehp::build_graph(ChainSpec{4, "LS"});
    std::stringstream buffer;
    ehp::write_edge_list(buffer, g.graph);
    Graph back = ehp::read_edge_list(buffer);
    CHECK(back.vertex_count() == g.graph.vertex_count());
    CHECK(back.edge_count() == g.graph.edge_count());
    CHECK(ehp::oracle::edge_hosoya(back) == ehp::oracle::edge_hosoya(g.graph));

    std::stringstream bad("0 1\n2\n");
    CHECK_THROWS_AS(ehp::read_edge_list(bad), std::invalid_argument);
}
