#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <homlab/constructions.hh>
#include <homlab/error.hh>
#include <homlab/formats.hh>

#include <cstdio>
#include <filesystem>
#include <numeric>
#include <random>

using namespace homlab;

using std::string;
using std::vector;

namespace
{
    auto random_graph(std::mt19937_64 & rng, int n, double density) -> Graph
    {
        std::bernoulli_distribution edge(density);
        Graph g(n);
        for (int u = 1 ; u <= n ; ++u)
            for (int v = u + 1 ; v <= n ; ++v)
                if (edge(rng))
                    g.add_edge(u, v);
        return g;
    }

    auto random_digraph(std::mt19937_64 & rng, int n, double density) -> DiGraph
    {
        std::bernoulli_distribution arc(density);
        vector<Edge> arcs;
        for (int u = 1 ; u <= n ; ++u)
            for (int v = 1 ; v <= n ; ++v)
                if (arc(rng))
                    arcs.emplace_back(u, v);
        return DiGraph(n, arcs);
    }

    auto random_value(std::mt19937_64 & rng) -> ExtRational
    {
        int v = std::uniform_int_distribution<int>(-3, 8)(rng);
        return v == 8 ? ExtRational::infinity() : ExtRational{ Rational(v, 3) };
    }

    auto error_line(const string & text, auto parse) -> string
    {
        try {
            parse(text);
        }
        catch (const InvalidInput & e) {
            return e.what();
        }
        return "no error";
    }
}

TEST_CASE("graph files")
{
    auto g = parse_graph("graph 2\ne 1 2\n");
    REQUIRE(std::holds_alternative<Graph>(g));
    CHECK(std::get<Graph>(g) == Graph(2, { { 1, 2 } }));
    auto d = parse_graph("# loop\ndigraph 1\n\na 1 1   # allowed\n");
    REQUIRE(std::holds_alternative<DiGraph>(d));
    CHECK(std::get<DiGraph>(d).has_arc(1, 1));

    CHECK(error_line("graph 2\ne 1 1\n", parse_graph) == "line 2: self-loop in an undirected graph");
    CHECK(error_line("graph 2\ne 1 2\ne 2 1\n", parse_graph) == "line 3: duplicate edge");
    CHECK(error_line("digraph 2\na 1 2\na 1 2\n", parse_graph) == "line 3: duplicate arc");
    CHECK(error_line("graph 2\ne 1 3\n", parse_graph).starts_with("line 2:"));
    CHECK(error_line("graph 2\na 1 2\n", parse_graph).starts_with("line 2:"));
    CHECK(error_line("graph 2\ne 1\n", parse_graph).starts_with("line 2:"));
    CHECK(error_line("graph x\n", parse_graph).starts_with("line 1:"));
    CHECK_THROWS_AS(parse_graph(""), InvalidInput);
    CHECK_THROWS_AS(parse_undirected("digraph 1\n"), InvalidInput);
    CHECK(parse_directed("graph 2\ne 1 2\n").arcs().size() == 2);

    std::mt19937_64 rng(1);
    for (int round = 0 ; round < 100 ; ++round) {
        int n = std::uniform_int_distribution<int>(0, 9)(rng);
        auto h = random_graph(rng, n, 0.4);
        CHECK(parse_undirected(write_graph(h)) == h);
        auto a = random_digraph(rng, n, 0.3);
        CHECK(parse_directed(write_graph(a)) == a);
    }
}

TEST_CASE("coloring, layering, layout and decomposition files")
{
    Coloring c({ 2, 1, 2 });
    CHECK(parse_coloring(write_coloring(c)) == c);
    CHECK(parse_coloring("c 2 1\nc 1 3\n") == Coloring({ 3, 1 }));
    CHECK_THROWS_AS(parse_coloring("c 1 1\nc 1 2\n"), InvalidInput);
    CHECK_THROWS_AS(parse_coloring("c 1 0\n"), InvalidInput);
    CHECK_THROWS_AS(parse_coloring("c 2 1\n", 2), InvalidInput);
    CHECK_THROWS_AS(parse_coloring("c 3 1\n", 2), InvalidInput);

    auto layering = bfs_layering(cycle_graph(7), 3);
    CHECK(parse_layering(write_layering(layering), 7) == layering);
    CHECK_THROWS_AS(parse_layering("layer 1 1\nlayer 0 2\n", 2), InvalidInput);
    CHECK_THROWS_AS(parse_layering("layer 0 1\n", 2), InvalidInput);

    std::mt19937_64 rng(2);
    for (int round = 0 ; round < 50 ; ++round) {
        int n = std::uniform_int_distribution<int>(1, 9)(rng);
        auto g = random_graph(rng, n, 0.3);
        vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 1);
        std::shuffle(order.begin(), order.end(), rng);
        auto layout = greedy_track_layout(g, order);
        CHECK(parse_track_layout(write_track_layout(layout), n) == layout);

        auto td = decomposition_from_elimination(g, order);
        CHECK(parse_tree_decomposition(write_tree_decomposition(td)) == td);
    }
    CHECK_THROWS_AS(parse_track_layout("c 1 1\nc 2 2\n", 2), InvalidInput);
    CHECK_THROWS_AS(parse_track_layout("c 1 1\nc 2 2\norder 1 2\norder 2 1\n", 2), InvalidInput);
    CHECK_THROWS_AS(parse_tree_decomposition("bag 1 1\nbag 1 2\n"), InvalidInput);
    CHECK_THROWS_AS(parse_tree_decomposition("bag 1 1\nbag 3 2\n"), InvalidInput);
    CHECK_THROWS_AS(parse_tree_decomposition("bag 1 1\nbag 2 2\ntedge 1 1\n"), InvalidInput);
}

TEST_CASE("cost and vcsp files")
{
    std::mt19937_64 rng(3);
    for (int round = 0 ; round < 50 ; ++round) {
        auto g = random_digraph(rng, std::uniform_int_distribution<int>(1, 5)(rng), 0.3);
        auto h = random_digraph(rng, std::uniform_int_distribution<int>(1, 4)(rng), 0.4);
        ValHomInstance instance(g, h);
        for (auto & a : g.arcs())
            for (auto & b : h.arcs())
                instance.set_eta(a, b, random_value(rng));
        auto back = parse_costs(write_costs(instance), g, h, ExtRational::infinity());
        for (std::size_t a = 0 ; a < g.arcs().size() ; ++a)
            for (std::size_t b = 0 ; b < h.arcs().size() ; ++b)
                CHECK(back.eta(static_cast<int>(a), static_cast<int>(b)) == instance.eta(static_cast<int>(a), static_cast<int>(b)));

        int d = std::uniform_int_distribution<int>(1, 3)(rng), n = std::uniform_int_distribution<int>(1, 4)(rng);
        VcspInstance vcsp(d, n);
        int terms = std::uniform_int_distribution<int>(0, 4)(rng);
        for (int t = 0 ; t < terms ; ++t) {
            int arity = std::uniform_int_distribution<int>(1, 3)(rng);
            CostFunction f(d, arity);
            for (std::size_t i = 0 ; i < f.table_size() ; ++i)
                f.set_index(i, random_value(rng));
            vector<int> scope(arity);
            for (auto & x : scope)
                x = std::uniform_int_distribution<int>(1, n)(rng);
            vcsp.add_term(f, scope);
        }
        CHECK(parse_vcsp(write_vcsp(vcsp)) == vcsp);
    }

    DiGraph arc(2, { { 1, 2 } });
    auto listed = parse_costs("cost 1 2 1 2 5/2\n", arc, arc, ExtRational{ 0 });
    CHECK(listed.eta(0, 0) == ExtRational{ Rational(5, 2) });
    CHECK(parse_costs("", arc, arc, ExtRational::infinity()).eta(0, 0).is_infinite());
    CHECK(error_line("cost 1 2 2 1 1\n", [&] (const string & t) { parse_costs(t, arc, arc, 0); }).starts_with("line 1:"));
    CHECK_THROWS_AS(parse_costs("cost 1 2 1 2 1\ncost 1 2 1 2 2\n", arc, arc, 0), InvalidInput);

    auto v = parse_vcsp("vcsp 2 2\nterm 2 1 2\nt 1 2 3\nt 2 1 1/2\n");
    CHECK(brute_force_opt(v).value == ExtRational{ Rational(1, 2) });
    CHECK(v.cost(vector<int>{ 1, 1 }).is_infinite());
    CHECK_THROWS_AS(parse_vcsp("vcsp 2 2\nt 1 1 0\n"), InvalidInput);
    CHECK_THROWS_AS(parse_vcsp("vcsp 2 2\nterm 2 1 3\n"), InvalidInput);
    CHECK_THROWS_AS(parse_vcsp("vcsp 2 2\nterm 1 1\nt 3 0\n"), InvalidInput);
    CHECK_THROWS_AS(parse_vcsp("vcsp 2 2\nterm 1 1\nt 1 0\nt 1 1\n"), InvalidInput);
}

TEST_CASE("triple and language files")
{
    CHECK(parse_triple("triple 3\n") == Triple(3));
    auto t = parse_triple("triple 2\nf 1 1 2 2 2\n");
    CHECK(t.apply(1, 2, 2) == std::array<int, 3>{ 2, 2, 2 });
    CHECK(t.apply(2, 1, 1) == std::array<int, 3>{ 2, 1, 1 });
    CHECK_THROWS_AS(parse_triple("triple 2\nf 4 1 1 1 1\n"), InvalidInput);
    CHECK_THROWS_AS(parse_triple("triple 2\nf 1 1 1 1 3\n"), InvalidInput);
    CHECK_THROWS_AS(parse_triple("triple 2\nf 1 1 1 1 1\nf 1 1 1 1 1\n"), InvalidInput);

    std::mt19937_64 rng(4);
    for (int round = 0 ; round < 30 ; ++round) {
        int d = std::uniform_int_distribution<int>(1, 5)(rng);
        Triple random(d);
        std::uniform_int_distribution<int> value(1, d);
        for (int a = 1 ; a <= d ; ++a)
            for (int b = 1 ; b <= d ; ++b)
                for (int c = 1 ; c <= d ; ++c)
                    if (value(rng) == 1)
                        random.set(a, b, c, { value(rng), value(rng), value(rng) });
        CHECK(parse_triple(write_triple(random)) == random);
    }
    auto g = cycle_graph(6);
    auto cohen = cohen_triple(g, distance2_coloring(g));
    CHECK(parse_triple(write_triple(cohen)) == cohen);

    for (int k = 1 ; k <= 4 ; ++k) {
        auto language = odd_cycle_language(k);
        CHECK(parse_language(write_language(language)) == language);
    }
    auto colored = crisp_language_of_coloring(g, Coloring({ 1, 2, 3, 1, 2, 3 }));
    CHECK(parse_language(write_language(colored)) == colored);
    CHECK(parse_language("language 2\nrelation empty\n").relations().front().tuples.empty());
    CHECK_THROWS_AS(parse_language("language 2\np 1 1\n"), InvalidInput);
    CHECK_THROWS_AS(parse_language("language 2\nrelation r\np 1 3\n"), InvalidInput);
    CHECK_THROWS_AS(parse_language("language 2\nrelation r\nrelation r\n"), InvalidInput);
}

TEST_CASE("files")
{
    auto path = (std::filesystem::temp_directory_path() / "homlab-test-formats.txt").string();
    write_file(path, "graph 1\n");
    CHECK(read_file(path) == "graph 1\n");
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_file(path), IoError);
    CHECK_THROWS_AS(write_file("/nonexistent-directory/x", "y"), IoError);
}
