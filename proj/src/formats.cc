#include <homlab/error.hh>
#include <homlab/formats.hh>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

using namespace homlab;

using std::map;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace
{
    struct Line
    {
        int number;
        vector<string> tokens;
    };

    auto split_lines(string_view text) -> vector<Line>
    {
        vector<Line> result;
        int number = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find('\n', start);
            if (end == string_view::npos)
                end = text.size();
            auto line = text.substr(start, end - start);
            ++number;
            if (auto hash = line.find('#') ; hash != string_view::npos)
                line = line.substr(0, hash);
            Line parsed{ number, { } };
            std::istringstream stream{ string(line) };
            for (string token ; stream >> token ; )
                parsed.tokens.push_back(token);
            if (! parsed.tokens.empty())
                result.push_back(std::move(parsed));
            start = end + 1;
        }
        return result;
    }

    [[noreturn]] auto fail(const Line & line, const string & what) -> void
    {
        throw InvalidInput("line " + to_string(line.number) + ": " + what);
    }

    auto to_int(const Line & line, const string & token) -> int
    {
        int value = 0;
        auto [end, error] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (error != std::errc{ } || end != token.data() + token.size())
            fail(line, "expected an integer, got '" + token + "'");
        return value;
    }

    auto to_value(const Line & line, const string & token) -> ExtRational
    {
        try {
            return parse_ext_rational(token);
        }
        catch (const InvalidInput & e) {
            fail(line, e.what());
        }
    }

    auto expect(const Line & line, std::size_t count) -> void
    {
        if (line.tokens.size() != count)
            fail(line, "'" + line.tokens[0] + "' takes " + to_string(count - 1) + " arguments");
    }

    auto at_least(const Line & line, std::size_t count) -> void
    {
        if (line.tokens.size() < count)
            fail(line, "'" + line.tokens[0] + "' takes at least " + to_string(count - 1) + " arguments");
    }

    auto check_vertex(const Line & line, int v, int n, const string & what = "vertex") -> void
    {
        if (v < 1 || v > n)
            fail(line, what + " " + to_string(v) + " out of range 1.." + to_string(n));
    }

    /// Re-throws InvalidInput from a structure constructor with the line attached.
    template <typename F_>
    auto at_line(const Line & line, F_ && f)
    {
        try {
            return f();
        }
        catch (const InvalidInput & e) {
            fail(line, e.what());
        }
    }

    auto header(const vector<Line> & lines, const string & keyword) -> int
    {
        if (lines.empty())
            throw InvalidInput("empty input, expected '" + keyword + "'");
        auto & first = lines.front();
        if (first.tokens[0] != keyword)
            fail(first, "expected '" + keyword + "' header");
        expect(first, 2);
        int value = to_int(first, first.tokens[1]);
        if (value < 0)
            fail(first, "negative size");
        return value;
    }
}

auto homlab::parse_graph(string_view text) -> AnyGraph
{
    auto lines = split_lines(text);
    if (lines.empty())
        throw InvalidInput("empty input, expected 'graph N' or 'digraph N'");
    auto & first = lines.front();
    bool directed = first.tokens[0] == "digraph";
    if (! directed && first.tokens[0] != "graph")
        fail(first, "expected 'graph N' or 'digraph N'");
    int n = header(lines, first.tokens[0]);

    string keyword = directed ? "a" : "e";
    vector<Edge> edges;
    std::set<Edge> seen;
    for (std::size_t i = 1 ; i < lines.size() ; ++i) {
        auto & line = lines[i];
        if (line.tokens[0] != keyword)
            fail(line, "expected '" + keyword + " u v'");
        expect(line, 3);
        int u = to_int(line, line.tokens[1]), v = to_int(line, line.tokens[2]);
        check_vertex(line, u, n);
        check_vertex(line, v, n);
        if (! directed && u == v)
            fail(line, "self-loop in an undirected graph");
        Edge key = directed ? Edge{ u, v } : Edge{ std::min(u, v), std::max(u, v) };
        if (! seen.insert(key).second)
            fail(line, directed ? "duplicate arc" : "duplicate edge");
        edges.emplace_back(u, v);
    }
    if (directed)
        return DiGraph(n, edges);
    return Graph(n, edges);
}

auto homlab::parse_undirected(string_view text) -> Graph
{
    auto g = parse_graph(text);
    if (auto * u = std::get_if<Graph>(&g))
        return *u;
    throw InvalidInput("expected an undirected graph");
}

auto homlab::parse_directed(string_view text) -> DiGraph
{
    auto g = parse_graph(text);
    if (auto * d = std::get_if<DiGraph>(&g))
        return *d;
    return symmetric_digraph(std::get<Graph>(g));
}

auto homlab::write_graph(const Graph & g) -> string
{
    string result = "graph " + to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges())
        result += "e " + to_string(u) + " " + to_string(v) + "\n";
    return result;
}

auto homlab::write_graph(const DiGraph & g) -> string
{
    string result = "digraph " + to_string(g.size()) + "\n";
    for (auto [u, v] : g.arcs())
        result += "a " + to_string(u) + " " + to_string(v) + "\n";
    return result;
}

namespace
{
    /// Reads the c lines among others; returns colors indexed by vertex - 1, 0 if unset.
    auto read_colors(const vector<Line> & lines, int n, const vector<string> & skip) -> vector<int>
    {
        map<int, int> colors;
        int largest = 0;
        for (auto & line : lines) {
            if (std::find(skip.begin(), skip.end(), line.tokens[0]) != skip.end())
                continue;
            if (line.tokens[0] != "c")
                fail(line, "expected 'c v color'");
            expect(line, 3);
            int v = to_int(line, line.tokens[1]), c = to_int(line, line.tokens[2]);
            if (n >= 0)
                check_vertex(line, v, n);
            else if (v < 1)
                fail(line, "vertex " + to_string(v) + " out of range");
            if (c < 1)
                fail(line, "colors start at 1");
            if (! colors.emplace(v, c).second)
                fail(line, "vertex " + to_string(v) + " colored twice");
            largest = std::max(largest, v);
        }
        if (n < 0)
            n = largest;
        vector<int> result(n, 0);
        for (auto [v, c] : colors)
            result[v - 1] = c;
        for (int v = 1 ; v <= n ; ++v)
            if (! result[v - 1])
                throw InvalidInput("vertex " + to_string(v) + " has no color");
        return result;
    }
}

auto homlab::parse_coloring(string_view text, int n) -> Coloring
{
    return Coloring(read_colors(split_lines(text), n, { }));
}

auto homlab::write_coloring(const Coloring & c) -> string
{
    string result;
    for (int v = 1 ; v <= c.size() ; ++v)
        result += "c " + to_string(v) + " " + to_string(c.color(v)) + "\n";
    return result;
}

auto homlab::parse_layering(string_view text, int n) -> Layering
{
    vector<vector<Vertex>> layers;
    for (auto & line : split_lines(text)) {
        if (line.tokens[0] != "layer")
            fail(line, "expected 'layer i v1 v2 ...'");
        at_least(line, 3);
        int i = to_int(line, line.tokens[1]);
        if (i != static_cast<int>(layers.size()))
            fail(line, "layers must be listed in order from 0, expected " + to_string(layers.size()));
        vector<Vertex> layer;
        for (std::size_t t = 2 ; t < line.tokens.size() ; ++t)
            layer.push_back(to_int(line, line.tokens[t]));
        layers.push_back(std::move(layer));
    }
    return Layering(n, std::move(layers));
}

auto homlab::write_layering(const Layering & layering) -> string
{
    string result;
    for (int i = 0 ; i < layering.depth() ; ++i) {
        result += "layer " + to_string(i);
        for (auto v : layering.layer(i))
            result += " " + to_string(v);
        result += "\n";
    }
    return result;
}

auto homlab::parse_track_layout(string_view text, int n) -> TrackLayout
{
    auto lines = split_lines(text);
    auto colors = read_colors(lines, n, { "order" });
    vector<Vertex> order;
    bool seen = false;
    for (auto & line : lines)
        if (line.tokens[0] == "order") {
            if (seen)
                fail(line, "second 'order' line");
            seen = true;
            for (std::size_t t = 1 ; t < line.tokens.size() ; ++t)
                order.push_back(to_int(line, line.tokens[t]));
        }
    if (! seen)
        throw InvalidInput("track layout has no 'order' line");
    return TrackLayout(Coloring(colors), order);
}

auto homlab::write_track_layout(const TrackLayout & layout) -> string
{
    string result = write_coloring(layout.coloring()) + "order";
    for (auto v : layout.order())
        result += " " + to_string(v);
    return result + "\n";
}

auto homlab::parse_tree_decomposition(string_view text) -> TreeDecomposition
{
    map<int, vector<Vertex>> bags;
    vector<std::pair<Line, Edge>> tree_edges;
    for (auto & line : split_lines(text)) {
        if (line.tokens[0] == "bag") {
            at_least(line, 2);
            int x = to_int(line, line.tokens[1]);
            if (x < 1)
                fail(line, "decomposition nodes start at 1");
            vector<Vertex> bag;
            for (std::size_t t = 2 ; t < line.tokens.size() ; ++t)
                bag.push_back(to_int(line, line.tokens[t]));
            std::sort(bag.begin(), bag.end());
            if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
                fail(line, "repeated vertex in a bag");
            if (! bags.emplace(x, std::move(bag)).second)
                fail(line, "node " + to_string(x) + " has two bags");
        }
        else if (line.tokens[0] == "tedge") {
            expect(line, 3);
            tree_edges.emplace_back(line, Edge{ to_int(line, line.tokens[1]), to_int(line, line.tokens[2]) });
        }
        else
            fail(line, "expected 'bag' or 'tedge'");
    }

    int nodes = static_cast<int>(bags.size());
    if (nodes > 0 && bags.rbegin()->first != nodes)
        throw InvalidInput("bags must be numbered 1.." + to_string(nodes));
    TreeDecomposition td;
    td.tree = Graph(nodes);
    for (auto & [line, e] : tree_edges) {
        check_vertex(line, e.first, nodes, "node");
        check_vertex(line, e.second, nodes, "node");
        if (e.first == e.second)
            fail(line, "tree self-loop");
        if (! td.tree.add_edge(e.first, e.second))
            fail(line, "duplicate tree edge");
    }
    for (auto & [_, bag] : bags)
        td.bags.push_back(bag);
    return td;
}

auto homlab::write_tree_decomposition(const TreeDecomposition & td) -> string
{
    string result;
    for (int x = 1 ; x <= static_cast<int>(td.bags.size()) ; ++x) {
        result += "bag " + to_string(x);
        for (auto v : td.bag(x))
            result += " " + to_string(v);
        result += "\n";
    }
    for (auto [x, y] : td.tree.edges())
        result += "tedge " + to_string(x) + " " + to_string(y) + "\n";
    return result;
}

auto homlab::parse_costs(string_view text, const DiGraph & g, const DiGraph & h, const ExtRational & default_cost) -> ValHomInstance
{
    ValHomInstance instance(g, h, default_cost);
    std::set<std::pair<Edge, Edge>> seen;
    for (auto & line : split_lines(text)) {
        if (line.tokens[0] != "cost")
            fail(line, "expected 'cost gu gv hu hv VALUE'");
        expect(line, 6);
        Edge a{ to_int(line, line.tokens[1]), to_int(line, line.tokens[2]) };
        Edge b{ to_int(line, line.tokens[3]), to_int(line, line.tokens[4]) };
        if (! seen.emplace(a, b).second)
            fail(line, "arc pair listed twice");
        auto value = to_value(line, line.tokens[5]);
        at_line(line, [&] { instance.set_eta(a, b, value); return 0; });
    }
    return instance;
}

auto homlab::write_costs(const ValHomInstance & instance) -> string
{
    string result;
    auto & ga = instance.source().arcs();
    auto & ha = instance.target().arcs();
    for (std::size_t a = 0 ; a < ga.size() ; ++a)
        for (std::size_t b = 0 ; b < ha.size() ; ++b)
            result += "cost " + to_string(ga[a].first) + " " + to_string(ga[a].second) + " " + to_string(ha[b].first) + " "
                + to_string(ha[b].second) + " " + to_string(instance.eta(static_cast<int>(a), static_cast<int>(b))) + "\n";
    return result;
}

auto homlab::parse_vcsp(string_view text) -> VcspInstance
{
    auto lines = split_lines(text);
    if (lines.empty())
        throw InvalidInput("empty input, expected 'vcsp D N'");
    auto & first = lines.front();
    if (first.tokens[0] != "vcsp")
        fail(first, "expected 'vcsp D N' header");
    expect(first, 3);
    int d = to_int(first, first.tokens[1]), n = to_int(first, first.tokens[2]);
    if (d < 1 || n < 0)
        fail(first, "need D >= 1 and N >= 0");
    VcspInstance instance(d, n);

    std::optional<CostFunction> function;
    vector<int> scope;
    vector<char> listed;
    auto flush = [&] {
        if (function)
            instance.add_term(std::move(*function), scope);
        function.reset();
    };
    for (std::size_t i = 1 ; i < lines.size() ; ++i) {
        auto & line = lines[i];
        if (line.tokens[0] == "term") {
            flush();
            at_least(line, 2);
            int r = to_int(line, line.tokens[1]);
            if (r < 1)
                fail(line, "arity must be positive");
            expect(line, 2 + r);
            scope.clear();
            for (int p = 0 ; p < r ; ++p) {
                scope.push_back(to_int(line, line.tokens[2 + p]));
                check_vertex(line, scope.back(), n, "variable");
            }
            function = at_line(line, [&] { return CostFunction(d, r, ExtRational::infinity()); });
            listed.assign(function->table_size(), 0);
        }
        else if (line.tokens[0] == "t") {
            if (! function)
                fail(line, "row before any 'term'");
            int r = function->arity();
            expect(line, 2 + r);
            vector<int> tuple;
            for (int p = 0 ; p < r ; ++p) {
                tuple.push_back(to_int(line, line.tokens[1 + p]));
                check_vertex(line, tuple.back(), d, "domain value");
            }
            auto index = function->index(tuple);
            if (listed[index])
                fail(line, "row listed twice");
            listed[index] = 1;
            function->set_index(index, to_value(line, line.tokens[1 + r]));
        }
        else
            fail(line, "expected 'term' or 't'");
    }
    flush();
    return instance;
}

auto homlab::write_vcsp(const VcspInstance & instance) -> string
{
    string result = "vcsp " + to_string(instance.domain_size()) + " " + to_string(instance.num_variables()) + "\n";
    for (auto & term : instance.terms()) {
        result += "term " + to_string(term.function.arity());
        for (auto x : term.scope)
            result += " " + to_string(x);
        result += "\n";
        for (std::size_t i = 0 ; i < term.function.table_size() ; ++i) {
            auto & value = term.function.at_index(i);
            if (value.is_infinite())
                continue;
            result += "t";
            for (auto a : term.function.tuple(i))
                result += " " + to_string(a);
            result += " " + to_string(value) + "\n";
        }
    }
    return result;
}

auto homlab::parse_triple(string_view text) -> Triple
{
    auto lines = split_lines(text);
    int d = header(lines, "triple");
    if (d < 1 || d > 255)
        fail(lines.front(), "domain size must be in 1..255");
    Triple triple(d);
    std::set<std::array<int, 4>> seen;
    for (std::size_t i = 1 ; i < lines.size() ; ++i) {
        auto & line = lines[i];
        if (line.tokens[0] != "f")
            fail(line, "expected 'f i a b c value'");
        expect(line, 6);
        int which = to_int(line, line.tokens[1]);
        if (which < 1 || which > 3)
            fail(line, "operation index must be 1, 2 or 3");
        std::array<int, 4> entry{ which, 0, 0, 0 };
        for (int p = 0 ; p < 3 ; ++p) {
            entry[1 + p] = to_int(line, line.tokens[2 + p]);
            check_vertex(line, entry[1 + p], d, "domain value");
        }
        int value = to_int(line, line.tokens[5]);
        check_vertex(line, value, d, "domain value");
        if (! seen.insert(entry).second)
            fail(line, "entry listed twice");
        triple.f[which - 1].set(entry[1], entry[2], entry[3], value);
    }
    return triple;
}

auto homlab::write_triple(const Triple & triple) -> string
{
    int d = triple.domain_size();
    string result = "triple " + to_string(d) + "\n";
    for (int i = 0 ; i < 3 ; ++i)
        for (int a = 1 ; a <= d ; ++a)
            for (int b = 1 ; b <= d ; ++b)
                for (int c = 1 ; c <= d ; ++c) {
                    int projection = std::array<int, 3>{ a, b, c }[i];
                    int value = triple.f[i](a, b, c);
                    if (value != projection)
                        result += "f " + to_string(i + 1) + " " + to_string(a) + " " + to_string(b) + " " + to_string(c) + " "
                            + to_string(value) + "\n";
                }
    return result;
}

auto homlab::parse_language(string_view text) -> CrispLanguage
{
    auto lines = split_lines(text);
    int d = header(lines, "language");
    CrispLanguage language(d);
    std::optional<string> name;
    vector<Pair> tuples;
    auto flush = [&] {
        if (name)
            language.add_relation(*name, tuples);
        name.reset();
        tuples.clear();
    };
    std::set<string> names;
    for (std::size_t i = 1 ; i < lines.size() ; ++i) {
        auto & line = lines[i];
        if (line.tokens[0] == "relation") {
            flush();
            expect(line, 2);
            if (! names.insert(line.tokens[1]).second)
                fail(line, "relation '" + line.tokens[1] + "' defined twice");
            name = line.tokens[1];
        }
        else if (line.tokens[0] == "p") {
            if (! name)
                fail(line, "tuple before any 'relation'");
            expect(line, 3);
            int a = to_int(line, line.tokens[1]), b = to_int(line, line.tokens[2]);
            check_vertex(line, a, d, "domain value");
            check_vertex(line, b, d, "domain value");
            tuples.emplace_back(a, b);
        }
        else
            fail(line, "expected 'relation' or 'p'");
    }
    flush();
    return language;
}

auto homlab::write_language(const CrispLanguage & language) -> string
{
    string result = "language " + to_string(language.domain_size()) + "\n";
    for (auto & r : language.relations()) {
        result += "relation " + r.name + "\n";
        for (auto [a, b] : r.tuples)
            result += "p " + to_string(a) + " " + to_string(b) + "\n";
    }
    return result;
}

auto homlab::read_file(const string & path) -> string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream contents;
    contents << in.rdbuf();
    if (in.bad())
        throw IoError("error reading '" + path + "'");
    return contents.str();
}

auto homlab::write_file(const string & path, string_view contents) -> void
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw IoError("cannot open '" + path + "' for writing");
    out << contents;
    if (! out)
        throw IoError("error writing '" + path + "'");
}
