#include <homlab/error.hh>
#include <homlab/track_layout.hh>

#include <algorithm>
#include <string>

using namespace homlab;

using std::optional;
using std::to_string;
using std::vector;

homlab::TrackLayout::TrackLayout(Coloring coloring, vector<Vertex> order) :
    _coloring(std::move(coloring)),
    _order(std::move(order)),
    _rank(_order.size(), -1)
{
    if (static_cast<int>(_order.size()) != _coloring.size())
        throw InvalidInput("track layout order has " + to_string(_order.size()) + " entries for "
                + to_string(_coloring.size()) + " vertices");
    for (std::size_t i = 0 ; i < _order.size() ; ++i) {
        auto v = _order[i];
        if (v < 1 || v > _coloring.size() || _rank[v - 1] != -1)
            throw InvalidInput("track layout order is not a permutation");
        _rank[v - 1] = static_cast<int>(i);
    }
}

namespace
{
    // e and f already oriented so that e.first/f.first share a track, as do e.second/f.second
    auto crossing(const TrackLayout & layout, const Edge & e, const Edge & f) -> bool
    {
        return (layout.precedes(e.first, f.first) && layout.precedes(f.second, e.second))
            || (layout.precedes(f.first, e.first) && layout.precedes(e.second, f.second));
    }

    auto check_pair(const TrackLayout & layout, const Edge & e, const Edge & f) -> optional<CrossingPair>
    {
        auto & c = layout.coloring();
        for (auto oriented : { f, Edge{ f.second, f.first } })
            if (c.color(e.first) == c.color(oriented.first) && c.color(e.second) == c.color(oriented.second)
                    && crossing(layout, e, oriented))
                return CrossingPair{ e, oriented };
        return std::nullopt;
    }
}

auto homlab::find_crossing(const Graph & g, const TrackLayout & layout) -> optional<CrossingPair>
{
    auto & edges = g.edges();
    for (std::size_t i = 0 ; i < edges.size() ; ++i)
        for (std::size_t j = i + 1 ; j < edges.size() ; ++j)
            if (auto hit = check_pair(layout, edges[i], edges[j]))
                return hit;
    return std::nullopt;
}

auto homlab::is_track_layout(const Graph & g, const TrackLayout & layout) -> bool
{
    return layout.coloring().size() == g.size() && is_proper(g, layout.coloring()) && ! find_crossing(g, layout);
}

auto homlab::greedy_track_layout(const Graph & g, const vector<Vertex> & order) -> TrackLayout
{
    int n = g.size();
    vector<int> rank(n + 1, -1);
    for (std::size_t i = 0 ; i < order.size() ; ++i)
        rank[order[i]] = static_cast<int>(i);

    vector<int> track(n + 1, 0);
    vector<Edge> placed;
    int tracks = 0;

    auto crosses = [&] (const Edge & e, const Edge & f) {
        for (auto oriented : { f, Edge{ f.second, f.first } })
            if (track[e.first] == track[oriented.first] && track[e.second] == track[oriented.second]) {
                auto a = rank[e.first] < rank[oriented.first] && rank[oriented.second] < rank[e.second];
                auto b = rank[oriented.first] < rank[e.first] && rank[e.second] < rank[oriented.second];
                if (a || b)
                    return true;
            }
        return false;
    };

    for (auto v : order) {
        vector<Edge> fresh;
        for (auto w : g.neighbours(v))
            if (track[w] != 0)
                fresh.emplace_back(v, w);

        for (int t = 1 ; t <= tracks + 1 ; ++t) {
            track[v] = t;
            bool ok = std::none_of(fresh.begin(), fresh.end(), [&] (const Edge & e) { return track[e.second] == t; });
            for (std::size_t i = 0 ; ok && i < fresh.size() ; ++i) {
                for (auto & e : placed)
                    if (crosses(fresh[i], e)) {
                        ok = false;
                        break;
                    }
                for (std::size_t j = i + 1 ; ok && j < fresh.size() ; ++j)
                    if (crosses(fresh[i], fresh[j]))
                        ok = false;
            }
            if (ok)
                break;
        }
        tracks = std::max(tracks, track[v]);
        placed.insert(placed.end(), fresh.begin(), fresh.end());
    }

    return TrackLayout(Coloring(vector<int>(track.begin() + 1, track.end())), order);
}

auto homlab::greedy_track_layout(const Graph & g) -> TrackLayout
{
    vector<Vertex> order(g.size());
    for (Vertex v = 1 ; v <= g.size() ; ++v)
        order[v - 1] = v;
    return greedy_track_layout(g, order);
}
