#include "taut/json_io.hpp"

namespace taut {

using nlohmann::json;

json graph_to_json(const StableGraph& gr) {
    json j;
    j["vertices"] = json::array();
    for (int g : gr.genus) j["vertices"].push_back({{"genus", g}});
    j["edges"] = json::array();
    for (auto [h, hp] : gr.edges()) j["edges"].push_back({gr.vertex_of[h], gr.vertex_of[hp]});
    std::vector<std::pair<int, int>> legs;
    for (int h = 0; h < gr.num_half_edges(); ++h)
        if (gr.is_leg(h)) legs.emplace_back(gr.marking[h], gr.vertex_of[h]);
    std::sort(legs.begin(), legs.end());
    j["legs"] = json::array();
    for (auto [m, v] : legs) j["legs"].push_back({{"vertex", v}, {"marking", m}});
    return j;
}

namespace {

struct Built {
    StableGraph graph;
    std::vector<std::pair<int, int>> edge_halves;  // (first end, second end) per listed edge
};

Built build_graph(const json& j) {
    std::vector<int> genera;
    for (const auto& v : j.at("vertices")) genera.push_back(v.at("genus").get<int>());
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::vector<std::pair<int, int>> legs;
    for (const auto& l : j.at("legs")) legs.emplace_back(l.at("marking").get<int>(), l.at("vertex").get<int>());
    std::sort(legs.begin(), legs.end());
    std::vector<int> leg_vertices;
    for (std::size_t i = 0; i < legs.size(); ++i) {
        if (legs[i].first != static_cast<int>(i) + 1) throw std::invalid_argument("graph JSON: markings must be 1..n");
        leg_vertices.push_back(legs[i].second);
    }
    Built b{StableGraph::from_edges(genera, edges, leg_vertices), {}};
    const int n = static_cast<int>(leg_vertices.size());
    for (std::size_t e = 0; e < edges.size(); ++e) b.edge_halves.emplace_back(n + 2 * e, n + 2 * e + 1);
    return b;
}

}  // namespace

StableGraph graph_from_json(const json& j) { return build_graph(j).graph; }

json strata_to_json(const StrataElement& x) {
    json out;
    out["ambient"] = {{"g", x.g()}, {"n", x.n()}};
    out["terms"] = json::array();
    for (const auto& [s, c] : x.terms()) {
        const auto& gr = s.graph;
        json t;
        t["graph"] = graph_to_json(gr);
        t["kappa"] = s.deco.kappa;
        json pe = json::array(), pl = json::array();
        auto es = gr.edges();
        for (std::size_t e = 0; e < es.size(); ++e) {
            if (s.deco.psi[es[e].first]) pe.push_back({e, 0, s.deco.psi[es[e].first]});
            if (s.deco.psi[es[e].second]) pe.push_back({e, 1, s.deco.psi[es[e].second]});
        }
        for (int i = 1; i <= gr.num_legs(); ++i) {
            int h = gr.leg_of_marking(i);
            if (s.deco.psi[h]) pl.push_back({i, s.deco.psi[h]});
        }
        t["psi"] = {{"edges", pe}, {"legs", pl}};
        t["coeff"] = to_string(c);
        out["terms"].push_back(t);
    }
    return out;
}

StrataElement strata_from_json(const json& j) {
    StrataElement x(j.at("ambient").at("g").get<int>(), j.at("ambient").at("n").get<int>());
    for (const auto& t : j.at("terms")) {
        auto b = build_graph(t.at("graph"));
        const auto& gr = b.graph;
        if (gr.total_genus() != x.g() || gr.num_legs() != x.n())
            throw std::invalid_argument("strata JSON: term graph does not match the ambient space");
        Decoration d = Decoration::trivial(gr);
        if (t.contains("kappa")) {
            auto k = t.at("kappa").get<std::vector<std::vector<int>>>();
            if (k.size() != d.kappa.size()) throw std::invalid_argument("strata JSON: kappa needs one list per vertex");
            for (auto& v : k) std::sort(v.begin(), v.end());
            d.kappa = k;
        }
        if (t.contains("psi")) {
            const auto& p = t.at("psi");
            for (const auto& e : p.value("edges", json::array())) {
                auto idx = e.at(0).get<std::size_t>();
                if (idx >= b.edge_halves.size()) throw std::invalid_argument("strata JSON: psi on a missing edge");
                int h = e.at(1).get<int>() == 0 ? b.edge_halves[idx].first : b.edge_halves[idx].second;
                d.psi[h] += e.at(2).get<int>();
            }
            for (const auto& l : p.value("legs", json::array())) d.psi[gr.leg_of_marking(l.at(0).get<int>())] += l.at(1).get<int>();
        }
        if (!deco_fits(gr, d)) throw std::invalid_argument("strata JSON: decoration exceeds a vertex dimension");
        x.add(gr, d, parse_rational(t.at("coeff").get<std::string>()));
    }
    return x;
}

json kappa_to_json(const KappaPoly& p) {
    json out;
    out["monomials"] = json::array();
    int top = 0;
    for (const auto& [k, c] : p)
        for (int i : k) top = std::max(top, i);
    for (const auto& [k, c] : p) {
        std::vector<int> exps(top, 0);
        for (int i : k)
            if (i >= 1) exps[i - 1]++;
        json m{{"exps", exps}, {"coeff", to_string(c)}};
        if (std::count(k.begin(), k.end(), 0)) m["kappa0"] = std::count(k.begin(), k.end(), 0);
        out["monomials"].push_back(m);
    }
    return out;
}

}  // namespace taut
