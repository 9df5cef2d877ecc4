#pragma once

#include <json.hpp>

#include "diagcx/chords.hpp"
#include "diagcx/forgetful.hpp"
#include "diagcx/homology.hpp"
#include "diagcx/labels.hpp"
#include "diagcx/poset.hpp"
#include "diagcx/ribbon.hpp"

namespace diagcx {

using json = nlohmann::ordered_json;

inline json poset_to_json(const Poset& p) {
    json j;
    j["elements"] = json::array();
    for (int i = 0; i < p.size(); ++i) j["elements"].push_back(p.payload(i));
    j["covers"] = json::array();
    for (auto [a, b] : p.covers()) j["covers"].push_back({a, b});
    return j;
}

inline Poset poset_from_json(const json& j) {
    std::vector<std::string> payloads;
    for (auto& e : j.at("elements")) payloads.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    std::vector<std::pair<int, int>> covers;
    for (auto& c : j.at("covers")) covers.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    return Poset(payloads, covers);
}

inline json complex_to_json(const SimplicialComplex& K) {
    json j;
    j["n_vertices"] = K.n_vertices();
    j["facets"] = json::array();
    for (auto& f : K.facets()) j["facets"].push_back(f);
    return j;
}

inline SimplicialComplex complex_from_json(const json& j) {
    std::vector<std::vector<int>> facets;
    int n = 0;
    for (auto& f : j.at("facets")) {
        std::vector<int> s;
        for (auto& v : f) {
            s.push_back(v.get<int>());
            n = std::max(n, s.back() + 1);
        }
        facets.push_back(s);
    }
    if (j.contains("n_vertices")) n = std::max(n, j.at("n_vertices").get<int>());
    return SimplicialComplex(n, facets);
}

inline json label_to_json(const Label& l) {
    json j;
    j["arrangement"] = l.arrangement();
    j["blocks"] = json::array();
    for (auto& b : l.blocks) j["blocks"].push_back(b);
    return j;
}

inline Label label_from_json(const json& j) {
    std::vector<IdVec> blocks;
    for (auto& b : j.at("blocks")) {
        IdVec blk;
        for (auto& x : b) blk.push_back(x.get<int>());
        blocks.push_back(blk);
    }
    Label l(blocks);
    l.validate_basic();
    return l;
}

inline json trace_to_json(const ProjectionTrace& t) {
    json j;
    j["dropped_contractible"] = t.dropped_contractible;
    j["dropped_edge_homotopic"] = t.dropped_edge_homotopic;
    j["dedup_groups"] = json::array();
    for (auto& [grp, kept] : t.dedup_groups) j["dedup_groups"].push_back({{"group", grp}, {"kept", kept}});
    j["removed_empty_blocks"] = t.removed_empty_blocks;
    j["survivors"] = t.survivors;
    return j;
}

inline json ribbon_to_json(const RibbonGraph& rg) {
    json j;
    // sigma as vertex rotation cycles in order of smallest half-edge; vertex
    // labels are keyed by that cycle order
    j["sigma"] = json::array();
    j["vertex_labels"] = json::object();
    std::vector<char> seen(rg.n_halves(), 0);
    int cycle_idx = 0;
    for (int h = 0; h < rg.n_halves(); ++h) {
        if (seen[h]) continue;
        json cyc = json::array();
        int x = h;
        do {
            seen[x] = 1;
            cyc.push_back(x);
            x = rg.sigma[x];
        } while (x != h);
        j["sigma"].push_back(cyc);
        j["vertex_labels"][std::to_string(cycle_idx)] = rg.vertex_labels[static_cast<std::size_t>(rg.vertex_of[h])];
        ++cycle_idx;
    }
    j["iota"] = json::array();
    for (int h = 0; h < rg.n_halves(); h += 2) j["iota"].push_back({h, rg.iota[h]});
    j["boundary"] = json::array();
    for (int e = 0; e < rg.n_edges(); ++e)
        if (rg.edge_is_boundary[e]) j["boundary"].push_back(e);
    j["outer"] = rg.declared_outer;
    j["punctures"] = json::object();
    for (auto& [label, f] : rg.puncture_face) j["punctures"][label] = f;
    return j;
}

inline RibbonGraph ribbon_from_json(const json& j) {
    RibbonGraph rg;
    std::map<int, int> iota;
    int H = 0;
    for (auto& p : j.at("iota")) {
        int a = p.at(0).get<int>(), b = p.at(1).get<int>();
        iota[a] = b;
        iota[b] = a;
        H = std::max({H, a + 1, b + 1});
    }
    rg.sigma.assign(H, -1);
    rg.iota.assign(H, -1);
    rg.vertex_of.assign(H, -1);
    for (auto& [a, b] : iota) rg.iota[a] = b;
    int vid = 0;
    for (auto& cyc : j.at("sigma")) {
        std::vector<int> c;
        for (auto& h : cyc) c.push_back(h.get<int>());
        for (std::size_t i = 0; i < c.size(); ++i) {
            rg.sigma[c[i]] = c[(i + 1) % c.size()];
            rg.vertex_of[c[i]] = vid;
        }
        ++vid;
    }
    rg.vertex_labels.resize(vid);
    if (j.contains("vertex_labels"))
        for (auto& [k, v] : j.at("vertex_labels").items()) {
            int idx = std::stoi(k);
            // labels are per vertex id unless half_vertex remaps
            if (idx >= 0 && idx < vid) rg.vertex_labels[static_cast<std::size_t>(idx)] = v.get<std::string>();
        }
    for (int v = 0; v < vid; ++v)
        if (rg.vertex_labels[static_cast<std::size_t>(v)].empty())
            rg.vertex_labels[static_cast<std::size_t>(v)] = "v" + std::to_string(v);
    rg.edge_is_boundary.assign(H / 2, 0);
    if (j.contains("boundary"))
        for (auto& e : j.at("boundary")) rg.edge_is_boundary[e.get<int>()] = 1;
    if (j.contains("outer"))
        for (auto& h : j.at("outer")) rg.declared_outer.push_back(h.get<int>());
    if (j.contains("punctures"))
        for (auto& [label, f] : j.at("punctures").items()) rg.puncture_face[label] = f.get<int>();
    rg.check_permutations();
    return rg;
}

inline json homology_to_json(const HomologyReport& rep) {
    json j;
    j["betti"] = rep.betti;
    j["reduced_betti"] = rep.reduced_betti;
    j["torsion"] = json::array();
    for (auto& t : rep.torsion) {
        json level = json::array();
        for (auto& f : t) level.push_back(f.str());
        j["torsion"].push_back(level);
    }
    j["euler"] = rep.euler;
    return j;
}

inline std::string homology_table(const HomologyReport& rep) {
    std::string s = "dim | betti | reduced | torsion\n";
    for (std::size_t k = 0; k < rep.betti.size(); ++k) {
        s += std::to_string(k) + "   | " + std::to_string(rep.betti[k]) + "     | " +
             std::to_string(rep.reduced_betti[k]) + "       | ";
        if (rep.torsion[k].empty())
            s += "-";
        else
            for (auto& f : rep.torsion[k]) s += f.str() + " ";
        s += "\n";
    }
    s += "euler = " + std::to_string(rep.euler) + "\n";
    return s;
}

}  // namespace diagcx
