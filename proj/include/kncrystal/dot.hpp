#pragma once

#include <map>
#include <ostream>
#include <string>

#include "kncrystal/crystal.hpp"
#include "kncrystal/enumerate.hpp"
#include "kncrystal/json_io.hpp"

namespace kn {

// Crystal graph of B(lambda) in Graphviz format: one node per KN tableau
// (labelled by its row filling), one arrow per f_i edge labelled i.
inline void emit_crystal_graph(const Alphabet& a, const Partition& lambda, std::ostream& os) {
    std::vector<Tableau> elems;
    for_each_kn_tableau(a, lambda, std::nullopt, LetterFilter::all,
                        [&](const Tableau& t, const Partition&) { elems.push_back(t); });
    std::sort(elems.begin(), elems.end());
    std::map<Tableau, int> id;
    for (std::size_t k = 0; k < elems.size(); ++k) id[elems[k]] = static_cast<int>(k);

    os << "digraph crystal {\n";
    os << "  rankdir=TB;\n";
    for (std::size_t k = 0; k < elems.size(); ++k) {
        Json rows = Json(elems[k].rows());
        os << "  n" << k << " [shape=box,label=\"" << rows.dump() << "\"];\n";
    }
    for (std::size_t k = 0; k < elems.size(); ++k) {
        for (int i = 1; i <= index_count(a); ++i) {
            auto img = tableau_kashiwara(Kashiwara::f, i, elems[k], a);
            if (!img) continue;
            auto it = id.find(*img);
            if (it == id.end()) throw std::logic_error("f_i left B(lambda)");
            os << "  n" << k << " -> n" << it->second << " [label=\"" << i << "\"];\n";
        }
    }
    os << "}\n";
}

}  // namespace kn
