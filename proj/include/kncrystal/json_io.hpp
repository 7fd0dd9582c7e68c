#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kncrystal/alphabet.hpp"
#include "kncrystal/partition.hpp"
#include "kncrystal/tableau.hpp"

namespace kn {

using Json = nlohmann::ordered_json;

inline Json partition_to_json(const Partition& p) { return Json(p.parts()); }

inline Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array");
    return Partition(j.get<std::vector<int>>());
}

// Schema: {"type":"C","n":4,"shape":[3,2,1,1],"inner":[],"rows":[[2,3,-2],[3,4],[-4],[-3]]}
// with barred k encoded as -k and the B-type zero as 0.
inline Json tableau_to_json(const Tableau& t, const Alphabet& a) {
    Json j;
    j["type"] = std::string(1, lie_type_char(a.type));
    j["n"] = a.rank;
    j["shape"] = t.shape().parts();
    j["inner"] = t.inner_shape().parts();
    j["rows"] = t.rows();
    return j;
}

inline std::pair<Tableau, Alphabet> tableau_from_json(const Json& j) {
    Alphabet a(lie_type_from_char(j.at("type").get<std::string>().at(0)),
               j.at("n").get<int>());
    Partition outer(j.at("shape").get<std::vector<int>>());
    Partition inner = j.contains("inner") ? Partition(j.at("inner").get<std::vector<int>>())
                                          : Partition{};
    auto rows = j.at("rows").get<std::vector<std::vector<Letter>>>();
    return {Tableau::from_rows(std::move(outer), std::move(inner), rows), a};
}

inline Json column_to_json(const Column& c) { return Json(c); }

inline Column column_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("column JSON must be an array");
    return j.get<Column>();
}

}  // namespace kn
