#ifndef MULTIFLAG_JSON_IO_HPP
#define MULTIFLAG_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "census.hpp"
#include "decompose.hpp"
#include "invariants.hpp"

namespace multiflag {

using json = nlohmann::ordered_json;

/*
 * JSON formats. All indices are 1-based; scalars serialize as strings
 * ("a", "-a", "a/b"), never floats.
 */

struct FieldTag {
    bool rational = true;
    std::int64_t prime = 0;  // valid iff !rational
};

inline FieldTag field_tag_from_json(const json& j) {
    FieldTag tag;
    if (j.is_string() && j.get<std::string>() == "rational") return tag;
    if (j.is_object() && j.contains("prime")) {
        tag.rational = false;
        tag.prime = j.at("prime").get<std::int64_t>();
        if (!is_prime(tag.prime))
            throw field_error("NonPrimeField", "field prime is not prime");
        return tag;
    }
    throw field_error("BadInput", "field must be \"rational\" or {\"prime\": p}");
}

inline json field_tag_to_json(const FieldTag& tag) {
    if (tag.rational) return json("rational");
    return json{{"prime", tag.prime}};
}

inline Rational scalar_from_json(const json& j, const Rational&) {
    return Rational::parse(j.get<std::string>());
}
inline Fp scalar_from_json(const json& j, const Fp& like) {
    return Fp::parse(j.get<std::string>(), like.prime());
}

template <class K>
json point_to_json(const ProjectivePoint<K>& p) {
    json arr = json::array();
    for (const auto& x : p.coords()) arr.push_back(x.str());
    return arr;
}

template <class K>
ProjectivePoint<K> point_from_json(const json& j, const K& like) {
    std::vector<K> coords;
    for (const auto& x : j) coords.push_back(scalar_from_json(x, like));
    return ProjectivePoint<K>(std::move(coords));
}

template <class K>
json configuration_to_json(const Configuration<K>& c, const FieldTag& tag) {
    json lines = json::array();
    for (const auto& l : c.lines()) lines.push_back(point_to_json(l));
    return json{{"field", field_tag_to_json(tag)},
                {"n", c.n()},
                {"lines", lines}};
}

template <class K>
Configuration<K> configuration_from_json(const json& j, const K& like) {
    const std::size_t n = j.at("n").get<std::size_t>();
    std::vector<ProjectivePoint<K>> lines;
    for (const auto& l : j.at("lines")) lines.push_back(point_from_json(l, like));
    return Configuration<K>(n, std::move(lines));
}

inline json ptype_to_json(const PType& p) {
    json ji = json::array(), jj = json::array(), jk = json::array();
    for (const auto& b : p.I) ji.push_back(b);
    for (const auto& b : p.J) jj.push_back(b);
    for (const auto& [b, r] : p.K) jk.push_back(json{{"indices", b}, {"rank", r}});
    return json{{"I", ji}, {"J", jj}, {"K", jk}};
}

inline PType ptype_from_json(const json& j) {
    PType p;
    for (const auto& b : j.at("I")) p.I.push_back(b.get<std::set<int>>());
    for (const auto& b : j.at("J")) p.J.push_back(b.get<std::set<int>>());
    for (const auto& b : j.at("K"))
        p.K.emplace_back(b.at("indices").get<std::set<int>>(), b.at("rank").get<std::size_t>());
    p.canonicalize();
    return p;
}

template <class K>
json classification_to_json(const ClassificationRecord<K>& rec) {
    json comps = json::array();
    for (const auto& c : rec.components) {
        json jc;
        jc["kind"] = c.kind == ComponentKind::F ? "F" : c.kind == ComponentKind::D ? "D" : "E";
        jc["indices"] = c.indices;
        jc["rank"] = c.rank;
        if (c.kind == ComponentKind::E) {
            jc["generic"] = c.generic;
            if (c.generic) {
                json qs = json::array();
                for (const auto& pt : c.q) qs.push_back(point_to_json(pt));
                jc["q"] = qs;
            } else {
                jc["q"] = nullptr;
            }
        }
        comps.push_back(std::move(jc));
    }
    return json{{"ptype", ptype_to_json(rec.ptype)},
                {"free_multiplicity", rec.free_multiplicity},
                {"components", comps}};
}

inline json census_to_json(const CensusReport& rep) {
    json per = json::array();
    for (const auto& [p, count] : rep.per_ptype_orbits)
        per.push_back(json{{"ptype", ptype_to_json(p)}, {"orbits", count}});
    return json{{"n", rep.n},
                {"m", rep.m},
                {"prime", rep.q},
                {"total_configurations", rep.total_configurations},
                {"brute_force_orbits", rep.brute_force_orbits},
                {"pipeline_orbits", rep.pipeline_orbits},
                {"burnside_orbits", rep.burnside_orbits},
                {"per_ptype", per},
                {"agreement", rep.agreement}};
}

inline json stabilizer_to_json(const StabilizerShape& s) {
    return json{{"diagonal_scalars", s.diagonal_scalars},
                {"j_block_sizes", s.j_block_sizes},
                {"k_block_sizes", s.k_block_sizes},
                {"free_complement", s.free_complement},
                {"group_dimension", s.group_dimension}};
}

template <class K>
json matrix_to_json(const Matrix<K>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace multiflag

#endif
