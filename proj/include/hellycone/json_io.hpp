#ifndef HELLYCONE_JSON_IO_HPP
#define HELLYCONE_JSON_IO_HPP

#include <hellycone/reay.hpp>
#include <hellycone/verify.hpp>

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace hellycone {

using nlohmann::json;

// Rationals travel as JSON integers when integral and small enough, and as
// exact "p/q" strings otherwise. Nothing ever passes through floating point.
inline json rational_to_json(const Rational& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p())
        return json(static_cast<std::int64_t>(r.get_num().get_si()));
    return json(to_string(r));
}

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw input_error("expected a rational as integer or \"p/q\" string");
}

inline json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rational_to_json(x));
    return a;
}

inline Vec vec_from_json(const json& j, std::size_t expected_dim) {
    if (!j.is_array()) throw input_error("expected a coordinate array");
    Vec v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    if (v.size() != expected_dim) throw input_error("coordinate array has wrong length");
    return v;
}

// Instance document: a homogeneous colored system or a list of polyhedral
// families.
struct InstanceDocument {
    std::size_t dimension = 0;
    std::optional<std::size_t> k;
    std::string kind;  // "homogeneous" | "polyhedral"
    std::optional<ColoredSystem> system;
    std::optional<std::vector<std::vector<Polyhedron>>> families;
};

inline json instance_to_json(const InstanceDocument& doc) {
    json j;
    j["kind"] = doc.kind;
    j["dimension"] = doc.dimension;
    if (doc.k) j["k"] = *doc.k;
    if (doc.kind == "homogeneous") {
        json colors = json::array();
        for (const auto& c : doc.system->colors) {
            json color = json::array();
            for (const auto& v : c.vectors) color.push_back(vec_to_json(v));
            colors.push_back(std::move(color));
        }
        j["colors"] = std::move(colors);
    } else {
        json fams = json::array();
        for (const auto& f : *doc.families) {
            json fam = json::array();
            for (const auto& p : f) {
                json poly;
                json ns = json::array();
                for (const auto& r : p.normals.rows) ns.push_back(vec_to_json(r));
                poly["normals"] = std::move(ns);
                json cs = json::array();
                for (const auto& c : p.offsets) cs.push_back(rational_to_json(c));
                poly["offsets"] = std::move(cs);
                fam.push_back(std::move(poly));
            }
            fams.push_back(std::move(fam));
        }
        j["families"] = std::move(fams);
    }
    return j;
}

inline InstanceDocument instance_from_json(const json& j) {
    InstanceDocument doc;
    if (!j.is_object() || !j.contains("kind") || !j.contains("dimension"))
        throw input_error("instance: missing kind or dimension");
    doc.kind = j.at("kind").get<std::string>();
    doc.dimension = j.at("dimension").get<std::size_t>();
    if (j.contains("k") && !j.at("k").is_null()) doc.k = j.at("k").get<std::size_t>();
    if (doc.kind == "homogeneous") {
        if (!j.contains("colors")) throw input_error("homogeneous instance: missing colors");
        std::vector<VectorSet> colors;
        for (const auto& c : j.at("colors")) {
            std::vector<Vec> vs;
            for (const auto& v : c) vs.push_back(vec_from_json(v, doc.dimension));
            colors.emplace_back(doc.dimension, std::move(vs));
        }
        doc.system = ColoredSystem(doc.dimension, std::move(colors));
    } else if (doc.kind == "polyhedral") {
        if (!j.contains("families")) throw input_error("polyhedral instance: missing families");
        std::vector<std::vector<Polyhedron>> fams;
        for (const auto& f : j.at("families")) {
            std::vector<Polyhedron> fam;
            for (const auto& p : f) {
                Matrix normals(doc.dimension);
                for (const auto& r : p.at("normals")) normals.rows.push_back(vec_from_json(r, doc.dimension));
                Vec offsets;
                for (const auto& c : p.at("offsets")) offsets.push_back(rational_from_json(c));
                fam.emplace_back(doc.dimension, std::move(normals), std::move(offsets));
            }
            fams.push_back(std::move(fam));
        }
        doc.families = std::move(fams);
    } else {
        throw input_error("instance: unknown kind '" + doc.kind + "'");
    }
    return doc;
}

inline std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

inline std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

inline std::string content_hash(const std::string& bytes) {
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << fnv1a64(bytes);
    return os.str();
}

inline json selection_to_json(const RainbowSelection& r) {
    json picks = json::array();
    for (const auto& [c, i] : r.picks) picks.push_back(json::array({c, i}));
    return picks;
}

inline json subspace_to_json(const Subspace& s) {
    json j;
    j["dim"] = s.dim();
    json basis = json::array();
    for (const auto& b : s.basis.rows) basis.push_back(vec_to_json(b));
    j["basis"] = std::move(basis);
    return j;
}

inline json decomposition_to_json(const ReayDecomposition& dec, const ColoredSystem& sys) {
    json j;
    json blocks = json::array();
    for (const auto& b : dec.blocks) {
        json blk;
        blk["colors"] = b.color_indices;
        blk["picks"] = selection_to_json(b.picks);
        json vs = json::array();
        for (const auto& v : b.picks.vectors_in(sys)) vs.push_back(vec_to_json(v));
        blk["vectors"] = std::move(vs);
        blocks.push_back(std::move(blk));
    }
    j["blocks"] = std::move(blocks);
    json spaces = json::array();
    for (const auto& s : dec.block_subspaces) spaces.push_back(subspace_to_json(s));
    j["subspaces"] = std::move(spaces);
    return j;
}

}  // namespace hellycone

#endif  // HELLYCONE_JSON_IO_HPP
