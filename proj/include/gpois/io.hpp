#pragma once

// JSON documents for structures and derivations.
//
// Structure document:
//   { "arity": n, "weights": [w1..wn], "brackets": { "i,j": "poly" } }
//   or, for n = 3 Jacobian structures,
//   { "arity": 3, "weights": [...], "potential": "poly" }
// Missing bracket entries default to zero. Derivation document:
//   { "degree": d, "images": ["poly", ...] }

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "gpois/catalog.hpp"

namespace gpois {

using Json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Json structure_to_json(const PoissonStructure& s) {
    Json j;
    j["arity"] = s.arity();
    Json weights = Json::array();
    for (const Int& w : s.grading().weights()) {
        if (!w.fits_slong_p()) throw InputError("weight too large to serialize");
        weights.push_back(w.get_si());
    }
    j["weights"] = std::move(weights);
    Json brackets = Json::object();
    for (int i = 1; i <= s.arity(); ++i)
        for (int k = i + 1; k <= s.arity(); ++k)
            if (!s.upper(i, k).is_zero())
                brackets[std::to_string(i) + "," + std::to_string(k)] =
                    s.upper(i, k).to_string();
    j["brackets"] = std::move(brackets);
    return j;
}

inline PoissonStructure structure_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("structure document must be a JSON object");
    if (!j.contains("arity") || !j["arity"].is_number_integer())
        throw InputError("structure document needs an integer \"arity\"");
    int n = j["arity"].get<int>();
    if (n < 1) throw InputError("arity must be positive");
    if (!j.contains("weights") || !j["weights"].is_array() ||
        j["weights"].size() != static_cast<std::size_t>(n))
        throw InputError("structure document needs a length-n \"weights\" array");
    std::vector<Int> weights;
    for (const auto& w : j["weights"]) {
        if (!w.is_number_integer()) throw InputError("weights must be integers");
        weights.emplace_back(static_cast<long>(w.get<long long>()));
    }
    WeightedGrading g(std::move(weights));

    if (j.contains("potential")) {
        if (j.contains("brackets"))
            throw InputError("give either \"brackets\" or \"potential\", not both");
        if (!j["potential"].is_string()) throw InputError("\"potential\" must be a string");
        try {
            return from_potential(poly_parse(j["potential"].get<std::string>(), n), g);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }

    PoissonStructure s(g);
    if (j.contains("brackets")) {
        if (!j["brackets"].is_object()) throw InputError("\"brackets\" must be an object");
        for (const auto& [key, value] : j["brackets"].items()) {
            int bi = 0, bj = 0;
            char comma = 0;
            std::istringstream in(key);
            if (!(in >> bi >> comma >> bj) || comma != ',' || !(in >> std::ws).eof())
                throw InputError("bracket key must look like \"i,j\": " + key);
            if (bi < 1 || bj <= bi || bj > n)
                throw InputError("bracket key needs 1 <= i < j <= n: " + key);
            if (!value.is_string()) throw InputError("bracket entries must be strings");
            s.set_bracket(bi, bj, poly_parse(value.get<std::string>(), n));
        }
    }
    return s;
}

inline Json derivation_to_json(const Derivation& d) {
    Json j;
    if (!d.degree().fits_slong_p()) throw InputError("degree too large to serialize");
    j["degree"] = d.degree().get_si();
    Json images = Json::array();
    for (const Poly& p : d.images()) images.push_back(p.to_string());
    j["images"] = std::move(images);
    return j;
}

inline Derivation derivation_from_json(const Json& j, const WeightedGrading& g) {
    if (!j.is_object()) throw InputError("derivation document must be a JSON object");
    if (!j.contains("degree") || !j["degree"].is_number_integer())
        throw InputError("derivation document needs an integer \"degree\"");
    if (!j.contains("images") || !j["images"].is_array() ||
        j["images"].size() != static_cast<std::size_t>(g.arity()))
        throw InputError("derivation document needs one image string per generator");
    std::vector<Poly> images;
    for (const auto& text : j["images"]) {
        if (!text.is_string()) throw InputError("derivation images must be strings");
        images.push_back(poly_parse(text.get<std::string>(), g.arity()));
    }
    try {
        return Derivation(g, std::move(images),
                          Int(static_cast<long>(j["degree"].get<long long>())));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("invalid JSON in " + path + ": " + e.what());
    }
}

}  // namespace gpois
