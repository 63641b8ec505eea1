#pragma once

// Command dispatch shared by the command-line binary and the test suite.
// Reports are deterministic: keys are emitted in a fixed order and all
// rational values are rendered exactly, never as floats.

#include <iostream>
#include <sstream>

#include "gpois/cohomology.hpp"
#include "gpois/io.hpp"

namespace gpois {

class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;  // verify|modular|unimodularize|twist|rgt|derivations|center|
                          // cohomology|report|catalog
    std::string input_path;        // structure document, or
    std::string catalog_name;      // built-in entry
    CatalogParams params;          // catalog parameters
    std::string derivation_path;   // twisting data for `twist`
    long max_degree = 6;
    long degree_cap = 20;
    std::vector<std::string> central;  // poly strings for ozone conditions
    std::string format = "json";       // json|table
    std::string out_path;              // empty = stdout
    std::string catalog_action;        // list|show for `catalog`
};

namespace detail {

inline Json config_echo(const RunConfig& c) {
    Json j;
    j["command"] = c.command;
    if (!c.input_path.empty()) j["input"] = c.input_path;
    if (!c.catalog_name.empty()) {
        j["catalog"] = c.catalog_name;
        Json params = Json::object();
        for (const auto& [k, v] : c.params) params[k] = v;
        j["params"] = std::move(params);
    }
    if (!c.derivation_path.empty()) j["derivation"] = c.derivation_path;
    j["max_degree"] = c.max_degree;
    Json central = Json::array();
    for (const auto& z : c.central) central.push_back(z);
    j["central"] = std::move(central);
    j["format"] = c.format;
    j["out"] = c.out_path.empty() ? "stdout" : c.out_path;
    return j;
}

inline PoissonStructure load_structure(const RunConfig& c) {
    bool has_input = !c.input_path.empty();
    bool has_catalog = !c.catalog_name.empty();
    if (has_input == has_catalog)
        throw InputError("give exactly one of --input or --catalog");
    if (has_input) {
        try {
            return structure_from_json(load_json_file(c.input_path));
        } catch (const ParseError& e) {
            throw InputError(std::string("bad polynomial in structure document: ") + e.what());
        }
    }
    try {
        return catalog_get(c.catalog_name, c.params).structure;
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

inline void require_verified(const PoissonStructure& s) {
    if (!s.verify_graded())
        throw VerificationError("structure is not graded for the given weights");
    if (!s.verify_poisson())
        throw VerificationError("bracket fails the Jacobi identity");
}

inline Json verify_payload(const PoissonStructure& s) {
    Json j;
    j["graded"] = s.verify_graded();
    bool jacobi = true;
    Json failures = Json::array();
    int n = s.arity();
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l) {
                Poly jac = s.jacobiator(i, k, l);
                if (!jac.is_zero()) {
                    jacobi = false;
                    Json f;
                    f["triple"] = std::to_string(i) + "," + std::to_string(k) + "," +
                                  std::to_string(l);
                    f["jacobiator"] = jac.to_string();
                    failures.push_back(std::move(f));
                }
            }
    j["jacobi"] = jacobi;
    j["failures"] = std::move(failures);
    return j;
}

inline Json modular_payload(const PoissonStructure& s) {
    Derivation m = modular(s);
    Json j;
    j["images"] = derivation_to_json(m)["images"];
    j["divergence"] = divergence(m).to_string();
    j["unimodular"] = m.is_zero();
    return j;
}

inline Json rgt_payload(const PoissonStructure& s) {
    Json j;
    j["rgt"] = rgt(s);
    j["gpd_dim"] = poisson_derivation_dim(s, 0);
    j["gspd_dim"] = semi_poisson_dim(s, 0);
    return j;
}

inline Json derivations_payload(const PoissonStructure& s, long max_degree,
                                const std::vector<Poly>& central) {
    VerdictReport r = verdicts(s, max_degree, central);
    Json j;
    j["rgt"] = r.rgt_value;
    j["unimodular"] = r.unimodular;
    Json dims = Json::object();
    for (long d = 0; d <= r.max_degree; ++d) {
        Json row;
        row["A"] = r.dims[d].A;
        row["Z"] = r.dims[d].Z;
        row["Pd"] = r.dims[d].Pd;
        row["Hd"] = r.dims[d].Hd;
        row["PH1"] = r.dims[d].PH1;
        row["Od"] = r.dims[d].Od;
        dims[std::to_string(d)] = std::move(row);
    }
    j["dims"] = std::move(dims);
    Json v;
    Json a = Json::object(), b = Json::object(), c = Json::object();
    for (long d = 0; d <= r.max_degree; ++d) {
        a[std::to_string(d)] = static_cast<bool>(r.ph1_minimal[d]);
        b[std::to_string(d)] = static_cast<bool>(r.pd_matches_a[d]);
        c[std::to_string(d)] = static_cast<bool>(r.h_ozone[d]);
    }
    v["ph1_minimality"] = std::move(a);
    v["pd_equals_dim_A"] = std::move(b);
    v["h_ozone"] = std::move(c);
    j["verdicts"] = std::move(v);
    return j;
}

inline Json center_payload(const PoissonStructure& s, long max_degree) {
    Json dims = Json::object(), basis = Json::object();
    for (long d = 0; d <= max_degree; ++d) {
        CenterSlice z = center_slice(s, d);
        dims[std::to_string(d)] = z.dim;
        Json polys = Json::array();
        for (const Poly& p : z.basis) polys.push_back(p.to_string());
        basis[std::to_string(d)] = std::move(polys);
    }
    Json j;
    j["dims"] = std::move(dims);
    j["basis"] = std::move(basis);
    return j;
}

inline Json cohomology_payload(const PoissonStructure& s, long max_degree) {
    CohomologyWindow w = cohomology_window(s, max_degree);
    Json j;
    j["window"] = Json::array({w.dmin.get_si(), max_degree});
    Json ph = Json::object();
    for (const auto& [q, slice] : w.ph) {
        Json row = Json::object();
        for (const auto& [d, dim] : slice) row[to_string(d)] = dim;
        ph[std::to_string(q)] = std::move(row);
    }
    j["PH"] = std::move(ph);
    Json h0 = Json::object();
    for (const auto& [d, dim] : w.ph0) h0[to_string(d)] = dim;
    j["PH0_homology"] = std::move(h0);
    Json checks;
    Json euler = Json::object();
    for (const auto& [d, ok] : w.euler) euler[to_string(d)] = ok;
    checks["euler"] = std::move(euler);
    if (!w.poincare.empty()) {
        Json poincare = Json::object();
        for (const auto& [d, ok] : w.poincare) poincare[to_string(d)] = ok;
        checks["poincare"] = std::move(poincare);
    }
    j["checks"] = std::move(checks);
    return j;
}

// Minimal aligned-table rendering of a report object.
inline void render_table(const Json& j, std::ostream& out, int depth = 0) {
    std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    if (j.is_object()) {
        // Objects whose values are flat objects with shared keys render as grids.
        bool grid = !j.empty();
        std::vector<std::string> header;
        for (const auto& [k, v] : j.items()) {
            if (!v.is_object() || v.empty()) {
                grid = false;
                break;
            }
            std::vector<std::string> keys;
            for (const auto& [ik, iv] : v.items()) {
                if (iv.is_structured()) {
                    grid = false;
                    break;
                }
                keys.push_back(ik);
            }
            if (!grid) break;
            if (header.empty())
                header = keys;
            else if (header != keys)
                grid = false;
            if (!grid) break;
        }
        if (grid) {
            auto cell_text = [](const Json& v) {
                return v.is_string() ? v.get<std::string>() : v.dump();
            };
            std::size_t label_width = 0;
            std::vector<std::size_t> widths(header.size());
            for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
            for (const auto& [k, v] : j.items()) {
                label_width = std::max(label_width, k.size());
                for (std::size_t c = 0; c < header.size(); ++c)
                    widths[c] = std::max(widths[c], cell_text(v[header[c]]).size());
            }
            out << indent << std::string(label_width + 2, ' ');
            for (std::size_t c = 0; c < header.size(); ++c)
                out << "  " << std::string(widths[c] - header[c].size(), ' ') << header[c];
            out << "\n";
            for (const auto& [k, v] : j.items()) {
                out << indent << std::string(label_width - k.size(), ' ') << k << ": ";
                for (std::size_t c = 0; c < header.size(); ++c) {
                    std::string cell = cell_text(v[header[c]]);
                    out << "  " << std::string(widths[c] - cell.size(), ' ') << cell;
                }
                out << "\n";
            }
            return;
        }
        for (const auto& [k, v] : j.items()) {
            if (v.is_structured() && !v.empty()) {
                out << indent << k << ":\n";
                render_table(v, out, depth + 1);
            } else if (v.is_structured()) {
                out << indent << k << ": (none)\n";
            } else {
                std::string cell = v.is_string() ? v.get<std::string>() : v.dump();
                out << indent << k << ": " << cell << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_structured()) {
                render_table(v, out, depth + 1);
            } else {
                std::string cell = v.is_string() ? v.get<std::string>() : v.dump();
                out << indent << "- " << cell << "\n";
            }
        }
    }
}

inline void emit(const RunConfig& c, const Json& report, std::ostream& out) {
    std::ostringstream buffer;
    if (c.format == "table")
        render_table(report, buffer);
    else
        buffer << report.dump(2) << "\n";
    if (c.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(c.out_path);
        if (!file) throw InputError("cannot write to " + c.out_path);
        file << buffer.str();
    }
}

}  // namespace detail

// Exit codes: 0 success, 1 verification failure, 2 input error.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.format != "json" && config.format != "table")
            throw InputError("format must be json or table");
        if (config.max_degree < 0 || config.max_degree > config.degree_cap)
            throw InputError("max degree must lie in [0, " +
                             std::to_string(config.degree_cap) + "]");

        Json report;
        report["config"] = detail::config_echo(config);
        int exit_code = 0;

        if (config.command == "catalog") {
            if (config.catalog_action == "list") {
                Json entries = Json::array();
                for (const auto& [name, description] : catalog_names()) {
                    Json e;
                    e["name"] = name;
                    e["description"] = description;
                    entries.push_back(std::move(e));
                }
                report["entries"] = std::move(entries);
            } else if (config.catalog_action == "show") {
                if (config.catalog_name.empty())
                    throw InputError("catalog show needs an entry name");
                CatalogEntry e = [&] {
                    try {
                        return catalog_get(config.catalog_name, config.params);
                    } catch (const std::invalid_argument& ex) {
                        throw InputError(ex.what());
                    }
                }();
                report["name"] = e.name;
                report["description"] = e.description;
                report["structure"] = structure_to_json(e.structure);
                Json expected = Json::object();
                if (e.expected_rgt) expected["rgt"] = *e.expected_rgt;
                if (e.expected_unimodular) expected["unimodular"] = *e.expected_unimodular;
                report["expected"] = std::move(expected);
                if (!e.derivations.empty()) {
                    Json ders = Json::object();
                    for (const auto& [name, d] : e.derivations)
                        ders[name] = derivation_to_json(d);
                    report["derivations"] = std::move(ders);
                }
            } else {
                throw InputError("catalog needs an action: list or show");
            }
            detail::emit(config, report, out);
            return 0;
        }

        PoissonStructure s = detail::load_structure(config);
        std::vector<Poly> central;
        for (const std::string& text : config.central) {
            try {
                central.push_back(poly_parse(text, s.arity()));
            } catch (const ParseError& e) {
                throw InputError(std::string("bad --central polynomial: ") + e.what());
            }
        }

        auto require_positive_weights = [&] {
            if (!s.grading().all_positive())
                throw InputError(config.command + " needs positive weights");
        };

        if (config.command == "verify") {
            Json payload = detail::verify_payload(s);
            bool ok = payload["graded"].get<bool>() && payload["jacobi"].get<bool>();
            report["verify"] = std::move(payload);
            exit_code = ok ? 0 : 1;
        } else if (config.command == "modular") {
            detail::require_verified(s);
            report["modular"] = detail::modular_payload(s);
        } else if (config.command == "unimodularize") {
            require_positive_weights();
            detail::require_verified(s);
            Unimodularization u = unimodularize(s);
            Json payload;
            payload["delta"] = derivation_to_json(u.delta);
            payload["twisted"] = structure_to_json(u.structure);
            report["unimodularize"] = std::move(payload);
        } else if (config.command == "twist") {
            detail::require_verified(s);
            if (config.derivation_path.empty())
                throw InputError("twist needs --derivation <file>");
            Derivation delta =
                derivation_from_json(load_json_file(config.derivation_path), s.grading());
            if (delta.degree() != 0 || !is_semi_poisson(s, delta))
                throw VerificationError(
                    "derivation is not degree-0 semi-Poisson twisting data");
            Json payload;
            payload["twisted"] = structure_to_json(graded_twist(s, delta));
            report["twist"] = std::move(payload);
        } else if (config.command == "rgt") {
            require_positive_weights();
            detail::require_verified(s);
            report["rgt"] = detail::rgt_payload(s);
        } else if (config.command == "derivations") {
            require_positive_weights();
            detail::require_verified(s);
            report["derivations"] =
                detail::derivations_payload(s, config.max_degree, central);
        } else if (config.command == "center") {
            require_positive_weights();
            detail::require_verified(s);
            report["center"] = detail::center_payload(s, config.max_degree);
        } else if (config.command == "cohomology") {
            require_positive_weights();
            detail::require_verified(s);
            report["cohomology"] = detail::cohomology_payload(s, config.max_degree);
        } else if (config.command == "report") {
            Json payload = detail::verify_payload(s);
            bool ok = payload["graded"].get<bool>() && payload["jacobi"].get<bool>();
            report["verify"] = std::move(payload);
            if (!ok) {
                detail::emit(config, report, out);
                return 1;
            }
            report["modular"] = detail::modular_payload(s);
            if (s.grading().all_positive()) {
                report["rgt"] = detail::rgt_payload(s);
                report["derivations"] =
                    detail::derivations_payload(s, config.max_degree, central);
                report["cohomology"] = detail::cohomology_payload(s, config.max_degree);
            } else {
                report["note"] =
                    "rigidity, derivation and cohomology sections need positive weights";
            }
        } else {
            throw InputError("unknown command: " + config.command);
        }

        detail::emit(config, report, out);
        return exit_code;
    } catch (const VerificationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace gpois
