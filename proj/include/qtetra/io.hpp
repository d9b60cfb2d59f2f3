#pragma once

// JSON interchange: module files with canonical scalar strings, and report
// serializers. Keys are sorted, so serialize(parse(text)) reproduces text.

#include "qtetra/dualities.hpp"
#include "qtetra/modanalysis.hpp"
#include "qtetra/presentations.hpp"
#include "qtetra/reconstruct.hpp"
#include "qtetra/scalars.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qtetra {

using Json = nlohmann::json;

inline constexpr int schema_version = 1;

/// Malformed or inconsistent input file.
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline Json field_to_json(const FieldMode& mode) {
    Json j = {{"mode", mode.specialized ? "specialized" : "symbolic"}};
    if (mode.specialized) j["q"] = to_string(mode.q_value);
    return j;
}

inline FieldMode field_mode_of(const Json& file) {
    if (!file.is_object() || !file.contains("field")) return FieldMode::symbolic();
    const Json& f = file.at("field");
    const std::string mode = f.value("mode", "symbolic");
    if (mode == "symbolic") return FieldMode::symbolic();
    if (mode != "specialized") throw FormatError("unknown field mode " + mode);
    if (!f.contains("q") || !f.at("q").is_string()) throw FormatError("specialized field needs a string q");
    try {
        return FieldMode::at(parse_rational(f.at("q").get<std::string>()));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("bad q value: ") + e.what());
    }
}

template <FieldScalar F>
Json matrix_to_json(const Matrix<F>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <FieldScalar F>
Matrix<F> matrix_from_json(const Json& j, std::size_t n, const FieldContext<F>& ctx, const std::string& what) {
    if (!j.is_array() || j.size() != n) throw FormatError(what + ": expected " + std::to_string(n) + " rows");
    Matrix<F> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Json& row = j[i];
        if (!row.is_array() || row.size() != n)
            throw FormatError(what + ": row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
        for (std::size_t k = 0; k < n; ++k) {
            if (!row[k].is_string()) throw FormatError(what + ": entries must be scalar strings");
            try {
                m(i, k) = parse_scalar(row[k].get<std::string>(), ctx);
            } catch (const std::exception& e) {
                throw FormatError(what + " entry (" + std::to_string(i) + "," + std::to_string(k) + "): " + e.what());
            }
        }
    }
    return m;
}

template <FieldScalar F>
Json module_to_json(const MatrixRep<F>& rep, const FieldMode& mode) {
    Json gens = Json::object();
    for (const auto& [label, m] : rep.generators) gens[label] = matrix_to_json(m);
    Json prov = Json::object();
    for (const auto& [k, v] : rep.provenance) prov[k] = v;
    return {{"schema_version", schema_version},
            {"algebra", to_string(rep.algebra)},
            {"dimension", rep.dimension},
            {"field", field_to_json(mode)},
            {"generators", std::move(gens)},
            {"provenance", std::move(prov)}};
}

template <FieldScalar F>
MatrixRep<F> module_from_json(const Json& j, const FieldContext<F>& ctx) {
    if (!j.is_object()) throw FormatError("module file must be a JSON object");
    for (const char* key : {"schema_version", "algebra", "dimension", "generators"})
        if (!j.contains(key)) throw FormatError(std::string("missing field ") + key);
    if (!j.at("schema_version").is_number_integer() || j.at("schema_version").get<int>() != schema_version)
        throw FormatError("unsupported schema_version");
    MatrixRep<F> rep;
    try {
        rep.algebra = parse_algebra_id(j.at("algebra").get<std::string>());
    } catch (const std::exception& e) {
        throw FormatError(e.what());
    }
    if (!j.at("dimension").is_number_unsigned()) throw FormatError("dimension must be a nonnegative integer");
    rep.dimension = j.at("dimension").get<std::size_t>();
    const Json& gens = j.at("generators");
    if (!gens.is_object()) throw FormatError("generators must be an object");
    for (const auto& [label, m] : gens.items())
        rep.generators[label] = matrix_from_json(m, rep.dimension, ctx, "generator " + label);
    if (j.contains("provenance")) {
        if (!j.at("provenance").is_object()) throw FormatError("provenance must be an object");
        for (const auto& [k, v] : j.at("provenance").items()) {
            if (!v.is_string()) throw FormatError("provenance values must be strings");
            rep.provenance[k] = v.template get<std::string>();
        }
    }
    try {
        rep.validate();
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    return rep;
}

inline std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

inline Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

/// Writes to a sibling temporary file, then renames it over the target.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << text;
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

/// Replaces every scalar by its value at ctx.q.
inline MatrixRep<Rational> specialize_rep(const MatrixRep<RationalFunction>& rep, const SpecializedField& ctx) {
    MatrixRep<Rational> out{rep.algebra, rep.dimension, {}, rep.provenance};
    for (const auto& [label, m] : rep.generators)
        out.generators[label] = m.map([&](const RationalFunction& x) { return specialize(x, ctx); });
    out.provenance["specialized_at"] = to_string(ctx.q);
    return out;
}

template <FieldScalar F>
Json check_report_to_json(const CheckReport<F>& r) {
    Json res = Json::array();
    for (const auto& x : r.residuals) res.push_back({{"id", x.id}, {"zero", x.zero}});
    return {{"algebra", to_string(r.algebra)},
            {"passed", r.passed()},
            {"relations", std::move(res)},
            {"failing", r.failing},
            {"max_residual_degree", r.max_residual_degree}};
}

inline Json table_report_to_json(const TableReport& r) {
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back({{"table", x.table}, {"row", x.row}, {"i", x.i}, {"n", x.n}});
    return {{"passed", r.ok()}, {"containments_checked", r.containments_checked}, {"violations", std::move(v)}};
}

inline Json shape_report_to_json(const ShapeReport& r) {
    return {{"shape", r.shape}, {"uniform", r.uniform}, {"palindromic", r.palindromic}, {"violations", r.violations}};
}

inline Json flag_report_to_json(const FlagReport& r) {
    return {{"passed", r.ok()},
            {"pairs_checked", r.pairs_checked},
            {"decompositions_recovered", r.decompositions_recovered},
            {"violations", r.violations}};
}

inline Json chain_report_to_json(const ChainReport& r) {
    return {{"dims", r.dims},
            {"dims_equal", r.dims_equal},
            {"inverse_pair_equal", r.inverse_pair_equal},
            {"violations", r.violations}};
}

inline Json lemma_report_to_json(const LemmaReport& r) {
    return {{"passed", r.ok()},
            {"arrows_checked", r.arrows_checked},
            {"eigenvalues_checked", r.eigenvalues_checked},
            {"violations", r.violations}};
}

inline Json roundtrip_report_to_json(const RoundtripReport& r) {
    Json j = {{"passed", r.ok()}, {"differing", r.differing}};
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

inline Json certificate_to_json(const IrreducibilityCertificate& c) {
    return {{"full", c.full}, {"dim", c.dim}, {"full_dim", c.full_dim}, {"stabilized", c.stabilized}};
}

template <FieldScalar F>
Json eightfold_to_json(const EightfoldTable<F>& t) {
    Json rows = Json::array();
    for (const auto& row : t.isomorphic) rows.push_back(Json(std::vector<bool>(row.begin(), row.end())));
    return {{"structures", t.names}, {"isomorphic", std::move(rows)}};
}

template <FieldScalar F>
Json bilinear_form_to_json(const BilinearFormCandidate<F>& b) {
    Json j = {{"solution_space_dim", b.solution_space_dim},
              {"symmetric", b.symmetric},
              {"nondegenerate", b.nondegenerate},
              {"witness_identity", b.witness_identity}};
    j["gram"] = b.gram ? matrix_to_json(*b.gram) : Json(nullptr);
    return j;
}

}  // namespace qtetra
