#include "iprn/json_io.hpp"

namespace iprn {

namespace {

Rational rational_from_json(const Json& j, const char* field) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw Error(std::string("field '") + field + "': expected an integer or a \"p/q\" string");
}

}  // namespace

Json matrix_to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return Json{{"rows", std::move(rows)}};
}

RationalMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array() || j["rows"].empty())
        throw Error("field 'rows': expected a nonempty array of rows");
    const auto& rows = j["rows"];
    std::size_t cols = 0;
    for (const auto& row : rows) {
        if (!row.is_array() || row.empty())
            throw Error("field 'rows': every row must be a nonempty array");
        if (cols == 0)
            cols = row.size();
        else if (row.size() != cols)
            throw Error("field 'rows': ragged rows, expected width " + std::to_string(cols));
    }
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t jj = 0; jj < cols; ++jj)
            m.at(i, jj) = rational_from_json(rows[i][jj], "rows");
    return m;
}

Json rationals_to_json(const std::vector<Rational>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(x.str());
    return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
    if (!j.is_array()) throw Error("expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& v : j) out.push_back(rational_from_json(v, "sequence"));
    return out;
}

Json coloring_to_json(const Coloring& chi) {
    return Json{{"n", chi.n}, {"r", chi.r}, {"colors", chi.assignment}};
}

Coloring coloring_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("r") || !j.contains("colors"))
        throw Error("coloring: expected fields 'n', 'r', 'colors'");
    Coloring chi{j["n"].get<std::int64_t>(), j["r"].get<int>(),
                 j["colors"].get<std::vector<int>>()};
    if (chi.n < 1 || chi.r < 1 ||
        chi.assignment.size() != static_cast<std::size_t>(chi.n))
        throw Error("coloring: field 'colors' must list one color per vertex 1..n");
    for (int c : chi.assignment)
        if (c < 1 || c > chi.r) throw Error("coloring: color out of range in field 'colors'");
    return chi;
}

Json certificate_to_json(const ColoringCertificate& cert) {
    Json out;
    out["verdict"] = cert.verdict == Verdict::Forced ? "forced" : "escaped";
    if (cert.escaped) out["coloring"] = coloring_to_json(*cert.escaped);
    out["stats"] = Json{{"nodes", cert.stats.nodes}, {"edges", cert.stats.edge_count}};
    return out;
}

Json witness_to_json(const Witness& w) {
    return Json{{"color", w.color_index}, {"x", w.x}, {"image", w.image}};
}

Json falsification_to_json(const FalsificationWitness& w) {
    return Json{{"generators", rationals_to_json(w.generators)},
                {"fs_sample", rationals_to_json(w.fs_sample)}};
}

Json near_witness_to_json(const NearWitness& w) {
    return Json{{"color", w.color_index},
                {"scale", w.scale.str()},
                {"y", rationals_to_json(w.y)},
                {"image", rationals_to_json(w.image)}};
}

Json combined_witness_to_json(const CombinedWitness& w) {
    return Json{{"color", w.color_index},
                {"anchor", w.anchor.str()},
                {"scale_entry", w.scale_entry},
                {"x", w.x},
                {"y_bar", rationals_to_json(w.y_bar)},
                {"z", rationals_to_json(w.z)},
                {"image", rationals_to_json(w.image)}};
}

Json validation_to_json(const ValidationReport& rep) {
    auto pairs = [](const std::vector<std::pair<std::size_t, std::size_t>>& ps) {
        Json out = Json::array();
        for (auto& [i, j] : ps) out.push_back(Json::array({i, j}));
        return out;
    };
    return Json{{"admissible", rep.admissible},
                {"zero_rows", rep.zero_rows},
                {"negative_entries", pairs(rep.negative_entries)},
                {"non_integral_entries", pairs(rep.non_integral_entries)}};
}

Json first_entries_to_json(const FirstEntriesReport& rep) {
    Json violations = Json::array();
    for (const auto& v : rep.violations)
        violations.push_back(Json{{"row_i", v.row_i},
                                  {"row_j", v.row_j},
                                  {"shared_min_column", v.shared_min_column},
                                  {"zero_row", v.zero_row}});
    return Json{{"satisfies", rep.satisfies},
                {"monic", rep.monic},
                {"first_entries", rationals_to_json(rep.first_entries)},
                {"violations", std::move(violations)}};
}

Json segmented_to_json(const SegmentedReport& rep) {
    Json blocks = Json::array();
    for (const auto& b : rep.blocks)
        blocks.push_back(Json{{"classification", to_string(b.classification)},
                              {"nonzero_rows", b.nonzero_rows},
                              {"ipr_forced_at_budget", b.ipr_forced_at_budget},
                              {"matrix", matrix_to_json(b.block)}});
    return Json{{"verdict", to_string(rep.verdict)},
                {"budget", Json{{"r", rep.budget_r}, {"n", rep.budget_n}}},
                {"blocks", std::move(blocks)}};
}

InsertionSpec insertion_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("C") || !j.contains("Bs"))
        throw Error("insertion spec: expected fields 'C' and 'Bs'");
    if (!j["Bs"].is_array() || j["Bs"].empty())
        throw Error("insertion spec: field 'Bs' must be a nonempty array of matrices");
    std::vector<RationalMatrix> blocks;
    for (const auto& b : j["Bs"]) blocks.push_back(matrix_from_json(b));
    return InsertionSpec{matrix_from_json(j["C"]), std::move(blocks)};
}

BlockStructure block_structure_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("boundaries"))
        throw Error("block structure: expected field 'boundaries'");
    return BlockStructure(j["boundaries"].get<std::vector<std::size_t>>());
}

}  // namespace iprn
