#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "iprn/json_io.hpp"

namespace py = pybind11;
using namespace iprn;

namespace {

Rational rat_from_py(const py::handle& h) {
    if (py::isinstance<py::int_>(h)) return Rational(h.cast<std::int64_t>());
    return Rational::parse(h.cast<std::string>());
}

RationalMatrix mat_from_py(const py::sequence& rows) {
    if (py::len(rows) == 0) throw Error("matrix must have at least one row");
    py::sequence first = rows[0].cast<py::sequence>();
    RationalMatrix m(py::len(rows), py::len(first));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::sequence row = rows[i].cast<py::sequence>();
        if (py::len(row) != m.cols()) throw Error("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rat_from_py(row[j]);
    }
    return m;
}

py::list mat_to_py(const RationalMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(m.at(i, j).str());
        rows.append(row);
    }
    return rows;
}

std::vector<Rational> rats_from_py(const py::sequence& seq) {
    std::vector<Rational> out;
    for (const auto& h : seq) out.push_back(rat_from_py(h));
    return out;
}

py::list rats_to_py(const std::vector<Rational>& xs) {
    py::list out;
    for (const auto& x : xs) out.append(x.str());
    return out;
}

Oracle oracle_from_py(const py::function& fn, int r) {
    return [fn, r](const Rational& q) {
        py::gil_scoped_acquire gil;
        int c = fn(q.str()).cast<int>();
        if (c < 1 || c > r) throw Error("python oracle returned a color outside {1..r}");
        return c;
    };
}

py::dict cert_to_py(const ColoringCertificate& cert) {
    py::dict d;
    d["verdict"] = cert.verdict == Verdict::Forced ? "forced" : "escaped";
    if (cert.escaped) d["coloring"] = cert.escaped->assignment;
    d["nodes"] = cert.stats.nodes;
    d["edges"] = cert.stats.edge_count;
    return d;
}

}  // namespace

PYBIND11_MODULE(_iprnear, m) {
    m.doc() = "Matrix families and finite-scale image partition regularity";

    py::register_exception<Error>(m, "IprError");

    m.def("validate", [](const py::sequence& rows) {
        auto rep = validate(mat_from_py(rows));
        py::dict d;
        d["admissible"] = rep.admissible;
        d["zero_rows"] = rep.zero_rows;
        d["negative_entries"] = rep.negative_entries;
        d["non_integral_entries"] = rep.non_integral_entries;
        return d;
    });

    m.def("check_first_entries", [](const py::sequence& rows) {
        auto rep = check_first_entries(mat_from_py(rows));
        py::dict d;
        d["satisfies"] = rep.satisfies;
        d["monic"] = rep.monic;
        d["first_entries"] = rats_to_py(rep.first_entries);
        py::list viols;
        for (const auto& v : rep.violations)
            viols.append(py::make_tuple(v.row_i, v.row_j, v.shared_min_column, v.zero_row));
        d["violations"] = viols;
        return d;
    });

    m.def("dedup_rows",
          [](const py::sequence& rows) { return mat_to_py(dedup_rows(mat_from_py(rows))); });

    m.def("diag_sum", [](const py::sequence& a, const py::sequence& b) {
        return mat_to_py(diag_sum(mat_from_py(a), mat_from_py(b)));
    });

    m.def("drop_irrelevant_columns", [](const py::sequence& rows) {
        auto res = drop_irrelevant_columns(mat_from_py(rows));
        return py::make_tuple(mat_to_py(res.matrix), res.column_map);
    });

    m.def(
        "compress",
        [](const std::vector<std::int64_t>& a) { return compress(a).entries; },
        py::arg("seq"));

    m.def(
        "fs_enumerate",
        [](const py::sequence& xs) {
            auto vals = fs_enumerate(rats_from_py(xs));
            return rats_to_py({vals.begin(), vals.end()});
        },
        py::arg("xs"));

    m.def(
        "mt_enumerate",
        [](const std::vector<std::int64_t>& a, const py::sequence& xs) {
            auto vals = mt_enumerate(CompressedSeq(a), rats_from_py(xs));
            return rats_to_py({vals.begin(), vals.end()});
        },
        py::arg("a"), py::arg("xs"));

    m.def(
        "mt_matrix_rows",
        [](const std::vector<std::int64_t>& a, std::size_t width) {
            return mat_to_py(mt_matrix_rows(CompressedSeq(a), width));
        },
        py::arg("a"), py::arg("width"));

    m.def(
        "build_insertion",
        [](const py::sequence& c, const py::list& blocks) {
            InsertionSpec spec{mat_from_py(c), {}};
            for (const auto& b : blocks) spec.blocks.push_back(mat_from_py(b.cast<py::sequence>()));
            return mat_to_py(build_insertion(spec));
        },
        py::arg("c"), py::arg("blocks"));

    m.def("block_concat", [](const py::list& blocks) {
        std::vector<RationalMatrix> bs;
        for (const auto& b : blocks) bs.push_back(mat_from_py(b.cast<py::sequence>()));
        return mat_to_py(block_concat(bs));
    });

    m.def(
        "verify_ipr_at",
        [](const py::sequence& rows, int r, std::int64_t n) {
            return cert_to_py(verify_ipr_at(mat_from_py(rows), r, n));
        },
        py::arg("matrix"), py::arg("r"), py::arg("n"));

    m.def(
        "min_forcing_n",
        [](const py::sequence& rows, int r, std::int64_t n_max) -> py::object {
            auto res = min_forcing_n(mat_from_py(rows), r, n_max);
            if (!res) return py::none();
            return py::int_(*res);
        },
        py::arg("matrix"), py::arg("r"), py::arg("n_max") = 64);

    m.def(
        "witness_for_coloring",
        [](const py::sequence& rows, int r, const std::vector<int>& colors) -> py::object {
            Coloring chi{static_cast<std::int64_t>(colors.size()), r, colors};
            auto w = witness_for_coloring(mat_from_py(rows), chi);
            if (!w) return py::none();
            py::dict d;
            d["color"] = w->color_index;
            d["x"] = w->x;
            d["image"] = w->image;
            return d;
        },
        py::arg("matrix"), py::arg("r"), py::arg("colors"));

    m.def(
        "near_zero_transfer",
        [](const py::sequence& rows, int r, int neighborhood, std::int64_t n_force,
           const py::function& oracle) {
            NearZeroContext ctx{neighborhood, r, oracle_from_py(oracle, r)};
            auto w = near_zero_transfer(mat_from_py(rows), ctx, n_force);
            py::dict d;
            d["color"] = w.color_index;
            d["scale"] = w.scale.str();
            d["y"] = rats_to_py(w.y);
            d["image"] = rats_to_py(w.image);
            return d;
        },
        py::arg("matrix"), py::arg("r"), py::arg("neighborhood"), py::arg("n_force"),
        py::arg("oracle"));

    m.def(
        "diag_sum_witness",
        [](const py::sequence& a, const py::sequence& b, int r, int neighborhood,
           std::int64_t n_pick, const py::function& oracle) {
            auto bm = mat_from_py(b);
            NearZeroContext ctx{neighborhood, r, oracle_from_py(oracle, r)};
            auto w = diag_sum_witness(mat_from_py(a), bm, ctx, n_pick, make_search_callback(bm));
            py::dict d;
            d["color"] = w.color_index;
            d["anchor"] = w.anchor.str();
            d["scale_entry"] = w.scale_entry;
            d["x"] = w.x;
            d["y_bar"] = rats_to_py(w.y_bar);
            d["z"] = rats_to_py(w.z);
            d["image"] = rats_to_py(w.image);
            return d;
        },
        py::arg("a"), py::arg("b"), py::arg("r"), py::arg("neighborhood"), py::arg("n_pick"),
        py::arg("oracle"));

    m.def(
        "ip_star_falsify",
        [](const py::function& predicate, std::size_t generators, std::int64_t value_bound,
           bool allow_repeats) -> py::object {
            auto pred = [predicate](const Rational& q) {
                py::gil_scoped_acquire gil;
                return predicate(q.str()).cast<bool>();
            };
            auto res = ip_star_falsify(pred, generators, Rational(value_bound), allow_repeats);
            if (!res) return py::none();
            py::dict d;
            d["generators"] = rats_to_py(res->generators);
            d["fs_sample"] = rats_to_py(res->fs_sample);
            return d;
        },
        py::arg("predicate"), py::arg("generators"), py::arg("value_bound"),
        py::arg("allow_repeats") = false);

    m.def(
        "segmented_check",
        [](const py::sequence& rows, const std::vector<std::size_t>& boundaries, int r,
           std::int64_t n) {
            auto rep = segmented_check(mat_from_py(rows), BlockStructure(boundaries), r, n);
            py::dict d;
            d["verdict"] = to_string(rep.verdict);
            py::list blocks;
            for (const auto& b : rep.blocks) {
                py::dict bd;
                bd["classification"] = to_string(b.classification);
                bd["nonzero_rows"] = b.nonzero_rows;
                bd["ipr_forced_at_budget"] = b.ipr_forced_at_budget;
                blocks.append(bd);
            }
            d["blocks"] = blocks;
            return d;
        },
        py::arg("matrix"), py::arg("boundaries"), py::arg("r"), py::arg("n"));
}
