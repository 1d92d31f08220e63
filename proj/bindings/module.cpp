#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seqsym/multfunc.hpp"
#include "seqsym/render.hpp"
#include "seqsym/seqmatrix.hpp"
#include "seqsym/verify.hpp"
#include "seqsym/zolotarev.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

seqsym::DihedralElement sigma_arg(const std::string& name) {
    const auto s = seqsym::dihedral_from_string(name);
    if (!s) {
        throw std::invalid_argument("unknown symmetry '" + name + "'");
    }
    return *s;
}

seqsym::RenderFormat format_arg(const std::string& name) {
    const auto f = seqsym::format_from_string(name);
    if (!f) {
        throw std::invalid_argument("unknown format '" + name + "'");
    }
    return *f;
}

template <typename M>
std::vector<std::vector<std::int64_t>> rows_of(const M& a) {
    std::vector<std::vector<std::int64_t>> rows;
    rows.reserve(static_cast<std::size_t>(a.side()));
    for (int i = 1; i <= a.side(); ++i) {
        std::vector<std::int64_t> row;
        row.reserve(static_cast<std::size_t>(a.side()));
        for (int j = 1; j <= a.side(); ++j) {
            row.push_back(a.at(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

py::dict report_dict(const seqsym::VerificationReport& r) {
    py::dict d;
    d["check"] = r.check;
    d["range"] = std::to_string(r.lo) + ".." + std::to_string(r.hi);
    d["param"] = r.param_name;
    d["cases"] = r.cases;
    d["skipped"] = r.skipped;
    d["failure_count"] = r.failure_count;
    py::list fails;
    for (const auto& f : r.failures) {
        py::dict one;
        one[py::str(r.param_name)] = f.primary;
        if (f.secondary >= 0) one["a"] = f.secondary;
        fails.append(one);
    }
    d["failures"] = fails;
    d["pass"] = r.pass();
    d["wall_seconds"] = r.wall_seconds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sequential matrices over Z/(n^2+1)Z: dihedral symmetries, Jacobi symbols and "
              "Zolotarev permutation checks";

    py::class_<seqsym::ResidueMatrix>(m, "ResidueMatrix")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &seqsym::ResidueMatrix::side)
        .def_property_readonly("m",
                               [](const seqsym::ResidueMatrix& a) { return a.modulus().value(); })
        .def("at", &seqsym::ResidueMatrix::at, py::arg("i"), py::arg("j"),
             "1-indexed entry value")
        .def("set", &seqsym::ResidueMatrix::set, py::arg("i"), py::arg("j"), py::arg("value"))
        .def("rows", &rows_of<seqsym::ResidueMatrix>)
        .def(py::self == py::self)
        .def("__repr__", [](const seqsym::ResidueMatrix& a) {
            return "ResidueMatrix(n=" + std::to_string(a.side()) +
                   ", m=" + std::to_string(a.modulus().value()) + ")";
        });

    py::class_<seqsym::SignMatrix>(m, "SignMatrix")
        .def(py::init<int, int>(), py::arg("n"), py::arg("fill") = 0)
        .def_property_readonly("n", &seqsym::SignMatrix::side)
        .def("at",
             [](const seqsym::SignMatrix& a, int i, int j) { return a.at(i, j); },
             py::arg("i"), py::arg("j"))
        .def("set",
             [](seqsym::SignMatrix& a, int i, int j, seqsym::Sign v) {
                 if (v < -1 || v > 1) {
                     throw std::invalid_argument("sign entry must be -1, 0 or +1");
                 }
                 a.at(i, j) = v;
             },
             py::arg("i"), py::arg("j"), py::arg("value"))
        .def("rows", &rows_of<seqsym::SignMatrix>)
        .def(py::self == py::self)
        .def("__repr__", [](const seqsym::SignMatrix& a) {
            return "SignMatrix(n=" + std::to_string(a.side()) + ")";
        });

    py::class_<seqsym::Permutation>(m, "Permutation")
        .def(py::init<std::vector<std::int64_t>>(), py::arg("image"))
        .def_static("identity", &seqsym::Permutation::identity, py::arg("m"))
        .def_property_readonly("m", &seqsym::Permutation::size)
        .def("__call__", &seqsym::Permutation::operator(), py::arg("x"))
        .def("then", &seqsym::Permutation::then, py::arg("other"),
             "left-to-right composition: (p.then(q))(x) = q(p(x))")
        .def("inverse", &seqsym::Permutation::inverse)
        .def("image", &seqsym::Permutation::image)
        .def("cycles",
             [](const seqsym::Permutation& p) { return seqsym::cycles(p).cycles; })
        .def("cycle_lengths",
             [](const seqsym::Permutation& p) { return seqsym::cycles(p).lengths(); })
        .def("signature", [](const seqsym::Permutation& p) { return seqsym::signature(p); })
        .def(py::self == py::self);

    m.def("dihedral_elements", [] {
        std::vector<std::string> names;
        for (const auto s : seqsym::kDihedralElements) {
            names.emplace_back(seqsym::to_string(s));
        }
        return names;
    });
    m.def("compose",
          [](const std::string& s, const std::string& t) {
              return std::string(seqsym::to_string(seqsym::compose(sigma_arg(s), sigma_arg(t))));
          },
          py::arg("s"), py::arg("t"), "composition: t acts first, then s");
    m.def("inverse",
          [](const std::string& s) {
              return std::string(seqsym::to_string(seqsym::inverse(sigma_arg(s))));
          },
          py::arg("s"));

    m.def("sequential", &seqsym::sequential, py::arg("n"),
          "the n x n sequential matrix over Z/(n^2+1)Z");
    m.def("apply",
          [](const std::string& sigma, const seqsym::ResidueMatrix& a) {
              return seqsym::apply(sigma_arg(sigma), a);
          },
          py::arg("sigma"), py::arg("a"));
    m.def("apply_sign",
          [](const std::string& sigma, const seqsym::SignMatrix& a) {
              return seqsym::apply(sigma_arg(sigma), a);
          },
          py::arg("sigma"), py::arg("a"));
    m.def("realize_by_products",
          [](const std::string& sigma, const seqsym::ResidueMatrix& a) {
              return seqsym::realize_by_products(sigma_arg(sigma), a);
          },
          py::arg("sigma"), py::arg("a"));
    m.def("transpose",
          [](const seqsym::ResidueMatrix& a) { return seqsym::transpose(a); }, py::arg("a"));
    m.def("scalar_mul",
          [](std::int64_t c, const seqsym::ResidueMatrix& a) {
              return seqsym::scalar_mul(seqsym::reduce(c, a.modulus()), a);
          },
          py::arg("c"), py::arg("a"));
    m.def("induced_permutation",
          [](const std::string& sigma, int n) {
              return seqsym::induced_permutation(sigma_arg(sigma), n);
          },
          py::arg("sigma"), py::arg("n"));

    m.def("jacobi", &seqsym::jacobi, py::arg("a"), py::arg("m"));
    m.def("legendre_euler", &seqsym::legendre_euler, py::arg("a"), py::arg("p"));
    m.def("qr_bruteforce",
          [](std::int64_t a, std::int64_t m) { return seqsym::qr_bruteforce(a, m); },
          py::arg("a"), py::arg("m"));
    m.def("jacobi_matrix", &seqsym::jacobi_matrix, py::arg("a"),
          "entrywise Jacobi symbol of a residue matrix (odd modulus only)");

    m.def("mult_perm", &seqsym::mult_perm, py::arg("a"), py::arg("m"),
          "the permutation x -> a*x mod m (gcd(a, m) must be 1)");

    m.def("check_theorem1", &seqsym::check_theorem1, py::arg("n"));
    m.def("check_value_table", &seqsym::check_value_table, py::arg("n"));
    m.def("check_realizations", &seqsym::check_realizations, py::arg("n"));
    m.def("check_corollary_jacobi",
          [](int n) {
              const seqsym::Modulus mod(static_cast<std::int64_t>(n) * n + 1);
              return seqsym::check_corollary(seqsym::MultiplicativeMap::jacobi_symbol(mod), n);
          },
          py::arg("n"));
    m.def("check_corollary_unit_indicator",
          [](int n) {
              const seqsym::Modulus mod(static_cast<std::int64_t>(n) * n + 1);
              return seqsym::check_corollary(seqsym::MultiplicativeMap::unit_indicator(mod), n);
          },
          py::arg("n"));
    m.def("check_jacobi_theorem",
          [](int n) {
              const auto r = seqsym::check_jacobi_theorem(n);
              return py::make_tuple(r.holds, r.sign);
          },
          py::arg("n"), "returns (holds, rotation sign)");
    m.def("check_basic_symmetry", &seqsym::check_basic_symmetry, py::arg("n"));
    m.def("check_lemma", &seqsym::check_lemma, py::arg("n"));
    m.def("check_cycle_structure", &seqsym::check_cycle_structure, py::arg("n"));
    m.def("check_zolotarev", &seqsym::check_zolotarev, py::arg("a"), py::arg("m"));

    m.def("render_residue",
          [](const seqsym::ResidueMatrix& a, const std::string& fmt) {
              return seqsym::render(a, format_arg(fmt));
          },
          py::arg("a"), py::arg("format") = "text");
    m.def("render_sign",
          [](const seqsym::SignMatrix& a, const std::string& fmt) {
              return seqsym::render(a, format_arg(fmt));
          },
          py::arg("a"), py::arg("format") = "text");
    m.def("parse_residue",
          [](const std::string& input, const std::string& fmt) {
              return seqsym::parse_residue(input, format_arg(fmt));
          },
          py::arg("input"), py::arg("format") = "text");
    m.def("parse_sign",
          [](const std::string& input, const std::string& fmt) {
              return seqsym::parse_sign(input, format_arg(fmt));
          },
          py::arg("input"), py::arg("format") = "text");

    m.def("verification_names", [] { return seqsym::verification_names(); });
    m.def("verify",
          [](const std::string& check, std::int64_t lo, std::int64_t hi, int workers) {
              seqsym::VerificationReport report;
              {
                  py::gil_scoped_release release;
                  report = seqsym::run_verification(check, lo, hi, workers);
              }
              return report_dict(report);
          },
          py::arg("check"), py::arg("lo"), py::arg("hi"), py::arg("workers") = 1,
          "run one identity check over an inclusive range; returns the report as a dict");
}
