#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mutpot/expression.hpp"
#include "mutpot/orbit.hpp"
#include "mutpot/report.hpp"
#include "mutpot/seed_file.hpp"
#include "mutpot/upper_bound.hpp"
#include "mutpot/verify.hpp"

namespace py = pybind11;
using namespace mutpot;

namespace {

py::object fraction(const Rational& r) { return py::module_::import("fractions").attr("Fraction")(r.str()); }

Rational rational(const py::handle& x) { return Rational::parse(py::str(x).cast<std::string>()); }

py::object from_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

SkewForm make_form(const py::object& form) {
    if (py::isinstance<py::int_>(form)) return SkewForm::rank2(form.cast<Coord>());
    return SkewForm(IntMatrix::from_rows(form.cast<std::vector<std::vector<Coord>>>()));
}

LatticeVector vec(const std::vector<Coord>& v) { return LatticeVector(v); }

py::tuple to_tuple(std::span<const Coord> c) { return py::tuple(py::cast(std::vector<Coord>(c.begin(), c.end()))); }

py::tuple as_tuple(const LatticeVector& v) { return to_tuple(v.coords()); }

// Accepts {(a, b): m}, [((a, b), m), ...] or [(a, b), ...].
ExchangeCollection make_collection(const py::object& obj, std::size_t rank) {
    ExchangeCollection c(rank);
    if (py::isinstance<py::dict>(obj)) {
        for (const auto& [k, m] : obj.cast<py::dict>()) c.add(vec(k.cast<std::vector<Coord>>()), m.cast<int>());
        return c;
    }
    for (const auto& item : obj) {
        const py::sequence seq = item.cast<py::sequence>();
        if (py::len(seq) == 2 && !py::isinstance<py::int_>(seq[0])) {
            c.add(vec(seq[0].cast<std::vector<Coord>>()), seq[1].cast<int>());
        } else {
            c.add(vec(seq.cast<std::vector<Coord>>()));
        }
    }
    return c;
}

py::list collection_list(const ExchangeCollection& c) {
    py::list out;
    for (const auto& [v, m] : c.multiplicities()) out.append(py::make_tuple(as_tuple(v), m));
    return out;
}

BinomialRationalFn as_function(const py::object& obj, std::size_t rank) {
    if (py::isinstance<py::str>(obj)) return parse_function(obj.cast<std::string>(), rank);
    if (py::isinstance<LaurentPoly>(obj)) return BinomialRationalFn(obj.cast<LaurentPoly>());
    return obj.cast<BinomialRationalFn>();
}

LaurentPoly as_laurent(const py::object& obj, std::size_t rank) {
    LaurentCheck lc = rf_as_laurent(as_function(obj, rank));
    if (!lc.is_laurent()) throw py::value_error("expected a Laurent polynomial");
    return *lc.laurent;
}

py::object expression_object(const BinomialRationalFn& f) {
    LaurentCheck lc = rf_as_laurent(f);
    if (lc.is_laurent()) return py::cast(*lc.laurent);
    return py::cast(f.normalized());
}

std::vector<Rational> point(const py::iterable& xs) {
    std::vector<Rational> p;
    for (const auto& x : xs) p.push_back(rational(x));
    return p;
}

py::dict terms(const LaurentPoly& w) {
    py::dict d;
    for (const auto& [m, c] : w.terms()) d[to_tuple(m.coords())] = fraction(c);
    return d;
}

std::size_t rank_of(const SkewForm& omega) { return omega.rank(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact mutations of Laurent polynomials, property (V) and upper bounds";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SeedFileError>(m, "SeedFileError", PyExc_ValueError);
    py::register_exception<UnsupportedShape>(m, "UnsupportedShape", PyExc_ValueError);
    py::register_exception<DirectionNotInCollection>(m, "DirectionNotInCollection", PyExc_ValueError);
    py::register_exception<OutsideBinomialClass>(m, "OutsideBinomialClass", PyExc_ValueError);

    py::class_<LaurentPoly>(m, "Laurent")
        .def(py::init([](const std::string& text, std::size_t rank) { return as_laurent(py::str(text), rank); }),
             py::arg("text"), py::arg("rank") = 2)
        .def_property_readonly("rank", &LaurentPoly::rank)
        .def("terms", &terms)
        .def("evaluate", [](const LaurentPoly& w, const py::iterable& p) { return fraction(evaluate(w, point(p))); })
        .def("content", [](const LaurentPoly& w) { return fraction(content(w)); })
        .def("has_integer_coefficients", &LaurentPoly::has_integer_coefficients)
        .def("__pow__", [](const LaurentPoly& w, std::uint64_t n) { return w.pow(n); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__hash__", [](const LaurentPoly& w) { return py::hash(py::str(w.str())); })
        .def("__str__", &LaurentPoly::str)
        .def("__repr__", [](const LaurentPoly& w) { return "Laurent('" + w.str() + "')"; });

    py::class_<BinomialRationalFn>(m, "RationalFunction")
        .def(py::init([](const py::object& x, std::size_t rank) { return as_function(x, rank).normalized(); }),
             py::arg("expression"), py::arg("rank") = 2)
        .def_property_readonly("numerator", &BinomialRationalFn::numerator)
        .def_property_readonly("denominators",
                               [](const BinomialRationalFn& f) {
                                   py::dict d;
                                   for (const auto& [a, e] : f.denominators()) d[to_tuple(a.coords())] = e;
                                   return d;
                               })
        .def("is_laurent", [](const BinomialRationalFn& f) { return rf_as_laurent(f).is_laurent(); })
        .def("to_laurent",
             [](const BinomialRationalFn& f) -> std::optional<LaurentPoly> { return rf_as_laurent(f).laurent; })
        .def("evaluate",
             [](const BinomialRationalFn& f, const py::iterable& p) { return fraction(evaluate(f, point(p))); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", &BinomialRationalFn::str)
        .def("__repr__", [](const BinomialRationalFn& f) { return "RationalFunction('" + f.str() + "')"; });

    m.def("parse", [](const std::string& text, std::size_t rank) { return expression_object(parse_function(text, rank)); },
          py::arg("text"), py::arg("rank") = 2, "Laurent when the expression is one, RationalFunction otherwise.");

    m.def("i_omega", [](const py::object& form, const std::vector<Coord>& u) {
        return to_tuple(i_omega(make_form(form), vec(u)).coords());
    });
    m.def("reflect", [](const py::object& form, const std::vector<Coord>& u, const std::vector<Coord>& v) {
        return as_tuple(reflect(make_form(form), vec(u), vec(v)));
    });
    m.def("pl_mutate", [](const py::object& form, const std::vector<Coord>& u, const std::vector<Coord>& v) {
        return as_tuple(pl_mutate(make_form(form), vec(u), vec(v)));
    });
    m.def("pl_mutate_inv", [](const py::object& form, const std::vector<Coord>& u, const std::vector<Coord>& v) {
        return as_tuple(pl_mutate_inv(make_form(form), vec(u), vec(v)));
    });

    m.def(
        "fn_mutate",
        [](const py::object& f, const std::vector<Coord>& u, const py::object& form, int times) {
            const SkewForm omega = make_form(form);
            return expression_object(fn_mutate_iter(as_function(f, rank_of(omega)), vec(u), omega, times));
        },
        py::arg("f"), py::arg("u"), py::arg("form"), py::arg("times") = 1);
    m.def(
        "potential_mutate",
        [](const py::object& f, const std::vector<Coord>& d, const py::object& form, int times) {
            const SkewForm omega = make_form(form);
            return expression_object(potential_mutate(as_function(f, rank_of(omega)), vec(d), omega, times));
        },
        py::arg("w"), py::arg("d"), py::arg("form"), py::arg("times") = 1);
    m.def("collection_mutate", [](const py::object& collection, const std::vector<Coord>& d, const py::object& form) {
        const SkewForm omega = make_form(form);
        return collection_list(collection_mutate(make_collection(collection, rank_of(omega)), vec(d), omega));
    });
    m.def("b_matrix", [](const std::vector<std::vector<Coord>>& vs, const py::object& form) {
        std::vector<LatticeVector> v;
        for (const auto& x : vs) v.push_back(vec(x));
        return b_matrix(v, make_form(form)).to_rows();
    });
    m.def("bfz_matrix_mutate", [](const std::vector<std::vector<Coord>>& b, std::size_t k) {
        return bfz_matrix_mutate(IntMatrix::from_rows(b), k).to_rows();
    });

    m.def(
        "mutation_is_laurent",
        [](const py::object& w, const std::vector<Coord>& u, const py::object& form, int times) {
            const SkewForm omega = make_form(form);
            return from_json(to_json(mutation_is_laurent(as_laurent(w, rank_of(omega)), vec(u), omega, times)));
        },
        py::arg("w"), py::arg("u"), py::arg("form"), py::arg("times") = 1);
    m.def("check_property_v", [](const py::object& w, const py::object& collection, const py::object& form) {
        const SkewForm omega = make_form(form);
        return from_json(
            to_json(check_property_V(as_function(w, rank_of(omega)), make_collection(collection, rank_of(omega)), omega)));
    });
    m.def("generators", [](const py::object& collection, const py::object& form) {
        const SkewForm omega = make_form(form);
        return from_json(to_json(generators_for(make_collection(collection, rank_of(omega)), omega)));
    });
    m.def("member_via_generators", [](const py::object& w, const py::object& collection, const py::object& form) {
        const SkewForm omega = make_form(form);
        return member_via_generators(as_function(w, rank_of(omega)), make_collection(collection, rank_of(omega)), omega);
    });
    m.def("verify_vlemma",
          [](const py::object& collection, const py::object& form, const std::vector<Coord>& d, const py::object& w) {
              const SkewForm omega = make_form(form);
              return verify_vlemma(CSeed::base(omega, make_collection(collection, rank_of(omega))), vec(d),
                                   as_function(w, rank_of(omega)));
          });
    m.def(
        "sample_ub_element",
        [](const py::object& collection, const py::object& form, std::uint64_t seed, int terms, int max_factors,
           int max_coefficient) {
            const SkewForm omega = make_form(form);
            return sample_ub_element(make_collection(collection, rank_of(omega)), omega,
                                     SampleBounds{terms, max_factors, max_coefficient}, seed);
        },
        py::arg("collection"), py::arg("form"), py::arg("seed") = 1, py::arg("terms") = 3, py::arg("max_factors") = 2,
        py::arg("max_coefficient") = 3);
    m.def("verify_ring_identities", [](Coord k, int m2) {
        const RingIdentityReport r = verify_ring_identities(k, m2);
        py::dict d;
        d["first_identity"] = r.first_identity;
        d["second_identity"] = r.second_identity;
        d["second_identity_variant"] = r.second_identity_variant;
        d["forward_membership"] = r.forward_membership;
        d["backward_membership"] = r.backward_membership;
        d["ok"] = r.ok();
        return d;
    });

    py::class_<SeedDocument>(m, "Seed")
        .def_static("parse", [](const std::string& text) { return parse_seed(text); })
        .def_static("load", &load_seed)
        .def("render", &render_seed)
        .def_property_readonly("name", [](const SeedDocument& d) { return d.name; })
        .def_property_readonly("rank", [](const SeedDocument& d) { return d.rank; })
        .def_property_readonly("form", [](const SeedDocument& d) { return d.form.gram().to_rows(); })
        .def_property_readonly("collection", [](const SeedDocument& d) { return collection_list(d.collection); })
        .def_property_readonly("potential",
                               [](const SeedDocument& d) -> py::object {
                                   return d.potential ? expression_object(*d.potential) : py::none();
                               })
        .def("check_property_v",
             [](const SeedDocument& d) {
                 if (!d.potential) throw py::value_error("seed has no potential");
                 return from_json(to_json(check_property_V(*d.potential, d.collection, d.form)));
             })
        .def(
            "mutate",
            [](SeedDocument d, const std::vector<Coord>& dir, int times) {
                for (int i = 0; i < times; ++i) d.collection = collection_mutate(d.collection, vec(dir), d.form);
                if (d.potential) d.potential = potential_mutate(*d.potential, vec(dir), d.form, times);
                return d;
            },
            py::arg("direction"), py::arg("times") = 1)
        .def(
            "orbit",
            [](const SeedDocument& d, std::size_t depth, bool with_potential) {
                return from_json(to_json(explore_orbit(d.vseed(), depth, with_potential)));
            },
            py::arg("depth"), py::arg("with_potential") = false)
        .def(
            "orbit_dot",
            [](const SeedDocument& d, std::size_t depth, bool with_potential) {
                return to_dot(explore_orbit(d.vseed(), depth, with_potential));
            },
            py::arg("depth"), py::arg("with_potential") = false)
        .def(py::self == py::self)
        .def("__str__", &render_seed);

    m.def("suite_names", &suite_names);
    m.def(
        "run_suite",
        [](const std::string& name, std::size_t cases, std::uint64_t rng_seed) {
            return from_json(to_json(run_suite(name, SuiteOptions{cases, rng_seed})));
        },
        py::arg("name"), py::arg("cases") = 0, py::arg("rng_seed") = 1);
}
