#include <array>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hilbinv/bigint.hpp"
#include "hilbinv/hilbcone.hpp"
#include "hilbinv/lattice.hpp"
#include "hilbinv/mukai.hpp"
#include "hilbinv/pell.hpp"
#include "hilbinv/sigma.hpp"

namespace py = pybind11;
using namespace hilbinv;

// Big integers cross the boundary as Python ints, via their decimal text.
namespace pybind11::detail {

template <>
struct type_caster<BigInt> {
  PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    try {
      value = parse_decimal(py::str(src).cast<std::string>());
    } catch (const std::invalid_argument&) {
      return false;
    }
    return true;
  }

  static handle cast(const BigInt& v, return_value_policy, handle) {
    return PyLong_FromString(to_decimal(v).c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<BigRational> {
  PYBIND11_TYPE_CASTER(BigRational, const_name("fractions.Fraction"));

  bool load(handle, bool) { return false; }

  static handle cast(const BigRational& v, return_value_policy policy, handle parent) {
    auto fraction = py::module_::import("fractions").attr("Fraction");
    auto num = reinterpret_steal<object>(type_caster<BigInt>::cast(numerator(v), policy, parent));
    auto den = reinterpret_steal<object>(type_caster<BigInt>::cast(denominator(v), policy, parent));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

template <class Int>
py::tuple mukai_tuple(const mukai::BasicMukaiVector<Int>& v) {
  return py::make_tuple(v.r, v.c, v.s);
}

py::tuple solution_tuple(const pell::PellSolution& s) { return py::make_tuple(s.x, s.y); }

py::object maybe_solution(const std::optional<pell::PellSolution>& s) {
  return s ? py::object(solution_tuple(*s)) : py::none();
}

hilbcone::WallMode wall_mode(const std::string& name) {
  if (name == "appendix") return hilbcone::WallMode::Appendix;
  if (name == "full") return hilbcone::WallMode::Full;
  throw py::value_error("mode must be 'appendix' or 'full'");
}

py::dict wall_dict(const hilbcone::WallRecord& w) {
  py::dict d;
  d["rho"] = w.rho;
  d["alpha"] = w.alpha;
  d["X"] = w.x;
  d["Y"] = w.y;
  d["slope"] = w.slope;
  d["ray"] = py::make_tuple(w.ray.a, w.ray.b);
  d["a_vec"] = mukai_tuple(w.a_vec);
  return d;
}

py::dict chamber_dict(const hilbcone::ChamberCount& c) {
  py::dict d;
  d["n"] = c.n;
  d["C_n"] = c.chambers;
  d["walls_below_middle"] = c.walls_below_middle;
  d["total_rays"] = c.total_rays;
  d["symmetric"] = c.symmetric ? py::object(py::bool_(*c.symmetric)) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact lattice and Pell computations for Hilbert schemes of K3 surfaces";

  // pell
  m.def("isqrt", [](const BigInt& v) {
    const auto r = pell::isqrt(v);
    return py::make_tuple(r.root, r.exact);
  }, py::arg("m"), "floor(sqrt(m)) and whether m is a perfect square");
  m.def("fundamental_solution", [](const BigInt& d) { return solution_tuple(pell::fundamental_solution(d)); },
        py::arg("d"));
  m.def("continued_fraction_period", &pell::continued_fraction_period, py::arg("d"));
  m.def("negative_pell_minimal", [](const BigInt& d) { return maybe_solution(pell::negative_pell_minimal(d)); },
        py::arg("d"));
  m.def("minimal_solution_mixed",
        [](const BigInt& p, const BigInt& q, const BigInt& bound) {
          return maybe_solution(pell::minimal_solution_mixed(p, q, bound));
        },
        py::arg("p"), py::arg("q"), py::arg("x_bound") = BigInt(1'000'000));
  m.def("solutions_bounded",
        [](const BigInt& d, const BigInt& rhs, const BigInt& modulus, const BigInt& residue, const BigInt& x_bound) {
          py::list out;
          for (const auto& s : pell::solutions_bounded({d, rhs, modulus, residue, x_bound})) {
            out.append(solution_tuple(s));
          }
          return out;
        },
        py::arg("d"), py::arg("rhs"), py::arg("modulus"), py::arg("residue"), py::arg("x_bound"));

  // mukai
  m.def("standard_vectors", [](std::int64_t n) {
    const auto sv = mukai::standard_vectors(mukai::MukaiContext(n));
    py::dict d;
    d["v"] = mukai_tuple(sv.v);
    d["a"] = mukai_tuple(sv.a);
    d["w"] = mukai_tuple(sv.w);
    d["u"] = mukai_tuple(sv.u);
    return d;
  }, py::arg("n"));
  m.def("mukai_pairing",
        [](std::int64_t n, std::array<std::int64_t, 3> a, std::array<std::int64_t, 3> b) {
          return mukai::mukai_pairing(mukai::MukaiContext(n), mukai::MukaiVector{a[0], a[1], a[2]},
                                      mukai::MukaiVector{b[0], b[1], b[2]});
        },
        py::arg("n"), py::arg("a"), py::arg("b"));
  m.def("v_i", [](std::int64_t n, std::int64_t i) { return mukai_tuple(mukai::v_i(mukai::MukaiContext(n), i)); },
        py::arg("n"), py::arg("i"));
  m.def("r_max", [](std::int64_t n) { return mukai::r_max(mukai::MukaiContext(n)); }, py::arg("n"));
  m.def("spherical_search",
        [](std::int64_t n, std::int64_t i, std::int64_t bound) {
          py::list out;
          for (const auto& p : mukai::spherical_search(mukai::MukaiContext(n), i, bound)) {
            out.append(py::make_tuple(p.x, p.y));
          }
          return out;
        },
        py::arg("n"), py::arg("i"), py::arg("bound") = 50);
  m.def("positive_decomposition_search",
        [](std::int64_t n, std::int64_t i, std::int64_t bound) {
          py::list out;
          for (const auto& d : mukai::positive_decomposition_search(mukai::MukaiContext(n), i, bound)) {
            out.append(py::make_tuple(mukai_tuple(d.first), mukai_tuple(d.second)));
          }
          return out;
        },
        py::arg("n"), py::arg("i"), py::arg("bound"));
  m.def("strata_table", [](std::int64_t n) {
    py::list out;
    for (const auto& row : mukai::strata_table(mukai::MukaiContext(n))) {
      py::dict d;
      d["k"] = row.k;
      d["vector"] = mukai_tuple(row.vector);
      d["moduli_dim"] = row.moduli_dim;
      d["codim_in_N"] = row.codim_in_base;
      d["fiber_dim"] = row.fiber_dim;
      d["dim_Jk"] = row.stratum_dim;
      d["hom_chi"] = row.hom_chi;
      out.append(d);
    }
    return out;
  }, py::arg("n"));

  // hilbcone
  m.def("bb_form",
        [](std::int64_t n, std::pair<BigInt, BigInt> c1, std::pair<BigInt, BigInt> c2) {
          return hilbcone::bb_form(n, {c1.first, c1.second}, {c2.first, c2.second});
        },
        py::arg("n"), py::arg("c1"), py::arg("c2"));
  m.def("involution_action",
        [](std::int64_t n, std::pair<BigInt, BigInt> c) {
          const auto r = hilbcone::involution_action(n, {c.first, c.second});
          return py::make_tuple(r.a, r.b);
        },
        py::arg("n"), py::arg("c"));
  m.def("enumerate_walls",
        [](std::int64_t n, const std::string& mode) {
          py::list out;
          for (const auto& w : hilbcone::enumerate_walls(n, wall_mode(mode))) out.append(wall_dict(w));
          return out;
        },
        py::arg("n"), py::arg("mode") = "full");
  m.def("chamber_count",
        [](std::int64_t n, const std::string& mode) { return chamber_dict(hilbcone::chamber_count(n, wall_mode(mode))); },
        py::arg("n"), py::arg("mode") = "full");
  m.def("scan_chambers",
        [](std::int64_t n_min, std::int64_t n_max, const std::string& mode, unsigned jobs) {
          const auto mode_v = wall_mode(mode);
          std::vector<hilbcone::ChamberCount> rows;
          {
            py::gil_scoped_release release;
            rows = hilbcone::scan_chambers(n_min, n_max, mode_v, jobs);
          }
          py::list out;
          for (const auto& c : rows) out.append(chamber_dict(c));
          return out;
        },
        py::arg("n_min"), py::arg("n_max"), py::arg("mode") = "appendix", py::arg("jobs") = 1u);

  // sigma
  m.def("ns_sigma", [](std::int64_t n) {
    const auto s = sigma::ns_sigma(n);
    py::dict d;
    d["g"] = s.g;
    d["L_square"] = s.l_square;
    d["kappa_square"] = s.kappa_square;
    d["kappa_vec"] = mukai_tuple(s.kappa_vec);
    d["discriminant"] = s.discriminant;
    d["pell_d"] = s.pell_d;
    return d;
  }, py::arg("n"));
  m.def("positive_cone_rational", &sigma::positive_cone_rational, py::arg("n"));
  m.def("bir_finiteness", [](std::int64_t n) {
    const auto v = sigma::bir_finiteness(n);
    py::dict d;
    d["status"] = sigma::to_string(v.status);
    d["witness"] = maybe_solution(v.witness);
    d["obstruction"] = v.obstruction ? py::cast(*v.obstruction) : py::none();
    d["pell_d"] = v.pell_d;
    d["w_divisibility"] = v.w_divisibility;
    d["reason"] = v.reason;
    return d;
  }, py::arg("n"));
  m.def("h0_sigma", &sigma::h0_sigma, py::arg("n"), py::arg("k"));
  m.def("dimension_report", [](std::int64_t n) {
    const auto r = sigma::dimension_report(n);
    py::dict d;
    d["h0_full"] = r.h0_full;
    d["proj_dim"] = r.proj_dim;
    d["pluecker_linear_dim"] = r.pluecker_linear_dim;
    d["pluecker_ambient_dim"] = r.pluecker_ambient_dim;
    return d;
  }, py::arg("n"));

  // lattice
  m.def("verify_alpha", [](std::int64_t n) {
    const auto c = lattice::verify_alpha(lattice::PeriodLattice(n));
    return c.all();
  }, py::arg("n"), "whether the period-lattice isometry alpha passes every check at n");
}
