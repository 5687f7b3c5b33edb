#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cmath>
#include <numbers>
#include <span>

#include "qwalk/coin.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/evolve.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/spin.hpp"
#include "qwalk/sweep.hpp"

namespace py = pybind11;
using namespace qwalk;

namespace {

py::array_t<Complex> to_array(const Matrix2& m) {
  py::array_t<Complex> out({2, 2});
  auto v = out.mutable_unchecked<2>();
  for (py::ssize_t r = 0; r < 2; ++r) {
    for (py::ssize_t c = 0; c < 2; ++c) v(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  }
  return out;
}

template <class T>
py::array_t<T> to_array(std::span<const T> v) {
  return py::array_t<T>(static_cast<py::ssize_t>(v.size()), v.data());
}

template <class T>
py::array_t<T> to_array(const std::vector<T>& v) {
  return py::array_t<T>(static_cast<py::ssize_t>(v.size()), v.data());
}

py::array_t<std::int64_t> sites(const Distribution& d) {
  py::array_t<std::int64_t> k(static_cast<py::ssize_t>(d.p.size()));
  auto v = k.mutable_unchecked<1>();
  for (py::ssize_t i = 0; i < v.shape(0); ++i) v(i) = d.k_min() + i;
  return k;
}

py::dict fit_dict(const FitOutcome& f) {
  py::dict d;
  d["flag"] = f.flag();
  d["exponent"] = f.exponent();
  d["prefactor"] = f.result.prefactor;
  d["residual"] = f.result.residual;
  d["points"] = f.result.points;
  d["reason"] = f.reason;
  return d;
}

InitialState make_init(Complex up, Complex down) {
  InitialState init{{up, down}};
  init.validate();
  return init;
}

}  // namespace

PYBIND11_MODULE(_qwalk, m) {
  m.doc() = "Discrete-time quantum walks driven by coin sequences";
  m.attr("__version__") = QWALK_VERSION;

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<FitDomainError>(m, "FitDomainError", base.ptr());

  py::class_<Coin>(m, "Coin")
      .def(py::init([](const std::string& family, double angle) { return build_coin(parse_coin_family(family), angle); }),
           py::arg("family"), py::arg("angle"))
      .def_property_readonly("family", [](const Coin& c) { return std::string(to_string(c.family())); })
      .def_property_readonly("angle", &Coin::angle)
      .def_property_readonly("matrix", [](const Coin& c) { return to_array(c.matrix()); });

  m.def("fibonacci_word", [](int n) { return fibonacci_word(n).str(); }, py::arg("n"));
  m.def("silver_word", [](int n) { return silver_word(n).str(); }, py::arg("n"));

  py::class_<SequenceSpec>(m, "SequenceSpec")
      .def(py::init([](const std::string& kind, int approximant_order, double alpha_a, double alpha_b, double width,
                       std::uint64_t seed, const std::string& family, const std::string& letter_order,
                       bool complementary_b) {
             SequenceSpec s{.kind = parse_sequence_kind(kind),
                            .approximant_order = approximant_order,
                            .alpha_a = alpha_a,
                            .alpha_b = alpha_b,
                            .width = width,
                            .seed = seed,
                            .family = parse_coin_family(family),
                            .letter_order = parse_letter_order(letter_order),
                            .complementary_b = complementary_b};
             s.validate();
             return s;
           }),
           py::kw_only(), py::arg("kind") = "constant", py::arg("approximant_order") = 1,
           py::arg("alpha_a") = std::numbers::pi / 4, py::arg("alpha_b") = std::numbers::pi / 4,
           py::arg("width") = std::numbers::pi / 8, py::arg("seed") = 0, py::arg("family") = "hadamard",
           py::arg("letter_order") = "word", py::arg("complementary_b") = false)
      .def_property_readonly("kind", [](const SequenceSpec& s) { return std::string(to_string(s.kind)); })
      .def_property_readonly("family", [](const SequenceSpec& s) { return std::string(to_string(s.family)); })
      .def_readonly("approximant_order", &SequenceSpec::approximant_order)
      .def_readonly("alpha_a", &SequenceSpec::alpha_a)
      .def_readonly("alpha_b", &SequenceSpec::alpha_b)
      .def_readonly("width", &SequenceSpec::width)
      .def_readonly("seed", &SequenceSpec::seed)
      .def_readonly("complementary_b", &SequenceSpec::complementary_b);

  py::class_<LetterStream>(m, "LetterStream")
      .def(py::init<const SequenceSpec&>(), py::arg("spec"))
      .def("letter", [](const LetterStream& s, std::uint64_t i) { return s.letter(i) == Letter::A ? "A" : "B"; })
      .def("angle", &LetterStream::angle)
      .def("prefix", &LetterStream::prefix);

  m.def(
      "evolve",
      [](const SequenceSpec& spec, std::size_t steps, Complex up, Complex down, std::size_t sigma_every,
         std::vector<std::size_t> snapshots) {
        const auto init = make_init(up, down);
        const auto r = [&] {
          py::gil_scoped_release release;
          return evolve(spec, steps, init, {sigma_every, std::move(snapshots)});
        }();
        const auto final_dist = distribution(r.final_state);
        py::dict out;
        out["t"] = to_array(r.sigma.t);
        out["sigma"] = to_array(r.sigma.sigma);
        out["norm"] = to_array(r.norm);
        out["k"] = sites(final_dist);
        out["p"] = to_array(final_dist.p);
        out["up"] = to_array(r.final_state.up_amplitudes());
        out["down"] = to_array(r.final_state.down_amplitudes());
        py::dict snaps;
        for (const auto& d : r.snapshots) snaps[py::int_(d.t)] = py::make_tuple(sites(d), to_array(d.p));
        out["snapshots"] = snaps;
        return out;
      },
      py::arg("spec"), py::arg("steps"), py::kw_only(), py::arg("up") = Complex(std::numbers::sqrt2 / 2),
      py::arg("down") = Complex(0.0, std::numbers::sqrt2 / 2), py::arg("sigma_every") = 1,
      py::arg("snapshots") = std::vector<std::size_t>{});

  m.def(
      "fit_exponent",
      [](const std::vector<std::size_t>& t, const std::vector<double>& sigma, double t_min, double t_max) {
        if (t.size() != sigma.size()) throw ValidationError("t and sigma must have equal length");
        const auto r = fit_exponent(SigmaSeries{t, sigma}, {t_min, t_max});
        return fit_dict({r.confined ? FitStatus::Confined : FitStatus::Ok, r, {}});
      },
      py::arg("t"), py::arg("sigma"), py::arg("t_min"), py::arg("t_max"),
      "Least-squares slope of log sigma against log t; raises FitDomainError if the window is unusable.");
  m.def("default_window", [](std::size_t steps) {
    const auto w = default_window(steps);
    return py::make_tuple(w.t_min, w.t_max);
  });

  m.def(
      "ensemble_average",
      [](const SequenceSpec& spec, std::size_t realizations, std::size_t steps, std::size_t workers) {
        EnsembleOptions opt;
        opt.workers = workers;
        EnsembleResult r;
        {
          py::gil_scoped_release release;
          r = ensemble_average(spec, realizations, steps, opt);
        }
        py::dict out;
        out["seeds"] = r.seeds;
        out["t"] = to_array(r.mean.t);
        out["sigma"] = to_array(r.mean.sigma);
        out["stderr"] = to_array(r.stderr_);
        out["k"] = sites(r.mean_distribution);
        out["p"] = to_array(r.mean_distribution.p);
        out["fit"] = fit_dict(r.fit_of_mean);
        py::list per;
        for (const auto& f : r.per_realization) per.append(fit_dict(f));
        out["per_realization"] = per;
        out["mean_of_exponents"] = r.mean_of_exponents;
        return out;
      },
      py::arg("spec"), py::arg("realizations"), py::arg("steps"), py::kw_only(), py::arg("workers") = 1);

  m.def(
      "spin_products",
      [](const Coin& a, const Coin& b, std::size_t n_max) {
        const auto tr = fibonacci_spin_products(a, b, n_max);
        py::list mats;
        for (const auto& p : tr.products) mats.append(to_array(p));
        return py::make_tuple(mats, to_array(tr.traces), to_array(tr.determinants));
      },
      py::arg("a"), py::arg("b"), py::arg("n_max"));
  m.def(
      "detect_period",
      [](const Coin& a, const Coin& b, std::size_t bound, double tol) {
        return detect_period(fibonacci_spin_products(a, b, 2 * bound + 1), bound, tol);
      },
      py::arg("a"), py::arg("b"), py::kw_only(), py::arg("bound") = 64, py::arg("tol") = 1e-8,
      "Smallest period p <= bound of the Fibonacci spin products, or None.");

  m.def(
      "sweep",
      [](const std::string& kind, std::size_t grid, std::size_t steps, std::optional<std::pair<double, double>> window,
         std::uint64_t seed, std::size_t workers, std::optional<std::filesystem::path> journal,
         std::optional<std::size_t> cell_budget) {
        SweepConfig cfg;
        cfg.sequence.kind = parse_sequence_kind(kind);
        cfg.grid = grid;
        cfg.steps = steps;
        const auto w = window ? FitWindow{window->first, window->second} : default_window(steps);
        cfg.window = w;
        cfg.seed = seed;
        cfg.workers = workers;
        SlopeSurface s;
        {
          py::gil_scoped_release release;
          s = run_sweep(cfg, {journal, cell_budget});
        }
        py::array_t<double> c({grid, grid});
        auto v = c.mutable_unchecked<2>();
        py::list flags;
        for (std::size_t i = 0; i < grid; ++i) {
          py::list row;
          for (std::size_t j = 0; j < grid; ++j) {
            const auto& cell = s.at(i, j);
            v(i, j) = cell.done && cell.flag != "failed" ? cell.c : std::nan("");
            row.append(cell.done ? cell.flag : std::string("pending"));
          }
          flags.append(row);
        }
        py::dict out;
        out["alphas"] = to_array(s.alphas);
        out["betas"] = to_array(s.betas);
        out["c"] = c;
        out["flags"] = flags;
        out["complete"] = s.complete();
        return out;
      },
      py::arg("kind") = "fibonacci", py::kw_only(), py::arg("grid") = 32, py::arg("steps") = 4000,
      py::arg("window") = py::none(), py::arg("seed") = 0, py::arg("workers") = 1, py::arg("journal") = py::none(),
      py::arg("cell_budget") = py::none());
}
