#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rrt/experiments.hpp"
#include "rrt/functionals.hpp"
#include "rrt/gem.hpp"
#include "rrt/harness.hpp"
#include "rrt/io.hpp"
#include "rrt/oracle.hpp"
#include "rrt/rt_algorithm.hpp"
#include "rrt/verify.hpp"

namespace py = pybind11;

namespace {

using WordTuple = std::vector<rrt::Letter>;

rrt::HarrisTree to_tree(const std::vector<WordTuple>& words) {
    std::vector<rrt::Word> w;
    w.reserve(words.size());
    for (const auto& letters : words) w.emplace_back(letters);
    return rrt::HarrisTree::from_words(w);
}

py::list from_tree(const rrt::HarrisTree& x) {
    py::list out;
    for (const auto& u : x.words()) out.append(py::tuple(py::cast(WordTuple(u.letters().begin(), u.letters().end()))));
    return out;
}

py::dict series_columns(const std::vector<rrt::SeriesValues>& v) {
    std::vector<double> y, z, w;
    for (const auto& s : v) {
        y.push_back(s.y);
        z.push_back(s.z);
        w.push_back(s.w);
    }
    py::dict d;
    d["y"] = y;
    d["z"] = z;
    d["w"] = w;
    return d;
}

unsigned threads_or_default(unsigned threads) { return threads == 0 ? rrt::default_threads() : threads; }

}  // namespace

PYBIND11_MODULE(_rrtlab, m) {
    m.doc() = "Random recursive trees: exact laws, simulation and limit series";

    m.def("psi", [](const rrt::Encoding& e) { return from_tree(rrt::psi(e)); }, py::arg("encoding"),
          "Harris tree of a recursive-tree encoding, as sorted word tuples.");
    m.def("t_map", [](const std::vector<WordTuple>& words) { return from_tree(rrt::t_tree(to_tree(words))); },
          py::arg("words"));
    m.def("tpl", [](const std::vector<WordTuple>& w) { return rrt::tpl(to_tree(w)); }, py::arg("words"));
    m.def("hpl", [](const std::vector<WordTuple>& w) { return rrt::hpl(to_tree(w)); }, py::arg("words"));
    m.def("wiener", [](const std::vector<WordTuple>& w) { return rrt::wiener_subtree(to_tree(w)); },
          py::arg("words"));

    m.def("exact_dist",
          [](const std::string& functional, std::size_t n, unsigned threads) {
              auto d = rrt::exact_dist(rrt::parse_functional(functional), n, threads_or_default(threads));
              return py::make_tuple(d.counts, d.total());
          },
          py::arg("functional"), py::arg("n"), py::arg("threads") = 0,
          "(counts by value, number of encodings)");
    m.def("joint_table", [](std::size_t n, unsigned threads) {
        return rrt::joint_table(n, threads_or_default(threads));
    }, py::arg("n"), py::arg("threads") = 0);

    m.def("rt_build",
          [](const std::vector<double>& t, std::size_t n) {
              auto trace = rrt::rt_build(t, n);
              py::dict out;
              const auto& x = trace.tree();
              for (rrt::HarrisTree::NodeId id = 0; id < x.size(); ++id) {
                  const auto& r = trace.record(id);
                  auto u = x.word(id);
                  out[py::tuple(py::cast(WordTuple(u.letters().begin(), u.letters().end())))] =
                      py::make_tuple(r.tau, r.kappa, r.label);
              }
              return out;
          },
          py::arg("values"), py::arg("n"), "word -> (tau, kappa, label)");

    m.def("simulate",
          [](std::size_t n, std::size_t reps, std::uint64_t seed, unsigned threads) {
              auto records = rrt::simulate_functionals(n, reps, seed, threads_or_default(threads));
              std::vector<std::int64_t> t, h, w;
              for (const auto& r : records) {
                  t.push_back(r.tpl);
                  h.push_back(r.hpl);
                  w.push_back(r.wiener);
              }
              py::dict d;
              d["tpl"] = t;
              d["hpl"] = h;
              d["wiener"] = w;
              return d;
          },
          py::arg("n"), py::arg("reps"), py::arg("seed") = 1, py::arg("threads") = 0);

    m.def("sample_limits",
          [](const std::string& mode, std::size_t reps, std::uint64_t seed, std::uint64_t weight_cut,
             std::size_t stick_cut, double mass_floor, std::optional<std::vector<WordTuple>> tree,
             std::size_t input_n, unsigned threads) {
              rrt::LimitSampleConfig cfg;
              cfg.mode = rrt::parse_limit_mode(mode);
              cfg.reps = reps;
              cfg.seed = seed;
              cfg.series = {weight_cut, stick_cut, mass_floor};
              if (tree) cfg.tree = to_tree(*tree);
              cfg.input_n = input_n;
              return series_columns(rrt::sample_limits(cfg, threads_or_default(threads)));
          },
          py::arg("mode") = "unconditional", py::arg("reps") = 1000, py::arg("seed") = 1,
          py::arg("weight_cut") = rrt::SeriesOptions{}.weight_cut,
          py::arg("stick_cut") = rrt::SeriesOptions{}.stick_cut,
          py::arg("mass_floor") = rrt::SeriesOptions{}.mass_floor, py::arg("tree") = py::none(),
          py::arg("input_n") = 100, py::arg("threads") = 0);

    m.def("toll_c", [](const std::vector<double>& masses) { return rrt::toll_c({masses, 0.0}); });
    m.def("toll_d", [](const std::vector<double>& masses) { return rrt::toll_d({masses, 0.0}); });
    m.def("g_toll", &rrt::g_toll);
    m.def("expected_c", [](const std::vector<std::uint32_t>& a) { return rrt::expected_c(rrt::GemParams(a)); });
    m.def("expected_d", [](const std::vector<std::uint32_t>& a) { return rrt::expected_d(rrt::GemParams(a)); });
    m.def("ks_two_sample", [](const std::vector<double>& a, const std::vector<double>& b) {
        return rrt::ks_two_sample(a, b);
    });

    m.def("verify_json",
          [](const std::string& level, const std::vector<int>& criteria, unsigned threads) {
              auto report = rrt::run_verification(rrt::parse_verify_level(level), threads_or_default(threads),
                                                  nullptr, criteria);
              return report.to_json().dump();
          },
          py::arg("level") = "fast", py::arg("criteria") = std::vector<int>{}, py::arg("threads") = 0);
}
