#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fgs/cli.hpp"
#include "fgs/io.hpp"

namespace py = pybind11;

namespace {

// Results cross the boundary as JSON text decoded by the json module, so the
// Python side sees the same documents as the command line.
py::object to_python(const fgs::io::json& j) {
  const py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

fgs::WordSet words_of(const std::vector<std::string>& words, const fgs::Alphabet& a) {
  return fgs::parse_word_set(words, a);
}

fgs::ExploreLimits limits(std::size_t budget, bool force_rank) {
  fgs::ExploreLimits l;
  l.node_budget = budget;
  l.force_rank = force_rank;
  return l;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Whitehead graphs, Stallings cores and boundary exploration";

  py::register_exception<fgs::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<fgs::BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def("whitehead_graph", [](const std::string& gens, const std::vector<std::string>& words) {
    const fgs::Alphabet a(gens);
    return to_python(fgs::io::wh_graph_json(fgs::whitehead_graph(words_of(words, a), a), a));
  }, py::arg("gens"), py::arg("words"));

  m.def("reduce", [](const std::string& gens, const std::vector<std::string>& words) {
    const fgs::Alphabet a(gens);
    const auto z = words_of(words, a);
    return to_python(fgs::io::trace_json(fgs::cut_vertex_algorithm(z, a), z, a));
  }, py::arg("gens"), py::arg("words"));

  m.def("closure_basis", [](const std::string& gens, const std::vector<std::string>& words) {
    const fgs::Alphabet a(gens);
    std::vector<std::string> out;
    for (const auto& w : fgs::closure_basis(words_of(words, a), a)) out.push_back(fgs::format_word(w, a));
    return out;
  }, py::arg("gens"), py::arg("words"));

  m.def("is_subbasis", [](const std::string& gens, const std::vector<std::string>& words) {
    const fgs::Alphabet a(gens);
    const auto z = words_of(words, a);
    return to_python(fgs::io::subbasis_json(fgs::is_subbasis(z, a), z, a));
  }, py::arg("gens"), py::arg("words"));

  m.def("core", [](const std::string& gens, const std::vector<std::string>& words) {
    const fgs::Alphabet a(gens);
    return to_python(fgs::io::core_json(fgs::core_of(words_of(words, a), a), a));
  }, py::arg("gens"), py::arg("words"));

  m.def("cuts", [](const std::string& gens) {
    const fgs::Alphabet a(gens);
    py::list out;
    for (const auto& c : fgs::enumerate_cuts(a.rank())) out.append(to_python(fgs::io::cut_json(c, a)));
    return out;
  }, py::arg("gens"));

  m.def("boundary", [](const std::string& gens, const std::vector<std::string>& words, std::size_t cut) {
    const fgs::Alphabet a(gens);
    const auto cuts = fgs::enumerate_cuts(a.rank());
    if (cut >= cuts.size()) throw fgs::InputError("cut index out of range");
    return to_python(fgs::io::boundary_json(fgs::boundary_steps(fgs::core_of(words_of(words, a), a), cuts[cut]), cut, a));
  }, py::arg("gens"), py::arg("words"), py::arg("cut"));

  m.def("explore", [](const std::string& gens, const std::vector<std::string>& words, std::size_t budget, bool force_rank) {
    const fgs::Alphabet a(gens);
    const auto g = fgs::explore(words_of(words, a), a, limits(budget, force_rank));
    py::list out;
    const auto lines = fgs::io::exploration_json_lines(g);
    const py::object loads = py::module_::import("json").attr("loads");
    std::size_t start = 0;
    for (std::size_t end = lines.find('\n'); end != std::string::npos; start = end + 1, end = lines.find('\n', start)) {
      out.append(loads(lines.substr(start, end - start)));
    }
    return out;
  }, py::arg("gens"), py::arg("words"), py::arg("budget") = fgs::kDefaultNodeBudget, py::arg("force_rank") = false);

  m.def("sandwich", [](const std::string& gens, const std::vector<std::string>& words, std::size_t budget, bool force_rank) {
    const fgs::Alphabet a(gens);
    return to_python(fgs::io::sandwich_json(fgs::sandwich(words_of(words, a), a, limits(budget, force_rank)), a));
  }, py::arg("gens"), py::arg("words"), py::arg("budget") = fgs::kDefaultNodeBudget, py::arg("force_rank") = false);

  m.def("run", [](const std::vector<std::string>& args) {
    // args: command followed by key/value pairs as the command line takes them.
    if (args.empty()) throw fgs::InputError("missing command");
    fgs::cli::RunConfig config;
    config.command = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) {
      const auto& flag = args[i];
      auto value = [&]() -> const std::string& {
        if (i + 1 >= args.size()) throw fgs::InputError(flag + " needs a value");
        return args[++i];
      };
      if (flag == "--gens") config.generators = value();
      else if (flag == "--words") config.words.push_back(value());
      else if (flag == "--output") config.output = value();
      else if (flag == "--budget") config.node_budget = std::stoul(value());
      else if (flag == "--cut") config.cut_index = std::stoul(value());
      else if (flag == "--force-rank") config.force_rank = true;
      else if (flag == "--explain") config.explain = true;
      else if (flag == "--oracle") config.oracle = true;
      else throw fgs::InputError("unknown flag " + flag);
    }
    const auto r = fgs::cli::run(config);
    return py::make_tuple(r.exit_code, r.out, r.err);
  }, py::arg("args"));
}
