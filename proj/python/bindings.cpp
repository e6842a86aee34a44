#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polytoep/criteria.hpp"
#include "polytoep/report.hpp"
#include "polytoep/selftest.hpp"

namespace py = pybind11;

namespace {

using namespace polytoep;

std::string analyze_json(const std::string& symbol_json, const std::string& backend,
                         const std::vector<int>& truncate_sizes) {
    AnalyzeOptions opt;
    if (!truncate_sizes.empty()) {
        opt.with_oracle = true;
        opt.probe_sizes = truncate_sizes;
    }
    if (backend == "float") return report_to_json(analyze(parse_symbol_float(symbol_json), opt));
    if (backend != "exact") throw ValidationError("backend must be 'exact' or 'float'");
    std::vector<std::string> warn;
    SymbolQ s = parse_symbol_exact(symbol_json, &warn);
    AnalysisReport rep = analyze(s, opt);
    rep.warnings.insert(rep.warnings.begin(), warn.begin(), warn.end());
    return report_to_json(rep);
}

py::array_t<std::complex<double>> truncate_section(const std::string& symbol_json, int size) {
    TruncatedToeplitz t = truncate(parse_symbol_exact(symbol_json, nullptr), size);
    py::array_t<std::complex<double>> arr({t.size, t.size});
    auto buf = arr.mutable_unchecked<2>();
    for (int q = 0; q < t.size; ++q)
        for (int p = 0; p < t.size; ++p) buf(q, p) = t.mat(q, p);
    return arr;
}

py::dict probe_sections(const std::string& symbol_json, const std::vector<int>& sizes) {
    KernelProbe pr = kernel_probe(parse_symbol_exact(symbol_json, nullptr), sizes);
    py::list recs;
    for (const ProbeSizeRecord& r : pr.per_size) {
        py::dict e;
        e["size"] = r.size;
        e["sigma"] = r.sigma;
        recs.append(e);
    }
    py::dict d;
    d["perSize"] = recs;
    d["estimatedKernelDim"] = pr.estimated_kernel_dim;
    return d;
}

py::dict run_selftest_py(std::uint64_t seed, int cases, bool perturb) {
    SelftestResult res = run_selftest({seed, cases, perturb});
    py::list suites;
    for (const SuiteResult& s : res.suites) {
        py::dict e;
        e["name"] = s.name;
        e["cases"] = s.cases;
        e["failures"] = s.failures;
        e["messages"] = s.messages;
        suites.append(e);
    }
    py::dict d;
    d["suites"] = suites;
    d["ok"] = res.ok();
    return d;
}

}  // namespace

PYBIND11_MODULE(_polytoep, m) {
    m.doc() = "Toeplitz operators with polyanalytic polynomial symbols on the Bergman space";
    py::register_exception<polytoep::Error>(m, "AnalysisError");
    m.def("analyze_json", &analyze_json, py::arg("symbol_json"), py::arg("backend") = "exact",
          py::arg("truncate_sizes") = std::vector<int>{},
          "Full analysis; returns the JSON report as a string.");
    m.def("truncate", &truncate_section, py::arg("symbol_json"), py::arg("size"),
          "Finite section in the normalized monomial basis, as a complex matrix.");
    m.def("kernel_probe", &probe_sections, py::arg("symbol_json"), py::arg("sizes"),
          "Smallest singular values across growing sections plus the decay-based estimate.");
    m.def("selftest", &run_selftest_py, py::arg("seed") = 20250825, py::arg("cases") = 40,
          py::arg("perturb") = false, "Exact verification of the core operator identities.");
}
