#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polytoep/criteria.hpp"
#include "polytoep/report.hpp"
#include "polytoep/selftest.hpp"

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream os;
    if (path == "-") {
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw polytoep::ParseError("cannot open input file: " + path);
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw polytoep::ValidationError("cannot open output file: " + path);
    out << text;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<int> parse_sizes(const std::string& csv) {
    std::vector<int> sizes;
    for (const std::string& p : split_csv(csv)) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(p, &pos);
            if (pos != p.size() || v < 1) throw std::invalid_argument(p);
            sizes.push_back(v);
        } catch (const std::exception&) {
            throw polytoep::ParseError("bad truncation size list: " + csv);
        }
    }
    if (sizes.empty()) throw polytoep::ParseError("empty truncation size list");
    return sizes;
}

polytoep::GridSpec parse_grid(const std::string& csv) {
    std::vector<std::string> p = split_csv(csv);
    if (p.size() != 5)
        throw polytoep::ParseError("grid must be center_re,center_im,radius,rings,per_ring");
    polytoep::GridSpec g;
    try {
        g.center = {std::stod(p[0]), std::stod(p[1])};
        g.radius = std::stod(p[2]);
        g.rings = std::stoi(p[3]);
        g.per_ring = std::stoi(p[4]);
    } catch (const std::exception&) {
        throw polytoep::ParseError("bad grid specification: " + csv);
    }
    if (!(g.radius > 0)) throw polytoep::ParseError("grid radius must be positive");
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace polytoep;

    CLI::App app{"analyzer for Toeplitz operators with polyanalytic polynomial symbols on the "
                 "Bergman space of the unit disc"};
    app.require_subcommand(1);

    std::string an_symbol, an_backend = "exact", an_truncate, an_format = "json", an_out;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "invertibility / kernel analysis of one symbol");
    analyze_cmd->add_option("--symbol", an_symbol, "symbol JSON file, or '-' for stdin")
        ->required();
    analyze_cmd->add_option("--backend", an_backend, "arithmetic backend")
        ->check(CLI::IsMember({"exact", "float"}));
    analyze_cmd->add_option("--truncate", an_truncate,
                            "comma-separated section sizes; adds the numerical cross-check");
    analyze_cmd->add_option("--format", an_format)->check(CLI::IsMember({"json", "text"}));
    analyze_cmd->add_option("--out", an_out, "output file (default stdout)");

    std::string sp_symbol, sp_grid = "0,0,1,4,16", sp_format = "json", sp_out;
    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "verdict over a polar grid of shifts symbol - mu");
    spectrum_cmd->add_option("--symbol", sp_symbol, "symbol JSON file, or '-' for stdin")
        ->required();
    spectrum_cmd->add_option("--grid", sp_grid, "center_re,center_im,radius,rings,per_ring");
    spectrum_cmd->add_option("--format", sp_format)->check(CLI::IsMember({"json", "csv"}));
    spectrum_cmd->add_option("--out", sp_out, "output file (default stdout)");

    std::string tr_symbol, tr_sizes, tr_format = "json", tr_out;
    int tr_size = 0;
    CLI::App* truncate_cmd =
        app.add_subcommand("truncate", "finite sections: matrix dump or singular-value probe");
    truncate_cmd->add_option("--symbol", tr_symbol, "symbol JSON file, or '-' for stdin")
        ->required();
    CLI::Option* tr_size_opt =
        truncate_cmd->add_option("--size", tr_size, "dump the NxN section and its singular values");
    CLI::Option* tr_sizes_opt = truncate_cmd->add_option(
        "--sizes", tr_sizes, "comma-separated sizes; emit the smallest singular values per size");
    tr_size_opt->excludes(tr_sizes_opt);
    truncate_cmd->add_option("--format", tr_format)->check(CLI::IsMember({"json", "csv"}));
    truncate_cmd->add_option("--out", tr_out, "output file (default stdout)");

    std::uint64_t st_seed = 20250825;
    int st_cases = 40;
    bool st_perturb = false;
    CLI::App* selftest_cmd =
        app.add_subcommand("selftest", "exact verification of the core operator identities");
    selftest_cmd->add_option("--seed", st_seed);
    selftest_cmd->add_option("--cases", st_cases)->check(CLI::PositiveNumber);
    selftest_cmd->add_flag("--perturb", st_perturb,
                           "inject a deliberate defect; the run must then fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // --help exits 0; bad usage is an input error
    }

    try {
        if (*analyze_cmd) {
            AnalyzeOptions opt;
            if (!an_truncate.empty()) {
                opt.with_oracle = true;
                opt.probe_sizes = parse_sizes(an_truncate);
            }
            std::string text = read_input(an_symbol);
            AnalysisReport rep;
            if (an_backend == "exact") {
                std::vector<std::string> warn;
                SymbolQ s = parse_symbol_exact(text, &warn);
                rep = analyze(s, opt);
                rep.warnings.insert(rep.warnings.begin(), warn.begin(), warn.end());
            } else {
                rep = analyze(parse_symbol_float(text), opt);
            }
            write_output(an_out,
                         an_format == "json" ? report_to_json(rep) + "\n" : report_to_text(rep));
        } else if (*spectrum_cmd) {
            GridSpec gs = parse_grid(sp_grid);
            SymbolC s = parse_symbol_float(read_input(sp_symbol));
            std::vector<SpectrumPoint> pts = spectrum_probe(s, make_grid(gs));
            write_output(sp_out, sp_format == "json" ? spectrum_to_json(pts) + "\n"
                                                     : spectrum_to_csv(pts));
        } else if (*truncate_cmd) {
            SymbolQ s = parse_symbol_exact(read_input(tr_symbol), nullptr);
            if (tr_size >= 1) {
                TruncatedToeplitz t = truncate(s, tr_size);
                std::vector<double> sig =
                    smallest_singular_values(t, std::min(4, tr_size));
                write_output(tr_out, tr_format == "json" ? truncation_to_json(t, sig) + "\n"
                                                         : truncation_to_csv(t, sig));
            } else if (!tr_sizes.empty()) {
                OracleSummary sum;
                sum.sizes = parse_sizes(tr_sizes);
                for (int n : sum.sizes) {
                    TruncatedToeplitz t = truncate(s, n);
                    sum.sigmas.push_back(smallest_singular_values(t, std::min(4, n)));
                }
                if (tr_format == "csv") {
                    write_output(tr_out, probe_csv(sum));
                } else {
                    nlohmann::ordered_json j;
                    j["sizes"] = sum.sizes;
                    j["singularValues"] = sum.sigmas;
                    write_output(tr_out, j.dump(2) + "\n");
                }
            } else {
                throw ValidationError("truncate needs --size N or --sizes N1,N2,...");
            }
        } else if (*selftest_cmd) {
            SelftestOptions opt;
            opt.seed = st_seed;
            opt.cases = st_cases;
            opt.perturb = st_perturb;
            SelftestResult res = run_selftest(opt);
            std::cout << selftest_to_text(res);
            return res.ok() ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
