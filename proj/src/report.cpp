#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "json.hpp"
#include "polytoep/report.hpp"

namespace polytoep {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    if (v == 0.0) return "0";  // normalize -0
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_complex(std::complex<double> v) {
    if (v.imag() == 0.0) return format_double(v.real());
    std::string im = format_double(std::abs(v.imag())) + "i";
    std::string sign = v.imag() < 0 ? "-" : "+";
    if (v.real() == 0.0) return (v.imag() < 0 ? "-" : "") + im;
    return format_double(v.real()) + sign + im;
}

namespace {

Rational rational_from_number(const ordered_json& j) {
    if (j.is_number_integer()) return Rational(BigInt(j.get<long long>()));
    double d = j.get<double>();
    if (!std::isfinite(d)) throw ParseError("non-finite number in symbol JSON");
    return Rational(d);  // binary64 values convert exactly
}

Rational rational_from_entry(const ordered_json& j, bool* inexact_decimal) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number()) {
        if (!j.is_number_integer() && inexact_decimal) *inexact_decimal = true;
        return rational_from_number(j);
    }
    throw ParseError("expected a number or a rational string");
}

GaussRational coeff_from_json(const ordered_json& j, bool* inexact_decimal) {
    if (j.is_string() || j.is_number())
        return GaussRational{rational_from_entry(j, inexact_decimal), Rational(0)};
    if (j.is_array()) {
        if (j.size() != 2) throw ParseError("complex coefficient arrays must be [re, im]");
        return GaussRational{rational_from_entry(j[0], inexact_decimal),
                             rational_from_entry(j[1], inexact_decimal)};
    }
    if (j.is_object()) {
        GaussRational g{Rational(0), Rational(0)};
        if (j.contains("re")) g.re = rational_from_entry(j.at("re"), inexact_decimal);
        if (j.contains("im")) g.im = rational_from_entry(j.at("im"), inexact_decimal);
        return g;
    }
    throw ParseError("unsupported coefficient encoding in symbol JSON");
}

ordered_json cplx(std::complex<double> v) { return ordered_json::array({v.real(), v.imag()}); }

}  // namespace

SymbolQ parse_symbol_exact(const std::string& json_text, std::vector<std::string>* warnings) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("symbol JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("symbol JSON must be an object");
    if (!j.contains("n") && !j.contains("order"))
        throw ParseError("symbol JSON needs an \"n\" (conj-power order) field");
    long n = j.contains("n") ? j.at("n").get<long>() : j.at("order").get<long>();
    if (n < 0 || n > 64) throw ParseError("symbol order out of range [0, 64]");
    if (!j.contains("coeffs") || !j.at("coeffs").is_array())
        throw ParseError("symbol JSON needs a \"coeffs\" array");
    const auto& rows = j.at("coeffs");
    if (rows.size() != static_cast<std::size_t>(n) + 1)
        throw ParseError("coeffs must list exactly n+1 polynomials, got " +
                         std::to_string(rows.size()));
    bool inexact = false;
    std::vector<PolyQ> coeffs;
    coeffs.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (!row.is_array())
            throw ParseError("coeffs[" + std::to_string(i) + "] must be an array of coefficients");
        std::vector<GaussRational> c;
        c.reserve(row.size());
        for (std::size_t k = 0; k < row.size(); ++k) {
            try {
                c.push_back(coeff_from_json(row[k], &inexact));
            } catch (const ParseError& e) {
                throw ParseError("coeffs[" + std::to_string(i) + "][" + std::to_string(k) +
                                 "]: " + e.what());
            }
        }
        coeffs.emplace_back(std::move(c));
    }
    if (inexact && warnings)
        warnings->push_back(
            "a coefficient was given as a non-integer JSON number; it was converted from its "
            "exact binary value — pass decimal strings for exact decimal semantics");
    return SymbolQ(static_cast<int>(n), std::move(coeffs));
}

SymbolC parse_symbol_float(const std::string& json_text) {
    std::vector<std::string> sink;
    return to_float(parse_symbol_exact(json_text, &sink));
}

std::string symbol_to_json(const SymbolQ& s) {
    ordered_json j;
    j["n"] = s.order;
    ordered_json rows = ordered_json::array();
    for (const PolyQ& p : s.coeffs) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k <= p.degree(); ++k)
            row.push_back(ordered_json::array(
                {to_string(p.coeff(k).re), to_string(p.coeff(k).im)}));
        rows.push_back(std::move(row));
    }
    j["coeffs"] = std::move(rows);
    return j.dump(2);
}

std::string symbol_to_json(const SymbolC& s) {
    ordered_json j;
    j["n"] = s.order;
    ordered_json rows = ordered_json::array();
    for (const PolyC& p : s.coeffs) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k <= p.degree(); ++k) row.push_back(cplx(p.coeff(k)));
        rows.push_back(std::move(row));
    }
    j["coeffs"] = std::move(rows);
    return j.dump(2);
}

namespace {

ordered_json oracle_json(const OracleSummary& o) {
    ordered_json j;
    j["sizes"] = o.sizes;
    j["singularValues"] = o.sigmas;
    if (o.estimated_dim)
        j["estimatedDim"] = *o.estimated_dim;
    else
        j["estimatedDim"] = nullptr;
    j["ambiguous"] = o.ambiguous;
    if (!o.note.empty()) j["note"] = o.note;
    return j;
}

}  // namespace

std::string report_to_json(const AnalysisReport& r, int indent) {
    ordered_json j;
    j["schema"] = "polytoep-report/1";
    j["backend"] = r.backend;
    j["declaredOrder"] = r.declared_order;
    j["order"] = r.order;
    j["tilde"] = r.tilde_coeffs;

    ordered_json idx;
    idx["winding"] = r.winding ? ordered_json(*r.winding) : ordered_json(nullptr);
    idx["fredholmIndex"] = r.fredholm_index ? ordered_json(*r.fredholm_index) : ordered_json(nullptr);
    idx["boundaryZeroFlag"] = r.boundary_zero_flag;
    idx["boundaryStatus"] = r.boundary_status;
    ordered_json zeros = ordered_json::array();
    for (const auto& [root, mult] : r.tilde_zeros_in_disc) {
        ordered_json z;
        z["root"] = cplx(root);
        z["multiplicity"] = mult;
        zeros.push_back(std::move(z));
    }
    idx["tildeZerosInDisc"] = std::move(zeros);
    j["indexData"] = std::move(idx);

    j["kernelDimLower"] = r.kernel_dim_lower;
    j["kernelDimUpper"] = r.kernel_dim_upper;
    j["kernelDimExact"] = r.kernel_dim_exact ? ordered_json(*r.kernel_dim_exact) : ordered_json(nullptr);
    j["cokernelDim"] = r.cokernel_dim ? ordered_json(*r.cokernel_dim) : ordered_json(nullptr);
    j["surjective"] = r.surjective ? ordered_json(*r.surjective) : ordered_json(nullptr);
    j["injective"] = r.injective ? ordered_json(*r.injective) : ordered_json(nullptr);
    j["verdict"] = to_string(r.verdict);

    ordered_json pz = ordered_json::array();
    for (const ZeroIndicialReport& z : r.per_zero_indicial) {
        ordered_json e;
        e["point"] = cplx(z.point);
        if (!z.point_exact.empty()) e["pointExact"] = z.point_exact;
        e["exact"] = z.exact;
        e["multiplicity"] = z.multiplicity;
        e["kind"] = z.kind;
        e["regular"] = z.regular;
        e["indicialPoly"] = z.indicial_coeffs;
        ordered_json ar = ordered_json::array();
        for (const auto& root : z.all_roots) ar.push_back(cplx(root));
        e["allRoots"] = std::move(ar);
        e["nonnegIntegerRoots"] = z.nonneg_integer_roots;
        e["distinctNonnegCount"] = z.distinct_nonneg_count;
        e["admissibleRoots"] = z.admissible_roots;
        e["obstructedRoots"] = z.obstructed_roots;
        e["admissibleCount"] =
            z.admissible_count >= 0 ? ordered_json(z.admissible_count) : ordered_json(nullptr);
        pz.push_back(std::move(e));
    }
    j["perZeroIndicial"] = std::move(pz);

    ordered_json prov = ordered_json::array();
    for (const ClaimRecord& c : r.provenance) {
        ordered_json e;
        e["claim"] = c.claim;
        e["rule"] = c.rule;
        e["anchor"] = c.anchor;
        prov.push_back(std::move(e));
    }
    j["provenance"] = std::move(prov);
    j["warnings"] = r.warnings;
    j["oracle"] = r.oracle ? oracle_json(*r.oracle) : ordered_json(nullptr);
    return j.dump(indent);
}

std::string report_to_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "verdict: " << to_string(r.verdict) << "\n";
    os << "backend: " << r.backend << "\n";
    os << "order:   " << r.order;
    if (r.declared_order != r.order) os << " (declared " << r.declared_order << ")";
    os << "\n";
    os << "tilde coefficients (ascending): [";
    for (std::size_t i = 0; i < r.tilde_coeffs.size(); ++i)
        os << (i ? ", " : "") << r.tilde_coeffs[i];
    os << "]\n";
    if (r.winding)
        os << "winding: " << *r.winding << "   index: " << *r.fredholm_index << "\n";
    else
        os << "winding: undecided (" << r.boundary_status << ")\n";
    if (!r.tilde_zeros_in_disc.empty()) {
        os << "interior zeros:";
        for (const auto& [root, mult] : r.tilde_zeros_in_disc)
            os << " " << format_complex(root) << " (x" << mult << ")";
        os << "\n";
    }
    os << "kernel dim: ";
    if (r.kernel_dim_exact)
        os << *r.kernel_dim_exact << " (exact)";
    else
        os << "in [" << r.kernel_dim_lower << ", " << r.kernel_dim_upper << "]";
    if (r.cokernel_dim) os << "   cokernel dim: " << *r.cokernel_dim;
    os << "\n";
    if (r.surjective) os << "surjective: " << (*r.surjective ? "yes" : "no") << "\n";
    if (r.injective) os << "injective:  " << (*r.injective ? "yes" : "no") << "\n";
    for (const ZeroIndicialReport& z : r.per_zero_indicial) {
        os << "singular point " << format_complex(z.point);
        if (!z.point_exact.empty()) os << " (= " << z.point_exact << ")";
        os << ": " << z.kind << ", multiplicity " << z.multiplicity;
        if (z.regular) {
            os << ", indicial [";
            for (std::size_t i = 0; i < z.indicial_coeffs.size(); ++i)
                os << (i ? ", " : "") << z.indicial_coeffs[i];
            os << "], nonneg integer exponents {";
            for (std::size_t i = 0; i < z.nonneg_integer_roots.size(); ++i)
                os << (i ? ", " : "") << z.nonneg_integer_roots[i];
            os << "}, admissible {";
            for (std::size_t i = 0; i < z.admissible_roots.size(); ++i)
                os << (i ? ", " : "") << z.admissible_roots[i];
            os << "}";
        }
        os << "\n";
    }
    if (r.oracle) {
        os << "oracle probe:";
        if (r.oracle->estimated_dim)
            os << " estimated decaying singular values: " << *r.oracle->estimated_dim;
        if (r.oracle->ambiguous) os << " (ambiguous: " << r.oracle->note << ")";
        os << "\n";
        for (std::size_t i = 0; i < r.oracle->sizes.size(); ++i) {
            os << "  N=" << r.oracle->sizes[i] << ":";
            for (double s : r.oracle->sigmas[i]) os << " " << format_double(s);
            os << "\n";
        }
    }
    os << "claims:\n";
    for (const ClaimRecord& c : r.provenance)
        os << "  - [" << c.rule << "] " << c.claim << "\n";
    for (const std::string& w : r.warnings) os << "warning: " << w << "\n";
    return os.str();
}

std::string probe_csv(const OracleSummary& probe) {
    std::ostringstream os;
    os << "N,sigma_1,sigma_2,sigma_3,sigma_4\n";
    for (std::size_t i = 0; i < probe.sizes.size(); ++i) {
        os << probe.sizes[i];
        const auto& s = probe.sigmas[i];
        for (std::size_t k = 0; k < 4; ++k) {
            os << ",";
            if (k < s.size()) os << format_double(s[k]);
        }
        os << "\n";
    }
    return os.str();
}

std::string spectrum_to_csv(const std::vector<SpectrumPoint>& pts) {
    std::ostringstream os;
    os << "re,im,verdict\n";
    std::map<std::string, int> counts;
    for (const SpectrumPoint& p : pts) {
        os << format_double(p.mu.real()) << "," << format_double(p.mu.imag()) << "," << p.verdict
           << "\n";
        ++counts[p.verdict];
    }
    os << "# summary:";
    for (const auto& [k, v] : counts) os << " " << k << "=" << v;
    os << "\n";
    return os.str();
}

std::string spectrum_to_json(const std::vector<SpectrumPoint>& pts, int indent) {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    std::map<std::string, int> counts;
    for (const SpectrumPoint& p : pts) {
        ordered_json e;
        e["mu"] = cplx(p.mu);
        e["verdict"] = p.verdict;
        if (!p.detail.empty()) e["detail"] = p.detail;
        arr.push_back(std::move(e));
        ++counts[p.verdict];
    }
    j["points"] = std::move(arr);
    ordered_json c;
    for (const auto& [k, v] : counts) c[k] = v;
    j["counts"] = std::move(c);
    return j.dump(indent);
}

std::string truncation_to_json(const TruncatedToeplitz& t, const std::vector<double>& sigmas,
                               int indent) {
    ordered_json j;
    j["N"] = t.size;
    j["band"] = t.band;
    ordered_json rows = ordered_json::array();
    for (int q = 0; q < t.size; ++q) {
        ordered_json row = ordered_json::array();
        for (int p = 0; p < t.size; ++p) row.push_back(cplx(t.mat(q, p)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    j["singularValues"] = sigmas;
    return j.dump(indent);
}

std::string truncation_to_csv(const TruncatedToeplitz& t, const std::vector<double>& sigmas) {
    std::ostringstream os;
    for (int q = 0; q < t.size; ++q) {
        for (int p = 0; p < t.size; ++p) os << (p ? "," : "") << format_complex(t.mat(q, p));
        os << "\n";
    }
    os << "# singular values:";
    for (double s : sigmas) os << " " << format_double(s);
    os << "\n";
    return os.str();
}

}  // namespace polytoep
