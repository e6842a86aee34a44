#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polytoep/oracle.hpp"
#include "polytoep/symbol.hpp"

namespace polytoep {

enum class Verdict { Invertible, NotInvertible, NotFredholm, Inconclusive };

std::string to_string(Verdict v);

// One deduction step: a concrete statement about this operator, the rule tag
// that produced it, and the rule's self-contained mathematical justification.
struct ClaimRecord {
    std::string claim;
    std::string rule;
    std::string anchor;
};

// The justification sentence for a rule tag (empty for unknown tags).
const std::string& rule_anchor(const std::string& rule);

struct ZeroIndicialReport {
    std::complex<double> point;
    std::string point_exact;  // exact coordinates when promoted, else empty
    bool exact = false;
    int multiplicity = 0;
    std::string kind;  // "ordinary" | "regular-singular" | "irregular-singular"
    bool regular = true;
    std::vector<std::string> indicial_coeffs;  // ascending powers of lambda
    std::vector<std::complex<double>> all_roots;
    std::vector<long> nonneg_integer_roots;
    int distinct_nonneg_count = 0;
    std::vector<long> admissible_roots;   // log-free power-series exponents
    std::vector<long> obstructed_roots;   // resonance-blocked exponents
    int admissible_count = -1;            // -1: unknown (irregular point)
};

struct OracleSummary {
    std::vector<int> sizes;
    std::vector<std::vector<double>> sigmas;  // ascending, per size
    std::optional<int> estimated_dim;
    bool ambiguous = false;
    std::string note;
};

struct AnalysisReport {
    std::string backend;  // "exact" | "float"
    int declared_order = 0;
    int order = 0;  // canonical conj-power order n used by the analysis
    std::vector<std::string> tilde_coeffs;

    std::optional<int> winding;
    std::optional<int> fredholm_index;
    bool boundary_zero_flag = false;
    // "none" | "resolved-exact" | "on-circle" | "ambiguous"
    std::string boundary_status = "none";
    std::vector<std::pair<std::complex<double>, int>> tilde_zeros_in_disc;

    int kernel_dim_lower = 0;
    int kernel_dim_upper = 0;
    std::optional<int> kernel_dim_exact;
    std::optional<int> cokernel_dim;
    std::optional<bool> surjective;
    std::optional<bool> injective;
    Verdict verdict = Verdict::Inconclusive;

    std::vector<ZeroIndicialReport> per_zero_indicial;
    std::vector<ClaimRecord> provenance;
    std::vector<std::string> warnings;
    std::optional<OracleSummary> oracle;

    void add_claim(std::string statement, std::string rule) {
        provenance.push_back({std::move(statement), rule, rule_anchor(rule)});
    }
    void warn(std::string w) { warnings.push_back(std::move(w)); }
};

struct SpectrumPoint {
    std::complex<double> mu;
    std::string verdict;  // verdict name, or "Error" with detail
    std::string detail;
};

// --- JSON / text / CSV serialization (src/report.cpp) ---

// Shortest round-trip decimal form of a double (used by text/CSV emitters).
std::string format_double(double v);
std::string format_complex(std::complex<double> v);

// Symbol input: {"n": <int>, "coeffs": [[c, ...], ...]} where coeffs[i][k]
// multiplies conj(z)^i z^k and each c is a number, a decimal/rational string,
// an [re, im] pair, or {"re":..., "im":...}.
SymbolQ parse_symbol_exact(const std::string& json_text, std::vector<std::string>* warnings);
SymbolC parse_symbol_float(const std::string& json_text);

std::string symbol_to_json(const SymbolQ& s);
std::string symbol_to_json(const SymbolC& s);

std::string report_to_json(const AnalysisReport& r, int indent = 2);
std::string report_to_text(const AnalysisReport& r);

std::string probe_csv(const OracleSummary& probe);
std::string spectrum_to_csv(const std::vector<SpectrumPoint>& pts);
std::string spectrum_to_json(const std::vector<SpectrumPoint>& pts, int indent = 2);

std::string truncation_to_json(const TruncatedToeplitz& t, const std::vector<double>& sigmas,
                               int indent = 2);
std::string truncation_to_csv(const TruncatedToeplitz& t, const std::vector<double>& sigmas);

}  // namespace polytoep
