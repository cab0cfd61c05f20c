// Copyright 2026 The sqkc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqkc/codes.hpp"
#include "sqkc/complexity.hpp"
#include "sqkc/error.hpp"
#include "sqkc/experiments.hpp"
#include "sqkc/formats.hpp"
#include "sqkc/linalg.hpp"
#include "sqkc/numeric.hpp"
#include "sqkc/qcode.hpp"

namespace sqkc::cli {

namespace {

using nlohmann::json;

// Reports carry 9 significant digits.
double sig9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    const double v = std::strtod(buf, nullptr);
    return v == 0.0 ? 0.0 : v;
}

std::string sig9_text(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", sig9(x));
    return buf;
}

json numbers(const std::vector<double> &xs) {
    json out = json::array();
    for (double x : xs) {
        out.push_back(sig9(x));
    }
    return out;
}

std::string sha256_hex(const std::string &data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    static const char *hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::IOError: return 3;
        case ErrorKind::FormatError: return 4;
        default: return 1;
    }
}

struct Context {
    explicit Context(const CommandPlan &p) : plan(p) {}

    const CommandPlan &plan;
    json inputs = json::object();
    json result = json::object();
    json checks = json::object();
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    std::optional<std::string> text_override;

    std::string read(const std::string &path) {
        std::string text = read_text_file(path);
        inputs[path] = "sha256:" + sha256_hex(text);
        return text;
    }
    QString load_state(const std::string &path) {
        return parse_qstring(read(path));
    }
    Ensemble load_ensemble_file(const std::string &path) {
        return parse_ensemble(read(path), std::filesystem::path(path).parent_path());
    }
    DensityOperator load_density(const std::string &path) {
        return density_from_ensemble(load_ensemble_file(path));
    }
    ProgramTable load_table(const std::string &path) {
        return parse_program_table(read(path), std::filesystem::path(path).parent_path());
    }

    // "identity:K", "sd-identity:K", "sd:PATH" or PATH.
    DescriberMachine load_machine(const std::string &spec) {
        auto number_after = [&](std::size_t prefix_len) {
            const std::string tail = spec.substr(prefix_len);
            std::size_t pos = 0;
            std::size_t value = 0;
            try {
                value = std::stoul(tail, &pos);
            } catch (const std::exception &) {
                pos = 0;
            }
            if (pos == 0 || pos != tail.size()) {
                throw Error(ErrorKind::FormatError, "machine spec '" + spec + "' needs a length");
            }
            return value;
        };
        if (spec.rfind("identity:", 0) == 0) {
            return identity_machine(number_after(9));
        }
        if (spec.rfind("sd-identity:", 0) == 0) {
            return identity_machine(number_after(12)).self_delimited();
        }
        if (spec.rfind("sd:", 0) == 0) {
            auto table = load_table(spec.substr(3));
            return DescriberMachine::from_table(std::move(table.programs), table.prefix_free).self_delimited();
        }
        auto table = load_table(spec);
        return DescriberMachine::from_table(std::move(table.programs), table.prefix_free);
    }
    MachineCatalog load_catalog(const std::vector<std::string> &specs) {
        MachineCatalog cat;
        for (const auto &s : specs) {
            cat.add(load_machine(s));
        }
        return cat;
    }
};

void put_estimate(json &out, const ComplexityEstimate &est) {
    out["value"] = sig9(est.value);
    json programs = json::array();
    std::vector<double> weights;
    double total = 0.0;
    for (const auto &pw : est.decomposition) {
        programs.push_back(pw.program.token());
        weights.push_back(pw.weight);
        total += pw.weight;
    }
    out["programs"] = programs;
    out["weights"] = numbers(weights);
    out["weight_total"] = sig9(total);
}

bool weights_sum_to_one(const ComplexityEstimate &est) {
    double total = 0.0;
    for (const auto &pw : est.decomposition) {
        total += pw.weight;
    }
    return std::abs(total - 1.0) <= 1e-8;
}

void cmd_avglen(Context &c) {
    const QString s = c.load_state(*c.plan.state);
    c.result["average_length"] = sig9(average_length(s));
    c.checks["base_ge_average"] = static_cast<double>(base_length(s)) >= average_length(s) - 1e-12;
}

void cmd_baselen(Context &c) {
    const QString s = c.load_state(*c.plan.state);
    c.result["base_length"] = base_length(s);
    c.checks["base_ge_average"] = static_cast<double>(base_length(s)) >= average_length(s) - 1e-12;
}

void cmd_pair(Context &c) {
    if (c.plan.decode) {
        const auto [x, y] = pair_decode(BitString::from_token(*c.plan.decode));
        c.result["x"] = x.token();
        c.result["y"] = y.token();
        c.checks["roundtrip"] = pair_encode(x, y) == BitString::from_token(*c.plan.decode);
        return;
    }
    if (!c.plan.x || !c.plan.y) {
        throw Error(ErrorKind::FormatError, "pair needs --x and --y, or --decode");
    }
    const BitString x = BitString::from_token(*c.plan.x);
    const BitString y = BitString::from_token(*c.plan.y);
    const BitString z = pair_encode(x, y);
    c.result["encoded"] = z.token();
    c.result["length"] = z.size();
    const auto back = pair_decode(z);
    c.checks["roundtrip"] = back.first == x && back.second == y;
}

void cmd_selfdelim(Context &c) {
    const QString s = c.load_state(*c.plan.state);
    const QString out = self_delimit(s);
    c.result["state"] = format_inline_qstring(out);
    c.result["average_length_in"] = sig9(average_length(s));
    c.result["average_length_out"] = sig9(average_length(out));
    c.checks["length_is_2l_plus_1"] = std::abs(average_length(out) - (2.0 * average_length(s) + 1.0)) <= 1e-9;
    c.text_override = format_qstring(out);
}

void cmd_entropy(Context &c) {
    const DensityOperator rho = c.load_density(*c.plan.rho);
    const auto spec = eig_hermitian(rho);
    const double s = spectrum_entropy(spec.eigenvalues);
    c.result["von_neumann_entropy"] = sig9(s);
    c.result["dimension"] = rho.dimension();
    c.result["eigenvalues"] = numbers(spec.eigenvalues);
    c.checks["entropy_in_range"] = s >= 0.0 && s <= std::log2(static_cast<double>(rho.dimension())) + 1e-9;
}

void cmd_shannon(Context &c) {
    const double h = shannon_entropy(c.plan.probabilities);
    c.result["shannon_entropy"] = sig9(h);
    c.checks["entropy_in_range"] =
        h >= 0.0 && h <= std::log2(static_cast<double>(c.plan.probabilities.size())) + 1e-9;
}

void cmd_code(Context &c) {
    const PrefixCode code = shannon_code(c.plan.probabilities);
    const double h = shannon_entropy(c.plan.probabilities);
    const double e = expected_length(code, c.plan.probabilities);
    const auto lengths = code.lengths();
    json words = json::array();
    for (const auto &w : code.codewords()) {
        words.push_back(w.token());
    }
    c.result["codewords"] = words;
    c.result["lengths"] = lengths;
    c.result["expected_length"] = sig9(e);
    c.result["shannon_entropy"] = sig9(h);
    c.result["kraft_sum"] = sig9(kraft_sum(lengths));
    c.checks["prefix_free"] = is_prefix_free(code.codewords());
    c.checks["kraft_le_one"] = kraft_sum(lengths) <= 1.0 + 1e-12;
    c.checks["entropy_sandwich"] = h <= e + 1e-9 && e <= h + 1.0 + 1e-9;
    c.text_override = format_code_table(code);
}

void cmd_kraft(Context &c) {
    if (c.plan.lengths.empty()) {
        throw Error(ErrorKind::FormatError, "kraft needs at least one length");
    }
    const double k = kraft_sum(c.plan.lengths);
    c.result["kraft_sum"] = sig9(k);
    c.result["feasible"] = k <= 1.0;
}

void cmd_sw(Context &c) {
    const DensityOperator rho = c.load_density(*c.plan.rho);
    const SwCode sw = sw_lossless_code(rho);
    const CompressionReport report = sw_report(rho);
    json words = json::array();
    for (const auto &w : sw.code.words().codewords()) {
        words.push_back(w.token());
    }
    c.result["eigenvalues"] = numbers(sw.eigenvalues);
    c.result["codewords"] = words;
    c.result["lengths"] = sw.code.words().lengths();
    c.result["expected_avg_length"] = sig9(report.expected_avg_length);
    c.result["entropy"] = sig9(report.entropy);
    c.result["kraft"] = sig9(report.kraft);
    c.checks["sandwich_lower"] = report.entropy <= report.expected_avg_length + 1e-7;
    c.checks["sandwich_upper"] = report.expected_avg_length <= report.entropy + 1.0 + 1e-9;
    c.checks["kraft_le_one"] = report.kraft <= 1.0 + 1e-9;
}

void cmd_encode(Context &c) {
    ProgramTable table = c.load_table(*c.plan.code);
    std::vector<QString> basis;
    std::vector<BitString> words;
    for (auto &p : table.programs) {
        words.push_back(p.program);
        basis.push_back(std::move(p.output));
    }
    const CondensableCode code(std::move(basis), PrefixCode(std::move(words)));
    const QString s = c.load_state(*c.plan.state);
    const QString out = encode_qstring(code, s);
    c.result["state"] = format_inline_qstring(out);
    c.result["average_length"] = sig9(average_length(out));
    c.checks["norm_preserved"] = std::abs(std::real(inner_product(out, out)) - 1.0) <= 1e-9;
    c.text_override = format_qstring(out);
}

void cmd_lossy(Context &c) {
    const DensityOperator rho = c.load_density(*c.plan.rho);
    std::vector<LossyReport> reports;
    for (std::size_t n : c.plan.n_values) {
        reports.push_back(lossy_typical_projection(rho, n, c.plan.delta));
    }
    bool in_unit = true;
    bool nondecreasing = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        in_unit = in_unit && reports[i].success_probability >= 0.0 && reports[i].success_probability <= 1.0;
        if (i > 0) {
            nondecreasing = nondecreasing && reports[i].success_probability >= reports[i - 1].success_probability;
        }
    }
    c.result["delta"] = sig9(c.plan.delta);
    c.result["entropy"] = sig9(reports.front().entropy);
    c.checks["success_in_unit_interval"] = in_unit;
    c.csv_header = {"n", "budget", "success", "kept_dimension", "budget_covers_input"};
    for (const auto &r : reports) {
        c.csv_rows.push_back({std::to_string(r.n), std::to_string(r.budget), sig9_text(r.success_probability),
                              sig9_text(r.kept_dimension), r.budget_covers_input ? "true" : "false"});
    }
    if (reports.size() == 1) {
        const auto &r = reports.front();
        c.result["n"] = r.n;
        c.result["budget"] = r.budget;
        c.result["success"] = sig9(r.success_probability);
        c.result["kept_dimension"] = sig9(r.kept_dimension);
        c.result["budget_covers_input"] = r.budget_covers_input;
        json kept = json::array();
        for (const auto &tc : r.classes) {
            if (tc.kept) {
                kept.push_back(tc.counts);
            }
        }
        c.result["kept_type_classes"] = kept;
        return;
    }
    json n = json::array(), budget = json::array(), success = json::array(), dim = json::array(),
         covers = json::array();
    for (const auto &r : reports) {
        n.push_back(r.n);
        budget.push_back(r.budget);
        success.push_back(sig9(r.success_probability));
        dim.push_back(sig9(r.kept_dimension));
        covers.push_back(r.budget_covers_input);
    }
    c.result["n"] = n;
    c.result["budget"] = budget;
    c.result["success"] = success;
    c.result["kept_dimension"] = dim;
    c.result["budget_covers_input"] = covers;
    c.checks["success_nondecreasing"] = nondecreasing;
}

void cmd_complexity(Context &c) {
    if (c.plan.machines.size() != 1) {
        throw Error(ErrorKind::FormatError, "complexity takes exactly one --machine");
    }
    const DescriberMachine m = c.load_machine(c.plan.machines.front());
    const QString psi = c.load_state(*c.plan.state);
    const ComplexityEstimate est = machine_complexity(m, psi);
    const std::size_t base = base_length_complexity(m, psi);
    put_estimate(c.result, est);
    c.result["base_length"] = base;
    c.checks["weights_sum_to_one"] = weights_sum_to_one(est);
    c.checks["base_ge_average"] = static_cast<double>(base) >= est.value - 1e-9;
}

void cmd_universal(Context &c) {
    const MachineCatalog cat = c.load_catalog(c.plan.machines);
    const QString psi = c.load_state(*c.plan.state);
    const ComplexityEstimate est = universal_complexity(cat, psi);
    put_estimate(c.result, est);
    c.result["machine_index"] = est.machine_index;
    c.result["index_cost"] = sig9(est.index_cost);
    c.result["description_length"] = sig9(est.description_length);
    c.checks["weights_sum_to_one"] = weights_sum_to_one(est);
}

void cmd_kq(Context &c) {
    if (c.plan.machines.size() != 1) {
        throw Error(ErrorKind::FormatError, "kq takes exactly one --machine program table");
    }
    const DescriberMachine m = c.load_machine(c.plan.machines.front());
    if (m.is_identity()) {
        throw Error(ErrorKind::FormatError, "kq needs an explicit program table");
    }
    const QString psi = c.load_state(*c.plan.state);
    c.result["value"] = sig9(fidelity_penalized_complexity(m.programs(), psi));
}

void cmd_incompress(Context &c) {
    std::vector<QString> states;
    for (const auto &p : c.plan.states) {
        states.push_back(c.load_state(p));
    }
    const MachineCatalog cat = c.load_catalog(c.plan.machines);
    const auto r = incompressibility_report(states, cat);
    std::vector<double> values, lengths;
    for (const auto &est : r.per_state) {
        values.push_back(est.value);
        lengths.push_back(est.description_length);
    }
    c.result["entropy"] = sig9(r.entropy);
    c.result["plain_bound"] = sig9(r.plain_bound);
    c.result["prefix_bound"] = sig9(r.prefix_bound);
    c.result["prefix_catalog"] = r.prefix_catalog;
    c.result["applicable_bound"] = sig9(r.applicable_bound);
    c.result["complexities"] = numbers(values);
    c.result["description_lengths"] = numbers(lengths);
    c.result["max_complexity"] = sig9(r.max_complexity);
    c.result["max_description_length"] = sig9(r.max_description_length);
    c.checks["bound_verified"] = r.verified;
}

void cmd_multicopy(Context &c) {
    std::vector<MultiCopyReport> reports;
    for (double a : c.plan.alpha2_values) {
        for (std::size_t n : c.plan.n_values) {
            reports.push_back(multicopy_report(a, n));
        }
    }
    bool kraft_ok = true, normalized_le_raw = true, weights_ok = true;
    for (const auto &r : reports) {
        double total = 0.0;
        for (double w : r.weights) {
            total += w;
        }
        kraft_ok = kraft_ok && r.raw_kraft <= 1.0 + 1e-12;
        normalized_le_raw = normalized_le_raw && r.expected_normalized <= r.expected_raw + 1e-12;
        weights_ok = weights_ok && std::abs(total - 1.0) <= 1e-9;
    }
    c.checks["raw_kraft_feasible"] = kraft_ok;
    c.checks["normalized_le_raw"] = normalized_le_raw;
    c.checks["weights_sum_to_one"] = weights_ok;
    c.csv_header = {"alpha2", "n", "z_norm", "expected_raw", "expected_normalized", "raw_kraft", "naive"};
    for (const auto &r : reports) {
        c.csv_rows.push_back({sig9_text(r.alpha2), std::to_string(r.n), sig9_text(r.z_norm), sig9_text(r.expected_raw),
                              sig9_text(r.expected_normalized), sig9_text(r.raw_kraft), std::to_string(r.naive)});
    }
    if (reports.size() == 1) {
        const auto &r = reports.front();
        c.result["alpha2"] = sig9(r.alpha2);
        c.result["n"] = r.n;
        c.result["z_norm"] = sig9(r.z_norm);
        c.result["weights"] = numbers(r.weights);
        c.result["raw_lengths"] = r.raw_lengths;
        c.result["normalized_lengths"] = r.normalized_lengths;
        c.result["expected_raw"] = sig9(r.expected_raw);
        c.result["expected_normalized"] = sig9(r.expected_normalized);
        c.result["raw_kraft"] = sig9(r.raw_kraft);
        c.result["normalized_entropy"] = sig9(r.normalized_entropy);
        c.result["naive"] = r.naive;
        return;
    }
    json alpha2 = json::array(), n = json::array(), z = json::array(), raw = json::array(), norm = json::array(),
         kraft = json::array(), naive = json::array();
    for (const auto &r : reports) {
        alpha2.push_back(sig9(r.alpha2));
        n.push_back(r.n);
        z.push_back(sig9(r.z_norm));
        raw.push_back(sig9(r.expected_raw));
        norm.push_back(sig9(r.expected_normalized));
        kraft.push_back(sig9(r.raw_kraft));
        naive.push_back(r.naive);
    }
    c.result["alpha2"] = alpha2;
    c.result["n"] = n;
    c.result["z_norm"] = z;
    c.result["expected_raw"] = raw;
    c.result["expected_normalized"] = norm;
    c.result["raw_kraft"] = kraft;
    c.result["naive"] = naive;
}

void cmd_nonadd(Context &c) {
    const MachineCatalog cat = c.load_catalog(c.plan.machines);
    const auto r = nonadditivity_search(c.plan.m_block, cat, c.plan.k);
    c.result["m_block"] = r.m_block;
    c.result["k"] = sig9(r.k);
    c.result["n"] = r.n;
    c.result["qk_n"] = sig9(r.qk_n);
    c.result["qk_phi_plus"] = sig9(r.qk_phi_plus);
    c.result["qk_phi_minus"] = sig9(r.qk_phi_minus);
    c.result["phi_mean"] = sig9(r.phi_mean);
    c.result["average_length_phi"] = sig9(r.avg_length_phi);
    c.result["gap_greater"] = sig9(r.gap_greater);
    c.result["greater_found"] = r.greater_found;
    c.result["qk_zero"] = sig9(r.qk_zero);
    c.result["gap_less"] = sig9(r.gap_less);
    c.result["less_found"] = r.less_found;
    if (c.plan.scan_less) {
        const auto s = scan_less_witness(cat, c.plan.k, *c.plan.scan_less);
        c.result["less_scan_n"] = s.n;
        c.result["less_scan_gap"] = sig9(s.gap_less);
        c.result["less_scan_found"] = s.less_found;
    }
    c.checks["pigeonhole_block_bound"] = r.qk_n >= static_cast<double>(r.m_block) - 1e-9;
}

void cmd_sandwich(Context &c) {
    const Ensemble e = c.load_ensemble_file(*c.plan.ens);
    MachineCatalog cat;
    cat.add(DescriberMachine::from_code(sw_lossless_code(density_from_ensemble(e)).code));
    for (const auto &spec : c.plan.machines) {
        cat.add(c.load_machine(spec));
    }
    const auto r = entropy_sandwich_report(e, cat, std::size_t{1});
    std::vector<double> values;
    for (const auto &est : r.per_member) {
        values.push_back(est.value);
    }
    c.result["entropy"] = sig9(r.entropy);
    c.result["expected_complexity"] = sig9(r.expected_complexity);
    c.result["overhead"] = sig9(r.overhead);
    c.result["sw_machine_index"] = 1;
    c.result["upper_bound"] = sig9(*r.upper_bound);
    c.result["complexities"] = numbers(values);
    c.checks["lower_bound_holds"] = r.lower_holds;
    c.checks["upper_bound_holds"] = *r.upper_holds;
}

DensityOperator on_product_basis(const DensityOperator &rho, const std::vector<std::size_t> &dims) {
    std::vector<BitString> basis = {BitString()};
    for (std::size_t d : dims) {
        std::vector<BitString> next;
        for (const auto &prefix : basis) {
            for (const auto &label : index_basis(d)) {
                next.push_back(prefix + label);
            }
        }
        basis = std::move(next);
    }
    if (basis.size() > kMaxDimension) {
        throw Error(ErrorKind::DimensionCapExceeded, "joint dimension exceeds 4096");
    }
    return expand_to_basis(rho, basis);
}

void cmd_ineq(Context &c) {
    const InequalitySpec spec = parse_inequality(c.plan.inequality, c.plan.parties);
    InequalityResult r;
    if (c.plan.mode == "joint") {
        if (!c.plan.rho) {
            throw Error(ErrorKind::FormatError, "joint mode needs --rho");
        }
        r = inequality_check(spec, on_product_basis(c.load_density(*c.plan.rho), c.plan.dims), c.plan.dims);
    } else {
        std::vector<DensityOperator> factors;
        for (const auto &f : c.plan.factors) {
            factors.push_back(c.load_density(f));
        }
        r = inequality_check_product(spec, factors);
        if (r.joint_value) {
            c.result["joint_value"] = sig9(*r.joint_value);
        }
        c.checks["paths_agree"] = r.paths_agree;
    }
    c.result["mode"] = c.plan.mode;
    c.result["value"] = sig9(r.value);
    c.result["term_entropies"] = numbers(r.term_entropies);
    c.checks["inequality_holds"] = r.value >= -1e-7;
}

void cmd_randrho(Context &c) {
    const DensityOperator rho = random_density(c.plan.dim, c.plan.seed);
    const auto spec = eig_hermitian(rho);
    std::vector<double> re, im;
    for (const auto &v : rho.matrix().data()) {
        re.push_back(v.real());
        im.push_back(v.imag());
    }
    c.result["dimension"] = rho.dimension();
    c.result["trace"] = sig9(rho.matrix().trace().real());
    c.result["eigenvalues"] = numbers(spec.eigenvalues);
    c.result["entropy"] = sig9(spectrum_entropy(spec.eigenvalues));
    c.result["matrix_re"] = numbers(re);
    c.result["matrix_im"] = numbers(im);
    c.checks["trace_one"] = std::abs(rho.matrix().trace().real() - 1.0) <= 1e-12;
    c.checks["eigenvalues_nonnegative"] = spec.eigenvalues.back() >= -1e-9;
    if (c.plan.ens_out) {
        std::vector<EnsembleEntry> entries;
        double total = 0.0;
        for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k) {
            if (spec.eigenvalues[k] > kEigenFloor) {
                total += spec.eigenvalues[k];
            }
        }
        for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k) {
            if (spec.eigenvalues[k] > kEigenFloor) {
                entries.push_back({spec.eigenvalues[k] / total, column_state(rho.basis(), spec.eigenvectors, k)});
            }
        }
        std::ofstream out(*c.plan.ens_out, std::ios::binary);
        if (!out) {
            throw Error(ErrorKind::IOError, "cannot write '" + *c.plan.ens_out + "'");
        }
        out << format_ensemble(Ensemble(std::move(entries)));
        c.result["ensemble_written"] = *c.plan.ens_out;
    }
}

const std::map<std::string, std::function<void(Context &)>> &handlers() {
    static const std::map<std::string, std::function<void(Context &)>> table = {
        {"avglen", cmd_avglen},       {"baselen", cmd_baselen},   {"pair", cmd_pair},
        {"selfdelim", cmd_selfdelim}, {"entropy", cmd_entropy},   {"shannon", cmd_shannon},
        {"code", cmd_code},           {"kraft", cmd_kraft},       {"sw", cmd_sw},
        {"encode", cmd_encode},       {"lossy", cmd_lossy},       {"complexity", cmd_complexity},
        {"universal", cmd_universal}, {"kq", cmd_kq},             {"incompress", cmd_incompress},
        {"multicopy", cmd_multicopy}, {"nonadd", cmd_nonadd},     {"sandwich", cmd_sandwich},
        {"ineq", cmd_ineq},           {"randrho", cmd_randrho},
    };
    return table;
}

std::string render_value(const json &v) {
    if (v.is_array()) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            out += (i ? "," : "") + render_value(v[i]);
        }
        return out;
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    return v.dump();
}

std::string render(const Context &c, Format format) {
    if (format == Format::Csv) {
        std::string out;
        for (std::size_t i = 0; i < c.csv_header.size(); ++i) {
            out += (i ? "," : "") + c.csv_header[i];
        }
        out += "\n";
        for (const auto &row : c.csv_rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out += (i ? "," : "") + row[i];
            }
            out += "\n";
        }
        return out;
    }
    if (format == Format::Text) {
        if (c.text_override) {
            return *c.text_override;
        }
        std::string out;
        for (const auto &[key, value] : c.result.items()) {
            out += key + "=" + render_value(value) + "\n";
        }
        for (const auto &[key, value] : c.checks.items()) {
            out += "check." + key + "=" + render_value(value) + "\n";
        }
        return out;
    }
    json report;
    report["tool_version"] = kToolVersion;
    report["seed"] = c.plan.seed;
    report["inputs"] = c.inputs;
    report["result"] = c.result;
    report["checks"] = c.checks;
    return report.dump(2) + "\n";
}

}  // namespace

CommandPlan parse_args(const std::vector<std::string> &args) {
    CommandPlan plan;
    CLI::App app{"Desk-scale second-quantized Kolmogorov complexity toolkit", "sqkc"};
    app.require_subcommand(1, 1);

    std::string format = "json";
    auto common = [&](CLI::App *sub) {
        sub->add_option("--seed", plan.seed, "Seed recorded in the report (default 0)");
        sub->add_option("--output,-o", plan.output, "Write the report to this path instead of stdout");
        sub->add_option("--format", format, "json, csv (sweeps only) or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
    };
    auto add = [&](const std::string &name, const std::string &description) {
        CLI::App *sub = app.add_subcommand(name, description);
        common(sub);
        return sub;
    };

    CLI::App *sub = nullptr;
    sub = add("avglen", "Average length of a QSTR state");
    sub->add_option("--state", plan.state, "QSTR file")->required();
    sub = add("baselen", "Base length of a QSTR state");
    sub->add_option("--state", plan.state, "QSTR file")->required();
    sub = add("pair", "Pair encoding 1^l(x) 0 x y, or its inverse with --decode");
    sub->add_option("--x", plan.x, "First bitstring (eps for empty)");
    sub->add_option("--y", plan.y, "Second bitstring (eps for empty)");
    sub->add_option("--decode", plan.decode, "Encoded bitstring to split");
    sub = add("selfdelim", "Apply x -> 1^l(x) 0 x to every term of a state");
    sub->add_option("--state", plan.state, "QSTR file")->required();
    sub = add("entropy", "Von Neumann entropy of an ensemble's density operator");
    sub->add_option("--rho", plan.rho, "Ensemble file")->required();
    sub = add("shannon", "Shannon entropy of a probability vector");
    sub->add_option("--p", plan.probabilities, "Comma-separated probabilities")->delimiter(',')->required();
    sub = add("code", "Canonical Shannon code of a probability vector");
    sub->add_option("--p", plan.probabilities, "Comma-separated probabilities")->delimiter(',')->required();
    sub = add("kraft", "Kraft sum of codeword lengths");
    sub->add_option("--lengths", plan.lengths, "Comma-separated lengths")->delimiter(',')->required();
    sub = add("sw", "Lossless eigenbasis code of a density operator");
    sub->add_option("--rho", plan.rho, "Ensemble file")->required();
    sub = add("encode", "Encode a state with a condensable code (machine-format table)");
    sub->add_option("--code", plan.code, "Table: codeword -> source basis state")->required();
    sub->add_option("--state", plan.state, "QSTR file")->required();
    sub = add("lossy", "Typical-subspace projection of the block code of rho^n");
    sub->add_option("--rho", plan.rho, "Ensemble file")->required();
    sub->add_option("--n", plan.n_values, "Copies; a list makes a sweep")->delimiter(',')->required();
    sub->add_option("--delta", plan.delta, "Rate slack above the entropy")->required();
    sub = add("complexity", "Forced-description complexity on one machine");
    sub->add_option("--machine", plan.machines, "identity:K, sd-identity:K, sd:PATH or PATH")->required();
    sub->add_option("--state", plan.state, "QSTR file")->required();
    sub = add("universal", "Catalog complexity: min over machines of index cost plus description");
    sub->add_option("--machine", plan.machines, "Machines in catalog order")->required();
    sub->add_option("--state", plan.state, "QSTR file")->required();
    sub = add("kq", "Fidelity-penalized complexity over a program table");
    sub->add_option("--machine", plan.machines, "Program table file")->required();
    sub->add_option("--state", plan.state, "QSTR file")->required();
    sub = add("incompress", "Incompressibility bound for a family of states");
    sub->add_option("--state", plan.states, "QSTR files of the family")->required();
    sub->add_option("--machine", plan.machines, "Machines in catalog order")->required();
    sub = add("multicopy", "Symmetric-expansion lengths for n copies of a qubit");
    sub->add_option("--alpha2", plan.alpha2_values, "|alpha|^2 values; a list makes a sweep")->delimiter(',')->required();
    sub->add_option("--n", plan.n_values, "Copies; a list makes a sweep")->delimiter(',')->required();
    sub = add("nonadd", "Non-additivity witnesses for phi_n = (|0> +- |n>)/sqrt 2");
    sub->add_option("--m-block", plan.m_block, "Search n in [2^m, 2^{m+1})")->required();
    sub->add_option("--k", plan.k, "Gap to exceed (default 1)");
    sub->add_option("--machine", plan.machines, "Prefix-free machines in catalog order")->required();
    sub->add_option("--scan-less", plan.scan_less, "Also scan n = 1..N for the (<) witness");
    sub = add("sandwich", "S <= E[QK] <= S + 1 + c with the lossless code machine first in the catalog");
    sub->add_option("--ens", plan.ens, "Ensemble file")->required();
    sub->add_option("--machine", plan.machines, "Extra prefix-free machines");
    sub = add("ineq", "Evaluate sum_W lambda_W S(rho^W)");
    sub->add_option("--parties", plan.parties, "Number of parties")->required();
    sub->add_option("--spec", plan.inequality, "Terms like '1:1;2:1;1,2:-1'")->required();
    sub->add_option("--mode", plan.mode, "joint or product")->check(CLI::IsMember({"joint", "product"}));
    sub->add_option("--rho", plan.rho, "Joint ensemble file (joint mode)");
    sub->add_option("--dims", plan.dims, "Party dimensions (joint mode)")->delimiter(',');
    sub->add_option("--factor", plan.factors, "Per-party ensemble files (product mode)");
    sub = add("randrho", "Seeded Ginibre density operator");
    sub->add_option("--dim", plan.dim, "Dimension (2..64)")->required();
    sub->add_option("--ens-out", plan.ens_out, "Also write an eigen-ensemble realizing it");

    std::vector<const char *> argv = {"sqkc"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        std::ostringstream out, err;
        app.exit(e, out, err);
        throw UsageError(0, out.str());
    } catch (const CLI::ParseError &e) {
        std::ostringstream out, err;
        app.exit(e, out, err);
        throw UsageError(2, err.str() + out.str());
    }
    plan.subcommand = app.get_subcommands().front()->get_name();
    plan.format = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;
    if (plan.format == Format::Csv && plan.subcommand != "lossy" && plan.subcommand != "multicopy") {
        throw UsageError(2, "--format csv is only available for the sweep subcommands lossy and multicopy\n");
    }
    return plan;
}

RunOutcome run(const CommandPlan &plan) {
    Context c(plan);
    auto it = handlers().find(plan.subcommand);
    if (it == handlers().end()) {
        return {2, "unknown subcommand '" + plan.subcommand + "'\n"};
    }
    auto error_record = [&](const std::string &kind, const std::string &message) {
        json report;
        report["tool_version"] = kToolVersion;
        report["seed"] = plan.seed;
        report["inputs"] = c.inputs;
        report["error"] = {{"kind", kind}, {"message", message}};
        return report.dump(2) + "\n";
    };
    try {
        it->second(c);
    } catch (const Error &e) {
        return {exit_code_for(e.kind()), error_record(std::string(error_kind_name(e.kind())), e.what())};
    } catch (const std::exception &e) {
        return {1, error_record("InternalError", e.what())};
    }
    return {0, render(c, plan.format)};
}

int main_entry(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    CommandPlan plan;
    try {
        plan = parse_args(args);
    } catch (const UsageError &e) {
        (e.exit_code() == 0 ? std::cout : std::cerr) << e.text();
        return e.exit_code();
    }
    const RunOutcome outcome = run(plan);
    if (plan.output) {
        std::ofstream out(*plan.output, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write '" << *plan.output << "'\n";
            return 3;
        }
        out << outcome.report;
    } else {
        std::cout << outcome.report;
    }
    return outcome.exit_code;
}

}  // namespace sqkc::cli
