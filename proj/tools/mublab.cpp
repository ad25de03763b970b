// mublab: construct the affine-group/eigenbasis machinery behind complete
// unbiased basis families, verify its structural properties exactly, and
// emit per-prime nonexistence certificates as reproducible JSON reports.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mublab/certifier.hpp"
#include "mublab/covariance.hpp"
#include "mublab/gf.hpp"
#include "mublab/groups.hpp"
#include "mublab/mub.hpp"
#include "mublab/repr.hpp"
#include "mublab/version.hpp"

using nlohmann::ordered_json;
using namespace mublab;

namespace {

struct RunConfig {
    double tolerance = 1e-9;
    double ray_tolerance = 1e-7;
    std::uint64_t seed = 0;
    std::string out;            // --out path; empty = MUBLAB_OUT dir or stdout
    std::string format = "json";
};

// all floating-point values are serialized as strings at 17 significant
// digits so reports are byte-identical across runs and round-trip exactly
std::string fnum(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_num(const ordered_json& v) {
    if (v.is_string()) return std::strtod(v.get<std::string>().c_str(), nullptr);
    return v.get<double>();
}

ordered_json config_json(const RunConfig& cfg, const std::string& command) {
    return ordered_json{{"command", command},
                        {"tolerance", fnum(cfg.tolerance)},
                        {"ray_tolerance", fnum(cfg.ray_tolerance)},
                        {"seed", cfg.seed},
                        {"format", cfg.format},
                        {"output", cfg.out},
                        {"tool_version", kVersion}};
}

ordered_json cmat_json(const Eigen::MatrixXcd& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back({fnum(m(i, j).real()), fnum(m(i, j).imag())});
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXcd cmat_parse(const ordered_json& rows) {
    const int nr = static_cast<int>(rows.size());
    if (nr == 0) throw Error("empty matrix in input file");
    const int nc = static_cast<int>(rows[0].size());
    Eigen::MatrixXcd m(nr, nc);
    for (int i = 0; i < nr; ++i) {
        if (static_cast<int>(rows[i].size()) != nc)
            throw Error("ragged matrix in input file");
        for (int j = 0; j < nc; ++j)
            m(i, j) = {parse_num(rows[i][j][0]), parse_num(rows[i][j][1])};
    }
    return m;
}

void flatten_text(const ordered_json& j, const std::string& prefix,
                  std::string& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten_text(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i)
            flatten_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out += prefix + " = " + (j.is_string() ? j.get<std::string>() : j.dump()) +
               "\n";
    }
}

int emit(const ordered_json& report, const RunConfig& cfg, const std::string& slug,
         bool pass) {
    std::string payload;
    if (cfg.format == "text")
        flatten_text(report, "", payload);
    else
        payload = report.dump(2) + "\n";

    std::string path = cfg.out;
    if (path.empty()) {
        if (const char* dir = std::getenv("MUBLAB_OUT"); dir && *dir)
            path = std::string(dir) + "/" + slug +
                   (cfg.format == "text" ? ".txt" : ".json");
    }
    if (path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw Error("cannot open output file " + path);
        f << payload;
    }
    return pass ? 0 : 1;
}

// factor a prime power q = r^n; Error when q is not one
std::pair<int, int> prime_power(int q) {
    if (q < 2) throw Error(std::to_string(q) + " is not a prime power");
    int r = 2;
    while (r * r <= q && q % r != 0) ++r;
    if (q % r != 0) r = q; // q itself prime
    int n = 0, rest = q;
    while (rest % r == 0) {
        rest /= r;
        ++n;
    }
    if (rest != 1) throw Error(std::to_string(q) + " is not a prime power");
    return {r, n};
}

std::vector<int> translation_indices(int q) {
    std::vector<int> K(static_cast<size_t>(q));
    for (int i = 0; i < q; ++i) K[static_cast<size_t>(i)] = i;
    return K;
}

ordered_json check_entry(const std::string& name, bool pass,
                         const std::string& witness) {
    return ordered_json{{"name", name}, {"outcome", pass ? "pass" : "fail"},
                        {"witness", witness}};
}

bool all_pass(const ordered_json& checks) {
    for (const auto& c : checks)
        if (c.at("outcome") != "pass") return false;
    return true;
}

int cmd_gf_ops(const RunConfig& cfg, int q) {
    const auto [r, n] = prime_power(q);
    const FieldPtr f = FieldSpec::create(r, n);
    ordered_json checks = ordered_json::array();

    bool inv_ok = true;
    for (int i = 1; i < q && inv_ok; ++i)
        inv_ok = inverse(f->element(i)).index() == f->inv_index(i) &&
                 (f->element(i) * inverse(f->element(i))).is_one();
    checks.push_back(check_entry("inverse_roundtrip", inv_ok,
                                 "x * x^-1 = 1 for all " + std::to_string(q - 1) +
                                     " nonzero elements"));

    int zero_traces = 0;
    for (int i = 0; i < q; ++i) zero_traces += f->trace_index(i) == 0;
    checks.push_back(check_entry("trace_balance", zero_traces == q / r,
                                 "trace vanishes on " + std::to_string(zero_traces) +
                                     " of " + std::to_string(q) + " elements"));

    if (r == 2) {
        bool chars_ok = true;
        for (int b = 1; b < q && chars_ok; ++b) {
            long long sum = 0;
            for (int x = 0; x < q; ++x)
                sum += f->trace_index(f->mul_index(x, b)) == 0 ? 1 : -1;
            chars_ok = sum == 0;
        }
        checks.push_back(check_entry(
            "character_orthogonality", chars_ok,
            "sum_x (-1)^Tr(b x) = 0 for every nonzero b"));
    }

    int order = 0, acc = 2;
    if (q > 2) {
        order = 1;
        while (acc != 1 && order < q) {
            acc = f->mul_index(acc, 2);
            ++order;
        }
    }
    checks.push_back(check_entry(
        "primitive_order", q == 2 || order == q - 1,
        "canonical generator has multiplicative order " + std::to_string(order)));

    ordered_json report{{"config", config_json(cfg, "gf ops")},
                        {"q", q},
                        {"characteristic", r},
                        {"degree", n},
                        {"modulus", poly_to_string(f->modulus())},
                        {"checks", checks}};
    return emit(report, cfg, "gf-ops-q" + std::to_string(q), all_pass(checks));
}

int cmd_group_build(const RunConfig& cfg, int q, int sylow_p, bool kernel) {
    const auto [r, n] = prime_power(q);
    const FiniteGroup G = FiniteGroup::affine(FieldSpec::create(r, n));
    ordered_json checks = ordered_json::array();

    checks.push_back(check_entry("group_order",
                                 G.order() == static_cast<long long>(q) * (q - 1),
                                 "order = " + std::to_string(G.order())));

    ordered_json hist;
    for (const auto& [ord, count] : order_histogram(G))
        hist[std::to_string(ord)] = count;

    ordered_json report{{"config", config_json(cfg, "group build")},
                        {"q", q},
                        {"name", G.name()},
                        {"order", G.order()},
                        {"element_order_histogram", hist}};

    if (sylow_p > 0) {
        const auto S = find_sylow(G, sylow_p);
        const long long count = sylow_count(G, sylow_p);
        const bool congruent = count % sylow_p == 1;
        const bool divides = (G.order() / static_cast<long long>(S.size())) % count == 0;
        report["sylow"] = ordered_json{{"p", sylow_p},
                                       {"subgroup_order", S.size()},
                                       {"count", count}};
        checks.push_back(check_entry("sylow_congruence", congruent && divides,
                                     "count " + std::to_string(count) +
                                         " = 1 mod p and divides the index"));
    }

    if (kernel) {
        std::vector<int> H;
        for (int a = 1; a < q; ++a) H.push_back(G.affine_index(a, 0));
        std::vector<int> K = frobenius_kernel(G, H);
        std::sort(K.begin(), K.end());
        const bool ok = K == translation_indices(q) && is_elementary_abelian(G, K, r);
        report["kernel"] = ordered_json{{"order", K.size()},
                                        {"elementary_abelian_exponent", r}};
        checks.push_back(check_entry(
            "frobenius_kernel", ok,
            "kernel is the translation subgroup, elementary abelian of order " +
                std::to_string(K.size())));
    }

    if (G.order() <= 256) {
        ordered_json table = ordered_json::array();
        for (int g = 0; g < G.order(); ++g) {
            ordered_json row = ordered_json::array();
            for (int h = 0; h < G.order(); ++h) row.push_back(G.mul(g, h));
            table.push_back(std::move(row));
        }
        report["multiplication_table"] = std::move(table);
    }

    report["checks"] = checks;
    return emit(report, cfg, "group-build-q" + std::to_string(q), all_pass(checks));
}

int cmd_rep_check(const RunConfig& cfg, int q) {
    const auto [r, n] = prime_power(q);
    const FiniteGroup G = FiniteGroup::affine(FieldSpec::create(r, n));
    const Representation rep = Representation::standard(G);
    ordered_json checks = ordered_json::array();

    const IrreducibilitySum is = irreducibility_sum(rep);
    checks.push_back(check_entry("irreducibility_sum",
                                 is.irreducible && is.sum == G.order(),
                                 "sum of squared characters = " +
                                     std::to_string(is.sum) + ", group order = " +
                                     std::to_string(G.order())));

    ordered_json report{{"config", config_json(cfg, "rep check")},
                        {"q", q},
                        {"degree", rep.degree()},
                        {"group_order", G.order()}};

    if (r == 2) {
        const auto K = translation_indices(q);
        const EigenStructure es = kernel_eigenstructure(rep, K);
        bool mult_ok = true;
        for (int b = 1; b < q && mult_ok; ++b) {
            int plus = 0;
            for (int j = 0; j < q - 1; ++j) plus += es.signs(j, b - 1) == 1;
            mult_ok = plus == q / 2 - 1;
        }
        checks.push_back(check_entry("eigenvalue_multiplicities", mult_ok,
                                     "each nonidentity translation: +1 x " +
                                         std::to_string(q / 2 - 1) + ", -1 x " +
                                         std::to_string(q / 2)));

        const auto cyc = cyclic_permutation_check(rep, G.affine_index(2, 0));
        checks.push_back(check_entry(
            "eigenbasis_cycle", cyc.pass,
            cyc.pass ? "single label cycle of length " + std::to_string(q - 1)
                     : cyc.failure));

        const Eigen::MatrixXi S = kstar_sum(rep, K);
        checks.push_back(check_entry(
            "kernel_star_sum",
            (S + Eigen::MatrixXi::Identity(q - 1, q - 1)).cwiseAbs().sum() == 0,
            "nonidentity translation matrices sum to -I"));
    }

    if (q <= 8) {
        std::vector<Collineation> us;
        for (int g = 0; g < G.order(); ++g)
            us.push_back({rep.unitary_matrix(g).cast<std::complex<double>>(), false});
        const int cd = commutant_dim(us);
        checks.push_back(check_entry("commutant_dimension", cd == 1,
                                     "commutant dimension = " + std::to_string(cd)));
    }

    report["checks"] = checks;
    return emit(report, cfg, "rep-check-q" + std::to_string(q), all_pass(checks));
}

int cmd_mub_build(const RunConfig& cfg, int d, bool verify) {
    const MubSet mub = construct_mub(d);
    ordered_json report{{"config", config_json(cfg, "mub build")},
                        {"dim", d},
                        {"bases_count", mub.bases.size()}};
    bool pass = true;
    if (verify) {
        const UnbiasedReport v = verify_unbiased(mub, cfg.tolerance);
        report["verify"] =
            ordered_json{{"max_orthonormality_defect", fnum(v.max_orthonormality_defect)},
                         {"max_overlap_defect", fnum(v.max_overlap_defect)},
                         {"tolerance", fnum(cfg.tolerance)},
                         {"outcome", v.pass ? "pass" : "fail"}};
        pass = v.pass;
    }
    if (d <= 31) {
        ordered_json bases = ordered_json::array();
        for (const auto& b : mub.bases) bases.push_back(cmat_json(b));
        report["bases"] = std::move(bases);
    } else {
        report["bases_omitted"] = "state amplitudes omitted above dimension 31";
    }
    return emit(report, cfg, "mub-build-d" + std::to_string(d), pass);
}

int cmd_mub_ic(const RunConfig& cfg, int d) {
    const MubSet mub = construct_mub(d);
    const int rank = ic_rank(mub);
    const double defect = povm_completeness_defect(mub);
    const bool pass = rank == d * d && defect <= cfg.tolerance;
    ordered_json report{{"config", config_json(cfg, "mub ic")},
                        {"dim", d},
                        {"operator_space_dim", d * d},
                        {"rank", rank},
                        {"completeness_defect", fnum(defect)},
                        {"outcome", pass ? "pass" : "fail"}};
    return emit(report, cfg, "mub-ic-d" + std::to_string(d), pass);
}

ordered_json verdict_json(const CovarianceVerdict& v) {
    ordered_json j{{"pass", v.pass},
                   {"group_order", v.group_order},
                   {"expected_order", v.expected_order},
                   {"orbit_size", v.orbit_size},
                   {"covers_all_states", v.covers_all_states},
                   {"regular", v.regular}};
    if (v.pass) {
        j["fiducial_basis"] = v.fiducial_basis;
        j["fiducial_state"] = v.fiducial_state;
    } else {
        j["failure"] = v.failure;
    }
    return j;
}

int cmd_cov_qubit_witness(const RunConfig& cfg) {
    const auto witness = qubit_order6_witness();
    const CovarianceVerdict v =
        sharp_covariance_check(construct_mub(2), witness, cfg.ray_tolerance);
    ordered_json group = ordered_json::array();
    for (const auto& c : witness)
        group.push_back(ordered_json{{"matrix", cmat_json(c.matrix)},
                                     {"antiunitary", c.antiunitary}});
    ordered_json report{{"config", config_json(cfg, "cov qubit-witness")},
                        {"dim", 2},
                        {"collineations", std::move(group)},
                        {"sharp_covariance", verdict_json(v)}};
    return emit(report, cfg, "cov-qubit-witness", v.pass);
}

ordered_json load_json(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open input file " + path);
    ordered_json j;
    f >> j;
    return j;
}

int cmd_cov_check(const RunConfig& cfg, const std::string& mub_path,
                  const std::string& group_path) {
    const ordered_json mj = load_json(mub_path);
    MubSet mub;
    mub.dim = mj.at("dim").get<int>();
    for (const auto& b : mj.at("bases")) mub.bases.push_back(cmat_parse(b));

    const ordered_json gj = load_json(group_path);
    std::vector<Collineation> group;
    for (const auto& c : gj.at("collineations"))
        group.push_back(
            {cmat_parse(c.at("matrix")), c.value("antiunitary", false)});

    const CovarianceVerdict v = sharp_covariance_check(mub, group, cfg.ray_tolerance);
    ordered_json report{{"config", config_json(cfg, "cov check")},
                        {"mub_file", mub_path},
                        {"group_file", group_path},
                        {"sharp_covariance", verdict_json(v)}};
    return emit(report, cfg, "cov-check", v.pass);
}

int cmd_certify(const RunConfig& cfg, int p, int restarts) {
    const CertificateReport cert = certify(p, cfg.seed, restarts);
    ordered_json checks = ordered_json::array();
    for (const auto& c : cert.checks)
        checks.push_back(ordered_json{{"name", c.name},
                                      {"anchor", c.anchor},
                                      {"outcome", c.outcome},
                                      {"witness", c.witness},
                                      {"machine_checked", c.machine_checked}});
    ordered_json report{{"config", config_json(cfg, "certify")},
                        {"p", cert.p},
                        {"branch", cert.branch}};
    if (cert.n) report["n"] = *cert.n;
    if (cert.m_range)
        report["m_range"] = ordered_json::array({cert.m_range->first, cert.m_range->second});
    report["checks"] = std::move(checks);
    report["verdict"] = cert.verdict;
    report["tool_version"] = kVersion;
    report["seed"] = cert.seed;
    return emit(report, cfg, "certify-p" + std::to_string(p),
                cert.verdict == "NONEXISTENT");
}

int cmd_scan(const RunConfig& cfg, int order) {
    const auto entries = small_order_scan(order, cfg.seed);
    ordered_json rows = ordered_json::array();
    int faithful_hits = 0;
    for (const auto& e : entries) {
        rows.push_back(ordered_json{{"group", e.group},
                                    {"degrees", e.degrees},
                                    {"max_degree", e.max_degree},
                                    {"max_faithful_degree", e.max_faithful_degree},
                                    {"faithful_at_target", e.faithful_at_target}});
        faithful_hits += e.faithful_at_target;
    }
    ordered_json report{{"config", config_json(cfg, "scan")},
                        {"order", order},
                        {"groups", std::move(rows)},
                        {"faithful_at_target_count", faithful_hits}};
    return emit(report, cfg, "scan-order" + std::to_string(order), faithful_hits == 1);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construction and certification toolkit for group-covariant "
                 "unbiased basis families"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand

    RunConfig cfg;
    app.add_option("--tolerance", cfg.tolerance, "matrix/defect tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--ray-tolerance", cfg.ray_tolerance, "ray equality tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "base seed for all randomized steps")
        ->capture_default_str();
    app.add_option("--out", cfg.out, "output file (default: $MUBLAB_OUT dir or stdout)");
    app.add_option("--format", cfg.format, "report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    int q = 0, d = 0, p = 0, sylow_p = 0, restarts = 0, order = 12;
    bool kernel = false, verify = false;
    std::string mub_path, group_path;

    auto* gf = app.add_subcommand("gf", "finite field operations");
    auto* gf_ops = gf->add_subcommand("ops", "field construction self-test");
    gf_ops->add_option("--q", q, "field size (prime power)")->required();

    auto* group = app.add_subcommand("group", "affine group construction");
    auto* group_build = group->add_subcommand("build", "build the affine group of GF(q)");
    group_build->add_option("--q", q, "field size (prime power)")->required();
    group_build->add_option("--sylow", sylow_p, "also locate and count Sylow p-subgroups");
    group_build->add_flag("--kernel", kernel, "also compute the Frobenius kernel");

    auto* rep = app.add_subcommand("rep", "representation checks");
    auto* rep_check = rep->add_subcommand("check", "standard representation suite");
    rep_check->add_option("--q", q, "field size (prime power)")->required();

    auto* mub = app.add_subcommand("mub", "unbiased basis families");
    auto* mub_build = mub->add_subcommand("build", "construct the d+1 bases");
    mub_build->add_option("--d", d, "dimension (prime)")->required();
    mub_build->add_flag("--verify", verify, "verify orthonormality and overlaps");
    auto* mub_ic = mub->add_subcommand("ic", "operator-space rank of the outcome set");
    mub_ic->add_option("--d", d, "dimension (prime)")->required();

    auto* cov = app.add_subcommand("cov", "covariance checks");
    auto* cov_witness = cov->add_subcommand(
        "qubit-witness", "order-6 qubit collineation group and its sharp check");
    auto* cov_check = cov->add_subcommand("check", "sharp covariance of a stored pair");
    cov_check->add_option("--mub", mub_path, "basis family JSON file")->required();
    cov_check->add_option("--group", group_path, "collineation group JSON file")
        ->required();

    auto* cert = app.add_subcommand("certify", "nonexistence certificate for odd prime p");
    cert->add_option("--p", p, "odd prime dimension")->required();
    cert->add_option("--restarts", restarts,
                     "optional fiducial-search corroboration restarts");

    auto* scan = app.add_subcommand("scan", "projective-faithfulness scan of a group order");
    scan->add_option("--order", order, "group order (12)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage problems exit 2; --help exits 0
    }

    try {
        if (gf_ops->parsed()) return cmd_gf_ops(cfg, q);
        if (group_build->parsed()) return cmd_group_build(cfg, q, sylow_p, kernel);
        if (rep_check->parsed()) return cmd_rep_check(cfg, q);
        if (mub_build->parsed()) return cmd_mub_build(cfg, d, verify);
        if (mub_ic->parsed()) return cmd_mub_ic(cfg, d);
        if (cov_witness->parsed()) return cmd_cov_qubit_witness(cfg);
        if (cov_check->parsed()) return cmd_cov_check(cfg, mub_path, group_path);
        if (cert->parsed()) return cmd_certify(cfg, p, restarts);
        if (scan->parsed()) return cmd_scan(cfg, order);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand executed\n";
    return 2;
}
