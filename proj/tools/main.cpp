// Command-line frontend: exact counting, enumeration, classification and
// verification of self-orthogonal codes over Z_{p^2} as reproducible batch
// jobs.  Exit codes: 0 success / certified, 1 verification mismatch,
// 2 uncertified classification, 64 usage, 65 bad parameters, 66 budget
// refusal, 70 internal consistency failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "zp2/lifting.hpp"
#include "zp2/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyMismatch = 1;
constexpr int kExitUncertified = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitBudget = 66;
constexpr int kExitInternal = 70;

struct JobConfig {
    std::string format = "text";
    size_t workers = std::max(1u, std::thread::hardware_concurrency());
    uint64_t seed = 20240405;
    std::string budget;  // same syntax as ZP2CODES_BUDGET
};

zp2::MatrixText read_matrix_file(const std::string& path) {
    if (path == "-") return zp2::parse_matrix_text(std::cin);
    std::ifstream in(path);
    if (!in) throw zp2::ShapeError("cannot open " + path);
    return zp2::parse_matrix_text(in);
}

void apply_budget_flag(const JobConfig& job) {
    if (!job.budget.empty()) setenv("ZP2CODES_BUDGET", job.budget.c_str(), 1);
}

int run_mass(const std::string& family, uint32_t p, size_t n, std::optional<size_t> k1,
             std::optional<size_t> k2, const JobConfig& job) {
    zp2::MassReport report;
    zp2::ClassFamily fam = zp2::parse_family(family);
    switch (fam) {
        case zp2::ClassFamily::SelfOrthogonal:
            if (!k1 || !k2) throw zp2::DomainError("mass --family so needs --k1 and --k2");
            report = zp2::mass_so(n, *k1, *k2, p);
            break;
        case zp2::ClassFamily::SelfDual:
            report = zp2::mass_self_dual(n, p);
            break;
        case zp2::ClassFamily::EvenOne:
            if (!k1 || !k2)
                throw zp2::DomainError("mass --family even-one needs --k1 and --k2");
            report = zp2::mass_even_one(n, *k1, *k2);
            break;
        case zp2::ClassFamily::EvenPm1:
            if (!k1 || !k2)
                throw zp2::DomainError("mass --family even-pm1 needs --k1 and --k2");
            report = zp2::mass_even_pm1(n, *k1, *k2);
            break;
        case zp2::ClassFamily::Type2One:
            report = zp2::mass_type2(n, zp2::With::One);
            break;
        case zp2::ClassFamily::Type2Pm1:
            report = zp2::mass_type2(n, zp2::With::Pm1);
            break;
    }
    if (job.format == "json")
        std::cout << report.to_json() << '\n';
    else if (job.format == "tsv")
        std::cout << report.to_tsv();
    else
        std::cout << report.to_text();
    return kExitOk;
}

void print_code_stream(const std::vector<zp2::CodeZp2>& codes, uint32_t p) {
    for (const auto& c : codes) {
        std::cout << zp2::format_matrix_text(p, c.generators()) << '\n';
    }
    std::cout << "# total " << codes.size() << '\n';
}

int run_enumerate_lifts(const std::string& residue_path, const std::string& torsion_path,
                        const std::string& family, const JobConfig&) {
    zp2::MatrixText rt = read_matrix_file(residue_path);
    zp2::FpCode c1 = zp2::FpCode::from_rows(rt.p, rt.n, rt.rows);
    zp2::FpCode c2 = c1;
    if (!torsion_path.empty()) {
        zp2::MatrixText tt = read_matrix_file(torsion_path);
        if (tt.p != rt.p || tt.n != rt.n)
            throw zp2::ShapeError("residue and torsion files disagree on p or n");
        c2 = zp2::FpCode::from_rows(tt.p, tt.n, tt.rows);
    }
    std::vector<zp2::CodeZp2> codes;
    if (family == "so" || family == "self-orthogonal") {
        zp2::so_lifts(c1, c2).for_each_code(
            [&codes](const zp2::CodeZp2& c) { codes.push_back(c); });
    } else if (family == "even-one") {
        zp2::even_lifts_with_one(c1, c2).for_each_code(
            [&codes](const zp2::CodeZp2& c) { codes.push_back(c); });
    } else if (family == "even-pm1") {
        codes = zp2::even_lifts_with_pm1(c1, c2);
    } else {
        throw zp2::DomainError("lift enumeration supports families so, even-one, even-pm1");
    }
    print_code_stream(codes, rt.p);
    return kExitOk;
}

int run_enumerate_oracle(uint32_t p, size_t n, const std::string& family,
                         std::optional<size_t> k1, std::optional<size_t> k2,
                         const JobConfig&) {
    zp2::OracleFamily fam;
    if (family == "all")
        fam = zp2::OracleFamily::All;
    else if (family == "so" || family == "self-orthogonal")
        fam = zp2::OracleFamily::SelfOrthogonal;
    else if (family == "self-dual")
        fam = zp2::OracleFamily::SelfDual;
    else if (family == "even")
        fam = zp2::OracleFamily::Even;
    else if (family == "even-one")
        fam = zp2::OracleFamily::EvenWithOne;
    else if (family == "even-pm1")
        fam = zp2::OracleFamily::EvenWithPm1;
    else
        throw zp2::DomainError("unknown oracle family: " + family);
    zp2::TypeFilter filter;
    filter.k1 = k1;
    filter.k2 = k2;
    auto codes =
        zp2::oracle_collect(p, n, fam, zp2::OracleBudget::from_env_or_default(), filter);
    print_code_stream(codes, p);
    return kExitOk;
}

int run_classify(const std::string& family, uint32_t p, size_t n, std::optional<size_t> k1,
                 std::optional<size_t> k2, const JobConfig& job) {
    zp2::ClassificationResult res =
        zp2::classify(p, n, zp2::parse_family(family), k1, k2,
                      zp2::EquivBudget::from_env_or_default());
    if (job.format == "json")
        std::cout << res.to_json() << '\n';
    else if (job.format == "tsv")
        std::cout << res.to_tsv();
    else
        std::cout << res.to_text();
    return res.certified ? kExitOk : kExitUncertified;
}

int run_verify(const std::string& grid, const std::string& lemma, bool paper_example,
               uint32_t p, size_t m, size_t n, const JobConfig& job, size_t trials) {
    auto print = [](const zp2::CheckResult& r) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail
                  << '\n';
        std::cerr << "# " << r.name << " took " << r.seconds << "s\n";
        return r.passed;
    };
    zp2::VerifyOptions opt;
    opt.small_grid = (grid == "small");
    opt.seed = job.seed;
    opt.trials = trials;
    opt.workers = job.workers;
    if (!lemma.empty()) {
        bool ok = print(zp2::check_lemma(lemma, p, m, n, trials, job.seed));
        return ok ? kExitOk : kExitVerifyMismatch;
    }
    if (paper_example) {
        bool ok = print(zp2::check_worked_example(opt));
        return ok ? kExitOk : kExitVerifyMismatch;
    }
    bool all = true;
    for (const auto& r : zp2::run_verification(opt)) all = print(r) && all;
    std::cout << (all ? "all checks passed" : "some checks FAILED") << '\n';
    return all ? kExitOk : kExitVerifyMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration, counting and classification of self-orthogonal codes"
                 " over Z_{p^2}"};
    app.require_subcommand(1);

    JobConfig job;
    app.add_option("--format", job.format, "output format: text, json or tsv")
        ->check(CLI::IsMember({"text", "json", "tsv"}));
    app.add_option("--workers", job.workers, "worker threads (never changes results)");
    app.add_option("--seed", job.seed, "seed for randomized spot checks");
    app.add_option("--budget", job.budget,
                   "budget overrides, e.g. oracle.p2=6,oracle.weight=4000000,aut=9");

    uint32_t p = 2;
    size_t n = 0, m = 1;
    std::optional<size_t> k1, k2;
    std::string family = "so";

    CLI::App* mass = app.add_subcommand("mass", "evaluate a mass formula");
    mass->fallthrough();
    mass->add_option("--family", family, "so, self-dual, even-one, even-pm1, type2-one, type2-pm1");
    mass->add_option("-p,--prime", p, "prime p");
    mass->add_option("-n,--length", n, "code length")->required();
    mass->add_option("--k1", k1, "residue dimension");
    mass->add_option("--k2", k2, "torsion co-dimension");

    std::string residue_path, torsion_path;
    bool lifts = false, oracle = false;
    CLI::App* enumerate = app.add_subcommand("enumerate", "list codes as matrix blocks");
    enumerate->fallthrough();
    enumerate->add_flag("--lifts", lifts, "enumerate lifts of a residue/torsion pair");
    enumerate->add_flag("--oracle", oracle, "exhaustive Howell-form sweep");
    enumerate->add_option("--residue", residue_path, "residue code file ('-' for stdin)");
    enumerate->add_option("--torsion", torsion_path, "torsion code file");
    enumerate->add_option("--family", family, "family filter");
    enumerate->add_option("-p,--prime", p, "prime p (oracle mode)");
    enumerate->add_option("-n,--length", n, "code length (oracle mode)");
    enumerate->add_option("--k1", k1, "type filter: residue dimension");
    enumerate->add_option("--k2", k2, "type filter: torsion co-dimension");

    CLI::App* classify = app.add_subcommand("classify", "equivalence classes with a mass certificate");
    classify->fallthrough();
    classify->add_option("--family", family, "family to classify");
    classify->add_option("-p,--prime", p, "prime p")->required();
    classify->add_option("-n,--length", n, "code length")->required();
    classify->add_option("--k1", k1, "residue dimension");
    classify->add_option("--k2", k2, "torsion co-dimension");

    std::string grid = "full", lemma;
    bool paper_example = false;
    size_t trials = 50;
    CLI::App* verify = app.add_subcommand("verify", "run the verification grid");
    verify->fallthrough();
    verify->add_option("--grid", grid, "small or full")
        ->check(CLI::IsMember({"small", "full"}));
    verify->add_option("--lemma", lemma, "spot-check one statement: 3.1 3.2 4.2 4.5 5.3 5.6 5.7");
    verify->add_flag("--paper-example", paper_example,
                     "re-run the published worked example (Z9, length 4)");
    verify->add_option("-p,--prime", p, "prime for spot checks");
    verify->add_option("-m,--rows", m, "row count / dimension for spot checks");
    verify->add_option("-n,--length", n, "length for spot checks");
    verify->add_option("--trials", trials, "random trials per configuration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        apply_budget_flag(job);
        if (mass->parsed()) return run_mass(family, p, n, k1, k2, job);
        if (enumerate->parsed()) {
            if (lifts == oracle)
                throw zp2::DomainError("enumerate needs exactly one of --lifts / --oracle");
            if (lifts) return run_enumerate_lifts(residue_path, torsion_path, family, job);
            return run_enumerate_oracle(p, n, family, k1, k2, job);
        }
        if (classify->parsed()) return run_classify(family, p, n, k1, k2, job);
        if (verify->parsed())
            return run_verify(grid, lemma, paper_example, p, m, n, job, trials);
    } catch (const zp2::BudgetError& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return kExitBudget;
    } catch (const zp2::ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return kExitInternal;
    } catch (const zp2::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
