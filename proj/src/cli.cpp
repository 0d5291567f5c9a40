#include "zpm/cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"
#include "json_util.hpp"
#include "published_table.hpp"
#include "zpm/oracle.hpp"
#include "zpm/serialize.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <mutex>
#include <ostream>
#include <thread>

namespace zpm {

std::vector<CodeCounts> compute_table(std::uint64_t p, unsigned m, std::size_t n_max, unsigned jobs)
{
    const RingParams ring(p, m);
    std::vector<std::size_t> lengths;
    for (std::size_t n = 1; n <= n_max; n += 2)
        if (gcd(p, n) == 1)
            lengths.push_back(n);

    std::vector<CodeCounts> rows(lengths.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < lengths.size(); i = next++) {
            try {
                rows[i] = compute_counts(p, ring.m(), lengths[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, lengths.size()));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    return rows;
}

std::vector<std::string> published_discrepancies(const CodeCounts& row)
{
    std::vector<std::string> out;
    for (const auto& pub : detail::published_table) {
        if (pub.n != row.n)
            continue;
        auto check = [&](const char* field, std::uint64_t published, const Natural& ours) {
            if (Natural(published) != ours)
                out.push_back(std::string(field) + ":paper=" + std::to_string(published));
        };
        check("gamma", pub.gamma, row.gamma);
        check("delta", pub.delta, row.delta);
        check("N_t", pub.trivial, row.trivial_so);
        check("N_n", pub.nontrivial, row.nontrivial_so);
        check("N_c", pub.self_dual, row.selfdual_formula);
    }
    return out;
}

namespace {

struct CommonArgs {
    std::uint64_t p = 0;
    unsigned m = 0;
    std::size_t n = 0;
};

void add_pmn(CLI::App* cmd, CommonArgs& a, bool with_n = true)
{
    cmd->add_option("--p", a.p, "prime p")->required();
    cmd->add_option("--m", a.m, "chain length m (ring Z_{p^m})")->required();
    if (with_n)
        cmd->add_option("--n", a.n, "odd code length coprime to p")->required();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0)
            out += sep;
        out += parts[i];
    }
    return out;
}

int cmd_factor(const CommonArgs& a, const std::string& modulus, const std::string& format,
               std::ostream& out)
{
    const ModulusKind kind = modulus == "shifted" ? ModulusKind::Shifted : ModulusKind::Standard;
    const RingParams ring(a.p, a.m);
    const auto basis = hensel_lift(ring.p(), ring.m(), a.n, kind);
    if (format == "json") {
        out << to_json(basis) << '\n';
        return kExitOk;
    }
    std::vector<std::string> parts;
    for (const auto& f : basis.factors)
        parts.push_back(to_text(f));
    parts.push_back("gamma=" + std::to_string(basis.gamma) + " delta=" + std::to_string(basis.delta));
    out << join(parts, "; ") << '\n';
    std::vector<std::string> pairing;
    for (auto k : basis.pairing)
        pairing.push_back(std::to_string(k));
    out << "pairing: " << join(pairing, " ") << '\n';
    return kExitOk;
}

int cmd_counts(const CommonArgs& a, const std::string& format, std::ostream& out)
{
    const auto counts = compute_counts(a.p, a.m, a.n);
    if (format == "json") {
        out << to_json(counts) << '\n';
    } else {
        out << counts_csv_header() << '\n' << to_csv(counts) << '\n';
    }
    return kExitOk;
}

int cmd_table(const CommonArgs& a, std::size_t n_max, const std::string& format, unsigned jobs,
              bool diff_paper, std::ostream& out, std::ostream& err)
{
    const RingParams ring(a.p, a.m);
    if (diff_paper && (ring.p() != detail::published_p || ring.m() != detail::published_m)) {
        err << "--diff-paper compares against the published Z_8 table; use --p 2 --m 3\n";
        return kExitInvalidInput;
    }
    const auto rows = compute_table(ring.p(), ring.m(), n_max, jobs);
    if (format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            auto obj = nlohmann::ordered_json::parse(to_json(r));
            if (diff_paper)
                obj["paper_diff"] = published_discrepancies(r);
            arr.push_back(std::move(obj));
        }
        out << arr.dump() << '\n';
        return kExitOk;
    }
    if (rows.empty())
        return kExitOk;
    out << counts_csv_header() << (diff_paper ? ",paper_diff" : "") << '\n';
    for (const auto& r : rows) {
        out << to_csv(r);
        if (diff_paper)
            out << ',' << join(published_discrepancies(r), ";");
        out << '\n';
    }
    return kExitOk;
}

int cmd_enumerate(const CommonArgs& a, const std::string& filter_name, bool reduced,
                  std::uint64_t limit, const std::string& format, std::ostream& out,
                  std::ostream& err)
{
    const auto filter = parse_filter(filter_name);
    if (!filter) {
        err << "unknown filter '" << filter_name << "' (all, so, trivial, nontrivial, sd)\n";
        return kExitInvalidInput;
    }
    const RingParams ring(a.p, a.m);
    auto basis = std::make_shared<const FactorBasis>(
        hensel_lift(ring.p(), ring.m(), a.n, ModulusKind::Shifted));
    const Budgets budgets = Budgets::from_env();
    if (profile_box_size(*basis) > budgets.profiles)
        throw Error(Errc::BudgetExceeded, "profile box " + to_string(profile_box_size(*basis)) +
                                              " exceeds the budget of " +
                                              std::to_string(budgets.profiles));

    const GeneratorForm form = reduced ? GeneratorForm::Reduced : GeneratorForm::Product;
    ProfileEnumerator walk(basis, *filter);
    std::uint64_t emitted = 0;
    auto arr = nlohmann::ordered_json::array();
    while (auto profile = walk.next()) {
        if (limit != 0 && emitted >= limit)
            break;
        const Poly g = generator_polynomial(*profile, form);
        if (format == "json") {
            nlohmann::ordered_json obj;
            obj["exponents"] =
                std::vector<unsigned>(profile->exponents().begin(), profile->exponents().end());
            obj["generator"] = g.coeff_vector();
            obj["generator_text"] = to_text(g);
            obj["cardinality"] = detail::natural_json(cardinality(*profile));
            arr.push_back(std::move(obj));
        } else {
            out << to_text(*profile) << ' ' << to_text(g) << '\n';
        }
        ++emitted;
    }
    if (format == "json")
        out << arr.dump() << '\n';
    return kExitOk;
}

int cmd_code(const CommonArgs& a, const std::string& profile_text, bool with_type,
             std::ostream& out)
{
    const RingParams ring(a.p, a.m);
    auto basis = std::make_shared<const FactorBasis>(
        hensel_lift(ring.p(), ring.m(), a.n, ModulusKind::Shifted));
    const ExponentProfile profile(basis, parse_exponents(profile_text));
    const auto dual = dual_profile(profile);
    auto exps = [](const ExponentProfile& pr) {
        return std::vector<unsigned>(pr.exponents().begin(), pr.exponents().end());
    };
    nlohmann::ordered_json doc;
    doc["exponents"] = exps(profile);
    doc["generator"] = to_text(generator_polynomial(profile, GeneratorForm::Product));
    doc["generator_reduced"] = to_text(generator_polynomial(profile, GeneratorForm::Reduced));
    doc["dual_exponents"] = exps(dual);
    doc["cardinality"] = detail::natural_json(cardinality(profile));
    doc["self_orthogonal"] = is_self_orthogonal(profile);
    doc["self_dual"] = is_self_dual(profile);
    doc["triviality"] = to_string(classify_triviality(profile));
    if (with_type && is_self_dual(profile))
        doc["type"] = to_string(classify_type(profile, Budgets::from_env().codewords));
    out << doc.dump() << '\n';
    return kExitOk;
}

int cmd_verify(const CommonArgs& a, std::ostream& out)
{
    const RingParams ring(a.p, a.m);
    validate_length(ring.p(), a.n);
    const auto report = crosscheck(ring.p(), ring.m(), a.n, Budgets::from_env());
    out << to_json(report) << '\n';
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cyclic self-orthogonal and self-dual codes over Z_{p^m}", "zpmcyclic"};
    app.require_subcommand(1);

    CommonArgs factor_args, counts_args, table_args, enum_args, code_args, verify_args;
    std::string modulus = "standard";
    std::string factor_format = "text";
    std::string counts_format = "csv";
    std::string table_format = "csv";
    std::string enum_format = "text";
    std::size_t n_max = 0;
    unsigned jobs = 1;
    bool diff_paper = false;
    std::string filter = "all";
    bool reduced = false;
    std::uint64_t limit = 0;
    std::string profile_text;
    bool with_type = false;

    auto* factor = app.add_subcommand("factor", "basic irreducible factorization over Z_{p^m}");
    add_pmn(factor, factor_args);
    factor->add_option("--modulus", modulus, "standard (x^n-1) or shifted (x^n+p-1)")
        ->check(CLI::IsMember({"standard", "shifted"}));
    factor->add_option("--format", factor_format)->check(CLI::IsMember({"text", "json"}));

    auto* counts = app.add_subcommand("counts", "closed-form code counts for one length");
    add_pmn(counts, counts_args);
    counts->add_option("--format", counts_format)->check(CLI::IsMember({"csv", "json"}));

    auto* table = app.add_subcommand("table", "code counts for all odd lengths up to n-max");
    add_pmn(table, table_args, false);
    table->add_option("--n-max", n_max, "largest length")->required();
    table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    table->add_flag("--diff-paper", diff_paper, "annotate rows that differ from the published Z_8 table");

    auto* enumerate = app.add_subcommand("enumerate", "list codes with their generators");
    add_pmn(enumerate, enum_args);
    enumerate->add_option("--filter", filter, "all, so, trivial, nontrivial, sd");
    enumerate->add_flag("--reduced", reduced, "reduce generators modulo x^n - 1");
    enumerate->add_option("--limit", limit, "stop after this many codes (0 = no limit)");
    enumerate->add_option("--format", enum_format)->check(CLI::IsMember({"text", "json"}));

    auto* code = app.add_subcommand("code", "describe one code given by its exponent profile");
    add_pmn(code, code_args);
    code->add_option("--profile", profile_text, "comma-separated exponents, canonical order")
        ->required();
    code->add_flag("--type", with_type, "classify a self-dual code as Type I or II by scan");

    auto* verify = app.add_subcommand("verify", "brute-force crosscheck of every profile");
    add_pmn(verify, verify_args);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitInvalidInput;
    }

    try {
        if (*factor)
            return cmd_factor(factor_args, modulus, factor_format, out);
        if (*counts)
            return cmd_counts(counts_args, counts_format, out);
        if (*table)
            return cmd_table(table_args, n_max, table_format, jobs, diff_paper, out, err);
        if (*enumerate)
            return cmd_enumerate(enum_args, filter, reduced, limit, enum_format, out, err);
        if (*code)
            return cmd_code(code_args, profile_text, with_type, out);
        if (*verify)
            return cmd_verify(verify_args, out);
    } catch (const Error& e) {
        err << e.what() << '\n';
        return e.code() == Errc::BudgetExceeded ? kExitBudget : kExitInvalidInput;
    }
    return kExitInvalidInput;
}

} // namespace zpm
