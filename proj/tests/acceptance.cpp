// Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned below.
//
//   acceptance [--expect-fail N]...
//
// Exit status is nonzero when a criterion fails, unless it was listed with
// --expect-fail; a listed criterion that passes is also an error, so the list
// cannot go stale silently.

#include "json.hpp"
#include "oracles.hpp"
#include "zpm/cli.hpp"
#include "zpm/field_poly.hpp"
#include "zpm/oracle.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace zpm;

namespace {

constexpr double kExampleSeconds = 1.0;
constexpr double kTableSeconds = 10.0;
constexpr double kEquivalenceSeconds = 60.0;
constexpr double kTypeSeconds = 120.0;
constexpr int kRandomProfiles = 200;
constexpr std::uint64_t kSeed = 20240601;
constexpr std::uint64_t kCodewordBudget = 10'000'000;

struct Cfg {
    std::uint64_t p;
    unsigned m;
    std::size_t n;
};

const std::vector<Cfg> kEquivalenceSuite{{2, 2, 7},  {2, 3, 7},  {2, 2, 15}, {2, 3, 15},
                                         {3, 2, 5},  {3, 2, 13}, {5, 2, 3}};

std::string cfg_text(const Cfg& c)
{
    return "(" + std::to_string(c.p) + "," + std::to_string(c.m) + "," + std::to_string(c.n) + ")";
}

class Timer {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Collects the failed clauses of one criterion.
struct Verdict {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what)
    {
        if (!ok)
            failures.push_back(what);
    }
    bool passed() const { return failures.empty(); }
};

std::string join(const std::vector<std::string>& xs, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? sep : "") + xs[i];
    return out;
}

int run(const std::vector<std::string>& args, std::string& out)
{
    std::ostringstream o, e;
    const int code = run_cli(args, o, e);
    out = o.str();
    return code;
}

std::shared_ptr<const FactorBasis> lift(const Cfg& c, ModulusKind kind)
{
    return std::make_shared<const FactorBasis>(hensel_lift(c.p, c.m, c.n, kind));
}

// ---------------------------------------------------------------------------

struct PrintedItem {
    int item;
    std::vector<unsigned> exponents; ///< (f1, f2, f3)
    const char* polynomial;
};

// The 20 generators of the self-orthogonal codes over Z_8 of length 7, as printed.
const std::vector<PrintedItem> kPrintedItems{
    {1, {3, 3, 3}, "0"},
    {2, {3, 3, 2}, "4x^4+4x^2+4x+4"},
    {3, {3, 3, 1}, "2x^8+4x^6+4x^5+6x^4+4x^3+2"},
    {4, {3, 3, 0}, "x^12+2x^11+x^10+5x^9+6x^8+2x^6+7x^5+7x^4+3x^3+x+1"},
    {5, {3, 2, 3}, "4x^4+4x^3+4x^2+4"},
    {6, {3, 1, 3}, "2x^8+4x^7+6x^6+4x^5+6x^4+4x^3+4x^2+2"},
    {7, {3, 0, 3}, "x^12+x^11+3x^9+3x^8+5x^7+4x^6+4x^5+6x^4+5x^3+5x^2+2x+1"},
    {8, {3, 2, 2}, "4x+4"},
    {9, {3, 2, 1}, "2x^5+6x^4+2x^3+4x^2+2"},
    {10, {3, 1, 2}, "2x^5+4x^3+2x^2+6x+2"},
    {11, {2, 3, 3}, "4x^6+4x^5+4x^4+4x^3+4x^2+4x+4"},
    {12, {2, 3, 2}, "4x^3+4x^2+4"},
    {13, {2, 3, 1}, "2x^7+6x^6+6x^5+6x^4+2x+2"},
    {14, {2, 3, 0}, "x^11+x^10+5x^8+x^7+7x^6+3x^5+4x^4+3x^3+1"},
    {15, {2, 2, 3}, "4x^3+4x+4"},
    {16, {2, 1, 3}, "2x^7+2x^6+4x^5+6x^3+6x^2+6x+2"},
    {17, {2, 0, 3}, "x^11+3x^8+5x^6+7x^5+5x^4+x^3+4x^2+x+1"},
    {18, {2, 2, 2}, "4"},
    {19, {2, 1, 2}, "2x^4+6x^3+6x^2+4x+2"},
    {20, {2, 2, 1}, "2x^4+6x^2+2"},
};

const std::set<int> kSuspectedErrata{3, 4, 13, 20};
const std::map<int, int> kMirrorPartner{{3, 6}, {4, 7}, {13, 16}, {20, 19}};

Verdict criterion_example()
{
    Verdict v;
    const Cfg c{2, 3, 7};
    Timer timer;
    std::string out;
    const int code = run({"enumerate", "--p", "2", "--m", "3", "--n", "7", "--filter", "so"}, out);
    const double elapsed = timer.seconds();
    v.require(code == kExitOk, "enumerate exit " + std::to_string(code));

    std::map<std::vector<unsigned>, std::string> emitted;
    std::istringstream lines(out);
    for (std::string line; std::getline(lines, line);) {
        const auto space = line.find(' ');
        emitted[parse_exponents(line.substr(0, space))] = line.substr(space + 1);
    }
    v.require(emitted.size() == 20, "emitted " + std::to_string(emitted.size()) + " codes, want 20");
    v.require(elapsed < kExampleSeconds, "runtime " + std::to_string(elapsed) + " s");

    // exact match outside the suspected errata
    std::vector<std::string> mismatched;
    for (const auto& item : kPrintedItems) {
        auto it = emitted.find(item.exponents);
        if (it == emitted.end()) {
            mismatched.push_back("(" + std::to_string(item.item) + ") missing");
            continue;
        }
        if (!kSuspectedErrata.count(item.item) && it->second != item.polynomial)
            mismatched.push_back("(" + std::to_string(item.item) + ")");
    }
    v.require(mismatched.empty(), "exact match fails on items " + join(mismatched, ","));

    // errata set: evaluation sanity and mirror property
    auto basis = lift(c, ModulusKind::Shifted);
    const RingParams& ring = basis->ring;
    const Coeff minus_one = ring.modulus() - 1;
    std::vector<std::string> literal_eval, factored_eval, mirror_bad, printed_partner;
    for (const auto& [item, partner] : kMirrorPartner) {
        const auto& a = kPrintedItems[item - 1].exponents;
        const ExponentProfile prof(basis, a);
        const Poly g = generator_polynomial(prof, GeneratorForm::Product);
        const unsigned mu = *std::min_element(a.begin(), a.end());

        // literal clause: both evaluations vanish when f_1's exponent exceeds mu
        if (a[0] > mu && (g.evaluate(1) != 0 || g.evaluate(minus_one) != 0))
            literal_eval.push_back("(" + std::to_string(item) + ") G(1)=" +
                                   std::to_string(g.evaluate(1)) + " G(-1)=" +
                                   std::to_string(g.evaluate(minus_one)));

        // what the factorization actually forces: G(x) = p^mu prod f_k(x)^{a_k-mu}
        // at x = +-1, and G(-1) = 0 because f_1 = x + 1 appears with positive power
        for (Coeff x : {Coeff{1}, minus_one}) {
            Coeff expected = ring.p_power(mu);
            for (std::size_t k = 0; k < a.size(); ++k)
                expected = ring.mul(expected, ring.pow(basis->factors[k].evaluate(x), a[k] - mu));
            if (g.evaluate(x) != expected)
                factored_eval.push_back("(" + std::to_string(item) + ")@" + std::to_string(x));
        }
        if (a[0] > mu && g.evaluate(minus_one) != 0)
            factored_eval.push_back("(" + std::to_string(item) + ") G(-1)!=0");

        // mirror: swapping the pair's exponents reverses the generator, up to a unit
        const auto& pa = kPrintedItems[partner - 1].exponents;
        v.require(pa[0] == a[0] && pa[1] == a[2] && pa[2] == a[1],
                  "partner table for (" + std::to_string(item) + ")");
        const Poly h = generator_polynomial(ExponentProfile(basis, pa), GeneratorForm::Product);
        const Poly r = reverse_coefficients(g);
        bool mirrored = false;
        for (Coeff u = 1; u < ring.modulus() && !mirrored; ++u)
            mirrored = ring.is_unit(u) && u * r == h;
        if (!mirrored)
            mirror_bad.push_back("(" + std::to_string(item) + ")~(" + std::to_string(partner) + ")");
        if (to_text(h) != kPrintedItems[partner - 1].polynomial)
            printed_partner.push_back("(" + std::to_string(partner) + ")");
    }
    v.require(literal_eval.empty(),
              "x=+-1 must vanish, violated by " + join(literal_eval, "; "));
    v.require(factored_eval.empty(), "factored evaluation " + join(factored_eval, ","));
    v.require(mirror_bad.empty(), "mirror property " + join(mirror_bad, ","));
    if (!printed_partner.empty())
        v.notes.push_back("printed partner items differing from recomputation: " +
                          join(printed_partner, ","));
    v.notes.push_back("runtime " + std::to_string(elapsed) + " s");
    return v;
}

// ---------------------------------------------------------------------------

Verdict criterion_table()
{
    Verdict v;
    Timer timer;
    std::string out;
    const int code =
        run({"table", "--p", "2", "--m", "3", "--n-max", "99", "--diff-paper", "--jobs", "4"}, out);
    const double elapsed = timer.seconds();
    v.require(code == kExitOk, "table exit " + std::to_string(code));
    v.require(elapsed < kTableSeconds, "runtime " + std::to_string(elapsed) + " s");

    const std::map<std::size_t, std::string> expected_flags{
        {27, "gamma:paper=2"}, {93, "N_n:paper=170240;N_c:paper=729"}};
    std::size_t rows = 0;
    std::istringstream lines(out);
    std::string line;
    std::getline(lines, line);
    v.require(line == "n,gamma,delta,N_t,N_n,N_sd_formula,N_sd_actual,paper_diff", "header " + line);
    while (std::getline(lines, line)) {
        ++rows;
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');)
            f.push_back(cell);
        if (line.back() == ',')
            f.push_back("");
        if (f.size() != 8) {
            v.require(false, "malformed row " + line);
            continue;
        }
        const std::size_t n = std::stoul(f[0]);
        const auto g = std::stoul(f[1]);
        const auto d = std::stoul(f[2]);
        const Natural nt(f[3]), nn(f[4]), sdf(f[5]);
        auto flag = expected_flags.find(n);
        const std::string want = flag == expected_flags.end() ? "" : flag->second;
        v.require(f[7] == want, "row " + f[0] + " diff '" + f[7] + "', want '" + want + "'");
        v.require(nt + nn == natural_pow(2, g) * natural_pow(10, d), "row " + f[0] + " N_t+N_n");
        v.require(sdf == natural_pow(4, d), "row " + f[0] + " N_sd_formula");
    }
    v.require(rows == 50, "rows " + std::to_string(rows));
    v.notes.push_back("runtime " + std::to_string(elapsed) + " s");
    return v;
}

// ---------------------------------------------------------------------------

Verdict criterion_equivalence()
{
    Verdict v;
    Timer timer;
    for (const auto& c : kEquivalenceSuite) {
        const auto report = crosscheck(c.p, c.m, c.n);
        const auto counts = compute_counts(c.p, c.m, c.n);
        v.require(report.passed(), cfg_text(c) + " crosscheck " +
                                       (report.first_failure() ? report.first_failure()->name : ""));
        v.require(report.so_enumerated == counts.total_so, cfg_text(c) + " so");
        v.require(report.trivial_enumerated == counts.trivial_so, cfg_text(c) + " trivial");
        v.require(report.nontrivial_enumerated == counts.nontrivial_so, cfg_text(c) + " nontrivial");
        v.require(report.selfdual_enumerated == counts.selfdual_actual, cfg_text(c) + " self-dual");
        v.notes.push_back(cfg_text(c) + " so=" + to_string(report.so_enumerated) +
                          " sd=" + to_string(report.selfdual_enumerated));
    }
    const double elapsed = timer.seconds();
    v.require(elapsed < kEquivalenceSeconds, "runtime " + std::to_string(elapsed) + " s");
    v.notes.push_back("runtime " + std::to_string(elapsed) + " s");
    return v;
}

// ---------------------------------------------------------------------------

Verdict criterion_duality()
{
    Verdict v;
    std::mt19937_64 rng(kSeed);
    for (const auto& c : kEquivalenceSuite) {
        auto basis = lift(c, ModulusKind::Standard);
        const RingParams& ring = basis->ring;
        const Natural ambient = natural_pow(c.p, static_cast<std::uint64_t>(c.m) * c.n);
        std::uniform_int_distribution<unsigned> exponent(0, c.m);
        int bad = 0;
        for (int trial = 0; trial < kRandomProfiles; ++trial) {
            std::vector<unsigned> a(basis->size());
            for (auto& x : a)
                x = exponent(rng);
            const ExponentProfile prof(basis, a);
            const ExponentProfile dual = dual_profile(prof);
            bool ok = cardinality(prof) * cardinality(dual) == ambient;
            ok = ok && dual_profile(dual) == prof;
            const auto gens = standard_generators(prof);
            const auto dual_gens = standard_generators(dual);
            ok = ok && span_from_generators(gens, ring, c.n).cardinality() *
                               span_from_generators(dual_gens, ring, c.n).cardinality() ==
                           ambient;
            for (const auto& g : gens)
                for (const auto& h : dual_gens)
                    for (const auto& s : cyclic_shifts(g, c.n))
                        for (const auto& t : cyclic_shifts(h, c.n))
                            ok = ok && inner_product(s, t, ring) == 0;
            bad += !ok;
        }
        v.require(bad == 0, cfg_text(c) + " " + std::to_string(bad) + " profiles");
    }
    return v;
}

// ---------------------------------------------------------------------------

Verdict criterion_factorization()
{
    Verdict v;
    auto suite = kEquivalenceSuite;
    suite.push_back({2, 3, 31});
    for (const auto& c : suite) {
        for (auto kind : {ModulusKind::Standard, ModulusKind::Shifted}) {
            const auto basis = hensel_lift(c.p, c.m, c.n, kind);
            const std::string tag = cfg_text(c) + " " + to_string(kind);
            Poly product = Poly::constant(basis.ring, 1);
            for (const auto& f : basis.factors) {
                v.require(f.is_monic(), tag + " non-monic " + to_text(f));
                product = product * f;
                const Poly r = reduce_mod_p(f);
                const auto& rc = r.coeff_vector();
                v.require(oracle::brute_irreducible({rc.begin(), rc.end()}, c.p),
                          tag + " reducible mod p: " + to_text(r));
                v.require(is_irreducible(r), tag + " library test disagrees on " + to_text(r));
            }
            v.require(product == modulus_polynomial(basis.ring, c.n, kind), tag + " product");
            const auto expected = oracle::factor_count(c.p, c.n);
            v.require(basis.size() == expected && basis.gamma + 2 * basis.delta == expected,
                      tag + " factor count");
        }
    }
    return v;
}

// ---------------------------------------------------------------------------

Verdict criterion_existence()
{
    Verdict v;
    for (std::uint64_t p : {2, 3}) {
        for (std::size_t n = 1; n <= 99; n += 2) {
            if (n % p == 0)
                continue;
            // -1 is a power of p mod n, decided by direct orbit walk
            bool minus_one_reached = n <= 2;
            std::uint64_t x = 1 % n;
            for (std::size_t i = 0; i < n && !minus_one_reached; ++i) {
                x = x * p % n;
                minus_one_reached = x == n - 1;
            }
            const auto gd = gamma_delta(p, n);
            const bool exists = nontrivial_exists(p, n);
            const std::string tag = "(p=" + std::to_string(p) + ",n=" + std::to_string(n) + ")";
            v.require(exists == (gd.delta > 0), tag + " vs delta");
            v.require(exists == (count_nontrivial(gd.gamma, gd.delta, 3) > 0), tag + " vs count");
            v.require(exists == !minus_one_reached, tag + " vs orbit of p");
            v.require(gd.delta == oracle::naive_cosets(p, n).pairs, tag + " delta vs naive cosets");
        }
    }
    return v;
}

// ---------------------------------------------------------------------------

Verdict criterion_type()
{
    Verdict v;
    Timer timer;
    for (auto [c, want] : {std::pair{Cfg{2, 2, 7}, 3u}, std::pair{Cfg{3, 2, 13}, 9u}}) {
        auto basis = lift(c, ModulusKind::Shifted);
        const auto sd = enumerate_profiles(basis, ProfileFilter::SelfDual, 1'000'000);
        v.require(sd.size() == want, cfg_text(c) + " found " + std::to_string(sd.size()) + " self-dual codes");
        const RingParams& ring = basis->ring;
        const std::uint64_t modulus = ring.modulus();
        const std::uint64_t divisor = modulus * c.p;
        for (const auto& prof : sd) {
            const std::string tag = cfg_text(c) + " " + to_text(prof);
            v.require(classify_type(prof, kCodewordBudget) == SelfDualType::TypeI, tag + " not type I");
            // independent witness: a member codeword whose weight is not a multiple of p^{m+1}
            const SpanBasis span = code_span(prof);
            std::optional<Word> witness;
            for_each_codeword(span, kCodewordBudget, [&](std::span<const Coeff> w) {
                std::uint64_t weight = 0;
                for (Coeff e : w)
                    weight += std::min(e * e, (modulus - e) * (modulus - e));
                if (weight % divisor != 0) {
                    witness.emplace(w.begin(), w.end());
                    return false;
                }
                return true;
            });
            v.require(witness && span.contains(*witness), tag + " no witness");
        }
    }
    const double elapsed = timer.seconds();
    v.require(elapsed < kTypeSeconds, "runtime " + std::to_string(elapsed) + " s");
    v.notes.push_back("runtime " + std::to_string(elapsed) + " s");
    return v;
}

// ---------------------------------------------------------------------------

Verdict criterion_cardinality()
{
    Verdict v;
    const Cfg c{2, 3, 7};
    for (auto kind : {ModulusKind::Shifted, ModulusKind::Standard}) {
        auto basis = lift(c, kind);
        ProfileEnumerator walk(basis, ProfileFilter::All);
        std::size_t profiles = 0;
        while (auto prof = walk.next()) {
            ++profiles;
            const SpanBasis span = code_span(*prof);
            v.require(span.cardinality() == cardinality(*prof),
                      std::string(to_string(kind)) + " " + to_text(*prof));
            // literal count on the smaller codes
            if (span.cardinality() <= 4096) {
                std::uint64_t count = 0;
                for_each_codeword(span, 4096, [&](std::span<const Coeff>) {
                    ++count;
                    return true;
                });
                v.require(Natural(count) == cardinality(*prof),
                          std::string(to_string(kind)) + " enumeration " + to_text(*prof));
            }
        }
        v.require(profiles == 64, "profile count " + std::to_string(profiles));
    }
    return v;
}

} // namespace

int main(int argc, char** argv)
{
    std::set<int> expect_fail;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--expect-fail" && i + 1 < argc) {
            expect_fail.insert(std::stoi(argv[++i]));
        } else {
            std::cerr << "usage: acceptance [--expect-fail N]...\n";
            return 2;
        }
    }

    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"Z_8 length-7 self-orthogonal generators", criterion_example},
        {"Z_8 table against the published table", criterion_table},
        {"closed-form counts equal brute-force enumeration", criterion_equivalence},
        {"duality on random profiles", criterion_duality},
        {"factorization soundness", criterion_factorization},
        {"existence of non-trivial codes", criterion_existence},
        {"self-dual codes are Type I", criterion_type},
        {"closed-form cardinality equals span cardinality", criterion_cardinality},
    };

    int unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.failures.push_back(std::string("exception: ") + e.what());
        }
        std::cout << (v.passed() ? "PASS" : "FAIL") << "  criterion " << id << ": "
                  << criteria[i].first;
        if (!v.passed())
            std::cout << " -- " << join(v.failures, " | ");
        std::cout << '\n';
        for (const auto& note : v.notes)
            std::cout << "      " << note << '\n';
        const bool expected_failure = expect_fail.count(id) > 0;
        if (v.passed() == expected_failure) {
            ++unexpected;
            if (expected_failure)
                std::cout << "      criterion " << id << " was expected to fail but passed\n";
        } else if (expected_failure) {
            std::cout << "      (known failure, see README)\n";
        }
    }
    return unexpected == 0 ? 0 : 1;
}
