#include "zpm/oracle.hpp"

#include "json_util.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

namespace zpm {

Budgets Budgets::from_env()
{
    Budgets b;
    if (const char* env = std::getenv("ZPMCYCLIC_BUDGET")) {
        char* end = nullptr;
        const auto value = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw Error(Errc::InvalidArgument,
                        std::string("ZPMCYCLIC_BUDGET is not a natural number: ") + env);
        b.codewords = value;
        b.profiles = value;
    }
    return b;
}

Coeff inner_product(std::span<const Coeff> u, std::span<const Coeff> v, const RingParams& ring)
{
    if (u.size() != v.size())
        throw Error(Errc::LengthMismatch, "inner product of words of lengths " +
                                              std::to_string(u.size()) + " and " +
                                              std::to_string(v.size()));
    Coeff acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        acc = ring.add(acc, ring.mul(ring.reduce(u[i]), ring.reduce(v[i])));
    return acc;
}

namespace {

bool is_zero_word(const Word& w)
{
    return std::all_of(w.begin(), w.end(), [](Coeff c) { return c == 0; });
}

// row -= factor * pivot_row
void subtract_multiple(Word& row, const Word& pivot_row, Coeff factor, const RingParams& ring)
{
    if (factor == 0)
        return;
    for (std::size_t i = 0; i < row.size(); ++i)
        row[i] = ring.sub(row[i], ring.mul(factor, pivot_row[i]));
}

} // namespace

SpanBasis::SpanBasis(RingParams ring, std::size_t n, std::vector<Word> generators)
    : ring_(ring), n_(n)
{
    std::vector<Word> pool;
    for (auto& g : generators) {
        if (g.size() != n)
            throw Error(Errc::LengthMismatch, "generator length differs from the code length");
        for (auto& c : g)
            c = ring_.reduce(c);
        if (!is_zero_word(g))
            pool.push_back(std::move(g));
    }

    for (std::size_t col = 0; col < n_ && !pool.empty(); ++col) {
        std::size_t best = pool.size();
        unsigned best_val = ring_.m();
        for (std::size_t i = 0; i < pool.size(); ++i) {
            const unsigned v = ring_.valuation(pool[i][col]);
            if (v < best_val) {
                best_val = v;
                best = i;
            }
        }
        if (best == pool.size())
            continue;

        Word pivot = std::move(pool[best]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
        const Coeff p_v = ring_.p_power(best_val);
        const Coeff unit = pivot[col] / p_v;
        const Coeff unit_inv = scalar_inverse(unit, ring_);
        for (auto& c : pivot)
            c = ring_.mul(c, unit_inv);

        for (auto& row : pool)
            subtract_multiple(row, pivot, row[col] / p_v, ring_);
        if (best_val > 0) {
            Word annihilated = pivot;
            const Coeff scale = ring_.p_power(ring_.m() - best_val);
            for (auto& c : annihilated)
                c = ring_.mul(c, scale);
            pool.push_back(std::move(annihilated));
        }
        std::erase_if(pool, is_zero_word);

        for (auto& row : rows_)
            subtract_multiple(row, pivot, row[col] / p_v, ring_);

        rows_.push_back(std::move(pivot));
        pivot_cols_.push_back(col);
        pivot_vals_.push_back(best_val);
    }
}

Natural SpanBasis::cardinality() const
{
    std::uint64_t exponent = 0;
    for (auto v : pivot_vals_)
        exponent += ring_.m() - v;
    return natural_pow(ring_.p(), exponent);
}

bool SpanBasis::contains(std::span<const Coeff> word) const
{
    if (word.size() != n_)
        return false;
    Word w(word.begin(), word.end());
    for (auto& c : w)
        c = ring_.reduce(c);
    std::size_t r = 0;
    for (std::size_t col = 0; col < n_; ++col) {
        if (r < rows_.size() && pivot_cols_[r] == col) {
            const Coeff p_v = ring_.p_power(pivot_vals_[r]);
            if (w[col] % p_v != 0)
                return false;
            subtract_multiple(w, rows_[r], w[col] / p_v, ring_);
            ++r;
        } else if (w[col] != 0) {
            return false;
        }
    }
    return true;
}

bool SpanBasis::contains(const SpanBasis& other) const
{
    return std::all_of(other.rows().begin(), other.rows().end(),
                       [&](const Word& row) { return contains(row); });
}

bool same_module(const SpanBasis& a, const SpanBasis& b)
{
    return a.cardinality() == b.cardinality() && a.contains(b) && b.contains(a);
}

Word to_word(const Poly& f, std::size_t n)
{
    const Poly r = quotient_reduce(f, n);
    Word w(n, 0);
    std::copy(r.coeffs().begin(), r.coeffs().end(), w.begin());
    return w;
}

std::vector<Word> cyclic_shifts(const Poly& f, std::size_t n)
{
    std::vector<Word> out;
    out.reserve(n);
    Word w = to_word(f, n);
    for (std::size_t s = 0; s < n; ++s) {
        out.push_back(w);
        std::rotate(w.rbegin(), w.rbegin() + 1, w.rend());
    }
    return out;
}

SpanBasis span_from_generators(std::span<const Poly> generators, const RingParams& ring,
                               std::size_t n)
{
    std::vector<Word> rows;
    for (const auto& g : generators) {
        if (!(g.ring() == ring))
            throw Error(Errc::MixedRings, "generator lives over a different ring");
        auto shifts = cyclic_shifts(g, n);
        rows.insert(rows.end(), std::make_move_iterator(shifts.begin()),
                    std::make_move_iterator(shifts.end()));
    }
    return SpanBasis(ring, n, std::move(rows));
}

namespace {

std::vector<Word> all_shifts(std::span<const Poly> generators, std::size_t n)
{
    std::vector<Word> out;
    for (const auto& g : generators) {
        auto shifts = cyclic_shifts(g, n);
        out.insert(out.end(), shifts.begin(), shifts.end());
    }
    return out;
}

bool mutually_orthogonal(const std::vector<Word>& a, const std::vector<Word>& b,
                         const RingParams& ring)
{
    for (const auto& u : a)
        for (const auto& v : b)
            if (inner_product(u, v, ring) != 0)
                return false;
    return true;
}

} // namespace

bool bruteforce_self_orthogonal(std::span<const Poly> generators, const RingParams& ring,
                                std::size_t n)
{
    const auto shifts = all_shifts(generators, n);
    for (std::size_t i = 0; i < shifts.size(); ++i)
        for (std::size_t j = i; j < shifts.size(); ++j)
            if (inner_product(shifts[i], shifts[j], ring) != 0)
                return false;
    return true;
}

bool for_each_codeword(const SpanBasis& basis, std::uint64_t budget,
                       const std::function<bool(std::span<const Coeff>)>& visit)
{
    if (basis.cardinality() > budget)
        throw Error(Errc::BudgetExceeded, "code has " + to_string(basis.cardinality()) +
                                              " codewords, budget is " + std::to_string(budget));
    const auto& ring = basis.ring();
    const auto& rows = basis.rows();
    std::vector<Coeff> radix;
    for (auto v : basis.pivot_valuations())
        radix.push_back(ring.modulus() / ring.p_power(v));

    std::vector<Coeff> digits(rows.size(), 0);
    Word word(basis.length(), 0);
    while (true) {
        if (!visit(word))
            return false;
        // mixed-radix increment, last row fastest
        std::size_t k = rows.size();
        while (k-- > 0) {
            if (digits[k] + 1 < radix[k]) {
                ++digits[k];
                for (std::size_t i = 0; i < word.size(); ++i)
                    word[i] = ring.add(word[i], rows[k][i]);
                break;
            }
            const Coeff back = radix[k] - 1;
            for (std::size_t i = 0; i < word.size(); ++i)
                word[i] = ring.sub(word[i], ring.mul(back, rows[k][i]));
            digits[k] = 0;
        }
        if (k == static_cast<std::size_t>(-1))
            return true;
    }
}

std::vector<Word> enumerate_codewords(const SpanBasis& basis, std::uint64_t budget)
{
    std::vector<Word> out;
    for_each_codeword(basis, budget, [&](std::span<const Coeff> w) {
        out.emplace_back(w.begin(), w.end());
        return true;
    });
    return out;
}

Natural bruteforce_min_euclidean_weight(const SpanBasis& basis, std::uint64_t budget)
{
    if (basis.rows().empty())
        throw Error(Errc::ZeroCode, "the zero code has no nonzero codeword");
    std::optional<Natural> best;
    for_each_codeword(basis, budget, [&](std::span<const Coeff> w) {
        if (std::all_of(w.begin(), w.end(), [](Coeff c) { return c == 0; }))
            return true;
        Natural weight = euclidean_weight(w, basis.ring());
        if (!best || weight < *best)
            best = std::move(weight);
        return true;
    });
    return *best;
}

SpanBasis code_span(const ExponentProfile& profile)
{
    const auto& basis = profile.basis();
    if (basis.kind == ModulusKind::Shifted) {
        const Poly g = generator_polynomial(profile, GeneratorForm::Reduced);
        return span_from_generators(std::span<const Poly>(&g, 1), basis.ring, basis.n);
    }
    const auto gens = standard_generators(profile);
    return span_from_generators(gens, basis.ring, basis.n);
}

bool CrosscheckReport::passed() const noexcept { return first_failure() == nullptr; }

const CheckOutcome* CrosscheckReport::first_failure() const noexcept
{
    for (const auto& c : checks)
        if (!c.passed)
            return &c;
    return nullptr;
}

namespace {

void record(CheckOutcome& check, bool ok, const ExponentProfile& profile)
{
    if (ok)
        return;
    if (check.passed) {
        auto exps = profile.exponents();
        check.offending = std::vector<unsigned>(exps.begin(), exps.end());
    }
    check.passed = false;
    ++check.failures;
}

CheckOutcome named(std::string name, std::string detail = {})
{
    CheckOutcome c;
    c.name = std::move(name);
    c.detail = std::move(detail);
    return c;
}

CheckOutcome count_check(const std::string& name, const Natural& enumerated, const Natural& expected)
{
    CheckOutcome c = named(name);
    c.passed = enumerated == expected;
    c.failures = c.passed ? 0 : 1;
    c.detail = "enumerated " + to_string(enumerated) + ", closed form " + to_string(expected);
    return c;
}

} // namespace

CrosscheckReport crosscheck(std::uint64_t p, unsigned m, std::size_t n, const Budgets& budgets)
{
    auto shifted = std::make_shared<const FactorBasis>(hensel_lift(p, m, n, ModulusKind::Shifted));
    auto standard = std::make_shared<const FactorBasis>(hensel_lift(p, m, n, ModulusKind::Standard));
    const RingParams& ring = standard->ring;

    CrosscheckReport report;
    report.p = p;
    report.m = m;
    report.n = n;
    report.gamma = standard->gamma;
    report.delta = standard->delta;
    if (profile_box_size(*standard) > budgets.profiles)
        throw Error(Errc::BudgetExceeded, "crosscheck needs " + to_string(profile_box_size(*standard)) +
                                              " profiles, budget is " +
                                              std::to_string(budgets.profiles));

    CheckOutcome so_check =
        named("self_orthogonality", "brute-force shift inner products agree with the exponent criterion");
    CheckOutcome card_check =
        named("cardinality", "span cardinality equals p^{sum (m - a_k) deg f_k}");
    CheckOutcome span_check = named(
        "generator_span", "product-form generator and standard generators span the same module");
    CheckOutcome dual_check =
        named("duality", "|C||C^perp| = p^{mn}, C^perp from the dual profile is orthogonal to C");

    const Natural ambient = natural_pow(p, static_cast<std::uint64_t>(m) * n);
    const Poly trivial_gen = Poly::constant(ring, ring.p_power(ceil_half(m)));
    const SpanBasis trivial_span = span_from_generators(std::span<const Poly>(&trivial_gen, 1), ring, n);

    ProfileEnumerator walk(standard, ProfileFilter::All);
    while (auto profile = walk.next()) {
        ++report.profiles;
        const ExponentProfile product_profile = profile->rebased(shifted);
        const Poly generator = generator_polynomial(product_profile, GeneratorForm::Reduced);
        const std::span<const Poly> product_gens(&generator, 1);
        const SpanBasis product_span = span_from_generators(product_gens, ring, n);
        const auto std_gens = standard_generators(*profile);
        const SpanBasis std_span = span_from_generators(std_gens, ring, n);

        const bool brute_so = bruteforce_self_orthogonal(product_gens, ring, n);
        record(so_check, brute_so == is_self_orthogonal(*profile), *profile);

        const Natural expected = cardinality(*profile);
        record(card_check,
               product_span.cardinality() == expected && std_span.cardinality() == expected,
               *profile);

        record(span_check, same_module(product_span, std_span), *profile);

        const ExponentProfile dual = dual_profile(*profile);
        const auto dual_gens = standard_generators(dual);
        const SpanBasis dual_span = span_from_generators(dual_gens, ring, n);
        const bool dual_ok = product_span.cardinality() * dual_span.cardinality() == ambient &&
                             dual_profile(dual) == *profile &&
                             mutually_orthogonal(all_shifts(product_gens, n),
                                                 all_shifts(dual_gens, n), ring);
        record(dual_check, dual_ok, *profile);

        if (brute_so) {
            ++report.so_enumerated;
            if (trivial_span.contains(product_span))
                ++report.trivial_enumerated;
            else
                ++report.nontrivial_enumerated;
            if (product_span.cardinality() * product_span.cardinality() == ambient)
                ++report.selfdual_enumerated;
        }
    }

    report.checks.push_back(std::move(so_check));
    report.checks.push_back(std::move(card_check));
    report.checks.push_back(std::move(span_check));
    report.checks.push_back(std::move(dual_check));
    const auto g = report.gamma;
    const auto d = report.delta;
    report.checks.push_back(count_check("count_so", report.so_enumerated, count_so(g, d, m)));
    report.checks.push_back(
        count_check("count_trivial", report.trivial_enumerated, count_trivial(g, d, m)));
    report.checks.push_back(count_check("count_nontrivial", report.nontrivial_enumerated,
                                        count_nontrivial_expanded(g, d, m)));
    report.checks.push_back(count_check("count_self_dual", report.selfdual_enumerated,
                                        count_self_dual(d, m).actual));
    return report;
}

std::string to_json(const CrosscheckReport& report)
{
    nlohmann::ordered_json j;
    j["p"] = report.p;
    j["m"] = report.m;
    j["n"] = report.n;
    j["gamma"] = report.gamma;
    j["delta"] = report.delta;
    j["profiles"] = report.profiles;
    j["passed"] = report.passed();
    j["enumerated"] = {{"so", detail::natural_json(report.so_enumerated)},
                       {"trivial", detail::natural_json(report.trivial_enumerated)},
                       {"nontrivial", detail::natural_json(report.nontrivial_enumerated)},
                       {"self_dual", detail::natural_json(report.selfdual_enumerated)}};
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["passed"] = c.passed;
        cj["failures"] = c.failures;
        cj["detail"] = c.detail;
        if (c.offending)
            cj["offending_profile"] = *c.offending;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    if (const auto* f = report.first_failure())
        j["first_failure"] = f->name;
    return j.dump();
}

} // namespace zpm
