#include "zpm/codes.hpp"

#include "zpm/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace zpm {

ExponentProfile::ExponentProfile(std::shared_ptr<const FactorBasis> basis,
                                 std::vector<unsigned> exponents)
    : basis_(std::move(basis)), exponents_(std::move(exponents))
{
    if (!basis_)
        throw Error(Errc::InvalidArgument, "profile needs a factor basis");
    if (exponents_.size() != basis_->size())
        throw Error(Errc::LengthMismatch, "profile has " + std::to_string(exponents_.size()) +
                                              " exponents but the basis has " +
                                              std::to_string(basis_->size()) + " factors");
    for (auto a : exponents_)
        if (a > basis_->ring.m())
            throw Error(Errc::InvalidArgument,
                        "exponent " + std::to_string(a) + " exceeds m = " +
                            std::to_string(basis_->ring.m()));
}

ExponentProfile ExponentProfile::rebased(std::shared_ptr<const FactorBasis> other) const
{
    return ExponentProfile(std::move(other), exponents_);
}

std::string to_text(const ExponentProfile& profile)
{
    std::string out = "(";
    for (std::size_t k = 0; k < profile.size(); ++k) {
        if (k > 0)
            out += ',';
        out += std::to_string(profile[k]);
    }
    return out + ")";
}

std::vector<unsigned> parse_exponents(const std::string& text)
{
    std::string cleaned;
    for (char c : text)
        if (c != '(' && c != ')' && c != ' ')
            cleaned += c;
    std::vector<unsigned> out;
    std::stringstream ss(cleaned);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
            throw Error(Errc::InvalidArgument, "malformed exponent list '" + text + "'");
        out.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    if (out.empty())
        throw Error(Errc::InvalidArgument, "empty exponent list");
    return out;
}

Poly generator_polynomial(const ExponentProfile& profile, GeneratorForm form)
{
    const auto& basis = profile.basis();
    if (basis.kind != ModulusKind::Shifted)
        throw Error(Errc::WrongModulusKind,
                    "the product-form generator needs the shifted modulus basis");
    const auto exps = profile.exponents();
    const unsigned mu = *std::min_element(exps.begin(), exps.end());
    Poly g = Poly::constant(basis.ring, basis.ring.p_power(mu));
    for (std::size_t k = 0; k < basis.size() && !g.is_zero(); ++k)
        g = g * pow(basis.factors[k], exps[k] - mu);
    if (form == GeneratorForm::Reduced)
        return quotient_reduce(g, basis.n);
    return g;
}

std::vector<Poly> standard_generators(const ExponentProfile& profile)
{
    const auto& basis = profile.basis();
    if (basis.kind != ModulusKind::Standard)
        throw Error(Errc::WrongModulusKind, "standard generators need the x^n - 1 basis");
    const auto& ring = basis.ring;
    const Poly modulus = basis.modulus();
    std::vector<Poly> out;
    for (unsigned j = 0; j < ring.m(); ++j) {
        Poly group = Poly::constant(ring, 1);
        bool any = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (profile[k] == j) {
                group = group * basis.factors[k];
                any = true;
            }
        }
        if (!any)
            continue;
        const Poly cofactor = poly_divmod(modulus, group).first;
        out.push_back(ring.p_power(j) * cofactor);
    }
    return out;
}

ExponentProfile dual_profile(const ExponentProfile& profile)
{
    const auto& basis = profile.basis();
    const unsigned m = basis.ring.m();
    std::vector<unsigned> out(profile.size());
    for (std::size_t k = 0; k < profile.size(); ++k)
        out[k] = m - profile[basis.pairing[k]];
    return ExponentProfile(profile.basis_ptr(), std::move(out));
}

bool is_self_orthogonal(const ExponentProfile& profile)
{
    const auto& basis = profile.basis();
    const unsigned m = basis.ring.m();
    for (std::size_t k = 0; k < profile.size(); ++k) {
        const std::size_t partner = basis.pairing[k];
        if (partner == k) {
            if (profile[k] < ceil_half(m))
                return false;
        } else if (profile[k] + profile[partner] < m) {
            return false;
        }
    }
    return true;
}

bool is_self_dual(const ExponentProfile& profile) { return profile == dual_profile(profile); }

const char* to_string(Triviality t) noexcept
{
    switch (t) {
    case Triviality::NotSelfOrthogonal: return "not_self_orthogonal";
    case Triviality::Trivial: return "trivial";
    case Triviality::Nontrivial: return "nontrivial";
    }
    return "unknown";
}

Triviality classify_triviality(const ExponentProfile& profile)
{
    if (!is_self_orthogonal(profile))
        return Triviality::NotSelfOrthogonal;
    const unsigned half = ceil_half(profile.basis().ring.m());
    const auto exps = profile.exponents();
    const bool trivial = std::all_of(exps.begin(), exps.end(), [&](unsigned a) { return a >= half; });
    return trivial ? Triviality::Trivial : Triviality::Nontrivial;
}

Natural cardinality(const ExponentProfile& profile)
{
    const auto& basis = profile.basis();
    const unsigned m = basis.ring.m();
    std::uint64_t exponent = 0;
    for (std::size_t k = 0; k < profile.size(); ++k)
        exponent += static_cast<std::uint64_t>(m - profile[k]) * basis.factors[k].degree().value();
    return natural_pow(basis.ring.p(), exponent);
}

namespace {

Natural so_choices_self(unsigned m) { return Natural(m - ceil_half(m) + 1); }

Natural so_choices_pair(unsigned m)
{
    return Natural(static_cast<std::uint64_t>(m + 1) * (m + 2) / 2);
}

Natural power(const Natural& base, std::size_t e)
{
    Natural r = 1;
    for (std::size_t i = 0; i < e; ++i)
        r *= base;
    return r;
}

} // namespace

Natural count_so(std::size_t gamma, std::size_t delta, unsigned m)
{
    return power(so_choices_self(m), gamma) * power(so_choices_pair(m), delta);
}

Natural count_trivial(std::size_t gamma, std::size_t delta, unsigned m)
{
    return power(so_choices_self(m), gamma + 2 * delta);
}

Natural count_nontrivial(std::size_t gamma, std::size_t delta, unsigned m)
{
    return count_so(gamma, delta, m) - count_trivial(gamma, delta, m);
}

Natural count_nontrivial_expanded(std::size_t gamma, std::size_t delta, unsigned m)
{
    const Natural c = so_choices_self(m);
    return power(c, gamma) * (power(so_choices_pair(m), delta) - power(c, 2 * delta));
}

SelfDualCount count_self_dual(std::size_t delta, unsigned m)
{
    Natural formula = power(Natural(m + 1), delta);
    Natural actual = (m % 2 == 0) ? formula : Natural(0);
    return {std::move(formula), std::move(actual)};
}

bool nontrivial_exists(std::uint64_t p, std::size_t n)
{
    validate_length(p, n);
    const std::uint64_t minus_one = (n - 1) % n;
    std::uint64_t v = p % n;
    for (std::size_t i = 0; i < n; ++i) {
        if (v == minus_one)
            return false;
        v = (v * (p % n)) % n;
    }
    return true;
}

CodeCounts compute_counts(std::uint64_t p, unsigned m, std::size_t n)
{
    const RingParams ring(p, m);
    const auto gd = gamma_delta(p, n);
    CodeCounts c;
    c.n = n;
    c.gamma = gd.gamma;
    c.delta = gd.delta;
    c.total_so = count_so(gd.gamma, gd.delta, ring.m());
    c.trivial_so = count_trivial(gd.gamma, gd.delta, ring.m());
    c.nontrivial_so = count_nontrivial(gd.gamma, gd.delta, ring.m());
    auto sd = count_self_dual(gd.delta, ring.m());
    c.selfdual_formula = std::move(sd.formula);
    c.selfdual_actual = std::move(sd.actual);
    return c;
}

const char* to_string(ProfileFilter f) noexcept
{
    switch (f) {
    case ProfileFilter::All: return "all";
    case ProfileFilter::SelfOrthogonal: return "so";
    case ProfileFilter::Trivial: return "trivial";
    case ProfileFilter::NontrivialSelfOrthogonal: return "nontrivial_so";
    case ProfileFilter::SelfDual: return "self_dual";
    }
    return "unknown";
}

std::optional<ProfileFilter> parse_filter(const std::string& name)
{
    if (name == "all")
        return ProfileFilter::All;
    if (name == "so")
        return ProfileFilter::SelfOrthogonal;
    if (name == "trivial")
        return ProfileFilter::Trivial;
    if (name == "nontrivial" || name == "nontrivial_so")
        return ProfileFilter::NontrivialSelfOrthogonal;
    if (name == "sd" || name == "self_dual")
        return ProfileFilter::SelfDual;
    return std::nullopt;
}

bool matches(const ExponentProfile& profile, ProfileFilter filter)
{
    switch (filter) {
    case ProfileFilter::All: return true;
    case ProfileFilter::SelfOrthogonal: return is_self_orthogonal(profile);
    case ProfileFilter::Trivial: return classify_triviality(profile) == Triviality::Trivial;
    case ProfileFilter::NontrivialSelfOrthogonal:
        return classify_triviality(profile) == Triviality::Nontrivial;
    case ProfileFilter::SelfDual: return is_self_dual(profile);
    }
    return false;
}

ProfileEnumerator::ProfileEnumerator(std::shared_ptr<const FactorBasis> basis, ProfileFilter filter)
    : basis_(std::move(basis)), filter_(filter), current_(basis_->size(), 0)
{
}

bool ProfileEnumerator::advance()
{
    const unsigned m = basis_->ring.m();
    for (std::size_t k = current_.size(); k-- > 0;) {
        if (current_[k] < m) {
            ++current_[k];
            return true;
        }
        current_[k] = 0;
    }
    return false;
}

std::optional<ExponentProfile> ProfileEnumerator::next()
{
    while (!done_) {
        if (!started_) {
            started_ = true;
        } else if (!advance()) {
            done_ = true;
            break;
        }
        ExponentProfile candidate(basis_, current_);
        if (matches(candidate, filter_))
            return candidate;
    }
    return std::nullopt;
}

Natural profile_box_size(const FactorBasis& basis)
{
    return power(Natural(basis.ring.m() + 1), basis.size());
}

std::vector<ExponentProfile> enumerate_profiles(std::shared_ptr<const FactorBasis> basis,
                                                ProfileFilter filter, std::uint64_t budget)
{
    if (profile_box_size(*basis) > budget)
        throw Error(Errc::BudgetExceeded, "profile box " + to_string(profile_box_size(*basis)) +
                                              " exceeds the budget of " + std::to_string(budget));
    std::vector<ExponentProfile> out;
    ProfileEnumerator walk(std::move(basis), filter);
    while (auto profile = walk.next())
        out.push_back(std::move(*profile));
    return out;
}

Natural euclidean_weight(std::span<const Coeff> word, const RingParams& ring)
{
    Natural total = 0;
    for (auto c : word) {
        const Coeff e = ring.reduce(c);
        const Coeff near = std::min(e, ring.modulus() - e);
        total += Natural(near) * near;
    }
    return total;
}

const char* to_string(SelfDualType t) noexcept
{
    return t == SelfDualType::TypeI ? "type_I" : "type_II";
}

SelfDualType classify_type(const ExponentProfile& profile, std::uint64_t budget)
{
    if (!is_self_dual(profile))
        throw Error(Errc::NotSelfDual, "profile " + to_text(profile) + " is not self-dual");
    const auto& ring = profile.basis().ring;
    const SpanBasis span = code_span(profile);
    const auto divisor = static_cast<unsigned __int128>(ring.modulus()) * ring.p();
    const Coeff q = ring.modulus();
    bool witness = false;
    for_each_codeword(span, budget, [&](std::span<const Coeff> word) {
        unsigned __int128 weight = 0;
        for (auto e : word) {
            const Coeff near = std::min(e, q - e);
            weight += static_cast<unsigned __int128>(near) * near;
        }
        if (weight % divisor != 0) {
            witness = true;
            return false;
        }
        return true;
    });
    return witness ? SelfDualType::TypeI : SelfDualType::TypeII;
}

} // namespace zpm
