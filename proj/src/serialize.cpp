#include "zpm/serialize.hpp"

#include "json_util.hpp"

namespace zpm {

namespace {

nlohmann::ordered_json poly_json(const Poly& f)
{
    return nlohmann::ordered_json(f.coeff_vector());
}

} // namespace

std::string to_json(const FactorBasis& basis)
{
    nlohmann::ordered_json j;
    j["modulus_kind"] = to_string(basis.kind);
    j["p"] = basis.ring.p();
    j["m"] = basis.ring.m();
    j["n"] = basis.n;
    auto factors = nlohmann::ordered_json::array();
    for (const auto& f : basis.factors)
        factors.push_back(poly_json(f));
    j["factors"] = std::move(factors);
    j["pairing"] = basis.pairing;
    j["gamma"] = basis.gamma;
    j["delta"] = basis.delta;
    return j.dump();
}

std::string to_json(const ExponentProfile& profile)
{
    const auto& basis = profile.basis();
    nlohmann::ordered_json j;
    j["exponents"] = std::vector<unsigned>(profile.exponents().begin(), profile.exponents().end());
    auto order = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < basis.size(); ++k)
        order.push_back(std::string(basis.self_paired(k) ? "self_reciprocal:" : "pair:") +
                        to_text(basis.factors[k]));
    j["basis_order"] = std::move(order);
    return j.dump();
}

std::string to_json(const CodeCounts& c)
{
    nlohmann::ordered_json j;
    j["n"] = c.n;
    j["gamma"] = c.gamma;
    j["delta"] = c.delta;
    j["N_t"] = detail::natural_json(c.trivial_so);
    j["N_n"] = detail::natural_json(c.nontrivial_so);
    j["N_sd_formula"] = detail::natural_json(c.selfdual_formula);
    j["N_sd_actual"] = detail::natural_json(c.selfdual_actual);
    j["total_so"] = detail::natural_json(c.total_so);
    return j.dump();
}

std::string counts_csv_header() { return "n,gamma,delta,N_t,N_n,N_sd_formula,N_sd_actual"; }

std::string to_csv(const CodeCounts& c)
{
    return std::to_string(c.n) + ',' + std::to_string(c.gamma) + ',' + std::to_string(c.delta) +
           ',' + to_string(c.trivial_so) + ',' + to_string(c.nontrivial_so) + ',' +
           to_string(c.selfdual_formula) + ',' + to_string(c.selfdual_actual);
}

} // namespace zpm
