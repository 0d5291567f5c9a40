#include "zpm/cli.hpp"
#include "zpm/oracle.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace zpm;

namespace {

// Naturals cross the boundary as Python ints.
py::int_ to_py(const Natural& x)
{
    return py::int_(py::str(to_string(x)));
}

std::shared_ptr<const FactorBasis> basis_for(std::uint64_t p, unsigned m, std::size_t n,
                                             const std::string& modulus)
{
    ModulusKind kind;
    if (modulus == "standard")
        kind = ModulusKind::Standard;
    else if (modulus == "shifted")
        kind = ModulusKind::Shifted;
    else
        throw Error(Errc::InvalidArgument, "modulus must be 'standard' or 'shifted'");
    return std::make_shared<const FactorBasis>(hensel_lift(p, m, n, kind));
}

ExponentProfile profile_for(std::uint64_t p, unsigned m, std::size_t n,
                            std::vector<unsigned> exponents)
{
    return ExponentProfile(basis_for(p, m, n, "shifted"), std::move(exponents));
}

std::vector<unsigned> exps(const ExponentProfile& profile)
{
    return {profile.exponents().begin(), profile.exponents().end()};
}

py::dict factor(std::uint64_t p, unsigned m, std::size_t n, const std::string& modulus)
{
    const auto basis = basis_for(p, m, n, modulus);
    py::list factors, text;
    for (const auto& f : basis->factors) {
        factors.append(f.coeff_vector());
        text.append(to_text(f));
    }
    py::dict d;
    d["factors"] = factors;
    d["factor_text"] = text;
    d["pairing"] = basis->pairing;
    d["gamma"] = basis->gamma;
    d["delta"] = basis->delta;
    return d;
}

py::dict counts(std::uint64_t p, unsigned m, std::size_t n)
{
    const auto c = compute_counts(p, m, n);
    py::dict d;
    d["n"] = c.n;
    d["gamma"] = c.gamma;
    d["delta"] = c.delta;
    d["total_so"] = to_py(c.total_so);
    d["trivial_so"] = to_py(c.trivial_so);
    d["nontrivial_so"] = to_py(c.nontrivial_so);
    d["selfdual_formula"] = to_py(c.selfdual_formula);
    d["selfdual_actual"] = to_py(c.selfdual_actual);
    return d;
}

py::list enumerate_codes(std::uint64_t p, unsigned m, std::size_t n, const std::string& filter_name,
                   bool reduced, std::uint64_t limit)
{
    const auto filter = parse_filter(filter_name);
    if (!filter)
        throw Error(Errc::InvalidArgument, "unknown filter '" + filter_name + "'");
    const auto basis = basis_for(p, m, n, "shifted");
    const auto budget = Budgets::from_env().profiles;
    if (profile_box_size(*basis) > budget)
        throw Error(Errc::BudgetExceeded, "profile box exceeds the budget of " + std::to_string(budget));
    const auto form = reduced ? GeneratorForm::Reduced : GeneratorForm::Product;
    py::list out;
    ProfileEnumerator walk(basis, *filter);
    for (std::uint64_t k = 0; limit == 0 || k < limit; ++k) {
        auto profile = walk.next();
        if (!profile)
            break;
        out.append(py::make_tuple(py::tuple(py::cast(exps(*profile))),
                                  generator_polynomial(*profile, form).coeff_vector()));
    }
    return out;
}

py::dict describe(std::uint64_t p, unsigned m, std::size_t n, std::vector<unsigned> exponents)
{
    const auto profile = profile_for(p, m, n, std::move(exponents));
    py::dict d;
    d["exponents"] = exps(profile);
    d["generator"] = generator_polynomial(profile, GeneratorForm::Product).coeff_vector();
    d["generator_reduced"] = generator_polynomial(profile, GeneratorForm::Reduced).coeff_vector();
    d["dual_exponents"] = exps(dual_profile(profile));
    d["cardinality"] = to_py(cardinality(profile));
    d["self_orthogonal"] = is_self_orthogonal(profile);
    d["self_dual"] = is_self_dual(profile);
    d["triviality"] = to_string(classify_triviality(profile));
    return d;
}

py::tuple run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Cyclic self-orthogonal and self-dual codes over Z/p^m";

    py::register_exception<Error>(m, "ZpmError", PyExc_ValueError);

    m.def("gamma_delta", [](std::uint64_t p, std::size_t n) {
        const auto gd = gamma_delta(p, n);
        return py::make_tuple(gd.gamma, gd.delta);
    }, py::arg("p"), py::arg("n"));
    m.def("factor", &factor, py::arg("p"), py::arg("m"), py::arg("n"),
          py::arg("modulus") = "standard");
    m.def("counts", &counts, py::arg("p"), py::arg("m"), py::arg("n"));
    m.def("nontrivial_exists", &nontrivial_exists, py::arg("p"), py::arg("n"));
    m.def("enumerate_codes", &enumerate_codes, py::arg("p"), py::arg("m"), py::arg("n"),
          py::arg("filter") = "all", py::arg("reduced") = false, py::arg("limit") = 0);
    m.def("describe", &describe, py::arg("p"), py::arg("m"), py::arg("n"), py::arg("exponents"));
    m.def("dual_profile", [](std::uint64_t p, unsigned m_, std::size_t n, std::vector<unsigned> a) {
        return exps(dual_profile(profile_for(p, m_, n, std::move(a))));
    }, py::arg("p"), py::arg("m"), py::arg("n"), py::arg("exponents"));
    m.def("is_self_orthogonal", [](std::uint64_t p, unsigned m_, std::size_t n, std::vector<unsigned> a) {
        return is_self_orthogonal(profile_for(p, m_, n, std::move(a)));
    }, py::arg("p"), py::arg("m"), py::arg("n"), py::arg("exponents"));
    m.def("is_self_dual", [](std::uint64_t p, unsigned m_, std::size_t n, std::vector<unsigned> a) {
        return is_self_dual(profile_for(p, m_, n, std::move(a)));
    }, py::arg("p"), py::arg("m"), py::arg("n"), py::arg("exponents"));
    m.def("cardinality", [](std::uint64_t p, unsigned m_, std::size_t n, std::vector<unsigned> a) {
        return to_py(cardinality(profile_for(p, m_, n, std::move(a))));
    }, py::arg("p"), py::arg("m"), py::arg("n"), py::arg("exponents"));
    m.def("classify_type", [](std::uint64_t p, unsigned m_, std::size_t n, std::vector<unsigned> a,
                              std::uint64_t budget) {
        return std::string(to_string(classify_type(profile_for(p, m_, n, std::move(a)), budget)));
    }, py::arg("p"), py::arg("m"), py::arg("n"), py::arg("exponents"),
       py::arg("budget") = Budgets{}.codewords);
    m.def("euclidean_weight", [](const std::vector<Coeff>& word, std::uint64_t p, unsigned m_) {
        return to_py(euclidean_weight(word, RingParams(p, m_)));
    }, py::arg("word"), py::arg("p"), py::arg("m"));
    m.def("verify_json", [](std::uint64_t p, unsigned m_, std::size_t n) {
        py::gil_scoped_release release;
        return to_json(crosscheck(p, m_, n, Budgets::from_env()));
    }, py::arg("p"), py::arg("m"), py::arg("n"));
    m.def("run_cli", &run, py::arg("args"),
          "Runs the command-line front end in-process; returns (exit_code, stdout, stderr).");
}
