#include "hermlie/spectrum.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hermlie/errors.hpp"
#include "hermlie/gammafn.hpp"

namespace hermlie::spectrum {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct GammaArg {
    Rat value;
    const char* name;
};

void require_nonsu(const GroupDatum& d) {
    if (d.is_su())
        throw UnsupportedCase("eigenvalues are implemented for the non-su cases only");
}

std::array<GammaArg, 4> gamma_args(const GroupDatum& d, int k, const Rat& nu) {
    return {GammaArg{(nu - d.rho + d.a1 + 2) / 2, "Gamma((nu-rho+a1+2)/2)"},
            GammaArg{nu / 2, "Gamma(nu/2)"},
            GammaArg{(Rat(d.rho) - nu) / 2, "Gamma((rho-nu)/2)"},
            GammaArg{(nu + d.a1 + 1) / 2 + k, "Gamma((nu+a1+1)/2+k)"}};
}

bool is_gamma_pole(const Rat& x) { return is_integer(x) && x <= 0; }

/// Exact Pochhammer ((-nu+a1+1)/2)_k.
Rat pochhammer(const Rat& base, int k) {
    Rat prod = 1;
    for (int j = 0; j < k; ++j) prod *= base + j;
    return prod;
}

/// Gamma at a half-integer argument as rational * pi^{p/2}, p in {0,1}.
/// Upward recursion from Gamma(1/2) = sqrt(pi) resp. Gamma(1) = 1.
std::pair<Rat, int> gamma_half_integer(const Rat& x) {
    Rat two_x = 2 * x;
    if (!is_integer(two_x)) throw ConsistencyError("gamma_half_integer: not a half-integer");
    if (is_gamma_pole(x)) throw PoleError("Gamma pole at " + rat_string(x), "");
    Rat r = 1;
    Rat t = x;
    while (t > 1) {
        t -= 1;
        r *= t;
    }
    while (t < Rat(1, 2)) {
        r /= t;
        t += 1;
    }
    if (t == 1) return {r, 0};
    return {r, 1};  // t == 1/2
}

int gamma_sign(const Rat& x) {
    if (x > 0) return 1;
    // x in (-m-1, -m): negative for even m (poles were rejected upstream)
    Rat neg = -x;
    BigInt m = numerator(neg) / denominator(neg);
    return (m % 2 == 0) ? -1 : 1;
}

double gamma_float(double x) { return lanczos_gamma(x); }

}  // namespace

bool has_pole(const GroupDatum& d, int k, const Rat& nu) {
    require_nonsu(d);
    Rat poch = pochhammer((-nu + d.a1 + 1) / 2, k);
    if (poch == 0) return false;
    auto args = gamma_args(d, k, nu);
    return is_gamma_pole(args[0].value) || is_gamma_pole(args[1].value);
}

EigenvalueResult eigenvalue(const GroupDatum& d, int k, const Rat& nu) {
    require_nonsu(d);
    if (k < 0) throw PreconditionError("eigenvalue: k must be >= 0");

    EigenvalueResult res;
    Rat poch = pochhammer((-nu + d.a1 + 1) / 2, k);
    if (poch == 0) {
        // analytic zero: the Pochhammer factor annihilates the whole value
        res.kind = EigenvalueResult::Kind::exact_zero;
        res.rational = 0;
        res.value = 0.0;
        return res;
    }

    auto args = gamma_args(d, k, nu);
    for (int i = 0; i < 2; ++i)
        if (is_gamma_pole(args[i].value))
            throw PoleError("eigenvalue diverges at nu = " + rat_string(nu) + ": " +
                                args[i].name + " has a pole",
                            args[i].name);
    // poles in the denominator would force a zero; they do not occur for the
    // supported parameter ranges but are rejected for cleanliness
    for (int i = 2; i < 4; ++i)
        if (is_gamma_pole(args[i].value))
            throw PoleError("eigenvalue: denominator factor " + std::string(args[i].name) +
                                " hits a pole at nu = " + rat_string(nu),
                            args[i].name);

    if (is_integer(nu)) {
        auto [ra, pa] = gamma_half_integer(args[0].value);
        auto [rb, pb] = gamma_half_integer(args[1].value);
        auto [rc, pc] = gamma_half_integer(args[2].value);
        auto [rd, pd] = gamma_half_integer(args[3].value);
        BigInt nu_int = to_bigint(nu);
        Rat two_pow;
        if (nu_int >= 0) {
            two_pow = Rat(BigInt(1) << static_cast<unsigned>(nu_int.convert_to<long>()));
        } else {
            two_pow = Rat(BigInt(1), BigInt(1) << static_cast<unsigned>((-nu_int).convert_to<long>()));
        }
        res.kind = EigenvalueResult::Kind::exact;
        res.rational = two_pow * poch * ra * rb / (rc * rd);
        res.pi_half_power = pa + pb - pc - pd;
        res.value = to_double(res.rational) * std::pow(kPi, res.pi_half_power / 2.0);
        return res;
    }

    res.kind = EigenvalueResult::Kind::floating;
    res.value = eigenvalue_float(d, k, nu);
    return res;
}

EigenvalueResult eigenvalue(const EigenvalueQuery& q) {
    return eigenvalue(q.datum, q.k, q.nu);
}

double eigenvalue_float(const GroupDatum& d, int k, const Rat& nu) {
    require_nonsu(d);
    Rat poch_exact = pochhammer((-nu + d.a1 + 1) / 2, k);
    if (poch_exact == 0) return 0.0;
    auto args = gamma_args(d, k, nu);
    for (const auto& a : args)
        if (is_gamma_pole(a.value))
            throw PoleError("eigenvalue_float: " + std::string(a.name) + " has a pole at nu = " +
                                rat_string(nu),
                            a.name);
    double x = to_double(nu);
    double val = std::pow(2.0, x) * to_double(poch_exact);
    val *= gamma_float(to_double(args[0].value)) * gamma_float(to_double(args[1].value));
    val /= gamma_float(to_double(args[2].value)) * gamma_float(to_double(args[3].value));
    return val;
}

Rat eigenvalue_ratio(const GroupDatum& d, int k, const Rat& nu) {
    require_nonsu(d);
    Rat num = pochhammer((-nu + d.a1 + 1) / 2, k);
    Rat den = pochhammer((nu + d.a1 + 1) / 2, k);
    if (den == 0)
        throw PoleError("eigenvalue_ratio: denominator Pochhammer vanishes at nu = " +
                            rat_string(nu),
                        "((nu+a1+1)/2)_k");
    return num / den;
}

int eigenvalue_sign(const GroupDatum& d, int k, const Rat& nu) {
    require_nonsu(d);
    Rat poch = pochhammer((-nu + d.a1 + 1) / 2, k);
    if (poch == 0) return 0;
    auto args = gamma_args(d, k, nu);
    for (const auto& a : args)
        if (is_gamma_pole(a.value))
            throw PoleError("eigenvalue_sign: " + std::string(a.name) + " has a pole at nu = " +
                                rat_string(nu),
                            a.name);
    int s = poch > 0 ? 1 : -1;
    s *= gamma_sign(args[0].value) * gamma_sign(args[1].value);
    s *= gamma_sign(args[2].value) * gamma_sign(args[3].value);  // signs are involutive
    return s;
}

namespace {

SignEntry sample_entry(const GroupDatum& d, int k, const Rat& nu) {
    Rat r = eigenvalue_ratio(d, k, nu);
    return {nu, k, r > 0 ? 1 : (r < 0 ? -1 : 0)};
}

}  // namespace

SpectralReport complementary_window(const GroupDatum& d, int kmax, const Rat& step,
                                    Execution ex) {
    require_nonsu(d);
    if (kmax < 1) throw PreconditionError("complementary_window: k-max must be >= 1");
    if (step <= 0) throw PreconditionError("complementary_window: grid step must be > 0");
    Rat nu0 = Rat(*d.nu0);

    SpectralReport rep;
    rep.datum = d;
    rep.window = {-nu0, nu0};

    // grid over (0, nu0) with an exclusion margin at the endpoint, then
    // (nu0, nu0 + 2)
    const Rat margin(1, 1000000);
    std::vector<Rat> inside, beyond;
    for (Rat nu = step; nu < nu0 - margin; nu += step) inside.push_back(nu);
    for (Rat nu = nu0 + step; nu < nu0 + 2; nu += step) beyond.push_back(nu);

    std::vector<Rat> samples = inside;
    samples.insert(samples.end(), beyond.begin(), beyond.end());
    std::vector<SignEntry> table(samples.size() * kmax);

    auto fill = [&](std::size_t i) {
        for (int k = 1; k <= kmax; ++k)
            table[i * kmax + (k - 1)] = sample_entry(d, k, samples[i]);
    };
#ifdef _OPENMP
    if (ex == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < static_cast<long>(samples.size()); ++i) fill(i);
    } else
#else
    (void)ex;
#endif
    {
        for (std::size_t i = 0; i < samples.size(); ++i) fill(i);
    }
    rep.sign_table = std::move(table);

    rep.positive_inside = true;
    for (std::size_t i = 0; i < inside.size(); ++i)
        for (int k = 1; k <= kmax; ++k)
            if (rep.sign_table[i * kmax + (k - 1)].sign <= 0) rep.positive_inside = false;
    if (!rep.positive_inside)
        throw ConsistencyError("complementary_window: normalized coefficient not positive "
                               "inside the window for " + d.name());

    rep.sign_change_beyond = false;
    for (std::size_t i = inside.size(); i < samples.size(); ++i)
        for (int k = 1; k <= kmax; ++k)
            if (rep.sign_table[i * kmax + (k - 1)].sign < 0) rep.sign_change_beyond = true;

    for (int k = 1; k <= kmax; ++k)
        if (eigenvalue_ratio(d, k, nu0) == 0) rep.kernel_at_endpoint.push_back(k);

    // float cross-check of the normalized ratio away from raw poles
    double worst = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Rat& nu = samples[i];
        if (has_pole(d, 0, nu)) continue;
        double a0 = eigenvalue_float(d, 0, nu);
        for (int k = 1; k <= kmax; ++k) {
            double exact = to_double(eigenvalue_ratio(d, k, nu));
            double approx = eigenvalue_float(d, k, nu) / a0;
            double denom = std::max(1e-300, std::fabs(exact));
            worst = std::max(worst, std::fabs(exact - approx) / denom);
        }
    }
    rep.max_float_mismatch = worst;
    return rep;
}

nlohmann::json SpectralReport::to_json() const {
    nlohmann::json j;
    j["case"] = datum.name();
    j["window"] = {rat_string(window.first), rat_string(window.second)};
    j["kernel_at_endpoint"] = kernel_at_endpoint;
    j["positive_inside"] = positive_inside;
    j["sign_change_beyond"] = sign_change_beyond;
    j["max_float_mismatch"] = max_float_mismatch;
    j["weight_exponent"] = "d1-nu with d1 = " + std::to_string(datum.d1);
    nlohmann::json signs = nlohmann::json::array();
    for (const auto& e : sign_table)
        signs.push_back({{"nu", rat_string(e.nu)}, {"k", e.k}, {"sign", e.sign}});
    j["signs"] = signs;
    return j;
}

FourierExponents fourier_exponents(const GroupDatum& d, const Rat& nu) {
    FourierExponents fe{d.d1, Rat(d.d1) - nu, std::nullopt, nu - d.rho};
    if (d.nu0) {
        fe.ntm = Rat(d.d1 - *d.nu0);
        if (!d.is_su() && *fe.ntm != 2 * d.b1 + 1)
            throw ConsistencyError("fourier_exponents: d1 - nu0 != 2 b1 + 1 for " + d.name());
        if (d.cs == Case::so2n && *d.nu0 - d.rho != -2)
            throw ConsistencyError("fourier_exponents: nu0 - rho != -2 for " + d.name());
    }
    return fe;
}

}  // namespace hermlie::spectrum
