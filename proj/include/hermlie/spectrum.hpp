#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hermlie/groups.hpp"
#include "hermlie/rational.hpp"

namespace hermlie::spectrum {

/// Intertwining eigenvalue a_k(nu) for the non-su cases:
///
///   a_k(nu) = 2^nu ((-nu+a1+1)/2)_k G(A) G(B) / (G(C) G(D)),
///   A = (nu-rho+a1+2)/2, B = nu/2, C = (rho-nu)/2, D = (nu+a1+1)/2 + k.
///
/// A vanishing Pochhammer factor forces the value to zero before any Gamma
/// factor is consulted; otherwise Gamma poles raise PoleError.
struct EigenvalueResult {
    enum class Kind { exact_zero, exact, floating };
    Kind kind;
    // exact kinds: value = rational * pi^{pi_half_power/2}
    Rat rational;
    int pi_half_power = 0;
    double value = 0.0;  // numeric value in every kind

    bool is_zero() const { return kind == Kind::exact_zero; }
    bool is_rational() const { return kind != Kind::floating && pi_half_power == 0; }
};

struct EigenvalueQuery {
    GroupDatum datum;
    int k = 0;
    Rat nu;
};

/// Exact for integer nu (every Gamma argument is a half-integer), floating
/// via the Lanczos path otherwise.
EigenvalueResult eigenvalue(const EigenvalueQuery& q);
EigenvalueResult eigenvalue(const GroupDatum& d, int k, const Rat& nu);

/// Pure floating-point evaluation (Lanczos Gamma); poles still detected
/// exactly on rational input before evaluation.
double eigenvalue_float(const GroupDatum& d, int k, const Rat& nu);

/// Normalized coefficient a_k(nu)/a_0(nu); the shared Gamma factors cancel,
/// leaving a Pochhammer quotient that is exact for every rational nu.
Rat eigenvalue_ratio(const GroupDatum& d, int k, const Rat& nu);

/// Exact sign of a_k(nu) from the factor signs; PoleError at poles.
int eigenvalue_sign(const GroupDatum& d, int k, const Rat& nu);

/// True iff a_k(nu) has a Gamma pole (the Pochhammer zero wins when both).
bool has_pole(const GroupDatum& d, int k, const Rat& nu);

struct SignEntry {
    Rat nu;
    int k;
    int sign;  // sign of a_k(nu)/a_0(nu)
};

struct SpectralReport {
    GroupDatum datum;
    std::pair<Rat, Rat> window;         // (-nu0, nu0)
    std::vector<int> kernel_at_endpoint;
    std::vector<SignEntry> sign_table;
    bool positive_inside = false;       // all normalized signs +1 on (0, nu0)
    bool sign_change_beyond = false;    // some negative sign on (nu0, nu0+2)
    double max_float_mismatch = 0.0;    // exact vs floating ratio, relative
    nlohmann::json to_json() const;
};

enum class Execution { serial, parallel };

/// Samples the normalized coefficients over (0, nu0) and (nu0, nu0+2) on the
/// given grid; positivity inside the window is asserted (falsification error
/// otherwise) and the kernel index set at nu0 is collected.
SpectralReport complementary_window(const GroupDatum& d, int kmax, const Rat& step,
                                    Execution ex = Execution::parallel);

struct FourierExponents {
    int plancherel;        // d1
    Rat form;              // d1 - nu
    std::optional<Rat> ntm;        // d1 - nu0
    Rat h_action;          // nu - rho
};

/// Exponent bookkeeping for the Fourier-side measures and the B-action.
FourierExponents fourier_exponents(const GroupDatum& d, const Rat& nu);

}  // namespace hermlie::spectrum
