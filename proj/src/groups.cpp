#include "hermlie/groups.hpp"

#include "hermlie/errors.hpp"

namespace hermlie {

std::string case_name(Case c) {
    switch (c) {
        case Case::su: return "su";
        case Case::so2n: return "so2n";
        case Case::sostar: return "sostar";
        case Case::e6: return "e6";
        case Case::e7: return "e7";
    }
    return "?";
}

std::string GroupDatum::name() const {
    switch (cs) {
        case Case::su: return "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
        case Case::so2n: return "so(2," + std::to_string(n) + ")";
        case Case::sostar: return "so*(" + std::to_string(2 * n) + ")";
        case Case::e6: return "e6(-14)";
        case Case::e7: return "e7(-25)";
    }
    return "?";
}

GroupDatum datum_su(int p, int q) {
    if (p < 2 || q < 2) throw RangeError("su(p,q) needs p, q >= 2");
    GroupDatum d;
    d.cs = Case::su;
    d.p = p;
    d.q = q;
    d.a1 = 0;
    d.b1_su = {p - 2, q - 2};
    d.d1 = p + q - 2;
    d.rho = d.d1 + 1;
    if ((p - q) % 2 == 0) d.nu0 = 1;
    return d;
}

GroupDatum datum_so2n(int n) {
    if (n < 5) throw RangeError("so(2,n) supported for n >= 5");
    GroupDatum d;
    d.cs = Case::so2n;
    d.n = n;
    d.a1 = n - 4;
    d.b1 = 0;
    d.d1 = n - 2;
    d.rho = d.d1 + 1;
    d.nu0 = d.a1 + 1;
    return d;
}

GroupDatum datum_sostar(int n) {
    if (n < 4) throw RangeError("so*(2n) supported for n >= 4");
    GroupDatum d;
    d.cs = Case::sostar;
    d.n = n;
    d.a1 = 2;
    d.b1 = n - 4;
    d.d1 = 2 * n - 4;
    d.rho = d.d1 + 1;
    d.nu0 = d.a1 + 1;
    return d;
}

GroupDatum datum_e6() {
    GroupDatum d;
    d.cs = Case::e6;
    d.a1 = 4;
    d.b1 = 2;
    d.d1 = 10;
    d.rho = 11;
    d.nu0 = 5;
    return d;
}

GroupDatum datum_e7() {
    GroupDatum d;
    d.cs = Case::e7;
    d.a1 = 6;
    d.b1 = 4;
    d.d1 = 16;
    d.rho = 17;
    d.nu0 = 7;
    return d;
}

GroupDatum group_datum(const std::string& label, const std::vector<int>& params) {
    if (label == "su") {
        if (params.size() != 2) throw RangeError("su takes p q");
        return datum_su(params[0], params[1]);
    }
    if (label == "so2n") {
        if (params.size() != 1) throw RangeError("so2n takes n");
        return datum_so2n(params[0]);
    }
    if (label == "sostar") {
        if (params.size() != 1) throw RangeError("sostar takes n (algebra so*(2n))");
        return datum_sostar(params[0]);
    }
    if (label == "e6") return datum_e6();
    if (label == "e7") return datum_e7();
    if (label == "sp")
        throw UnsupportedCase("sp(n,R) is outside the supported families");
    throw UnsupportedCase("unknown case label: " + label);
}

std::vector<GroupDatum> table1_sweep() {
    std::vector<GroupDatum> out;
    for (int n = 5; n <= 12; ++n) out.push_back(datum_so2n(n));
    for (int n = 5; n <= 10; ++n) out.push_back(datum_sostar(n));
    for (int p = 2; p <= 6; ++p)
        for (int q = 2; q <= p; ++q) out.push_back(datum_su(p, q));
    out.push_back(datum_e6());
    out.push_back(datum_e7());
    return out;
}

}  // namespace hermlie
