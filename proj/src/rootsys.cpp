#include "hermlie/rootsys.hpp"

#include <algorithm>
#include <set>

#include "hermlie/errors.hpp"
#include "hermlie/linalg.hpp"

namespace hermlie {

namespace {

Weight unit(std::size_t i, std::size_t dim) { return Weight::unit(i, dim); }

// Spinor-type weight 1/2(sum s_i e_i - e6 - e7 + e8), signs s in {-1,1}^5.
Weight e6_spinor(const std::array<int, 5>& s) {
    Weight w(8);
    for (int i = 0; i < 5; ++i) w[i] = Rat(s[i], 2);
    w[5] = Rat(-1, 2);
    w[6] = Rat(-1, 2);
    w[7] = Rat(1, 2);
    return w;
}

Weight e7_spinor(const std::array<int, 6>& s) {
    Weight w(8);
    for (int i = 0; i < 6; ++i) w[i] = Rat(s[i], 2);
    w[6] = Rat(-1, 2);
    w[7] = Rat(1, 2);
    return w;
}

}  // namespace

std::string RootSystem::label() const {
    switch (type) {
        case RootType::A: return "A" + std::to_string(rank);
        case RootType::B: return "B" + std::to_string(rank);
        case RootType::C: return "C" + std::to_string(rank);
        case RootType::D: return "D" + std::to_string(rank);
        case RootType::E6: return "E6";
        case RootType::E7: return "E7";
    }
    return "?";
}

bool RootSystem::is_root(const Weight& w) const {
    for (const auto& r : positive)
        if (r == w || r == -w) return true;
    return false;
}

std::vector<Weight> RootSystem::noncompact_positive() const {
    if (!noncompact) throw PreconditionError("root system carries no compact/noncompact split");
    std::vector<Weight> out;
    for (std::size_t i = 0; i < positive.size(); ++i)
        if ((*noncompact)[i]) out.push_back(positive[i]);
    return out;
}

RootSystem build_root_system(RootType type, int rank, SplitKind split) {
    RootSystem sys;
    sys.type = type;
    sys.rank = rank;

    switch (type) {
        case RootType::A: {
            if (rank < 1) throw UnsupportedCase("type A needs rank >= 1");
            std::size_t d = rank + 1;
            sys.ambient = d;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = i + 1; j < d; ++j)
                    sys.positive.push_back(unit(i, d) - unit(j, d));
            for (int i = 0; i < rank; ++i) sys.simple.push_back(unit(i, d) - unit(i + 1, d));
            break;
        }
        case RootType::B: {
            if (rank < 2) throw UnsupportedCase("type B needs rank >= 2");
            std::size_t d = rank;
            sys.ambient = d;
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = i + 1; j < d; ++j) {
                    sys.positive.push_back(unit(i, d) - unit(j, d));
                    sys.positive.push_back(unit(i, d) + unit(j, d));
                }
                sys.positive.push_back(unit(i, d));
            }
            for (int i = 0; i + 1 < rank; ++i) sys.simple.push_back(unit(i, d) - unit(i + 1, d));
            sys.simple.push_back(unit(rank - 1, d));
            break;
        }
        case RootType::C: {
            if (rank < 2) throw UnsupportedCase("type C needs rank >= 2");
            std::size_t d = rank;
            sys.ambient = d;
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = i + 1; j < d; ++j) {
                    sys.positive.push_back(unit(i, d) - unit(j, d));
                    sys.positive.push_back(unit(i, d) + unit(j, d));
                }
                sys.positive.push_back(Rat(2) * unit(i, d));
            }
            for (int i = 0; i + 1 < rank; ++i) sys.simple.push_back(unit(i, d) - unit(i + 1, d));
            sys.simple.push_back(Rat(2) * unit(rank - 1, d));
            break;
        }
        case RootType::D: {
            if (rank < 2) throw UnsupportedCase("type D needs rank >= 2");
            std::size_t d = rank;
            sys.ambient = d;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = i + 1; j < d; ++j) {
                    sys.positive.push_back(unit(i, d) - unit(j, d));
                    sys.positive.push_back(unit(i, d) + unit(j, d));
                }
            for (int i = 0; i + 1 < rank; ++i) sys.simple.push_back(unit(i, d) - unit(i + 1, d));
            sys.simple.push_back(unit(rank - 2, d) + unit(rank - 1, d));
            break;
        }
        case RootType::E6: {
            if (rank != 6) throw UnsupportedCase("E6 has rank 6");
            sys.ambient = 8;
            // e_j +- e_i for 5 >= j > i >= 1 (compact half of the split)
            for (std::size_t j = 1; j < 5; ++j)
                for (std::size_t i = 0; i < j; ++i) {
                    sys.positive.push_back(unit(j, 8) + unit(i, 8));
                    sys.positive.push_back(unit(j, 8) - unit(i, 8));
                }
            // spinor-type roots with an even number of minus signs
            std::array<int, 5> s;
            for (int mask = 0; mask < 32; ++mask) {
                int minus = 0;
                for (int i = 0; i < 5; ++i) {
                    s[i] = (mask >> i) & 1 ? -1 : 1;
                    if (s[i] < 0) ++minus;
                }
                if (minus % 2 == 0) sys.positive.push_back(e6_spinor(s));
            }
            Weight a1(8);
            a1[0] = Rat(1, 2);
            for (int i = 1; i < 7; ++i) a1[i] = Rat(-1, 2);
            a1[7] = Rat(1, 2);
            sys.simple.push_back(a1);
            sys.simple.push_back(unit(0, 8) + unit(1, 8));
            for (int j = 3; j <= 6; ++j) sys.simple.push_back(unit(j - 2, 8) - unit(j - 3, 8));
            break;
        }
        case RootType::E7: {
            if (rank != 7) throw UnsupportedCase("E7 has rank 7");
            sys.ambient = 8;
            for (std::size_t j = 1; j < 6; ++j)
                for (std::size_t i = 0; i < j; ++i) {
                    sys.positive.push_back(unit(j, 8) + unit(i, 8));
                    sys.positive.push_back(unit(j, 8) - unit(i, 8));
                }
            sys.positive.push_back(unit(7, 8) - unit(6, 8));
            std::array<int, 6> s;
            for (int mask = 0; mask < 64; ++mask) {
                int minus = 0;
                for (int i = 0; i < 6; ++i) {
                    s[i] = (mask >> i) & 1 ? -1 : 1;
                    if (s[i] < 0) ++minus;
                }
                if (minus % 2 == 1) sys.positive.push_back(e7_spinor(s));
            }
            Weight a1(8);
            a1[0] = Rat(1, 2);
            for (int i = 1; i < 7; ++i) a1[i] = Rat(-1, 2);
            a1[7] = Rat(1, 2);
            sys.simple.push_back(a1);
            sys.simple.push_back(unit(0, 8) + unit(1, 8));
            for (int j = 3; j <= 7; ++j) sys.simple.push_back(unit(j - 2, 8) - unit(j - 3, 8));
            break;
        }
    }

    if (split != SplitKind::none) {
        std::vector<bool> nc(sys.positive.size(), false);
        for (std::size_t i = 0; i < sys.positive.size(); ++i) {
            const Weight& r = sys.positive[i];
            switch (split) {
                case SplitKind::hermitian_e6:
                    if (type != RootType::E6) throw UnsupportedCase("hermitian_e6 split needs E6");
                    nc[i] = (r[0] == Rat(1, 2) || r[0] == Rat(-1, 2));
                    break;
                case SplitKind::hermitian_e7: {
                    if (type != RootType::E7) throw UnsupportedCase("hermitian_e7 split needs E7");
                    auto c = simple_coefficients(sys, r);
                    nc[i] = !is_integer(c[6] / 2);  // odd coefficient on the last node
                    break;
                }
                case SplitKind::d_u_n: {
                    if (type != RootType::D) throw UnsupportedCase("d_u_n split needs type D");
                    bool has_minus = false;
                    for (std::size_t t = 0; t < sys.ambient; ++t)
                        if (r[t] < 0) has_minus = true;
                    nc[i] = !has_minus;  // e_i + e_j
                    break;
                }
                case SplitKind::bd_so2:
                    if (type != RootType::B && type != RootType::D)
                        throw UnsupportedCase("bd_so2 split needs type B or D");
                    nc[i] = (r[0] != 0);
                    break;
                case SplitKind::a_u2: {
                    if (type != RootType::A) throw UnsupportedCase("a_u2 split needs type A");
                    // positive root e_i - e_j, i < j: noncompact iff i in {1,2} < j
                    std::size_t lo = 0, hi = 0;
                    for (std::size_t t = 0; t < sys.ambient; ++t) {
                        if (r[t] == 1) lo = t;
                        if (r[t] == -1) hi = t;
                    }
                    nc[i] = (lo < 2 && hi >= 2);
                    break;
                }
                case SplitKind::none: break;
            }
        }
        sys.noncompact = std::move(nc);
    }
    return sys;
}

std::vector<Rat> simple_coefficients(const RootSystem& sys, const Weight& w) {
    RatMatrix A(sys.ambient, std::vector<Rat>(sys.simple.size()));
    std::vector<Rat> b(sys.ambient);
    for (std::size_t t = 0; t < sys.ambient; ++t) {
        for (std::size_t j = 0; j < sys.simple.size(); ++j) A[t][j] = sys.simple[j][t];
        b[t] = w[t];
    }
    auto sol = solve_exact(std::move(A), std::move(b));
    if (!sol) throw ConsistencyError("weight " + w.str() + " is not in the root lattice span");
    return *sol;
}

Rat root_height(const RootSystem& sys, const Weight& w) {
    Rat h = 0;
    for (const auto& c : simple_coefficients(sys, w)) h += c;
    return h;
}

std::vector<Weight> hc_cascade(const RootSystem& sys, CascadeDirection dir) {
    std::vector<Weight> remaining = sys.noncompact_positive();
    std::set<Weight> roots;
    for (const auto& r : sys.positive) {
        roots.insert(r);
        roots.insert(-r);
    }
    auto strongly_orthogonal = [&](const Weight& a, const Weight& b) {
        return !roots.count(a + b) && !roots.count(a - b);
    };

    std::vector<Weight> chosen;
    while (!remaining.empty()) {
        std::size_t best = 0;
        Rat best_h = root_height(sys, remaining[0]);
        bool tie = false;
        for (std::size_t i = 1; i < remaining.size(); ++i) {
            Rat h = root_height(sys, remaining[i]);
            bool better = dir == CascadeDirection::lowest ? h < best_h : h > best_h;
            if (better) {
                best = i;
                best_h = h;
                tie = false;
            } else if (h == best_h) {
                tie = true;
            }
        }
        if (tie) throw ConsistencyError("cascade: extremal noncompact root is not unique");
        Weight g = remaining[best];
        chosen.push_back(g);
        std::vector<Weight> next;
        for (const auto& r : remaining)
            if (r != g && strongly_orthogonal(g, r)) next.push_back(r);
        remaining = std::move(next);
    }
    return chosen;
}

std::vector<Weight> fundamental_weights(const std::vector<Weight>& simple) {
    const std::size_t k = simple.size();
    if (k == 0) return {};
    // Cartan system: sum_j c_ij <b_j, b_t^vee> = delta_it
    RatMatrix cartan(k, std::vector<Rat>(k));
    for (std::size_t t = 0; t < k; ++t)
        for (std::size_t j = 0; j < k; ++j)
            cartan[t][j] = Rat(2) * inner(simple[j], simple[t]) / inner(simple[t], simple[t]);
    std::vector<Weight> out;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Rat> rhs(k, Rat(0));
        rhs[i] = 1;
        auto c = solve_exact(cartan, rhs);
        if (!c) throw PreconditionError("fundamental_weights: singular Cartan matrix");
        // verify the solve (rules out an underdetermined/dependent simple set)
        for (std::size_t t = 0; t < k; ++t) {
            Rat s = 0;
            for (std::size_t j = 0; j < k; ++j) s += cartan[t][j] * (*c)[j];
            if (s != (t == i ? Rat(1) : Rat(0)))
                throw PreconditionError("fundamental_weights: simple roots are dependent");
        }
        Weight lam(simple[0].dim());
        for (std::size_t j = 0; j < k; ++j) lam += (*c)[j] * simple[j];
        out.push_back(lam);
    }
    return out;
}

Weight half_sum_positive(const RootSystem& sys) {
    Weight rho(sys.ambient);
    for (const auto& r : sys.positive) rho += r;
    return Rat(1, 2) * rho;
}

}  // namespace hermlie
