#include "ltlab/selftest.hpp"

#include "ltlab/cm_connection.hpp"
#include "ltlab/division_algebra.hpp"
#include "ltlab/lubin_tate.hpp"
#include "ltlab/multizeta.hpp"
#include "ltlab/qsym.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace ltlab {

namespace {

Int rand_int_mod(std::mt19937_64& rng, const Int& m) {
    std::uniform_int_distribution<unsigned long long> d(0, ~0ull);
    Int acc = 0;
    for (int i = 0; i < 4; ++i) acc = (acc << 64) + Int(d(rng));
    return mod_reduce(acc, m);
}

UnramifiedElem rand_scalar(std::mt19937_64& rng, const ModulusPtr& mod, long val_lo, long val_hi) {
    std::uniform_int_distribution<long> dv(val_lo, val_hi);
    for (;;) {
        std::vector<Int> c(static_cast<size_t>(mod->n));
        for (auto& x : c) x = rand_int_mod(rng, mod->p_pow_prec);
        auto e = UnramifiedElem::from_coeffs(mod, std::move(c), dv(rng));
        if (!e.is_zero()) return e;
    }
}

UnramifiedElem rand_w_unit(std::mt19937_64& rng, const ModulusPtr& mod) {
    for (;;) {
        auto e = rand_scalar(rng, mod, 0, 0);
        if (e.val() == 0) return e;
    }
}

ODElem rand_od(std::mt19937_64& rng, const ModulusPtr& mod) {
    std::vector<UnramifiedElem> c;
    for (int i = 0; i < mod->n; ++i) c.push_back(rand_scalar(rng, mod, 0, 2));
    return ODElem::from_coeffs(mod, std::move(c));
}

Rational rand_small_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return Rational(num(rng), den(rng));
}

std::vector<Composition> compositions_of(int k) {
    std::vector<Composition> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    for (int first = 1; first <= k; ++first)
        for (auto& rest : compositions_of(k - first)) {
            Composition c{first};
            c.insert(c.end(), rest.begin(), rest.end());
            out.push_back(std::move(c));
        }
    return out;
}

std::vector<Composition> compositions_up_to(int k) {
    std::vector<Composition> out;
    for (int w = 0; w <= k; ++w)
        for (auto& c : compositions_of(w)) out.push_back(std::move(c));
    return out;
}

}  // namespace

CheckResult check_honda_integrality(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x1ull);
    const int N = 16;
    std::ostringstream detail;
    bool pass = true;
    for (auto [p, n] : std::vector<std::pair<long, int>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}}) {
        Int q = pow_int(Int(p), static_cast<unsigned long>(n));
        int D = static_cast<int>(q) + 2;
        bool fgl_integral = true;
        try {
            auto hd = honda_data(p, n, D);  // throws when F is not integral
            for (int i = 0; i < 5; ++i) {
                Rational a(rand_int_mod(rng, pow_int(Int(p), N)));
                if (!is_p_integral(mult_by(a, hd.log), p)) fgl_integral = false;
            }
        } catch (const std::logic_error&) {
            fgl_integral = false;
        }
        auto rep = verify_p_typical(p, n, D);
        bool ok = fgl_integral && rep.pass;
        pass = pass && ok;
        detail << "(" << p << "," << n << "):" << (ok ? "ok" : "FAIL") << " ";
    }
    return {"honda integrality + p-typicality", pass, detail.str()};
}

CheckResult check_fgl_axioms() {
    std::ostringstream detail;
    bool pass = true;
    for (auto [p, n] : std::vector<std::pair<long, int>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}}) {
        Int q = pow_int(Int(p), static_cast<unsigned long>(n));
        int D = static_cast<int>(q) + 2;
        auto hd = honda_data(p, n, D);
        bool ok = fgl_unit_ok(hd.fgl) && fgl_commutative(hd.fgl) && fgl_associative(hd.fgl) &&
                  fgl_log_additive(hd.log, hd.fgl);
        pass = pass && ok;
        detail << "(" << p << "," << n << "):" << (ok ? "ok" : "FAIL") << " ";
    }
    {
        RationalRing Q;
        UniSeries<RationalRing> log(Q, 8);
        for (int k = 1; k <= 8; ++k) log.set_coeff(k, Rational(1, k));
        auto F = group_law(log, 8);
        bool mult_ok = true;
        for (int i = 0; i <= 8; ++i)
            for (int j = 0; i + j <= 8; ++j) {
                Rational want = 0;
                if ((i == 1 && j == 0) || (i == 0 && j == 1)) want = 1;
                if (i == 1 && j == 1) want = -1;
                if (F.coeff(i, j) != want) mult_ok = false;
            }
        pass = pass && mult_ok;
        detail << "multiplicative-law:" << (mult_ok ? "ok" : "FAIL");
    }
    return {"formal group law axioms", pass, detail.str()};
}

CheckResult check_division_algebra(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x3ull);
    std::ostringstream detail;
    bool pass = true;
    for (auto [p, n] : std::vector<std::pair<long, int>>{{3, 2}, {2, 3}}) {
        auto mod = hensel_lift_modulus(p, n, 12);
        auto F = ODElem::frobenius_gen(mod);
        auto w = UnramifiedElem::generator(mod);
        bool ok = true;

        ok = ok && F.pow(n) == ODElem::from_scalar(UnramifiedElem::from_int(mod, Int(p)));
        ok = ok && F * ODElem::from_scalar(w) == ODElem::from_scalar(w.pow(Int(p))) * F;
        for (int i = 0; i < 200 && ok; ++i) {
            auto x = rand_od(rng, mod), y = rand_od(rng, mod), z = rand_od(rng, mod);
            ok = ok && ((x * y) * z).congruent(x * (y * z), mod->prec);
        }
        for (int i = 0; i < 100 && ok; ++i) {
            auto x = rand_od(rng, mod), y = rand_od(rng, mod);
            auto v = (x * y).valuation();
            ok = ok && v && *v == *x.valuation() + *y.valuation();
        }
        for (int i = 0; i < 100 && ok; ++i) {
            auto a = rand_w_unit(rng, mod);
            ok = ok && conj_by_F(a).congruent(ODElem::from_scalar(frobenius(a)), mod->prec);
        }
        std::uniform_int_distribution<long> dm(-3, 3);
        for (int i = 0; i < 100 && ok; ++i) {
            auto x = weil_elem(rand_w_unit(rng, mod), dm(rng));
            auto y = weil_elem(rand_w_unit(rng, mod), dm(rng));
            ok = ok && (weil_embed(x) * weil_embed(y)).congruent(weil_embed(weil_mul(x, y)), mod->prec);
        }
        pass = pass && ok;
        detail << "(" << p << "," << n << "):" << (ok ? "ok" : "FAIL") << " ";
    }
    return {"division algebra relations", pass, detail.str()};
}

CheckResult check_hopf_suite() {
    bool pass = true;
    std::ostringstream detail;
    auto basis6 = compositions_up_to(6);

    // bialgebra compatibility on all basis pairs to degree 6
    bool bialg = true;
    for (const auto& I : basis6)
        for (const auto& J : basis6) {
            if (composition_weight(I) + composition_weight(J) > 6) continue;
            auto lhs = qsym_comul(qsym_mul(QSymElem::monomial(I), QSymElem::monomial(J)));
            auto rhs = qtensor_mul(qsym_comul(QSymElem::monomial(I)), qsym_comul(QSymElem::monomial(J)));
            if (!(lhs == rhs)) bialg = false;
        }
    detail << "bialgebra:" << (bialg ? "ok" : "FAIL") << " ";

    // antipode axioms to degree 6
    bool antipode_ok = true;
    for (const auto& I : basis6) {
        QSymElem left, right;
        for (const auto& [kv, c] : qsym_comul(QSymElem::monomial(I))) {
            left = left + qsym_mul(antipode(QSymElem::monomial(kv.first)), QSymElem::monomial(kv.second)).scale(c);
            right = right + qsym_mul(QSymElem::monomial(kv.first), antipode(QSymElem::monomial(kv.second))).scale(c);
        }
        QSymElem want = I.empty() ? QSymElem::unit() : QSymElem();
        if (!(left == want) || !(right == want)) antipode_ok = false;
    }
    detail << "antipode:" << (antipode_ok ? "ok" : "FAIL") << " ";

    // embed_sym is a Hopf morphism: multiplicative on power sums and
    // compatible with the coproduct on primitives, to weight 6
    bool embed_ok = true;
    std::vector<Partition> parts;
    for (int w = 1; w <= 6; ++w)
        for (auto& c : compositions_of(w)) {
            Partition lam = c;
            std::sort(lam.rbegin(), lam.rend());
            if (lam == c) parts.push_back(lam);
        }
    for (const auto& lam : parts) {
        for (const auto& mu : parts) {
            if (composition_weight(lam) + composition_weight(mu) > 6) continue;
            Partition uni = lam;
            uni.insert(uni.end(), mu.begin(), mu.end());
            std::sort(uni.rbegin(), uni.rend());
            auto lhs = qsym_mul(embed_sym(SymElem::basis_elem(SymBasis::powersum, lam)),
                                embed_sym(SymElem::basis_elem(SymBasis::powersum, mu)));
            if (!(lhs == embed_sym(SymElem::basis_elem(SymBasis::powersum, uni)))) embed_ok = false;
        }
        QTensor want{{{Composition{}, Composition{}}, Rational(1)}};
        for (int nn : lam) {
            QTensor prim = qtensor_of(QSymElem::monomial({nn}), QSymElem::unit());
            for (auto& [k, v] : qtensor_of(QSymElem::unit(), QSymElem::monomial({nn}))) {
                auto [it, fresh] = prim.emplace(k, v);
                if (!fresh) it->second += v;
            }
            want = qtensor_mul(want, prim);
        }
        if (!(qsym_comul(embed_sym(SymElem::basis_elem(SymBasis::powersum, lam))) == want))
            embed_ok = false;
    }
    detail << "embed-hopf:" << (embed_ok ? "ok" : "FAIL") << " ";

    // brute-force quasisymmetric-polynomial oracle to degree 5 in 6 variables
    bool oracle_ok = true;
    {
        using Poly = std::map<std::vector<int>, Rational>;
        const int V = 6;
        std::function<void(const Composition&, size_t, int, std::vector<int>&, Poly&)> expand_rec =
            [&](const Composition& I, size_t t, int next_var, std::vector<int>& expo, Poly& out) {
                if (t == I.size()) {
                    auto [it, fresh] = out.emplace(expo, Rational(1));
                    if (!fresh) it->second += 1;
                    return;
                }
                for (int v = next_var; v >= 1 + static_cast<int>(I.size() - t - 1); --v) {
                    expo[static_cast<size_t>(v - 1)] += I[t];
                    expand_rec(I, t + 1, v - 1, expo, out);
                    expo[static_cast<size_t>(v - 1)] -= I[t];
                }
            };
        auto expand = [&](const QSymElem& x) {
            Poly out;
            for (const auto& [I, c] : x.terms()) {
                Poly mono;
                std::vector<int> expo(static_cast<size_t>(V), 0);
                expand_rec(I, 0, V, expo, mono);
                for (const auto& [e, m] : mono) {
                    auto [it, fresh] = out.emplace(e, m * c);
                    if (!fresh) {
                        it->second += m * c;
                        if (it->second == 0) out.erase(it);
                    }
                }
            }
            return out;
        };
        auto poly_mul = [](const Poly& a, const Poly& b) {
            Poly out;
            for (const auto& [ea, ca] : a)
                for (const auto& [eb, cb] : b) {
                    std::vector<int> e = ea;
                    for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                    auto [it, fresh] = out.emplace(std::move(e), ca * cb);
                    if (!fresh) {
                        it->second += ca * cb;
                        if (it->second == 0) out.erase(it);
                    }
                }
            return out;
        };
        auto basis4 = compositions_up_to(4);
        for (const auto& I : basis4)
            for (const auto& J : basis4) {
                if (composition_weight(I) + composition_weight(J) > 5) continue;
                auto lhs = expand(qsym_mul(QSymElem::monomial(I), QSymElem::monomial(J)));
                auto rhs = poly_mul(expand(QSymElem::monomial(I)), expand(QSymElem::monomial(J)));
                if (!(lhs == rhs)) oracle_ok = false;
            }
    }
    detail << "poly-oracle:" << (oracle_ok ? "ok" : "FAIL");

    pass = bialg && antipode_ok && embed_ok && oracle_ok;
    return {"hopf algebra suite", pass, detail.str()};
}

CheckResult check_numerics(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x5ull);
    std::ostringstream detail;
    const unsigned digits = 30;
    PrecisionGuard guard(digits + 12);

    auto z2 = zeta(2, digits);
    auto pi2_6 = approx_div_int(approx_pow_int(approx_pi(), 2), 6);
    double d_z2 = std::fabs(static_cast<double>(z2.value - pi2_6.value));
    bool zeta2_ok = d_z2 < 1e-12 && approx_consistent(z2, pi2_6);
    detail << "zeta2-vs-pi^2/6:" << (zeta2_ok ? "ok" : "FAIL") << "(" << d_z2 << ") ";

    bool even_ok = true;
    double worst_even = 0;
    for (int n = 1; n <= 5; ++n) {
        auto rep = zeta_even_check(n, digits);
        worst_even = std::max(worst_even, rep.residual);
        if (!rep.pass || rep.residual > 1e-10) even_ok = false;
    }
    detail << "even-check:" << (even_ok ? "ok" : "FAIL") << "(" << worst_even << ") ";

    auto z21 = mzv({2, 1}, digits);
    auto z3 = zeta(3, digits);
    double d_euler = std::fabs(static_cast<double>(z21.value - z3.value));
    bool euler_ok = d_euler < 1e-8;
    detail << "zeta(2,1)-vs-zeta(3):" << (euler_ok ? "ok" : "FAIL") << "(" << d_euler << ") ";

    // stuffle consistency on 20 random admissible pairs of total weight <= 6
    bool stuffle_ok = true;
    std::vector<Composition> admissible;
    for (const auto& c : compositions_up_to(4))
        if (mzv_admissible(c)) admissible.push_back(c);
    std::uniform_int_distribution<size_t> pick(0, admissible.size() - 1);
    int done = 0;
    while (done < 20) {
        const auto& a = admissible[pick(rng)];
        const auto& b = admissible[pick(rng)];
        if (composition_weight(a) + composition_weight(b) > 6) continue;
        ++done;
        auto lhs = mzv(a, digits) * mzv(b, digits);
        auto rhs = eval_qsym(qsym_mul(QSymElem::monomial(a), QSymElem::monomial(b)), digits);
        if (!approx_consistent(lhs, rhs, 1e-15)) stuffle_ok = false;
    }
    detail << "stuffle:" << (stuffle_ok ? "ok" : "FAIL") << " ";

    // 1/Gamma series versus the independent oracle at z = 0.1, 0.2
    bool gamma_ok = true;
    auto series = gamma_reciprocal_series(8, digits);
    for (long den : {10L, 5L}) {
        Rational zq(1, den);
        auto series_val = eval_series_at(series, RealApprox::from_rational(zq));
        auto oracle = approx_inv(gamma_real(zq, digits));
        double diff = std::fabs(static_cast<double>(series_val.value - oracle.value));
        double bound = gamma_series_truncation_bound(8, 1.0 / static_cast<double>(den)) +
                       series_val.err + oracle.err;
        if (diff > bound) gamma_ok = false;
    }
    detail << "gamma-series:" << (gamma_ok ? "ok" : "FAIL");

    bool pass = zeta2_ok && even_ok && euler_ok && stuffle_ok && gamma_ok;
    return {"multizeta numerics", pass, detail.str()};
}

CheckResult check_flat_connections(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x6ull);
    std::ostringstream detail;
    const int D = 6;
    bool flat_ok = true, reg_ok = true;
    for (int i = 0; i < 20; ++i) {
        GradedLieElem beta(D);
        for (int d = 1; d <= 4; ++d)
            for (const auto& w : lyndon_words(d))
                beta = beta + GradedLieElem::basis_elem(D, w, rand_small_rat(rng));
        auto l1 = lambda1_from_beta(beta);
        auto l0 = solve_lambda0(l1);
        if (!flatness_check(l0, l1).flat) flat_ok = false;
        if (l0.has_u0_term()) reg_ok = false;
    }
    detail << "flatness:" << (flat_ok ? "ok" : "FAIL") << " u0-regularity:" << (reg_ok ? "ok" : "FAIL") << " ";

    // negative control
    auto beta = GradedLieElem::generator(D, 1) + GradedLieElem::generator(D, 2);
    auto l1 = lambda1_from_beta(beta);
    auto l0 = solve_lambda0(l1);
    ConnCoeffs pert(D);
    pert.add_term(-2, 1, GradedLieElem::generator(D, 1));
    bool control_ok = !flatness_check(l0 + pert, l1).flat;
    detail << "negative-control:" << (control_ok ? "ok" : "FAIL") << " ";

    bool witt_ok = true;
    for (int k = 1; k <= 6; ++k)
        for (int l = 1; l <= 6; ++l)
            if (!witt_bracket_check(k, l).pass) witt_ok = false;
    detail << "witt:" << (witt_ok ? "ok" : "FAIL");

    return {"flat equisingular connections", flat_ok && reg_ok && control_ok && witt_ok, detail.str()};
}

CheckResult check_cocycle(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x7ull);
    RationalRing Q;
    const int D = 10;
    auto rand_inv = [&]() {
        UniSeries<RationalRing> s(Q, D);
        for (;;) {
            Rational c1 = rand_small_rat(rng);
            if (c1 != 0) {
                s.set_coeff(1, c1);
                break;
            }
        }
        for (int k = 2; k <= D; ++k) s.set_coeff(k, rand_small_rat(rng));
        return s;
    };
    bool pass = true;
    for (int i = 0; i < 50; ++i) {
        auto g = rand_inv(), h = rand_inv(), k = rand_inv();
        auto lhs = derivative_cocycle(g, h) * derivative_cocycle(k, compose(g, h));
        auto rhs = derivative_cocycle(compose(k, g), h);
        if (!series_eq(lhs, rhs)) pass = false;
    }
    return {"derivative cocycle identity", pass, std::string("50 random triples at D = ") + std::to_string(D)};
}

std::vector<CheckResult> run_acceptance(std::uint64_t seed) {
    return {
        check_honda_integrality(seed), check_fgl_axioms(),      check_division_algebra(seed),
        check_hopf_suite(),            check_numerics(seed),    check_flat_connections(seed),
        check_cocycle(seed),
    };
}

}  // namespace ltlab
