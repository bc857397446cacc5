#include "doctest.h"
#include "ltlab/padic.hpp"

#include <random>
#include <tuple>

using namespace ltlab;

namespace {

std::mt19937_64 rng(20240611u);

Int rand_int_mod(const Int& m) {
    std::uniform_int_distribution<unsigned long long> d(0, ~0ull);
    Int acc = 0;
    for (int i = 0; i < 4; ++i) acc = (acc << 64) + Int(d(rng));
    return mod_reduce(acc, m);
}

UnramifiedElem rand_elem(const ModulusPtr& mod, long val_lo = 0, long val_hi = 0) {
    std::uniform_int_distribution<long> dv(val_lo, val_hi);
    for (;;) {
        std::vector<Int> c(static_cast<size_t>(mod->n));
        for (auto& x : c) x = rand_int_mod(mod->p_pow_prec);
        auto e = UnramifiedElem::from_coeffs(mod, std::move(c), dv(rng));
        if (!e.is_zero()) return e;
    }
}

UnramifiedElem rand_unit(const ModulusPtr& mod) {
    for (;;) {
        auto e = rand_elem(mod);
        if (e.val() == 0) return e;
    }
}

// Remainder of a mod b over Z/M, b monic. Oracle for divisibility checks.
std::vector<Int> poly_rem(std::vector<Int> a, const std::vector<Int>& b, const Int& M) {
    const size_t n = b.size() - 1;
    for (auto& c : a) c = mod_reduce(c, M);
    while (a.size() > n) {
        Int lead = a.back();
        a.pop_back();
        if (lead == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            size_t idx = a.size() - n + j;
            a[idx] = mod_reduce(a[idx] - lead * b[j], M);
        }
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<Int> x_pow_minus_one(unsigned long e) {
    std::vector<Int> f(e + 1, Int(0));
    f[0] = -1;
    f[e] = 1;
    return f;
}

}  // namespace

TEST_CASE("hensel_lift_modulus: canonical moduli") {
    SUBCASE("n = 1 uses x - 1") {
        auto m = hensel_lift_modulus(5, 1, 8);
        CHECK(m->m.size() == 2);
        CHECK(m->m[1] == 1);
        CHECK(m->m[0] == m->p_pow_prec - 1);  // -1 mod 5^8
    }
    SUBCASE("p=2, n=2: x^2+x+1 mod 2, divides x^3 - 1 mod 16") {
        auto m = hensel_lift_modulus(2, 2, 4);
        CHECK(mod_reduce(m->m[0], Int(2)) == 1);
        CHECK(mod_reduce(m->m[1], Int(2)) == 1);
        CHECK(m->m[2] == 1);
        CHECK(poly_rem(x_pow_minus_one(3), m->m, Int(16)).empty());
    }
    SUBCASE("p=3, n=2: degree-2 irreducible factor of x^8 - 1 mod 3^6") {
        auto m = hensel_lift_modulus(3, 2, 6);
        CHECK(poly_rem(x_pow_minus_one(8), m->m, m->p_pow_prec).empty());
        // irreducible mod 3: degree 2 with no roots in F_3
        for (long r = 0; r < 3; ++r) {
            Int v = mod_reduce(m->m[0] + m->m[1] * r + Int(r) * r, Int(3));
            CHECK(v != 0);
        }
    }
    SUBCASE("rejects bad input") {
        CHECK_THROWS_AS(hensel_lift_modulus(4, 1, 4), std::invalid_argument);
        CHECK_THROWS_AS(hensel_lift_modulus(5, 1, 0), std::invalid_argument);
        CHECK_THROWS_AS(hensel_lift_modulus(5, 0, 4), std::invalid_argument);
    }
    SUBCASE("invariants across a (p, n) sweep") {
        for (auto [p, n, N] : {std::tuple<long, int, int>{5, 2, 8}, {7, 2, 6}, {2, 4, 8}, {3, 3, 8}, {11, 1, 6}}) {
            auto m = hensel_lift_modulus(p, n, N);
            // m divides x^(q-1) - 1 over Z/p^N
            unsigned long qm1 = static_cast<unsigned long>(m->q - 1);
            CHECK(poly_rem(x_pow_minus_one(qm1), m->m, m->p_pow_prec).empty());
            // the generator is a Teichmueller element of exact order dividing q-1
            auto w = UnramifiedElem::generator(m);
            CHECK(w.pow(m->q - 1) == UnramifiedElem::from_int(m, 1));
            // frobenius is well-defined of order n
            auto a = w + UnramifiedElem::from_int(m, 3);
            auto s = a;
            for (int k = 0; k < n; ++k) s = frobenius(s);
            CHECK(s == a);
            CHECK(frobenius(a * a) == frobenius(a) * frobenius(a));
        }
    }
}

TEST_CASE("frobenius: ring endomorphism of order n fixing Z_p") {
    auto mod = hensel_lift_modulus(3, 2, 12);
    SUBCASE("fixes Z_p") {
        auto a = UnramifiedElem::from_int(mod, 7);
        CHECK(frobenius(a) == a);
    }
    SUBCASE("ring homomorphism on 200 random pairs") {
        for (int i = 0; i < 200; ++i) {
            auto a = rand_elem(mod), b = rand_elem(mod);
            CHECK(frobenius(a + b).congruent(frobenius(a) + frobenius(b), mod->prec));
            CHECK(frobenius(a * b) == frobenius(a) * frobenius(b));
        }
    }
    SUBCASE("sigma^n = id on 100 random elements") {
        for (int i = 0; i < 100; ++i) {
            auto a = rand_elem(mod, -2, 2);
            auto s = a;
            for (int k = 0; k < mod->n; ++k) s = frobenius(s);
            CHECK(s == a);
        }
    }
    SUBCASE("sigma(omega) = omega^p, still a (q-1)st root of unity") {
        auto w = UnramifiedElem::generator(mod);
        auto wp = frobenius(w);
        CHECK(wp == w.pow(Int(mod->p)));
        CHECK(wp.pow(mod->q - 1) == UnramifiedElem::from_int(mod, 1));
    }
}

TEST_CASE("teichmueller lifts") {
    auto mod = hensel_lift_modulus(5, 1, 10);
    SUBCASE("c = 1 lifts to 1") {
        CHECK(teichmueller(UnramifiedElem::from_int(mod, 1)) == UnramifiedElem::from_int(mod, 1));
    }
    SUBCASE("p=5: lift of 2 is a 4th root of unity; its square lifts 4") {
        auto t2 = teichmueller(UnramifiedElem::from_int(mod, 2));
        CHECK(mod_reduce(t2.unit()[0], Int(5)) == 2);
        CHECK(t2.pow(4) == UnramifiedElem::from_int(mod, 1));
        auto t4 = teichmueller(UnramifiedElem::from_int(mod, 4));
        CHECK(t2 * t2 == t4);
    }
    SUBCASE("frobenius(teich(c)) = teich(c^p)") {
        auto mod2 = hensel_lift_modulus(3, 2, 8);
        for (int i = 0; i < 20; ++i) {
            auto c = rand_unit(mod2);
            CHECK(frobenius(teichmueller(c)) == teichmueller(c.pow(Int(mod2->p))));
        }
    }
    SUBCASE("multiplicative: teich(c) teich(d) = teich(cd)") {
        auto mod2 = hensel_lift_modulus(3, 2, 8);
        for (int i = 0; i < 20; ++i) {
            auto c = rand_unit(mod2), d = rand_unit(mod2);
            CHECK(teichmueller(c) * teichmueller(d) == teichmueller(c * d));
        }
    }
    SUBCASE("rejects zero residue") {
        CHECK_THROWS_AS(teichmueller(UnramifiedElem(mod)), std::domain_error);
        CHECK_THROWS_AS(teichmueller(UnramifiedElem::from_int(mod, 5)), std::domain_error);
    }
}

TEST_CASE("padic log/exp") {
    auto mod = hensel_lift_modulus(5, 2, 12);
    auto one = UnramifiedElem::from_int(mod, 1);
    const int digits = mod->prec - 2;  // guard for trailing-digit garbage in capped arithmetic

    SUBCASE("log(1) = 0, exp(0) = 1") {
        CHECK(padic_log(one).is_zero());
        CHECK(padic_exp(UnramifiedElem(mod)) == one);
    }
    SUBCASE("round trips on random strict units") {
        for (int i = 0; i < 25; ++i) {
            auto a = rand_unit(mod);
            auto u = one + a.mul_int(Int(5));  // 1 + 5a, a unit: val(u - 1) = 1
            auto back = padic_exp(padic_log(u));
            CHECK(back.eq_rel(u, digits));
            auto arg = a.mul_int(Int(5));
            auto fwd = padic_log(padic_exp(arg));
            CHECK(fwd.eq_rel(arg, digits));
        }
    }
    SUBCASE("log is a homomorphism: log((1+p)^2) = 2 log(1+p)") {
        auto u = UnramifiedElem::from_int(mod, 6);  // 1 + 5
        CHECK(padic_log(u * u).eq_rel(padic_log(u).mul_int(2), digits));
        for (int i = 0; i < 20; ++i) {
            auto u1 = one + rand_elem(mod).mul_int(Int(5)), u2 = one + rand_elem(mod).mul_int(Int(5));
            if ((u1 - one).is_zero() || (u1 - one).val() < 1) continue;
            if ((u2 - one).is_zero() || (u2 - one).val() < 1) continue;
            CHECK(padic_log(u1 * u2).eq_rel(padic_log(u1) + padic_log(u2), digits));
        }
    }
    SUBCASE("p = 2 requires 1 mod 4") {
        auto mod2 = hensel_lift_modulus(2, 1, 12);
        CHECK_THROWS_AS(padic_log(UnramifiedElem::from_int(mod2, 3)), std::domain_error);
        auto u = UnramifiedElem::from_int(mod2, 5);
        auto back = padic_exp(padic_log(u));
        CHECK(back.eq_rel(u, mod2->prec - 4));
        CHECK_THROWS_AS(padic_exp(UnramifiedElem::from_int(mod2, 2)), std::domain_error);
    }
}

TEST_CASE("PadicFloat arithmetic") {
    SUBCASE("x * inv(x) = 1 for random nonzero x") {
        for (int i = 0; i < 50; ++i) {
            Int raw = rand_int_mod(pow_int(Int(5), 12));
            if (raw == 0) continue;
            auto x = PadicFloat::from_integer(5, 12, raw);
            auto prod = x * x.inv();
            CHECK(prod.congruent(PadicFloat::from_integer(5, 12, 1), prod.prec()));
        }
    }
    SUBCASE("valuation is additive under multiplication") {
        for (int i = 0; i < 100; ++i) {
            Int a = rand_int_mod(pow_int(Int(3), 10)), b = rand_int_mod(pow_int(Int(3), 10));
            if (a == 0 || b == 0) continue;
            auto x = PadicFloat::from_integer(3, 12, a), y = PadicFloat::from_integer(3, 12, b);
            CHECK((x * y).val() == x.val() + y.val());
        }
    }
    SUBCASE("ultrametric inequality, equality for distinct valuations") {
        for (int i = 0; i < 100; ++i) {
            Int a = rand_int_mod(pow_int(Int(3), 10)), b = rand_int_mod(pow_int(Int(3), 10));
            if (a == 0 || b == 0) continue;
            auto x = PadicFloat::from_integer(3, 12, a), y = PadicFloat::from_integer(3, 12, b);
            auto s = x + y;
            if (s.is_zero()) continue;
            CHECK(s.val() >= std::min(x.val(), y.val()));
            if (x.val() != y.val()) CHECK(s.val() == std::min(x.val(), y.val()));
        }
    }
    SUBCASE("geometric series: (1 + p) * (1 - p + p^2 - ...) = 1") {
        const int N = 12;
        auto one = PadicFloat::from_integer(5, N, 1);
        auto u = PadicFloat::from_integer(5, N, 6);
        PadicFloat geo(5, N);
        for (int k = 0; k < N + 1; ++k) {
            Int t = pow_int(Int(5), static_cast<unsigned long>(k));
            if (k % 2 == 1) t = -t;
            geo = geo + PadicFloat::from_integer(5, N, t);
        }
        auto prod = u * geo;
        CHECK(prod.congruent(one, N));
    }
    SUBCASE("cancellation does not overclaim precision") {
        auto x = PadicFloat::from_integer(7, 8, 123456);
        auto d = x - x;
        CHECK(d.is_zero());
        auto a = PadicFloat::from_integer(7, 8, 1);
        auto b = PadicFloat::from_integer(7, 8, 1 + 7 * 7);
        auto diff = b - a;  // valuation 2, so only 6 digits remain
        CHECK(diff.val() == 2);
        CHECK(diff.prec() == 6);
    }
    SUBCASE("rational embedding") {
        auto x = PadicFloat::from_rational(5, 8, Rational(7, 10));
        CHECK(x.val() == -1);
        auto y = x * PadicFloat::from_integer(5, 8, 10);
        CHECK(y.congruent(PadicFloat::from_integer(5, 8, 7), 7));
    }
    SUBCASE("division by zero throws") {
        CHECK_THROWS_AS(PadicFloat(5, 8).inv(), std::domain_error);
    }
}
