#include "doctest.h"
#include "ltlab/division_algebra.hpp"

#include <random>

using namespace ltlab;

namespace {
std::mt19937_64 rng(48151623u);

UnramifiedElem rand_scalar(const ModulusPtr& mod, long val_lo = 0, long val_hi = 2) {
    std::uniform_int_distribution<unsigned long long> d(0, ~0ull);
    std::uniform_int_distribution<long> dv(val_lo, val_hi);
    for (;;) {
        std::vector<Int> c(static_cast<size_t>(mod->n));
        for (auto& x : c) x = mod_reduce(Int(d(rng)), mod->p_pow_prec);
        auto e = UnramifiedElem::from_coeffs(mod, std::move(c), dv(rng));
        if (!e.is_zero()) return e;
    }
}

UnramifiedElem rand_w_unit(const ModulusPtr& mod) {
    for (;;) {
        auto e = rand_scalar(mod, 0, 0);
        if (e.val() == 0) return e;
    }
}

ODElem rand_od(const ModulusPtr& mod) {
    std::vector<UnramifiedElem> c;
    for (int i = 0; i < mod->n; ++i) c.push_back(rand_scalar(mod));
    return ODElem::from_coeffs(mod, std::move(c));
}

ODElem rand_od_unit(const ModulusPtr& mod) {
    for (;;) {
        auto x = rand_od(mod);
        if (x.is_unit()) return x;
    }
}
}  // namespace

TEST_CASE("od_mul basics") {
    auto mod = hensel_lift_modulus(3, 2, 12);
    auto F = ODElem::frobenius_gen(mod);
    auto one = ODElem::one(mod);
    SUBCASE("F * F^(n-1) = p") {
        auto Fn = F.pow(mod->n);
        CHECK(Fn == ODElem::from_scalar(UnramifiedElem::from_int(mod, Int(mod->p))));
    }
    SUBCASE("F * omega = omega^p * F") {
        auto w = UnramifiedElem::generator(mod);
        auto lhs = F * ODElem::from_scalar(w);
        auto rhs = ODElem::from_scalar(w.pow(Int(mod->p))) * F;
        CHECK(lhs == rhs);
    }
    SUBCASE("1 is a two-sided identity") {
        for (int i = 0; i < 10; ++i) {
            auto x = rand_od(mod);
            CHECK(one * x == x);
            CHECK(x * one == x);
        }
    }
    SUBCASE("associativity and distributivity on 200 random triples") {
        for (int i = 0; i < 200; ++i) {
            auto x = rand_od(mod), y = rand_od(mod), z = rand_od(mod);
            CHECK(((x * y) * z).congruent(x * (y * z), mod->prec));
            CHECK((x * (y + z)).congruent(x * y + x * z, mod->prec));
        }
    }
}

TEST_CASE("od_valuation") {
    auto mod = hensel_lift_modulus(2, 3, 10);
    auto F = ODElem::frobenius_gen(mod);
    SUBCASE("v(F) = 1/n") {
        CHECK(*F.valuation() == Rational(1, mod->n));
    }
    SUBCASE("v(p F) = 1 + 1/n") {
        auto pF = ODElem::from_scalar(UnramifiedElem::from_int(mod, Int(mod->p))) * F;
        CHECK(*pF.valuation() == Rational(1) + Rational(1, mod->n));
    }
    SUBCASE("v(zero) is +infinity (nullopt)") {
        CHECK(!ODElem(mod).valuation().has_value());
    }
    SUBCASE("multiplicative on 100 random pairs") {
        for (int i = 0; i < 100; ++i) {
            auto x = rand_od(mod), y = rand_od(mod);
            auto xy = x * y;
            REQUIRE(xy.valuation().has_value());
            CHECK(*xy.valuation() == *x.valuation() + *y.valuation());
        }
    }
    SUBCASE("ultrametric inequality") {
        for (int i = 0; i < 100; ++i) {
            auto x = rand_od(mod), y = rand_od(mod);
            auto s = x + y;
            if (s.is_zero()) continue;
            CHECK(*s.valuation() >= std::min(*x.valuation(), *y.valuation()));
        }
    }
    SUBCASE("n * valuation: D^x -> Z is onto with kernel the units") {
        auto Finv = ODElem::frobenius_gen_inv(mod);
        for (long m = -3; m <= 3; ++m) {
            auto u = rand_od_unit(mod);
            ODElem x = u;
            for (long s = 0; s < m; ++s) x = x * F;
            for (long s = 0; s > m; --s) x = x * Finv;
            CHECK(*x.valuation() * mod->n == Rational(m));
            CHECK((m == 0) == x.is_unit());
        }
    }
}

TEST_CASE("od_inverse") {
    auto mod = hensel_lift_modulus(3, 2, 12);
    SUBCASE("inverse(1) = 1") {
        CHECK(ODElem::one(mod).inverse() == ODElem::one(mod));
    }
    SUBCASE("inverse(omega) = omega^(q-2)") {
        auto w = ODElem::from_scalar(UnramifiedElem::generator(mod));
        CHECK(w.inverse() == w.pow(static_cast<long>(mod->q) - 2));
    }
    SUBCASE("two-sided on random units") {
        for (int i = 0; i < 30; ++i) {
            auto x = rand_od_unit(mod);
            auto y = x.inverse();
            CHECK((x * y).congruent(ODElem::one(mod), mod->prec));
            CHECK((y * x).congruent(ODElem::one(mod), mod->prec));
        }
    }
    SUBCASE("non-units rejected") {
        auto F = ODElem::frobenius_gen(mod);
        CHECK_THROWS_AS(F.inverse(), std::domain_error);
        CHECK_THROWS_AS(ODElem(mod).inverse(), std::domain_error);
    }
}

TEST_CASE("conj_by_F realizes frobenius") {
    auto mod = hensel_lift_modulus(3, 2, 12);
    SUBCASE("fixes Z_p") {
        auto a = UnramifiedElem::from_int(mod, 7);
        CHECK(conj_by_F(a).congruent(ODElem::from_scalar(a), mod->prec));
    }
    SUBCASE("omega -> omega^p") {
        auto w = UnramifiedElem::generator(mod);
        CHECK(conj_by_F(w).congruent(ODElem::from_scalar(w.pow(Int(mod->p))), mod->prec));
    }
    SUBCASE("random units") {
        for (int i = 0; i < 100; ++i) {
            auto a = rand_w_unit(mod);
            CHECK(conj_by_F(a).congruent(ODElem::from_scalar(frobenius(a)), mod->prec));
        }
    }
}

TEST_CASE("center_check") {
    SUBCASE("p is central; omega and F are not (n >= 2)") {
        auto mod = hensel_lift_modulus(3, 2, 10);
        CHECK(center_check(ODElem::from_scalar(UnramifiedElem::from_int(mod, Int(mod->p)))));
        CHECK(!center_check(ODElem::from_scalar(UnramifiedElem::generator(mod))));
        CHECK(!center_check(ODElem::frobenius_gen(mod)));
    }
    SUBCASE("n = 1: everything commutes") {
        auto mod = hensel_lift_modulus(3, 1, 10);
        CHECK(center_check(ODElem::frobenius_gen(mod)));
        CHECK(center_check(rand_od(mod)));
    }
    SUBCASE("matches the coefficient description") {
        auto mod = hensel_lift_modulus(2, 2, 10);
        for (int i = 0; i < 50; ++i) {
            auto x = rand_od(mod);
            bool scalar_form = x.coeff(0).is_scalar();
            for (int j = 1; j < mod->n; ++j) scalar_form = scalar_form && x.coeff(j).is_zero();
            CHECK(center_check(x) == scalar_form);
        }
    }
}

TEST_CASE("weil elements and the embedding") {
    auto mod = hensel_lift_modulus(3, 2, 12);
    auto one = weil_elem(UnramifiedElem::from_int(mod, 1), 0);
    SUBCASE("(1,0) embeds to 1") {
        CHECK(weil_embed(one) == ODElem::one(mod));
    }
    SUBCASE("(a,1)(b,1) = (a sigma(b), 2) and aF * bF = a sigma(b) F^2") {
        auto a = rand_w_unit(mod), b = rand_w_unit(mod);
        auto prod = weil_mul(weil_elem(a, 1), weil_elem(b, 1));
        CHECK(prod.m == 2);
        CHECK(prod.a == a * frobenius(b));
        auto lhs = weil_embed(weil_elem(a, 1)) * weil_embed(weil_elem(b, 1));
        CHECK(lhs == weil_embed(prod));
    }
    SUBCASE("(a,n)(b,0): sigma^n = id and F^n contributes p") {
        auto a = rand_w_unit(mod), b = rand_w_unit(mod);
        auto prod = weil_mul(weil_elem(a, mod->n), weil_elem(b, 0));
        CHECK(prod.a == a * b);  // the n-th power of 1 in Z acts trivially
        auto emb = weil_embed(prod);
        CHECK(*emb.valuation() == Rational(1));  // F^n = p
    }
    SUBCASE("embedding is a homomorphism on 100 random pairs") {
        std::uniform_int_distribution<long> dm(-3, 3);
        for (int i = 0; i < 100; ++i) {
            auto x = weil_elem(rand_w_unit(mod), dm(rng));
            auto y = weil_elem(rand_w_unit(mod), dm(rng));
            auto lhs = weil_embed(x) * weil_embed(y);
            CHECK(lhs.congruent(weil_embed(weil_mul(x, y)), mod->prec));
        }
    }
    SUBCASE("group structure: inverses") {
        std::uniform_int_distribution<long> dm(-4, 4);
        for (int i = 0; i < 50; ++i) {
            auto x = weil_elem(rand_w_unit(mod), dm(rng));
            CHECK(weil_eq(weil_mul(x, weil_inv(x)), one));
            CHECK(weil_eq(weil_mul(weil_inv(x), x), one));
        }
    }
    SUBCASE("injectivity on samples: distinct inputs give distinct normal forms") {
        std::uniform_int_distribution<long> dm(0, 3);
        for (int i = 0; i < 50; ++i) {
            auto x = weil_elem(rand_w_unit(mod), dm(rng));
            auto y = weil_elem(rand_w_unit(mod), dm(rng));
            if (weil_eq(x, y)) continue;
            CHECK(!(weil_embed(x) == weil_embed(y)));
        }
    }
    SUBCASE("unit part validated") {
        CHECK_THROWS_AS(weil_elem(UnramifiedElem::from_int(mod, Int(mod->p)), 1), std::invalid_argument);
    }
}
