#include <benchmark/benchmark.h>

#include "ltlab/cm_connection.hpp"
#include "ltlab/division_algebra.hpp"
#include "ltlab/lubin_tate.hpp"
#include "ltlab/multizeta.hpp"
#include "ltlab/qsym.hpp"

using namespace ltlab;

static void BM_SeriesRevert(benchmark::State& state) {
    RationalRing Q;
    UniSeries<RationalRing> h(Q, static_cast<int>(state.range(0)));
    for (int k = 1; k <= h.trunc(); ++k) h.set_coeff(k, Rational(k % 2 ? 1 : -1, k));
    for (auto _ : state) {
        auto w = revert(h);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_SeriesRevert)->Arg(8)->Arg(16)->Arg(24);

static void BM_HondaGroupLaw(benchmark::State& state) {
    for (auto _ : state) {
        auto hd = honda_data(3, 2, 11);
        benchmark::DoNotOptimize(hd);
    }
}
BENCHMARK(BM_HondaGroupLaw);

static void BM_OdMul(benchmark::State& state) {
    auto mod = hensel_lift_modulus(3, 2, 12);
    auto F = ODElem::frobenius_gen(mod);
    auto w = ODElem::from_scalar(UnramifiedElem::generator(mod));
    auto x = (F + w).pow(3);
    for (auto _ : state) {
        auto y = x * x;
        benchmark::DoNotOptimize(y);
    }
}
BENCHMARK(BM_OdMul);

static void BM_OdInverse(benchmark::State& state) {
    auto mod = hensel_lift_modulus(3, 2, 12);
    auto one = ODElem::one(mod);
    auto w = ODElem::from_scalar(UnramifiedElem::generator(mod));
    auto F = ODElem::frobenius_gen(mod);
    auto x = one + w * F;  // unit of o_D
    for (auto _ : state) {
        auto y = x.inverse();
        benchmark::DoNotOptimize(y);
    }
}
BENCHMARK(BM_OdInverse);

static void BM_QsymAntipode(benchmark::State& state) {
    Composition I;
    for (int i = 0; i < state.range(0); ++i) I.push_back(1 + (i % 2));
    auto x = QSymElem::monomial(I);
    for (auto _ : state) {
        auto s = antipode(x);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_QsymAntipode)->Arg(4)->Arg(6);

static void BM_LieBracket(benchmark::State& state) {
    GradedLieElem x(6), y(6);
    for (int d = 1; d <= 3; ++d)
        for (const auto& w : lyndon_words(d)) {
            x = x + GradedLieElem::basis_elem(6, w, Rational(1, d));
            y = y + GradedLieElem::basis_elem(6, w, Rational(d, 2));
        }
    for (auto _ : state) {
        auto b = bracket(x, y);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_LieBracket);

static void BM_SolveLambda0(benchmark::State& state) {
    GradedLieElem beta(6);
    for (int d = 1; d <= 4; ++d)
        for (const auto& w : lyndon_words(d))
            beta = beta + GradedLieElem::basis_elem(6, w, Rational(1, d + 1));
    auto l1 = lambda1_from_beta(beta);
    for (auto _ : state) {
        auto l0 = solve_lambda0(l1);
        benchmark::DoNotOptimize(l0);
    }
}
BENCHMARK(BM_SolveLambda0);

static void BM_Zeta30Digits(benchmark::State& state) {
    for (auto _ : state) {
        auto z = zeta(static_cast<int>(state.range(0)), 30);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_Zeta30Digits)->Arg(2)->Arg(10);

static void BM_Mzv21(benchmark::State& state) {
    for (auto _ : state) {
        auto v = mzv({2, 1}, 30);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_Mzv21);

BENCHMARK_MAIN();
