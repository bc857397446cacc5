#include "ltlab/multizeta.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <vector>

namespace ltlab {

std::string RealApprox::str(unsigned digits) const {
    std::ostringstream os;
    unsigned d = digits ? digits : BigFloat::default_precision();
    os << std::setprecision(static_cast<int>(d)) << value << " +/- " << err;
    return os.str();
}

// ------------------------------------------------------------- Bernoulli

namespace {
std::vector<Rational> g_bernoulli;
std::mutex g_bernoulli_mutex;
}  // namespace

const Rational& bernoulli_number(int k) {
    if (k < 0) throw std::invalid_argument("bernoulli_number: negative index");
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    if (g_bernoulli.empty()) g_bernoulli.emplace_back(1);
    while (static_cast<int>(g_bernoulli.size()) <= k) {
        // sum_{j<=m} C(m+1, j) B_j = 0
        int m = static_cast<int>(g_bernoulli.size());
        Rational acc(0);
        Int binom = 1;  // C(m+1, 0)
        for (int j = 0; j < m; ++j) {
            acc += Rational(binom) * g_bernoulli[static_cast<size_t>(j)];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        g_bernoulli.push_back(-acc / (m + 1));
    }
    return g_bernoulli[static_cast<size_t>(k)];
}

// ------------------------------------------------------------------ zeta

RealApprox zeta(int n, unsigned digits) {
    if (n < 2) throw std::domain_error("zeta: requires n >= 2 (pole at 1)");
    PrecisionGuard guard(digits + 12);
    const double target = std::pow(10.0, -(static_cast<double>(digits) + 4.0));
    long M = std::max<long>(20, digits);
    for (int attempt = 0; attempt < 8; ++attempt, M *= 2) {
        BigFloat partial = 0;
        for (long k = 1; k <= M; ++k) partial += 1 / pow(BigFloat(k), n);
        Rational tail = Rational(1) / (Rational(n - 1) * Rational(pow_int(Int(M), static_cast<unsigned long>(n - 1))));
        Rational half = Rational(-1, 2) / Rational(pow_int(Int(M), static_cast<unsigned long>(n)));
        Rational correction = tail + half;
        // Euler-Maclaurin terms B_2j/(2j)! (n)_{2j-1} M^{-n-2j+1}, stop below
        // target; for real n the remainder is bounded by the first omitted
        // term.
        bool converged = false;
        double stop_term = 0;
        Rational poch(1);  // n (n+1) ... (n + 2j - 2)
        Int fact = 1;      // (2j)!
        double prev_mag = 1e300;
        for (int j = 1; j <= 120; ++j) {
            poch *= (j == 1) ? Rational(n) : Rational(n + 2 * j - 3) * Rational(n + 2 * j - 2);
            fact *= Int(2 * j) * Int(2 * j - 1);
            Rational term = bernoulli_number(2 * j) / Rational(fact) * poch /
                            Rational(pow_int(Int(M), static_cast<unsigned long>(n + 2 * j - 1)));
            double mag = std::fabs(static_cast<double>(Rational(term)));
            if (mag > prev_mag) break;  // divergent zone, enlarge M
            correction += term;
            prev_mag = mag;
            if (mag < target) {
                converged = true;
                stop_term = mag;
                break;
            }
        }
        if (!converged) continue;
        RealApprox r(partial + BigFloat(numerator(correction).str()) / BigFloat(denominator(correction).str()));
        r.err = 2.0 * stop_term + static_cast<double>(M + 8) * RealApprox::ulp_of(BigFloat(2));
        return r;
    }
    throw std::runtime_error("zeta: Euler-Maclaurin failed to converge");
}

// ----------------------------------------------------------- Euler gamma

RealApprox euler_gamma(unsigned digits) {
    PrecisionGuard guard(digits + 12);
    const double target = std::pow(10.0, -(static_cast<double>(digits) + 4.0));
    long M = std::max<long>(20, digits);
    for (int attempt = 0; attempt < 8; ++attempt, M *= 2) {
        BigFloat harmonic = 0;
        for (long k = 1; k <= M; ++k) harmonic += BigFloat(1) / k;
        RealApprox acc(harmonic, static_cast<double>(M + 2) * RealApprox::ulp_of(BigFloat(30)));
        acc = acc - approx_log(RealApprox(BigFloat(M)));
        acc = acc - RealApprox::from_rational(Rational(1, 2 * M));
        bool converged = false;
        double stop_term = 0;
        double prev_mag = 1e300;
        Rational m2(Int(M) * Int(M));
        Rational mpow(1);
        for (int j = 1; j <= 120; ++j) {
            mpow *= m2;
            Rational term = bernoulli_number(2 * j) / (Rational(2 * j) * mpow);
            double mag = std::fabs(static_cast<double>(term));
            if (mag > prev_mag) break;
            acc = acc + RealApprox::from_rational(term);
            prev_mag = mag;
            if (mag < target) {
                converged = true;
                stop_term = mag;
                break;
            }
        }
        if (!converged) continue;
        acc.err += 2.0 * stop_term;
        return acc;
    }
    throw std::runtime_error("euler_gamma: failed to converge");
}

RealApprox euler_gamma_alt(unsigned digits) {
    // gamma = sum_{k>=1} (-1)^(k+1) x^k / (k k!) - ln x - E(x),
    // |E(x)| = |int_x^inf e^-t / t dt| <= e^-x; needs ~x log10(e) guard
    // digits against the cancellation of terms as large as e^x / x.
    const long x = static_cast<long>(std::ceil((digits + 6) * std::log(10.0))) + 2;
    const unsigned inner = digits + 14 + static_cast<unsigned>(std::ceil(0.4343 * static_cast<double>(x)));
    PrecisionGuard guard(inner);
    BigFloat term = 1, sum = 0;
    double max_mag = 1.0;
    const double target = std::pow(10.0, -(static_cast<double>(digits) + 6.0));
    long k = 1;
    for (; k < 40 * x; ++k) {
        term = term * x / k;  // x^k / k!
        BigFloat contrib = term / k;
        if (k % 2 == 1)
            sum += contrib;
        else
            sum -= contrib;
        double mag = std::fabs(static_cast<double>(contrib));
        max_mag = std::max(max_mag, mag);
        if (k > x && mag < target) break;
    }
    RealApprox r(sum, 0.0);
    r = r - approx_log(RealApprox(BigFloat(x)));
    r.err += std::exp(-static_cast<double>(x));                      // E(x) remainder
    r.err += target;                                                 // dropped series tail
    r.err += static_cast<double>(k + 4) * max_mag *
             std::pow(10.0, -static_cast<double>(inner) + 1.0);      // rounding during cancellation
    return r;
}

// ------------------------------------------------------------------- MZV

bool mzv_admissible(const Composition& s) {
    return !s.empty() && is_valid_composition(s) && s.front() >= 2;
}

namespace {

// Iterated-integral word: part a contributes (a-1) zeros then a one.
std::vector<int> composition_to_word(const Composition& s) {
    std::vector<int> w;
    for (int a : s) {
        for (int i = 1; i < a; ++i) w.push_back(0);
        w.push_back(1);
    }
    return w;
}

// Reverse the word and flip every bit (the t -> 1 - t substitution).
std::vector<int> word_dual(const std::vector<int>& w) {
    std::vector<int> r(w.rbegin(), w.rend());
    for (int& b : r) b = 1 - b;
    return r;
}

// Exponent sequence of a word ending in 1.
std::vector<int> word_to_exponents(const std::vector<int>& w) {
    std::vector<int> exps;
    int zeros = 0;
    for (int b : w) {
        if (b == 0) {
            ++zeros;
        } else {
            exps.push_back(zeros + 1);
            zeros = 0;
        }
    }
    if (zeros != 0) throw std::logic_error("word_to_exponents: word does not end in 1");
    return exps;
}

// Li_{a_1,...,a_r}(1/2) = sum_{n_1 > ... > n_r >= 1} 2^(-n_1) prod n_i^(-a_i)
// with a_i >= 1 (a_1 = 1 allowed: the factor 2^(-n_1) ensures convergence).
RealApprox polylog_half(const std::vector<int>& a, unsigned digits) {
    const size_t r = a.size();
    if (r == 0) return RealApprox::exact_int(1);
    long M = static_cast<long>(std::ceil((digits + 8) * std::log(10.0) / std::log(2.0)));
    M = std::max<long>(M + 16 * static_cast<long>(r), 200);
    std::vector<BigFloat> U(r + 2, BigFloat(0));
    U[r + 1] = 1;  // empty chain
    BigFloat z = 1;
    BigFloat sum = 0;
    for (long n = 1; n <= M; ++n) {
        z /= 2;
        sum += z * U[2] / pow(BigFloat(n), a[0]);
        for (size_t j = 2; j <= r; ++j) U[j] += U[j + 1] / pow(BigFloat(n), a[j - 1]);
    }
    // tail: terms beyond M are below 2^-n * prod of inner-sum bounds; inner
    // sums with exponent 1 grow like log n, the rest are bounded by 2
    double logM = std::log(static_cast<double>(2 * M));
    double tail = std::pow(2.0, -static_cast<double>(M)) *
                  std::pow(2.0 + logM, static_cast<double>(r)) *
                  std::pow(2.0, static_cast<double>(r)) * 8.0;
    RealApprox out(sum);
    out.err = tail + static_cast<double>(M) * static_cast<double>(r + 1) * RealApprox::ulp_of(BigFloat(2));
    return out;
}

}  // namespace

RealApprox mzv(const Composition& s, unsigned digits) {
    if (!mzv_admissible(s))
        throw std::domain_error("mzv: composition must have first part >= 2");
    PrecisionGuard guard(digits + 12);
    auto w = composition_to_word(s);
    const size_t m = w.size();
    RealApprox total;
    for (size_t j = 0; j <= m; ++j) {
        std::vector<int> prefix(w.begin(), w.begin() + static_cast<long>(j));
        std::vector<int> suffix(w.begin() + static_cast<long>(j), w.end());
        RealApprox left = j == 0 ? RealApprox::exact_int(1)
                                 : polylog_half(word_to_exponents(word_dual(prefix)), digits);
        RealApprox right = j == m ? RealApprox::exact_int(1)
                                  : polylog_half(word_to_exponents(suffix), digits);
        total = total + left * right;
    }
    return total;
}

RealApprox mzv_direct(const Composition& s, unsigned digits, long cutoff) {
    if (!mzv_admissible(s))
        throw std::domain_error("mzv_direct: composition must have first part >= 2");
    if (cutoff < 100) throw std::invalid_argument("mzv_direct: cutoff too small for the tail bound");
    PrecisionGuard guard(digits + 12);
    const size_t k = s.size();
    std::vector<BigFloat> U(k + 2, BigFloat(0));
    U[k + 1] = 1;
    BigFloat sum = 0;
    for (long n = 1; n <= cutoff; ++n) {
        sum += U[2] / pow(BigFloat(n), s[0]);
        for (size_t j = 2; j <= k; ++j) U[j] += U[j + 1] / pow(BigFloat(n), s[j - 1]);
    }
    double logM = std::log(static_cast<double>(cutoff));
    double tail = 4.0 * std::pow(1.0 + logM, static_cast<double>(k - 1)) *
                  std::pow(static_cast<double>(cutoff), -static_cast<double>(s[0] - 1)) /
                  static_cast<double>(s[0] - 1);
    RealApprox out(sum);
    out.err = tail + static_cast<double>(cutoff) * static_cast<double>(k + 1) * RealApprox::ulp_of(BigFloat(2));
    return out;
}

RealApprox eval_qsym(const QSymElem& x, unsigned digits) {
    PrecisionGuard guard(digits + 12);
    RealApprox total;
    for (const auto& [I, c] : x.terms()) {
        RealApprox v;
        if (I.empty()) {
            v = RealApprox::exact_int(1);
        } else if (I.size() == 1 && I[0] == 1) {
            v = euler_gamma(digits);  // the image of p_1, regularized
        } else if (mzv_admissible(I)) {
            v = mzv(I, digits);
        } else {
            throw std::domain_error("eval_qsym: non-admissible composition outside the regularized subspace");
        }
        total = total + RealApprox::from_rational(c) * v;
    }
    return total;
}

ZetaEvenReport zeta_even_check(int n, unsigned digits) {
    if (n < 1) throw std::invalid_argument("zeta_even_check: n must be >= 1");
    PrecisionGuard guard(digits + 12);
    // -1/2 B_{2n} (2 pi i)^{2n} / (2n)! = -1/2 B_{2n} (-1)^n (2 pi)^{2n} / (2n)!
    Int fact = 1;
    for (int i = 2; i <= 2 * n; ++i) fact *= i;
    Rational coeff = Rational(-1, 2) * bernoulli_number(2 * n) / Rational(fact);
    if (n % 2 == 1) coeff = -coeff;
    RealApprox two_pi = approx_pi() * RealApprox::exact_int(2);
    RealApprox lhs = RealApprox::from_rational(coeff) * approx_pow_int(two_pi, 2 * n);
    RealApprox rhs = zeta(2 * n, digits);
    double residual = std::fabs(static_cast<double>(lhs.value - rhs.value));
    return ZetaEvenReport{n, lhs, rhs, residual, approx_consistent(lhs, rhs)};
}

UniSeries<ApproxRing> gamma_reciprocal_series(int trunc, unsigned digits) {
    if (trunc < 1) throw std::invalid_argument("gamma_reciprocal_series: trunc must be >= 1");
    PrecisionGuard guard(digits + 12);
    ApproxRing A;
    UniSeries<ApproxRing> f(A, std::max(trunc - 1, 1));
    if (f.trunc() >= 1) f.set_coeff(1, euler_gamma(digits));
    for (int k = 2; k <= f.trunc(); ++k) {
        RealApprox c = approx_div_int(zeta(k, digits), k);
        if (k % 2 == 0) c = -c;  // - sum (-1)^k zeta(k)/k z^k
        f.set_coeff(k, c);
    }
    auto g = exp_series(f);
    UniSeries<ApproxRing> out(A, trunc);
    for (int k = 1; k <= trunc; ++k) out.set_coeff(k, g.coeff(k - 1));
    return out;
}

double gamma_series_truncation_bound(int trunc, double z) {
    if (!(z > 0 && z < 0.5))
        throw std::domain_error("gamma_series_truncation_bound: needs 0 < z < 1/2");
    // every coefficient of z exp(...) is bounded by e 2^(k-1) because the
    // exponent's coefficients all lie in [-1, 1]
    return std::exp(1.0) / 2.0 * std::pow(2.0 * z, trunc + 1) / (1.0 - 2.0 * z);
}

RealApprox gamma_real(const Rational& x, unsigned digits) {
    if (x <= 0) throw std::domain_error("gamma_real: requires x > 0");
    PrecisionGuard guard(digits + 14);
    const double target = std::pow(10.0, -(static_cast<double>(digits) + 4.0));
    double a_target = std::max(14.0, 0.45 * static_cast<double>(digits) + 6.0);
    long m = std::max<long>(0, static_cast<long>(std::ceil(a_target - static_cast<double>(x))));
    RealApprox xa = RealApprox::from_rational(x);
    RealApprox y = RealApprox::from_rational(x + m);
    // Stirling: ln Gamma(y) = (y - 1/2) ln y - y + ln(2 pi)/2
    //           + sum_j B_2j / ((2j)(2j-1) y^(2j-1)), remainder <= next term
    RealApprox lny = approx_log(y);
    RealApprox acc = (y - RealApprox::from_rational(Rational(1, 2))) * lny - y;
    acc = acc + approx_div_int(approx_log(approx_pi() * RealApprox::exact_int(2)), 2);
    RealApprox ypow = y;  // y^(2j-1)
    double stop_term = 1e300;
    bool converged = false;
    for (int j = 1; j <= 80; ++j) {
        Rational b = bernoulli_number(2 * j) / Rational((2 * j) * (2 * j - 1));
        RealApprox term = RealApprox::from_rational(b) * approx_inv(ypow);
        double mag = std::fabs(static_cast<double>(term.value));
        if (mag > stop_term) break;
        acc = acc + term;
        stop_term = mag;
        if (mag < target) {
            converged = true;
            break;
        }
        ypow = ypow * y * y;
    }
    if (!converged) throw std::runtime_error("gamma_real: Stirling series did not reach the target");
    acc.err += 2.0 * stop_term;
    RealApprox gamma_y = approx_exp(acc);
    // Gamma(x) = Gamma(x + m) / (x (x+1) ... (x+m-1))
    RealApprox denom = RealApprox::exact_int(1);
    for (long i = 0; i < m; ++i) denom = denom * (xa + RealApprox::exact_int(i));
    return gamma_y * approx_inv(denom);
}

RealApprox eval_series_at(const UniSeries<ApproxRing>& s, const RealApprox& z) {
    RealApprox acc;
    for (int k = s.trunc(); k >= 0; --k) acc = acc * z + s.coeff(k);
    return acc;
}

}  // namespace ltlab
