#include "doctest.h"
#include "ltlab/qsym.hpp"

#include <map>
#include <tuple>

using namespace ltlab;

namespace {

// Brute-force oracle: expand quasisymmetric functions as honest polynomials
// in V commuting variables (exponent-vector -> coefficient) and compare.
using Polynomial = std::map<std::vector<int>, Rational>;

void expand_monomial(const Composition& I, size_t t, int next_var, int V, std::vector<int>& expo,
                     Polynomial& out) {
    if (t == I.size()) {
        auto [it, fresh] = out.emplace(expo, Rational(1));
        if (!fresh) it->second += 1;
        return;
    }
    // variables strictly decreasing: first part on the largest index
    for (int v = next_var; v >= 1 + static_cast<int>(I.size() - t - 1); --v) {
        expo[static_cast<size_t>(v - 1)] += I[t];
        expand_monomial(I, t + 1, v - 1, V, expo, out);
        expo[static_cast<size_t>(v - 1)] -= I[t];
    }
}

Polynomial expand(const QSymElem& x, int V) {
    Polynomial out;
    for (const auto& [I, c] : x.terms()) {
        Polynomial mono;
        std::vector<int> expo(static_cast<size_t>(V), 0);
        expand_monomial(I, 0, V, V, expo, mono);
        for (const auto& [e, m] : mono) {
            auto [it, fresh] = out.emplace(e, m * c);
            if (!fresh) {
                it->second += m * c;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
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

using Triple = std::map<std::tuple<Composition, Composition, Composition>, Rational>;

Triple comul_left_then(const QSymElem& x) {  // (Delta (x) id) Delta
    Triple out;
    for (const auto& [kv, c] : qsym_comul(x)) {
        for (const auto& [kv2, c2] : qsym_comul(QSymElem::monomial(kv.first))) {
            auto key = std::make_tuple(kv2.first, kv2.second, kv.second);
            auto [it, fresh] = out.emplace(key, c * c2);
            if (!fresh) it->second += c * c2;
        }
    }
    return out;
}

Triple comul_right_then(const QSymElem& x) {  // (id (x) Delta) Delta
    Triple out;
    for (const auto& [kv, c] : qsym_comul(x)) {
        for (const auto& [kv2, c2] : qsym_comul(QSymElem::monomial(kv.second))) {
            auto key = std::make_tuple(kv.first, kv2.first, kv2.second);
            auto [it, fresh] = out.emplace(key, c * c2);
            if (!fresh) it->second += c * c2;
        }
    }
    return out;
}

QSymElem tensor_collapse_s_left(const QSymElem& x) {  // m(S (x) id) Delta
    QSymElem out;
    for (const auto& [kv, c] : qsym_comul(x))
        out = out + qsym_mul(antipode(QSymElem::monomial(kv.first)),
                             QSymElem::monomial(kv.second)).scale(c);
    return out;
}

QSymElem tensor_collapse_s_right(const QSymElem& x) {  // m(id (x) S) Delta
    QSymElem out;
    for (const auto& [kv, c] : qsym_comul(x))
        out = out + qsym_mul(QSymElem::monomial(kv.first),
                             antipode(QSymElem::monomial(kv.second))).scale(c);
    return out;
}

}  // namespace

TEST_CASE("qsym_mul") {
    SUBCASE("unit") {
        auto x = QSymElem::monomial({2, 1}, Rational(3)) + QSymElem::monomial({1});
        CHECK(qsym_mul(QSymElem::unit(), x) == x);
        CHECK(qsym_mul(x, QSymElem::unit()) == x);
    }
    SUBCASE("M(1) * M(1) = 2 M(1,1) + M(2)") {
        auto prod = qsym_mul(QSymElem::monomial({1}), QSymElem::monomial({1}));
        QSymElem want = QSymElem::monomial({1, 1}, Rational(2)) + QSymElem::monomial({2});
        CHECK(prod == want);
    }
    SUBCASE("M(1) * M(2) = M(1,2) + M(2,1) + M(3)") {
        auto prod = qsym_mul(QSymElem::monomial({1}), QSymElem::monomial({2}));
        QSymElem want =
            QSymElem::monomial({1, 2}) + QSymElem::monomial({2, 1}) + QSymElem::monomial({3});
        CHECK(prod == want);
    }
    SUBCASE("commutative and associative on small elements") {
        auto a = QSymElem::monomial({1}) + QSymElem::monomial({2}, Rational(2));
        auto b = QSymElem::monomial({1, 1}) - QSymElem::monomial({3});
        auto c = QSymElem::monomial({2});
        CHECK(qsym_mul(a, b) == qsym_mul(b, a));
        CHECK(qsym_mul(qsym_mul(a, b), c) == qsym_mul(a, qsym_mul(b, c)));
    }
    SUBCASE("brute-force polynomial oracle to degree 5 in 6 variables") {
        auto basis = compositions_up_to(4);
        for (const auto& I : basis)
            for (const auto& J : basis) {
                if (composition_weight(I) + composition_weight(J) > 5) continue;
                auto lhs = expand(qsym_mul(QSymElem::monomial(I), QSymElem::monomial(J)), 6);
                auto rhs = poly_mul(expand(QSymElem::monomial(I), 6),
                                    expand(QSymElem::monomial(J), 6));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("qsym_comul") {
    SUBCASE("Delta M() = M() (x) M()") {
        auto t = qsym_comul(QSymElem::unit());
        CHECK(t.size() == 1);
        CHECK(t.at({Composition{}, Composition{}}) == 1);
    }
    SUBCASE("Delta M(2,1) = deconcatenations") {
        auto t = qsym_comul(QSymElem::monomial({2, 1}));
        CHECK(t.size() == 3);
        CHECK(t.at({Composition{}, Composition{2, 1}}) == 1);
        CHECK(t.at({Composition{2}, Composition{1}}) == 1);
        CHECK(t.at({Composition{2, 1}, Composition{}}) == 1);
    }
    SUBCASE("coassociative on all basis elements to degree 6") {
        for (const auto& I : compositions_up_to(6)) {
            auto x = QSymElem::monomial(I);
            CHECK(comul_left_then(x) == comul_right_then(x));
        }
    }
    SUBCASE("bialgebra: Delta(xy) = Delta(x) Delta(y), basis pairs to degree 6") {
        auto basis = compositions_up_to(5);
        for (const auto& I : basis)
            for (const auto& J : basis) {
                if (composition_weight(I) + composition_weight(J) > 6) continue;
                if (I.empty() && J.empty()) continue;
                auto lhs = qsym_comul(qsym_mul(QSymElem::monomial(I), QSymElem::monomial(J)));
                auto rhs = qtensor_mul(qsym_comul(QSymElem::monomial(I)),
                                       qsym_comul(QSymElem::monomial(J)));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("nsym") {
    SUBCASE("Delta Z_1 = Z_0 (x) Z_1 + Z_1 (x) Z_0") {
        auto t = nsym_comul(NSymElem::word({1}));
        CHECK(t.size() == 2);
        CHECK(t.at({Word{}, Word{1}}) == 1);
        CHECK(t.at({Word{1}, Word{}}) == 1);
    }
    SUBCASE("Delta Z_2 = Z_0 (x) Z_2 + Z_1 (x) Z_1 + Z_2 (x) Z_0") {
        auto t = nsym_comul(NSymElem::word({2}));
        CHECK(t.size() == 3);
        CHECK(t.at({Word{1}, Word{1}}) == 1);
    }
    SUBCASE("Delta is an algebra map: Delta(Z1 Z1) = (Delta Z1)^2") {
        auto lhs = nsym_comul(NSymElem::word({1, 1}));
        auto d1 = nsym_comul(NSymElem::word({1}));
        CHECK(lhs == ntensor_mul(d1, d1));
    }
    SUBCASE("concatenation product is associative and noncommutative") {
        auto a = NSymElem::word({1}), b = NSymElem::word({2});
        CHECK(nsym_mul(nsym_mul(a, b), a) == nsym_mul(a, nsym_mul(b, a)));
        CHECK(!(nsym_mul(a, b) == nsym_mul(b, a)));
    }
    SUBCASE("bialgebra on basis words up to degree 6") {
        auto basis = compositions_up_to(4);
        for (const auto& u : basis)
            for (const auto& v : basis) {
                if (composition_weight(u) + composition_weight(v) > 6) continue;
                if (u.empty() && v.empty()) continue;
                auto lhs = nsym_comul(nsym_mul(NSymElem::word(u), NSymElem::word(v)));
                auto rhs = ntensor_mul(nsym_comul(NSymElem::word(u)), nsym_comul(NSymElem::word(v)));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("duality pairing") {
    SUBCASE("dual bases") {
        CHECK(duality_pairing(NSymElem::word({2, 1}), QSymElem::monomial({2, 1})) == 1);
        CHECK(duality_pairing(NSymElem::word({3}), QSymElem::monomial({2, 1})) == 0);
    }
    SUBCASE("adjointness <w, xy> = <Delta w, x (x) y> on degree <= 5 pairs") {
        auto basis = compositions_up_to(3);
        for (const auto& w : basis)
            for (const auto& I : basis)
                for (const auto& J : basis) {
                    if (composition_weight(I) + composition_weight(J) > 5) continue;
                    auto x = QSymElem::monomial(I), y = QSymElem::monomial(J);
                    Rational lhs = duality_pairing(NSymElem::word(w), qsym_mul(x, y));
                    Rational rhs = 0;
                    for (const auto& [kv, c] : nsym_comul(NSymElem::word(w)))
                        rhs += c * duality_pairing(NSymElem::word(kv.first), x) *
                               duality_pairing(NSymElem::word(kv.second), y);
                    CHECK(lhs == rhs);
                }
    }
    SUBCASE("adjointness <wv, x> = <w (x) v, Delta x>") {
        auto basis = compositions_up_to(3);
        for (const auto& w : basis)
            for (const auto& v : basis)
                for (const auto& I : compositions_up_to(5)) {
                    Rational lhs = duality_pairing(
                        nsym_mul(NSymElem::word(w), NSymElem::word(v)), QSymElem::monomial(I));
                    Rational rhs = 0;
                    for (const auto& [kv, c] : qsym_comul(QSymElem::monomial(I)))
                        rhs += c * duality_pairing(NSymElem::word(w), QSymElem::monomial(kv.first)) *
                               duality_pairing(NSymElem::word(v), QSymElem::monomial(kv.second));
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("antipode") {
    SUBCASE("frozen low-degree values") {
        CHECK(antipode(QSymElem::unit()) == QSymElem::unit());
        CHECK(antipode(QSymElem::monomial({1})) == -QSymElem::monomial({1}));
        CHECK(antipode(QSymElem::monomial({2})) == -QSymElem::monomial({2}));
        QSymElem want = QSymElem::monomial({2}) + QSymElem::monomial({1, 1});
        CHECK(antipode(QSymElem::monomial({1, 1})) == want);
    }
    SUBCASE("antipode axioms to degree 6") {
        for (const auto& I : compositions_up_to(6)) {
            auto x = QSymElem::monomial(I);
            QSymElem want = I.empty() ? QSymElem::unit() : QSymElem();
            CHECK(tensor_collapse_s_left(x) == want);
            CHECK(tensor_collapse_s_right(x) == want);
        }
    }
}

TEST_CASE("embed_sym") {
    SUBCASE("p_n -> M(n)") {
        auto e = embed_sym(SymElem::basis_elem(SymBasis::powersum, {4}));
        CHECK(e == QSymElem::monomial({4}));
    }
    SUBCASE("m_(1,1) -> M(1,1)") {
        auto e = embed_sym(SymElem::basis_elem(SymBasis::monomial, {1, 1}));
        CHECK(e == QSymElem::monomial({1, 1}));
    }
    SUBCASE("m_(2,1) -> M(2,1) + M(1,2), matches the polynomial oracle") {
        auto e = embed_sym(SymElem::basis_elem(SymBasis::monomial, {2, 1}));
        CHECK(e == QSymElem::monomial({2, 1}) + QSymElem::monomial({1, 2}));
        // the expansion really is the monomial symmetric polynomial
        auto p = expand(e, 5);
        for (const auto& [expo, c] : p) CHECK(c == 1);
        CHECK(p.size() == 20);  // 5*4 ordered pairs of distinct variables
    }
    SUBCASE("algebra morphism on power sums: embed(p_lam) embed(p_mu) = embed(p_{lam u mu})") {
        std::vector<Partition> ps = {{1}, {2}, {2, 1}, {3}, {2, 2}};
        for (const auto& lam : ps)
            for (const auto& mu : ps) {
                Partition uni = lam;
                uni.insert(uni.end(), mu.begin(), mu.end());
                std::sort(uni.rbegin(), uni.rend());
                auto lhs = qsym_mul(embed_sym(SymElem::basis_elem(SymBasis::powersum, lam)),
                                    embed_sym(SymElem::basis_elem(SymBasis::powersum, mu)));
                CHECK(lhs == embed_sym(SymElem::basis_elem(SymBasis::powersum, uni)));
            }
    }
    SUBCASE("cross-basis identity: p_2 p_1 = m_3 + m_(2,1)") {
        auto lhs = embed_sym(SymElem::basis_elem(SymBasis::powersum, {2, 1}));
        auto rhs = embed_sym(SymElem::basis_elem(SymBasis::monomial, {3})) +
                   embed_sym(SymElem::basis_elem(SymBasis::monomial, {2, 1}));
        CHECK(lhs == rhs);
    }
    SUBCASE("coalgebra morphism: Delta embed(p_lam) = prod (p_i (x) 1 + 1 (x) p_i)") {
        std::vector<Partition> ps = {{1}, {2}, {3}, {2, 1}, {3, 2}, {2, 2, 1}, {4, 2}};
        for (const auto& lam : ps) {
            auto lhs = qsym_comul(embed_sym(SymElem::basis_elem(SymBasis::powersum, lam)));
            QTensor rhs = {{{Composition{}, Composition{}}, Rational(1)}};
            for (int n : lam) {
                QTensor prim = qtensor_of(QSymElem::monomial({n}), QSymElem::unit());
                for (auto& [k, v] : qtensor_of(QSymElem::unit(), QSymElem::monomial({n}))) {
                    auto [it, fresh] = prim.emplace(k, v);
                    if (!fresh) it->second += v;
                }
                rhs = qtensor_mul(rhs, prim);
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("graded dimensions and the free Lie basis") {
    SUBCASE("dim QSym_k = 2^(k-1)") {
        for (int k = 1; k <= 8; ++k)
            CHECK(Int(compositions_of(k).size()) == qsym_graded_dimension(k));
    }
    SUBCASE("lyndon counts in low degree: 1, 1, 2") {
        CHECK(lie_generator_count(1) == 1);
        CHECK(lie_generator_count(2) == 1);
        CHECK(lie_generator_count(3) == 2);
        auto basis3 = lyndon_words(3);
        REQUIRE(basis3.size() == 2);
        CHECK(basis3[0] == Word{1, 2});
        CHECK(basis3[1] == Word{3});
    }
    SUBCASE("necklace-count oracle: L(n) = (1/n) sum_{d|n} mu(n/d) (2^d - 1)") {
        auto moebius = [](int m) {
            int result = 1;
            for (int p = 2; p * p <= m; ++p)
                if (m % p == 0) {
                    m /= p;
                    if (m % p == 0) return 0;
                    result = -result;
                }
            if (m > 1) result = -result;
            return result;
        };
        for (int n = 1; n <= 10; ++n) {
            long acc = 0;
            for (int d = 1; d <= n; ++d)
                if (n % d == 0)
                    acc += moebius(n / d) * static_cast<long>((1L << d) - 1);
            CHECK(lie_generator_count(n) == acc / n);
        }
    }
    SUBCASE("odd-alphabet filter") {
        CHECK(lie_generator_count(3, LieAlphabet::odd) == 1);     // just e_3
        CHECK(lie_generator_count(4, LieAlphabet::odd) == 0);
        CHECK(lie_generator_count(8, LieAlphabet::odd) == 1);     // [e_3, e_5]
        CHECK(lie_generator_count(4, LieAlphabet::odd_with_one) == 1);  // e_1 e_3
        CHECK(lie_generator_count(1, LieAlphabet::odd) == 0);
        CHECK(lie_generator_count(1, LieAlphabet::odd_with_one) == 1);
    }
}

TEST_CASE("rendering") {
    auto prod = qsym_mul(QSymElem::monomial({1}), QSymElem::monomial({1}));
    CHECK(prod.str() == "2*M(1,1) + M(2)");
    CHECK(NSymElem::word({2, 1}).str() == "Z2*Z1");
    CHECK(QSymElem().str() == "0");
}
