#include "ltlab/json_io.hpp"

#include <sstream>

namespace ltlab {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Rational rational_from_str(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    return Rational(Int(s.substr(0, slash))) / Rational(Int(s.substr(slash + 1)));
}

Json padic_to_json(const PadicFloat& x) {
    Json j;
    j["p"] = x.p();
    j["n"] = 1;
    j["prec"] = x.prec();
    if (x.is_zero()) {
        j["val"] = nullptr;
        j["unit_coeffs"] = Json::array();
    } else {
        j["val"] = x.val();
        j["unit_coeffs"] = Json::array({x.unit().str()});
    }
    return j;
}

PadicFloat padic_from_json(const Json& j) {
    long p = j.at("p").get<long>();
    int prec = j.at("prec").get<int>();
    if (j.at("val").is_null()) return PadicFloat(p, prec);
    long val = j.at("val").get<long>();
    Int unit(j.at("unit_coeffs").at(0).get<std::string>());
    // reconstruct as p^val * unit
    PadicFloat u = PadicFloat::from_integer(p, prec, unit);
    PadicFloat shift = val >= 0
        ? PadicFloat::from_integer(p, prec, pow_int(Int(p), static_cast<unsigned long>(val)))
        : PadicFloat::from_integer(p, prec, pow_int(Int(p), static_cast<unsigned long>(-val))).inv();
    return u * shift;
}

Json unramified_to_json(const UnramifiedElem& x) {
    const auto& m = *x.modulus();
    Json j;
    j["p"] = m.p;
    j["n"] = m.n;
    j["prec"] = m.prec;
    if (x.is_zero()) {
        j["val"] = nullptr;
        j["unit_coeffs"] = Json::array();
    } else {
        j["val"] = x.val();
        Json coeffs = Json::array();
        for (const auto& c : x.unit()) coeffs.push_back(c.str());
        j["unit_coeffs"] = coeffs;
    }
    return j;
}

UnramifiedElem unramified_from_json(const Json& j, ModulusPtr mod) {
    long p = j.at("p").get<long>();
    int n = j.at("n").get<int>();
    int prec = j.at("prec").get<int>();
    if (!mod) mod = hensel_lift_modulus(p, n, prec);
    if (mod->p != p || mod->n != n || mod->prec != prec)
        throw std::invalid_argument("unramified_from_json: modulus mismatch");
    if (j.at("val").is_null()) return UnramifiedElem(mod);
    std::vector<Int> coeffs;
    for (const auto& c : j.at("unit_coeffs")) coeffs.emplace_back(c.get<std::string>());
    return UnramifiedElem::from_coeffs(mod, std::move(coeffs), j.at("val").get<long>());
}

Json series_to_json(const UniSeries<RationalRing>& s) {
    Json coeffs = Json::array();
    for (int k = 0; k <= s.trunc(); ++k) coeffs.push_back(rational_str(s.coeff(k)));
    return Json{{"trunc", s.trunc()}, {"coeffs", coeffs}};
}

Json series_to_json(const BiSeries<RationalRing>& s) {
    Json terms = Json::array();
    for (int i = 0; i <= s.trunc(); ++i)
        for (int j = 0; i + j <= s.trunc(); ++j)
            if (s.coeff(i, j) != 0)
                terms.push_back(Json{{"i", i}, {"j", j}, {"c", rational_str(s.coeff(i, j))}});
    return Json{{"trunc", s.trunc()}, {"terms", terms}};
}

std::string series_str(const UniSeries<RationalRing>& s, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= s.trunc(); ++k) {
        Rational c = s.coeff(k);
        if (c == 0) continue;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << "-";
            c = -c;
        }
        if (k == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Json od_to_json(const ODElem& x) {
    Json coeffs = Json::array();
    for (int i = 0; i < x.modulus()->n; ++i) coeffs.push_back(unramified_to_json(x.coeff(i)));
    Json j{{"coeffs", coeffs}};
    auto v = x.valuation();
    if (v) {
        j["valuation"] = rational_str(*v);
    } else {
        j["valuation"] = nullptr;
    }
    return j;
}

Json lie_to_json(const GradedLieElem& x) {
    Json terms = Json::array();
    for (const auto& [w, c] : x.terms())
        terms.push_back(Json{{"word", w}, {"c", rational_str(c)}});
    return Json{{"trunc", x.trunc()}, {"terms", terms}};
}

Json conn_to_json(const ConnCoeffs& x) {
    Json terms = Json::array();
    for (const auto& [k, v] : x.terms())
        terms.push_back(Json{{"z_exp", k.first}, {"u_exp", k.second}, {"lie", lie_to_json(v)}});
    return Json{{"trunc", x.trunc()}, {"terms", terms}};
}

Json qsym_to_json(const QSymElem& x) {
    Json terms = Json::array();
    for (const auto& [I, c] : x.terms())
        terms.push_back(Json{{"composition", I}, {"c", rational_str(c)}});
    return terms;
}

}  // namespace ltlab
