#include "g2a/exprio.hpp"

#include <stdexcept>

namespace g2a {

std::string rational_str(const Q& q) { return q.str(); }

namespace {

Json alg_to_json(const Alg& a) {
    if (a.is_rational()) return Json{{"op", "const"}, {"value", a.rational_part().str()}};
    Json terms = Json::array();
    for (const auto& [idx, c] : a.terms()) {
        terms.push_back(Json{{"two_sixths", idx / 2}, {"sqrt3", idx % 2}, {"value", c.str()}});
    }
    return Json{{"op", "const"}, {"terms", terms}};
}

Json term_to_json(const Poly::Term& t) {
    std::vector<Json> factors;
    if (!t.c.is_one()) factors.push_back(alg_to_json(t.c));
    for (int g = 0; g < gens::count; ++g) {
        int e = t.m.e[static_cast<size_t>(g)];
        if (!e) continue;
        Json gen{{"op", "gen"}, {"name", std::string(gens::name(g))}};
        if (e == 1)
            factors.push_back(gen);
        else
            factors.push_back(Json{{"op", "pow"}, {"base", gen}, {"exp", e}});
    }
    if (factors.empty()) return alg_to_json(t.c);
    if (factors.size() == 1) return factors[0];
    return Json{{"op", "mul"}, {"args", factors}};
}

Json poly_to_json(const Poly& p) {
    if (p.is_zero()) return Json{{"op", "const"}, {"value", "0"}};
    if (p.term_count() == 1) return term_to_json(p.terms()[0]);
    Json args = Json::array();
    for (const auto& t : p.terms()) args.push_back(term_to_json(t));
    return Json{{"op", "add"}, {"args", args}};
}

Alg alg_from_json(const Json& j) {
    if (j.contains("value")) return Alg(Q::parse(j.at("value").get<std::string>()));
    Alg a;
    for (const auto& t : j.at("terms")) {
        a += Alg::radical(Q::parse(t.at("value").get<std::string>()),
                          t.at("two_sixths").get<long>(), t.at("sqrt3").get<long>());
    }
    return a;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
    Json num = poly_to_json(s.num());
    if (s.is_polynomial()) return num;
    return Json{{"op", "div"}, {"args", Json::array({num, poly_to_json(s.den())})}};
}

Scalar scalar_from_json(const Json& j) {
    const std::string op = j.at("op").get<std::string>();
    if (op == "const") return Scalar(alg_from_json(j));
    if (op == "gen") {
        int g = gens::by_name(j.at("name").get<std::string>());
        if (g < 0) throw std::invalid_argument("unknown generator in expression tree");
        return Scalar::generator(g);
    }
    if (op == "pow") {
        Scalar base = scalar_from_json(j.at("base"));
        return base.pow(j.at("exp").get<long>());
    }
    if (op == "add" || op == "mul") {
        Scalar acc = op == "add" ? Scalar(0) : Scalar(1);
        for (const auto& a : j.at("args"))
            acc = op == "add" ? acc + scalar_from_json(a) : acc * scalar_from_json(a);
        return acc;
    }
    if (op == "div") {
        const auto& args = j.at("args");
        return scalar_from_json(args.at(0)) / scalar_from_json(args.at(1));
    }
    throw std::invalid_argument("unknown expression op: " + op);
}

// ---------------------------------------------------------------------------
// LaTeX
// ---------------------------------------------------------------------------

namespace {

std::string q_latex(const Q& q, bool* negative) {
    Q a = q.abs();
    *negative = q.sign() < 0;
    std::string s = a.str();
    auto slash = s.find('/');
    if (slash == std::string::npos) return s;
    return "\\tfrac{" + s.substr(0, slash) + "}{" + s.substr(slash + 1) + "}";
}

std::string radical_latex(int i, int j) {
    std::string out;
    if (i == 3)
        out += "\\sqrt{2}";
    else if (i != 0)
        out += "2^{" + std::to_string(i) + "/6}";
    if (j == 1) out += out.empty() ? "\\sqrt{3}" : "\\,\\sqrt{3}";
    return out;
}

std::string gen_latex(int g, int e) {
    std::string base;
    if (g == gens::E) {
        // E^k = e^(k b x / 3)
        std::string expo;
        if (e % 3 == 0)
            expo = (e / 3 == 1 ? std::string() : std::to_string(e / 3)) + "b x";
        else
            expo = "\\tfrac{" + std::to_string(e) + "}{3} b x";
        return "\\mathrm{e}^{" + expo + "}";
    }
    if (g >= gens::a0 && g < gens::a0 + 7)
        base = "a_{" + std::to_string(g - gens::a0) + "}";
    else if (g == gens::alpha)
        base = "\\alpha";
    else if (g == gens::beta)
        base = "\\beta";
    else if (g == gens::gamma)
        base = "\\gamma";
    else if (g == gens::lambda)
        base = "\\lambda";
    else if (g >= gens::jet1_base)
        base = "\\Upsilon_{" + std::string(gens::name(g)).substr(1) + "}";
    else
        base = std::string(gens::name(g));
    if (e == 1) return base;
    return base + "^{" + std::to_string(e) + "}";
}

std::string poly_latex(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        std::string cs;
        bool neg = false;
        if (t.c.is_rational()) {
            cs = q_latex(t.c.rational_part(), &neg);
        } else if (t.c.terms().size() == 1) {
            const auto& [idx, coef] = t.c.terms()[0];
            cs = q_latex(coef, &neg);
            if (cs == "1") cs.clear();
            cs += radical_latex(idx / 2, idx % 2);
        } else {
            cs = "\\left(" + alg_to_latex(t.c) + "\\right)";
        }
        if (first) {
            out += neg ? "-" : "";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (int g = 0; g < gens::count; ++g) {
            int e = t.m.e[static_cast<size_t>(g)];
            if (!e) continue;
            if (!mono.empty()) mono += " ";
            mono += gen_latex(g, e);
        }
        if (mono.empty())
            out += cs.empty() ? "1" : cs;
        else
            out += (cs == "1" || cs.empty() ? "" : cs + "\\,") + mono;
    }
    return out;
}

}  // namespace

std::string alg_to_latex(const Alg& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : a.terms()) {
        bool neg = false;
        std::string cs = q_latex(c, &neg);
        std::string rad = radical_latex(idx / 2, idx % 2);
        if (!rad.empty() && cs == "1") cs.clear();
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        out += cs + (cs.empty() || rad.empty() ? "" : "\\,") + rad;
        if (cs.empty() && rad.empty()) out += "1";
    }
    return out;
}

std::string scalar_to_latex(const Scalar& s) {
    if (s.is_polynomial()) return poly_latex(s.num());
    return "\\frac{" + poly_latex(s.num()) + "}{" + poly_latex(s.den()) + "}";
}

}  // namespace g2a
