#include "bkk/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "bkk/error.hpp"

namespace bkk::io {

namespace {

const Json& member(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

const Json& array(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    return j;
}

Coord parse_coord(const Json& j) {
    try {
        return to_int64(parse_integer(j));
    } catch (const RangeError&) {
        throw ParseError("coordinate does not fit in 64 bits");
    }
}

Point parse_point(const Json& j, std::size_t dim, const char* what) {
    array(j, what);
    if (j.size() != dim)
        throw ParseError(std::string(what) + " has length " + std::to_string(j.size()) + ", expected " + std::to_string(dim));
    Point p;
    for (const auto& x : j) p.push_back(parse_coord(x));
    return p;
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

BigInt parse_integer(const Json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return BigInt(j.get<unsigned long>());
        return BigInt(j.get<long>());
    }
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        const std::string digits = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? s.substr(1) : s;
        if (!all_digits(digits)) throw ParseError("not an integer: \"" + s + "\"");
        return BigInt(s[0] == '+' ? digits : s, 10);
    }
    throw ParseError("expected an integer, got " + j.dump());
}

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    Rational out;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        const auto num = s.substr(0, slash);
        const auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw ParseError("not a fraction: \"" + text + "\"");
        if (BigInt(den, 10) == 0) throw ParseError("zero denominator: \"" + text + "\"");
        out = Rational(BigInt(num, 10), BigInt(den, 10));
    } else {
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string::npos) {
            std::string exp_text = s.substr(e + 1);
            s = s.substr(0, e);
            const bool neg = !exp_text.empty() && exp_text[0] == '-';
            if (!exp_text.empty() && (exp_text[0] == '-' || exp_text[0] == '+')) exp_text = exp_text.substr(1);
            if (!all_digits(exp_text) || exp_text.size() > 6) throw ParseError("bad exponent: \"" + text + "\"");
            exponent = std::stol(exp_text) * (neg ? -1 : 1);
        }
        std::string int_part = s, frac_part;
        if (auto dot = s.find('.'); dot != std::string::npos) {
            int_part = s.substr(0, dot);
            frac_part = s.substr(dot + 1);
        }
        if (int_part.empty() && frac_part.empty()) throw ParseError("not a number: \"" + text + "\"");
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
            throw ParseError("not a number: \"" + text + "\"");
        exponent -= static_cast<long>(frac_part.size());
        BigInt mantissa(int_part + frac_part, 10);
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
        out = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
    }
    out.canonicalize();
    return negative ? Rational(-out) : out;
}

GaussianRational parse_coefficient(const Json& j) {
    auto real = [](const Json& x) -> Rational {
        if (x.is_string()) return parse_rational(x.get<std::string>());
        if (x.is_number_integer()) return Rational(parse_integer(x));
        if (x.is_number_float()) return parse_rational(x.dump());
        throw ParseError("expected a number, got " + x.dump());
    };
    if (j.is_array()) {
        if (j.size() != 2) throw ParseError("a coefficient is [re, im]");
        return {real(j[0]), real(j[1])};
    }
    return {real(j), Rational(0)};
}

IntegerMatrix parse_matrix(const Json& j) {
    const auto& rows = array(member(j, "entries"), "entries");
    if (rows.empty()) throw ParseError("matrix has no rows");
    const std::size_t cols = array(rows[0], "matrix row").size();
    std::vector<BigVector> out;
    for (const auto& r : rows) {
        if (array(r, "matrix row").size() != cols) throw ParseError("matrix rows have different lengths");
        BigVector v;
        for (const auto& x : r) v.push_back(parse_integer(x));
        out.push_back(std::move(v));
    }
    return IntegerMatrix::from_rows(out, cols);
}

SystemDocument parse_system(const Json& j) {
    std::vector<std::string> names;
    for (const auto& v : array(member(j, "variables"), "variables")) {
        if (!v.is_string()) throw ParseError("variable names must be strings");
        names.push_back(v.get<std::string>());
    }
    const std::size_t n = names.size();
    std::vector<Polynomial> polys;
    for (const auto& terms : array(member(j, "polynomials"), "polynomials")) {
        Polynomial f(n);
        for (const auto& t : array(terms, "term list")) {
            const Point e = parse_point(member(t, "exponents"), n, "exponent vector");
            f.add_term(e, parse_coefficient(member(t, "coeff")));
        }
        polys.push_back(std::move(f));
    }
    try {
        return {names, PolynomialSystem(n, std::move(polys))};
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

PointsDocument parse_points(const Json& j) {
    const auto dim_json = member(j, "dimension");
    if (!dim_json.is_number_unsigned()) throw ParseError("dimension must be a nonnegative integer");
    const auto dim = dim_json.get<std::size_t>();
    std::vector<Point> pts;
    for (const auto& p : array(member(j, "points"), "points")) pts.push_back(parse_point(p, dim, "point"));
    PointsDocument doc;
    try {
        doc.points = PointConfiguration(dim, std::move(pts));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    if (j.contains("lifts")) {
        std::vector<Coord> lifts;
        for (const auto& x : array(j["lifts"], "lifts")) lifts.push_back(parse_coord(x));
        if (lifts.size() != doc.points.size()) throw ParseError("one lift per point is required");
        doc.lifts = std::move(lifts);
    }
    return doc;
}

BinomialSystem parse_binomial(const Json& j) {
    if (j.is_object() && j.contains("exponent_matrix")) {
        Json wrapped{{"entries", j["exponent_matrix"]}};
        IntegerMatrix e = parse_matrix(wrapped);
        std::vector<GaussianRational> c;
        for (const auto& x : array(member(j, "constants"), "constants")) c.push_back(parse_coefficient(x));
        try {
            return BinomialSystem(std::move(e), std::move(c));
        } catch (const Error& err) {
            throw ParseError(err.what());
        }
    }
    const auto doc = parse_system(j);
    const std::size_t n = doc.system.num_vars();
    if (doc.system.size() != n) throw ParseError("a binomial system needs as many equations as variables");
    IntegerMatrix e(n, n);
    std::vector<GaussianRational> c;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& terms = doc.system[i].terms();
        if (terms.size() != 2) throw ParseError("equation " + std::to_string(i + 1) + " does not have exactly two terms");
        const auto& [a, ca] = *terms.begin();
        const auto& [b, cb] = *std::next(terms.begin());
        for (std::size_t k = 0; k < n; ++k) e(i, k) = to_big(a[k] - b[k]);
        GaussianRational q = cb * ca.inverse();
        c.push_back({-q.re, -q.im});
    }
    return BinomialSystem(std::move(e), std::move(c));
}

Json to_json(const BigInt& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Json to_json(const BigVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json to_json(const IntegerMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
    return Json{{"entries", rows}};
}

Json to_json(const Rational& q) { return Json(q.get_str()); }

Json to_json(const GaussianRational& c) { return Json::array({c.re.get_str(), c.im.get_str()}); }

Json to_json(const PointConfiguration& a, const std::optional<std::vector<Coord>>& lifts) {
    Json out{{"dimension", a.dimension()}, {"points", a.points()}};
    if (lifts) out["lifts"] = *lifts;
    return out;
}

Json to_json(const SystemDocument& doc) {
    Json polys = Json::array();
    for (const auto& f : doc.system.polynomials()) {
        Json terms = Json::array();
        for (const auto& [e, c] : f.terms()) terms.push_back({{"exponents", e}, {"coeff", to_json(c)}});
        polys.push_back(std::move(terms));
    }
    return Json{{"variables", doc.variables}, {"polynomials", polys}};
}

}  // namespace bkk::io
