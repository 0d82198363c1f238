#include "sl2cas/json_io.hpp"

#include <stdexcept>

namespace sl2cas {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
    throw std::invalid_argument("schema violation: " + what);
}

const json& expect(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing key '") + key + "'");
    return j.at(key);
}

}  // namespace

json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) schema_error("rational must be a \"num/den\" string");
    return parse_rational(j.get<std::string>());
}

json poly_json(const UniPoly& p) {
    json arr = json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(rational_json(c));
    return arr;
}

UniPoly poly_from_json(const json& j) {
    if (!j.is_array()) schema_error("polynomial must be an array of coefficients");
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return UniPoly(coeffs);
}

json ratfunc_json(const RatFunc& f) {
    return json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}};
}

RatFunc ratfunc_from_json(const json& j) {
    return RatFunc(poly_from_json(expect(j, "num")), poly_from_json(expect(j, "den")));
}

json skew_json(const SkewElement& a) {
    json obj = json::object();
    for (const auto& [degree, coeff] : a.terms())
        obj[std::to_string(degree)] = ratfunc_json(coeff);
    return obj;
}

SkewElement skew_from_json(const json& j) {
    if (!j.is_object()) schema_error("skew element must be a degree -> coefficient object");
    SkewElement a;
    for (const auto& [key, value] : j.items()) {
        std::size_t pos = 0;
        int degree = 0;
        try {
            degree = std::stoi(key, &pos);
        } catch (const std::exception&) {
            schema_error("bad degree key '" + key + "'");
        }
        if (pos != key.size()) schema_error("bad degree key '" + key + "'");
        a += SkewElement::term(ratfunc_from_json(value), degree);
    }
    return a;
}

json matrix_json(const PolyMatrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(poly_json(m.at(i, j)));
        entries.push_back(row);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

PolyMatrix matrix_from_json(const json& j) {
    const int rows = expect(j, "rows").get<int>();
    const int cols = expect(j, "cols").get<int>();
    const json& entries = expect(j, "entries");
    if (rows < 0 || cols < 0) schema_error("negative matrix dimensions");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        schema_error("entry grid does not match 'rows'");
    PolyMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = entries.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            schema_error("entry grid does not match 'cols'");
        for (int c = 0; c < cols; ++c) m.at(i, c) = poly_from_json(row.at(c));
    }
    return m;
}

json smith_form_json(const SmithForm& f) {
    return json{{"U", matrix_json(f.U)}, {"S", matrix_json(f.S)}, {"V", matrix_json(f.V)}};
}

json smith_type_json(const SmithType& t) {
    json indices = json::array();
    indices.push_back(t.i);
    indices.push_back(t.j);
    if (t.kind != SmithKind::Zero) indices.push_back(t.k);
    const char* variant = t.kind == SmithKind::Plus   ? "plus"
                          : t.kind == SmithKind::Minus ? "minus"
                                                       : "zero";
    json out{{"variant", variant}, {"indices", indices}};
    if (t.degenerate) out["degenerate"] = true;
    return out;
}

SmithType smith_type_from_json(const json& j) {
    const std::string variant = expect(j, "variant").get<std::string>();
    const json& idx = expect(j, "indices");
    for (const auto& v : idx)
        if (!v.is_number_integer() || v.get<int>() < 0) schema_error("indices must be >= 0");
    if (variant == "zero") {
        if (idx.size() != 2) schema_error("zero type takes two indices");
        return SmithType::zero(idx.at(0).get<int>(), idx.at(1).get<int>());
    }
    if (idx.size() != 3) schema_error("plus/minus types take three indices");
    if (idx.at(1).get<int>() < 1) schema_error("plus/minus types need a nonempty middle run");
    if (variant == "plus")
        return SmithType::plus(idx.at(0).get<int>(), idx.at(1).get<int>(), idx.at(2).get<int>());
    if (variant == "minus")
        return SmithType::minus(idx.at(0).get<int>(), idx.at(1).get<int>(), idx.at(2).get<int>());
    schema_error("unknown variant '" + variant + "'");
}

json rep_json(const CasimirRep& rep) {
    return json{{"mu", rational_json(rep.mu())}, {"n", rep.rank()}, {"A1", matrix_json(rep.a1())}};
}

CasimirRep rep_from_json(const json& j) {
    const Rational mu = rational_from_json(expect(j, "mu"));
    const PolyMatrix a1 = matrix_from_json(expect(j, "A1"));
    if (j.contains("n") && j.at("n").get<int>() != a1.rows())
        schema_error("'n' disagrees with the A1 dimensions");
    return CasimirRep(mu, a1);
}

json verification_json(const VerificationReport& r) {
    json out{{"casimirLeft", r.casimirLeft},
             {"casimirRight", r.casimirRight},
             {"commutator", r.commutator},
             {"scalarIsConstant", r.scalarIsConstant},
             {"casimirScalar", rational_json(r.casimirScalar)},
             {"level", rational_json(r.level)},
             {"ok", r.all_ok()}};
    if (r.smithType)
        out["smithType"] = smith_type_json(*r.smithType);
    else
        out["smithType"] = nullptr;
    out["T"] = matrix_json(r.tMatrix);
    return out;
}

json module_json(const QuotientModule& q) {
    return json{{"alpha", skew_json(q.alpha)},
                {"mu", rational_json(q.mu)},
                {"rank", q.rank},
                {"A1", matrix_json(q.rep.a1())}};
}

QuotientModule module_from_json(const json& j) {
    const SkewElement alpha = skew_from_json(expect(j, "alpha"));
    const Rational mu = rational_from_json(expect(j, "mu"));
    const PolyMatrix a1 = matrix_from_json(expect(j, "A1"));
    const int rank = expect(j, "rank").get<int>();
    if (rank != a1.rows()) schema_error("'rank' disagrees with the A1 dimensions");
    if (a1 != companion_matrix(alpha))
        throw std::domain_error("module data inconsistent: A1 is not the companion matrix of alpha");
    return {alpha, mu, rank, CasimirRep(mu, a1)};
}

json verdict_json(const FalsifierVerdict& v) {
    json witness = nullptr;
    if (v.witness) {
        json gen = json::array();
        for (const UniPoly& p : v.witness->generator) gen.push_back(poly_json(p));
        witness = json{{"generator", gen},
                       {"basis", matrix_json(v.witness->basis)},
                       {"subA1", matrix_json(v.witness->subA1)},
                       {"rank", v.witness->rank}};
    }
    return json{{"outcome", v.outcome == FalsifierVerdict::Outcome::NoCounterexample
                                ? "no_counterexample"
                                : "proper_submodule"},
                {"witness", witness},
                {"bounds",
                 json{{"degBound", v.degBound},
                      {"wordLen", v.wordLen},
                      {"samples", v.samples},
                      {"candidatesTried", v.candidatesTried}}},
                {"seed", v.seed}};
}

}  // namespace sl2cas
