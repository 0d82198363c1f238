// Command-line front end: every pipeline of the library behind one verb
// each, JSON in, JSON out. Exit codes: 0 success (and all checks true for
// verify-style verbs), 1 mathematical precondition or verification failure,
// 2 malformed input.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

#include "sl2cas/json_io.hpp"
#include "sl2cas/linalg.hpp"

namespace {

using namespace sl2cas;
using nlohmann::json;

json load_json(const std::string& path, const std::string& inlineJson) {
    if (!inlineJson.empty()) return json::parse(inlineJson);
    if (path.empty()) throw std::invalid_argument("provide --in <file> or --json <inline JSON>");
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    return json::parse(in);
}

// Command-line polynomials are comma-separated ascending coefficients:
// "0,1" is z, "-2,-1,1" is z^2 - z - 2.
UniPoly poly_from_flag(const std::string& text) {
    std::vector<Rational> coeffs;
    std::string item;
    for (std::size_t pos = 0; pos <= text.size(); ++pos) {
        if (pos == text.size() || text[pos] == ',') {
            if (!item.empty()) coeffs.push_back(parse_rational(item));
            item.clear();
        } else if (!std::isspace(static_cast<unsigned char>(text[pos]))) {
            item += text[pos];
        }
    }
    if (coeffs.empty()) throw std::invalid_argument("empty polynomial literal '" + text + "'");
    return UniPoly(coeffs);
}

int emit(json j, int exitCode = 0) {
    j["schema_version"] = "1";
    std::cout << j.dump(2) << "\n";
    return exitCode;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SL2_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

struct CommonInput {
    std::string path;
    std::string inlineJson;
    void attach(CLI::App* cmd) {
        cmd->add_option("--in", path, "input JSON file");
        cmd->add_option("--json", inlineJson, "inline input JSON");
    }
    json load() const { return load_json(path, inlineJson); }
};

CasimirRep rep_from_flexible(const json& j) {
    if (j.contains("alpha")) return module_from_json(j).rep;
    if (j.contains("module")) return module_from_json(j.at("module")).rep;
    if (j.contains("rep")) return rep_from_json(j.at("rep"));
    return rep_from_json(j);
}

// Semi-levels below -1/2 duplicate the strip above it; they are accepted
// (every identity is algebraic) but flagged.
void warn_mu(json& out, const Rational& mu) {
    if (mu < make_rational(-1, 2))
        out["warnings"] = json::array({"mu < -1/2: this semi-level mirrors one with mu >= -1/2"});
}

int run_smith(const CommonInput& input) {
    const PolyMatrix m = matrix_from_json(input.load());
    const SmithForm f = smith_normal_form(m);
    json out = smith_form_json(f);
    json factors = json::array();
    for (const UniPoly& s : f.invariant_factors()) factors.push_back(poly_json(s));
    out["invariantFactors"] = factors;
    json checks{{"reconstructs", f.U * f.S * f.V == m},
                {"unimodularU", is_unimodular(f.U)},
                {"unimodularV", is_unimodular(f.V)}};
    if (std::max(m.rows(), m.cols()) <= 5)
        checks["oracleAgrees"] = invariant_factors_oracle(m) == f.invariant_factors();
    out["checks"] = checks;
    return emit(out);
}

int run_rep_build(const CommonInput& input, const std::string& mu) {
    const CasimirRep rep = rep_from_phi(parse_rational(mu), matrix_from_json(input.load()));
    const VerificationReport report = verify_rep(rep);
    json out{{"rep", rep_json(rep)}, {"report", verification_json(report)}};
    warn_mu(out, rep.mu());
    return emit(std::move(out), report.all_ok() ? 0 : 1);
}

int run_rep_verify(const CommonInput& input) {
    const CasimirRep rep = rep_from_flexible(input.load());
    const VerificationReport report = verify_rep(rep);
    return emit(json{{"report", verification_json(report)}}, report.all_ok() ? 0 : 1);
}

int run_rep_classify(const CommonInput& input) {
    const CasimirRep rep = rep_from_flexible(input.load());
    const SmithType t = smith_type(rep);
    json factors = json::array();
    for (const UniPoly& s : rep.smith().invariant_factors()) factors.push_back(poly_json(s));
    return emit(json{{"smithType", smith_type_json(t)}, {"invariantFactors", factors}});
}

int run_rep_dualize(const CommonInput& input) {
    const CasimirRep rep = rep_from_flexible(input.load());
    const DualPair pair = dual_pair(rep);
    return emit(json{{"dual", rep_json(pair.dual)},
                     {"primalType", smith_type_json(smith_type(pair.primal))},
                     {"dualType", smith_type_json(smith_type(pair.dual))},
                     {"report", verification_json(verify_rep(pair.dual))}});
}

int run_alpha_dualize(const CommonInput& input, const std::string& mu) {
    const Rational level = parse_rational(mu);
    const SkewElement alpha = skew_from_json(input.load());
    const AlphaDual dual = dual_alpha(alpha, level);
    const bool check = duality_pairing_check(alpha, dual.raw, level);
    json out{{"alphaStar", skew_json(dual.normalized)},
             {"raw", skew_json(dual.raw)},
             {"clearing", poly_json(dual.clearing)},
             {"pairingCheck", check}};
    warn_mu(out, level);
    return emit(std::move(out), check ? 0 : 1);
}

int run_rank1(const std::string& mu, const std::string& gamma, const std::string& type) {
    Rank1Type t;
    if (type == "I")
        t = Rank1Type::I;
    else if (type == "II")
        t = Rank1Type::II;
    else if (type == "III")
        t = Rank1Type::III;
    else if (type == "IV")
        t = Rank1Type::IV;
    else
        throw std::invalid_argument("type must be one of I, II, III, IV");
    const CasimirRep rep = rank1_catalog(parse_rational(mu), parse_rational(gamma), t);
    const Rank1IdealReport ideals = rank1_invariant_ideals(rep);
    json idealsJson = json::array(), undecided = json::array();
    for (const UniPoly& f : ideals.ideals) idealsJson.push_back(poly_json(f));
    for (const UniPoly& f : ideals.undecided) undecided.push_back(poly_json(f));
    json out{{"rep", rep_json(rep)},
             {"smithType", smith_type_json(smith_type(rep))},
             {"invariantIdeals", idealsJson},
             {"undecidedFactors", undecided},
             {"report", verification_json(verify_rep(rep))}};
    warn_mu(out, rep.mu());
    return emit(std::move(out));
}

int run_strata(int n, const std::string& mu) {
    const Rational level = parse_rational(mu);
    json types = json::array();
    for (const SmithType& t : enumerate_smith_types(n)) {
        const CasimirRep rep = realize_type(t, level);
        json diag = json::array();
        for (const UniPoly& d : t.diagonal(level)) diag.push_back(poly_json(d));
        types.push_back(json{{"type", smith_type_json(t)},
                             {"diagonal", diag},
                             {"realized", verify_rep(rep).all_ok() && smith_type(rep) == t}});
    }
    json out{{"n", n},
             {"mu", rational_json(level)},
             {"count", static_cast<int>(types.size())},
             {"types", types}};
    warn_mu(out, level);
    return emit(std::move(out));
}

int run_family_build(int n, const std::string& p, const std::string& a0, const std::string& mu) {
    const QuotientModule q =
        build_family(n, poly_from_flag(p), parse_rational(a0), parse_rational(mu));
    json out{{"module", module_json(q)},
             {"smithType", smith_type_json(smith_type(q.rep))},
             {"report", verification_json(verify_rep(q.rep))}};
    warn_mu(out, q.mu);
    return emit(std::move(out));
}

int run_family_falsify(const CommonInput& input, int degBound, int wordLen, long samples,
                       std::uint64_t seed, int jobs) {
    const CasimirRep rep = rep_from_flexible(input.load());
    const FalsifierVerdict v = simplicity_falsifier(rep, degBound, wordLen, samples, seed, jobs);
    return emit(verdict_json(v));
}

int run_reduce(const CommonInput& input) {
    const json j = input.load();
    const QuotientModule q = module_from_json(j.contains("module") ? j.at("module") : j);
    if (!j.contains("element")) throw std::invalid_argument("missing 'element'");
    const std::vector<UniPoly> coords = reduce_mod_alpha(skew_from_json(j.at("element")), q);
    json arr = json::array();
    for (const UniPoly& c : coords) arr.push_back(poly_json(c));
    return emit(json{{"coordinates", arr}});
}

int run_endo(const CommonInput& input, int degBound) {
    const CasimirRep rep = rep_from_flexible(input.load());
    if (degBound < 0) {
        // default: highest entry degree plus two, reported so callers can
        // raise it
        degBound = 2;
        for (int i = 0; i < rep.rank(); ++i)
            for (int j = 0; j < rep.rank(); ++j)
                degBound = std::max(degBound, rep.a1().at(i, j).degree() + 2);
    }
    const auto basis = endomorphism_basis(rep, degBound);
    json arr = json::array();
    for (const PolyMatrix& phi : basis) arr.push_back(matrix_json(phi));
    return emit(json{{"degBound", degBound},
                     {"dimension", static_cast<int>(basis.size())},
                     {"basis", arr}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with polynomial Casimir representations of sl(2)"};
    app.require_subcommand(1);

    CommonInput input;
    std::string mu = "0", gamma = "1", type = "IV", pFlag = "0,1", a0 = "1";
    int n = 2, degBound = -1, falsifyDegBound = 3, wordLen = 6, jobs = 1;
    long samples = 50;
    std::uint64_t seed = default_seed();

    std::function<int()> action;

    auto* smith = app.add_subcommand("smith", "Smith normal form of a matrix over Q[z]");
    input.attach(smith);
    smith->callback([&] { action = [&] { return run_smith(input); }; });

    auto* repBuild = app.add_subcommand("rep-build", "build a representation from phi = A1(z)");
    input.attach(repBuild);
    repBuild->add_option("--mu", mu, "semi-level (rational)");
    repBuild->callback([&] { action = [&] { return run_rep_build(input, mu); }; });

    auto* repVerify = app.add_subcommand("rep-verify", "check the Casimir identities");
    input.attach(repVerify);
    repVerify->callback([&] { action = [&] { return run_rep_verify(input); }; });

    auto* repClassify = app.add_subcommand("rep-classify", "Smith type of a representation");
    input.attach(repClassify);
    repClassify->callback([&] { action = [&] { return run_rep_classify(input); }; });

    auto* repDualize = app.add_subcommand("rep-dualize", "dual representation and type swap");
    input.attach(repDualize);
    repDualize->callback([&] { action = [&] { return run_rep_dualize(input); }; });

    auto* alphaDualize =
        app.add_subcommand("alpha-dualize", "dual generator of a skew polynomial");
    input.attach(alphaDualize);
    alphaDualize->add_option("--mu", mu, "semi-level (rational)");
    alphaDualize->callback([&] { action = [&] { return run_alpha_dualize(input, mu); }; });

    auto* rank1 = app.add_subcommand("rank1", "rank-one catalog member and its invariant ideals");
    rank1->add_option("--mu", mu, "semi-level (rational)");
    rank1->add_option("--gamma", gamma, "nonzero scale");
    rank1->add_option("--type", type, "I, II, III or IV");
    rank1->callback([&] { action = [&] { return run_rank1(mu, gamma, type); }; });

    auto* strata = app.add_subcommand("strata", "all Smith types of a given rank");
    strata->add_option("--n", n, "rank");
    strata->add_option("--mu", mu, "semi-level (rational)");
    strata->callback([&] { action = [&] { return run_strata(n, mu); }; });

    auto* familyBuild =
        app.add_subcommand("family-build", "quotient module for X^n - p(z) X^{n-1} - a0");
    familyBuild->add_option("--n", n, "rank, at least 2");
    familyBuild->add_option("--p", pFlag, "p(z), comma-separated ascending coefficients");
    familyBuild->add_option("--a0", a0, "constant term (rational, nonzero)");
    familyBuild->add_option("--mu", mu, "semi-level (rational)");
    familyBuild->callback([&] { action = [&] { return run_family_build(n, pFlag, a0, mu); }; });

    auto* familyFalsify = app.add_subcommand("family-falsify", "search for proper submodules");
    input.attach(familyFalsify);
    familyFalsify->add_option("--deg-bound", falsifyDegBound, "candidate entry degree bound");
    familyFalsify->add_option("--word-len", wordLen, "orbit word length");
    familyFalsify->add_option("--samples", samples, "extra pseudorandom candidates");
    familyFalsify->add_option("--seed", seed, "random seed (also SL2_SEED)");
    familyFalsify->add_option("--jobs", jobs, "parallel workers; output is identical for any");
    familyFalsify->callback([&] {
        action = [&] { return run_family_falsify(input, falsifyDegBound, wordLen, samples, seed, jobs); };
    });

    auto* reduce = app.add_subcommand("reduce", "coordinates of an element mod A*alpha");
    input.attach(reduce);
    reduce->callback([&] { action = [&] { return run_reduce(input); }; });

    auto* endo = app.add_subcommand("endo", "basis of the endomorphism algebra");
    input.attach(endo);
    endo->add_option("--deg-bound", degBound, "entry degree bound (default: max degree + 2)");
    endo->callback([&] { action = [&] { return run_endo(input, degBound); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const std::invalid_argument& e) {
        std::cout << json{{"error", {{"kind", "schema"}, {"message", e.what()}}},
                          {"schema_version", "1"}}
                         .dump(2)
                  << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cout << json{{"error", {{"kind", "schema"}, {"message", e.what()}}},
                          {"schema_version", "1"}}
                         .dump(2)
                  << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << json{{"error", {{"kind", "precondition"}, {"message", e.what()}}},
                          {"schema_version", "1"}}
                         .dump(2)
                  << "\n";
        return 1;
    }
}
