#include "atomlab/bc.hpp"
#include "atomlab/verify.hpp"
#include "atomlab/zaks.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using atomlab::json;

struct CommonOpts {
    std::string family = "grams";
    int depth = 4;
    std::uint64_t budget = 1'000'000;
    std::string q = "2/3";
    std::string p = "3";
    std::string gens;
    std::string config;
    std::string format = "json";
    std::string out;
};

void add_presentation_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--family", o.family,
                    "monoid family: explicit, grams, gp, cyclic-sq, pair-primes, rank2, "
                    "intersect-g1, intersect-g2, zaks");
    cmd->add_option("--depth", o.depth, "truncation depth (number of generator indices)");
    cmd->add_option("--budget", o.budget, "search budget in knapsack node expansions");
    cmd->add_option("--q", o.q, "rational parameter for cyclic-sq, as num/den");
    cmd->add_option("--p", o.p, "base prime for gp");
    cmd->add_option("--gens", o.gens, "comma-separated rationals for the explicit family");
    cmd->add_option("--config", o.config, "JSON config file; overrides the flags above");
    cmd->add_option("--format", o.format, "report format: json or md");
    cmd->add_option("--out", o.out, "write the report to this file instead of stdout");
}

atomlab::Presentation presentation_from(const CommonOpts& o) {
    if (!o.config.empty()) {
        std::ifstream in(o.config);
        if (!in) throw std::invalid_argument("cannot open config file '" + o.config + "'");
        json j = json::parse(in);
        return atomlab::presentation_from_json(j);
    }
    atomlab::Family fam = atomlab::family_from_name(o.family);
    switch (fam) {
    case atomlab::Family::Explicit: {
        std::vector<atomlab::Rational> gens;
        std::size_t pos = 0;
        while (pos < o.gens.size()) {
            auto comma = o.gens.find(',', pos);
            gens.push_back(atomlab::Rational::parse(
                o.gens.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return atomlab::Presentation::explicit_gens(std::move(gens));
    }
    case atomlab::Family::Grams: return atomlab::Presentation::grams(o.depth);
    case atomlab::Family::Gp: return atomlab::Presentation::gp(atomlab::Int(o.p), o.depth);
    case atomlab::Family::CyclicSq:
        return atomlab::Presentation::cyclic_sq(atomlab::Rational::parse(o.q), o.depth);
    case atomlab::Family::PairPrimes: return atomlab::Presentation::pair_primes(o.depth);
    case atomlab::Family::RankTwoP: return atomlab::Presentation::rank_two_p(o.depth);
    case atomlab::Family::IntersectG1: return atomlab::Presentation::intersect_g(1, o.depth);
    case atomlab::Family::IntersectG2: return atomlab::Presentation::intersect_g(2, o.depth);
    case atomlab::Family::Zaks: return atomlab::Presentation::zaks(o.depth);
    }
    throw std::invalid_argument("unknown family");
}

int emit(const json& report, const CommonOpts& o) {
    std::string text =
        o.format == "md" ? atomlab::markdown_digest(report) : report.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out);
        f << text;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"atomlab: exact-arithmetic workbench for Puiseux monoids, chain conditions, and "
                 "monoid algebras"};
    app.require_subcommand(1);

    CommonOpts o;

    std::string value_str;
    auto* member_cmd = app.add_subcommand("member", "decide membership in the truncated monoid");
    add_presentation_flags(member_cmd, o);
    member_cmd->add_option("--value", value_str, "element, e.g. 3/10, 2*b+-1/5, or [1,1,0,0]")
        ->required();

    auto* atoms_cmd = app.add_subcommand("atoms", "list the atoms of the truncated monoid");
    add_presentation_flags(atoms_cmd, o);

    auto* factorize_cmd = app.add_subcommand("factorize", "list all atom factorizations");
    add_presentation_flags(factorize_cmd, o);
    factorize_cmd->add_option("--value", value_str, "element to factor")->required();

    auto* classify_cmd =
        app.add_subcommand("classify", "four-class taxonomy report with validated evidence");
    add_presentation_flags(classify_cmd, o);

    std::string chain_start, chain_rule = "auto";
    auto* chain_cmd = app.add_subcommand("chain", "build and validate an ascending-chain certificate");
    add_presentation_flags(chain_cmd, o);
    chain_cmd->add_option("--start", chain_start, "starting element")->required();

    std::string accp_value;
    auto* accp_cmd = app.add_subcommand("accp", "per-element ACCP verdict with certificate");
    add_presentation_flags(accp_cmd, o);
    accp_cmd->add_option("--value", accp_value, "element to judge")->required();

    std::string bc_op = "accp", bc_input;
    auto* bc_cmd = app.add_subcommand("bc", "pullback-domain checks (membership, ACCP, divisor)");
    bc_cmd->add_option("--op", bc_op, "one of: accp, weak-accp-divisor");
    bc_cmd->add_option("--input", bc_input,
                       "JSON file: a list of K[X] polynomials, each a list of "
                       "{deg, j, k, num, den} monomial coefficients");
    bc_cmd->add_option("--format", o.format, "report format: json or md");
    bc_cmd->add_option("--out", o.out, "write the report to this file");

    int verify_depth = 10;
    std::uint64_t verify_budget = 1'000'000;
    bool corrupt = false;
    auto* verify_cmd =
        app.add_subcommand("verify", "run the full built-in verification suite deterministically");
    verify_cmd->add_option("--depth", verify_depth, "truncation depth for the scenarios");
    verify_cmd->add_option("--budget", verify_budget, "search budget per scenario");
    verify_cmd->add_option("--format", o.format, "report format: json or md");
    verify_cmd->add_option("--out", o.out, "write the report to this file");
    verify_cmd->add_flag("--corrupt-one-expected", corrupt,
                         "self-test hook: corrupt one expected value and exit 1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (member_cmd->parsed()) {
            atomlab::Presentation pres = presentation_from(o);
            atomlab::MonoidKernel kernel(pres);
            atomlab::Budget budget{o.budget, 0};
            atomlab::MonoidValue v = atomlab::MonoidValue::parse(value_str);
            json report;
            report["presentation"] = atomlab::to_json(pres);
            report["value"] = v.str();
            report["member"] = kernel.member(v, &budget);
            report["depth"] = pres.depth();
            report["budget_used"] = budget.used;
            return emit(report, o);
        }
        if (atoms_cmd->parsed()) {
            atomlab::Presentation pres = presentation_from(o);
            atomlab::MonoidKernel kernel(pres);
            atomlab::Budget budget{o.budget, 0};
            json report;
            report["presentation"] = atomlab::to_json(pres);
            json atoms = json::array();
            for (const auto& a : kernel.atoms(&budget)) atoms.push_back(a.str());
            report["atoms"] = atoms;
            report["depth"] = pres.depth();
            return emit(report, o);
        }
        if (factorize_cmd->parsed()) {
            atomlab::Presentation pres = presentation_from(o);
            atomlab::MonoidKernel kernel(pres);
            atomlab::Budget budget{o.budget, 0};
            atomlab::MonoidValue v = atomlab::MonoidValue::parse(value_str);
            json report;
            report["presentation"] = atomlab::to_json(pres);
            report["value"] = v.str();
            json facts = json::array();
            json lengths = json::array();
            for (const auto& f : kernel.factorizations(v, &budget)) facts.push_back(atomlab::to_json(f));
            for (const auto& l : kernel.length_set(v, &budget)) lengths.push_back(l.str());
            report["factorizations"] = facts;
            report["length_set"] = lengths;
            report["depth"] = pres.depth();
            return emit(report, o);
        }
        if (classify_cmd->parsed()) {
            atomlab::Presentation pres = presentation_from(o);
            atomlab::Budget budget{o.budget, 0};
            atomlab::TaxonomyReport r = atomlab::classify(pres, &budget);
            json report;
            report["presentation"] = atomlab::to_json(pres);
            report["classification"] = atomlab::to_json(r);
            return emit(report, o);
        }
        if (chain_cmd->parsed() || accp_cmd->parsed()) {
            atomlab::Presentation pres = presentation_from(o);
            atomlab::Budget budget{o.budget, 0};
            atomlab::MonoidValue v =
                atomlab::MonoidValue::parse(chain_cmd->parsed() ? chain_start : accp_value);
            atomlab::AccpVerdict verdict = atomlab::accp_element(pres, v, &budget);
            json report;
            report["presentation"] = atomlab::to_json(pres);
            report["value"] = v.str();
            report["accp"] = atomlab::to_json(verdict);
            if (verdict.cert)
                report["chain_validates"] = atomlab::validate_chain(pres, *verdict.cert, &budget);
            return emit(report, o);
        }
        if (bc_cmd->parsed()) {
            std::vector<atomlab::KPoly> w;
            atomlab::FieldSpec f = atomlab::FieldSpec::QQ();
            if (!bc_input.empty()) {
                std::ifstream in(bc_input);
                if (!in) throw std::invalid_argument("cannot open input file '" + bc_input + "'");
                json j = json::parse(in);
                for (const auto& poly : j) {
                    atomlab::KPoly g(f);
                    for (const auto& term : poly) {
                        long num = term.value("num", 1L);
                        long den = term.value("den", 1L);
                        atomlab::NormalForm2 c =
                            atomlab::NormalForm2::monomial(term.value("j", 0L), term.value("k", 0L), f) *
                            atomlab::normal_form(
                                atomlab::BivariatePoly::constant(
                                    f, atomlab::FieldValue(f, atomlab::Rational(num))),
                                atomlab::BivariatePoly::constant(
                                    f, atomlab::FieldValue(f, atomlab::Rational(den))));
                        g.add_term(term.value("deg", 0u), c);
                    }
                    w.push_back(std::move(g));
                }
            } else {
                w.push_back(atomlab::KPoly::var_x(f) * atomlab::KPoly::var_x_minus_1(f));
            }
            json report;
            if (bc_op == "accp") {
                json rows = json::array();
                for (const auto& g : w) {
                    json row;
                    row["poly"] = g.str();
                    row["in_R"] = atomlab::in_R(g);
                    if (atomlab::in_R(g)) row["satisfies_accp"] = atomlab::accp_element_bc(g);
                    rows.push_back(row);
                }
                report["elements"] = rows;
            } else if (bc_op == "weak-accp-divisor") {
                atomlab::BcDivisorReport r = atomlab::weak_accp_divisor_bc(w);
                report["early_exit"] = r.early_exit;
                report["m"] = r.m;
                report["N"] = r.n_exponent;
                report["d"] = r.d.str();
                json quots = json::array();
                for (const auto& q : r.quotients) quots.push_back(q.str());
                report["quotients"] = quots;
                report["accp_quotient_index"] = r.s_index;
            } else {
                throw std::invalid_argument("unknown bc op '" + bc_op + "'");
            }
            return emit(report, o);
        }
        if (verify_cmd->parsed()) {
            atomlab::VerifyOptions vo;
            vo.depth = verify_depth;
            vo.budget = verify_budget;
            vo.corrupt_one = corrupt;
            json report = atomlab::run_verification(vo);
            emit(report, o);
            return atomlab::verification_passed(report) ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
