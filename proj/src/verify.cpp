#include "atomlab/verify.hpp"

#include "atomlab/bc.hpp"
#include "atomlab/zaks.hpp"

#include <algorithm>

namespace atomlab {

namespace {

MonoidValue pq(long num, long den) { return MonoidValue::puiseux(Rational(num, den)); }

json atom_strings(const std::vector<MonoidValue>& atoms) {
    json out = json::array();
    for (const MonoidValue& a : atoms) out.push_back(a.str());
    return out;
}

json flags_json(const TaxonomyReport& r) {
    json out;
    out["accp"] = flag_name(r.accp);
    out["weak_accp"] = flag_name(r.weak_accp);
    out["strongly_atomic"] = flag_name(r.strongly_atomic);
    out["atomic"] = flag_name(r.atomic);
    return out;
}

std::vector<Scenario> build_scenarios() {
    std::vector<Scenario> s;

    s.push_back({"pairprimes-membership", "1/2 and 1/3 lie in the monoid generated by 1/(p_n*p_{n+2})", 4,
                 [](int depth, Budget& b) {
                     MonoidKernel k(Presentation::pair_primes(depth));
                     json actual;
                     actual["member(1/2)"] = k.member(pq(1, 2), &b);
                     actual["member(1/3)"] = k.member(pq(1, 3), &b);
                     json expected;
                     expected["member(1/2)"] = true;
                     expected["member(1/3)"] = true;
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"pairprimes-shift-divisibility",
                 "1/p_n = 1/p_{n+2} + (p_{n+2}-p_n)/(p_n*p_{n+2}); in particular 1/5 divides 1/2", 4,
                 [](int depth, Budget& b) {
                     MonoidKernel k(Presentation::pair_primes(depth));
                     json actual;
                     actual["divides(1/5,1/2)"] = k.divides(pq(1, 5), pq(1, 2), &b);
                     actual["divides(1/7,1/3)"] = k.divides(pq(1, 7), pq(1, 3), &b);
                     json expected;
                     expected["divides(1/5,1/2)"] = true;
                     expected["divides(1/7,1/3)"] = true;
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"pairprimes-atoms", "the atoms of the pair-primes monoid are the generators 1/q_n", 5,
                 [](int, Budget& b) {
                     Presentation p = Presentation::pair_primes(5);
                     MonoidKernel k(p);
                     json expected = json::array();
                     for (const MonoidValue& g : p.generators()) expected.push_back(g.str());
                     std::sort(expected.begin(), expected.end(),
                               [](const json& a, const json& c) {
                                   return Rational::parse(a.get<std::string>()) <
                                          Rational::parse(c.get<std::string>());
                               });
                     return std::make_pair(expected, atom_strings(k.atoms(&b)));
                 }});

    s.push_back({"cyclic-atoms", "S_q is atomic with atom set the powers q^n", 4,
                 [](int, Budget& b) {
                     Presentation p = Presentation::cyclic_sq(Rational(2, 3), 4);
                     MonoidKernel k(p);
                     json expected = json::array();
                     Rational pow(1);
                     std::vector<Rational> powers;
                     for (int n = 0; n <= 4; ++n) {
                         powers.push_back(pow);
                         pow = pow * Rational(2, 3);
                     }
                     std::sort(powers.begin(), powers.end());
                     for (const Rational& r : powers) expected.push_back(r.str());
                     return std::make_pair(expected, atom_strings(k.atoms(&b)));
                 }});

    s.push_back({"rank2-atoms", "the rank-2 monoid generated by A and B has atom set exactly A union B", 3,
                 [](int, Budget& b) {
                     Presentation p = Presentation::rank_two_p(3);
                     MonoidKernel k(p);
                     auto gens = p.generators();
                     std::sort(gens.begin(), gens.end());
                     return std::make_pair(atom_strings(gens), atom_strings(k.atoms(&b)));
                 }});

    s.push_back({"pairprimes-only-common-divisor-zero",
                 "the only common divisor of 1/2 and 1/3 in the pair-primes monoid is 0", 8,
                 [](int, Budget& b) {
                     MonoidKernel k(Presentation::pair_primes(8));
                     auto cds = k.common_divisors({pq(1, 2), pq(1, 3)}, &b);
                     json actual = json::array();
                     for (const MonoidValue& d : cds) actual.push_back(d.str());
                     json expected = json::array({"0/1"});
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"gp-halving-chain", "the ascending chain of ideals (1/p^n + G_p) never stabilizes", 4,
                 [](int depth, Budget& b) {
                     json expected, actual;
                     expected["grams"] = true;
                     expected["g3"] = true;
                     {
                         Presentation p = Presentation::grams(depth);
                         AccpVerdict v = accp_element(p, pq(1, 2), &b);
                         actual["grams"] = v.fails() && validate_chain(p, *v.cert, &b);
                     }
                     {
                         Presentation p = Presentation::gp(3, depth);
                         AccpVerdict v = accp_element(p, pq(1, 3), &b);
                         actual["g3"] = v.fails() && validate_chain(p, *v.cert, &b);
                     }
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"pairprimes-chains-from-half-and-third",
                 "the chains of ideals starting at 1/2 and 1/3 do not stabilize", 8,
                 [](int depth, Budget& b) {
                     Presentation p = Presentation::pair_primes(depth);
                     json expected, actual;
                     expected["1/2"] = "fails";
                     expected["1/3"] = "fails";
                     AccpVerdict v2 = accp_element(p, pq(1, 2), &b);
                     AccpVerdict v3 = accp_element(p, pq(1, 3), &b);
                     actual["1/2"] = v2.fails() && validate_chain(p, *v2.cert, &b) ? "fails" : "other";
                     actual["1/3"] = v3.fails() && validate_chain(p, *v3.cert, &b) ? "fails" : "other";
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"pairprimes-not-weak-accp",
                 "the pair-primes monoid is atomic but not weak-ACCP: {1/2, 1/3} admits no witness", 8,
                 [](int, Budget& b) {
                     WeakAccpWitness w =
                         weak_accp_witness(Presentation::pair_primes(8), {pq(1, 2), pq(1, 3)}, &b);
                     json expected = "refuted-exhaustive";
                     json actual = w.status == WeakAccpWitness::Status::RefutedExhaustive
                                       ? "refuted-exhaustive"
                                       : (w.status == WeakAccpWitness::Status::Found ? "found" : "unknown");
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"grams-classification", "the Grams monoid is weak-ACCP but does not satisfy ACCP", 4,
                 [](int depth, Budget& b) {
                     TaxonomyReport r = classify(Presentation::grams(depth), &b);
                     json expected;
                     expected["accp"] = "false";
                     expected["weak_accp"] = "true";
                     expected["strongly_atomic"] = "true";
                     expected["atomic"] = "true";
                     return std::make_pair(expected, flags_json(r));
                 }});

    s.push_back({"pairprimes-classification",
                 "the pair-primes monoid is strongly atomic and atomic but neither weak-ACCP nor ACCP", 8,
                 [](int, Budget& b) {
                     TaxonomyReport r = classify(Presentation::pair_primes(10), &b);
                     json expected;
                     expected["accp"] = "false";
                     expected["weak_accp"] = "false";
                     expected["strongly_atomic"] = "true";
                     expected["atomic"] = "true";
                     return std::make_pair(expected, flags_json(r));
                 }});

    s.push_back({"cyclic-classification", "S_q is weak-ACCP but does not satisfy ACCP", 4,
                 [](int depth, Budget& b) {
                     TaxonomyReport r = classify(Presentation::cyclic_sq(Rational(2, 3), depth), &b);
                     json expected;
                     expected["accp"] = "false";
                     expected["weak_accp"] = "true";
                     expected["strongly_atomic"] = "true";
                     expected["atomic"] = "true";
                     return std::make_pair(expected, flags_json(r));
                 }});

    s.push_back({"rank2-classification", "the rank-2 monoid is atomic and weak-ACCP but not ACCP", 3,
                 [](int, Budget& b) {
                     TaxonomyReport r = classify(Presentation::rank_two_p(3), &b);
                     json expected;
                     expected["accp"] = "false";
                     expected["weak_accp"] = "true";
                     expected["strongly_atomic"] = "true";
                     expected["atomic"] = "true";
                     return std::make_pair(expected, flags_json(r));
                 }});

    s.push_back({"strong-common-divisor-construction",
                 "peeling maximal joint multiples of 1/q_N and 1/q_{N-1} reaches coprime residuals", 10,
                 [](int depth, Budget& b) {
                     Presentation p = Presentation::pair_primes(std::max(depth, 10));
                     MonoidValue d = strong_common_divisor(p, pq(1, 2), pq(1, 3), &b);
                     json expected, actual;
                     expected["d"] = "0/1";
                     expected["gcd_zero"] = true;
                     actual["d"] = d.str();
                     actual["gcd_zero"] =
                         gcd_is_zero(p, pq(1, 2).minus(d), pq(1, 3).minus(d), &b);
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"sq-relation-chain",
                 "d(q)q^n = (d(q)-n(q))q^n + d(q)q^{n+1} drives a strictly ascending chain from d(q)", 4,
                 [](int depth, Budget& b) {
                     Presentation p = Presentation::cyclic_sq(Rational(2, 3), depth);
                     AccpVerdict v = accp_element(p, pq(3, 1), &b);
                     json expected, actual;
                     expected["verdict"] = "fails";
                     expected["chain_valid"] = true;
                     actual["verdict"] = v.fails() ? "fails" : "other";
                     actual["chain_valid"] = v.fails() && validate_chain(p, *v.cert, &b);
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"rank2-beta-chain",
                 "the chain (2*beta_n + M) never stabilizes; quotients 2/p_{n+1} are A-atoms", 3,
                 [](int, Budget& b) {
                     Presentation p = Presentation::rank_two_p(3);
                     AccpVerdict v = accp_element(p, MonoidValue::rank_two(2, Rational(0)), &b);
                     // 8 explicit steps along 2*beta_n
                     ChainCertificate cert;
                     cert.start = MonoidValue::rank_two(2, Rational(0));
                     cert.terms.push_back(cert.start);
                     for (int n = 1; n <= 8; ++n) {
                         MonoidValue next = MonoidValue::rank_two(2, Rational(2) * p.beta_drop(n));
                         cert.quotients.push_back(cert.terms.back().minus(next));
                         cert.terms.push_back(next);
                     }
                     cert.rule = ChainRule::Rank2Beta;
                     cert.rule_param = 8;
                     json expected, actual;
                     expected["verdict"] = "fails";
                     expected["eight_step_chain_valid"] = true;
                     actual["verdict"] = v.fails() ? "fails" : "other";
                     actual["eight_step_chain_valid"] = validate_chain(p, cert, &b);
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"binomial-tower-identity",
                 "X^{1/3^n} - 1 = (X^{1/3^{n+1}} - 1)(X^{2/3^{n+1}} + X^{1/3^{n+1}} + 1) for n = 0,1,2", 1,
                 [](int, Budget&) {
                     FieldSpec f = FieldSpec::QQ();
                     json expected, actual;
                     for (int n = 0; n <= 2; ++n) {
                         Int pow3 = 1;
                         for (int i = 0; i <= n; ++i) pow3 *= 3;
                         Rational e1(1, pow3), e2(2, pow3), e0(3, pow3); // 3/3^{n+1} = 1/3^n
                         PolyExpr lhs(f, ValueTag::PuiseuxQ);
                         lhs.add_term(MonoidValue::puiseux(e0), FieldValue::one(f));
                         lhs.add_term(MonoidValue::zero(ValueTag::PuiseuxQ), -FieldValue::one(f));
                         PolyExpr a(f, ValueTag::PuiseuxQ);
                         a.add_term(MonoidValue::puiseux(e1), FieldValue::one(f));
                         a.add_term(MonoidValue::zero(ValueTag::PuiseuxQ), -FieldValue::one(f));
                         PolyExpr bpoly(f, ValueTag::PuiseuxQ);
                         bpoly.add_term(MonoidValue::puiseux(e2), FieldValue::one(f));
                         bpoly.add_term(MonoidValue::puiseux(e1), FieldValue::one(f));
                         bpoly.add_term(MonoidValue::zero(ValueTag::PuiseuxQ), FieldValue::one(f));
                         std::string key = "n=" + std::to_string(n);
                         expected[key] = true;
                         actual[key] = (poly_mul(a, bpoly) == lhs);
                     }
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"monoid-algebra-units",
                 "the units of F[M] over a reduced positive monoid are the nonzero constants", 1,
                 [](int, Budget&) {
                     FieldSpec f = FieldSpec::QQ();
                     json expected, actual;
                     PolyExpr c5 = PolyExpr::constant(f, FieldValue(f, Rational(5)));
                     PolyExpr xm = PolyExpr::monomial(f, pq(1, 6), FieldValue::one(f));
                     PolyExpr xp1 = PolyExpr::monomial(f, pq(1, 1), FieldValue::one(f));
                     xp1.add_term(MonoidValue::zero(ValueTag::PuiseuxQ), FieldValue::one(f));
                     expected["constant"] = true;
                     expected["monomial"] = false;
                     expected["binomial"] = false;
                     actual["constant"] = is_unit(c5);
                     actual["monomial"] = is_unit(xm);
                     actual["binomial"] = is_unit(xp1);
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"localization-chains",
                 "the monomial chains X^{1/2^n} and X^{d(q)q^n} ascend strictly in the localizations", 8,
                 [](int depth, Budget& b) {
                     json expected, actual;
                     expected["grams"] = true;
                     expected["cyclic"] = true;
                     {
                         Presentation p = Presentation::grams(depth);
                         FieldSpec f = FieldSpec::QQ();
                         std::vector<LocalizedElement> chain;
                         Int pow = 2;
                         for (int n = 1; n <= 8; ++n) {
                             chain.push_back(LocalizedElement::whole(
                                 PolyExpr::monomial(f, MonoidValue::puiseux(Rational(1, pow)),
                                                    FieldValue::one(f))));
                             pow *= 2;
                         }
                         actual["grams"] = localization_chain_check(p, chain, &b);
                     }
                     {
                         Presentation p = Presentation::cyclic_sq(Rational(2, 3), std::max(depth, 9));
                         FieldSpec f = FieldSpec::QQ();
                         std::vector<LocalizedElement> chain;
                         Rational term(3);
                         for (int n = 0; n <= 8; ++n) {
                             chain.push_back(LocalizedElement::whole(PolyExpr::monomial(
                                 f, MonoidValue::puiseux(term), FieldValue::one(f))));
                             term = term * Rational(2, 3);
                         }
                         actual["cyclic"] = localization_chain_check(p, chain, &b);
                     }
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"binomial-chain-in-the-algebra",
                 "(X^{1/3^n} - 1) is a strictly ascending chain in F[M] itself", 4,
                 [](int, Budget& b) {
                     // exponents 1/3^n lie in G_3 = < 1/(3^n p_n) >
                     Presentation p = Presentation::gp(3, 6);
                     FieldSpec f = FieldSpec::QQ();
                     std::vector<LocalizedElement> chain;
                     Int pow = 1;
                     for (int n = 0; n <= 4; ++n) {
                         PolyExpr e(f, ValueTag::PuiseuxQ);
                         e.add_term(MonoidValue::puiseux(Rational(1, pow)), FieldValue::one(f));
                         e.add_term(MonoidValue::zero(ValueTag::PuiseuxQ), -FieldValue::one(f));
                         chain.push_back(LocalizedElement::whole(std::move(e)));
                         pow *= 3;
                     }
                     json expected = true;
                     json actual = localization_chain_check(p, chain, &b);
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"difference-trick",
                 "every common divisor of X-1 and X+1 divides (X+1)-(X-1) = 2, hence is a unit", 1,
                 [](int, Budget&) {
                     FieldSpec f = FieldSpec::QQ();
                     PolyExpr x = PolyExpr::monomial(f, pq(1, 1), FieldValue::one(f));
                     PolyExpr one = PolyExpr::constant(f, FieldValue::one(f));
                     auto [ok, constant] = common_divisor_units_only(x - one, x + one);
                     json expected, actual;
                     expected["units_only"] = true;
                     expected["constant"] = "2";
                     actual["units_only"] = ok;
                     actual["constant"] = constant ? constant->str() : "-";
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"intersection-normal-form",
                 "elements of L1 cap L2 take the form X^q * u with q dyadic and u a unit pair", 4,
                 [](int depth, Budget&) {
                     Presentation g1 = Presentation::intersect_g(1, depth);
                     Presentation g2 = Presentation::intersect_g(2, depth);
                     FieldSpec f = FieldSpec::QQ();
                     PolyExpr num = PolyExpr::monomial(f, pq(1, 2), FieldValue::one(f));
                     auto nf = intersection_normal_form(LocalizedElement::whole(num), g1,
                                                        LocalizedElement::whole(num), g2);
                     json expected, actual;
                     expected["q"] = "1/2";
                     expected["unit_pair"] = true;
                     actual["q"] = nf.q.str();
                     actual["unit_pair"] = nf.is_unit_pair;
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"antimatter-split",
                 "X^q = X^{q/2} * X^{q/2} with both factors nonunits: the intersection is antimatter", 4,
                 [](int depth, Budget&) {
                     Presentation g1 = Presentation::intersect_g(1, depth);
                     auto [l, r] = antimatter_split(Rational(1, 2), g1);
                     json expected, actual;
                     expected["left"] = "1/4";
                     expected["right"] = "1/4";
                     expected["members"] = true;
                     actual["left"] = l.str();
                     actual["right"] = r.str();
                     actual["members"] = grams_member(g1, l) && grams_member(g1, r) && !l.is_zero();
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"rank2-embedding",
                 "Y^{n0*beta+q} -> X^q x^{n0} embeds the rank-2 monoid algebra into F[X;Q][x]", 3,
                 [](int, Budget&) {
                     Presentation p = Presentation::rank_two_p(3);
                     FieldSpec f = FieldSpec::QQ();
                     PolyExpr y_beta1 = PolyExpr::monomial(f, p.beta_atom(1), FieldValue::one(f));
                     RankTwoEmbedding e = rank2_embed(y_beta1);
                     json expected, actual;
                     expected["x_degree"] = 1;
                     expected["X_exponent"] = "-1/5";
                     expected["round_trip"] = true;
                     actual["x_degree"] = e.x_deg().convert_to<int>();
                     actual["X_exponent"] = e.columns.begin()->second.begin()->first.str();
                     actual["round_trip"] = (rank2_unembed(e) == y_beta1);
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"zaks-defining-relations",
                 "Y_n = U*V/(W^n X_n), so u + v = n*w + x_n + y_n for every n; the printed vector fails it", 6,
                 [](int depth, Budget&) {
                     ZaksPresentation z(std::min(depth, 6));
                     json expected, actual;
                     bool all = true;
                     for (int n = 1; n <= z.depth(); ++n) all = all && z.relation_check(n);
                     expected["relations"] = true;
                     actual["relations"] = all;
                     // the printed vector in place of y_1 violates the relation
                     MonoidValue lhs = z.u() + z.v();
                     MonoidValue rhs = z.w() + z.x(1) + z.printed_y(1);
                     expected["printed_vector_fails"] = true;
                     actual["printed_vector_fails"] = (lhs != rhs);
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"zaks-algebra-map",
                 "Z^m = U^a V^b W^c prod X_n^{d_n}; the exponent of Y_n maps to U*V*W^{-n}*X_n^{-1}", 4,
                 [](int depth, Budget& b) {
                     ZaksPresentation z(std::min(depth, 4));
                     json expected, actual;
                     expected["y2"] = "U*V*W^-2*X2^-1";
                     expected["u+v"] = "U*V";
                     expected["zero"] = "1";
                     actual["y2"] = zaks_algebra_map(z.pres(), z.y(2), &b).str();
                     actual["u+v"] = zaks_algebra_map(z.pres(), z.u() + z.v(), &b).str();
                     actual["zero"] =
                         zaks_algebra_map(z.pres(), MonoidValue::zero(ValueTag::IntVec, 7), &b).str();
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"zaks-multiple-factorizations",
                 "u + v factors as {u,v} and as {n*w, x_n, y_n} for each n: depth+1 distinct factorizations", 6,
                 [](int depth, Budget& b) {
                     int d = std::min(depth, 6);
                     ZaksPresentation z(d);
                     MonoidKernel k(z.pres());
                     json expected = d + 1;
                     json actual = static_cast<int>(k.factorizations(z.u() + z.v(), &b).size());
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"bc-adjoined-generators", "D1 = D[y/x^2] contains y/x^2; D2 = D[x/y^2] does not", 1,
                 [](int, Budget&) {
                     NormalForm2 t = NormalForm2::monomial(-2, 1); // y/x^2
                     json expected, actual;
                     expected["in_D1"] = true;
                     expected["in_D2"] = false;
                     expected["one_everywhere"] = true;
                     actual["in_D1"] = in_D1(t);
                     actual["in_D2"] = in_D2(t);
                     NormalForm2 one = NormalForm2::one();
                     actual["one_everywhere"] = in_D(one) && in_D1(one) && in_D2(one);
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"bc-units", "D^x = { s1/s2 : s1, s2 in S }; x+y is a unit of D", 1,
                 [](int, Budget&) {
                     FieldSpec f = FieldSpec::QQ();
                     BivariatePoly xy = BivariatePoly::x(f) + BivariatePoly::y(f);
                     NormalForm2 h = normal_form(xy, BivariatePoly::constant(f, FieldValue::one(f)));
                     json expected, actual;
                     expected["valuations"] = "j=0,k=0";
                     expected["in_S"] = true;
                     actual["valuations"] = "j=" + std::to_string(h.j()) + ",k=" + std::to_string(h.k());
                     actual["in_S"] = h.unit_num().in_s();
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"bc-accp-equivalence",
                 "f in R fails ACCP iff f(0) = f(1) = 0 iff X(X-1) divides f in K[X]", 1,
                 [](int, Budget&) {
                     FieldSpec f = FieldSpec::QQ();
                     KPoly xx1 = KPoly::var_x(f) * KPoly::var_x_minus_1(f);
                     KPoly x = KPoly::var_x(f);
                     KPoly one = KPoly::constant(NormalForm2::one(f));
                     json expected, actual;
                     expected["X(X-1)"] = false;
                     expected["X"] = true;
                     expected["1"] = true;
                     actual["X(X-1)"] = accp_element_bc(xx1);
                     actual["X"] = accp_element_bc(x);
                     actual["1"] = accp_element_bc(one);
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"bc-divisor-construction",
                 "d(X) = (x/y^2)^N X^m (y/x^2)^N (X-1)^m divides every w with an ACCP quotient", 1,
                 [](int, Budget&) {
                     FieldSpec f = FieldSpec::QQ();
                     KPoly xx1 = KPoly::var_x(f) * KPoly::var_x_minus_1(f);
                     json expected, actual;
                     {
                         BcDivisorReport r = weak_accp_divisor_bc({xx1});
                         actual["W={X(X-1)}"] =
                             json{{"m", r.m}, {"N", r.n_exponent}, {"quotient_accp", true}};
                         expected["W={X(X-1)}"] = json{{"m", 1}, {"N", 0}, {"quotient_accp", true}};
                     }
                     {
                         // (1/x) X(X-1): coefficient valuations force N = 1
                         KPoly w = xx1.scaled(NormalForm2::monomial(-1, 0, f));
                         BcDivisorReport r = weak_accp_divisor_bc({w});
                         bool quot_is_y =
                             r.quotients[0] == KPoly::constant(NormalForm2::monomial(0, 1, f));
                         actual["W={(1/x)X(X-1)}"] =
                             json{{"m", r.m}, {"N", r.n_exponent}, {"quotient", quot_is_y ? "y" : "?"}};
                         expected["W={(1/x)X(X-1)}"] = json{{"m", 1}, {"N", 1}, {"quotient", "y"}};
                     }
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"grams-greatest-divisor",
                 "the dyadics form a greatest-divisor submonoid of the Grams monoid: gd(2/3) = 1/2", 3,
                 [](int, Budget&) {
                     Presentation p = Presentation::grams(3);
                     json expected, actual;
                     expected["gd(2/3)"] = "1/2";
                     expected["gd(1/6)"] = "0/1";
                     expected["decompose(1/6)"] = "q=0/1,c1=1";
                     actual["gd(2/3)"] = gd(p, Rational(2, 3)).str();
                     actual["gd(1/6)"] = gd(p, Rational(1, 6)).str();
                     auto d = grams_decompose(p, Rational(1, 6));
                     actual["decompose(1/6)"] =
                         "q=" + d.q_part.str() + ",c1=" + d.coeffs.at(1).str();
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"weak-accp-min-gd-recipe",
                 "d := min gd(s) is a common divisor and some s - d satisfies ACCP", 3,
                 [](int depth, Budget& b) {
                     Presentation p = Presentation::grams(depth);
                     WeakAccpWitness w = weak_accp_witness(
                         p, {MonoidValue::puiseux(Rational(1, 2) + Rational(1, 6)), pq(1, 2)}, &b);
                     json expected, actual;
                     expected["status"] = "found";
                     expected["d"] = "1/2";
                     expected["residual_satisfies"] = true;
                     actual["status"] = w.status == WeakAccpWitness::Status::Found ? "found" : "other";
                     actual["d"] = w.d.str();
                     actual["residual_satisfies"] =
                         w.residual_verdict && w.residual_verdict->satisfies();
                     return std::make_pair(expected, actual);
                 }});

    s.push_back({"taxonomy-separations",
                 "ACCP, weak-ACCP, strongly atomic, atomic form a strictly decreasing chain of classes", 8,
                 [](int, Budget& b) {
                     json expected, actual;
                     TaxonomyReport grams = classify(Presentation::grams(4), &b);
                     TaxonomyReport pp = classify(Presentation::pair_primes(10), &b);
                     expected["weak_not_accp_witness"] = true;
                     expected["strongly_not_weak_witness"] = true;
                     expected["chains_consistent"] = true;
                     actual["weak_not_accp_witness"] =
                         grams.weak_accp == Flag::True && grams.accp == Flag::False;
                     actual["strongly_not_weak_witness"] =
                         pp.strongly_atomic == Flag::True && pp.weak_accp == Flag::False;
                     actual["chains_consistent"] = grams.consistent() && pp.consistent();
                     return std::make_pair(expected, actual);
                 }});

    return s;
}

} // namespace

const std::vector<Scenario>& verification_scenarios() {
    static const std::vector<Scenario> scenarios = build_scenarios();
    return scenarios;
}

json run_verification(const VerifyOptions& opts) {
    json report;
    report["tool"] = "atomlab verify";
    report["parameters"] = json{{"depth", opts.depth}, {"budget", opts.budget}};
    json rows = json::array();
    int passed = 0, failed = 0, unknown = 0;
    bool corrupted = false;
    for (const Scenario& sc : verification_scenarios()) {
        json row;
        row["scenario"] = sc.name;
        row["claim"] = sc.claim;
        if (opts.depth < sc.needed_depth) {
            row["verdict"] = "unknown";
            row["note"] = "depth " + std::to_string(opts.depth) + " is below the " +
                          std::to_string(sc.needed_depth) + " this scenario needs";
            ++unknown;
            rows.push_back(row);
            continue;
        }
        Budget budget{opts.budget, 0};
        try {
            auto [expected, actual] = sc.run(opts.depth, budget);
            if (opts.corrupt_one && !corrupted) {
                expected = json("corrupted-for-self-test");
                corrupted = true;
            }
            row["expected"] = expected;
            row["actual"] = actual;
            row["verdict"] = (expected == actual) ? "pass" : "fail";
            row["depth"] = std::min(opts.depth, std::max(sc.needed_depth, 1));
            row["budget_used"] = budget.used;
            if (expected == actual)
                ++passed;
            else
                ++failed;
        } catch (const BudgetExhausted&) {
            row["verdict"] = "unknown";
            row["note"] = "budget exhausted";
            ++unknown;
        } catch (const std::exception& e) {
            row["verdict"] = "fail";
            row["note"] = std::string("exception: ") + e.what();
            ++failed;
        }
        rows.push_back(row);
    }
    report["scenarios"] = rows;
    report["summary"] =
        json{{"total", rows.size()}, {"passed", passed}, {"failed", failed}, {"unknown", unknown}};
    return report;
}

bool verification_passed(const json& report) {
    return report.at("summary").at("failed").get<int>() == 0;
}

} // namespace atomlab
