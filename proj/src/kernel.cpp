#include "atomlab/kernel.hpp"

#include "atomlab/decompose.hpp"

#include <algorithm>
#include <functional>

namespace atomlab {

namespace {

Int lcm_int(const Int& a, const Int& b) { return a / gcd(a, b) * b; }

// Solve c * g == r (mod m) for the smallest c >= 0; returns (c0, step) or
// nullopt when unsolvable.
std::optional<std::pair<Int, Int>> solve_congruence(const Int& g, const Int& r, const Int& m) {
    if (m == 1) return std::make_pair(Int(0), Int(1));
    Int d = gcd(g % m, m);
    if (d == 0) d = m;
    if (r % d != 0) return std::nullopt;
    Int m2 = m / d;
    // inverse of (g/d) mod m2
    Int gi = (g / d) % m2;
    if (m2 == 1) return std::make_pair(Int(0), Int(1));
    Int t = 0, new_t = 1, rr = m2, new_r = ((gi % m2) + m2) % m2;
    while (new_r != 0) {
        Int q = rr / new_r;
        Int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = rr - q * new_r;
        rr = new_r;
        new_r = tmp;
    }
    if (rr != 1) return std::nullopt;
    Int inv = ((t % m2) + m2) % m2;
    Int c0 = ((r / d) % m2) * inv % m2;
    if (c0 < 0) c0 += m2;
    return std::make_pair(c0, m2);
}

} // namespace

QSolver::QSolver(std::vector<Rational> gens) : gens_(std::move(gens)) {
    // process densest denominators first so the congruence filter prunes early
    std::sort(gens_.begin(), gens_.end(), [](const Rational& a, const Rational& b) {
        if (a.den() != b.den()) return a.den() > b.den();
        return a > b;
    });
    lcm_ = 1;
    for (const Rational& g : gens_) {
        if (g <= Rational(0)) throw std::invalid_argument("QSolver: generators must be > 0");
        lcm_ = lcm_int(lcm_, g.den());
    }
    weights_.resize(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i)
        weights_[i] = gens_[i].num() * (lcm_ / gens_[i].den());
    // moduli_[i] = lcm / lcm(denominators of generators AFTER position i)
    moduli_.resize(gens_.size());
    Int suffix = 1;
    for (std::size_t i = gens_.size(); i-- > 0;) {
        moduli_[i] = lcm_ / suffix;
        suffix = lcm_int(suffix, gens_[i].den());
    }
}

bool QSolver::feasible(std::size_t level, const Int& residual, Budget* budget) const {
    if (residual == 0) return true;
    if (level == gens_.size()) return false;
    if (budget) budget->tick();
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find({level, residual});
        if (it != memo_.end()) return it->second;
    }
    bool ok = false;
    auto sol = solve_congruence(weights_[level], residual, moduli_[level]);
    if (sol) {
        auto [c0, step] = *sol;
        for (Int c = c0; c * weights_[level] <= residual; c += step) {
            if (feasible(level + 1, residual - c * weights_[level], budget)) {
                ok = true;
                break;
            }
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    memo_[{level, residual}] = ok;
    return ok;
}

bool QSolver::member(const Rational& target, Budget* budget) const {
    if (target.is_negative()) return false;
    if (target.is_zero()) return true;
    if (lcm_ % target.den() != 0) return false;
    return feasible(0, target.num() * (lcm_ / target.den()), budget);
}

void QSolver::enumerate_rec(std::size_t level, const Int& residual, std::vector<Int>& coeffs,
                            std::vector<std::vector<Int>>& out, Budget* budget) const {
    if (level == gens_.size()) {
        if (residual == 0) out.push_back(coeffs);
        return;
    }
    if (!feasible(level, residual, budget)) return;
    auto sol = solve_congruence(weights_[level], residual, moduli_[level]);
    if (!sol) return;
    auto [c0, step] = *sol;
    for (Int c = c0; c * weights_[level] <= residual; c += step) {
        coeffs[level] = c;
        enumerate_rec(level + 1, residual - c * weights_[level], coeffs, out, budget);
    }
    coeffs[level] = 0;
}

std::vector<std::vector<Int>> QSolver::enumerate(const Rational& target, Budget* budget) const {
    std::vector<std::vector<Int>> out;
    if (target.is_negative()) return out;
    if (lcm_ % target.den() != 0) return out;
    std::vector<Int> coeffs(gens_.size(), Int(0));
    enumerate_rec(0, target.num() * (lcm_ / target.den()), coeffs, out, budget);
    return out;
}

MonoidKernel::MonoidKernel(Presentation pres) : pres_(std::move(pres)), generators_(pres_.generators()) {}

void MonoidKernel::check_tag(const MonoidValue& v) const {
    if (v.tag() != pres_.value_tag())
        throw TagMismatch("value tag does not match presentation " + pres_.str());
    if (v.tag() == ValueTag::IntVec &&
        v.entries().size() != static_cast<std::size_t>(pres_.depth()) + 3)
        throw TagMismatch("vector length must be depth + 3");
}

const QSolver& MonoidKernel::gen_solver() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!gen_solver_) {
        std::vector<Rational> gens;
        for (const MonoidValue& g : generators_) gens.push_back(g.rational());
        gen_solver_ = std::make_unique<QSolver>(std::move(gens));
    }
    return *gen_solver_;
}

bool MonoidKernel::member(const MonoidValue& v, Budget* budget) const {
    check_tag(v);
    switch (pres_.value_tag()) {
    case ValueTag::PuiseuxQ:
        if (v.rational().is_negative()) return false;
        return gen_solver().member(v.rational(), budget);
    case ValueTag::RankTwo:
        return member_rank_two(v, budget);
    case ValueTag::IntVec:
        return member_int_vec(v, budget);
    }
    return false;
}

bool MonoidKernel::member_rank_two(const MonoidValue& v, Budget* budget) const {
    if (v.beta_coeff() < 0) return false;
    if (v.beta_coeff() > static_cast<unsigned long>(1) << 20)
        throw std::invalid_argument("rank-two beta coefficient out of desk-scale range");
    // choose a multiset of B-atoms (indices 0..depth) of size beta_coeff,
    // then decide the rational remainder in <A>
    long n0 = v.beta_coeff().convert_to<long>();
    const int depth = pres_.depth();
    std::function<bool(int, long, const Rational&)> rec = [&](int min_ell, long remaining,
                                                              const Rational& rest) -> bool {
        if (budget) budget->tick();
        if (remaining == 0) return a_span_member(pres_, rest, budget);
        for (int ell = min_ell; ell <= depth; ++ell) {
            // B-atom beta_ell contributes rational part beta_drop(ell) <= 0
            if (rec(ell, remaining - 1, rest - pres_.beta_drop(ell))) return true;
        }
        return false;
    };
    return rec(0, n0, v.rational());
}

bool MonoidKernel::member_int_vec(const MonoidValue& v, Budget* budget) const {
    const auto& e = v.entries();
    const int depth = pres_.depth();
    const Int &a = e[0], &b = e[1], &c = e[2];
    if (a < 0 || b < 0) return false;
    Int ymax = a < b ? a : b;
    // y multiplicities bounded by min(U,V); everything else is then forced
    // x, w, u, v multiplicities are all forced once the y multiplicities are
    // fixed; nonnegativity of x is checked during the walk, of w at the end
    std::function<bool(int, Int, Int)> rec = [&](int n, Int used, Int wshift) -> bool {
        if (budget) budget->tick();
        if (n > depth) return c + wshift >= 0;
        for (Int ay = 0; used + ay <= ymax; ++ay) {
            Int ax = e[static_cast<std::size_t>(n) + 2] + ay;
            if (ax < 0) continue;
            if (rec(n + 1, used + ay, wshift + ay * n)) return true;
        }
        return false;
    };
    return rec(1, 0, 0);
}

const QSolver& MonoidKernel::atom_solver(Budget* budget) const {
    atoms(budget); // ensure atoms_ is computed
    std::lock_guard<std::mutex> lock(mu_);
    if (!atom_solver_) {
        std::vector<Rational> gens;
        for (const MonoidValue& g : *atoms_) gens.push_back(g.rational());
        atom_solver_ = std::make_unique<QSolver>(std::move(gens));
    }
    return *atom_solver_;
}

bool MonoidKernel::divides(const MonoidValue& a, const MonoidValue& b, Budget* budget) const {
    check_tag(a);
    check_tag(b);
    MonoidValue diff = b.minus(a);
    if (!diff.admissible()) return false;
    return member(diff, budget);
}

std::vector<MonoidValue> MonoidKernel::atoms(Budget* budget) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (atoms_) return *atoms_;
    }
    // g is an atom iff no generator h and nonzero member m give g = h + m
    std::vector<MonoidValue> out;
    for (const MonoidValue& g : generators_) {
        bool atom = true;
        for (const MonoidValue& h : generators_) {
            MonoidValue diff = g.minus(h);
            if (diff.is_zero() || !diff.admissible()) continue;
            if (member(diff, budget)) {
                atom = false;
                break;
            }
        }
        if (atom) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    std::lock_guard<std::mutex> lock(mu_);
    if (!atoms_) atoms_ = out;
    return *atoms_;
}

std::vector<Factorization> MonoidKernel::factorizations(const MonoidValue& b, Budget* budget) const {
    check_tag(b);
    if (!member(b, budget)) throw NotAMember("factorizations: " + b.str() + " is not a member");
    switch (pres_.value_tag()) {
    case ValueTag::PuiseuxQ: {
        const QSolver& solver = atom_solver(budget);
        std::vector<Factorization> out;
        for (const auto& coeffs : solver.enumerate(b.rational(), budget)) {
            Factorization f;
            for (std::size_t i = 0; i < coeffs.size(); ++i)
                if (coeffs[i] > 0)
                    f.atom_multiset[MonoidValue::puiseux(solver.gens()[i])] = coeffs[i];
            out.push_back(std::move(f));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    case ValueTag::RankTwo:
        return factorizations_rank_two(b, budget);
    case ValueTag::IntVec:
        return factorizations_int_vec(b, budget);
    }
    return {};
}

std::vector<Factorization> MonoidKernel::factorizations_rank_two(const MonoidValue& b,
                                                                 Budget* budget) const {
    std::vector<Factorization> out;
    long n0 = b.beta_coeff().convert_to<long>();
    const int depth = pres_.depth();
    std::vector<int> b_choice;
    std::function<void(int, long, const Rational&)> rec = [&](int min_ell, long remaining,
                                                              const Rational& rest) {
        if (budget) budget->tick();
        if (remaining == 0) {
            for (const auto& avecs : a_span_enumerate(pres_, rest, budget)) {
                Factorization f;
                for (int ell : b_choice) f.atom_multiset[pres_.beta_atom(ell)] += 1;
                for (const AVector& v : avecs)
                    f.atom_multiset[MonoidValue::rank_two(0, v.value(pres_.prime_seq()))] += 1;
                out.push_back(std::move(f));
            }
            return;
        }
        for (int ell = min_ell; ell <= depth; ++ell) {
            b_choice.push_back(ell);
            rec(ell, remaining - 1, rest - pres_.beta_drop(ell));
            b_choice.pop_back();
        }
    };
    rec(0, n0, b.rational());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Factorization> MonoidKernel::factorizations_int_vec(const MonoidValue& b,
                                                                Budget* budget) const {
    std::vector<Factorization> out;
    const auto& e = b.entries();
    const int depth = pres_.depth();
    const Int &a = e[0], &bb = e[1], &c = e[2];
    if (a < 0 || bb < 0) return out;
    Int ymax = a < bb ? a : bb;
    std::vector<Int> ay(static_cast<std::size_t>(depth) + 1, Int(0));
    std::function<void(int, Int, Int)> rec = [&](int n, Int used, Int wshift) {
        if (budget) budget->tick();
        if (n > depth) {
            Int aw = c + wshift;
            if (aw < 0) return;
            Factorization f;
            Int au = a - used, av = bb - used;
            if (au > 0) f.atom_multiset[pres_.zaks_u()] = au;
            if (av > 0) f.atom_multiset[pres_.zaks_v()] = av;
            if (aw > 0) f.atom_multiset[pres_.zaks_w()] = aw;
            for (int i = 1; i <= depth; ++i) {
                Int ax = e[static_cast<std::size_t>(i) + 2] + ay[static_cast<std::size_t>(i)];
                if (ax < 0) return;
                if (ax > 0) f.atom_multiset[pres_.zaks_x(i)] = ax;
                if (ay[static_cast<std::size_t>(i)] > 0)
                    f.atom_multiset[pres_.zaks_y(i)] = ay[static_cast<std::size_t>(i)];
            }
            out.push_back(std::move(f));
            return;
        }
        for (Int y = 0; used + y <= ymax; ++y) {
            if (e[static_cast<std::size_t>(n) + 2] + y < 0) continue;
            ay[static_cast<std::size_t>(n)] = y;
            rec(n + 1, used + y, wshift + y * n);
        }
        ay[static_cast<std::size_t>(n)] = 0;
    };
    rec(1, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::set<Int> MonoidKernel::length_set(const MonoidValue& b, Budget* budget) const {
    std::set<Int> out;
    for (const Factorization& f : factorizations(b, budget)) out.insert(f.length());
    return out;
}

std::vector<MonoidValue> MonoidKernel::common_divisors(const std::vector<MonoidValue>& s,
                                                       Budget* budget) const {
    if (s.empty()) throw std::invalid_argument("common_divisors: empty set");
    for (const MonoidValue& v : s)
        if (!member(v, budget)) throw NotAMember("common_divisors: " + v.str() + " is not a member");

    std::vector<MonoidValue> atom_list = atoms(budget);
    std::set<MonoidValue> found;
    MonoidValue zero = MonoidValue::zero(pres_.value_tag(), static_cast<std::size_t>(pres_.depth()) + 3);
    found.insert(zero);

    // grow divisors atom by atom; a dead partial sum stays dead under
    // extension, so pruning on any failing member(s_i - d) is sound
    std::function<void(const MonoidValue&)> grow = [&](const MonoidValue& d) {
        for (const MonoidValue& a : atom_list) {
            if (budget) budget->tick();
            MonoidValue next = d + a;
            if (found.count(next)) continue;
            bool ok = true;
            for (const MonoidValue& v : s) {
                MonoidValue diff = v.minus(next);
                if (!diff.admissible() || !member(diff, budget)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            found.insert(next);
            grow(next);
        }
    };
    grow(zero);
    return std::vector<MonoidValue>(found.begin(), found.end());
}

std::optional<MonoidValue> MonoidKernel::smallest_common_divisor(const std::vector<MonoidValue>& s,
                                                                 Budget* budget) const {
    std::vector<MonoidValue> atom_list = atoms(budget);
    std::sort(atom_list.begin(), atom_list.end());
    for (const MonoidValue& a : atom_list) {
        bool ok = true;
        for (const MonoidValue& v : s) {
            MonoidValue diff = v.minus(a);
            if (!diff.admissible() || !member(diff, budget)) {
                ok = false;
                break;
            }
        }
        if (ok) return a;
    }
    return std::nullopt;
}

} // namespace atomlab
