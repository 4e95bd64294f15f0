#include "sbarlab/suites.hpp"

#include "sbarlab/reference.hpp"

#include <sbar/halgebra.hpp>
#include <sbar/smash.hpp>
#include <sbar/tmodule.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

namespace sbarlab {

using namespace sbar;
using json = nlohmann::ordered_json;
using sbar::to_string;

namespace {

struct Outcome {
    Status status = Status::Pass;
    json witness;
};

struct Task {
    std::string name;
    std::string anchor;
    std::string provenance;
    std::function<Outcome()> run;
};

using Tasks = std::vector<Task>;

Outcome pass(json w = nullptr) { return {Status::Pass, std::move(w)}; }
Outcome fail(json w) { return {Status::Fail, std::move(w)}; }
Outcome check(bool ok, json w) { return {ok ? Status::Pass : Status::Fail, std::move(w)}; }

std::string idx(MultiIndex a) { return "(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")"; }
std::string lam(int l1, int l2) { return "V(" + std::to_string(l1) + "," + std::to_string(l2) + ")"; }

/// Zero-padded degree prefix keeps name order equal to the natural order.
std::string key(MultiIndex a)
{
    const int d = a.degree();
    return (d < 0 ? "-" : "") + std::to_string(std::abs(d)) + ":" + idx(a);
}

std::vector<Letter> letters_up_to(int max_degree)
{
    std::vector<Letter> out{Letter::d2()};
    for (int deg = -1; deg <= max_degree; ++deg)
        for (int a1 = -1; a1 <= deg + 1; ++a1)
            if (in_phi({a1, deg - a1}))
                out.push_back(Letter::L(a1, deg - a1));
    return out;
}

std::string letter_key(const Letter& l) { return l.is_d2() ? "d2" : "L" + key(l.index()); }

Scalar random_nonzero(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    int n = 0;
    while (n == 0)
        n = num(rng);
    return make_scalar(n, den(rng));
}

// ---------------------------------------------------------------- lie_core

Tasks jacobi(int n, std::uint64_t)
{
    const auto letters = letters_up_to(n);
    Tasks tasks;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const Letter x = letters[i];
        tasks.push_back({"jacobi/" + letter_key(x), "Jacobi identity in Sbar_2 and W_2", "identity", [=] {
                             const SbarElement sx(x);
                             const VectorField vx = to_vector_field(x);
                             int checked = 0;
                             for (std::size_t j = i + 1; j < letters.size(); ++j)
                                 for (std::size_t k = j + 1; k < letters.size(); ++k) {
                                     const SbarElement sy(letters[j]), sz(letters[k]);
                                     const SbarElement r = sbar_bracket(sx, sbar_bracket(sy, sz)) +
                                                           sbar_bracket(sy, sbar_bracket(sz, sx)) +
                                                           sbar_bracket(sz, sbar_bracket(sx, sy));
                                     const VectorField vy = to_vector_field(letters[j]);
                                     const VectorField vz = to_vector_field(letters[k]);
                                     const VectorField rv = vf_bracket(vx, vf_bracket(vy, vz)) +
                                                            vf_bracket(vy, vf_bracket(vz, vx)) +
                                                            vf_bracket(vz, vf_bracket(vx, vy));
                                     ++checked;
                                     if (!r.is_zero() || !rv.is_zero())
                                         return fail({{"y", letters[j].str()},
                                                      {"z", letters[k].str()},
                                                      {"residual", to_string(r)},
                                                      {"field_residual", rv.str()}});
                                 }
                             return pass({{"triples", checked}});
                         }});
    }
    return tasks;
}

Tasks bracket_crosscheck(int n, std::uint64_t)
{
    const auto letters = letters_up_to(n);
    Tasks tasks;
    for (const auto& x : letters) {
        tasks.push_back({"crosscheck/" + letter_key(x), "structure constants agree with the vector-field bracket",
                         "oracle", [=] {
                             for (const auto& y : letters) {
                                 const VectorField lhs = to_vector_field(sbar_bracket(x, y));
                                 const VectorField rhs = vf_bracket(to_vector_field(x), to_vector_field(y));
                                 if (!(lhs == rhs))
                                     return fail({{"y", y.str()}, {"sbar", lhs.str()}, {"fields", rhs.str()}});
                             }
                             return pass({{"pairs", letters.size()}});
                         }});
    }
    tasks.push_back({"grading", "[d, L_alpha] = |alpha| L_alpha", "identity", [n] {
                         const int top = std::max(n, 6);
                         for (const auto& l : letters_up_to(top)) {
                             if (l.is_d2())
                                 continue;
                             const SbarElement r = sbar_bracket(sbar_d(), SbarElement(l)) - SbarElement(l, l.degree());
                             if (!r.is_zero())
                                 return fail({{"letter", l.str()}, {"residual", to_string(r)}});
                         }
                         return pass({{"max_degree", top}});
                     }});
    return tasks;
}

Tasks divergence_suite(int n, std::uint64_t)
{
    Tasks tasks;
    for (int deg = -1; deg <= n; ++deg) {
        tasks.push_back({"div/L/degree-" + std::to_string(deg), "div L_alpha = 0", "identity", [deg] {
                             int count = 0;
                             for (int a1 = -1; a1 <= deg + 1; ++a1) {
                                 if (!in_phi({a1, deg - a1}))
                                     continue;
                                 const Poly2 div = divergence(l_basis({a1, deg - a1}));
                                 ++count;
                                 if (!div.is_zero())
                                     return fail({{"alpha", idx({a1, deg - a1})}, {"divergence", div.str("t1", "t2")}});
                             }
                             return pass({{"fields", count}});
                         }});
    }
    tasks.push_back({"div/d", "div d = 2", "reference", [] {
                         const Poly2 div = divergence(to_vector_field(sbar_d()));
                         return check(div == Poly2::constant(2), {{"divergence", div.str("t1", "t2")}});
                     }});
    tasks.push_back({"div/reject-t1^2p1", "fields of non-constant divergence lie outside Sbar_2", "reference", [] {
                         try {
                             from_vector_field(VectorField::monomial({2, 0}, 1));
                         } catch (const std::invalid_argument&) {
                             return pass();
                         }
                         return fail({{"error", "t1^2 p1 was accepted"}});
                     }});
    return tasks;
}

Tasks twist(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const Scalar a1 = random_nonzero(rng), a2 = random_nonzero(rng), c = random_nonzero(rng);
    const auto letters = letters_up_to(n);
    Tasks tasks;
    for (const auto& x : letters) {
        tasks.push_back({"scaling/" + letter_key(x), "scaling twist is an invertible Lie automorphism", "identity",
                         [=] {
                             const VectorField vx = to_vector_field(x);
                             const VectorField tx = scaling_twist(a1, a2, vx);
                             if (!(scaling_twist(1 / a1, 1 / a2, tx) == vx))
                                 return fail({{"a", {to_string(a1), to_string(a2)}}, {"inverse", "failed"}});
                             for (const auto& y : letters) {
                                 const VectorField vy = to_vector_field(y);
                                 const VectorField lhs = scaling_twist(a1, a2, vf_bracket(vx, vy));
                                 const VectorField rhs = vf_bracket(tx, scaling_twist(a1, a2, vy));
                                 if (!(lhs == rhs))
                                     return fail({{"a", {to_string(a1), to_string(a2)}}, {"y", y.str()},
                                                  {"lhs", lhs.str()}, {"rhs", rhs.str()}});
                             }
                             return pass();
                         }});
        tasks.push_back({"unipotent/" + letter_key(x), "unipotent twist is an invertible Lie automorphism",
                         "identity", [=] {
                             const VectorField vx = to_vector_field(x);
                             const VectorField tx = unipotent_twist(c, vx);
                             if (!(unipotent_twist(-c, tx) == vx))
                                 return fail({{"c", to_string(c)}, {"inverse", "failed"}});
                             for (const auto& y : letters) {
                                 const VectorField vy = to_vector_field(y);
                                 const VectorField lhs = unipotent_twist(c, vf_bracket(vx, vy));
                                 const VectorField rhs = vf_bracket(tx, unipotent_twist(c, vy));
                                 if (!(lhs == rhs))
                                     return fail({{"c", to_string(c)}, {"y", y.str()}, {"lhs", lhs.str()},
                                                  {"rhs", rhs.str()}});
                             }
                             return pass();
                         }});
    }
    tasks.push_back({"reference/scaling-L(1,-1)", "scaling twist on L_(1,-1) with a = (2,3)", "reference", [] {
                         const VectorField got = scaling_twist(2, 3, l_basis({1, -1}));
                         return check(got == VectorField::monomial({1, 0}, 2, -3), {{"value", got.str()}});
                     }});
    tasks.push_back({"reference/unipotent-d2", "unipotent twist of d_2 with c = -1", "reference", [] {
                         const VectorField got = unipotent_twist(-1, VectorField::euler(2));
                         const VectorField want = VectorField::euler(2) + VectorField::monomial({0, 1}, 1);
                         return check(got == want, {{"value", got.str()}});
                     }});
    return tasks;
}

// ---------------------------------------------------------------- weyl_smash

Tasks phi_hom(int n, std::uint64_t)
{
    const auto gens = smash_generators(n);
    Tasks tasks;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const SmashGenerator x = gens[i];
        tasks.push_back({"hom/" + x.str(), "phi respects the smash-product relations", "identity", [=] {
                             for (std::size_t j = 0; j < gens.size(); ++j) {
                                 const TensorAlgElement r = phi_hom_check(x, gens[j]);
                                 if (!r.is_zero())
                                     return fail({{"y", gens[j].str()}, {"discrepancy", to_string(r)}});
                             }
                             return pass({{"pairs", gens.size()}});
                         }});
    }
    const int display_degree = std::min(n, 3);
    for (const auto& [l1, l2] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}}) {
        for (const auto& [a1, a2] : std::vector<std::pair<int, int>>{{1, 1}, {2, -1}}) {
            const std::string cell = lam(l1, l2) + "/a=(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
            tasks.push_back({"display/" + cell, "phi(L_alpha) reproduces the action on T(A_2^a, V)", "oracle",
                             [=] {
                                 const TModule m(a1, a2, Gl2Module(l1, l2));
                                 for (const auto& l : letters_up_to(display_degree))
                                     for (const auto& b : m.slice(2)) {
                                         const TVector w(b, 1);
                                         const TVector lhs = m.act_tensor(phi(l), w);
                                         const TVector rhs = m.act(l, w);
                                         if (!(lhs == rhs))
                                             return fail({{"letter", l.str()},
                                                          {"vector", to_string(w)},
                                                          {"through_phi", to_string(lhs)},
                                                          {"display", to_string(rhs)}});
                                     }
                                 return pass();
                             }});
        }
    }
    return tasks;
}

// ---------------------------------------------------------------- rep_lab

const std::vector<std::pair<int, int>>& lambda_grid()
{
    static const std::vector<std::pair<int, int>> grid{{0, 0}, {1, 0}, {1, 1}, {2, 0}, {3, 1}};
    return grid;
}

Tasks action_axioms(int n, std::uint64_t)
{
    const auto gens = letters_up_to(2);
    Tasks tasks;
    for (const auto& [l1, l2] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 0}})
        for (const auto& [a1, a2] : std::vector<std::pair<int, int>>{{1, 1}, {1, 0}, {0, 0}}) {
            const std::string cell = lam(l1, l2) + "/a=(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
            tasks.push_back({"axioms/" + cell, "T(A_2^a, V) is an Sbar_2-module", "identity", [=] {
                                 const TModule m(a1, a2, Gl2Module(l1, l2));
                                 const auto keys = m.slice(n);
                                 std::map<std::pair<std::size_t, std::size_t>, TVector> cache;
                                 long checked = 0;
                                 for (const auto& b : keys) {
                                     const TVector w(b, 1);
                                     std::vector<TVector> once;
                                     for (const auto& g : gens)
                                         once.push_back(m.act(g, w));
                                     for (std::size_t i = 0; i < gens.size(); ++i)
                                         for (std::size_t j = i + 1; j < gens.size(); ++j) {
                                             const TVector lhs = m.act(gens[i], once[j]) - m.act(gens[j], once[i]);
                                             const TVector rhs = m.act(sbar_bracket(gens[i], gens[j]), w);
                                             ++checked;
                                             if (!(lhs == rhs))
                                                 return fail({{"x", gens[i].str()},
                                                              {"y", gens[j].str()},
                                                              {"vector", to_string(w)},
                                                              {"commutator", to_string(lhs)},
                                                              {"bracket", to_string(rhs)}});
                                         }
                                 }
                                 return pass({{"checks", checked}});
                             }});
        }
    return tasks;
}

Tasks whittaker_dim(int n, std::uint64_t)
{
    Tasks tasks;
    for (const auto& [l1, l2] : lambda_grid()) {
        tasks.push_back({"dim/" + lam(l1, l2), "Wh_1(T(A_2^1, V)) has dimension dim V for every window", "oracle",
                         [=] {
                             const TModule m(1, 1, Gl2Module(l1, l2));
                             json dims = json::array();
                             bool ok = true;
                             for (int d = 0; d <= n; ++d) {
                                 const auto basis = whittaker_space(m, d);
                                 dims.push_back(basis.size());
                                 ok = ok && basis.size() == m.gl2().dim();
                                 for (const auto& v : basis)
                                     ok = ok && tvector_degree(v) == 0;
                             }
                             return check(ok, {{"dim_v", m.gl2().dim()}, {"dims", dims}});
                         }});
        tasks.push_back({"roundtrip/" + lam(l1, l2), "gl_2 acts on Whittaker vectors as on V", "oracle", [=] {
                             const Gl2Module v(l1, l2);
                             const TModule m(1, 1, v);
                             std::vector<TVector> basis;
                             for (int k = 0; k < static_cast<int>(v.dim()); ++k)
                                 basis.push_back(m.basis_vector({0, 0}, k));
                             for (const auto& x : {Letter::d2(), Letter::L(0, 0), Letter::L(1, -1), Letter::L(-1, 1)}) {
                                 const Matrix got = whittaker_gl2_action(m, x, basis);
                                 const Matrix want = m.gl2_matrix(SbarElement(x));
                                 if (!(got == want))
                                     return fail({{"letter", x.str()}, {"on_whittaker", got.str()}, {"on_v", want.str()}});
                             }
                             return pass();
                         }});
    }
    tasks.push_back({"dim/a=(0,0)/" + lam(1, 0), "untwisted Whittaker vectors are the constants", "oracle", [n] {
                         const TModule m(0, 0, Gl2Module(1, 0));
                         json dims = json::array();
                         bool ok = true;
                         for (int d = 0; d <= n; ++d) {
                             const auto s = whittaker_space(m, d).size();
                             dims.push_back(s);
                             ok = ok && s == 2;
                         }
                         return check(ok, {{"dims", dims}});
                     }});
    for (const auto& [l1, l2] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 0}}) {
        tasks.push_back({"twisted/" + lam(l1, l2),
                         "T(A_2^(1,0), V) twisted by exp ad(-t2 p1) has type-1 Whittaker space of dimension dim V",
                         "oracle", [=, n = n] {
                             const TModule m(1, 0, Gl2Module(l1, l2));
                             json dims = json::array();
                             bool ok = true;
                             for (int d = 0; d <= std::min(n, 4); ++d) {
                                 const auto s = twisted_whittaker_space(m, -1, 1, 1, d).size();
                                 dims.push_back(s);
                                 ok = ok && s == m.gl2().dim();
                             }
                             return check(ok, {{"dim_v", m.gl2().dim()}, {"dims", dims}});
                         }});
    }
    return tasks;
}

Tasks freeness(int n, std::uint64_t)
{
    Tasks tasks;
    for (const auto& [l1, l2] : lambda_grid()) {
        tasks.push_back({"uh/" + lam(l1, l2), "h^m (1 (x) v_k) are independent in T(A_2^1, V)", "oracle", [=] {
                             const auto r = uh_freeness_check(TModule(1, 1, Gl2Module(l1, l2)), n);
                             return check(r.full_rank(),
                                          {{"monomials", r.monomials}, {"dim_v", r.dim_v}, {"rank", r.rank}});
                         }});
    }
    tasks.push_back({"q1/h-powers", "h^m v_1 are independent in Q_1", "oracle", [n] {
                         const int top = std::max(n, 6);
                         EchelonBasis<PBWWord> eb;
                         int count = 0;
                         for (int deg = 0; deg <= top; ++deg)
                             for (int m1 = 0; m1 <= deg; ++m1) {
                                 ++count;
                                 eb.insert(q1_act(u_h_power({m1, deg - m1}), q1_generator()));
                             }
                         return check(eb.rank() == static_cast<std::size_t>(count),
                                      {{"max_degree", top}, {"vectors", count}, {"rank", eb.rank()}});
                     }});
    return tasks;
}

Tasks sigma_annihilation(int n, std::uint64_t)
{
    Tasks tasks;
    tasks.push_back({"search/a=(0,0)/" + lam(1, 0), "some sigma^{m,j}_{alpha,beta} annihilates T(A_2^0, V)",
                     "measurement", [n] {
                         const TModule m(0, 0, Gl2Module(1, 0));
                         const auto r = sigma_annihilation_search(m, 4, 2, n);
                         json witnesses = json::array();
                         for (std::size_t k = 0; k < r.witnesses.size(); ++k) {
                             if (!r.witnesses[k])
                                 continue;
                             const auto& [op, b] = *r.witnesses[k];
                             witnesses.push_back({{"m", op.m},
                                                  {"j", op.j},
                                                  {"alpha", idx(op.alpha)},
                                                  {"beta", idx(op.beta)},
                                                  {"vector", to_string(TVector(b, 1))}});
                         }
                         json w{{"minimal_m", r.minimal_m ? json(*r.minimal_m) : json(nullptr)},
                                {"vector_degree", n},
                                {"index_degree", 2},
                                {"nonvanishing_below", witnesses}};
                         return check(r.minimal_m.has_value(), w);
                     }});
    tasks.push_back({"value/m=1,j=1,alpha=beta=(0,0)", "sigma^{1,1}_{0,0} on 1 (x) v_0 in T(A_2^0, V(1,0))",
                     "measurement", [] {
                         const TModule m(0, 0, Gl2Module(1, 0));
                         const TVector v = sigma_act(m, {1, 1, {0, 0}, {0, 0}}, m.basis_vector({0, 0}, 0));
                         return pass({{"value", to_string(v)}});
                     }});
    tasks.push_back({"value/l(-1,-1)-term", "terms with l_(-1,-1) vanish", "identity", [] {
                         const TModule m(1, 1, Gl2Module(1, 0));
                         const TVector w = m.basis_vector({1, 1}, 1);
                         // sigma^{1,1}_{(-2,..)} is not formable; use alpha = (-1,-1): only i = 0 survives
                         const TVector got = sigma_act(m, {1, 1, {-1, -1}, {0, 0}}, w);
                         const TVector want = m.act(Letter::L(0, -1), m.act(Letter::L(0, 0), w));
                         return check(got == want, {{"got", to_string(got)}, {"want", to_string(want)}});
                     }});
    return tasks;
}

Tasks closure(int n, std::uint64_t seed)
{
    constexpr int kGen = 2;
    auto rows_json = [](const ClosureReport& r) {
        json rows = json::array();
        for (const auto& row : r.rows)
            rows.push_back({{"degree", row.degree}, {"closure", row.closure_dim}, {"ambient", row.ambient_dim}});
        return rows;
    };
    Tasks tasks;
    tasks.push_back({"proper/" + lam(1, 0) + "/seed=v0+v1", "the submodule generated by 1 (x) (v_0 + v_1) is proper",
                     "measurement", [=] {
                         const TModule m(1, 1, Gl2Module(1, 0));
                         const auto r = closure_probe(m, m.basis_vector({0, 0}, 0) + m.basis_vector({0, 0}, 1), n, kGen);
                         bool proper = true;
                         for (const auto& row : r.rows)
                             proper = proper && row.closure_dim < row.ambient_dim;
                         return check(proper, {{"D", n}, {"G", kGen}, {"rows", rows_json(r)}});
                     }});
    for (const auto& [l1, l2] : std::vector<std::pair<int, int>>{{1, 1}, {2, 0}})
        for (int trial = 0; trial < 3; ++trial) {
            tasks.push_back({"full/" + lam(l1, l2) + "/random-" + std::to_string(trial),
                             "a nonzero vector generates the whole module", "measurement", [=] {
                                 const TModule m(1, 1, Gl2Module(l1, l2));
                                 std::mt19937_64 rng(seed * 1000003 + static_cast<std::uint64_t>(trial * 17 + l1 * 5 + l2));
                                 std::uniform_int_distribution<int> coeff(-3, 3);
                                 TVector v;
                                 while (v.is_zero())
                                     for (const auto& b : m.slice(1))
                                         v.add_term(b, coeff(rng));
                                 const auto r = closure_probe(m, v, n, kGen);
                                 bool full = true;
                                 for (const auto& row : r.rows)
                                     full = full && row.closure_dim == row.ambient_dim;
                                 return check(full, {{"seed_vector", to_string(v)}, {"rows", rows_json(r)}});
                             }});
        }
    tasks.push_back({"T1/a=(0,0)/" + lam(1, 0), "slice dimensions of U(Sbar_2^{>=0}) V inside T(A_2, V)",
                     "measurement", [=] {
                         const TModule m(0, 0, Gl2Module(1, 0));
                         std::vector<TVector> seeds;
                         for (int k = 0; k < 2; ++k)
                             seeds.push_back(m.basis_vector({0, 0}, k));
                         const auto r = closure_probe(m, seeds, n, kGen);
                         return pass({{"rows", rows_json(r)}});
                     }});
    return tasks;
}

// ---------------------------------------------------------------- h_algebra

json loc_json(const LocElement& x) { return to_string(x); }

Tasks y_centralizer(int n, std::uint64_t)
{
    Tasks tasks;
    for (const auto& a : y_indices(n)) {
        tasks.push_back({"centralizer/Y" + key(a), "Y_alpha commutes with partial_i and d_i", "identity", [=] {
                             const auto r = centralizer_check(a);
                             return check(r.all_zero(), {{"partial1", loc_json(r.with_partial1)},
                                                         {"partial2", loc_json(r.with_partial2)},
                                                         {"d1", loc_json(r.with_d1)},
                                                         {"d2", loc_json(r.with_d2)}});
                         }});
        if (a.degree() <= 3)
            tasks.push_back({"inverse/Y" + key(a), "Y_alpha commutes with partial_i^{-1}", "identity", [=] {
                                 const LocElement y = y_element(a);
                                 const LocElement c1 = loc_commutator(loc_partial_power({-1, 0}), y);
                                 const LocElement c2 = loc_commutator(loc_partial_power({0, -1}), y);
                                 return check(c1.is_zero() && c2.is_zero(),
                                              {{"inv_partial1", loc_json(c1)}, {"inv_partial2", loc_json(c2)}});
                             }});
    }
    for (const auto& a : y_generators()) {
        tasks.push_back({"display/Y" + key(a), "general formula matches the closed form of Y_alpha", "reference", [=] {
                             const LocElement got = y_element(a), want = y_reference(a);
                             return check(got == want, {{"general", to_string(got)}, {"closed_form", to_string(want)}});
                         }});
        tasks.push_back({"display/xi" + key(a), "general formula matches the closed form of xi(Y_alpha)", "reference",
                         [=] {
                             const UEnvElement got = xi_y(a), want = xi_reference(a);
                             return check(got == want,
                                          {{"general", to_string(got)}, {"closed_form", to_string(want)}});
                         }});
    }
    return tasks;
}

Tasks g_recurrence(int n, std::uint64_t)
{
    Tasks tasks;
    for (const auto& a : y_indices(n)) {
        tasks.push_back({"g/Y" + key(a), "difference identities of the coefficient polynomials g_beta", "identity", [=] {
                             int count = 0;
                             for (const auto& [beta, r] : g_recurrence_residuals(a)) {
                                 ++count;
                                 if (!r.is_zero())
                                     return fail({{"beta", idx(beta)}, {"residual", r.str()}});
                             }
                             return pass({{"identities", count}});
                         }});
    }
    return tasks;
}

Tasks xi_whittaker(int n, std::uint64_t)
{
    Tasks tasks;
    const Q1Element v1 = q1_generator();
    for (const auto& a : y_indices(n)) {
        tasks.push_back({"stable/Y" + key(a), "(partial_i - 1) xi(Y_alpha) v_1 = 0 in Q_1", "identity", [=] {
                             const Q1Element q = q1_act(xi_y(a), v1);
                             for (int i = 1; i <= 2; ++i) {
                                 const Q1Element r = q1_act(u_partial(i) - u_one(), q);
                                 if (!r.is_zero())
                                     return fail({{"i", i}, {"residual", to_string(q1_lift(r))}});
                             }
                             return pass();
                         }});
        if (a.degree() <= 3)
            tasks.push_back({"consistency/Y" + key(a), "Y_alpha v_1 = xi(Y_alpha) v_1 in Q_1", "oracle", [=] {
                                 const Q1Element lhs = q1_act(y_element(a), v1);
                                 const Q1Element rhs = reduce_mod_I1(xi_y(a));
                                 return check(lhs == rhs, {{"y_v1", to_string(q1_lift(lhs))},
                                                           {"xi_v1", to_string(q1_lift(rhs))}});
                             }});
    }
    return tasks;
}

Tasks pi1_compare(int, std::uint64_t)
{
    Tasks tasks;
    for (const auto& a : y_generators()) {
        tasks.push_back({"display/pi1" + key(a), "pi_1(Y_alpha) in U(gl_2)", "reference", [=] {
                             const UGl2Element got = pi1(a), want = pi1_reference(a);
                             return check(got == want, {{"computed", to_string(got)}, {"closed_form", to_string(want)}});
                         }});
        for (const auto& [l1, l2] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {1, 1}, {2, 0}}) {
            tasks.push_back({"wh/Y" + key(a) + "/" + lam(l1, l2),
                             "Y_alpha on Wh_1(T(A_2^1, V)) versus pi_1(Y_alpha) on V", "oracle", [=] {
                                 const WhCompare c = wh_action_compare(a, Gl2Module(l1, l2));
                                 return check(c.equal(), {{"on_whittaker", c.on_whittaker.str()},
                                                          {"via_pi1", c.via_pi1.str()}});
                             }});
        }
    }
    tasks.push_back({"matrix/pi1Y(1,0)/" + lam(1, 0), "pi_1(Y_(1,0)) on V(1,0)", "reference", [] {
                         const Matrix got = pi1_matrix({1, 0}, Gl2Module(1, 0));
                         Matrix want(2, 2);
                         want(0, 0) = -2;
                         want(0, 1) = 2;
                         return check(got == want, {{"matrix", got.str()}});
                     }});
    return tasks;
}

std::string word_str(const std::vector<MultiIndex>& w)
{
    if (w.empty())
        return "1";
    std::string s;
    for (const auto& a : w)
        s += (s.empty() ? "" : "*") + std::string("Y") + idx(a);
    return s;
}

Tasks y_basis(int n, std::uint64_t)
{
    Tasks tasks;
    tasks.push_back({"basis/window-" + std::to_string(n) + "/length-2", "ordered monomials in the Y_alpha are independent",
                     "oracle", [n] {
                         const auto r = y_basis_probe(y_indices(n), 2);
                         return check(r.independent(), {{"monomials", r.monomials}, {"rank", r.rank}});
                     }});
    tasks.push_back({"basis/degree-0/length-1", "Y_(1,-1) and Y_(-1,1) are independent", "oracle", [] {
                         const auto r = y_basis_probe({{1, -1}, {-1, 1}}, 1);
                         return check(r.rank == 2, {{"monomials", r.monomials}, {"rank", r.rank}});
                     }});
    tasks.push_back({"basis/empty", "empty window", "reference", [] {
                         const auto r = y_basis_probe({}, 2);
                         return check(r.rank == 0 && r.monomials == 0, {{"rank", r.rank}});
                     }});
    struct Search {
        MultiIndex target;
        int cap;
    };
    for (const auto& s : std::vector<Search>{{{1, -1}, 1}, {{1, 1}, 3}, {{2, -1}, 1}, {{2, -1}, 2}, {{-1, 2}, 2}}) {
        tasks.push_back({"generation/Y" + key(s.target) + "/cap-" + std::to_string(s.cap),
                         "Y_alpha lies in the algebra generated by the four generators", "measurement", [=] {
                             const auto found = y_generation_search(s.target, s.cap);
                             if (!found)
                                 return Outcome{Status::Inconclusive, {{"result", "not found within bound"}}};
                             json terms = json::array();
                             for (const auto& t : *found)
                                 terms.push_back({{"word", word_str(t.word)}, {"coeff", to_string(t.coeff)}});
                             return pass({{"decomposition", terms}});
                         }});
    }
    return tasks;
}

struct SuiteDef {
    int default_degree;
    std::function<Tasks(int, std::uint64_t)> build;
};

const std::map<std::string, SuiteDef>& registry()
{
    static const std::map<std::string, SuiteDef> r{
        {"jacobi", {4, jacobi}},
        {"bracket-crosscheck", {4, bracket_crosscheck}},
        {"divergence", {6, divergence_suite}},
        {"twist", {3, twist}},
        {"phi-hom", {3, phi_hom}},
        {"action-axioms", {4, action_axioms}},
        {"whittaker-dim", {6, whittaker_dim}},
        {"freeness", {4, freeness}},
        {"sigma-annihilation", {6, sigma_annihilation}},
        {"y-centralizer", {4, y_centralizer}},
        {"g-recurrence", {5, g_recurrence}},
        {"xi-whittaker", {4, xi_whittaker}},
        {"pi1-compare", {0, pi1_compare}},
        {"y-basis", {1, y_basis}},
        {"closure", {6, closure}},
    };
    return r;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"jacobi",        "bracket-crosscheck", "divergence",
                                                "twist",         "phi-hom",            "action-axioms",
                                                "whittaker-dim", "freeness",           "sigma-annihilation",
                                                "y-centralizer", "g-recurrence",       "xi-whittaker",
                                                "pi1-compare",   "y-basis",            "closure"};
    return names;
}

int default_max_degree(const std::string& suite)
{
    const auto it = registry().find(suite);
    if (it == registry().end())
        throw std::invalid_argument("unknown suite '" + suite + "'");
    return it->second.default_degree;
}

int worker_count(int requested)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("SBAR_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options)
{
    const auto it = registry().find(name);
    if (it == registry().end())
        throw std::invalid_argument("unknown suite '" + name + "'");
    const int degree = options.max_degree.value_or(it->second.default_degree);
    if (degree < 0)
        throw std::invalid_argument("--max-degree must be non-negative");

    const auto start = std::chrono::steady_clock::now();
    const Tasks tasks = it->second.build(degree, options.seed);
    std::vector<CaseRecord> records(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const Task& t = tasks[i];
            Outcome o;
            try {
                o = t.run();
            } catch (const std::exception& e) {
                o = fail({{"exception", e.what()}});
            }
            records[i] = CaseRecord{t.name, t.anchor, t.provenance, o.status, std::move(o.witness)};
        }
    };
    const int n = std::min<int>(worker_count(options.workers), static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
    std::vector<std::thread> pool;
    for (int i = 1; i < n; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();

    std::stable_sort(records.begin(), records.end(),
                     [](const CaseRecord& a, const CaseRecord& b) { return a.name < b.name; });
    SuiteReport report;
    report.suite = name;
    report.seed = options.seed;
    report.cases = std::move(records);
    report.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace sbarlab
