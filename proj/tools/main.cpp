#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "abel3/fm_rank1.hpp"
#include "abel3/lattice_ring.hpp"
#include "abel3/qseries.hpp"
#include "abel3/spin.hpp"
#include "abel3/verify.hpp"
#include "abel3/wall_geometry.hpp"

using nlohmann::json;
using namespace abel3;

namespace {

std::vector<Int> parse_ints(const std::string& s, size_t want = 0) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
    if (want && out.size() != want)
        throw CLI::ValidationError("expected " + std::to_string(want) +
                                   " comma-separated integers, got '" + s +
                                   "'");
    return out;
}

GammaVector parse_gamma(const std::string& s) {
    auto v = parse_ints(s, 4);
    return {v[0], v[1], v[2], v[3]};
}

SL2Matrix parse_sl2(const std::string& s) {
    auto v = parse_ints(s, 4);
    return {v[0], v[1], v[2], v[3]};
}

// columns separated by ';', entries by ','
IntMatrix parse_lattice(const std::string& s, int ambient) {
    std::vector<std::vector<Int>> cols;
    std::stringstream ss(s);
    std::string col;
    while (std::getline(ss, col, ';'))
        cols.push_back(parse_ints(col, size_t(ambient)));
    IntMatrix m(ambient, std::vector<Int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < ambient; ++i) m[i][j] = cols[j][i];
    return m;
}

json gamma_json(const GammaVector& v) {
    return {to_string(v.v0), to_string(v.v1), to_string(v.v2),
            to_string(v.v3)};
}

json semihom_json(const SemihomClass& c) {
    return {{"p", to_string(c.p)}, {"q", to_string(c.q)},
            {"r", to_string(c.r)}, {"slope", c.slope().str()}};
}

void emit(bool as_json, const json& j, const std::string& plain) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << plain << "\n";
}

int cmd_fm_orbit(const Int& beta, const Int& n, const Int& bound,
                 bool as_json) {
    CurveClass cc{beta, n};
    GammaVector v = cc.as_gamma();
    bool decomposable = decompose(v).has_value();
    json out;
    out["beta"] = to_string(beta);
    out["n"] = to_string(n);
    out["discriminant"] = to_string(discriminant(v));
    out["solutions"] = json::array();
    std::ostringstream plain;
    for (const auto& s : cubic_unit_solutions(cc, bound)) {
        CurveClass im = fm_image(cc, s);
        SL2Matrix g = reconstruct_g(cc, s);
        json js;
        js["c"] = to_string(s.c);
        js["d"] = to_string(s.d);
        js["image"] = {to_string(im.beta), to_string(im.n)};
        js["g"] = {to_string(g.a), to_string(g.b), to_string(g.c),
                   to_string(g.d)};
        plain << "(c,d)=(" << to_string(s.c) << "," << to_string(s.d)
              << ")  ->  (beta',n')=(" << to_string(im.beta) << ","
              << to_string(im.n) << ")";
        if (decomposable) {
            auto verdict = wallcross_consistency(cc, s);
            js["case"] = verdict.wall ? "ii" : "i";
            js["lhs"] = to_string(verdict.lhs);
            js["rhs"] = to_string(verdict.rhs);
            js["consistent"] = verdict.ok;
            plain << "  case (" << (verdict.wall ? "ii" : "i") << ") lhs "
                  << to_string(verdict.lhs) << " rhs "
                  << to_string(verdict.rhs)
                  << (verdict.ok ? "" : "  INCONSISTENT");
        }
        plain << "\n";
        out["solutions"].push_back(js);
    }
    std::string p = plain.str();
    if (!p.empty()) p.pop_back();
    emit(as_json, out, p);
    return 0;
}

int cmd_quest(const Int& beta, const Int& n, const Int& bound, bool as_json) {
    QuestReport rep = check_quest({beta, n}, bound);
    json out;
    out["beta"] = to_string(beta);
    out["n"] = to_string(n);
    out["bound"] = to_string(bound);
    out["counterexample"] = rep.counterexample;
    out["lemma_verified"] = rep.lemma_verified;
    out["hits"] = json::array();
    std::ostringstream plain;
    for (const auto& h : rep.hits) {
        json jh;
        jh["c"] = to_string(h.solution.c);
        jh["d"] = to_string(h.solution.d);
        jh["image"] = {to_string(h.image.beta), to_string(h.image.n)};
        jh["open_interval_violation"] = h.open_interval_violation;
        jh["boundary"] = h.boundary;
        out["hits"].push_back(jh);
        plain << "hit (c,d)=(" << to_string(h.solution.c) << ","
              << to_string(h.solution.d) << ") image ("
              << to_string(h.image.beta) << "," << to_string(h.image.n)
              << ")" << (h.open_interval_violation ? " VIOLATION" : "")
              << (h.boundary ? " boundary" : "") << "\n";
    }
    plain << (rep.counterexample ? "counterexample found"
                                 : "no counterexample");
    emit(as_json, out, plain.str());
    return rep.counterexample || !rep.lemma_verified ? 1 : 0;
}

int cmd_spin_solve(bool as_json) {
    const auto& q = spin::solve_quartic();
    (void)spin::invariant_bilinear();
    json out;
    out["bilinear_nullity"] = 1;
    out["quartic_nullity"] = 1;
    out["quartic_terms"] = q.coeff.size();
    out["normalization"] =
        to_string(spin::delta_spin(spin::embed_e3(1, 0, 0, 0, 0, 0, 0, 1)));
    json terms = json::array();
    for (const auto& [mono, c] : q.coeff) {
        std::string key;
        for (int k = 0; k < 4; ++k) {
            if (k) key += "*";
            key += spin::subset_name(spin::subset_mask(mono[k]));
        }
        terms.push_back({{"monomial", key}, {"coeff", to_string(c)}});
    }
    out["quartic"] = terms;
    std::ostringstream plain;
    plain << "bilinear nullity 1, quartic nullity 1, "
          << q.coeff.size() << " quartic terms, Delta(1+x1..x6) = "
          << out["normalization"].get<std::string>();
    emit(as_json, out, plain.str());
    return 0;
}

int cmd_spin_check(long trials, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> scal(-5, 5);
    auto random_omega = [&] {
        spin::SpinVector w;
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j) {
                uint8_t mask = uint8_t((1 << (i - 1)) | (1 << (j - 1)));
                w.a[spin::subset_index(mask)] = coef(rng);
            }
        return w;
    };
    long bad = 0;
    for (long t = 0; t < trials; ++t) {
        auto e1 = spin::SpinVector::exp_nilpotent(random_omega()) *
                  Rat(scal(rng));
        auto e2 = spin::SpinVector::exp_nilpotent(random_omega()) *
                  Rat(scal(rng));
        Rat b = spin::bilinear(e1, e2);
        if (spin::delta_spin(e1) != 0 ||
            spin::delta_spin(e1 + e2) != -b * b)
            ++bad;
    }
    std::cout << trials << " trials, " << bad << " failures\n";
    return bad ? 1 : 0;
}

int cmd_verify() {
    VerifyReport rep = run_verification();
    for (const auto& c : rep.checks) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%7.2fs", c.seconds);
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  "
                  << buf << "  " << c.detail << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for rank-one classes on a principally "
                 "polarized abelian threefold"};
    app.require_subcommand(1);

    std::string v_str, w_str, g_str, l1_str, l2_str, svg_path, viewport_str;
    std::string beta_str = "0", n_str = "0", bound_str = "20";
    long order = 3, trials = 100;
    unsigned long seed = 1;
    bool as_json = false;

    auto add_v = [&](CLI::App* c) {
        c->add_option("--v", v_str, "class as v0,v1,v2,v3")->required();
    };
    auto add_json = [&](CLI::App* c) {
        c->add_flag("--json", as_json, "JSON on stdout");
    };

    auto* pair = app.add_subcommand("pair", "Euler pairing of two classes");
    add_v(pair);
    pair->add_option("--w", w_str, "second class")->required();

    auto* disc = app.add_subcommand("disc", "discriminant of a class");
    add_v(disc);

    auto* act = app.add_subcommand("act", "apply an SL2(Z) element");
    add_v(act);
    act->add_option("--g", g_str, "matrix as a,b,c,d")->required();

    auto* dec = app.add_subcommand("decompose",
                                   "two-slope semihomogeneous decomposition");
    add_v(dec);
    add_json(dec);

    auto* wt = app.add_subcommand("wallterm", "wall-crossing term");
    add_v(wt);

    auto* cd = app.add_subcommand("conj-dt", "conjectural count C_{beta,n}");
    cd->add_option("--beta", beta_str)->required();
    cd->add_option("--n", n_str)->required();

    auto* ac = app.add_subcommand("a-coeffs", "coefficients of -16/(theta2^4 theta3)");
    ac->add_option("--bound", bound_str, "largest n");
    add_json(ac);

    auto* fm = app.add_subcommand("fm-orbit", "derived-equivalence orbit of (beta,n)");
    fm->add_option("--beta", beta_str)->required();
    fm->add_option("--n", n_str)->required();
    fm->add_option("--bound", bound_str, "box bound for (c,d)");
    add_json(fm);

    auto* qu = app.add_subcommand("quest", "scan for slope-interval violations");
    qu->add_option("--beta", beta_str)->required();
    qu->add_option("--n", n_str)->required();
    qu->add_option("--bound", bound_str, "box bound for (c,d)");
    add_json(qu);

    auto* ss = app.add_subcommand("spin-solve", "invariant bilinear form and quartic");
    add_json(ss);

    auto* sc = app.add_subcommand("spin-check", "randomized quartic identities");
    sc->add_option("--bound", trials, "number of trials");
    sc->add_option("--seed", seed);

    auto* ring = app.add_subcommand("ring", "product of lattice classes");
    ring->add_option("--order", order, "ambient rank")->required();
    ring->add_option("--l1", l1_str, "columns 'a,b,..;c,d,..'")->required();
    ring->add_option("--l2", l2_str, "columns 'a,b,..;c,d,..'")->required();
    add_json(ring);

    auto* walls = app.add_subcommand("walls", "wall locus on the (alpha,beta) slice");
    add_v(walls);
    add_json(walls);
    walls->add_option("--svg", svg_path, "write an SVG figure to PATH");
    walls->add_option("--viewport", viewport_str,
                      "beta_min,beta_max,alpha_max (for --svg)");

    app.add_subcommand("verify", "run the full verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();

    try {
        if (name == "pair") {
            std::cout << to_string(euler_pairing(parse_gamma(v_str),
                                                 parse_gamma(w_str)))
                      << "\n";
        } else if (name == "disc") {
            std::cout << to_string(discriminant(parse_gamma(v_str))) << "\n";
        } else if (name == "act") {
            GammaVector r = sl2_act(parse_sl2(g_str), parse_gamma(v_str));
            std::cout << r.str() << "\n";
        } else if (name == "decompose") {
            auto d = decompose(parse_gamma(v_str));
            if (!d) {
                emit(as_json, {{"decomposable", false}}, "none");
            } else {
                json out = {{"decomposable", true},
                            {"gamma1", semihom_json(d->gamma1)},
                            {"gamma2", semihom_json(d->gamma2)}};
                emit(as_json, out,
                     d->gamma1.str() + " + " + d->gamma2.str());
            }
        } else if (name == "wallterm") {
            auto d = decompose(parse_gamma(v_str));
            if (!d) {
                std::cerr << "class is not decomposable\n";
                return 1;
            }
            std::cout << to_string(wall_crossing_term(*d)) << "\n";
        } else if (name == "conj-dt") {
            std::cout << to_string(
                             conj_dt(parse_int(beta_str), parse_int(n_str)))
                      << "\n";
        } else if (name == "a-coeffs") {
            long top = std::stol(bound_str);
            auto coeffs = a_coefficients(4 * (top + 2));
            json out = json::array();
            for (long k = -1; k <= top; ++k) {
                out.push_back(
                    {{"n", k}, {"a", to_string(coeffs.at(k))}});
                if (!as_json)
                    std::cout << "a(" << k
                              << ") = " << to_string(coeffs.at(k)) << "\n";
            }
            if (as_json) std::cout << out.dump(2) << "\n";
        } else if (name == "fm-orbit") {
            return cmd_fm_orbit(parse_int(beta_str), parse_int(n_str),
                                parse_int(bound_str), as_json);
        } else if (name == "quest") {
            return cmd_quest(parse_int(beta_str), parse_int(n_str),
                             parse_int(bound_str), as_json);
        } else if (name == "spin-solve") {
            return cmd_spin_solve(as_json);
        } else if (name == "spin-check") {
            return cmd_spin_check(trials, seed);
        } else if (name == "ring") {
            auto l1 = SaturatedLattice(int(order),
                                       parse_lattice(l1_str, int(order)));
            auto l2 = SaturatedLattice(int(order),
                                       parse_lattice(l2_str, int(order)));
            RingElement prod = eps_product(l1, l2);
            json out = json::array();
            std::ostringstream plain;
            if (prod.terms.empty()) plain << "0";
            for (const auto& [lat, c] : prod.terms) {
                json cols = json::array();
                for (int j = 0; j < lat.rank(); ++j) {
                    json col = json::array();
                    for (int i = 0; i < lat.ambient(); ++i)
                        col.push_back(to_string(lat.basis()[i][j]));
                    cols.push_back(col);
                }
                out.push_back({{"coeff", to_string(c)}, {"basis", cols}});
                plain << to_string(c) << " * eps[rank " << lat.rank() << "]";
            }
            emit(as_json, out, plain.str());
        } else if (name == "walls") {
            GammaVector v = parse_gamma(v_str);
            if (!svg_path.empty()) {
                if (viewport_str.empty())
                    throw CLI::ValidationError("--svg requires --viewport");
                std::stringstream ss(viewport_str);
                std::string item;
                std::vector<double> vp;
                while (std::getline(ss, item, ','))
                    vp.push_back(std::stod(item));
                if (vp.size() != 3)
                    throw CLI::ValidationError(
                        "--viewport takes beta_min,beta_max,alpha_max");
                std::ofstream out(svg_path);
                if (!out) {
                    std::cerr << "cannot open " << svg_path << "\n";
                    return 1;
                }
                out << walls_svg(v, {vp[0], vp[1], vp[2]});
            }
            std::cout << walls_json(v);
        } else if (name == "verify") {
            return cmd_verify();
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
