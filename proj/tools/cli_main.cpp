// Command-line interface: exact computation of Schubert-calculus objects
// and the batch identity-verification harness.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or precondition error.

#include <CLI11.hpp>

#include <iostream>

#include <schubcalc/json_io.hpp>
#include <schubcalc/verify.hpp>

using namespace schubcalc;

namespace {

struct CommonOpts {
    std::string arg;
    int window = -1; // -1: per-command default
    std::string flavor = "O";
    std::string format = "human";
};

void emit_poly(const Polynomial& p, const std::string& format) {
    if (format == "json") std::cout << to_json(p).dump() << "\n";
    else std::cout << to_string(p) << "\n";
}

Involution parse_involution(const std::string& s, const std::string& flavor) {
    Permutation p = parse_permutation(s);
    return Involution(p, flavor == "Sp" ? Flavor::Sp : Flavor::O);
}

int default_window_for_degree(int deg) { return std::max(deg, 1); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"schubcalc: exact Schubert/involution-Schubert calculus and Schur P/Q formulas"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string side = "R", sign = "calibrated", partition_arg, t_arg;
    int letters = 4, jobs = 1, bound = -1;
    std::string suite, path_index = "0";
    bool essential_only = false;

    auto add_common = [&](CLI::App* cmd, bool takes_flavor = false) {
        cmd->add_option("arg", o.arg, "permutation (one-line \"3 5 1 4 2\", compact \"35142\", or cycles \"(1,5)(2,4)\")")
            ->required();
        cmd->add_option("--window,-w", o.window, "window size m (letters x_{-m}..)");
        if (takes_flavor)
            cmd->add_option("--flavor", o.flavor, "O or Sp")->check(CLI::IsMember({"O", "Sp"}));
        cmd->add_option("--format", o.format, "human or json")
            ->check(CLI::IsMember({"human", "json"}));
    };

    CLI::App* c_schubert = app.add_subcommand("schubert", "Schubert polynomial (window 0)");
    add_common(c_schubert);
    CLI::App* c_backstable =
        app.add_subcommand("backstable", "windowed back-stable Schubert polynomial");
    add_common(c_backstable);
    CLI::App* c_double = app.add_subcommand("double", "double Schubert polynomial");
    add_common(c_double);
    CLI::App* c_stanley = app.add_subcommand("stanley", "Stanley symmetric function on window letters");
    add_common(c_stanley);
    CLI::App* c_inv_s = app.add_subcommand("inv-schubert", "involution Schubert polynomial");
    add_common(c_inv_s, true);
    CLI::App* c_inv_f = app.add_subcommand("inv-stanley", "involution Stanley symmetric function");
    add_common(c_inv_f, true);

    std::string route = "tableau";
    CLI::App* c_schurq = app.add_subcommand("schurq", "Schur Q-function of a strict partition");
    c_schurq->add_option("partition", partition_arg, "strict partition, e.g. \"4,3,1\"")->required();
    c_schurq->add_option("--letters,-N", letters, "alphabet size");
    c_schurq->add_option("--route", route, "tableau or pfaffian")
        ->check(CLI::IsMember({"tableau", "pfaffian"}));
    c_schurq->add_option("--format", o.format)->check(CLI::IsMember({"human", "json"}));
    CLI::App* c_schurp = app.add_subcommand("schurp", "Schur P-function of a strict partition");
    c_schurp->add_option("partition", partition_arg)->required();
    c_schurp->add_option("--letters,-N", letters);
    c_schurp->add_option("--format", o.format)->check(CLI::IsMember({"human", "json"}));
    CLI::App* c_multiq = app.add_subcommand("multiq", "multiparameter Schur Q-function");
    c_multiq->add_option("partition", partition_arg)->required();
    c_multiq->add_option("--letters,-N", letters);
    c_multiq->add_option("--t", t_arg, "comma-separated integer parameters, e.g. \"1,-2,0\"");
    c_multiq->add_option("--format", o.format)->check(CLI::IsMember({"human", "json"}));

    CLI::App* c_detgr = app.add_subcommand("det-gr", "Kempf-Laksov style determinant for vexillary w");
    add_common(c_detgr);
    CLI::App* c_pflg = app.add_subcommand("pf-lg", "Lagrangian Pfaffian formula for vexillary y");
    add_common(c_pflg);
    CLI::App* c_pfog = app.add_subcommand("pf-og", "orthogonal Pfaffian formula for fpf z");
    add_common(c_pfog);
    c_pfog->add_option("--sign", sign, "calibrated, literal, flipped, kparity, or jk")
        ->check(CLI::IsMember({"calibrated", "literal", "flipped", "kparity", "jk"}));
    CLI::App* c_tlg = app.add_subcommand("tableau-lg", "essential-path tableau formula for vexillary y");
    add_common(c_tlg);
    c_tlg->add_option("--path", path_index, "path index, or 'all' to print every path");

    std::string diagram_kind = "rothe";
    CLI::App* c_diagram = app.add_subcommand("diagram", "Rothe / involution diagram rendering");
    add_common(c_diagram);
    c_diagram->add_option("--kind", diagram_kind, "rothe, O, or Sp")
        ->check(CLI::IsMember({"rothe", "O", "Sp"}));
    c_diagram->add_flag("--essential", essential_only, "render the essential set only");
    CLI::App* c_classify = app.add_subcommand("classify", "vexillary / Sp-vexillary / I-Grassmannian flags");
    add_common(c_classify);
    CLI::App* c_dearc = app.add_subcommand("dearc", "dearc of a fixed-point-free involution");
    add_common(c_dearc);
    c_dearc->add_option("--side", side, "R or L")->check(CLI::IsMember({"R", "L"}));

    CLI::App* c_verify = app.add_subcommand("verify", "run an identity-verification suite");
    {
        std::vector<std::string> names;
        for (auto& s : suite_registry()) names.push_back(s.name);
        names.push_back("all");
        c_verify->add_option("suite", suite, "suite name or 'all'")
            ->required()
            ->check(CLI::IsMember(names));
    }
    c_verify->add_option("--n", bound, "size bound (0 = trivially empty pass; default per suite)");
    c_verify->add_option("--jobs,-j", jobs, "worker threads (output is order-independent)");
    c_verify->add_option("--format", o.format)->check(CLI::IsMember({"human", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_schubert) {
            emit_poly(schubert_bjs(parse_permutation(o.arg), std::max(o.window, 0)), o.format);
        } else if (*c_backstable) {
            Permutation w = parse_permutation(o.arg);
            int m = o.window >= 0 ? o.window : default_window_for_degree(length(w));
            emit_poly(schubert_bjs(w, m), o.format);
        } else if (*c_double) {
            emit_poly(double_schubert(parse_permutation(o.arg), std::max(o.window, 0)), o.format);
        } else if (*c_stanley) {
            Permutation w = parse_permutation(o.arg);
            int m = o.window >= 0 ? o.window : default_window_for_degree(length(w));
            emit_poly(stanley_sym(w, m), o.format);
        } else if (*c_inv_s) {
            emit_poly(inv_schubert(parse_involution(o.arg, o.flavor), std::max(o.window, 0)),
                      o.format);
        } else if (*c_inv_f) {
            Involution z = parse_involution(o.arg, o.flavor);
            int m = o.window >= 0 ? o.window : default_window_for_degree(involution_length(z));
            emit_poly(inv_stanley(z, m), o.format);
        } else if (*c_schurq || *c_schurp) {
            Partition lam = parse_partition(partition_arg);
            std::vector<VarRef> vars;
            for (int i = 1; i <= letters; ++i) vars.push_back(xv(i));
            Polynomial out;
            if (*c_schurq)
                out = route == "pfaffian"
                          ? q_lambda_classical(lam, vars)
                          : (lam.empty() ? Polynomial(1)
                                         : q_lambda_tableaux(StrictPartition(lam), vars));
            else
                out = lam.empty() ? Polynomial(1) : p_lambda_tableaux(StrictPartition(lam), vars);
            emit_poly(out, o.format);
        } else if (*c_multiq) {
            Partition lam = parse_partition(partition_arg);
            std::vector<VarRef> vars;
            for (int i = 1; i <= letters; ++i) vars.push_back(xv(i));
            std::vector<Polynomial> t;
            for (int v : parse_partition(t_arg)) t.push_back(Polynomial(v));
            int need = lam.empty() ? 0 : lam[0];
            while (static_cast<int>(t.size()) < need) t.push_back(Polynomial());
            emit_poly(lam.empty() ? Polynomial(1)
                                  : multiparameter_q(StrictPartition(lam), vars, t),
                      o.format);
        } else if (*c_detgr) {
            emit_poly(grassmannian_determinant(parse_permutation(o.arg), std::max(o.window, 0)),
                      o.format);
        } else if (*c_pflg) {
            emit_poly(lagrangian_pfaffian(parse_involution(o.arg, "O"), std::max(o.window, 0)),
                      o.format);
        } else if (*c_pfog) {
            OgSignRule rule = sign == "literal"   ? OgSignRule::ColumnParity
                              : sign == "flipped" ? OgSignRule::ColumnParityFlipped
                              : sign == "kparity" ? OgSignRule::KParity
                              : sign == "jk"      ? OgSignRule::ColumnPlusKParity
                                                  : calibrated_og_sign();
            auto r = orthogonal_pfaffian(parse_involution(o.arg, "Sp"), std::max(o.window, 0), rule);
            if (o.format == "json") {
                json j{{"value", to_json(r.value)},
                       {"representative", to_cycle_string(r.representative)},
                       {"representative_kind", r.representative_kind},
                       {"sign", og_sign_name(r.sign)}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << to_string(r.value) << "\n";
                std::cerr << "# representative: " << r.representative_kind << " "
                          << to_cycle_string(r.representative) << ", sign " << og_sign_name(r.sign)
                          << "\n";
            }
        } else if (*c_tlg) {
            Involution y = parse_involution(o.arg, "O");
            int m = std::max(o.window, 0);
            auto paths = essential_paths(y);
            if (paths.empty()) throw std::invalid_argument("no essential paths");
            if (path_index == "all") {
                for (size_t i = 0; i < paths.size(); ++i) {
                    std::cout << "# path " << i << ":";
                    for (const Cell& c : paths[i].points)
                        std::cout << " (" << c.row << "," << c.col << ")";
                    std::cout << "\n";
                    emit_poly(path_tableau_formula(y, paths[i], m), o.format);
                }
            } else {
                size_t idx = std::stoul(path_index);
                if (idx >= paths.size()) throw std::invalid_argument("path index out of range");
                emit_poly(path_tableau_formula(y, paths[idx], m), o.format);
            }
        } else if (*c_diagram) {
            Permutation w = parse_permutation(o.arg);
            CellSet d = diagram_kind == "O"    ? involution_diagram(w, Flavor::O)
                        : diagram_kind == "Sp" ? involution_diagram(w, Flavor::Sp)
                                               : rothe_diagram(w);
            if (o.format == "json")
                std::cout << to_json(essential_only ? essential_set(d) : d).dump() << "\n";
            else if (essential_only)
                std::cout << render_diagram(w, essential_set(d));
            else
                std::cout << render_diagram(w, d);
        } else if (*c_classify) {
            Involution y = Involution::orthogonal(parse_permutation(o.arg));
            Classification c = classify(y);
            json j{{"vexillary", c.vexillary},
                   {"sp_vexillary", c.sp_vexillary},
                   {"i_grassmannian", c.i_grassmannian.has_value()},
                   {"fpf_i_grassmannian", c.fpf_i_grassmannian},
                   {"shape_o", c.shape_o},
                   {"shape_sp", c.shape_sp}};
            if (c.i_grassmannian) j["m"] = *c.i_grassmannian;
            if (o.format == "json") std::cout << j.dump() << "\n";
            else {
                std::cout << "vexillary: " << (c.vexillary ? "yes" : "no") << "\n"
                          << "Sp-vexillary: " << (c.sp_vexillary ? "yes" : "no") << "\n"
                          << "I-Grassmannian: "
                          << (c.i_grassmannian ? "yes, m=" + std::to_string(*c.i_grassmannian)
                                               : std::string("no"))
                          << "\n"
                          << "fpf-I-Grassmannian: " << (c.fpf_i_grassmannian ? "yes" : "no") << "\n"
                          << "sh^O: " << to_string(c.shape_o) << "\n"
                          << "sh^Sp: " << to_string(c.shape_sp) << "\n";
            }
        } else if (*c_dearc) {
            Involution z = parse_involution(o.arg, "Sp");
            Involution d = dearc(z, side == "L" ? DearcSide::L : DearcSide::R);
            if (o.format == "json") std::cout << to_json(d).dump() << "\n";
            else std::cout << to_cycle_string(d.perm()) << "\n";
        } else if (*c_verify) {
            auto reports = run_verification(suite, bound, jobs);
            bool all_ok = true;
            for (const auto& rep : reports) {
                all_ok = all_ok && rep.ok();
                if (o.format == "json") {
                    std::cout << rep.to_json().dump() << "\n";
                } else {
                    std::cout << (rep.ok() ? "PASS" : "FAIL") << " " << rep.suite << " ("
                              << rep.instances.size() << " instances, " << rep.failed()
                              << " failed)";
                    if (!rep.calibration.empty()) std::cout << " [sign " << rep.calibration << "]";
                    std::cout << "\n";
                    auto clip = [](const std::string& s) {
                        return s.size() <= 200 ? s : s.substr(0, 200) + "... (" +
                                                         std::to_string(s.size()) + " bytes)";
                    };
                    for (const auto& r : rep.instances)
                        if (!r.pass)
                            std::cout << "  FAIL " << r.name << "\n    lhs: " << clip(r.lhs)
                                      << "\n    rhs: " << clip(r.rhs)
                                      << "\n    repro: " << r.repro << "\n";
                }
                std::cerr << "# " << rep.suite << " wall: " << rep.wall_seconds << "s\n";
            }
            return all_ok ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
