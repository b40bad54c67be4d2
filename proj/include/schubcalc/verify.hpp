#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

#include "json_io.hpp"
#include "loci.hpp"

namespace schubcalc {

struct Instance {
    std::string name;
    // returns nullopt on pass, else the two serialized sides
    std::function<std::optional<std::pair<std::string, std::string>>()> run;
};

struct InstanceResult {
    std::string name;
    bool pass = false;
    std::string lhs, rhs;
    std::string repro;
};

struct VerificationReport {
    std::string suite;
    int bound = 0;
    std::vector<InstanceResult> instances;
    double wall_seconds = 0;
    std::string calibration; // OG sign metadata when the suite ran a calibration

    int failed() const {
        int f = 0;
        for (auto& r : instances)
            if (!r.pass) ++f;
        return f;
    }
    bool ok() const { return failed() == 0; }

    /// Canonical JSON; timing is reported separately so reports are
    /// byte-identical across runs and thread counts.
    json to_json(bool include_timing = false) const {
        json inst = json::array();
        for (auto& r : instances) {
            json e{{"name", r.name}, {"pass", r.pass}};
            if (!r.pass) {
                e["lhs"] = r.lhs;
                e["rhs"] = r.rhs;
                e["repro"] = r.repro;
            }
            inst.push_back(e);
        }
        json out{{"suite", suite},
                 {"bound", bound},
                 {"instances", static_cast<int>(instances.size())},
                 {"failed", failed()},
                 {"results", inst}};
        if (!calibration.empty()) out["calibration"] = calibration;
        if (include_timing) out["wall_seconds"] = wall_seconds;
        return out;
    }
};

namespace detail {

inline std::pair<std::string, std::string> sides(const Polynomial& a, const Polynomial& b) {
    return {to_json(a).dump(), to_json(b).dump()};
}

inline std::optional<std::pair<std::string, std::string>> expect_equal(const Polynomial& a,
                                                                       const Polynomial& b) {
    if (a == b) return std::nullopt;
    return sides(a, b);
}

} // namespace detail

/// Runs the instances (optionally across jobs threads), sorts results by
/// name, and attaches repro commands. Scheduling never affects the report.
inline VerificationReport run_suite(const std::string& suite, int bound,
                                    std::vector<Instance> instances, int jobs = 1) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.suite = suite;
    rep.bound = bound;
    rep.instances.resize(instances.size());

    auto work = [&](size_t idx) {
        InstanceResult r;
        r.name = instances[idx].name;
        try {
            auto fail = instances[idx].run();
            r.pass = !fail.has_value();
            if (fail) {
                r.lhs = fail->first;
                r.rhs = fail->second;
            }
        } catch (const std::exception& e) {
            r.pass = false;
            r.lhs = std::string("exception: ") + e.what();
        }
        if (!r.pass)
            r.repro = "schubcalc verify " + suite + " --n " + std::to_string(bound) +
                      "  # instance: " + r.name;
        rep.instances[idx] = std::move(r);
    };

    if (jobs <= 1) {
        for (size_t i = 0; i < instances.size(); ++i) work(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (size_t i = next++; i < instances.size(); i = next++) work(i);
            });
        for (auto& th : pool) th.join();
    }
    std::sort(rep.instances.begin(), rep.instances.end(),
              [](const InstanceResult& a, const InstanceResult& b) { return a.name < b.name; });
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---- suites ---------------------------------------------------------------------

/// Divided-difference recurrence for windowed Schubert polynomials:
/// S_n, all window pair positions, windows 0 and 1.
inline std::vector<Instance> suite_dd_recurrence(int n) {
    std::vector<Instance> out;
    for (const Permutation& w : all_permutations(n))
        for (int m : {0, 1})
            out.push_back({"w=" + to_oneline_string(w, n) + " m=" + std::to_string(m),
                           [w, m, n]() -> std::optional<std::pair<std::string, std::string>> {
                               for (int pos = 1; pos <= m + n - 1; ++pos) {
                                   auto r = check_schubert_recurrence(w, m, pos, false, n);
                                   if (!r.pass)
                                       return detail::sides(r.lhs, r.rhs);
                               }
                               return std::nullopt;
                           }});
    return out;
}

/// Route equivalence: compatible-sequence route == divided-difference route
/// on S_n; double Schubert at y -> 0 == single on S_{n-1}.
inline std::vector<Instance> suite_bjs_vs_dd(int n) {
    std::vector<Instance> out;
    for (const Permutation& w : all_permutations(n))
        out.push_back({"bjs-dd w=" + to_oneline_string(w, n),
                       [w] { return detail::expect_equal(schubert_bjs(w, 0), schubert_dd(w)); }});
    for (const Permutation& w : all_permutations(std::max(n - 1, 1)))
        out.push_back({"double-y0 w=" + to_oneline_string(w, std::max(n - 1, 1)), [w] {
                           Polynomial single = double_schubert(w, 0).zero_out(
                               [](const VarRef& v) { return v.alphabet == Alphabet::Y; });
                           return detail::expect_equal(single, schubert_bjs(w, 0));
                       }});
    return out;
}

/// Determinant formula == double Schubert at y -> -y, vexillary S_n,
/// windows 0..2.
inline std::vector<Instance> suite_vex_det(int n, std::vector<int> windows = {0, 1, 2}) {
    std::vector<Instance> out;
    for (const Permutation& w : all_permutations(n)) {
        if (!is_vexillary(w)) continue;
        for (int m : windows)
            out.push_back({"w=" + to_oneline_string(w, n) + " m=" + std::to_string(m), [w, m] {
                               Polynomial expect = double_schubert(w, m).negate_vars(
                                   [](const VarRef& v) { return v.alphabet == Alphabet::Y; });
                               return detail::expect_equal(grassmannian_determinant(w, m), expect);
                           }});
    }
    return out;
}

/// Involution Schubert divided-difference recurrence: I_n orthogonal and
/// I^fpf_{n+1 rounded even} symplectic, windows 0..1, all letters.
inline std::vector<Instance> suite_inv_recurrence(int n) {
    std::vector<Instance> out;
    auto add = [&](const Involution& z, int nn) {
        for (int m : {0, 1})
            out.push_back({std::string(flavor_name(z.flavor())) + " z=" +
                               to_oneline_string(z.perm(), nn) + " m=" + std::to_string(m),
                           [z, m, nn]() -> std::optional<std::pair<std::string, std::string>> {
                               for (int i = 1; i < nn; ++i) {
                                   auto r = check_inv_recurrence(z, i, m);
                                   if (!r.pass) return detail::sides(r.lhs, r.rhs);
                               }
                               return std::nullopt;
                           }});
    };
    for (const Involution& y : all_involutions(n)) add(y, n);
    int fpf_n = (n + 1) % 2 == 0 ? n + 1 : n + 2; // next even size above n
    for (const Involution& z : all_fpf_involutions(fpf_n)) add(z, fpf_n);
    return out;
}

/// Lagrangian Pfaffian formula == 2^{cyc} involution Schubert, vexillary
/// I_n, windows 0..1.
inline std::vector<Instance> suite_vex_lg(int n, std::vector<int> windows = {0, 1}) {
    std::vector<Instance> out;
    for (const Involution& y : all_involutions(n)) {
        if (!is_vexillary(y)) continue;
        for (int m : windows)
            out.push_back({"y=" + to_cycle_string(y.perm()) + " m=" + std::to_string(m), [y, m] {
                               Polynomial expect = Polynomial(pow2(cyc(y))) * inv_schubert(y, m);
                               return detail::expect_equal(lagrangian_pfaffian(y, m), expect);
                           }});
    }
    return out;
}

/// Orthogonal Pfaffian formula under the calibrated sign == symplectic
/// involution Schubert, every z in I^fpf_{2..n} with an Sp-vexillary
/// representative; plus the calibration assertions themselves.
inline std::vector<Instance> suite_fpf_og(int n, std::vector<int> windows = {0, 1}) {
    std::vector<Instance> out;
    out.push_back({"calibration unique", []() -> std::optional<std::pair<std::string, std::string>> {
                       OgCalibration cal = calibrate_og_sign(6, 0);
                       if (cal.passing.size() == 1) return std::nullopt;
                       return std::make_pair(std::string("passing rules: ") +
                                                 std::to_string(cal.passing.size()),
                                             std::string("expected exactly 1"));
                   }});
    out.push_back(
        {"literal sign rejected on (1,4)(2,3)",
         []() -> std::optional<std::pair<std::string, std::string>> {
             Involution z = Involution::symplectic(parse_permutation("(1,4)(2,3)"));
             Polynomial literal = orthogonal_pfaffian(z, 0, OgSignRule::ColumnParity).value;
             if (literal != inv_schubert(z, 0)) return std::nullopt;
             return detail::sides(literal, inv_schubert(z, 0));
         }});
    for (int size = 2; size <= n; size += 2)
        for (const Involution& z : all_fpf_involutions(size)) {
            if (!og_representative(z)) continue;
            for (int m : windows)
                out.push_back(
                    {"z=" + to_cycle_string(z.perm()) + " m=" + std::to_string(m), [z, m] {
                         auto r = orthogonal_pfaffian(z, m, calibrated_og_sign());
                         return detail::expect_equal(r.value, inv_schubert(z, m));
                     }});
        }
    return out;
}

/// Schur P/Q cross-validation: tableau route == Pfaffian route on strict
/// shapes in the staircase, P integrality, alternating relations, and
/// pf^2 = det on random integer skew matrices.
inline std::vector<Instance> suite_schur_pq_cross(int maxpart = 4) {
    std::vector<Instance> out;
    std::vector<Partition> shapes;
    for (unsigned mask = 0; mask < (1u << maxpart); ++mask) {
        Partition p;
        for (int v = maxpart; v >= 1; --v)
            if (mask >> (v - 1) & 1) p.push_back(v);
        shapes.push_back(p);
    }
    for (int letters : {3, 4})
        for (const Partition& lam : shapes)
            out.push_back({"route lambda=" + to_string(lam) + " N=" + std::to_string(letters),
                           [lam, letters] {
                               std::vector<VarRef> vars;
                               for (int i = 1; i <= letters; ++i) vars.push_back(xv(i));
                               Polynomial tab = lam.empty()
                                                    ? Polynomial(1)
                                                    : q_lambda_tableaux(StrictPartition(lam), vars);
                               return detail::expect_equal(q_lambda_classical(lam, vars), tab);
                           }});
    for (const Partition& lam : shapes)
        out.push_back({"P-integrality lambda=" + to_string(lam),
                       [lam]() -> std::optional<std::pair<std::string, std::string>> {
                           std::vector<VarRef> vars = {xv(1), xv(2), xv(3), xv(4)};
                           p_lambda_classical(lam, vars); // throws if not integral
                           return std::nullopt;
                       }});
    out.push_back({"alternating relations",
                   []() -> std::optional<std::pair<std::string, std::string>> {
                       std::vector<VarRef> vars = {xv(1), xv(2), xv(3)};
                       std::mt19937 gen(5);
                       std::uniform_int_distribution<int> part(0, 4);
                       for (int trial = 0; trial < 40; ++trial) {
                           int len = 1 + trial % 3;
                           std::vector<int> seq(len);
                           bool allzero = true;
                           for (int& v : seq) { v = part(gen); allzero &= (v == 0); }
                           if (allzero) continue;
                           Polynomial base = q_lambda_classical(seq, vars);
                           for (int i = 0; i + 1 < len; ++i) {
                               if (seq[i] == seq[i + 1]) continue;
                               std::vector<int> sw = seq;
                               std::swap(sw[i], sw[i + 1]);
                               if (q_lambda_classical(sw, vars) != -base)
                                   return detail::sides(q_lambda_classical(sw, vars), -base);
                           }
                           std::vector<int> padded = seq;
                           padded.push_back(0);
                           if (q_lambda_classical(padded, vars) != base)
                               return detail::sides(q_lambda_classical(padded, vars), base);
                       }
                       return std::nullopt;
                   }});
    for (int size : {2, 4, 6, 8})
        out.push_back({"pf^2=det size=" + std::to_string(size),
                       [size]() -> std::optional<std::pair<std::string, std::string>> {
                           std::mt19937 gen(1000 + size);
                           std::uniform_int_distribution<int> entry(-9, 9);
                           for (int trial = 0; trial < 4; ++trial) {
                               SquareMatrix<Int> a(size, std::vector<Int>(size, Int(0)));
                               for (int i = 0; i < size; ++i)
                                   for (int j = i + 1; j < size; ++j) {
                                       int v = entry(gen);
                                       a[i][j] = v;
                                       a[j][i] = -v;
                                   }
                               Int pf = pfaffian(a);
                               if (pf * pf != determinant(a))
                                   return std::make_pair(pf.str() + "^2", determinant(a).str());
                           }
                           return std::nullopt;
                       }});
    return out;
}

/// Multiparameter Q: t = 0 degeneration and independence of the
/// parameters beyond lambda_1, shapes in (3,2,1) on up to 3 letters.
inline std::vector<Instance> suite_multiq(int maxpart = 3) {
    std::vector<Instance> out;
    for (unsigned mask = 1; mask < (1u << maxpart); ++mask) {
        Partition lam;
        for (int v = maxpart; v >= 1; --v)
            if (mask >> (v - 1) & 1) lam.push_back(v);
        for (int letters = 1; letters <= 3; ++letters)
            out.push_back(
                {"lambda=" + to_string(lam) + " N=" + std::to_string(letters),
                 [lam, letters]() -> std::optional<std::pair<std::string, std::string>> {
                     StrictPartition sp(lam);
                     std::vector<VarRef> vars;
                     for (int i = 1; i <= letters; ++i) vars.push_back(xv(i));
                     std::vector<Polynomial> zero(5, Polynomial());
                     if (multiparameter_q(sp, vars, zero) != q_lambda_tableaux(sp, vars))
                         return detail::sides(multiparameter_q(sp, vars, zero),
                                              q_lambda_tableaux(sp, vars));
                     std::mt19937 gen(7 * letters + lam.size());
                     std::uniform_int_distribution<int> val(-4, 4);
                     for (int trial = 0; trial < 4; ++trial) {
                         std::vector<Polynomial> t1, t2;
                         for (int r = 1; r <= 5; ++r) t1.push_back(Polynomial(val(gen)));
                         t2 = t1;
                         for (size_t r = lam[0]; r < t2.size(); ++r) t2[r] = Polynomial(val(gen));
                         if (multiparameter_q(sp, vars, t1) != multiparameter_q(sp, vars, t2))
                             return detail::sides(multiparameter_q(sp, vars, t1),
                                                  multiparameter_q(sp, vars, t2));
                     }
                     return std::nullopt;
                 }});
    }
    return out;
}

/// Essential-path tableau formula: every path of every vexillary y in I_n
/// gives 2^{cyc} S^O_y at windows 0..1 (in particular path independence),
/// plus the one-cell monomial formula on I_{n+1}.
inline std::vector<Instance> suite_tableau_lg(int n) {
    std::vector<Instance> out;
    for (const Involution& y : all_involutions(n)) {
        if (!is_vexillary(y)) continue;
        for (int m : {0, 1})
            out.push_back({"paths y=" + to_cycle_string(y.perm()) + " m=" + std::to_string(m),
                           [y, m, n]() -> std::optional<std::pair<std::string, std::string>> {
                               Polynomial expect = Polynomial(pow2(cyc(y))) * inv_schubert(y, m);
                               for (const auto& p : essential_paths(y, n)) {
                                   Polynomial got = path_tableau_formula(y, p, m);
                                   if (got != expect) return detail::sides(got, expect);
                               }
                               return std::nullopt;
                           }});
    }
    for (const Involution& y : all_involutions(n + 1)) {
        auto form = one_cell_form(y);
        if (!form || form->k == 0) continue;
        for (int m : {0, 1})
            out.push_back({"one-cell y=" + to_cycle_string(y.perm()) + " m=" + std::to_string(m),
                           [y, m] {
                               Polynomial expect = Polynomial(pow2(cyc(y))) * inv_schubert(y, m);
                               return detail::expect_equal(one_cell_tableau_formula(y, m), expect);
                           }});
    }
    return out;
}

/// dearc invariants on I^fpf_n: both dearcs preserve sh^Sp, dearc^L
/// preserves D^Sp, and all Sp-vexillary representatives give the same
/// Pfaffian formula output.
inline std::vector<Instance> suite_dearc(int n) {
    std::vector<Instance> out;
    for (int size = 2; size <= n; size += 2)
        for (const Involution& z : all_fpf_involutions(size))
            out.push_back(
                {"z=" + to_cycle_string(z.perm()),
                 [z]() -> std::optional<std::pair<std::string, std::string>> {
                     Involution dr = dearc(z, DearcSide::R), dl = dearc(z, DearcSide::L);
                     Partition sh = involution_shape(z.perm(), Flavor::Sp);
                     if (involution_shape(dr.perm(), Flavor::Sp) != sh)
                         return std::make_pair(to_string(involution_shape(dr.perm(), Flavor::Sp)),
                                               to_string(sh));
                     if (involution_shape(dl.perm(), Flavor::Sp) != sh)
                         return std::make_pair(to_string(involution_shape(dl.perm(), Flavor::Sp)),
                                               to_string(sh));
                     if (involution_diagram(dl.perm(), Flavor::Sp) !=
                         involution_diagram(z.perm(), Flavor::Sp))
                         return std::make_pair(std::string("D^Sp(dearcL) differs"),
                                               std::string("D^Sp(z)"));
                     // every Sp-vexillary representative yields the same formula value
                     std::optional<Polynomial> first;
                     for (const std::string kind : {"self", "dearcR", "dearcL"}) {
                         auto rep = og_representative(z, {kind, kind, kind});
                         if (!rep) continue;
                         Polynomial v =
                             orthogonal_pfaffian(z, 0, calibrated_og_sign(), {kind, kind, kind})
                                 .value;
                         if (first && v != *first) return detail::sides(v, *first);
                         first = v;
                     }
                     return std::nullopt;
                 }});
    return out;
}

/// The combinatorial shape/code lemmas, exhaustively for sizes <= n.
inline std::vector<Instance> suite_shapes(int n) {
    std::vector<Instance> out;
    out.push_back({"diagram sizes vs lengths",
                   [n]() -> std::optional<std::pair<std::string, std::string>> {
                       for (int size = 1; size <= n; ++size)
                           for (const Permutation& w : all_permutations(size))
                               if (static_cast<int>(rothe_diagram(w).size()) != length(w))
                                   return std::make_pair(to_oneline_string(w), "size mismatch");
                       for (int size = 1; size <= n; ++size)
                           for (const Involution& y : all_involutions(size)) {
                               int lo = static_cast<int>(involution_diagram(y.perm(), Flavor::O).size());
                               for (const Word& a : reduced_involution_words(y))
                                   if (static_cast<int>(a.size()) != lo)
                                       return std::make_pair(to_cycle_string(y.perm()),
                                                             "O word length mismatch");
                           }
                       for (int size = 2; size <= n; size += 2)
                           for (const Involution& z : all_fpf_involutions(size)) {
                               int ls = static_cast<int>(involution_diagram(z.perm(), Flavor::Sp).size());
                               for (const Word& a : reduced_involution_words(z))
                                   if (static_cast<int>(a.size()) != ls)
                                       return std::make_pair(to_cycle_string(z.perm()),
                                                             "Sp word length mismatch");
                           }
                       return std::nullopt;
                   }});
    out.push_back({"vexillary chain criteria",
                   [n]() -> std::optional<std::pair<std::string, std::string>> {
                       for (const Permutation& w : all_permutations(n)) {
                           bool a = is_vexillary(w);
                           if (a != is_vexillary_chain(w) || a != rothe_rows_nested(w))
                               return std::make_pair(to_oneline_string(w), "criteria disagree");
                       }
                       return std::nullopt;
                   }});
    out.push_back({"code-ks and vex-shape and k-step",
                   [n]() -> std::optional<std::pair<std::string, std::string>> {
                       for (const Permutation& w : all_permutations(n)) {
                           if (!is_vexillary(w)) continue;
                           VexillaryData d = extract_data(w); // asserts lambda == shape
                           std::set<int> ks(d.k.begin(), d.k.end());
                           std::set<int> nz;
                           for (int c : code(w))
                               if (c) nz.insert(c);
                           if (ks != nz)
                               return std::make_pair("w=" + to_oneline_string(w),
                                                     "k set != nonzero code values");
                           CellSet diag = rothe_diagram(w);
                           for (int p = 1; p < d.blocks(); ++p) {
                               const Cell& c = d.positions[p];
                               if (!diag.contains({c.row, c.col - 1}) && d.k[p] != d.k[p - 1] + 1)
                                   return std::make_pair("w=" + to_oneline_string(w), "k-step");
                           }
                       }
                       return std::nullopt;
                   }});
    out.push_back({"vex-inv-code",
                   [n]() -> std::optional<std::pair<std::string, std::string>> {
                       for (const Involution& y : all_involutions(n)) {
                           if (!is_vexillary(y)) continue;
                           CellSet ess = essential_set(involution_diagram(y.perm(), Flavor::O));
                           int jprime = 0;
                           for (const Cell& c : ess.cells()) jprime = std::max(jprime, c.col);
                           auto co = involution_code(y.perm(), Flavor::O);
                           auto csp = involution_code(y.perm(), Flavor::Sp);
                           auto cw = code(y.perm());
                           co.resize(n, 0), csp.resize(n, 0), cw.resize(n, 0);
                           for (int i = 1; i <= n; ++i) {
                               int moved = 0, moved_below = 0;
                               for (int j = 1; j <= i; ++j)
                                   if (y(j) != j) {
                                       ++moved;
                                       if (j < i) ++moved_below;
                                   }
                               int expect_o = i <= jprime ? moved : cw[i - 1];
                               int expect_sp = i <= jprime ? moved_below : cw[i - 1];
                               if (co[i - 1] != expect_o || csp[i - 1] != expect_sp)
                                   return std::make_pair("y=" + to_cycle_string(y.perm()),
                                                         "involution code formula");
                           }
                       }
                       return std::nullopt;
                   }});
    out.push_back({"inv-code-parts and inv-shape",
                   [n]() -> std::optional<std::pair<std::string, std::string>> {
                       for (const Involution& y : all_involutions(n)) {
                           if (!is_vexillary(y)) continue;
                           VexillaryData d = extract_data(y, LocusFlavor::LG); // checks inv-shape
                           int ks = d.k.empty() ? 0 : d.k.back();
                           std::map<int, int> mult;
                           for (int c : involution_code(y.perm(), Flavor::O))
                               if (c) mult[c]++;
                           for (int v = 1; v <= ks; ++v)
                               if (!mult.count(v))
                                   return std::make_pair("y=" + to_cycle_string(y.perm()),
                                                         "code value missing: " + std::to_string(v));
                           for (auto& [v, cnt] : mult) {
                               if (v > ks)
                                   return std::make_pair("y=" + to_cycle_string(y.perm()),
                                                         "code value beyond k_s");
                               bool is_kp = std::find(d.k.begin(), d.k.end(), v) != d.k.end();
                               if (!is_kp && cnt != 1)
                                   return std::make_pair("y=" + to_cycle_string(y.perm()),
                                                         "multiplicity off {k_p}");
                           }
                       }
                       return std::nullopt;
                   }});
    out.push_back({"fpf-inv-shape with Sp paddings",
                   [n]() -> std::optional<std::pair<std::string, std::string>> {
                       for (const Involution& y : all_involutions(n)) {
                           if (!is_sp_vexillary(y)) continue;
                           for (int mode = 0; mode < 3; ++mode) {
                               Permutation padded =
                                   mode == 0 ? y.perm()
                                   : mode == 1
                                       ? block_product(y.perm(), std::max(y.size(), n), fpf_minimal(2))
                                       : block_product(fpf_minimal(2), 2, y.perm());
                               CellSet ess = essential_set(involution_diagram(padded, Flavor::Sp));
                               std::vector<Cell> sorted = ess.chain_sorted();
                               std::vector<int> k;
                               for (const Cell& c : sorted)
                                   k.push_back(c.col - rank_submatrix(padded, c.row, c.col));
                               Partition sh = involution_shape(padded, Flavor::Sp);
                               int ks = k.empty() ? 0 : k.back();
                               if (static_cast<int>(sh.size()) != ks)
                                   return std::make_pair("y=" + to_cycle_string(padded),
                                                         "sh^Sp length != k_s");
                               for (int kk = 1; kk <= ks; ++kk) {
                                   int p = 0;
                                   while (k[p] < kk) ++p;
                                   if (sh[kk - 1] !=
                                       sorted[p].row - sorted[p].col + k[p] - kk)
                                       return std::make_pair("y=" + to_cycle_string(padded),
                                                             "fpf shape entry");
                               }
                           }
                       }
                       return std::nullopt;
                   }});
    return out;
}

/// I-Grassmannian corollaries: 2^{cyc} F^O == Q_{sh^O} on 4..5 letters for
/// every I-Grassmannian involution inside I_8 with shape in (4,3,2,1);
/// F^Sp == P_{sh^Sp} for fpf-I-Grassmannian z in I^fpf_n, shape in (3,2,1).
inline std::vector<Instance> suite_grassmannian_cors(int n = 8) {
    std::vector<Instance> out;
    Partition staircase4 = {4, 3, 2, 1}, staircase3 = {3, 2, 1};
    for (int mhat = 1; mhat < n; ++mhat)
        for (unsigned mask = 1; mask < (1u << mhat); ++mask) {
            std::vector<int> phi;
            for (int v = 1; v <= mhat; ++v)
                if (mask >> (v - 1) & 1) phi.push_back(v);
            int k = static_cast<int>(phi.size());
            if (mhat + k > n) continue;
            std::vector<int> line(mhat + k);
            std::iota(line.begin(), line.end(), 1);
            for (int i = 0; i < k; ++i) {
                line[phi[i] - 1] = mhat + i + 1;
                line[mhat + i] = phi[i];
            }
            Involution y = Involution::orthogonal(Permutation(line));
            Partition sh = involution_shape(y.perm(), Flavor::O);
            if (!contained_in(sh, staircase4)) continue;
            out.push_back(
                {"IG y=" + to_cycle_string(y.perm()),
                 [y, sh, mhat]() -> std::optional<std::pair<std::string, std::string>> {
                     auto row = i_grassmannian_row(y);
                     if (!row || *row != mhat)
                         return std::make_pair(std::string("classify m"), std::to_string(mhat));
                     for (int m : {4, 5}) {
                         Polynomial f = Polynomial(pow2(cyc(y))) * inv_stanley(y, m);
                         f = f.rename([](const VarRef& v) { return xv(-v.index); });
                         std::vector<VarRef> vars;
                         for (int i = 1; i <= m; ++i) vars.push_back(xv(i));
                         Polynomial q = sh.empty() ? Polynomial(1)
                                                   : q_lambda_tableaux(StrictPartition(sh), vars);
                         if (f != q) return detail::sides(f, q);
                     }
                     return std::nullopt;
                 }});
        }
    for (const Involution& z : all_fpf_involutions(n)) {
        if (!is_fpf_i_grassmannian(z)) continue;
        Partition sh = involution_shape(z.perm(), Flavor::Sp);
        if (!contained_in(sh, staircase3)) continue;
        out.push_back({"fpfIG z=" + to_cycle_string(z.perm()),
                       [z, sh]() -> std::optional<std::pair<std::string, std::string>> {
                           for (int m : {4, 5}) {
                               Polynomial f = inv_stanley(z, m);
                               f = f.rename([](const VarRef& v) { return xv(-v.index); });
                               std::vector<VarRef> vars;
                               for (int i = 1; i <= m; ++i) vars.push_back(xv(i));
                               Polynomial p = sh.empty()
                                                  ? Polynomial(1)
                                                  : p_lambda_tableaux(StrictPartition(sh), vars);
                               if (f != p) return detail::sides(f, p);
                           }
                           return std::nullopt;
                       }});
    }
    return out;
}

/// Schur-Q positivity shadow: the Q-expansion of 2^{cyc} F^O_y on 5
/// window letters has nonnegative integer coefficients, for all y in I_n.
inline std::vector<Instance> suite_positivity(int n = 5) {
    std::vector<Instance> out;
    for (const Involution& y : all_involutions(n))
        out.push_back({"y=" + to_cycle_string(y.perm()),
                       [y]() -> std::optional<std::pair<std::string, std::string>> {
                           Polynomial f = Polynomial(pow2(cyc(y))) * inv_stanley(y, 5);
                           f = f.rename([](const VarRef& v) { return xv(-v.index); });
                           auto coeffs = expand_in_schur_q(f, 5); // throws if not expressible
                           for (auto& [lam, c] : coeffs)
                               if (c < 0)
                                   return std::make_pair("coefficient of " + to_string(lam),
                                                         c.str());
                           return std::nullopt;
                       }});
    return out;
}

// ---- registry -------------------------------------------------------------------

struct SuiteSpec {
    std::string name;
    int default_bound;
    std::function<std::vector<Instance>(int)> build;
};

inline const std::vector<SuiteSpec>& suite_registry() {
    static const std::vector<SuiteSpec> reg = {
        {"dd-recurrence", 5, [](int n) { return suite_dd_recurrence(n); }},
        {"bjs-vs-dd", 5, [](int n) { return suite_bjs_vs_dd(n); }},
        {"vex-det", 5, [](int n) { return suite_vex_det(n); }},
        {"inv-recurrence", 5, [](int n) { return suite_inv_recurrence(n); }},
        {"vex-lg", 5, [](int n) { return suite_vex_lg(n); }},
        {"fpf-og", 6, [](int n) { return suite_fpf_og(n); }},
        {"schur-pq-cross", 4, [](int n) { return suite_schur_pq_cross(n); }},
        {"multiq", 3, [](int n) { return suite_multiq(n); }},
        {"tableau-lg", 4, [](int n) { return suite_tableau_lg(n); }},
        {"dearc", 8, [](int n) { return suite_dearc(n); }},
        {"shapes", 6, [](int n) { return suite_shapes(n); }},
        {"grassmannian-cors", 8, [](int n) { return suite_grassmannian_cors(n); }},
        {"positivity", 5, [](int n) { return suite_positivity(n); }},
    };
    return reg;
}

/// Runs one named suite (or "all"); bound < 0 picks the per-suite default.
/// bound == 0 is a trivially empty pass.
inline std::vector<VerificationReport> run_verification(const std::string& which, int bound,
                                                        int jobs = 1) {
    std::vector<VerificationReport> reports;
    for (const SuiteSpec& s : suite_registry()) {
        if (which != "all" && which != s.name) continue;
        int b = bound < 0 ? s.default_bound : bound;
        std::vector<Instance> instances = b == 0 ? std::vector<Instance>{} : s.build(b);
        VerificationReport rep = run_suite(s.name, b, std::move(instances), jobs);
        if (s.name == "fpf-og" && b != 0)
            rep.calibration = og_sign_name(calibrated_og_sign());
        reports.push_back(std::move(rep));
    }
    if (reports.empty()) throw std::invalid_argument("unknown suite: " + which);
    return reports;
}

} // namespace schubcalc
