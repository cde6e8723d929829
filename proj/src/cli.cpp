#include "fdr/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "fdr/exterior_coinvariants.hpp"
#include "fdr/identities.hpp"
#include "fdr/kronecker.hpp"
#include "fdr/macdonald.hpp"
#include "fdr/symf_json.hpp"

namespace fdr {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kQtDegreeCap = 6;  // hard cap for any full q,t computation

Partition partition_arg(const std::string& text, const char* name) {
    try {
        return Partition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(name) + ": " + e.what());
    }
}

/// Enforces value <= def (or <= hard with --unsafe); --unsafe past the default
/// prints a cost warning.  Hard caps hold unconditionally.
void check_bound(int value, int def, int hard, bool unsafe, const char* what,
                 std::ostream& out) {
    int cap = unsafe ? hard : def;
    if (value < 0 || value > cap) {
        std::ostringstream os;
        os << what << " = " << value << " exceeds the " << (unsafe ? "hard" : "default")
           << " cap " << cap << (unsafe || hard == def ? "" : " (raise with --unsafe)");
        throw UsageError(os.str());
    }
    if (unsafe && value > def)
        out << "note: " << what << " = " << value
            << " is past the default cap; exact arithmetic here costs minutes, not seconds\n";
}

nlohmann::json report_json(const VerificationReport& r, bool informational) {
    nlohmann::json j{{"identity", r.identity}, {"params", r.params},
                     {"lhs", r.lhs},           {"rhs", r.rhs},
                     {"equal", r.equal},       {"first_difference", r.first_difference}};
    if (informational) j["informational"] = true;
    return j;
}

int emit_reports(const std::vector<VerificationReport>& asserted,
                 const std::vector<VerificationReport>& informational, bool json,
                 std::ostream& out) {
    int failures = 0;
    for (const auto& r : asserted)
        if (!r.equal) ++failures;
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : asserted) arr.push_back(report_json(r, false));
        for (const auto& r : informational) arr.push_back(report_json(r, true));
        out << arr.dump(2) << "\n";
    } else {
        for (const auto& r : asserted) {
            out << (r.equal ? "[ok]   " : "[FAIL] ") << r.identity << r.params;
            if (!r.equal) out << ": " << r.first_difference;
            out << "\n";
        }
        for (const auto& r : informational)
            out << "[info] " << r.identity << r.params
                << (r.equal ? " (sides agree)" : " (sides differ: " + r.first_difference + ")")
                << "\n";
        out << asserted.size() << " checked, " << failures << " failed";
        if (!informational.empty()) out << ", " << informational.size() << " informational";
        out << "\n";
    }
    return failures == 0 ? 0 : 1;
}

template <class C>
void emit_symf(const SymF<C>& f, bool json, std::ostream& out) {
    if (json) out << symf_to_json(f).dump(2) << "\n";
    else out << f.to_string() << "\n";
}

BigradedTable table_from_pointwise(int n, const std::function<SymF<mpq_class>(int, int)>& f) {
    BigradedTable t;
    t.n = n;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            SymF<mpq_class> v = f(i, j);
            if (!v.is_zero()) t.entries.emplace(std::pair{i, j}, std::move(v));
        }
    return t;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
    return j;
}

/// Reads a SymF JSON file; basis "H" is accepted and expanded through the
/// Macdonald basis.
SymF<RatFuncQT> load_symf_qt(const std::string& path) {
    nlohmann::json j = load_json_file(path);
    try {
        if (j.is_object() && j.contains("basis") && j.at("basis") == "H")
            return from_macdonald(macdonald_expansion_from_json(j));
        return symf_qt_from_json(j);
    } catch (const std::invalid_argument& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::set<Method> parse_methods(const std::string& csv) {
    std::set<Method> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "oracle") out.insert(Method::oracle);
        else if (item == "formula") out.insert(Method::formula);
        else if (item == "recursion" || item == "theta") out.insert(Method::recursion);
        else if (item == "direct-qt" || item == "direct_qt") out.insert(Method::direct_qt);
        else throw UsageError("unknown method '" + item + "'");
    }
    if (out.size() < 2) throw UsageError("--methods needs at least two of oracle,formula,recursion,direct-qt");
    return out;
}

// ---- verify sweeps ----

std::vector<VerificationReport> sweep_kron_skew(int n, const std::string& flavor) {
    std::vector<VerificationReport> reps;
    std::vector<Partition> parts = partitions_of(n);
    for (const Partition& l1 : parts)
        for (const Partition& l2 : parts)
            for (int j = 1; j <= n; ++j) {
                if (flavor != "e") reps.push_back(kron_skew_check(l1, l2, j, SkewFlavor::h));
                if (flavor != "h") reps.push_back(kron_skew_check(l1, l2, j, SkewFlavor::e));
            }
    return reps;
}

std::vector<VerificationReport> sweep_hook_skew(int n) {
    std::vector<VerificationReport> reps;
    for (int k = 0; k <= n; ++k)
        for (int l = 0; l + k <= n; ++l) {
            int m = n - k - l;
            for (int j = 1; j <= n; ++j) {
                reps.push_back(hook_skew_check(k, l, m, j));
                reps.push_back(reformulation_check(k, l, m, j));
            }
        }
    return reps;
}

/// k >= 1 tuples are asserted, as is the trivially-zero regime j > m+l at
/// k = 0; the remaining k = 0 tuples apply Theta chains to the constant 1,
/// an edge the source recursion does not cover, and are only reported.
void sweep_theta_recursion(int deg, std::vector<VerificationReport>& asserted,
                           std::vector<VerificationReport>& informational) {
    for (int s = 0; s <= deg; ++s)
        for (int k = 0; k <= s; ++k)
            for (int m = 0; m + k <= s; ++m) {
                int l = s - k - m;
                for (int j = 1; j <= s + 2; ++j) {
                    VerificationReport r = theta_recursion_check(j, m, l, k);
                    (k == 0 && j <= m + l ? informational : asserted).push_back(std::move(r));
                }
            }
}

std::vector<VerificationReport> sweep_nabla_hk(int deg) {
    std::vector<VerificationReport> reps;
    for (int s = 0; s <= deg; ++s)
        for (int m = 0; m <= s; ++m)
            for (int l = 0; l + m <= s; ++l) reps.push_back(nabla_hk_check(m, l, s - m - l));
    return reps;
}

int run_verify(const std::string& identity, bool json, bool unsafe, int n, int deg,
               int j, int m, int l, int k, const std::string& a, const std::string& b,
               const std::string& flavor, const std::string& methods, std::ostream& out) {
    std::vector<VerificationReport> asserted, informational;
    if (identity == "kron-skew") {
        if (!a.empty() || !b.empty()) {
            if (a.empty() || b.empty() || j < 1) throw UsageError("kron-skew needs --a, --b and --j");
            Partition l1 = partition_arg(a, "--a"), l2 = partition_arg(b, "--b");
            if (flavor != "e") asserted.push_back(kron_skew_check(l1, l2, j, SkewFlavor::h));
            if (flavor != "h") asserted.push_back(kron_skew_check(l1, l2, j, SkewFlavor::e));
        } else {
            if (n < 1) throw UsageError("kron-skew needs --n (or --a/--b/--j)");
            check_bound(n, 6, 7, unsafe, "--n", out);
            asserted = sweep_kron_skew(n, flavor);
        }
    } else if (identity == "hook-skew") {
        if (j >= 1 && (k >= 0 && l >= 0 && m >= 0) && n < 1) {
            asserted.push_back(hook_skew_check(k, l, m, j));
            asserted.push_back(reformulation_check(k, l, m, j));
        } else {
            if (n < 1) throw UsageError("hook-skew needs --n (or --k/--l/--m/--j)");
            check_bound(n, 8, 9, unsafe, "--n", out);
            asserted = sweep_hook_skew(n);
        }
    } else if (identity == "theta-recursion") {
        if (j >= 1 && k >= 0 && l >= 0 && m >= 0) {
            check_bound(m + l + k, 4, 5, unsafe, "m+l+k", out);
            asserted.push_back(theta_recursion_check(j, m, l, k));
        } else {
            check_bound(deg, 4, 5, unsafe, "--deg", out);
            sweep_theta_recursion(deg, asserted, informational);
        }
    } else if (identity == "nabla-hk") {
        if (k >= 0 && l >= 0 && m >= 0 && deg < 0) {
            check_bound(m + l + k, 4, 5, unsafe, "m+l+k", out);
            asserted.push_back(nabla_hk_check(m, l, k));
        } else {
            check_bound(deg, 4, 5, unsafe, "--deg", out);
            asserted = sweep_nabla_hk(deg);
        }
    } else if (identity == "main-theorem") {
        if (n < 1) throw UsageError("main-theorem needs --n");
        std::set<Method> ms = parse_methods(methods);
        if (ms.count(Method::oracle)) {
            check_bound(n, 6, 8, unsafe, "--n (oracle)", out);
            set_fdr_oracle_bound(std::max(n, fdr_oracle_bound()));
        }
        if (ms.count(Method::direct_qt)) check_bound(n, 5, kQtDegreeCap, unsafe, "--n (direct-qt)", out);
        check_bound(n, 9, 12, unsafe, "--n", out);
        asserted = main_theorem_check(n, ms);
    } else {
        throw UsageError("unknown identity '" + identity +
                         "' (expected kron-skew, hook-skew, theta-recursion, nabla-hk, main-theorem)");
    }
    return emit_reports(asserted, informational, json, out);
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact calculator and identity verifier for fermionic diagonal coinvariants",
                 "fdrcalc"};
    app.require_subcommand(1);

    // fdr
    auto* cmd_fdr = app.add_subcommand("fdr", "bigraded Frobenius table of FDR_n");
    int fdr_n = 0;
    std::string fdr_method = "formula";
    bool fdr_json = false, fdr_unsafe = false;
    cmd_fdr->add_option("--n", fdr_n, "number of variable pairs")->required();
    cmd_fdr->add_option("--method", fdr_method, "oracle | formula | theta")
        ->check(CLI::IsMember({"oracle", "formula", "theta"}));
    cmd_fdr->add_flag("--json", fdr_json, "emit JSON");
    cmd_fdr->add_flag("--unsafe", fdr_unsafe, "allow larger n (prints expected cost)");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "machine-check an identity");
    std::string v_identity, v_a, v_b, v_flavor = "both", v_methods = "formula,recursion";
    int v_n = -1, v_deg = -1, v_j = -1, v_m = -1, v_l = -1, v_k = -1;
    bool v_json = false, v_unsafe = false;
    cmd_verify->add_option("identity", v_identity,
                           "kron-skew | hook-skew | theta-recursion | nabla-hk | main-theorem")
        ->required();
    cmd_verify->add_option("--n", v_n, "sweep size");
    cmd_verify->add_option("--deg", v_deg, "total degree bound for the sweep");
    cmd_verify->add_option("--j", v_j, "single-instance parameter j");
    cmd_verify->add_option("--m", v_m, "single-instance parameter m");
    cmd_verify->add_option("--l", v_l, "single-instance parameter l");
    cmd_verify->add_option("--k", v_k, "single-instance parameter k");
    cmd_verify->add_option("--a", v_a, "first partition");
    cmd_verify->add_option("--b", v_b, "second partition");
    cmd_verify->add_option("--flavor", v_flavor, "h | e | both")
        ->check(CLI::IsMember({"h", "e", "both"}));
    cmd_verify->add_option("--methods", v_methods,
                           "comma list of oracle,formula,recursion,direct-qt");
    cmd_verify->add_flag("--json", v_json, "emit JSON reports");
    cmd_verify->add_flag("--unsafe", v_unsafe, "allow larger sweeps (prints expected cost)");

    // kronecker
    auto* cmd_kron = app.add_subcommand("kronecker", "Kronecker product s_a * s_b");
    std::string kr_a, kr_b;
    bool kr_json = false;
    cmd_kron->add_option("--a", kr_a, "first partition")->required();
    cmd_kron->add_option("--b", kr_b, "second partition")->required();
    cmd_kron->add_flag("--json", kr_json, "emit JSON");

    // lr
    auto* cmd_lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^c_{a,b}");
    std::string lr_a, lr_b, lr_c;
    cmd_lr->add_option("--a", lr_a, "inner partition")->required();
    cmd_lr->add_option("--b", lr_b, "content partition")->required();
    cmd_lr->add_option("--c", lr_c, "outer partition")->required();

    // char-table
    auto* cmd_char = app.add_subcommand("char-table", "symmetric group character table");
    int ct_n = 0;
    bool ct_json = false;
    cmd_char->add_option("--n", ct_n, "symmetric group degree")->required();
    cmd_char->add_flag("--json", ct_json, "emit JSON");

    // macdonald
    auto* cmd_mac = app.add_subcommand("macdonald", "modified Macdonald polynomial");
    std::string mac_mu, mac_basis = "s";
    bool mac_json = false;
    cmd_mac->add_option("--mu", mac_mu, "partition")->required();
    cmd_mac->add_option("--basis", mac_basis, "m | e | h | p | s")
        ->check(CLI::IsMember({"m", "e", "h", "p", "s"}));
    cmd_mac->add_flag("--json", mac_json, "emit JSON");

    // nabla
    auto* cmd_nabla = app.add_subcommand("nabla", "apply the nabla operator");
    std::string nb_file;
    bool nb_json = false;
    cmd_nabla->add_option("--f", nb_file, "SymF JSON file")->required();
    cmd_nabla->add_flag("--json", nb_json, "emit JSON");

    // theta
    auto* cmd_theta = app.add_subcommand("theta", "apply the Theta_{e_d} operator");
    std::string th_file;
    int th_d = 0;
    bool th_json = false;
    cmd_theta->add_option("--d", th_d, "elementary index d")->required();
    cmd_theta->add_option("--f", th_file, "SymF JSON file")->required();
    cmd_theta->add_flag("--json", th_json, "emit JSON");

    // enk
    auto* cmd_enk = app.add_subcommand("enk", "Garsia-Haglund E_{n,k}");
    int enk_n = 0, enk_k = 0;
    bool enk_json = false;
    cmd_enk->add_option("--n", enk_n, "degree")->required();
    cmd_enk->add_option("--k", enk_k, "refinement index")->required();
    cmd_enk->add_flag("--json", enk_json, "emit JSON");

    // schur-expand
    auto* cmd_schur = app.add_subcommand("schur-expand", "expand a SymF file in the Schur basis");
    std::string se_file;
    bool se_json = false;
    cmd_schur->add_option("--f", se_file, "SymF JSON file")->required();
    cmd_schur->add_flag("--json", se_json, "emit JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_fdr) {
            BigradedTable table;
            if (fdr_method == "oracle") {
                check_bound(fdr_n, 6, 8, fdr_unsafe, "--n", out);
                if (fdr_n > fdr_oracle_bound()) set_fdr_oracle_bound(fdr_n);
                table = fdr_frobenius(fdr_n);
            } else if (fdr_method == "formula") {
                check_bound(fdr_n, 9, 12, fdr_unsafe, "--n", out);
                table = table_from_pointwise(
                    fdr_n, [&](int i, int j) { return fdr_formula(fdr_n, i, j); });
            } else {
                check_bound(fdr_n, 9, 12, fdr_unsafe, "--n", out);
                table = table_from_pointwise(
                    fdr_n, [&](int i, int j) { return theta_q0t0(fdr_n, i, j).value; });
            }
            if (fdr_json) out << bigraded_table_to_json(table).dump(2) << "\n";
            else out << bigraded_table_to_text(table);
            return 0;
        }
        if (*cmd_verify)
            return run_verify(v_identity, v_json, v_unsafe, v_n, v_deg, v_j, v_m, v_l, v_k,
                              v_a, v_b, v_flavor, v_methods, out);
        if (*cmd_kron) {
            Partition a = partition_arg(kr_a, "--a"), b = partition_arg(kr_b, "--b");
            if (a.size() != b.size()) throw UsageError("kronecker: partitions must have equal size");
            check_bound(a.size(), 8, 10, false, "partition size", out);
            emit_symf(kronecker(SymF<mpq_class>::s(a), SymF<mpq_class>::s(b)), kr_json, out);
            return 0;
        }
        if (*cmd_lr) {
            Partition a = partition_arg(lr_a, "--a"), b = partition_arg(lr_b, "--b"),
                      c = partition_arg(lr_c, "--c");
            check_bound(c.size(), 12, 12, false, "outer partition size", out);
            out << lr_coefficient(a, b, c).get_str() << "\n";
            return 0;
        }
        if (*cmd_char) {
            check_bound(ct_n, 10, 12, false, "--n", out);
            const CharTable& t = CharTable::of(ct_n);
            if (ct_json) out << char_table_to_json(t).dump(2) << "\n";
            else out << char_table_to_text(t);
            return 0;
        }
        if (*cmd_mac) {
            Partition mu = partition_arg(mac_mu, "--mu");
            check_bound(mu.size(), kQtDegreeCap, kQtDegreeCap, false, "|mu|", out);
            emit_symf(macdonald(mu, Basis(mac_basis[0])), mac_json, out);
            return 0;
        }
        if (*cmd_nabla) {
            SymF<RatFuncQT> f = load_symf_qt(nb_file);
            check_bound(f.degree(), kQtDegreeCap, kQtDegreeCap, false, "degree", out);
            emit_symf(nabla(f).to(Basis::s), nb_json, out);
            return 0;
        }
        if (*cmd_theta) {
            if (th_d < 0) throw UsageError("theta: --d must be nonnegative");
            SymF<RatFuncQT> f = load_symf_qt(th_file);
            check_bound(f.degree() + th_d, kQtDegreeCap, kQtDegreeCap, false, "degree", out);
            emit_symf(theta_e(th_d, f).to(Basis::s), th_json, out);
            return 0;
        }
        if (*cmd_enk) {
            check_bound(enk_n, kQtDegreeCap, kQtDegreeCap, false, "--n", out);
            emit_symf(enk(enk_n, enk_k), enk_json, out);
            return 0;
        }
        if (*cmd_schur) {
            nlohmann::json j = load_json_file(se_file);
            SymF<RatFuncQT> f = load_symf_qt(se_file);
            bool from_h = j.is_object() && j.contains("basis") && j.at("basis") == "H";
            check_bound(f.degree(), from_h ? kQtDegreeCap : 10, from_h ? kQtDegreeCap : 10,
                        false, "degree", out);
            emit_symf(f.to(Basis::s), se_json, out);
            return 0;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PoleError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace fdr
