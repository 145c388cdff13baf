// Command-line surface for the stabilizer-code isometry toolkit.
//
// Exit codes: 0 success, 1 assertion/check failure, 2 malformed input,
// 3 enumeration cap exceeded.

#include <chrono>
#include <functional>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <sympiso/examples.hpp>
#include <sympiso/sympiso.hpp>

using namespace sympiso;
using nlohmann::json;

namespace {

struct Options {
    uint64_t max_enum = kDefaultEnumCap;
    unsigned jobs = 1;
    std::string format = "text";
};

json matrix_report(const RMat& b) {
    json rows = json::array();
    for (size_t r = 0; r < b.rows(); ++r) {
        json row = json::array();
        for (size_t c = 0; c < b.cols(); ++c) row.push_back(b.at(r, c).lift());
        rows.push_back(row);
    }
    return rows;
}

json group_report(const IsometrySubgroup& g, uint64_t element_cap = 512) {
    json rep;
    rep["order"] = g.order();
    json gens = json::array();
    for (const auto& b : g.generators()) gens.push_back(matrix_report(b));
    rep["generators"] = gens;
    if (g.order() <= element_cap) {
        json els = json::array();
        for (const auto& b : g.elements) els.push_back(matrix_report(b));
        rep["elements"] = els;
    }
    return rep;
}

// FNV-1a over the raw argument strings and input file bytes; identifies a
// run's inputs in the report envelope.
uint64_t fnv1a(const std::string& data, uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct RunContext {
    std::string command;
    uint64_t digest = 1469598103934665603ull;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void absorb_arg(const std::string& s) { digest = fnv1a(s, digest); }
    void absorb_file(const std::string& path) {
        std::ifstream f(path, std::ios::binary);
        if (!f) return; // unreadable files surface as errors later
        std::ostringstream buf;
        buf << f.rdbuf();
        digest = fnv1a(buf.str(), digest);
    }
};

RunContext g_run;

char hex_digit(uint64_t v) { return "0123456789abcdef"[v & 15]; }

std::string digest_string(uint64_t d) {
    std::string s(16, '0');
    for (size_t i = 16; i-- > 0; d >>= 4) s[i] = hex_digit(d);
    return s;
}

// Wraps results in the run-report envelope for json output; text mode stays
// plain. Results are deterministic for fixed inputs; timing is informational.
void emit(const Options& opt, const json& rep, const std::string& text, bool pass = true) {
    if (opt.format == "json") {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - g_run.start)
                           .count();
        json envelope{{"command", g_run.command},
                      {"inputs_digest", digest_string(g_run.digest)},
                      {"timing_ms", elapsed},
                      {"pass", pass},
                      {"results", rep}};
        std::cout << envelope.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

// ---- paper examples -------------------------------------------------------

struct CheckList {
    std::string name;
    std::vector<std::pair<std::string, bool>> checks;
    bool all_ok() const {
        for (const auto& [n, ok] : checks)
            if (!ok) return false;
        return true;
    }
};

CheckList run_nonex1(const Options& opt) {
    CheckList out{"Ex-NonEx1", {}};
    examples::NonEx1 ex;
    out.checks.emplace_back("N1 and N2 generate the same code", ex.code_n1 == ex.code_n2);
    out.checks.emplace_back("code is self-orthogonal", ex.code_n1.is_self_orthogonal());
    RingSpec f2 = RingSpec::Fp(2);
    bool iso = true;
    for (uint32_t xi = 0; xi < 16 && iso; ++xi) {
        RVec x = make_vec(f2, {(xi >> 3) & 1, (xi >> 2) & 1, (xi >> 1) & 1, xi & 1});
        iso = symp_weight(vec_mat_mul(x, ex.code_n1.generators())) ==
              symp_weight(vec_mat_mul(x, ex.n2_rows_plain));
    }
    out.checks.emplace_back("row-to-row map preserves the symplectic weight", iso);
    RMat b_f = phi_of_row_map(ex.code_n1, ex.n2_rows_plain);
    bool witness = false;
    uint64_t considered = 0;
    for_each_monomial_map(f2, 4, MonomialFlavor::SL, opt.max_enum, [&](const MonomialMap& m) {
        ++considered;
        RMat image = rmat_zero(f2, 0, 8);
        for (size_t r = 0; r < 4; ++r) {
            RVec w = apply_monomial(m, ex.code_n1.generators().row(r));
            if (!ex.code_n1.contains(w)) return true;
            image.append_row(w);
        }
        if (phi_of_row_map(ex.code_n1, image) == b_f) witness = true;
        return true;
    });
    out.checks.emplace_back("no monomial witness for f over " + std::to_string(considered) + " maps",
                            !witness && considered == 31104);
    return out;
}

CheckList run_e_ex2(const Options& opt) {
    CheckList out{"E-Ex2", {}};
    StabilizerCode c = examples::e_ex2_code();
    IsometrySubgroup symp = symp_group(c, opt.max_enum, opt.jobs);
    auto gl3 = all_gl(RingSpec::Fp(2), 3);
    std::sort(gl3.begin(), gl3.end(), rmat_less);
    out.checks.emplace_back("Symp(C) order 168", symp.order() == 168);
    out.checks.emplace_back("Symp(C) equals the full GL_3(F_2)", symp.elements == gl3);
    RmonExhaustive rmon = rmon_group_exhaustive(c, MonomialFlavor::SL, opt.max_enum);
    out.checks.emplace_back(
        "rMon_SL(C) order 8 (computed " + std::to_string(rmon.group.order()) + " from " +
            std::to_string(rmon.stabilizing_maps) + " stabilizing maps)",
        rmon.group.order() == 8);
    out.checks.emplace_back("orbit-matching route agrees with the exhaustive route",
                            rmon_sl_group(c, opt.max_enum, opt.jobs).elements == rmon.group.elements);
    return out;
}

CheckList run_extension2(const Options& opt) {
    CheckList out{"Ex-Extension2", {}};
    examples::Extension2 ex;
    out.checks.emplace_back("dual(C) is generated by H", dual(ex.code) == ex.dual_h);
    out.checks.emplace_back("dual(C~) is generated by H~", dual(ex.code_f) == ex.dual_h_f);
    auto exts = self_dual_extensions(ex.code, opt.max_enum);
    auto exts_f = self_dual_extensions(ex.code_f, opt.max_enum);
    out.checks.emplace_back("exactly 3 self-dual codes between C and its dual", exts.size() == 3);
    out.checks.emplace_back("exactly 3 self-dual codes between C~ and its dual", exts_f.size() == 3);
    std::vector<std::vector<size_t>> cosets = {
        coset_weight_table(ex.code, ex.h4).weights, coset_weight_table(ex.code, ex.h5).weights,
        coset_weight_table(ex.code, ex.h4 + ex.h5).weights};
    std::vector<std::vector<size_t>> cosets_f = {
        coset_weight_table(ex.code_f, ex.h4_tilde).weights,
        coset_weight_table(ex.code_f, ex.h5_tilde).weights,
        coset_weight_table(ex.code_f, ex.h4_tilde + ex.h5_tilde).weights};
    out.checks.emplace_back("coset weight multisets match the first table", cosets == ex.table1);
    out.checks.emplace_back("coset weight multisets match the second table", cosets_f == ex.table2);
    int matches = 0;
    bool first_pair = false;
    for (size_t j = 0; j < 3; ++j)
        if (cosets[0] == cosets_f[j]) {
            ++matches;
            if (j == 0) first_pair = true;
        }
    out.checks.emplace_back("C_1 is distribution-compatible with C~_1 only",
                            matches == 1 && first_pair);
    return out;
}

CheckList run_ex11(const Options& opt) {
    CheckList out{"Ex-Ex11", {}};
    examples::Ex11 ex;
    StabilizerGroup s = code_to_stabilizer(ex.code);
    StabilizerGroup sp = code_to_stabilizer(ex.code_prime);
    std::vector<std::string> got, got_p;
    for (const auto& g : s.generators) got.push_back(pauli_string(g));
    for (const auto& g : sp.generators) got_p.push_back(pauli_string(g));
    out.checks.emplace_back("S = <XZX, ZXX, ZZZ>", got == ex.letters_s);
    out.checks.emplace_back("S' = <YZY, XZZ, YXZ>", got_p == ex.letters_s_prime);
    out.checks.emplace_back("Q(S) is spanned by the reference vector",
                            stabilizer_state_basis(s, opt.max_enum).columns ==
                                examples::state_column(ex.state_v));
    out.checks.emplace_back("Q(S') is spanned by the reference vector",
                            stabilizer_state_basis(sp, opt.max_enum).columns ==
                                examples::state_column_gauss(ex.state_v_prime));
    LcpReport rep = lcp_verify(ex.code, ex.code_prime, ex.map, opt.max_enum);
    out.checks.emplace_back("S' = U sigma(S) U+ with exact phases", rep.group_equal_exact);
    out.checks.emplace_back("state spans agree under U", rep.span_equal);
    Cyclotomic expected = Rat(1, 2) * (Cyclotomic::one() + Cyclotomic::root_of_unity(4, 1));
    out.checks.emplace_back("U v'' = ((1+i)/2) v'",
                            rep.state_ratio && *rep.state_ratio == expected);
    return out;
}

CheckList run_ex_lcp(const Options& opt) {
    CheckList out{"Ex-LCP", {}};
    examples::ExLCP ex;
    out.checks.emplace_back("both codes are self-dual",
                            is_self_dual(ex.code) && is_self_dual(ex.code_prime));
    auto symp = symp_between(ex.code, ex.code_prime, opt.max_enum);
    RMat id = rmat_identity(RingSpec::Fp(2), 4);
    bool has_f = false;
    for (const auto& b : symp)
        if (b == id) has_f = true;
    out.checks.emplace_back("the row-to-row map is a symplectic isometry", has_f);
    auto rmon = rmon_sl_between(ex.code, ex.code_prime, MonomialFlavor::SL, opt.max_enum);
    out.checks.emplace_back(
        "no SL_2-monomial map between the codes (computed " + std::to_string(rmon.size()) +
            " witnesses)",
        rmon.empty());
    StateBasis s = stabilizer_state_basis(code_to_stabilizer(ex.code), opt.max_enum);
    StateBasis s_p = stabilizer_state_basis(code_to_stabilizer(ex.code_prime), opt.max_enum);
    auto prof = rank_profile(s);
    auto prof_p = rank_profile(s_p);
    out.checks.emplace_back("rank 4 vs 2 at bipartition {1,2}|{3,4}",
                            prof[0b0011] == 4 && prof_p[0b0011] == 2);
    LuWitness w = lu_witness(s, s_p);
    out.checks.emplace_back("states are not LU equivalent",
                            w.not_lu_equivalent && w.bipartition_mask == 0b0011);
    return out;
}

int run_examples(const Options& opt, const std::string& only) {
    std::vector<CheckList> lists;
    if (only.empty() || only == "Ex-NonEx1") lists.push_back(run_nonex1(opt));
    if (only.empty() || only == "E-Ex2") lists.push_back(run_e_ex2(opt));
    if (only.empty() || only == "Ex-Extension2") lists.push_back(run_extension2(opt));
    if (only.empty() || only == "Ex-Ex11") lists.push_back(run_ex11(opt));
    if (only.empty() || only == "Ex-LCP") lists.push_back(run_ex_lcp(opt));
    if (lists.empty())
        throw malformed_input("unknown example: " + only +
                              " (expected Ex-NonEx1, E-Ex2, Ex-Extension2, Ex-Ex11 or Ex-LCP)");
    bool all_ok = true;
    json rep = json::array();
    for (const auto& l : lists) {
        json jchecks = json::array();
        if (opt.format == "text") std::printf("%s\n", l.name.c_str());
        for (const auto& [name, ok] : l.checks) {
            if (opt.format == "text") std::printf("  %s %s\n", ok ? "pass" : "FAIL", name.c_str());
            jchecks.push_back(json{{"check", name}, {"pass", ok}});
            all_ok = all_ok && ok;
        }
        rep.push_back(json{{"example", l.name}, {"checks", jchecks}, {"pass", l.all_ok()}});
    }
    if (opt.format == "json") emit(opt, rep, "", all_ok);
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stabilizer codes, symplectic isometry groups and local Clifford equivalence"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("SYMPISO_MAX_ENUM"))
        opt.max_enum = std::strtoull(env, nullptr, 10);
    app.add_option("--max-enum", opt.max_enum, "enumeration cap (elements scanned)");
    app.add_option("--jobs", opt.jobs, "parallel shards for large searches");
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // --- code ---
    auto* code = app.add_subcommand("code", "classical stabilizer code operations");
    code->require_subcommand(1);
    std::string code_file, lift_ring;
    uint32_t concat_times = 0;

    auto* code_check = code->add_subcommand("check", "self-orthogonality, dual, minimum distance");
    code_check->add_option("file", code_file)->required();

    auto* code_concat = code->add_subcommand("concat", "p-fold concatenation");
    code_concat->add_option("file", code_file)->required();
    code_concat->add_option("--times", concat_times, "must equal the field characteristic");

    auto* code_lift = code->add_subcommand("lift", "socle lift into Z/p^e");
    code_lift->add_option("file", code_file)->required();
    code_lift->add_option("--ring", lift_ring, "target ring, e.g. Z/4")->required();

    // --- iso ---
    auto* iso = app.add_subcommand("iso", "symplectic isometry groups");
    iso->require_subcommand(1);
    std::string iso_file, iso_file_b, flavor = "sl", closure_action = "O", structure_ring = "F2";
    size_t structure_n = 1;

    auto* iso_symp = iso->add_subcommand("symp", "Symp(C) as matrices over the residue field");
    iso_symp->add_option("file", iso_file)->required();

    auto* iso_mon = iso->add_subcommand("mon", "rMon(C): restrictions of monomial maps");
    iso_mon->add_option("file", iso_file)->required();
    iso_mon->add_option("--flavor", flavor)->check(CLI::IsMember({"sl", "gl"}));

    auto* iso_between = iso->add_subcommand("between", "Symp(C,C') and rMon_SL(C,C')");
    iso_between->add_option("fileA", iso_file)->required();
    iso_between->add_option("fileB", iso_file_b)->required();

    auto* iso_closure = iso->add_subcommand("closure", "closure of Symp/rMon in an orbit space");
    iso_closure->add_option("file", iso_file)->required();
    iso_closure->add_option("--action", closure_action)->check(CLI::IsMember({"O", "O#"}));

    auto* iso_structure =
        iso->add_subcommand("verify-structure", "brute-force isometries of the full space");
    iso_structure->add_option("--n", structure_n)->required();
    iso_structure->add_option("--ring", structure_ring)->required();

    // --- pauli / stab ---
    auto* pauli = app.add_subcommand("pauli", "symbolic Pauli operators");
    pauli->require_subcommand(1);
    std::string pauli_a, pauli_b, pauli_ring = "F2";
    auto* pauli_mul_cmd = pauli->add_subcommand("mul", "product of two Pauli operators");
    pauli_mul_cmd->add_option("P", pauli_a)->required();
    pauli_mul_cmd->add_option("Q", pauli_b)->required();
    pauli_mul_cmd->add_option("--ring", pauli_ring);
    auto* pauli_comm = pauli->add_subcommand("commutes", "do two Pauli operators commute?");
    pauli_comm->add_option("P", pauli_a)->required();
    pauli_comm->add_option("Q", pauli_b)->required();
    pauli_comm->add_option("--ring", pauli_ring);

    auto* stab = app.add_subcommand("stab", "stabilizer groups");
    stab->require_subcommand(1);
    auto* stab_from = stab->add_subcommand("from-code", "stabilizer generators of a code");
    stab_from->add_option("file", code_file)->required();

    // --- quantum ---
    auto* quantum = app.add_subcommand("quantum", "exact states, lifts and LU witnesses");
    quantum->require_subcommand(1);
    std::string q_file, q_file_b, map_file, lift_matrix;
    uint32_t lift_d = 2;

    auto* q_state = quantum->add_subcommand("state", "stabilizer state basis of a code");
    q_state->add_option("file", q_file)->required();

    auto* q_lcp = quantum->add_subcommand("lcp", "verify local Clifford + permutation equivalence");
    q_lcp->add_option("fileA", q_file)->required();
    q_lcp->add_option("fileB", q_file_b)->required();
    q_lcp->add_option("--map", map_file, "monomial map file")->required();

    auto* q_lu = quantum->add_subcommand("lu-witness", "refute LU equivalence via rank profiles");
    q_lu->add_option("stateA", q_file)->required();
    q_lu->add_option("stateB", q_file_b)->required();

    auto* q_lift = quantum->add_subcommand("lift", "Clifford lift of an SL_2 matrix");
    q_lift->add_option("--matrix", lift_matrix, "a,b,c,d row-major")->required();
    q_lift->add_option("--d", lift_d, "qudit dimension");

    // --- paper ---
    auto* paper = app.add_subcommand("paper", "built-in worked examples");
    paper->require_subcommand(1);
    std::string only;
    auto* paper_examples = paper->add_subcommand("examples", "run the bundled example suite");
    paper_examples->add_option("--only", only, "run a single example by name");

    // let the global --format / --max-enum / --jobs flags appear after any
    // subcommand as well
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (auto* sub : a->get_subcommands([](CLI::App*) { return true; }))
            enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    CLI11_PARSE(app, argc, argv);

    for (int i = 1; i < argc; ++i) {
        if (!g_run.command.empty()) g_run.command += " ";
        g_run.command += argv[i];
        g_run.absorb_arg(argv[i]);
    }
    for (const std::string& path : {code_file, iso_file, iso_file_b, q_file, q_file_b, map_file})
        if (!path.empty()) g_run.absorb_file(path);

    try {
        if (*code_check) {
            StabilizerCode c = load_code(code_file);
            StabilizerCode d = dual(c);
            bool so = c.is_self_orthogonal();
            bool sd = is_self_dual(c);
            size_t dist = min_distance(c, opt.max_enum);
            json rep{{"ring", c.spec().name()}, {"n", c.n()},           {"k", c.k()},
                     {"self_orthogonal", so},   {"self_dual", sd},      {"min_distance", dist},
                     {"dual", code_to_json(d)}};
            std::string text = "ring " + c.spec().name() + ", n=" + std::to_string(c.n()) +
                               ", k=" + std::to_string(c.k()) + "\n" +
                               "self-orthogonal: " + (so ? "yes" : "no") + "\n" +
                               "self-dual: " + (sd ? "yes" : "no") + "\n" +
                               "min distance: " + std::to_string(dist) + "\n" +
                               "dual generators:\n" + code_to_text(d);
            emit(opt, rep, text);
            return 0;
        }
        if (*code_concat) {
            StabilizerCode c = load_code(code_file);
            if (concat_times != 0 && concat_times != c.spec().characteristic())
                throw domain_error("--times must equal the field characteristic " +
                                   std::to_string(c.spec().characteristic()));
            StabilizerCode cc = concat_p_fold(c);
            emit(opt, code_to_json(cc), code_to_text(cc));
            return 0;
        }
        if (*code_lift) {
            StabilizerCode c = load_code(code_file);
            StabilizerCode lifted = socle_lift(c, parse_ring_name(lift_ring));
            emit(opt, code_to_json(lifted), code_to_text(lifted));
            return 0;
        }
        if (*iso_symp) {
            StabilizerCode c = load_code(iso_file);
            IsometrySubgroup g = symp_group(c, opt.max_enum, opt.jobs);
            emit(opt, group_report(g), "Symp(C) order " + std::to_string(g.order()) + "\n");
            return 0;
        }
        if (*iso_mon) {
            StabilizerCode c = load_code(iso_file);
            MonomialFlavor fl = flavor == "sl" ? MonomialFlavor::SL : MonomialFlavor::GL;
            IsometrySubgroup g = rmon_group(c, fl, opt.max_enum, opt.jobs);
            json rep = group_report(g);
            std::string text = "rMon order " + std::to_string(g.order()) + "\n";
            // also count the stabilizing monomial maps when the exhaustive
            // walk fits the cap (several maps can restrict to one matrix)
            uint64_t block_count =
                fl == MonomialFlavor::SL ? all_sl2(c.spec()).size() : all_gl2(c.spec()).size();
            uint64_t total = 1;
            bool feasible = true;
            for (size_t i = 0; i < c.n() && feasible; ++i) {
                total *= block_count;
                feasible = total <= opt.max_enum;
            }
            for (size_t i = 2; i <= c.n() && feasible; ++i) {
                total *= i;
                feasible = total <= opt.max_enum;
            }
            if (feasible) {
                RmonExhaustive ex = rmon_group_exhaustive(c, fl, opt.max_enum);
                rep["stabilizing_maps"] = ex.stabilizing_maps;
                text += "stabilizing monomial maps: " + std::to_string(ex.stabilizing_maps) + "\n";
            }
            emit(opt, rep, text);
            return 0;
        }
        if (*iso_between) {
            StabilizerCode a = load_code(iso_file);
            StabilizerCode b = load_code(iso_file_b);
            auto symp = symp_between(a, b, opt.max_enum);
            auto rmon = rmon_sl_between(a, b, MonomialFlavor::SL, opt.max_enum);
            json rep;
            rep["symp_count"] = symp.size();
            rep["rmon_sl_count"] = rmon.size();
            json wits = json::array();
            for (const auto& w : rmon) {
                json jw{{"B", matrix_report(w.b)}};
                if (w.map) {
                    json blocks = json::array();
                    for (const auto& blk : w.map->blocks) blocks.push_back(matrix_report(blk));
                    json perm = json::array();
                    for (size_t p : w.map->perm) perm.push_back(p + 1);
                    jw["map"] = json{{"blocks", blocks}, {"perm", perm}};
                }
                wits.push_back(jw);
            }
            rep["witnesses"] = wits;
            emit(opt, rep,
                 "symplectic between-maps: " + std::to_string(symp.size()) + "\n" +
                     "SL-monomial between-maps: " + std::to_string(rmon.size()) + "\n");
            return 0;
        }
        if (*iso_closure) {
            StabilizerCode c = load_code(iso_file);
            ClosureAction act =
                closure_action == "O" ? ClosureAction::scalar_orbits : ClosureAction::block_orbits;
            IsometrySubgroup symp = symp_group(c, opt.max_enum, opt.jobs);
            IsometrySubgroup rmon = rmon_group(c, MonomialFlavor::GL, opt.max_enum, opt.jobs);
            IsometrySubgroup symp_cl = closure(symp, act, opt.max_enum);
            IsometrySubgroup rmon_cl = closure(rmon, act, opt.max_enum);
            json rep;
            rep["action"] = closure_action;
            rep["symp"] = group_report(symp);
            rep["symp_closure"] = group_report(symp_cl);
            rep["symp_closed"] = symp_cl == symp;
            rep["rmon"] = group_report(rmon);
            rep["rmon_closure"] = group_report(rmon_cl);
            rep["rmon_closed"] = rmon_cl == rmon;
            auto line = [](const char* name, const IsometrySubgroup& g, const IsometrySubgroup& cl) {
                return std::string(name) + " order " + std::to_string(g.order()) +
                       ", closure order " + std::to_string(cl.order()) +
                       (cl == g ? " (closed)\n" : " (not closed)\n");
            };
            emit(opt, rep, line("Symp", symp, symp_cl) + line("rMon", rmon, rmon_cl));
            return 0;
        }
        if (*iso_structure) {
            StructureReport r = verify_structure_theorem(structure_n, parse_ring_name(structure_ring),
                                                         opt.max_enum, opt.jobs);
            json rep{{"isometry_count", r.isometry_count},
                     {"monomial_count", r.monomial_count},
                     {"sets_equal", r.sets_equal}};
            emit(opt, rep,
                 "isometries " + std::to_string(r.isometry_count) + ", monomial maps " +
                     std::to_string(r.monomial_count) +
                     (r.sets_equal ? " (equal sets)\n" : " (DIFFERENT sets)\n"));
            return r.sets_equal ? 0 : 1;
        }
        if (*pauli_mul_cmd || *pauli_comm) {
            RingSpec spec = parse_ring_name(pauli_ring);
            PauliOperator p = parse_pauli(pauli_a, spec);
            PauliOperator q = parse_pauli(pauli_b, spec);
            if (p.n() != q.n()) throw malformed_input("operators act on different qudit counts");
            if (*pauli_mul_cmd) {
                PauliOperator r = pauli_mul(p, q);
                emit(opt, json{{"product", pauli_string(r)}}, pauli_string(r) + "\n");
            } else {
                bool c = pauli_commutes(p, q);
                emit(opt, json{{"commute", c}}, std::string(c ? "commute\n" : "do not commute\n"));
            }
            return 0;
        }
        if (*stab_from) {
            StabilizerCode c = load_code(code_file);
            StabilizerGroup s = code_to_stabilizer(c);
            json gens = json::array();
            std::string text;
            for (const auto& g : s.generators) {
                gens.push_back(pauli_string(g));
                text += pauli_string(g) + "\n";
            }
            emit(opt, json{{"generators", gens}, {"n", s.n}, {"ring", c.spec().name()}}, text);
            return 0;
        }
        if (*q_state) {
            StabilizerCode c = load_code(q_file);
            StateBasis s = stabilizer_state_basis(code_to_stabilizer(c), opt.max_enum);
            json rep = state_to_json(s);
            std::string text = "basis of dimension " + std::to_string(s.columns.cols()) + "\n";
            for (size_t col = 0; col < s.columns.cols(); ++col) {
                text += "(";
                for (size_t r = 0; r < s.columns.rows(); ++r)
                    text += (r ? ", " : "") + s.columns.at(r, col).str();
                text += ")\n";
            }
            emit(opt, rep, text);
            return 0;
        }
        if (*q_lcp) {
            StabilizerCode a = load_code(q_file);
            StabilizerCode b = load_code(q_file_b);
            MonomialMap m = load_monomial_map(map_file, a.spec());
            LcpReport r = lcp_verify(a, b, m, opt.max_enum);
            json rep{{"code_map_ok", r.code_map_ok},
                     {"psi_match", r.psi_match},
                     {"group_equal_exact", r.group_equal_exact},
                     {"span_equal", r.span_equal},
                     {"correction_unsat", r.correction_unsat}};
            if (r.pauli_correction) rep["pauli_correction"] = pauli_string(*r.pauli_correction);
            if (r.state_ratio) rep["state_ratio"] = r.state_ratio->str();
            std::string text = std::string("code map: ok\n") +
                               "Psi images match: " + (r.psi_match ? "yes" : "no") + "\n" +
                               "exact group equality: " + (r.group_equal_exact ? "yes" : "no") + "\n";
            if (r.pauli_correction)
                text += "pauli correction: " + pauli_string(*r.pauli_correction) + "\n";
            if (r.correction_unsat) text += "pauli correction: unsatisfiable\n";
            text += std::string("state span equality: ") + (r.span_equal ? "yes" : "no") + "\n";
            if (r.state_ratio) text += "state ratio: " + r.state_ratio->str() + "\n";
            emit(opt, rep, text);
            return (r.group_equal_exact || r.pauli_correction) && r.span_equal ? 0 : 1;
        }
        if (*q_lu) {
            auto load_state = [](const std::string& path) {
                std::ifstream f(path);
                if (!f) throw malformed_input("cannot open state file: " + path);
                json j;
                try {
                    f >> j;
                } catch (const std::exception& e) {
                    throw malformed_input("bad state json: " + std::string(e.what()));
                }
                return state_from_json(j);
            };
            StateBasis a = load_state(q_file);
            StateBasis b = load_state(q_file_b);
            LuWitness w = lu_witness(a, b);
            json rep{{"verdict", w.not_lu_equivalent ? "not-LU-equivalent" : "inconclusive"}};
            std::string text;
            if (w.not_lu_equivalent) {
                rep["bipartition"] = bipartition_string(w.bipartition_mask, a.n);
                rep["ranks"] = json::array({w.rank_a, w.rank_b});
                text = "not-LU-equivalent, bipartition " +
                       bipartition_string(w.bipartition_mask, a.n) + ", ranks " +
                       std::to_string(w.rank_a) + " vs " + std::to_string(w.rank_b) + "\n";
            } else {
                text = "inconclusive\n";
            }
            emit(opt, rep, text);
            return 0;
        }
        if (*q_lift) {
            std::vector<int64_t> entries;
            std::string tok;
            std::istringstream ls(lift_matrix);
            while (std::getline(ls, tok, ',')) {
                try {
                    entries.push_back(std::stoll(tok));
                } catch (const std::exception&) {
                    throw malformed_input("bad matrix entry: " + tok);
                }
            }
            if (entries.size() != 4) throw malformed_input("--matrix needs 4 comma-separated entries");
            RingSpec spec = RingSpec::Fp(lift_d);
            RMat m = rmat(spec, 2, 2, entries);
            ScaledMatrix u = clifford_lift_sl2(m, spec);
            json rep = scaled_matrix_to_json(u);
            std::string text = "scale: 1/sqrt(" + std::to_string(lift_d) + ")^" +
                               std::to_string(u.scale_exp) + "\n";
            for (size_t r = 0; r < u.mat.rows(); ++r) {
                for (size_t c = 0; c < u.mat.cols(); ++c)
                    text += (c ? ", " : "") + u.mat.at(r, c).str();
                text += "\n";
            }
            emit(opt, rep, text);
            return 0;
        }
        if (*paper_examples) return run_examples(opt, only);
    } catch (const cap_exceeded& e) {
        std::fprintf(stderr, "enumeration cap exceeded: %s\n", e.what());
        return 3;
    } catch (const malformed_input& e) {
        std::fprintf(stderr, "malformed input: %s\n", e.what());
        return 2;
    } catch (const domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
