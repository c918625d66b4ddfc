#include "vck/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <map>
#include <sstream>

#include "vck/abelian.hpp"
#include "vck/catalog.hpp"
#include "vck/cocycle.hpp"
#include "vck/enumerate.hpp"
#include "vck/invariant.hpp"
#include "vck/solution_io.hpp"

namespace vck {

namespace {

constexpr int kOk = 0, kUsage = 1, kInvalid = 2, kBudget = 3;

VirtualPair resolve_pair(const std::string& ref) {
    for (const auto& name : named_pair_list())
        if (name == ref) return make_named_pair(name);
    SolutionFile f = parse_solution_file(read_text_file(ref));
    if (!f.beta) throw std::runtime_error("pair file must contain S and beta blocks");
    return make_virtual_pair(f.S, *f.beta);
}

LinkDiagram resolve_diagram(const std::string& ref) {
    if (std::filesystem::exists(ref)) {
        std::string text = read_text_file(ref);
        std::string code, line;
        for (char ch : text + "\n") {
            if (ch == '\n') {
                if (!line.empty() && line[0] != '#') code += line + " ";
                line.clear();
            } else
                line += ch;
        }
        return parse_gauss(code);
    }
    return catalog(ref);
}

std::vector<FiniteGroup> resolve_battery(const std::string& dir) {
    if (dir.empty()) return default_battery();
    std::vector<FiniteGroup> out;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        if (e.path().extension() != ".group") continue;
        FiniteGroup g = parse_group_table(read_text_file(e.path().string()));
        if (g.name.empty()) g.name = e.path().stem().string();
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(),
              [](const FiniteGroup& a, const FiniteGroup& b) { return a.name < b.name; });
    if (out.empty()) throw std::runtime_error("no .group files in " + dir);
    return out;
}

FiniteGroup resolve_group(const std::string& ref) {
    for (const FiniteGroup& g : default_battery())
        if (g.name == ref) return g;
    return parse_group_table(read_text_file(ref));
}

std::string census_text(int n, bool allow_long, int jobs) {
    CensusRow row = census(n, allow_long, jobs);
    std::ostringstream out;
    auto ref = reference_census(n);
    auto cell = [&](const char* label, long long got, long long want, bool have_ref) {
        out << "  " << label << ": " << got;
        if (have_ref && got != want)
            out << "  (differs from reference table: " << want << ")";
        out << "\n";
    };
    out << "n=" << n << "\n";
    cell("all pairs", row.all_pairs, ref ? ref->all_pairs : 0, (bool)ref);
    cell("aut-induced pairs", row.aut_induced_pairs, ref ? ref->aut_induced_pairs : 0,
         (bool)ref);
    cell("connected pairs", row.connected_pairs, ref ? ref->connected_pairs : 0, (bool)ref);
    cell("connected, S and beta both disconnected", row.connected_with_both_disconnected,
         ref ? ref->connected_with_both_disconnected : 0, (bool)ref);
    return out.str();
}

std::string presentation_report(const UniversalPair& up) {
    std::ostringstream out;
    out << "generators: " << up.simplified.gens.size() << "\n";
    out << up.simplified.str() << "\n";
    if (up.simplified.budget_exhausted) out << "(simplification budget exhausted)\n";
    int n = up.n();
    out << "f values:\n";
    for (int x = 0; x < n; ++x) {
        out << " ";
        for (int y = 0; y < n; ++y) out << " " << up.pf(x, y).str(up.simplified.gens);
        out << "\n";
    }
    out << "g values:\n";
    for (int x = 0; x < n; ++x) {
        out << " ";
        for (int y = 0; y < n; ++y) out << " " << up.pg(x, y).str(up.simplified.gens);
        out << "\n";
    }
    return out.str();
}

std::string kishino_table_text() {
    std::ostringstream out;
    out << "colorings       (S,i_id)  (S,i_(23))  (S,i_(123))\n";
    const char* pairs[3] = {"dih3-id", "dih3-s23", "dih3-c123"};
    for (const char* k : {"k1", "k2", "k3"}) {
        out << k << ":";
        for (const char* p : pairs) out << "  " << count_colorings(catalog(k), make_named_pair(p));
        out << "\n";
    }
    out << "k3 with the 4-element solution and flip: "
        << count_colorings(catalog("k3"), make_named_pair("kishino4-flip")) << "\n";
    return out.str();
}

std::string word_multiset_text(const LinkDiagram& d, const UniversalPair& up) {
    WordInvariant inv = universal_invariant(d, up);
    std::map<std::string, int> counts;
    for (auto& tuple : word_class_multiset(inv, true)) {
        std::string s = "{";
        for (size_t i = 0; i < tuple.size(); ++i)
            s += (i ? "," : "") + tuple[i].str(up.simplified.gens);
        s += "}";
        counts[s]++;
    }
    std::ostringstream out;
    bool first = true;
    for (auto& [s, k] : counts) {
        out << (first ? "" : "  ") << k << "x" << s;
        first = false;
    }
    return out.str();
}

std::string vlinks_table_text() {
    std::ostringstream out;
    UniversalPair ff = universal_presentation(make_named_pair("flip2-flip2"));
    UniversalPair af = universal_presentation(make_named_pair("antiflip2-flip2"));
    out << "universal invariant multisets (tuples as unordered pairs)\n";
    out << "pair (flip2,flip2), generators " << ff.simplified.str() << "\n";
    for (const char* name : {"v2.2", "v2.3", "v3.4"})
        out << "  " << name << ": " << word_multiset_text(catalog(name), ff) << "\n";
    out << "pair (antiflip2,flip2), generators " << af.simplified.str() << "\n";
    for (const char* name : {"v2.2", "v2.3", "v3.4"})
        out << "  " << name << ": " << word_multiset_text(catalog(name), af) << "\n";
    auto battery = default_battery();
    out << "separation:\n";
    out << "  v2.2 vs v2.3 under (flip2,flip2): "
        << (separate(catalog("v2.2"), catalog("v2.3"), make_named_pair("flip2-flip2"), battery)
                .distinguished
                ? "distinguished"
                : "not distinguished")
        << "\n";
    out << "  v2.3 vs v3.4 under (flip2,flip2): "
        << (separate(catalog("v2.3"), catalog("v3.4"), make_named_pair("flip2-flip2"), battery)
                .distinguished
                ? "distinguished"
                : "not distinguished")
        << "\n";
    out << "  v2.3 vs v3.4 under (antiflip2,flip2): "
        << (separate(catalog("v2.3"), catalog("v3.4"), make_named_pair("antiflip2-flip2"),
                     battery)
                .distinguished
                ? "distinguished"
                : "not distinguished")
        << "\n";
    return out.str();
}

std::string quaternion_text() {
    std::ostringstream out;
    UniversalPair up = universal_presentation(make_named_pair("pair248"));
    FiniteGroup q8 = quaternion8();
    auto homs = find_homs(up.simplified, q8);
    int witness = -1;
    for (size_t i = 0; i < homs.size(); ++i)
        if (evaluate(homs[i], up.pf(0, 0)) == 1 && evaluate(homs[i], up.pf(2, 2)) == 0) {
            witness = (int)i;
            break;
        }
    out << "homomorphisms into Q8: " << homs.size() << "\n";
    out << "hom with (1,1)_f -> -1: " << (witness >= 0 ? "found" : "missing") << "\n";
    if (witness >= 0) {
        FiniteCocyclePair cp = specialize(up, homs[witness]);
        FiniteInvariant fi = finite_invariant(catalog("v2.3"), cp);
        std::map<std::vector<int>, int> counts;
        for (auto& t : finite_class_multiset(fi, true)) counts[t]++;
        out << "v2.3 class multiset in Q8:";
        for (auto& [t, k] : counts) {
            out << "  " << k << "x(";
            for (size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
            out << ")";
        }
        out << "\n";
    }
    return out.str();
}

int do_reproduce(const std::string& target, bool bless, bool allow_long, int jobs,
                 std::string& out, std::string& err) {
    std::string text;
    if (target == "census") {
        std::ostringstream t;
        for (int n = 2; n <= 4; ++n) t << census_text(n, false, jobs);
        if (allow_long) t << census_text(5, true, jobs);
        text = t.str();
    } else if (target == "kishino") {
        text = kishino_table_text();
    } else if (target == "vlinks") {
        text = vlinks_table_text();
    } else if (target == "unc-flip2") {
        text = presentation_report(universal_presentation(make_named_pair("flip2-flip2")));
    } else if (target == "unc-antiflip2") {
        text = presentation_report(universal_presentation(make_named_pair("antiflip2-flip2")));
    } else if (target == "unc-248") {
        text = presentation_report(universal_presentation(make_named_pair("pair248")));
    } else if (target == "quaternion") {
        text = quaternion_text();
    } else {
        err = "unknown reproduce target '" + target + "'";
        return kUsage;
    }

    std::string golden_path = data_dir() + "/goldens/" + target + ".txt";
    if (bless) {
        write_text_file(golden_path, text);
        out += "blessed " + golden_path + "\n" + text;
        return kOk;
    }
    if (!std::filesystem::exists(golden_path)) {
        out += text;
        err = "no golden at " + golden_path + " (rerun with --bless to create)";
        return kInvalid;
    }
    std::string golden = read_text_file(golden_path);
    out += text;
    if (golden != text) {
        err = "output differs from golden " + golden_path;
        return kInvalid;
    }
    out += "matches golden\n";
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::string& out, std::string& err) {
    CLI::App app{"virtual cocycle kit"};
    app.require_subcommand(1);

    std::string pair_ref, diagram_ref, group_ref, battery_dir, keys_file, target, cocycle_file;
    int n = 0, jobs = 0;
    bool allow_long = false, flip_compatible = false, list_colorings = false;
    bool universal = false, do_state_sum = false, bless = false, lines = false;
    std::string mode = "all";

    auto* check = app.add_subcommand("check", "verify the axioms of a solution pair");
    check->add_option("--pair", pair_ref, "named pair or solution file")->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate solutions or pairs");
    enumerate_cmd->add_option("--n", n, "size")->required();
    enumerate_cmd->add_option("--mode", mode, "all | aut | involutive");
    enumerate_cmd->add_flag("--flip-compatible", flip_compatible);
    enumerate_cmd->add_flag("--long", allow_long, "allow long-running sizes");
    enumerate_cmd->add_option("--keys-file", keys_file, "write canonical keys here");
    enumerate_cmd->add_option("--jobs", jobs, "worker threads");

    auto* census_cmd = app.add_subcommand("census", "pair census for one size");
    census_cmd->add_option("--n", n, "size")->required();
    census_cmd->add_flag("--long", allow_long);
    census_cmd->add_option("--jobs", jobs);

    auto* color = app.add_subcommand("color", "count or list colorings");
    color->add_option("--diagram", diagram_ref)->required();
    color->add_option("--pair", pair_ref)->required();
    color->add_flag("--list", list_colorings);

    auto* inv = app.add_subcommand("invariant", "conjugacy-class invariant");
    inv->add_option("--diagram", diagram_ref)->required();
    inv->add_option("--pair", pair_ref)->required();
    inv->add_flag("--universal", universal, "use the universal pair (default)");
    inv->add_option("--cocycle", cocycle_file, "finite cocycle-pair file");
    inv->add_option("--battery", battery_dir, "directory of .group tables");
    inv->add_flag("--state-sum", do_state_sum, "abelian state sum per battery group");
    inv->add_flag("--lines", lines, "machine-readable lines output");

    auto* unc = app.add_subcommand("unc", "universal coefficient group");
    unc->add_option("--pair", pair_ref)->required();

    auto* homs_cmd = app.add_subcommand("homs", "homomorphisms of the universal group");
    homs_cmd->add_option("--pair", pair_ref)->required();
    homs_cmd->add_option("--group", group_ref, "battery group name or table file")->required();

    auto* rep = app.add_subcommand("reproduce", "regenerate a bundled table and diff goldens");
    rep->add_option("target", target, "census | kishino | vlinks | unc-flip2 | unc-antiflip2 |"
                                      " unc-248 | quaternion")
        ->required();
    rep->add_flag("--bless", bless, "overwrite the golden");
    rep->add_flag("--long", allow_long);
    rep->add_option("--jobs", jobs);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        os << app.help();
        err = e.what() + std::string("\n") + os.str();
        return e.get_exit_code() == 0 ? kOk : kUsage;
    }

    try {
        if (check->parsed()) {
            VirtualPair vp = resolve_pair(pair_ref);
            std::string witness;
            if (!check_virtual_pair(vp.S, vp.beta, &witness)) {
                err = "virtual pair: FAIL (" + witness + ")";
                return kInvalid;
            }
            out = "virtual pair: OK\n";
            return kOk;
        }
        if (enumerate_cmd->parsed()) {
            std::vector<CanonicalKey> keys;
            std::ostringstream t;
            if (mode == "involutive") {
                if (n >= 6 && !allow_long) {
                    err = "n >= 6 involutive enumeration requires --long";
                    return kBudget;
                }
                auto classes = enumerate_involutive(n, flip_compatible, jobs);
                t << "involutive classes: " << classes.size() << "\n";
                for (auto& c : classes) keys.push_back(canonical_key(c));
            } else if (mode == "all" || mode == "aut") {
                auto pairs = enumerate_virtual_pairs(
                    n, mode == "all" ? PairMode::All : PairMode::AutInduced, allow_long, jobs);
                t << "pair classes: " << pairs.size() << "\n";
                for (auto& p : pairs) keys.push_back(p.key);
            } else {
                err = "unknown mode '" + mode + "'";
                return kUsage;
            }
            if (!keys_file.empty()) {
                write_keys_file(keys_file, keys);
                t << "keys written to " << keys_file << "\n";
            }
            out = t.str();
            return kOk;
        }
        if (census_cmd->parsed()) {
            out = census_text(n, allow_long, jobs);
            return kOk;
        }
        if (color->parsed()) {
            LinkDiagram d = resolve_diagram(diagram_ref);
            VirtualPair vp = resolve_pair(pair_ref);
            auto cols = colorings(d, vp);
            std::ostringstream t;
            t << "colorings: " << cols.size() << "\n";
            if (list_colorings) {
                for (size_t i = 0; i < cols.size(); ++i) {
                    t << i << "\t";
                    for (size_t c = 0; c < cols[i].colors.size(); ++c) {
                        if (c) t << " ; ";
                        for (size_t p = 0; p < cols[i].colors[c].size(); ++p)
                            t << (p ? " " : "") << (int)cols[i].colors[c][p] + 1;
                    }
                    t << "\n";
                }
            }
            out = t.str();
            return kOk;
        }
        if (inv->parsed()) {
            LinkDiagram d = resolve_diagram(diagram_ref);
            VirtualPair vp = resolve_pair(pair_ref);
            std::ostringstream t;
            if (!cocycle_file.empty()) {
                std::string text = read_text_file(cocycle_file);
                // target reference on its own line names a file next to it
                std::string target_ref;
                std::istringstream in(text);
                std::string line;
                while (std::getline(in, line))
                    if (line.rfind("target:", 0) == 0) {
                        target_ref = line.substr(7);
                        while (!target_ref.empty() && target_ref.front() == ' ')
                            target_ref.erase(target_ref.begin());
                    }
                std::filesystem::path base = std::filesystem::path(cocycle_file).parent_path();
                CocycleFile cf = parse_cocycle_file(text, read_text_file((base / target_ref).string()));
                if (!cf.group_target) {
                    err = "only group-table targets are supported for direct evaluation";
                    return kUsage;
                }
                FiniteCocyclePair cp;
                cp.vp = cf.vp;
                cp.target = &*cf.group_target;
                cp.f = cf.f_elems;
                cp.g = cf.g_elems;
                AxiomReport rep_check = check_pair(cp);
                if (!rep_check.ok()) {
                    err = "cocycle pair invalid:\n" + rep_check.str();
                    return kInvalid;
                }
                FiniteInvariant fi = finite_invariant(d, cp);
                std::map<std::vector<int>, int> counts;
                for (auto& tup : finite_class_multiset(fi, false)) counts[tup]++;
                for (auto& [tup, k] : counts) {
                    t << k << "x(";
                    for (size_t i = 0; i < tup.size(); ++i) t << (i ? "," : "") << tup[i];
                    t << ")\n";
                }
                if (lines) {
                    for (size_t i = 0; i < fi.class_ids.size(); ++i) {
                        t << i << "\t";
                        for (size_t c = 0; c < fi.class_ids[i].size(); ++c)
                            t << (c ? "," : "") << fi.class_ids[i][c];
                        t << "\n";
                    }
                }
            } else {
                UniversalPair up = universal_presentation(vp);
                (void)universal;
                WordInvariant wi = universal_invariant(d, up);
                t << "colorings: " << wi.cols.size() << "\n";
                t << "universal group: " << up.simplified.str() << "\n";
                t << "invariant multiset: " << word_multiset_text(d, up) << "\n";
                if (lines) {
                    for (size_t i = 0; i < wi.class_reps.size(); ++i) {
                        t << i << "\t";
                        for (size_t c = 0; c < wi.class_reps[i].size(); ++c)
                            t << (c ? "," : "")
                              << wi.class_reps[i][c].str(up.simplified.gens);
                        t << "\n";
                    }
                }
                if (do_state_sum) {
                    auto battery = resolve_battery(battery_dir);
                    for (const FiniteGroup& G : battery) {
                        if (!G.is_abelian()) continue;
                        std::vector<Homomorphism> homs;
                        try {
                            homs = find_homs(up.simplified, G);
                        } catch (const std::runtime_error&) {
                            continue;
                        }
                        for (size_t hi = 0; hi < homs.size(); ++hi) {
                            FiniteCocyclePair cp = specialize(up, homs[hi]);
                            AxiomReport ss = check_state_sum_pair(cp.vp, G, cp.f, cp.g);
                            if (!ss.ok()) continue;
                            auto sum = state_sum(d, vp, G, cp.f, cp.g);
                            t << "state sum in " << G.name << " (hom " << hi << "):";
                            for (auto& [e, k] : sum) t << " " << e << ":" << k;
                            t << "\n";
                        }
                    }
                }
            }
            out = t.str();
            return kOk;
        }
        if (unc->parsed()) {
            VirtualPair vp = resolve_pair(pair_ref);
            UniversalPair up = universal_presentation(vp);
            out = presentation_report(up);
            WordPairReport rep_check = check_universal_pair(up, default_battery());
            out += up.simplified.relators.empty()
                       ? "axiom instances verified exactly (free target)\n"
                       : (rep_check.ok ? "axiom instances battery-verified\n"
                                         : "axiom verification FAILED\n");
            return rep_check.ok ? kOk : kInvalid;
        }
        if (homs_cmd->parsed()) {
            VirtualPair vp = resolve_pair(pair_ref);
            UniversalPair up = universal_presentation(vp);
            FiniteGroup g = resolve_group(group_ref);
            auto homs = find_homs(up.simplified, g);
            std::ostringstream t;
            t << "homomorphisms into " << g.name << ": " << homs.size() << "\n";
            for (size_t i = 0; i < homs.size(); ++i) {
                t << i << ":";
                for (size_t j = 0; j < homs[i].images.size(); ++j)
                    t << " " << up.simplified.gens[j] << "->" << homs[i].images[j];
                t << "\n";
            }
            out = t.str();
            return kOk;
        }
        if (rep->parsed()) return do_reproduce(target, bless, allow_long, jobs, out, err);
    } catch (const std::runtime_error& e) {
        std::string what = e.what();
        err = what;
        if (what.find("requires the long flag") != std::string::npos ||
            what.find("--long") != std::string::npos ||
            what.find("too many generators") != std::string::npos)
            return kBudget;
        return kInvalid;
    }
    err = "no subcommand";
    return kUsage;
}

int run_cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string out, err;
    int code = run_cli(args, out, err);
    if (!out.empty()) fputs(out.c_str(), stdout);
    if (!err.empty()) {
        fputs(err.c_str(), stderr);
        fputc('\n', stderr);
    }
    return code;
}

}  // namespace vck
