// Command-line surface of the diagonal-complex toolkit: enumeration,
// isomorphism checks, BD complexes, the forgetful maps, the Morse engine,
// fiber construction, homology, and the aggregated verification suite.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "diagcx/json_io.hpp"
#include "diagcx/manifest.hpp"
#include "diagcx/verify.hpp"

using namespace diagcx;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& bytes) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << bytes;
}

ArrangementPoset enumerate_case(const std::string& kind, int n, int k) {
    if (kind == "plain") return enumerate_plain(n);
    if (kind == "punctured") return enumerate_punctured(n);
    if (kind == "axis") return enumerate_axis_symmetric(k);
    if (kind == "assoc") return enumerate_plain(n);
    throw CLI::ValidationError("unknown case: " + kind);
}

json arrangement_poset_json(const ArrangementPoset& ap) {
    json j = poset_to_json(ap.poset);
    j["rank"] = ap.rank;
    j["classes"] = json::array();
    for (auto& c : ap.universe.classes) {
        json cls;
        cls["name"] = c.name;
        cls["chords"] = json::array();
        for (auto& ch : c.chords) cls["chords"].push_back({ch.a, ch.b});
        j["classes"].push_back(cls);
    }
    return j;
}

int emit(const json& j, const std::string& out_path) {
    std::string bytes = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << bytes;
    else
        spit(out_path, bytes);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diagonal complexes of punctured and symmetric surfaces"};
    app.require_subcommand(1);
    std::uint64_t seed = 20240915;
    app.add_option("--seed", seed, "seed recorded for randomized property checks");

    // ---- enumerate ----------------------------------------------------
    auto* cmd_enum = app.add_subcommand("enumerate", "enumerate a diagonal poset");
    std::string enum_kind;
    int enum_n = 5, enum_k = 3;
    bool enum_fvec = false;
    std::string enum_json_out, enum_dot_out;
    cmd_enum->add_option("kind", enum_kind, "plain | punctured | axis")->required();
    cmd_enum->add_option("--n", enum_n, "polygon marked-point count");
    cmd_enum->add_option("--k", enum_k, "half-polygon parameter for the axial case");
    cmd_enum->add_flag("--f-vector", enum_fvec, "print the graded f-vector");
    cmd_enum->add_option("--json", enum_json_out, "write the poset as JSON");
    cmd_enum->add_option("--dot", enum_dot_out, "write the Hasse diagram as DOT");

    // ---- poset-iso -----------------------------------------------------
    auto* cmd_iso = app.add_subcommand("poset-iso", "test two enumerated posets for isomorphism");
    std::vector<std::string> iso_kinds;
    int iso_n = 4, iso_k = 3;
    cmd_iso->add_option("kinds", iso_kinds, "two of plain|punctured|axis|assoc")->expected(2);
    cmd_iso->add_option("--n", iso_n, "n for plain/punctured/assoc");
    cmd_iso->add_option("--k", iso_k, "k for axis");

    // ---- bd -------------------------------------------------------------
    auto* cmd_bd = app.add_subcommand("bd", "build the BD label complex over an enumerated poset");
    std::string bd_kind = "plain";
    int bd_n = 5, bd_k = 3;
    std::string bd_json_out;
    cmd_bd->add_option("--case", bd_kind, "plain | punctured | axis");
    cmd_bd->add_option("--n", bd_n, "");
    cmd_bd->add_option("--k", bd_k, "");
    cmd_bd->add_option("--json", bd_json_out, "output path");

    // ---- project --------------------------------------------------------
    auto* cmd_project = app.add_subcommand("project", "forgetful projection of a punctured-polygon label");
    int prj_n = 4;
    std::string prj_label;
    std::string prj_out;
    cmd_project->add_option("--n", prj_n, "punctured polygon size")->required();
    cmd_project->add_option("--label", prj_label, "label JSON file (punctured class ids)")->required();
    cmd_project->add_option("--json", prj_out, "output path");

    // ---- fold -----------------------------------------------------------
    auto* cmd_fold = app.add_subcommand("fold", "half surgery pi_1 of an axial-symmetric label");
    int fold_k = 3;
    std::string fold_label, fold_out;
    cmd_fold->add_option("--k", fold_k, "2k-gon parameter")->required();
    cmd_fold->add_option("--label", fold_label, "label JSON file (axial class ids)")->required();
    cmd_fold->add_option("--json", fold_out, "output path");

    // ---- pi2 ------------------------------------------------------------
    auto* cmd_pi2 = app.add_subcommand("pi2", "puncture replacement of a (k+1)-gon label");
    int pi2_k = 3;
    std::string pi2_label, pi2_out;
    cmd_pi2->add_option("--k", pi2_k, "half parameter: labels live on the (k+1)-gon")->required();
    cmd_pi2->add_option("--label", pi2_label, "label JSON file ((k+1)-gon class ids)")->required();
    cmd_pi2->add_option("--json", pi2_out, "output path");

    // ---- morse ----------------------------------------------------------
    auto* cmd_morse = app.add_subcommand("morse", "discrete Morse engine on preimage instances");
    auto* morse_pre = cmd_morse->add_subcommand("preimage", "generate an instance and its matching");
    auto* morse_check = cmd_morse->add_subcommand("check", "acyclicity/critical-cell verdict only");
    std::string morse_blocks = "1";
    int morse_q = 1;
    std::string morse_out;
    for (auto* c : {morse_pre, morse_check}) {
        c->add_option("--blocks", morse_blocks, "comma-separated base block sizes, e.g. 2,1");
        c->add_option("--q", morse_q, "corner count of the minimal polygon");
        c->add_option("--json", morse_out, "output path");
    }

    // ---- fiber ----------------------------------------------------------
    auto* cmd_fiber = app.add_subcommand("fiber", "fiber of the forgetful projection over a base cell");
    std::string fiber_base, fiber_ribbon, fiber_out, fiber_dot;
    int fiber_plain_n = 0;
    cmd_fiber->add_option("--base", fiber_base, "base label JSON")->required();
    cmd_fiber->add_option("--ribbon", fiber_ribbon, "ribbon graph JSON (diagonal ids = edge ids)");
    cmd_fiber->add_option("--plain-n", fiber_plain_n, "build the ribbon from the plain n-gon instead");
    cmd_fiber->add_option("--json", fiber_out, "output path");
    cmd_fiber->add_option("--dot", fiber_dot, "write the fiber face poset as DOT");

    // ---- homology --------------------------------------------------------
    auto* cmd_hom = app.add_subcommand("homology", "integer homology of a simplicial complex");
    std::string hom_complex, hom_out;
    bool hom_table = false;
    cmd_hom->add_option("--complex", hom_complex, "complex JSON {\"facets\":[[...]]}")->required();
    cmd_hom->add_flag("--table", hom_table, "print a human-readable table");
    cmd_hom->add_option("--json", hom_out, "output path");

    // ---- verify -----------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "run verification pipelines");
    std::string verify_what = "all";
    int vmax_k = 3, vmax_q = 4;
    std::string verify_out;
    cmd_verify->add_option("what", verify_what, "all");
    cmd_verify->add_option("--max-k", vmax_k, "morse sweep: max base block count");
    cmd_verify->add_option("--max-q", vmax_q, "morse sweep: max corner count");
    cmd_verify->add_option("--out", verify_out, "manifest output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_enum) {
            auto ap = enumerate_case(enum_kind, enum_n, enum_k);
            json j = arrangement_poset_json(ap);
            if (enum_fvec) {
                auto f = graded_f_vector(ap.poset, ap.rank);
                j["f_vector"] = f;
                std::cout << "f-vector:";
                for (int x : f) std::cout << " " << x;
                std::cout << "\n";
            }
            if (!enum_dot_out.empty()) spit(enum_dot_out, ap.poset.dot("D"));
            if (!enum_json_out.empty())
                spit(enum_json_out, j.dump(2) + "\n");
            else if (!enum_fvec)
                std::cout << j.dump(2) << "\n";
            return kExitOk;
        }
        if (*cmd_iso) {
            auto a = enumerate_case(iso_kinds[0], iso_n, iso_k);
            auto b = enumerate_case(iso_kinds[1], iso_n, iso_k);
            auto iso = poset_isomorphism(a.poset, b.poset);
            std::cout << "isomorphic: " << (iso ? "yes" : "no") << "\n";
            return iso ? kExitOk : kExitVerificationFailed;
        }
        if (*cmd_bd) {
            auto ap = enumerate_case(bd_kind, bd_n, bd_k);
            auto bd = bd_complex(ap);
            json j;
            j["n_labels"] = bd.labels.size();
            j["labels"] = json::array();
            for (auto& l : bd.labels) j["labels"].push_back(label_to_json(l));
            j["label_poset"] = poset_to_json(bd.label_poset);
            j["support"] = complex_to_json(bd.support);
            return emit(j, bd_json_out);
        }
        if (*cmd_project) {
            auto punct = PolygonUniverse::punctured(prj_n);
            auto plain = PolygonUniverse::plain(prj_n);
            auto l = label_from_json(json::parse(slurp(prj_label)));
            auto res = project_pi(punct, plain, l);
            json j;
            j["empty"] = res.empty;
            if (!res.empty) j["label"] = label_to_json(res.label);
            j["trace"] = trace_to_json(res.trace);
            return emit(j, prj_out);
        }
        if (*cmd_fold) {
            auto ax = PolygonUniverse::axial(fold_k);
            auto plain = PolygonUniverse::plain(fold_k + 1);
            auto l = label_from_json(json::parse(slurp(fold_label)));
            auto img = half_surgery_pi1(ax, plain, l);
            json j;
            j["label"] = label_to_json(img);
            j["in_image_pi1"] = in_image_pi1(plain, img);
            return emit(j, fold_out);
        }
        if (*cmd_pi2) {
            auto plain = PolygonUniverse::plain(pi2_k + 1);
            auto punct = PolygonUniverse::punctured(pi2_k);
            auto l = label_from_json(json::parse(slurp(pi2_label)));
            auto res = puncture_v_pi2(plain, punct, l);
            json j;
            j["empty"] = res.empty;
            if (!res.empty) j["label"] = label_to_json(res.label);
            j["dropped_at_v"] = res.dropped_at_v;
            return emit(j, pi2_out);
        }
        if (*cmd_morse) {
            std::vector<int> sizes;
            for (std::size_t pos = 0; pos < morse_blocks.size();) {
                std::size_t comma = morse_blocks.find(',', pos);
                sizes.push_back(std::stoi(morse_blocks.substr(pos, comma - pos)));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            auto inst = generate_preimage(sizes, morse_q);
            auto V = thmhalf_matching(inst);
            auto acyc = check_acyclic(inst.complex, V);
            auto crit = V.critical_cells();
            bool crit_ok = crit.size() == 1 &&
                           inst.cells[static_cast<std::size_t>(crit[0])] == thmhalf_expected_critical(inst);
            json j;
            j["n_cells"] = inst.cells.size();
            j["acyclic"] = acyc.acyclic;
            j["critical"] = json::array();
            for (int c : crit) j["critical"].push_back(inst.cells[static_cast<std::size_t>(c)].key());
            j["critical_is_S1_plus_new"] = crit_ok;
            if (*morse_pre) {
                j["cells"] = json::array();
                for (auto& c : inst.cells) j["cells"].push_back(c.key());
                j["matching"] = json::array();
                for (int a = 0; a < static_cast<int>(V.partner.size()); ++a)
                    if (V.partner[a] > a)
                        j["matching"].push_back({inst.cells[static_cast<std::size_t>(a)].key(),
                                                 inst.cells[static_cast<std::size_t>(V.partner[a])].key()});
                auto rep = homology(preimage_simplicial(inst));
                j["homology"] = homology_to_json(rep);
                j["homology_point"] = rep.reduced_trivial();
            }
            emit(j, morse_out);
            return acyc.acyclic && crit_ok ? kExitOk : kExitVerificationFailed;
        }
        if (*cmd_fiber) {
            auto base = label_from_json(json::parse(slurp(fiber_base)));
            FiberComplex fc;
            if (fiber_plain_n > 0) {
                auto plain = PolygonUniverse::plain(fiber_plain_n);
                fc = polygon_fiber(plain, base);
            } else if (!fiber_ribbon.empty()) {
                auto rg = ribbon_from_json(json::parse(slurp(fiber_ribbon)));
                std::map<int, int> edge_to_diag;
                for (int e = 0; e < rg.n_edges(); ++e)
                    if (!rg.edge_is_boundary[e]) edge_to_diag[e] = e;
                fc = fiber_cells(rg, edge_to_diag, base);
            } else {
                throw CLI::ValidationError("fiber: need --ribbon or --plain-n");
            }
            json j;
            j["n_cells"] = fc.cells.size();
            j["cells"] = json::array();
            for (auto& c : fc.cells) {
                json cj;
                cj["key"] = c.key();
                cj["dim"] = c.dim;
                cj["provenance"] = c.provenance;
                j["cells"].push_back(cj);
            }
            json counts = json::array();
            std::map<int, int> per_dim;
            for (int d : fc.complex.dim) per_dim[d]++;
            for (auto& [d, c] : per_dim) counts.push_back({d, c});
            j["cells_per_dim"] = counts;
            j["euler"] = fc.complex.euler_characteristic();
            if (!fiber_dot.empty()) spit(fiber_dot, cell_poset_of(fc.complex).dot("fiber"));
            return emit(j, fiber_out);
        }
        if (*cmd_hom) {
            auto K = complex_from_json(json::parse(slurp(hom_complex)));
            auto rep = homology(K);
            if (hom_table) std::cout << homology_table(rep);
            return emit(homology_to_json(rep), hom_out);
        }
        if (*cmd_verify) {
            if (verify_what != "all") throw CLI::ValidationError("verify: only 'all' is available");
            VerifyOptions opt;
            opt.max_k = vmax_k;
            opt.max_q = vmax_q;
            opt.seed = seed;
            opt.threads = env_threads();
            Stopwatch sw;
            auto results = verify_all(opt);
            RunManifest man;
            man.command = "verify all";
            man.parameters["max_k"] = vmax_k;
            man.parameters["max_q"] = vmax_q;
            man.parameters["seed"] = seed;
            bool all_pass = true;
            for (auto& r : results) {
                man.add_verdict(r.name, r.pass, r.detail);
                all_pass = all_pass && r.pass;
                std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name
                          << (r.detail.empty() || r.pass ? "" : "  [" + r.detail + "]") << "\n";
            }
            man.wall_time_ms = sw.ms();
            std::string bytes = man.to_json().dump(2) + "\n";
            man.add_output("manifest", bytes);
            if (!verify_out.empty()) spit(verify_out, bytes);
            std::cerr << "wall time: " << man.wall_time_ms << " ms\n";
            std::cout << (all_pass ? "verify all: PASS" : "verify all: FAIL") << "\n";
            return all_pass ? kExitOk : kExitVerificationFailed;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitUsage;
}
