// dwm: calculator for untwisted Dijkgraaf-Witten invariants and motion-group
// representations of links. Subcommands emit deterministic JSON reports.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dw/characters.hpp"
#include "dw/dwrep.hpp"
#include "dw/group.hpp"
#include "dw/hom.hpp"
#include "dw/motion.hpp"
#include "dw/simplicial.hpp"
#include "dw/word.hpp"

using json = nlohmann::ordered_json;
using namespace dw;

namespace {

constexpr const char* kVersion = "dwm 0.1.0";

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

json report_envelope(const std::vector<std::string>& argv_echo) {
    json r;
    std::string cmd;
    for (const auto& a : argv_echo) cmd += (cmd.empty() ? "" : " ") + a;
    r["command"] = cmd;
    r["version"] = kVersion;
    r["input_digest"] = fnv1a(cmd);
    r["conventions"] = {
        {"canonical_class_form", "lexicographic minimum of the image tuple over the conjugation orbit"},
        {"act_direction", "class of phi maps to class of phi o f^{-1}; act_pre is plain precomposition"},
        {"element_indexing", "identity is index 0; constructors use a fixed deterministic order"}};
    return r;
}

std::string cycles(const std::vector<int>& perm) {
    std::string s;
    std::vector<char> seen(perm.size(), 0);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i] || perm[i] == (int)i) continue;
        s += '(';
        size_t x = i;
        bool first = true;
        while (!seen[x]) {
            seen[x] = 1;
            if (!first) s += ' ';
            first = false;
            s += std::to_string(x);
            x = perm[x];
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

Elt parse_elt(const FiniteGroup& G, const std::string& label) {
    auto e = G.element_by_label(label);
    if (!e) throw Error("unknown element label '" + label + "' in " + G.name());
    return *e;
}

FluxLabel parse_flux(const FiniteGroup& G, const std::string& flux) {
    auto comma = flux.find(',');
    if (comma == std::string::npos) throw Error("flux must be g,h");
    return {parse_elt(G, flux.substr(0, comma)), parse_elt(G, flux.substr(comma + 1))};
}

json hom_json(const FiniteGroup& G, const Hom& h) {
    json a = json::array();
    for (Elt x : h.images) a.push_back(G.label(x));
    return a;
}

Presentation surface_presentation(const std::string& name) {
    if (name == "circle") return circle_presentation();
    if (name == "sphere") return sphere_presentation();
    if (name == "torus") return torus_presentation(2);
    if (name == "t3") return torus_presentation(3);
    throw Error("unknown surface '" + name + "' (circle|sphere|torus|t3)");
}

std::vector<NamedEndo> surface_mcg_generators(const std::string& name) {
    if (name == "circle") return circle_flip_generator();
    if (name == "torus") return torus_ST_generators();
    if (name == "t3") return t3_ST_generators();
    return {};
}

Endomorphism endo_from_file(const std::string& path, const Presentation& P) {
    // one line per generator: name: token token ...
    std::istringstream in(read_file(path));
    Endomorphism e;
    e.images.resize(P.num_generators());
    std::vector<char> set(P.num_generators(), 0);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw Error("endo file: expected 'name: word'");
        std::string name = line.substr(0, colon);
        name.erase(remove_if(name.begin(), name.end(), ::isspace), name.end());
        int g = P.index_of(name);
        if (g < 0) throw Error("endo file: unknown generator '" + name + "'");
        e.images[g] = parse_word(line.substr(colon + 1), P.generator_names);
        set[g] = 1;
    }
    for (int g = 0; g < P.num_generators(); ++g)
        if (!set[g]) e.images[g] = Word::gen(g);
    return e;
}

int emit(const json& r, bool verified_ok) {
    std::cout << r.dump(2) << std::endl;
    return verified_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> argv_echo(argv, argv + argc);
    CLI::App app{"Dijkgraaf-Witten invariants and motion-group representations"};
    app.require_subcommand(1);

    // group <spec> [classes|centralizer <elt>]
    auto* cmd_group = app.add_subcommand("group", "group construction and conjugacy data");
    std::string g_spec, g_action, g_elt;
    cmd_group->add_option("spec", g_spec)->required();
    cmd_group->add_option("action", g_action)->check(CLI::IsMember({"classes", "centralizer"}));
    cmd_group->add_option("elt", g_elt);

    // homs --group --pres [--classes]
    auto* cmd_homs = app.add_subcommand("homs", "enumerate Hom(pi1, G)");
    std::string h_group, h_pres;
    bool h_classes = false;
    cmd_homs->add_option("--group", h_group)->required();
    cmd_homs->add_option("--pres", h_pres)->required();
    cmd_homs->add_flag("--classes", h_classes);

    // dw space|labels|dimred|colorings
    auto* cmd_dw = app.add_subcommand("dw", "DW vector spaces and verifications");
    cmd_dw->require_subcommand(1);
    auto* dw_space_cmd = cmd_dw->add_subcommand("space", "hom-class basis of V_G");
    std::string s_group, s_pres, s_surface;
    dw_space_cmd->add_option("--group", s_group)->required();
    dw_space_cmd->add_option("--pres", s_pres);
    dw_space_cmd->add_option("--surface", s_surface);
    auto* dw_labels_cmd = cmd_dw->add_subcommand("labels", "label-set count");
    std::string l_group, l_surface;
    dw_labels_cmd->add_option("--group", l_group)->required();
    dw_labels_cmd->add_option("--surface", l_surface)->required();
    auto* dw_dimred_cmd = cmd_dw->add_subcommand("dimred", "Thm-1 assembly verification");
    std::string dr_group, dr_surface, dr_endo;
    dw_dimred_cmd->add_option("--group", dr_group)->required();
    dw_dimred_cmd->add_option("--surface", dr_surface)->required();
    dw_dimred_cmd->add_option("--check-intertwiner", dr_endo);
    auto* dw_col_cmd = cmd_dw->add_subcommand("colorings", "state-sum coloring counts");
    std::string c_group, c_tri, c_boundary;
    bool c_lemma1 = false, c_idem = false;
    dw_col_cmd->add_option("--group", c_group)->required();
    dw_col_cmd->add_option("--tri", c_tri)->required();
    dw_col_cmd->add_option("--boundary", c_boundary);
    dw_col_cmd->add_flag("--verify-lemma1", c_lemma1);
    dw_col_cmd->add_flag("--verify-idempotent", c_idem);

    // motion rep|psi|thm2|necklace
    auto* cmd_motion = app.add_subcommand("motion", "motion-group representations");
    cmd_motion->require_subcommand(1);
    auto* m_rep = cmd_motion->add_subcommand("rep", "pure-flux permutation representation");
    std::string mr_link, mr_group, mr_flux, mr_axis;
    bool mr_emit = false, mr_verify = false;
    m_rep->add_option("--link", mr_link)->required();
    m_rep->add_option("--group", mr_group)->required();
    m_rep->add_option("--flux", mr_flux)->required();
    m_rep->add_option("--axis", mr_axis);
    m_rep->add_flag("--emit-permutations", mr_emit);
    m_rep->add_flag("--verify-relations", mr_verify);
    auto* m_psi = cmd_motion->add_subcommand("psi", "block bijection verification");
    std::string mp_link, mp_group, mp_flux, mp_block;
    m_psi->add_option("--link", mp_link)->required();
    m_psi->add_option("--group", mp_group)->required();
    m_psi->add_option("--flux", mp_flux)->required();
    m_psi->add_option("--block", mp_block);
    auto* m_thm2 = cmd_motion->add_subcommand("thm2", "torus-link decomposition");
    std::string t2_link, t2_group, t2_flux;
    m_thm2->add_option("--link", t2_link)->required();
    m_thm2->add_option("--group", t2_group)->required();
    m_thm2->add_option("--flux", t2_flux)->required();
    auto* m_neck = cmd_motion->add_subcommand("necklace", "necklace diagram check");
    std::string nk_group, nk_labels;
    int nk_n = 2;
    m_neck->add_option("--group", nk_group)->required();
    m_neck->add_option("--n", nk_n)->required();
    m_neck->add_option("--labels", nk_labels)->required();  // g,gc,hc

    // chars verify --d --p [--csv]
    auto* cmd_chars = app.add_subcommand("chars", "character identities");
    cmd_chars->require_subcommand(1);
    auto* ch_verify = cmd_chars->add_subcommand("verify", "fixed points vs table decomposition");
    int ch_d = 2, ch_p = 3;
    bool ch_csv = false;
    ch_verify->add_option("--d", ch_d)->required();
    ch_verify->add_option("--p", ch_p)->required();
    ch_verify->add_flag("--csv", ch_csv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        json r = report_envelope(argv_echo);

        if (*cmd_group) {
            FiniteGroup G = make_group(g_spec);
            json res;
            res["name"] = G.name();
            res["order"] = G.order();
            if (g_action == "classes") {
                auto cc = conjugacy_classes(G);
                res["class_count"] = (int)cc.classes.size();
                json arr = json::array();
                for (size_t i = 0; i < cc.classes.size(); ++i)
                    arr.push_back({{"rep", G.label(cc.rep[i])}, {"size", cc.classes[i].size()}});
                res["classes"] = arr;
            } else if (g_action == "centralizer") {
                if (g_elt.empty()) throw Error("centralizer needs an element label");
                auto cen = centralizer(G, {parse_elt(G, g_elt)});
                res["centralizer_order"] = (int)cen.size();
                json arr = json::array();
                for (Elt e : cen) arr.push_back(G.label(e));
                res["centralizer"] = arr;
            }
            r["result"] = res;
            return emit(r, true);
        }

        if (*cmd_homs) {
            FiniteGroup G = make_group(h_group);
            Presentation P = parse_presentation(read_file(h_pres));
            auto homs = enumerate_homs(P, G);
            json res;
            res["group"] = G.name();
            res["generators"] = P.generator_names;
            res["homs"] = (int)homs.size();
            if (h_classes) {
                auto cls = classes(homs, G);
                res["classes"] = (int)cls.size();
                json arr = json::array();
                for (const auto& c : cls)
                    arr.push_back({{"rep", hom_json(G, c.canonical)}, {"orbit", c.orbit_size}});
                res["class_list"] = arr;
            }
            r["result"] = res;
            return emit(r, true);
        }

        if (*dw_space_cmd) {
            FiniteGroup G = make_group(s_group);
            Presentation P = s_pres.empty() ? surface_presentation(s_surface)
                                            : parse_presentation(read_file(s_pres));
            DWSpace S = dw_space(P, G);
            json res;
            res["group"] = G.name();
            res["dim"] = S.dim();
            json arr = json::array();
            for (const auto& c : S.basis)
                arr.push_back({{"rep", hom_json(G, c.canonical)}, {"orbit", c.orbit_size}});
            res["basis"] = arr;
            r["result"] = res;
            return emit(r, true);
        }

        if (*dw_labels_cmd) {
            FiniteGroup G = make_group(l_group);
            auto L = count_labels(surface_presentation(l_surface), G);
            json res;
            res["group"] = G.name();
            res["surface"] = l_surface;
            res["count"] = L.total;
            json arr = json::array();
            for (const auto& row : L.rows)
                arr.push_back({{"class_rep", hom_json(G, row.class_rep)},
                               {"centralizer_order", row.centralizer_order},
                               {"irreps", row.irreps}});
            res["breakdown"] = arr;
            r["result"] = res;
            return emit(r, true);
        }

        if (*dw_dimred_cmd) {
            FiniteGroup G = make_group(dr_group);
            Presentation P = surface_presentation(dr_surface);
            auto A = assemble_dimension_reduction(P, G);
            json res;
            res["group"] = G.name();
            res["surface"] = dr_surface;
            res["lhs_dim"] = A.lhs_dim;
            res["rhs_dim"] = A.target.dim();
            res["bijective"] = A.bijective;
            json blocks = json::array();
            for (size_t b = 0; b < A.class_reps.size(); ++b)
                blocks.push_back({{"class_rep", G.label(A.class_reps[b])},
                                  {"dim", (int)A.block_basis[b].size()}});
            res["blocks"] = blocks;
            bool ok = A.bijective;
            if (!dr_endo.empty()) {
                auto f = endo_from_file(dr_endo, P);
                auto I = verify_intertwiner(P, G, f);
                res["intertwiner_ok"] = I.ok;
                ok = ok && I.ok;
            } else if (!surface_mcg_generators(dr_surface).empty()) {
                json inter = json::array();
                for (const auto& [name, f] : surface_mcg_generators(dr_surface)) {
                    auto I = verify_intertwiner(P, G, f);
                    inter.push_back({{"generator", name}, {"ok", I.ok}});
                    ok = ok && I.ok;
                }
                res["intertwiner"] = inter;
            }
            r["result"] = res;
            return emit(r, ok);
        }

        if (*dw_col_cmd) {
            FiniteGroup G = make_group(c_group);
            Triangulation T = triangulation_from_json(read_file(c_tri));
            json res;
            res["group"] = G.name();
            res["vertices"] = T.vertex_count;
            res["edges"] = (int)T.edges.size();
            res["triangles"] = (int)T.triangles.size();
            bool ok = true;
            std::optional<BoundaryColoring> tau;
            if (!c_boundary.empty())
                tau = boundary_coloring_from_json(read_file(c_boundary), G);
            auto Z = partition_function(T, G, tau);
            res["colorings"] = Z.count;
            res["half_exponent"] = Z.half_exponent;
            res["z_approx"] = Z.approx();
            if (c_lemma1) {
                auto L = verify_lemma1(T, G);
                res["lemma1"] = {{"colorings", L.colorings},
                                 {"hom_count", L.hom_count},
                                 {"expected", L.expected},
                                 {"ok", L.ok}};
                ok = ok && L.ok;
            }
            if (c_idem) {
                if (!T.triangles.empty())
                    throw Error("--verify-idempotent expects a triangulated circle fixture");
                int n = T.vertex_count;
                Triangulation YI = annulus_triangulation(n);
                std::vector<int> bottom(n), top(n);
                for (int i = 0; i < n; ++i) {
                    bottom[i] = i;
                    top[i] = i + n;
                }
                auto I = verify_idempotent_blocks(T, YI, bottom, top, G);
                res["idempotent"] = {{"dim", I.dim},
                                     {"blocks", I.blocks},
                                     {"block_diagonal", I.block_diagonal},
                                     {"idempotent", I.idempotent}};
                ok = ok && I.ok();
            }
            r["result"] = res;
            return emit(r, ok);
        }

        if (*m_rep) {
            FiniteGroup G = make_group(mr_group);
            LinkFamily L = LinkFamily::parse(mr_link);
            FluxLabel flux = parse_flux(G, mr_flux);
            std::optional<FluxLabel> axis;
            if (!mr_axis.empty()) axis = parse_flux(G, mr_axis);
            auto R = motion_rep(L, G, flux, axis);
            json res;
            res["link"] = L.to_string();
            res["group"] = G.name();
            res["dim"] = R.space.dim();
            json basis = json::array();
            for (const auto& c : R.space.basis) basis.push_back(hom_json(G, c.canonical));
            res["basis"] = basis;
            if (mr_emit) {
                json perms;
                for (size_t i = 0; i < R.rep.names.size(); ++i)
                    perms[R.rep.names[i]] = cycles(R.rep.perms[i]);
                res["permutations"] = perms;
            }
            bool ok = true;
            if (mr_verify) {
                if (L.kind != LinkFamily::Kind::Torus)
                    throw Error("--verify-relations applies to torus links");
                auto mp = motion_presentation(motion_family(L.p, L.q), L.n);
                auto V = verify_motion_relations(R.rep, mp);
                json rel = json::array();
                for (const auto& [label, good] : V.results)
                    rel.push_back({{"relator", label}, {"ok", good}});
                res["relations"] = rel;
                res["all_relations_ok"] = V.all_ok;
                ok = V.all_ok;
            }
            r["result"] = res;
            return emit(r, ok);
        }

        if (*m_psi) {
            FiniteGroup G = make_group(mp_group);
            LinkFamily L = LinkFamily::parse(mp_link);
            if (L.kind != LinkFamily::Kind::Torus) throw Error("psi applies to torus links");
            FluxLabel flux = parse_flux(G, mp_flux);
            std::vector<std::pair<Elt, Elt>> blocks;
            if (!mp_block.empty()) {
                auto f = parse_flux(G, mp_block);
                blocks.push_back({f.g, f.h});
            } else {
                blocks = nonempty_blocks(G, L.p, L.q, L.n, flux);
            }
            json arr = json::array();
            bool ok = true;
            for (auto b : blocks) {
                auto rep = psi_bijection(G, L.p, L.q, L.n, flux, b);
                arr.push_back({{"class_x", G.label(rep.class_x)},
                               {"class_y", G.label(rep.class_y)},
                               {"s_dim", rep.s_dim},
                               {"f_dim", rep.f_dim},
                               {"well_defined", rep.well_defined},
                               {"injective", rep.injective},
                               {"surjective", rep.surjective},
                               {"natural", rep.natural}});
                ok = ok && rep.ok();
            }
            json res;
            res["link"] = L.to_string();
            res["group"] = G.name();
            res["blocks"] = arr;
            r["result"] = res;
            return emit(r, ok);
        }

        if (*m_thm2) {
            FiniteGroup G = make_group(t2_group);
            LinkFamily L = LinkFamily::parse(t2_link);
            if (L.kind != LinkFamily::Kind::Torus) throw Error("thm2 applies to torus links");
            FluxLabel flux = parse_flux(G, t2_flux);
            auto T = thm2_decomposition(G, L.p, L.q, L.n, flux);
            json res;
            res["link"] = L.to_string();
            res["group"] = G.name();
            res["lhs_dim"] = T.lhs_dim;
            res["rhs_total"] = T.rhs_total;
            res["u"] = T.u;
            res["v"] = T.v;
            json arr = json::array();
            for (const auto& b : T.blocks)
                arr.push_back({{"class_x", G.label(b.class_x)},
                               {"class_y", G.label(b.class_y)},
                               {"s_dim", b.s_dim},
                               {"f_dim", b.f_dim},
                               {"ok", b.ok()}});
            res["blocks"] = arr;
            res["ok"] = T.ok;
            r["result"] = res;
            return emit(r, T.ok);
        }

        if (*m_neck) {
            FiniteGroup G = make_group(nk_group);
            std::istringstream in(nk_labels);
            std::string a, b, c;
            if (!std::getline(in, a, ',') || !std::getline(in, b, ',') || !std::getline(in, c, ','))
                throw Error("necklace labels must be g,gc,hc");
            auto rep = necklace_T_check(G, nk_n, parse_elt(G, a), parse_elt(G, b), parse_elt(G, c));
            json res;
            res["group"] = G.name();
            res["n"] = nk_n;
            res["dim_link"] = rep.dim_link;
            res["dim_disk"] = rep.dim_disk;
            res["bijection"] = rep.bijection;
            res["squares_commute"] = rep.squares_commute;
            res["images_equal"] = rep.images_equal;
            r["result"] = res;
            return emit(r, rep.ok());
        }

        if (*ch_verify) {
            auto rep = verify_character_identity(ch_d, ch_p);
            if (ch_csv) {
                std::cout << "tag,params,lhs,rhs_re,rhs_im,residual\n";
                for (const auto& row : rep.rows) {
                    std::string ps;
                    for (size_t i = 0; i < row.point.params.size(); ++i)
                        ps += (i ? ";" : "") + std::to_string(row.point.params[i]);
                    std::printf("%s,%s,%lld,%.12g,%.12g,%.3g\n", row.point.tag.c_str(), ps.c_str(),
                                row.lhs, row.rhs.real(), row.rhs.imag(), row.residual);
                }
                return rep.ok ? 0 : 1;
            }
            json res;
            res["d"] = ch_d;
            res["p"] = ch_p;
            res["group_order"] = rep.group_order;
            res["classes"] = rep.class_count;
            res["max_residual"] = rep.max_residual;
            res["coverage_ok"] = rep.coverage_ok;
            res["ok"] = rep.ok;
            json rows = json::array();
            for (const auto& row : rep.rows)
                rows.push_back({{"tag", row.point.tag},
                                {"params", row.point.params},
                                {"lhs", row.lhs},
                                {"rhs_re", row.rhs.real()},
                                {"rhs_im", row.rhs.imag()},
                                {"residual", row.residual}});
            res["rows"] = rows;
            r["result"] = res;
            return emit(r, rep.ok);
        }

        throw Error("no subcommand handled");
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
}
