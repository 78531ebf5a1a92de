// Batch front end for the Belavin-Drinfeld / orders toolkit.

#include "bdq/json_io.hpp"
#include "bdq/rmatrix.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <fstream>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace bdq;

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    throw invalid("unknown format: " + s);
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

std::string triple_text(const AdmissibleTriple& t) {
    std::string s = "G1={";
    for (size_t k = 0; k < t.g1.size(); ++k) s += (k ? "," : "") + std::to_string(t.g1[k]);
    s += "} G2={";
    for (size_t k = 0; k < t.g2.size(); ++k) s += (k ? "," : "") + std::to_string(t.g2[k]);
    s += "} tau:";
    for (size_t k = 0; k < t.g1.size(); ++k)
        s += (k ? "," : "") + std::to_string(t.g1[k]) + ">" + std::to_string(t.tau[k]);
    return s;
}

std::string torsion_text(const CentralizerShape& s) {
    std::string out = "[";
    for (size_t k = 0; k < s.torsion.size(); ++k)
        out += (k ? "," : "") + s.torsion[k].get_str();
    return out + "]";
}

struct Options {
    Format format = Format::Text;
    int rank_guard = kDefaultRankGuard;
};

void emit_triples(const std::vector<AdmissibleTriple>& ts, Format f, bool count_only) {
    if (count_only) {
        std::cout << ts.size() << "\n";
        return;
    }
    switch (f) {
    case Format::Json: {
        for (auto& t : ts) std::cout << triple_to_json(t).dump() << "\n";
        break;
    }
    case Format::Csv:
        std::cout << "gamma1;gamma2;tau\n";
        for (auto& t : ts) {
            Json j = triple_to_json(t);
            std::cout << j["gamma1"].dump() << ";" << j["gamma2"].dump() << ";" << j["tau"].dump()
                      << "\n";
        }
        break;
    case Format::Text:
        for (auto& t : ts) std::cout << triple_text(t) << "\n";
        break;
    }
}

void emit_report(const std::vector<ReportRow>& rows, Format f) {
    switch (f) {
    case Format::Json:
        for (auto& r : rows) std::cout << report_row_to_json(r).dump() << "\n";
        break;
    case Format::Csv:
        std::cout << "gamma1;gamma2;tau;strings;torusRank;torsion\n";
        for (auto& r : rows) {
            Json j = triple_to_json(r.triple);
            std::cout << j["gamma1"].dump() << ";" << j["gamma2"].dump() << ";" << j["tau"].dump()
                      << ";" << strings_to_json(r.strs).dump() << ";" << r.shape.torusRank << ";"
                      << torsion_text(r.shape) << "\n";
        }
        break;
    case Format::Text:
        for (auto& r : rows) {
            std::cout << triple_text(r.triple) << "  strings=" << strings_to_json(r.strs).dump()
                      << "  rank=" << r.shape.torusRank << "  torsion=" << torsion_text(r.shape)
                      << (r.shape.connected() ? "  connected" : "  DISCONNECTED") << "\n";
        }
        break;
    }
}

CharacterLattice lattice_from_arg(SimpleType type, const std::string& arg) {
    if (arg == "Q") return root_coordinates(type, LatticeTag::Q);
    if (arg == "P") return root_coordinates(type, LatticeTag::P);
    return root_coordinates(type, intmat_from_json(read_json_file(arg)));
}

int run(int argc, char** argv) {
    CLI::App app{"Exact Belavin-Drinfeld triples, centralizers, r-matrices, double cosets "
                 "and orders over C((t))"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", [&](const std::vector<std::string>& v) {
        opt.format = parse_format(v.back());
        return true;
    }, "Output format: json|csv|text");
    app.add_option("--max-rank", opt.rank_guard, "Enumeration rank guard (default 8)");

    if (const char* env = std::getenv("BDQ_WORKERS")) {
#ifdef _OPENMP
        int w = std::atoi(env);
        if (w > 0) omp_set_num_threads(w);
#endif
    }

    // triples enumerate
    auto* triples = app.add_subcommand("triples", "Admissible triples");
    auto* tenum = triples->add_subcommand("enumerate", "Enumerate admissible triples");
    std::string type_label;
    bool nonempty = false, orbits = false, count_only = false, collapse = false;
    tenum->add_option("--type", type_label, "Simple type, e.g. A2, E6")->required();
    tenum->add_flag("--nonempty", nonempty, "Exclude the empty triple");
    tenum->add_flag("--orbits", orbits, "Group into Out(g)-orbits");
    tenum->add_flag("--count", count_only, "Print the count only");
    tenum->add_flag("--collapse-mirrors", collapse, "Keep one of each mirror pair");
    tenum->callback([&] {
        SimpleType type = SimpleType::parse(type_label);
        auto ts = enumerate_triples(type, !nonempty, opt.rank_guard);
        if (collapse) ts = collapse_mirrors(ts);
        if (orbits) {
            auto orbs = orbits_under_out(ts);
            if (count_only) {
                std::cout << orbs.size() << "\n";
                return;
            }
            for (size_t k = 0; k < orbs.size(); ++k) {
                if (opt.format == Format::Json) {
                    Json j;
                    j["orbit"] = static_cast<int>(k);
                    j["size"] = orbs[k].size();
                    j["representative"] = triple_to_json(orbs[k].front());
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "orbit " << k << " size " << orbs[k].size() << " rep "
                              << triple_text(orbs[k].front()) << "\n";
                }
            }
            return;
        }
        emit_triples(ts, opt.format, count_only);
    });

    // centralizer
    auto* cent = app.add_subcommand("centralizer", "Centralizer shapes C(G_X, r_BD)");
    std::string cent_type, cent_lattice = "Q", cent_triple;
    bool cent_all = false;
    cent->add_option("--type", cent_type, "Simple type")->required();
    cent->add_option("--lattice", cent_lattice, "Q, P, or a JSON basis file");
    cent->add_option("--triple", cent_triple, "Triple as JSON");
    cent->add_flag("--all", cent_all, "All admissible triples");
    cent->callback([&] {
        SimpleType type = SimpleType::parse(cent_type);
        CharacterLattice lat = lattice_from_arg(type, cent_lattice);
        std::vector<AdmissibleTriple> ts;
        if (cent_all) {
            ts = enumerate_triples(type, true, opt.rank_guard);
        } else {
            if (cent_triple.empty()) throw invalid("need --triple or --all");
            AdmissibleTriple t = triple_from_json(Json::parse(cent_triple));
            if (t.type != type) throw invalid("triple type mismatch");
            if (!is_admissible(t)) throw invalid("triple is not admissible");
            ts.push_back(t);
        }
        emit_report(centralizer_report(ts, lat), opt.format);
    });

    // report exceptional
    auto* report = app.add_subcommand("report", "Aggregated tables");
    auto* exc = report->add_subcommand("exceptional", "E6/E7 centralizer survey");
    std::string exc_type, exc_lattice = "P";
    exc->add_option("--type", exc_type, "E6 or E7")->required();
    exc->add_option("--lattice", exc_lattice, "Q, P, or a JSON basis file");
    exc->callback([&] {
        SimpleType type = SimpleType::parse(exc_type);
        CharacterLattice lat = lattice_from_arg(type, exc_lattice);
        auto rows = exceptional_report(type, lat);
        emit_report(rows, opt.format);
        int disconnected = 0;
        for (auto& r : rows)
            if (!r.shape.connected()) ++disconnected;
        std::cerr << "triples " << rows.size() << ", disconnected " << disconnected << "\n";
    });

    // twisted
    auto* twisted = app.add_subcommand("twisted", "Twistability");
    auto* tcheck = twisted->add_subcommand("check", "Check one triple");
    std::string tw_type, tw_triple;
    tcheck->add_option("--type", tw_type, "Simple type")->required();
    tcheck->add_option("--triple", tw_triple, "Triple as JSON")->required();
    tcheck->callback([&] {
        SimpleType type = SimpleType::parse(tw_type);
        AdmissibleTriple t = triple_from_json(Json::parse(tw_triple));
        if (t.type != type) throw invalid("triple type mismatch");
        if (!is_admissible(t)) throw invalid("triple is not admissible");
        TwistCheck c;
        c.discreteOk = discrete_twistable(t);
        if (c.discreteOk) c = continuous_space_twisted(t);
        if (opt.format == Format::Json) {
            std::cout << twistcheck_to_json(c).dump() << "\n";
        } else {
            std::cout << "discrete " << (c.discreteOk ? "ok" : "fail");
            if (c.discreteOk) std::cout << ", continuous dim " << c.continuousDim;
            std::cout << "\n";
        }
    });
    auto* tlist = twisted->add_subcommand("list", "Discrete-twistable triples");
    std::string tl_type;
    tlist->add_option("--type", tl_type, "E6, D5, D7, ...")->required();
    tlist->callback([&] {
        SimpleType type = SimpleType::parse(tl_type);
        std::vector<AdmissibleTriple> out;
        if (type.family == Family::E && type.rank == 6) {
            out = e6_twisted_list();
        } else if (type.family == Family::D && type.rank % 2 == 1) {
            out = d_odd_twisted_families(type.rank);
        } else {
            for (auto& t : enumerate_triples(type, false, opt.rank_guard))
                if (discrete_twistable(t)) out.push_back(t);
        }
        emit_triples(out, opt.format, false);
        std::cerr << out.size() << " triples\n";
    });

    // rmatrix verify
    auto* rmat = app.add_subcommand("rmatrix", "Explicit sl(n) r-matrices");
    auto* rver = rmat->add_subcommand("verify", "Build and verify a BD r-matrix");
    int rm_n = 0;
    std::string rm_triple, rm_r0;
    rver->add_option("--n", rm_n, "2, 3 or 4")->required();
    rver->add_option("--triple", rm_triple, "Triple as JSON (type A_{n-1})");
    rver->add_option("--r0", rm_r0, "JSON file with the continuous parameter matrix");
    rver->callback([&] {
        if (rm_n < 2 || rm_n > 4) throw invalid("--n must be 2, 3 or 4");
        SimpleType type{Family::A, rm_n - 1};
        AdmissibleTriple t;
        t.type = type;
        if (!rm_triple.empty()) {
            t = triple_from_json(Json::parse(rm_triple));
            if (t.type != type) throw invalid("triple type mismatch");
        }
        if (!is_admissible(t)) throw invalid("triple is not admissible");
        QMat r0;
        if (!rm_r0.empty()) {
            r0 = qmat_from_json(read_json_file(rm_r0));
        } else {
            auto sp = continuous_space_nontwisted(t);
            if (sp.dim < 0) throw invalid("no continuous parameter exists");
            r0 = sp.witness->c;
        }
        Tensor2 r = build_rbd(t, r0);
        bool ok = verify_rmatrix(r, rm_n);
        if (opt.format == Format::Json) {
            Json j;
            j["rmatrix_ok"] = ok;
            j["r0"] = qmat_to_json(r0);
            j["r"] = tensor2_to_json(r);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << (ok ? "r-matrix verified: CYB(r) = 0 and r + r21 = Omega"
                             : "verification FAILED")
                      << "\n";
        }
        if (!ok) std::exit(1);
    });

    // coset
    auto* coset = app.add_subcommand("coset", "GL(n,O) \\ GL(n,K) / Diag(n,K) canonical forms");
    auto* cred = coset->add_subcommand("reduce", "Reduce a matrix to its canonical form");
    int co_n = 0;
    std::string co_matrix;
    cred->add_option("--n", co_n, "2 or 3")->required();
    cred->add_option("--matrix", co_matrix, "JSON file with the matrix")->required();
    cred->callback([&] {
        MatK m = matk_from_json(read_json_file(co_matrix));
        if (co_n == 2) {
            CosetForm2 f = reduce_gl2(m);
            if (opt.format == Format::Json)
                std::cout << coset2_to_json(f).dump() << "\n";
            else
                std::cout << "T_" << f.i << "\n";
        } else if (co_n == 3) {
            CosetForm3 f = reduce_gl3(m);
            if (opt.format == Format::Json)
                std::cout << coset3_to_json(f).dump() << "\n";
            else
                std::cout << "T_{" << f.i << "," << f.j << "}(" << f.q.str() << ")\n";
        } else {
            throw invalid("--n must be 2 or 3");
        }
    });
    auto* csame = coset->add_subcommand("same", "Decide double-coset equality of two forms");
    std::string form1, form2;
    csame->add_option("--form1", form1, "i,j,q")->required();
    csame->add_option("--form2", form2, "i,j,q")->required();
    csame->callback([&] {
        bool same = same_coset_gl3(coset3_from_string(form1), coset3_from_string(form2));
        if (opt.format == Format::Json) {
            Json j;
            j["same"] = same;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << (same ? "same coset" : "different cosets") << "\n";
        }
    });

    // orders
    auto* orders = app.add_subcommand("orders", "Orders in K^2, L, K^3, K+L");
    auto* oenum = orders->add_subcommand("enumerate", "Suborder classes of given index");
    std::string oalg;
    int oindex = 0;
    oenum->add_option("--algebra", oalg, "K3 or KL")->required();
    oenum->add_option("--index", oindex, "Index n >= 0")->required();
    oenum->callback([&] {
        Json arr = Json::array();
        if (oalg == "K3") {
            for (auto& c : enumerate_suborders_K3(oindex)) {
                Json j;
                j["tag"] = (c.tag == K3Tag::Maximal ? "Maximal"
                            : c.tag == K3Tag::Lk    ? "Lk"
                                                    : "Lkl");
                j["k"] = c.k;
                j["l"] = c.l;
                j["gorenstein"] = is_gorenstein(c);
                arr.push_back(j);
            }
        } else if (oalg == "KL") {
            for (auto& c : enumerate_suborders_KL(oindex)) {
                Json j;
                j["tag"] = (c.tag == KLTag::Maximal   ? "Maximal"
                            : c.tag == KLTag::Lk      ? "Lk"
                            : c.tag == KLTag::L1Prime ? "L1Prime"
                            : c.tag == KLTag::Lkl     ? "Lkl"
                                                      : "LkPrimeSeries");
                j["k"] = c.k;
                j["l"] = c.l;
                j["gorenstein"] = is_gorenstein(c);
                arr.push_back(j);
            }
        } else {
            throw invalid("--algebra must be K3 or KL");
        }
        if (opt.format == Format::Json) {
            for (auto& j : arr) std::cout << j.dump() << "\n";
        } else if (opt.format == Format::Csv) {
            std::cout << "tag;k;l;gorenstein\n";
            for (auto& j : arr)
                std::cout << j["tag"].get<std::string>() << ";" << j["k"] << ";" << j["l"] << ";"
                          << (j["gorenstein"].get<bool>() ? 1 : 0) << "\n";
        } else {
            for (auto& j : arr)
                std::cout << j["tag"].get<std::string>() << " k=" << j["k"] << " l=" << j["l"]
                          << (j["gorenstein"].get<bool>() ? " (Gorenstein)" : "") << "\n";
        }
    });
    auto* oclass = orders->add_subcommand("classify", "Classify an order in K^2 or L");
    std::string oc_alg, oc_basis;
    oclass->add_option("--algebra", oc_alg, "K2 or L")->required();
    oclass->add_option("--basis", oc_basis, "JSON file with the basis")->required();
    oclass->callback([&] {
        Json j = read_json_file(oc_basis);
        int k;
        if (oc_alg == "K2") {
            k = classify_order_K2(matk_from_json(j));
        } else if (oc_alg == "L") {
            if (!j.is_array() || j.size() != 2) throw invalid("L basis needs two elements");
            auto parse_ext = [](const Json& e) {
                Ext x;
                if (e.contains("even")) x.even = laurent_from_json(e.at("even"));
                if (e.contains("odd")) x.odd = laurent_from_json(e.at("odd"));
                return x;
            };
            k = classify_order_L(parse_ext(j.at(0)), parse_ext(j.at(1)));
        } else {
            throw invalid("--algebra must be K2 or L");
        }
        if (opt.format == Format::Json) {
            Json out;
            out["n"] = k;
            std::cout << out.dump() << "\n";
        } else {
            std::cout << k << "\n";
        }
    });

    // cubic
    auto* cubic = app.add_subcommand("cubic", "Cubic rings from index forms");
    std::string cu_form;
    auto add_form_cmd = [&](const char* name, const char* desc, auto handler) {
        auto* sub = cubic->add_subcommand(name, desc);
        sub->add_option("--form", cu_form, "a,b,c,d as Laurent literals")->required();
        sub->callback([&, handler] { handler(form_from_string(cu_form)); });
        return sub;
    };
    add_form_cmd("table", "Multiplication table", [&](const IndexForm& f) {
        CubicRing r = cubic_from_index_form(f);
        auto triple = [&](const std::array<Laurent, 3>& v) {
            Json j = Json::array();
            for (auto& x : v) j.push_back(x.str());
            return j;
        };
        Json j;
        j["omega*theta"] = triple(r.omega_theta);
        j["omega^2"] = triple(r.omega_sq);
        j["theta^2"] = triple(r.theta_sq);
        if (opt.format == Format::Json) {
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "omega*theta = " << j["omega*theta"].dump() << "\n"
                      << "omega^2     = " << j["omega^2"].dump() << "\n"
                      << "theta^2     = " << j["theta^2"].dump() << "\n";
        }
    });
    add_form_cmd("discriminant", "18abcd + b^2c^2 - 4ac^3 - 4db^3 - 27a^2d^2",
                 [&](const IndexForm& f) {
                     Laurent d = discriminant(f);
                     if (opt.format == Format::Json) {
                         Json j;
                         j["discriminant"] = d.str();
                         std::cout << j.dump() << "\n";
                     } else {
                         std::cout << d.str() << "\n";
                     }
                 });
    add_form_cmd("classify", "Field | LPlusK | KCubed | Inseparable | Indeterminate",
                 [&](const IndexForm& f) {
                     auto c = classify_cubic_algebra(f);
                     if (opt.format == Format::Json) {
                         Json j;
                         j["class"] = to_string(c);
                         std::cout << j.dump() << "\n";
                     } else {
                         std::cout << to_string(c) << "\n";
                     }
                 });
    add_form_cmd("lc", "Lattice class count", [&](const IndexForm& f) {
        int c = lattice_class_count(f);
        if (opt.format == Format::Json) {
            Json j;
            j["lc"] = c;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << c << "\n";
        }
    });

    // Parent flags (--format, --max-rank) are usable after subcommand names.
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands([](CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const bdq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind == bdq::Error::Kind::GuardExceeded ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
