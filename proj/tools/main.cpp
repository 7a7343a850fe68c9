/* Command-line surface: structure checkers, canonical constructions, and the
 * pairing-diagram toolkit.  Exit code 0 = pass, 1 = check failed, 2 = bad
 * input or usage. */

#include "ainfty/face_complex.hpp"
#include "ainfty/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace ainfty;

namespace {

int emit_report(const Report& report, bool as_json) {
    if (as_json)
        std::cout << report_json(report);
    else
        std::cout << report.text();
    return report.pass ? 0 : 1;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for homotopy-associative structures and their pairing diagrams"};
    app.require_subcommand(1);

    std::string file, out_path, name, export_format, expr, example;
    bool as_json = false;
    int max_arity = 0, opt_k = 0, opt_l = 0, bound = 6;

    // ---- check ----
    CLI::App* check = app.add_subcommand("check", "verify a structure file");
    check->require_subcommand(1);
    auto add_check = [&](const std::string& what, const std::string& help) {
        CLI::App* c = check->add_subcommand(what, help);
        c->add_option("file", file, "structure file")->required();
        c->add_flag("--json", as_json, "emit the report as JSON");
        c->add_option("--name", name, "structure name (default: first of its kind)");
        return c;
    };
    CLI::App* check_algebra = add_check("algebra", "structure relations and squared bar differential");
    check_algebra->add_option("--max-arity", max_arity, "override the relation arity bound");
    CLI::App* check_bimodule_cmd = add_check("bimodule", "module relations, squared differential, compatibility square");
    CLI::App* check_morphism = add_check("morphism", "morphism relations and the chain-map identity");
    CLI::App* check_ip = add_check("inner-product", "pairing relations and the morphism form");

    // ---- make ----
    CLI::App* make = app.add_subcommand("make", "canonical constructions written to a new file");
    make->require_subcommand(1);
    auto add_make = [&](const std::string& what, const std::string& help) {
        CLI::App* c = make->add_subcommand(what, help);
        c->add_option("file", file, "structure file")->required();
        c->add_option("-o,--out", out_path, "output file")->required();
        c->add_option("--name", name, "structure name (default: first of its kind)");
        return c;
    };
    add_make("dual", "dual of a bimodule");
    add_make("self-bimodule", "the algebra as a bimodule over itself");
    add_make("dual-self", "the dual of the algebra as a bimodule");

    // ---- diagrams ----
    CLI::App* diagrams = app.add_subcommand("diagrams", "pairing-diagram complex toolkit");
    diagrams->require_subcommand(1);
    CLI::App* faces = diagrams->add_subcommand("faces", "enumerate the face complex");
    faces->add_option("--k", opt_k, "top slots")->required();
    faces->add_option("--l", opt_l, "bottom slots")->required();
    faces->add_option("--export", export_format, "emit dot or json instead of a listing");
    faces->add_option("--bound", bound, "enumeration bound on k+l (default 6)");
    CLI::App* fvector = diagrams->add_subcommand("fvector", "cell counts by degree");
    fvector->add_option("--k", opt_k)->required();
    fvector->add_option("--l", opt_l)->required();
    fvector->add_option("--bound", bound, "enumeration bound on k+l (default 6)");
    CLI::App* d2 = diagrams->add_subcommand("d2", "verify the squared differential vanishes");
    d2->add_option("--k", opt_k)->required();
    d2->add_option("--l", opt_l)->required();
    d2->add_option("--bound", bound, "enumeration bound on k+l (default 6)");
    d2->add_flag("--json", as_json);
    CLI::App* degree_cmd = diagrams->add_subcommand("degree", "degree of a diagram expression");
    degree_cmd->add_option("expr", expr, "e.g. \"<a,b,c,d>_{2,0}\"")->required();
    CLI::App* naturality = diagrams->add_subcommand(
        "naturality", "combinatorial differential vs operator definition on a mod2 fixture");
    naturality->add_option("--k", opt_k)->required();
    naturality->add_option("--l", opt_l)->required();
    naturality->add_option("file", file, "structure file (mod2, with an inner product)")->required();
    naturality->add_flag("--json", as_json);
    naturality->add_option("--name", name, "inner product name");

    // ---- examples ----
    CLI::App* examples = app.add_subcommand("examples", "write a shipped example file");
    examples->add_option("name", example, "one of: exterior-1gen, frobenius-1t, dga-nonassoc-mutant, small-m3-mod2")
        ->required();
    examples->add_option("-o,--out", out_path, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check_algebra->parsed()) {
            return emit_report(check_ainfinity(load_structures(file).sole_algebra(name), max_arity),
                               as_json);
        }
        if (check_bimodule_cmd->parsed()) {
            return emit_report(check_bimodule(load_structures(file).sole_bimodule(name)), as_json);
        }
        if (check_morphism->parsed()) {
            return emit_report(check_bimodule_map(load_structures(file).sole_morphism(name)),
                               as_json);
        }
        if (check_ip->parsed()) {
            return emit_report(check_inner_product(load_structures(file).sole_inner_product(name)),
                               as_json);
        }
        if (make->parsed()) {
            Bundles in = load_structures(file);
            Bundles out;
            out.field = in.field;
            const std::string which = make->get_subcommands().front()->get_name();
            AInfinityBimodule built = [&] {
                if (which == "dual") return dual_bimodule(in.sole_bimodule(name));
                AlgebraPtr alg = std::make_shared<AInfinityAlgebra>(in.sole_algebra(name));
                return which == "self-bimodule" ? self_bimodule(alg) : dual_self_bimodule(alg);
            }();
            out.bases.emplace(built.algebra->basis->name(), built.algebra->basis);
            out.bases.emplace(built.module->name(), built.module);
            std::string alg_name = "A";
            out.algebras.emplace(alg_name, built.algebra);
            out.order.emplace_back("algebra", alg_name);
            out.bimodules.emplace("M", std::make_shared<AInfinityBimodule>(std::move(built)));
            out.order.emplace_back("bimodule", "M");
            save_structures(out, out_path);
            std::cout << "wrote " << out_path << "\n";
            return 0;
        }
        if (faces->parsed()) {
            FaceComplex fc = enumerate_faces(opt_k, opt_l, bound);
            if (!export_format.empty()) {
                std::cout << export_face_complex(fc, export_format);
                return 0;
            }
            for (std::size_t i = 0; i < fc.cells.size(); ++i)
                std::cout << "deg " << fc.degrees[i] << "  " << fc.cells[i].display() << "\n";
            std::cout << fc.cells.size() << " cells\n";
            return 0;
        }
        if (fvector->parsed()) {
            FaceComplex fc = enumerate_faces(opt_k, opt_l, bound);
            auto f = fc.f_vector();
            for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? " " : "") << f[i];
            std::cout << "\n";
            return 0;
        }
        if (d2->parsed()) {
            FaceComplex fc = enumerate_faces(opt_k, opt_l, bound);
            DSquaredReport rep = check_d_squared(fc);
            if (as_json) {
                std::cout << "{\"ok\": " << (rep.ok ? "true" : "false")
                          << ", \"cells\": " << rep.cells
                          << ", \"pre_cancellation_terms\": " << rep.pre_cancellation_terms
                          << ", \"independent_pairs\": " << rep.independent_pairs
                          << ", \"composed_pairs\": " << rep.composed_pairs << "}\n";
            } else {
                std::cout << (rep.ok ? "d^2 = 0" : "d^2 != 0") << " on " << rep.cells << " cells; "
                          << rep.pre_cancellation_terms << " terms cancel in "
                          << rep.independent_pairs << " independent-spot pairs and "
                          << rep.composed_pairs << " same-output pairs\n";
                for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
            }
            return rep.ok ? 0 : 1;
        }
        if (degree_cmd->parsed()) {
            std::cout << parse_diagram(expr).degree() << "\n";
            return 0;
        }
        if (naturality->parsed()) {
            Bundles in = load_structures(file);
            const InfinityInnerProduct& ip = in.sole_inner_product(name);
            FaceComplex fc = enumerate_faces(opt_k, opt_l);
            NaturalityReport rep = naturality_check(fc, *ip.algebra, ip);
            if (as_json) {
                std::cout << "{\"ok\": " << (rep.ok ? "true" : "false") << ", \"cells\": "
                          << rep.cells << ", \"tuples\": " << rep.tuples << "}\n";
            } else {
                std::cout << (rep.ok ? "naturality holds" : "naturality FAILS") << " on "
                          << rep.cells << " cells, " << rep.tuples << " evaluations\n";
                for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
            }
            return rep.ok ? 0 : 1;
        }
        if (examples->parsed()) {
            write_file(out_path, example_file(example));
            std::cout << "wrote " << out_path << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
