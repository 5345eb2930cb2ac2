// Command-line front end: one subcommand per experiment, flat-file outputs,
// deterministic given the inputs. Exit codes: 0 success, 2 usage,
// 3 numerical failure, 4 I/O.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "sl3lab/boundary.hpp"
#include "sl3lab/cohomology.hpp"
#include "sl3lab/gf2.hpp"
#include "sl3lab/representation.hpp"

using namespace sl3lab;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int EXIT_USAGE = 2;
constexpr int EXIT_NUMERIC = 3;
constexpr int EXIT_IO = 4;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Err::Io: return EXIT_IO;
        case Err::InvalidArgument:
        case Err::BallTooLarge:
        case Err::IndexingUnsupported:
        case Err::LengthMismatch: return EXIT_USAGE;
        default: return EXIT_NUMERIC;
    }
}

struct Options {
    Tolerances tol;
    long seed = 1;
    std::string out;
};

void apply_config_file(const std::string& path, Options& opt) {
    std::ifstream is(path);
    if (!is) throw Error(Err::Io, "cannot open config " + path);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            auto e = s.find_last_not_of(" \t");
            s.erase(e == std::string::npos ? 0 : e + 1);
            return s;
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        try {
            if (key == "seed")
                opt.seed = std::stol(val);
            else if (key == "out")
                opt.out = val;
            else if (key == "tol_det")
                opt.tol.det = std::stod(val);
            else if (key == "tol_eig")
                opt.tol.eig = std::stod(val);
            else if (key == "tol_resid")
                opt.tol.resid = std::stod(val);
            else if (key == "tol_rank")
                opt.tol.rank = std::stod(val);
            else if (key == "tol_rel")
                opt.tol.rel = std::stod(val);
            else if (key == "tol_comm")
                opt.tol.comm = std::stod(val);
            else if (key == "tol_inc")
                opt.tol.inc = std::stod(val);
            else if (key == "tol_trans")
                opt.tol.trans = std::stod(val);
            else if (key == "tol_nf")
                opt.tol.nf = std::stod(val);
            else if (key == "tol_diag")
                opt.tol.diag = std::stod(val);
            else if (key == "tol_theta")
                opt.tol.theta = std::stod(val);
            else if (key == "tol_exact")
                opt.tol.exact = std::stod(val);
            else
                throw Error(Err::InvalidArgument, "unknown config key '" + key + "'");
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw Error(Err::InvalidArgument, "bad config value for '" + key + "'");
        }
    }
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(opt.out);
    if (!os) throw Error(Err::Io, "cannot open " + opt.out + " for writing");
    os << text;
    if (!os) throw Error(Err::Io, "write failed: " + opt.out);
}

HomToZ2 parse_phi(const std::string& bits, int genus) {
    if (static_cast<int>(bits.size()) != 2 * genus)
        throw Error(Err::InvalidArgument, "--phi needs exactly 2g bits");
    HomToZ2 phi;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw Error(Err::InvalidArgument, "--phi must be a 01-string");
        phi.bits.push_back(c - '0');
    }
    return phi;
}

HomToRStar parse_lambda(const std::string& csv, int genus) {
    HomToRStar lam;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            lam.values.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw Error(Err::InvalidArgument, "bad --lambda entry '" + tok + "'");
        }
    }
    if (static_cast<int>(lam.values.size()) != 2 * genus)
        throw Error(Err::InvalidArgument, "--lambda needs exactly 2g values");
    return lam;
}

Flag flag_from_json(const ordered_json& j, const Tolerances& tol) {
    Vec3 p, l;
    for (int i = 0; i < 3; ++i) {
        p(i) = j.at("point").at(i).get<double>();
        l(i) = j.at("line").at(i).get<double>();
    }
    return make_flag(p, l, tol);
}

ordered_json flag_to_json(const Flag& f) {
    return {{"point", {f.point.v(0), f.point.v(1), f.point.v(2)}},
            {"line", {f.line.v(0), f.line.v(1), f.line.v(2)}}};
}

Representation rebuild_base(const Representation& rep, const std::string& base_path,
                            const Options& opt) {
    if (!base_path.empty()) return load_representation(base_path);
    // the Fuchsian construction is deterministic, so the base is
    // recoverable from the genus alone
    return fuchsian(rep.genus, opt.tol);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"surface-group representations into SL(3,R): construction and invariants"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Options opt;
    std::string config_path;
    app.add_option("--config", config_path, "key=value configuration file");
    app.add_option("--seed", opt.seed, "seed for randomized diagnostics");
    app.add_option("--out", opt.out, "output path (default: stdout)");
    app.add_option("--tol-det", opt.tol.det);
    app.add_option("--tol-eig", opt.tol.eig);
    app.add_option("--tol-resid", opt.tol.resid);
    app.add_option("--tol-rank", opt.tol.rank);
    app.add_option("--tol-rel", opt.tol.rel);
    app.add_option("--tol-comm", opt.tol.comm);
    app.add_option("--tol-inc", opt.tol.inc);
    app.add_option("--tol-trans", opt.tol.trans);
    app.add_option("--tol-nf", opt.tol.nf);
    app.add_option("--tol-diag", opt.tol.diag);
    app.add_option("--tol-theta", opt.tol.theta);
    app.add_option("--tol-exact", opt.tol.exact);

    // build
    auto* cmd_build = app.add_subcommand("build", "construct a representation file");
    int genus = 2;
    std::string kind = "iota";
    cmd_build->add_option("--genus", genus, "surface genus (>= 2)")->required();
    cmd_build->add_option("--kind", kind, "fuchsian | iota | sym2")
        ->check(CLI::IsMember({"fuchsian", "iota", "sym2"}));

    // twist
    auto* cmd_twist = app.add_subcommand("twist", "apply a Z/2 twist to a block representation");
    std::string rep_path, phi_bits;
    cmd_twist->add_option("--rep", rep_path)->required();
    cmd_twist->add_option("--phi", phi_bits, "bit string like 1010")->required();

    // deform
    auto* cmd_deform =
        app.add_subcommand("deform", "radial deformation of a completely reducible representation");
    std::string lambda_csv;
    cmd_deform->add_option("--rep", rep_path)->required();
    cmd_deform->add_option("--lambda", lambda_csv, "comma-separated values, one per generator")
        ->required();

    // invariants
    auto* cmd_inv = app.add_subcommand("invariants", "sign signature, spectral certificate, reducibility");
    int radius = 3;
    cmd_inv->add_option("--rep", rep_path)->required();
    cmd_inv->add_option("--L", radius, "word-ball radius");

    // sample
    auto* cmd_sample = app.add_subcommand("sample", "sample the boundary map to CSV");
    std::string base_path;
    cmd_sample->add_option("--rep", rep_path)->required();
    cmd_sample->add_option("--base", base_path, "Fuchsian base file (default: rebuilt from genus)");
    cmd_sample->add_option("--L", radius, "word-ball radius");

    // compare
    auto* cmd_compare = app.add_subcommand("compare", "sup-distance between two boundary maps");
    std::string a_path, b_path;
    cmd_compare->add_option("--a", a_path)->required();
    cmd_compare->add_option("--b", b_path)->required();
    cmd_compare->add_option("--base", base_path, "shared Fuchsian base file");
    cmd_compare->add_option("--L", radius, "word-ball radius");

    // classify-triple
    auto* cmd_classify = app.add_subcommand("classify-triple", "orbit type of a transverse flag triple");
    std::string triple_path, nf_name;
    double nf_x = 2.0;
    cmd_classify->add_option("--in", triple_path, "JSON file with three flags");
    cmd_classify->add_option("--normal-form", nf_name,
                             "generic | point-collinear | line-concurrent | doubly-degenerate");
    cmd_classify->add_option("--X", nf_x, "parameter of the generic family");

    // cohomology
    auto* cmd_coh = app.add_subcommand("cohomology", "Zariski tangent-space dimension report");
    std::string coefficient = "adjoint";
    cmd_coh->add_option("--rep", rep_path)->required();
    cmd_coh->add_option("--coefficient", coefficient, "adjoint | trivial | standard2")
        ->check(CLI::IsMember({"adjoint", "trivial", "standard2"}));

    // sp2-orbits
    auto* cmd_orbits = app.add_subcommand("sp2-orbits", "mod-2 mapping-class orbits of functionals");
    cmd_orbits->add_option("--genus", genus)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return EXIT_USAGE;
    }

    try {
        if (!config_path.empty()) {
            Options file_opt; // flags win over config
            apply_config_file(config_path, file_opt);
            Options merged = file_opt;
            if (app.count("--seed")) merged.seed = opt.seed;
            if (app.count("--out")) merged.out = opt.out;
            // tolerance flags individually override the config values
            if (app.count("--tol-det")) merged.tol.det = opt.tol.det;
            if (app.count("--tol-eig")) merged.tol.eig = opt.tol.eig;
            if (app.count("--tol-resid")) merged.tol.resid = opt.tol.resid;
            if (app.count("--tol-rank")) merged.tol.rank = opt.tol.rank;
            if (app.count("--tol-rel")) merged.tol.rel = opt.tol.rel;
            if (app.count("--tol-comm")) merged.tol.comm = opt.tol.comm;
            if (app.count("--tol-inc")) merged.tol.inc = opt.tol.inc;
            if (app.count("--tol-trans")) merged.tol.trans = opt.tol.trans;
            if (app.count("--tol-nf")) merged.tol.nf = opt.tol.nf;
            if (app.count("--tol-diag")) merged.tol.diag = opt.tol.diag;
            if (app.count("--tol-theta")) merged.tol.theta = opt.tol.theta;
            if (app.count("--tol-exact")) merged.tol.exact = opt.tol.exact;
            opt = merged;
        }

        if (cmd_build->parsed()) {
            if (genus < 2) throw Error(Err::InvalidArgument, "--genus must be >= 2");
            Representation rep = fuchsian(genus, opt.tol);
            if (kind == "iota")
                rep = embed_iota(rep);
            else if (kind == "sym2")
                rep = sym2(rep);
            std::string path = opt.out.empty() ? (kind + "_g" + std::to_string(genus) + ".json")
                                               : opt.out;
            save_representation(path, rep);
            std::cout << "wrote " << path << " relation_residual " << rep.relation_residual
                      << "\n";
        } else if (cmd_twist->parsed()) {
            Representation rep = load_representation(rep_path);
            Representation out = twist(rep, parse_phi(phi_bits, rep.genus), opt.tol);
            std::string path = opt.out.empty() ? ("twist_" + phi_bits + ".json") : opt.out;
            save_representation(path, out);
            std::cout << "wrote " << path << " relation_residual " << out.relation_residual
                      << "\n";
        } else if (cmd_deform->parsed()) {
            Representation rep = load_representation(rep_path);
            ReducibilityResult red = detect_reducible(rep, opt.tol);
            if (!red.reducible) throw Error(Err::NotReducible, red.diagnostic);
            Representation out =
                radial_deform(rep, parse_lambda(lambda_csv, rep.genus), red.witness.conjugator,
                              opt.tol);
            std::string path = opt.out.empty() ? "radial.json" : opt.out;
            save_representation(path, out);
            std::cout << "wrote " << path << " relation_residual " << out.relation_residual
                      << "\n";
        } else if (cmd_inv->parsed()) {
            Representation rep = load_representation(rep_path);
            ordered_json j;
            bool numeric_failure = false;
            try {
                SignSignature sig = f_invariant(rep, opt.tol);
                std::string s;
                for (int b : sig.bits) s += char('0' + b);
                j["signature"] = s;
            } catch (const Error& e) {
                j["signature"] = nullptr;
                j["signature_error"] = e.what();
                numeric_failure = true;
            }
            SpectralScan scan = anosov_spectral_certificate(rep, radius, opt.tol);
            j["L"] = radius;
            j["certificate"] = scan.certified;
            j["words_checked"] = scan.words_checked;
            if (!scan.certified) {
                j["counterexample"] = word_to_string(scan.counterexample);
                numeric_failure = true;
            }
            ReducibilityResult red = detect_reducible(rep, opt.tol);
            j["reducible"] = red.reducible;
            if (red.reducible)
                j["reducibility_residual"] = red.witness.residual;
            else
                j["diagnostic"] = red.diagnostic;
            emit(opt, j.dump(2) + "\n");
            if (numeric_failure) return EXIT_NUMERIC;
        } else if (cmd_sample->parsed()) {
            Representation rep = load_representation(rep_path);
            Representation base = rebuild_base(rep, base_path, opt);
            SampledBoundaryMap map = sample_boundary(rep, base, radius, opt.tol);
            if (opt.out.empty())
                std::cout << boundary_to_csv(map);
            else
                save_boundary_csv(opt.out, map);
        } else if (cmd_compare->parsed()) {
            Representation ra = load_representation(a_path);
            Representation rb = load_representation(b_path);
            Representation base = rebuild_base(ra, base_path, opt);
            SampledBoundaryMap ma = sample_boundary(ra, base, radius, opt.tol);
            SampledBoundaryMap mb = sample_boundary(rb, base, radius, opt.tol);
            BoundaryComparison cmp = boundary_distance(ma, mb, opt.tol);
            ordered_json j;
            j["L"] = radius;
            j["distance"] = cmp.distance;
            j["matched"] = cmp.matched;
            j["unmatched"] = cmp.unmatched;
            emit(opt, j.dump(2) + "\n");
        } else if (cmd_classify->parsed()) {
            std::array<Flag, 3> flags = normal_form_triple(TripleTag::Generic, nf_x);
            if (!triple_path.empty()) {
                std::ifstream is(triple_path);
                if (!is) throw Error(Err::Io, "cannot open " + triple_path);
                ordered_json j = ordered_json::parse(is, nullptr, false);
                if (j.is_discarded()) throw Error(Err::Io, "bad JSON in " + triple_path);
                const auto& arr = j.at("flags");
                if (arr.size() != 3) throw Error(Err::Io, "expected exactly 3 flags");
                for (int i = 0; i < 3; ++i) flags[i] = flag_from_json(arr.at(i), opt.tol);
            } else if (!nf_name.empty()) {
                TripleTag tag;
                if (nf_name == "generic")
                    tag = TripleTag::Generic;
                else if (nf_name == "point-collinear")
                    tag = TripleTag::PointCollinear;
                else if (nf_name == "line-concurrent")
                    tag = TripleTag::LineConcurrent;
                else if (nf_name == "doubly-degenerate")
                    tag = TripleTag::DoublyDegenerate;
                else
                    throw Error(Err::InvalidArgument, "unknown normal form '" + nf_name + "'");
                flags = normal_form_triple(tag, nf_x);
            } else {
                throw Error(Err::InvalidArgument, "classify-triple needs --in or --normal-form");
            }
            TripleClass c = classify_triple(flags[0], flags[1], flags[2], opt.tol);
            ordered_json j;
            j["tag"] = triple_tag_name(c.tag);
            if (c.tag == TripleTag::Generic) j["X"] = c.x;
            j["c_pt"] = c.c_pt;
            j["c_ln"] = c.c_ln;
            j["condition_warning"] = c.condition_warning;
            j["roundtrip_error"] = c.roundtrip_error;
            j["stabilizer"] =
                stabilizer_type(c).one_parameter ? "one-parameter" : "trivial";
            ordered_json nrm = ordered_json::array();
            for (int r = 0; r < 3; ++r)
                for (int cc = 0; cc < 3; ++cc) nrm.push_back(c.normalizer(r, cc));
            j["normalizer"] = nrm;
            j["input_flags"] = {flag_to_json(flags[0]), flag_to_json(flags[1]),
                                flag_to_json(flags[2])};
            emit(opt, j.dump(2) + "\n");
        } else if (cmd_coh->parsed()) {
            Representation rep = load_representation(rep_path);
            if (coefficient == "adjoint") {
                if (rep.rank != 3)
                    throw Error(Err::InvalidArgument, "adjoint report expects a rank-3 file");
                emit(opt, tangent_report_json(tangent_dimension_report(rep, opt.tol)));
            } else if (coefficient == "trivial") {
                emit(opt, coeff_report_json(
                              coefficient_report(trivial_action(1, rep.genus), opt.tol)));
            } else {
                if (rep.rank != 2)
                    throw Error(Err::InvalidArgument, "standard2 report expects a rank-2 file");
                emit(opt, coeff_report_json(
                              coefficient_report(standard2_action(rep), opt.tol)));
            }
        } else if (cmd_orbits->parsed()) {
            emit(opt, orbit_report_json(sp_orbits(genus)));
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_NUMERIC;
    }
    return 0;
}
