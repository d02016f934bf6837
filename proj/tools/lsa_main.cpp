#include "lsa/bounds.hpp"
#include "lsa/format.hpp"
#include "lsa/gamma.hpp"
#include "lsa/report.hpp"
#include "lsa/superalgebra.hpp"
#include "lsa/tensor.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace lsa;

namespace {

json jdim(SuperDim d) { return json::array({d.even, d.odd}); }

std::string tag_str(const std::optional<HeisenbergTag>& tag) {
    if (!tag) return "unclassified";
    std::string h = tag->odd_center
                        ? "H_" + std::to_string(tag->m)
                        : "H(" + std::to_string(tag->m) + "," + std::to_string(tag->n) + ")";
    return h + " + A" + tag->complement.str();
}

json jtag(const std::optional<HeisenbergTag>& tag) {
    if (!tag) return nullptr;
    json t;
    t["center"] = tag->odd_center ? "odd" : "even";
    t["m"] = tag->m;
    if (!tag->odd_center) t["n"] = tag->n;
    t["complement"] = jdim(tag->complement);
    return t;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << j.dump(2) << "\n";
    }
}

json full_report(const LieSuperAlgebra& l) {
    json j;
    j["algebra"] = l.name();
    j["dim"] = jdim(l.dim());
    j["derived"] = jdim(l.derived_subalgebra().dim());
    j["center"] = jdim(l.center().dim());
    TensorSquareResult ts = tensor_square(l);
    SquareIdeal sq = square_ideal(ts);
    SuperDim ext = exterior_square(l).dim;
    j["tensor_square"] = jdim(ts.dim);
    j["exterior_square"] = jdim(ext);
    j["square_ideal"] = jdim(sq.dim);
    j["gamma_abelianization"] = jdim(gamma_of_abelianization(l));
    j["multiplier"] = jdim(multiplier_dim(l));
    if (!l.is_abelian()) {
        BoundReport r = check_bound(l);
        j["bound"] = r.bound;
        j["actual"] = r.actual;
        j["slack"] = r.slack;
        j["equality"] = r.equality;
        j["classification"] = jtag(r.classified);
    }
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"Lie superalgebra tensor-square calculator"};
    app.require_subcommand(1);

    std::string file, out_path, family;
    bool as_json = false;
    long m = 0, n = 0;
    unsigned field = 0;
    long max_dim = 7;

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "machine-readable output"); };
    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", out_path, "output path"); };

    CLI::App* cnew = app.add_subcommand("new", "write a built-in family to a .lsa file");
    cnew->add_option("--family", family, "heisenberg-even | heisenberg-odd | abelian")->required();
    cnew->add_option("--m", m, "parameter m (even part for abelian)");
    cnew->add_option("--n", n, "parameter n (odd part for abelian)");
    cnew->add_option("--field", field, "field characteristic (0 = rationals)");
    cnew->add_option("--out", out_path, "output .lsa path")->required();

    CLI::App* cval = app.add_subcommand("validate", "check the superalgebra axioms");
    cval->add_option("file", file)->required();
    add_json(cval);

    CLI::App* cinv = app.add_subcommand("invariants", "dimensions, center, nilpotency, recognition");
    cinv->add_option("file", file)->required();
    add_json(cinv);
    add_out(cinv);

    CLI::App* cten = app.add_subcommand("tensor-square", "compute L(x)L");
    cten->add_option("file", file)->required();
    add_json(cten);
    add_out(cten);

    CLI::App* cext = app.add_subcommand("exterior-square", "compute L^L");
    cext->add_option("file", file)->required();
    add_json(cext);
    add_out(cext);

    CLI::App* csq = app.add_subcommand("square", "compute the square ideal L[]L");
    csq->add_option("file", file)->required();
    add_json(csq);
    add_out(csq);

    CLI::App* cgam = app.add_subcommand("gamma", "universal quadratic functor dimension");
    std::vector<long> gdim;
    cgam->add_option("--dim", gdim, "even and odd dimension of the source module")->expected(2);
    cgam->add_option("file", file, "algebra file: report Gamma(L/L^2)");
    add_json(cgam);

    CLI::App* cmul = app.add_subcommand("multiplier-dim", "dim L^L - dim L^2");
    cmul->add_option("file", file)->required();
    add_json(cmul);
    add_out(cmul);

    CLI::App* cbnd = app.add_subcommand("bound-check", "verify the tensor-square upper bound");
    cbnd->add_option("file", file)->required();
    add_json(cbnd);
    add_out(cbnd);

    CLI::App* cswp = app.add_subcommand("sweep", "bound check over the Heisenberg-plus-abelian family");
    cswp->add_option("--max-dim", max_dim, "total dimension ceiling (default 7)");
    cswp->add_option("--field", field, "field characteristic (0 = rationals)");
    add_json(cswp);
    add_out(cswp);

    CLI::App* crep = app.add_subcommand("paper-report", "run the full built-in verification table");
    add_json(crep);
    add_out(crep);

    CLI11_PARSE(app, argc, argv);

    if (cnew->parsed()) {
        LieSuperAlgebra l = family == "heisenberg-even" ? heisenberg_even(m, n, field)
                            : family == "heisenberg-odd" ? heisenberg_odd(m, field)
                            : family == "abelian"        ? abelian({m, n}, field)
                            : throw CLI::ValidationError("--family", "unknown family " + family);
        save_algebra_file(l, out_path);
        std::cout << "wrote " << l.name() << " dim " << l.dim().str() << " to " << out_path << "\n";
        return 0;
    }

    if (cval->parsed()) {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open " + file);
        std::ostringstream buf;
        buf << in.rdbuf();
        LieSuperAlgebra l = parse_algebra(buf.str(), file, /*run_validation=*/false);
        std::vector<Violation> bad = l.validate();
        if (as_json) {
            json j;
            j["file"] = file;
            j["violations"] = json::array();
            for (const Violation& v : bad) {
                json e;
                e["axiom"] = v.axiom;
                e["indices"] = v.indices;
                j["violations"].push_back(e);
            }
            emit(j, out_path);
        } else if (bad.empty()) {
            std::cout << "OK: dim " << l.dim().str() << ", all axioms hold\n";
        } else {
            for (const Violation& v : bad) {
                std::cout << v.axiom << " violation at (";
                for (std::size_t i = 0; i < v.indices.size(); ++i)
                    std::cout << (i ? "," : "") << v.indices[i] + 1;
                std::cout << "): " << v.detail << "\n";
            }
        }
        return bad.empty() ? 0 : 1;
    }

    if (cgam->parsed()) {
        SuperDim src, result;
        if (!gdim.empty()) {
            src = {gdim[0], gdim[1]};
            result = gamma_dim(src);
        } else if (!file.empty()) {
            LieSuperAlgebra l = load_algebra_file(file);
            src = l.dim() - l.derived_subalgebra().dim();
            result = gamma_of_abelianization(l);
        } else {
            throw CLI::ValidationError("gamma", "need --dim or an algebra file");
        }
        if (as_json) {
            json j;
            j["source"] = jdim(src);
            j["gamma"] = jdim(result);
            emit(j, out_path);
        } else {
            std::cout << result.str() << "\n";
        }
        return 0;
    }

    if (cswp->parsed()) {
        std::vector<BoundReport> reports = family_sweep(max_dim, std::max(max_dim, 7L), field);
        if (as_json) {
            json arr = json::array();
            for (const BoundReport& r : reports) {
                json j;
                j["algebra"] = r.name;
                j["dim"] = jdim(r.dim);
                j["derived"] = jdim(r.derived);
                j["tensor_square"] = jdim(r.actual_graded);
                j["bound"] = r.bound;
                j["actual"] = r.actual;
                j["slack"] = r.slack;
                j["equality"] = r.equality;
                j["classification"] = jtag(r.classified);
                arr.push_back(j);
            }
            emit(arr, out_path);
        } else {
            for (const BoundReport& r : reports)
                std::cout << r.name << ": dim " << r.dim.str() << ", bound " << r.bound
                          << ", actual " << r.actual
                          << (r.equality ? ", equality" : ", strict") << " ["
                          << tag_str(r.classified) << "]\n";
            std::cout << reports.size() << " algebras checked, bound holds everywhere\n";
        }
        return 0;
    }

    if (crep->parsed()) {
        std::vector<Claim> claims = verification_claims();
        if (as_json) {
            json arr = json::array();
            for (const Claim& cl : claims) {
                json j;
                j["claim"] = cl.number;
                j["label"] = cl.label;
                j["pass"] = cl.pass;
                if (!cl.pass) j["detail"] = cl.detail;
                arr.push_back(j);
            }
            emit(arr, out_path);
        } else {
            for (const Claim& cl : claims) {
                std::cout << (cl.pass ? "PASS" : "FAIL") << " claim " << cl.number << ": "
                          << cl.label << "\n";
                if (!cl.pass) std::cout << "     " << cl.detail << "\n";
            }
        }
        return all_pass(claims) ? 0 : 1;
    }

    // Remaining commands operate on a loaded, validated algebra.
    LieSuperAlgebra l = load_algebra_file(file);

    if (cinv->parsed()) {
        auto [nilpotent, cls] = l.nilpotency();
        std::optional<HeisenbergTag> tag;
        if (nilpotent) tag = recognize_heisenberg_plus_abelian(l);
        if (as_json) {
            json j;
            j["algebra"] = l.name();
            j["dim"] = jdim(l.dim());
            j["derived"] = jdim(l.derived_subalgebra().dim());
            j["center"] = jdim(l.center().dim());
            j["nilpotent"] = nilpotent;
            if (nilpotent) j["class"] = cls;
            j["classification"] = jtag(tag);
            emit(j, out_path);
        } else {
            std::cout << l.name() << ": dim " << l.dim().str() << ", derived "
                      << l.derived_subalgebra().dim().str() << ", center "
                      << l.center().dim().str() << ", "
                      << (nilpotent ? "nilpotent of class " + std::to_string(cls)
                                    : "not nilpotent")
                      << ", " << tag_str(tag) << "\n";
        }
        return 0;
    }

    if (cten->parsed() || cext->parsed()) {
        TensorSquareResult ts = cten->parsed() ? tensor_square(l) : exterior_square(l);
        std::string what = cten->parsed() ? "L(x)L" : "L^L";
        if (as_json) {
            json j;
            j["algebra"] = l.name();
            j["kind"] = cten->parsed() ? "tensor" : "exterior";
            j["dim"] = jdim(ts.dim);
            j["abelian"] = ts.quotient.is_abelian();
            emit(j, out_path);
        } else {
            std::cout << "dim " << what << " = " << ts.dim.str() << ", abelian: "
                      << (ts.quotient.is_abelian() ? "yes" : "no") << "\n";
        }
        return 0;
    }

    if (csq->parsed()) {
        TensorSquareResult ts = tensor_square(l);
        SquareIdeal sq = square_ideal(ts);
        if (as_json) {
            json j;
            j["algebra"] = l.name();
            j["tensor_square"] = jdim(ts.dim);
            j["square_ideal"] = jdim(sq.dim);
            j["gamma_abelianization"] = jdim(gamma_of_abelianization(l));
            emit(j, out_path);
        } else {
            std::cout << "dim L[]L = " << sq.dim.str() << " inside L(x)L of dim "
                      << ts.dim.str() << "\n";
        }
        return 0;
    }

    if (cmul->parsed()) {
        SuperDim mdim = multiplier_dim(l);
        if (as_json) {
            json j;
            j["algebra"] = l.name();
            j["multiplier"] = jdim(mdim);
            emit(j, out_path);
        } else {
            std::cout << "dim M(L) = " << mdim.str() << "\n";
        }
        return 0;
    }

    if (cbnd->parsed()) {
        BoundReport r = check_bound(l);
        if (as_json) {
            emit(full_report(l), out_path);
        } else {
            std::cout << "bound " << r.bound << ", actual " << r.actual << ", "
                      << (r.equality ? "equality" : "strict") << " [" << tag_str(r.classified)
                      << "]\n";
        }
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
