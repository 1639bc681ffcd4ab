#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polymat/document.hpp"

namespace fs = std::filesystem;
using namespace polymat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitHypothesis = 1;
constexpr int kExitInput = 2;
constexpr int kExitCompletion = 3;
constexpr int kExitInternal = 4;

struct Options {
    std::string command;
    std::string file;
    std::string divisor;
    std::vector<std::string> factor_files;
    std::string residual_file;
    std::string order;  // empty = use the document's order
    std::string out_dir;
    bool json = false;
    bool skip_class_check = false;
};

std::string read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

MatrixDocument load_document(const std::string& path, const std::string& order) {
    MatrixDocument doc = MatrixDocument::load(path);
    if (order.empty()) return doc;
    const OrderKind kind = order_kind_from_string(order);
    const RingPtr ring = ring_with_order(doc.ring(), kind);
    if (ring == doc.ring()) return doc;
    MatrixDocument out;
    std::vector<std::vector<Poly>> rows;
    for (std::size_t i = 0; i < doc.matrix.rows(); ++i) {
        std::vector<Poly> row;
        for (std::size_t j = 0; j < doc.matrix.cols(); ++j)
            row.push_back(convert_to_ring(doc.matrix.at(i, j), ring));
        rows.push_back(std::move(row));
    }
    out.matrix = PolyMatrix::from_rows(ring, std::move(rows));
    for (const auto& [div, power] : doc.divisors)
        out.divisors.emplace_back(
            LinearDivisor(div.var(), convert_to_ring(div.rhs(), ring)), power);
    return out;
}

std::string ring_text(const RingPtr& ring) {
    std::string s;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        if (i) s += ", ";
        s += ring->var_names()[i];
    }
    s += " (" + to_string(ring->order().kind) + ")";
    return s;
}

void print_groebner(std::ostream& os, const std::string& label,
                    const GroebnerBasis& gb) {
    os << label << ": {";
    for (std::size_t i = 0; i < gb.elements().size(); ++i) {
        if (i) os << ", ";
        os << gb.elements()[i].str();
    }
    os << "}\n";
}

void print_class_report(std::ostream& os, const ClassReport& r) {
    os << "d_l: " << r.d_l.str() << '\n';
    os << "d_(l-1): " << r.d_l_minus_1.str() << '\n';
    os << "maximal minors (eta): " << r.eta
       << "  order-(l-1) minors (gamma): " << r.gamma << '\n';
    os << "d divides d_l: " << (r.divides_d_l ? "yes" : "no") << '\n';
    os << "GCD(d, d_(l-1)): " << r.gcd_d_dl1.str() << '\n';
    os << "classes: S " << (r.in_s ? "yes" : "no") << " | S1 "
       << (r.in_s1 ? "yes" : "no") << " | S2 " << (r.in_s2 ? "yes" : "no")
       << " | S3 " << (r.in_s3 ? "yes" : "no") << '\n';
    if (r.gb_s1) print_groebner(os, "basis <d, e_i>", *r.gb_s1);
    if (r.gb_s2) print_groebner(os, "basis <d, c_j>", *r.gb_s2);
    if (r.gb_s3) print_groebner(os, "basis <d, h_j>", *r.gb_s3);
    if (r.gb_d_dl1) print_groebner(os, "basis <d, d_(l-1)>", *r.gb_d_dl1);
}

void print_matrix(std::ostream& os, const std::string& label,
                  const PolyMatrix& m) {
    os << label << ":\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m.at(i, j).str();
        }
        os << "]\n";
    }
}

void print_verification(std::ostream& os, const VerifyReport& report) {
    os << "verification: " << (report.pass ? "pass" : "FAIL") << '\n';
    for (const auto& c : report.conditions)
        os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": "
           << c.detail << '\n';
}

Json base_report(const Options& opts, const std::string& digest,
                 double elapsed_ms, int exit_status) {
    Json j;
    j["command"] = opts.command;
    j["input"] = opts.file;
    j["input_digest"] = digest;
    j["elapsed_ms"] = elapsed_ms;
    j["exit_status"] = exit_status;
    return j;
}

// Output paths for emitted factor documents: <dir>/<stem>.g<k>.json and
// <dir>/<stem>.residual.json.
struct OutputPaths {
    std::vector<std::string> factors;
    std::string residual;
};

OutputPaths output_paths(const Options& opts, std::size_t n_factors) {
    const fs::path input(opts.file);
    const fs::path dir =
        opts.out_dir.empty() ? input.parent_path() : fs::path(opts.out_dir);
    const std::string stem = input.stem().string();
    OutputPaths paths;
    for (std::size_t k = 1; k <= n_factors; ++k)
        paths.factors.push_back(
            (dir / (stem + ".g" + std::to_string(k) + ".json")).string());
    paths.residual = (dir / (stem + ".residual.json")).string();
    return paths;
}

OutputPaths write_factor_documents(const Options& opts,
                                   const FactorizationResult& result) {
    if (!opts.out_dir.empty()) fs::create_directories(opts.out_dir);
    OutputPaths paths = output_paths(opts, result.steps.size());
    for (std::size_t k = 0; k < result.steps.size(); ++k) {
        MatrixDocument g_doc;
        g_doc.matrix = result.steps[k].g;
        g_doc.divisors.emplace_back(result.steps[k].divisor, 1u);
        g_doc.save(paths.factors[k]);
    }
    MatrixDocument res_doc;
    res_doc.matrix = result.residual;
    res_doc.save(paths.residual);
    return paths;
}

double elapsed_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
}

int cmd_analyze(const Options& opts) {
    const auto start = std::chrono::steady_clock::now();
    const std::string digest = fnv1a_digest(read_file_bytes(opts.file));
    const MatrixDocument doc = load_document(opts.file, opts.order);
    if (doc.divisors.size() != 1 || doc.divisors[0].second != 1)
        throw ParseError(
            "analyze expects exactly one divisor with power 1 in the document "
            "(use chain for products)");
    const LinearDivisor& d = doc.divisors[0].first;
    const ClassReport report = classify(doc.matrix, d);
    const double ms = elapsed_since(start);
    if (opts.json) {
        Json j = base_report(opts, digest, ms, kExitOk);
        j["ring"] = ring_to_json(doc.ring());
        j["divisor"] = d.str();
        j["analysis"] = class_report_to_json(report);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "command: analyze\ninput: " << opts.file << " (" << digest
                  << ")\nring: " << ring_text(doc.ring())
                  << "\ndivisor: " << d.str() << '\n';
        print_class_report(std::cout, report);
        std::cout << "elapsed: " << ms << " ms\n";
    }
    return kExitOk;
}

int cmd_factor(const Options& opts) {
    const auto start = std::chrono::steady_clock::now();
    const std::string digest = fnv1a_digest(read_file_bytes(opts.file));
    const MatrixDocument doc = load_document(opts.file, opts.order);
    const Poly divisor_poly = parse_poly(doc.ring(), opts.divisor);
    const auto d = LinearDivisor::from_poly(divisor_poly);
    if (!d)
        throw ParseError("--divisor must have the shape z_i - f with f free "
                         "of z_i; got: " +
                         divisor_poly.str());
    FactorOptions fopts;
    fopts.skip_class_check = opts.skip_class_check;
    const FactorizationResult result = factor_once(doc.matrix, *d, fopts);
    const OutputPaths paths = write_factor_documents(opts, result);
    const double ms = elapsed_since(start);
    if (opts.json) {
        Json j = base_report(opts, digest, ms, kExitOk);
        j["ring"] = ring_to_json(doc.ring());
        j["factorization"] = factorization_to_json(result);
        j["outputs"] =
            Json{{"factors", paths.factors}, {"residual", paths.residual}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "command: factor\ninput: " << opts.file << " (" << digest
                  << ")\nring: " << ring_text(doc.ring())
                  << "\ndivisor: " << d->str() << '\n';
        const auto& step = result.steps[0];
        std::cout << "w: [";
        for (std::size_t i = 0; i < step.w.components.size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << step.w.components[i].str();
        }
        std::cout << "]\n";
        print_matrix(std::cout, "G", step.g);
        print_matrix(std::cout, "residual", result.residual);
        print_verification(std::cout, result.verification);
        for (const auto& p : paths.factors) std::cout << "wrote: " << p << '\n';
        std::cout << "wrote: " << paths.residual << '\n';
        std::cout << "elapsed: " << ms << " ms\n";
    }
    return kExitOk;
}

int cmd_chain(const Options& opts) {
    const auto start = std::chrono::steady_clock::now();
    const std::string digest = fnv1a_digest(read_file_bytes(opts.file));
    const MatrixDocument doc = load_document(opts.file, opts.order);
    if (doc.divisors.empty())
        throw ParseError("chain needs at least one divisor in the document");
    DivisorProduct product{doc.divisors};
    const FactorizationResult result = factor_chain(doc.matrix, product);
    const OutputPaths paths = write_factor_documents(opts, result);
    const double ms = elapsed_since(start);
    if (opts.json) {
        Json j = base_report(opts, digest, ms, kExitOk);
        j["ring"] = ring_to_json(doc.ring());
        j["divisor_product"] = product.str();
        j["factorization"] = factorization_to_json(result);
        j["outputs"] =
            Json{{"factors", paths.factors}, {"residual", paths.residual}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "command: chain\ninput: " << opts.file << " (" << digest
                  << ")\nring: " << ring_text(doc.ring())
                  << "\ndivisor product: " << product.str() << '\n';
        std::cout << "steps: " << result.steps.size() << '\n';
        for (std::size_t k = 0; k < result.steps.size(); ++k)
            print_matrix(std::cout, "G" + std::to_string(k + 1),
                         result.steps[k].g);
        print_matrix(std::cout, "residual", result.residual);
        print_verification(std::cout, result.verification);
        for (const auto& p : paths.factors) std::cout << "wrote: " << p << '\n';
        std::cout << "wrote: " << paths.residual << '\n';
        std::cout << "elapsed: " << ms << " ms\n";
    }
    return kExitOk;
}

int cmd_verify(const Options& opts) {
    const auto start = std::chrono::steady_clock::now();
    const std::string digest = fnv1a_digest(read_file_bytes(opts.file));
    const MatrixDocument doc = load_document(opts.file, opts.order);
    std::vector<PolyMatrix> factors;
    std::vector<std::optional<Poly>> dets;
    for (const auto& path : opts.factor_files) {
        const MatrixDocument fdoc = load_document(path, opts.order);
        if (!fdoc.ring()->same_as(*doc.ring()))
            throw ParseError("factor document '" + path +
                             "' declares a different ring");
        factors.push_back(fdoc.matrix);
        if (fdoc.divisors.empty()) {
            dets.emplace_back(std::nullopt);
        } else {
            DivisorProduct p{fdoc.divisors};
            dets.emplace_back(p.expanded());
        }
    }
    const MatrixDocument rdoc = load_document(opts.residual_file, opts.order);
    if (!rdoc.ring()->same_as(*doc.ring()))
        throw ParseError("residual document declares a different ring");
    const VerifyReport report =
        verify_factorization(doc.matrix, factors, dets, rdoc.matrix);
    const double ms = elapsed_since(start);
    const int status = report.pass ? kExitOk : kExitHypothesis;
    if (opts.json) {
        Json j = base_report(opts, digest, ms, status);
        j["ring"] = ring_to_json(doc.ring());
        j["verify"] = verify_report_to_json(report);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "command: verify\ninput: " << opts.file << " (" << digest
                  << ")\n";
        print_verification(std::cout, report);
        std::cout << "elapsed: " << ms << " ms\n";
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    Options opts;
    CLI::App app{
        "polymat: exact factorization of multivariate polynomial matrices "
        "with respect to linear divisors z_i - f.\n"
        "For a 1-row matrix the order-(l-1) minor convention is the empty "
        "minor, which is 1; membership in S then reduces to d dividing the "
        "entry GCD."};
    app.require_subcommand(1);

    const auto add_common = [&](CLI::App* cmd, bool with_order = true) {
        if (with_order)
            cmd->add_option("--order", opts.order,
                            "monomial order: lex, grlex or grevlex "
                            "(overrides the document's order)")
                ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
        cmd->add_flag("--json", opts.json, "machine-readable report");
    };

    CLI::App* analyze =
        app.add_subcommand("analyze", "class membership tests for one divisor");
    analyze->add_option("file", opts.file, "matrix document")->required();
    add_common(analyze);

    CLI::App* factor =
        app.add_subcommand("factor", "extract one linear divisor");
    factor->add_option("file", opts.file, "matrix document")->required();
    factor->add_option("--divisor", opts.divisor, "divisor, e.g. \"z1 - z2\"")
        ->required();
    factor->add_flag("--skip-class-check", opts.skip_class_check,
                     "skip the class membership test; post-verification "
                     "still runs");
    factor->add_option("--out-dir", opts.out_dir,
                       "directory for emitted documents (default: input's)");
    add_common(factor);

    CLI::App* chain = app.add_subcommand(
        "chain", "extract the document's divisor product step by step");
    chain->add_option("file", opts.file, "matrix document")->required();
    chain->add_option("--out-dir", opts.out_dir,
                      "directory for emitted documents (default: input's)");
    add_common(chain);

    CLI::App* verify =
        app.add_subcommand("verify", "check F == factors * residual");
    verify->add_option("file", opts.file, "matrix document")->required();
    verify->add_option("--factors", opts.factor_files, "factor documents")
        ->required();
    verify->add_option("--residual", opts.residual_file, "residual document")
        ->required();
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (analyze->parsed()) {
            opts.command = "analyze";
            return cmd_analyze(opts);
        }
        if (factor->parsed()) {
            opts.command = "factor";
            return cmd_factor(opts);
        }
        if (chain->parsed()) {
            opts.command = "chain";
            return cmd_chain(opts);
        }
        opts.command = "verify";
        return cmd_verify(opts);
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis failure: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const CompletionError& e) {
        std::cerr << "completion failure: " << e.what() << '\n';
        return kExitCompletion;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what();
        if (e.position() != std::string::npos)
            std::cerr << " (at offset " << e.position() << ")";
        std::cerr << '\n';
        return kExitInput;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const Error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
