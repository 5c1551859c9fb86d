// Command line front end.
//
//   weyl dim     --n N --m M --algebra trunc:2
//   weyl tuples  --n N --m M --algebra trunc:2
//   weyl qelem   --n N --i I --phi 1:1,t:2 --chi - --algebra trunc:3
//   weyl image   --n N --tuple "1:1;t:1" --algebra trunc:2
//   weyl verify  --n N [--m M] --algebra trunc:2 --suite all
//
// Results go to standard output as JSON (default) or text; diagnostics to
// standard error. Exit codes: 0 success, 1 verification failure, 2 usage or
// input errors.

#include <CLI11.hpp>

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "weyl/json_io.hpp"
#include "weyl/literal.hpp"
#include "weyl/qconstruct.hpp"
#include "weyl/symtensor.hpp"
#include "weyl/verify.hpp"
#include "weyl/weylbasis.hpp"

namespace {

std::string slot_to_text(const weyl::SlotIndex& slot, const weyl::AlgebraSpec& spec) {
    return "(v" + std::to_string(slot.weight) + "(x)" + spec.label(slot.coeff) + ")";
}

std::string tensor_to_text(const weyl::Tensor& t, const weyl::AlgebraSpec& spec) {
    if (t.is_zero()) return "0";
    std::string out;
    for (const auto& [slots, value] : t.terms()) {
        if (!out.empty()) out += " + ";
        out += weyl::to_string(value);
        if (slots.empty()) continue;
        out += " ";
        for (const auto& slot : slots) out += slot_to_text(slot, spec);
    }
    return out;
}

std::string uelement_to_text(const weyl::UElement& u, const weyl::AlgebraSpec& spec) {
    if (u.is_zero()) return "0";
    std::string out;
    for (const auto& [word, value] : u.terms()) {
        if (!out.empty()) out += " + ";
        out += weyl::to_string(value);
        for (const auto& letter : word)
            out += " " + weyl::generator_to_text(letter.lie) + "[" + spec.label(letter.coeff) + "]";
    }
    return out;
}

void print_report_text(const weyl::SuiteReport& report, std::ostream& out) {
    std::size_t failed = 0;
    for (const auto& entry : report.cases) {
        if (!entry.pass) ++failed;
        out << (entry.pass ? "PASS" : "FAIL") << " " << report.suite << " " << entry.key << "\n";
        if (!entry.pass) out << "  counterexample: " << entry.counterexample.dump() << "\n";
    }
    out << report.suite << ": " << (report.cases.size() - failed) << "/" << report.cases.size()
        << " cases passed in " << report.duration_ms << " ms\n";
}

struct CommonOptions {
    int n = 2;
    std::string algebra = "trunc:1";
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOptions& options) {
    cmd->add_option("--n", options.n, "rank parameter of sl_n")->required();
    cmd->add_option("--algebra", options.algebra, "coefficient algebra, trunc:N or file:PATH")
        ->required();
    cmd->add_option("--format", options.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"explicit bases of global Weyl modules W_A(m w1) for sl_n (x) A"};
    app.require_subcommand(1);

    CommonOptions dim_options;
    int dim_m = 0;
    auto* dim_cmd = app.add_subcommand("dim", "dimension of S^m(V (x) A)");
    add_common(dim_cmd, dim_options);
    dim_cmd->add_option("--m", dim_m, "tensor power")->required();

    CommonOptions tuples_options;
    int tuples_m = 0;
    auto* tuples_cmd = app.add_subcommand("tuples", "enumerate basis tuples (phi_1,...,phi_n)");
    add_common(tuples_cmd, tuples_options);
    tuples_cmd->add_option("--m", tuples_m, "total tuple size")->required();

    CommonOptions qelem_options;
    int qelem_i = 1;
    std::string qelem_phi = "-";
    std::string qelem_chi = "-";
    auto* qelem_cmd = app.add_subcommand("qelem", "the element q_i(phi, chi) of U(sl_n (x) A)");
    add_common(qelem_cmd, qelem_options);
    qelem_cmd->add_option("--i", qelem_i, "simple root index")->required();
    qelem_cmd->add_option("--phi", qelem_phi, "multiset literal, e.g. 1:2,t:1 or -")->required();
    qelem_cmd->add_option("--chi", qelem_chi, "multiset literal")->required();

    CommonOptions image_options;
    std::string image_tuple;
    std::optional<int> image_m;
    auto* image_cmd =
        app.add_subcommand("image", "q(phi_1,...,phi_n) applied to (v_1 (x) 1)^(x)m");
    add_common(image_cmd, image_options);
    image_cmd->add_option("--tuple", image_tuple, "tuple literal, parts joined by ';'")->required();
    image_cmd->add_option("--m", image_m, "expected total size (validated against the tuple)");

    CommonOptions verify_options;
    std::optional<int> verify_m;
    std::string verify_suite = "all";
    int verify_max_size = 4;
    int verify_kmax = 3;
    unsigned long verify_max_dim = 400;
    std::string verify_certificate;
    auto* verify_cmd = app.add_subcommand("verify", "run lemma verification suites");
    add_common(verify_cmd, verify_options);
    verify_cmd->add_option("--m", verify_m, "tensor power for the qonv_basis suite");
    verify_cmd
        ->add_option("--suite", verify_suite, "action_zero | qivi | delta | qonv_basis | all")
        ->check(CLI::IsMember({"action_zero", "qivi", "delta", "qonv_basis", "all"}));
    auto* max_size_option =
        verify_cmd->add_option("--max-size", verify_max_size,
                               "bound on |phi|+|chi| for the per-lemma suites (default 4; "
                               "default 3 for the delta suite)");
    verify_cmd->add_option("--kmax", verify_kmax, "largest coproduct arity for the delta suite");
    verify_cmd->add_option("--max-dim", verify_max_dim,
                           "guard on sym_dim for the qonv_basis suite (default 400)");
    verify_cmd->add_option("--certificate", verify_certificate,
                           "write the qonv_basis rank certificate JSON to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        if (error.get_exit_code() == 0) return app.exit(error);
        app.exit(error);
        return 2;
    }

    try {
        if (dim_cmd->parsed()) {
            const weyl::AlgebraSpec spec = weyl::algebra_from_literal(dim_options.algebra);
            if (dim_options.n < 2) throw std::invalid_argument("--n must be >= 2");
            if (dim_m < 0) throw std::invalid_argument("--m must be >= 0");
            std::cout << weyl::sym_dim(dim_options.n, spec.dim(), dim_m).get_str() << "\n";
            return 0;
        }

        if (tuples_cmd->parsed()) {
            const weyl::MapAlgebra ctx(tuples_options.n,
                                       weyl::algebra_from_literal(tuples_options.algebra));
            const auto tuples = weyl::enumerate_tuples(ctx, tuples_m);
            if (tuples_options.format == "text") {
                for (const auto& tuple : tuples)
                    std::cout << weyl::tuple_to_literal(tuple, ctx.coeff) << "\n";
            } else {
                weyl::json out = weyl::json::array();
                for (const auto& tuple : tuples)
                    out.push_back(weyl::tuple_to_literal(tuple, ctx.coeff));
                std::cout << out.dump(2) << "\n";
            }
            return 0;
        }

        if (qelem_cmd->parsed()) {
            const weyl::MapAlgebra ctx(qelem_options.n,
                                       weyl::algebra_from_literal(qelem_options.algebra));
            if (qelem_i < 1 || qelem_i > ctx.n - 1)
                throw std::invalid_argument("--i must lie in 1..n-1");
            const auto phi = weyl::parse_multiset_literal(qelem_phi, ctx.coeff);
            const auto chi = weyl::parse_multiset_literal(qelem_chi, ctx.coeff);
            const weyl::UElement q = weyl::q_single(qelem_i, phi, chi, ctx.coeff);
            if (qelem_options.format == "text")
                std::cout << uelement_to_text(q, ctx.coeff) << "\n";
            else
                std::cout << weyl::uelement_to_json(q).dump(2) << "\n";
            return 0;
        }

        if (image_cmd->parsed()) {
            const weyl::MapAlgebra ctx(image_options.n,
                                       weyl::algebra_from_literal(image_options.algebra));
            const auto tuple = weyl::parse_tuple_literal(image_tuple, ctx.coeff, ctx.n);
            if (image_m && *image_m != tuple.total_size())
                throw std::invalid_argument("--m disagrees with the tuple's total size");
            weyl::QCache cache(ctx.coeff);
            const weyl::Tensor image = weyl::basis_image(ctx, cache, tuple);
            if (image_options.format == "text")
                std::cout << tensor_to_text(image, ctx.coeff) << "\n";
            else
                std::cout << weyl::tensor_to_json(image).dump(2) << "\n";
            return 0;
        }

        const weyl::MapAlgebra ctx(verify_options.n,
                                   weyl::algebra_from_literal(verify_options.algebra));
        std::vector<weyl::SuiteReport> reports;
        const bool run_all = verify_suite == "all";
        if (run_all || verify_suite == "action_zero")
            reports.push_back(weyl::verify_action_zero(ctx, verify_max_size));
        if (run_all || verify_suite == "qivi")
            reports.push_back(weyl::verify_qivi(ctx, verify_max_size));
        if (run_all || verify_suite == "delta")
            reports.push_back(weyl::verify_delta(
                ctx, verify_kmax, max_size_option->count() > 0 ? verify_max_size : 3));
        if (run_all || verify_suite == "qonv_basis") {
            if (!verify_m)
                throw std::invalid_argument("--m is required for the qonv_basis suite");
            auto result =
                weyl::verify_qonv_and_basis(ctx, *verify_m, weyl::Integer(verify_max_dim));
            if (!verify_certificate.empty()) {
                std::ofstream out(verify_certificate);
                if (!out)
                    throw std::invalid_argument("cannot write certificate file '" +
                                                verify_certificate + "'");
                out << weyl::rank_certificate_json(ctx, *verify_m, verify_options.algebra,
                                                   result.basis, result.rank_value, result.signs)
                           .dump(2)
                    << "\n";
            }
            reports.push_back(std::move(result.report));
        }

        bool all_passed = true;
        for (const auto& report : reports) all_passed = all_passed && report.passed();

        if (verify_options.format == "text") {
            for (const auto& report : reports) print_report_text(report, std::cout);
            std::cout << (all_passed ? "all suites passed" : "FAILURES PRESENT") << "\n";
        } else {
            weyl::json out = weyl::json::array();
            for (const auto& report : reports) out.push_back(weyl::report_to_json(report));
            std::cout << out.dump(2) << "\n";
        }
        return all_passed ? 0 : 1;
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    } catch (const weyl::algebra_error& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
}
