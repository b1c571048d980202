// paracert: parallelisation certificates for surgery presentations of
// closed orientable 3-manifolds, plus numerical checks of the adapted
// contact frame on S^3.
//
// Exit codes: 0 success, 1 negative mathematical verdict or failed
// internal check, 2 input error.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "paracert/diagram.hpp"
#include "paracert/errors.hpp"
#include "paracert/report.hpp"

namespace {

int run_on_file(const std::string& path,
                paracert::cli::Report (*build)(
                    const paracert::cli::DiagramFile&)) {
    const auto diagram = paracert::cli::load_diagram(path);
    const auto report = build(diagram);
    std::cout << report.to_string();
    return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "parallelisation certificates for surgery diagrams "
        "(closed braids or mod-2 linking matrices)"};
    app.require_subcommand(1);

    std::string path;

    auto* certify = app.add_subcommand(
        "certify",
        "compute the mod-2 framing certificate of a surgery diagram");
    certify->add_option("file", path, "diagram file")->required();

    auto* sl = app.add_subcommand(
        "sl",
        "self-linking numbers of the closure components, with the "
        "doubled-braid oracle cross-check");
    sl->add_option("file", path, "diagram file (braid input)")->required();

    auto* check_even = app.add_subcommand(
        "check-even",
        "check the extendability criterion n - sl odd per framed component");
    check_even->add_option("file", path, "diagram file with framings")
        ->required();

    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
    auto* contact = app.add_subcommand(
        "contact-verify",
        "verify the adapted contact frame on S^3 at sampled points");
    contact->add_option("--samples", samples, "number of sample points");
    contact->add_option("--seed", seed, "sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (certify->parsed())
            return run_on_file(path, &paracert::cli::report_certify);
        if (sl->parsed()) return run_on_file(path, &paracert::cli::report_sl);
        if (check_even->parsed())
            return run_on_file(path, &paracert::cli::report_check_even);
        if (contact->parsed()) {
            if (samples < 1) {
                std::cerr << "error: --samples must be at least 1\n";
                return 2;
            }
            const auto report =
                paracert::cli::report_contact_verify(samples, seed);
            std::cout << report.to_string();
            return report.exit_code;
        }
    } catch (const paracert::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const paracert::InternalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
