// Command-line front end: reference tables, single-string profiles, case
// reports, the full verification run with certificate output, the
// rational-double-point scan and the two negative fixtures.
//
// Exit codes: 0 verified / success, 1 verification found a survivor,
// 2 usage error, 3 I/O error.

#include "hjcert/enumerate.hpp"
#include "hjcert/profile.hpp"
#include "hjcert/rdp.hpp"
#include "hjcert/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSurvivor = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

hjcert::DocFormat parse_format(const std::string& name) {
    return name == "structured" ? hjcert::DocFormat::Structured : hjcert::DocFormat::Text;
}

hjcert::HJString parse_string_spec(const std::string& spec) {
    std::vector<int> entries;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int value = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("malformed entry '" + item + "'");
        entries.push_back(value);
    }
    if (entries.empty()) throw std::invalid_argument("empty string spec");
    return hjcert::HJString(std::move(entries));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic singularity invariants of Hirzebruch-Jung strings and the "
                 "certified elimination of every non-rational configuration"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();

    auto* table_cmd = app.add_subcommand("table", "Print a reference table of string invariants");
    int which = 0;
    table_cmd->add_option("--which", which, "Table index")->required()->check(CLI::Range(1, 2));

    auto* string_cmd = app.add_subcommand("string", "Profile of one string");
    std::string string_spec;
    string_cmd->add_option("spec", string_spec, "Comma-separated entries, e.g. 2,4,2")->required();

    auto* case_cmd = app.add_subcommand("case", "Verify the case instances at one c2");
    int case_c2 = 0;
    int case_r = 0;
    case_cmd->add_option("--c2", case_c2, "Euler number of the resolution")
        ->required()
        ->check(CLI::Range(hjcert::kC2Min, hjcert::kC2Max));
    case_cmd->add_option("--r", case_r, "Restrict to this number of singular points")
        ->check(CLI::Range(1, hjcert::kMaxSingularPoints));

    auto* verify_cmd = app.add_subcommand("verify", "Run the full scan and emit the certificate");
    bool strict_paper = false;
    std::string out_path;
    int verify_c2 = 0;
    bool serial = false;
    verify_cmd->add_flag("--strict-paper", strict_paper,
                         "Disable the standalone (f*K)^2 > 0 filter");
    verify_cmd->add_option("--out", out_path, "Write the certificate to this file");
    verify_cmd->add_option("--c2", verify_c2, "Restrict the scan to one c2 group")
        ->check(CLI::Range(hjcert::kC2Min, hjcert::kC2Max));
    verify_cmd->add_flag("--serial", serial, "Verify case groups one at a time");

    auto* rdp_cmd = app.add_subcommand("rdp", "Rational-double-point candidate scan");

    auto* check_cmd = app.add_subcommand("check", "Re-validate a certificate file");
    std::string check_path;
    check_cmd->add_option("file", check_path, "Certificate to re-check")->required();

    auto* fixture_cmd = app.add_subcommand("fixture", "Known non-example singularity data");
    std::string fixture_name;
    fixture_cmd->add_option("name", fixture_name, "Fixture name")
        ->required()
        ->check(CLI::IsMember({"ishida", "keum"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const hjcert::DocFormat doc_format = parse_format(format);

    try {
        if (table_cmd->parsed()) {
            std::cout << hjcert::render_table(which, doc_format).body;
            return kExitOk;
        }

        if (string_cmd->parsed()) {
            hjcert::HJString s = parse_string_spec(string_spec);
            std::cout << hjcert::render_profile(hjcert::profile(s), doc_format).body;
            return kExitOk;
        }

        if (case_cmd->parsed()) {
            auto reports = hjcert::verify_case(case_c2);
            if (case_r > 0) {
                std::erase_if(reports,
                              [&](const hjcert::CaseReport& r) { return r.instance.r != case_r; });
            }
            std::cout << hjcert::render_case_reports(reports, doc_format).body;
            bool eliminated = true;
            for (const auto& r : reports) eliminated = eliminated && r.eliminated;
            return eliminated ? kExitOk : kExitSurvivor;
        }

        if (verify_cmd->parsed()) {
            hjcert::VerifyOptions options;
            options.positivity_filter = !strict_paper;
            options.parallel = !serial;
            std::optional<int> only_c2;
            if (verify_c2 > 0) only_c2 = verify_c2;
            hjcert::Certificate cert = hjcert::verify_theorem(options, only_c2);

            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out) {
                    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
                    return kExitIo;
                }
                out << hjcert::serialize_certificate(cert);
                if (!out.good()) {
                    std::cerr << "error: failed writing '" << out_path << "'\n";
                    return kExitIo;
                }
                std::cout << (cert.verdict ? "verified" : "NOT verified") << ": certificate written to "
                          << out_path << "\n";
            } else {
                std::cout << hjcert::render_certificate(cert, doc_format).body;
            }

            if (!cert.verdict) {
                if (auto survivor = hjcert::first_survivor(cert)) {
                    std::cerr << "surviving configuration: " << survivor->config.str()
                              << " (RHS " << survivor->rhs.str() << ")\n";
                }
                return kExitSurvivor;
            }
            return kExitOk;
        }

        if (rdp_cmd->parsed()) {
            std::cout << hjcert::render_rdp(hjcert::cross_eliminate(), doc_format).body;
            return kExitOk;
        }

        if (check_cmd->parsed()) {
            std::ifstream in(check_path, std::ios::binary);
            if (!in) {
                std::cerr << "error: cannot read '" << check_path << "'\n";
                return kExitIo;
            }
            std::ostringstream body;
            body << in.rdbuf();
            hjcert::Certificate cert;
            try {
                cert = hjcert::parse_certificate(body.str());
            } catch (const std::exception& e) {
                std::cerr << "error: not a certificate: " << e.what() << "\n";
                return kExitSurvivor;
            }
            auto problems = hjcert::recheck_certificate(cert);
            if (problems.empty() && cert.verdict) {
                std::cout << "certificate sound: " << cert.cases.size()
                          << " case instances re-derived, verdict holds\n";
                return kExitOk;
            }
            for (const auto& p : problems) std::cout << "problem: " << p << "\n";
            if (!cert.verdict) std::cout << "certificate reports a surviving configuration\n";
            return kExitSurvivor;
        }

        if (fixture_cmd->parsed()) {
            std::cout << hjcert::render_fixture(hjcert::make_fixture(fixture_name), doc_format).body;
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
