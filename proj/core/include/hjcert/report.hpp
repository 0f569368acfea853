#pragma once

// Rendering and serialization: the two golden tables, single-string
// profiles, case reports, the certificate (canonical, re-parseable JSON)
// and the negative fixtures. Rationals serialize as "p/q" in lowest terms
// ("p" when integral); the structured documents round-trip through
// parse_*.

#include "hjcert/enumerate.hpp"
#include "hjcert/obstruction.hpp"
#include "hjcert/profile.hpp"
#include "hjcert/rdp.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hjcert {

enum class DocKind { Table, Profile, Case, Certificate, Rdp, Fixture };
enum class DocFormat { Text, Structured };

struct ReportDocument {
    DocKind kind;
    DocFormat format;
    std::string body;
};

// The rows of the two reference tables, in their fixed order: all length-3
// strings with entry sum <= 9 (table 1) and all length-2 strings with
// entry sum <= 7 (table 2), both orientations listed separately.
const std::vector<HJString>& table_rows(int which);

ReportDocument render_table(int which, DocFormat format);
std::vector<SingularityProfile> parse_table(const std::string& structured_body);

ReportDocument render_profile(const SingularityProfile& p, DocFormat format);
SingularityProfile parse_profile(const std::string& structured_body);

ReportDocument render_case_reports(const std::vector<CaseReport>& reports, DocFormat format);
std::vector<CaseReport> parse_case_reports(const std::string& structured_body);

std::string serialize_certificate(const Certificate& cert);  // canonical JSON, byte-stable
Certificate parse_certificate(const std::string& body);
ReportDocument render_certificate(const Certificate& cert, DocFormat format);

// Re-validation of a parsed certificate from first principles: scan
// coverage (every admissible case instance of the declared c2 range is
// present exactly once), prime-bound recheck, per-report LHS, survivor
// completeness against a fresh enumeration, every survivor's numbers and
// elimination outcome, and the verdict. Returns the problems found, empty
// when the certificate is sound.
std::vector<std::string> recheck_certificate(const Certificate& cert);

ReportDocument render_rdp(const RdpReport& report, DocFormat format);

struct FixtureReport {
    std::string name;
    std::vector<std::pair<long, long>> types;  // cyclic types (n, q), fixture order
    std::vector<HJString> strings;             // canonical orientation, fixture order
    std::vector<SingularityProfile> profiles;
    std::vector<Integer> dets;
    std::optional<CoprimalityFailed> coprime_failure;
};

// "ishida": three points of type 1/3(1,2) plus one of type 1/7(1,3).
// "keum": three points of type 1/7(1,3). Both fail pairwise coprimality.
FixtureReport make_fixture(const std::string& name);

ReportDocument render_fixture(const FixtureReport& fixture, DocFormat format);

// Human-readable one-liner for an elimination reason.
std::string reason_text(const EliminationReason& reason);

} // namespace hjcert
