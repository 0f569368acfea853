#include "hjcert/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace hjcert {

using nlohmann::json;

namespace {

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

// D^2 written over the common denominator |G_p|, the way the reference
// tables print it: "-4/8", "-12/10", or "0" for the Du Val rows.
std::string d2_over_order(const SingularityProfile& p) {
    Integer num;
    auto scaled = p.scaled_discrepancies();
    for (std::size_t j = 0; j < scaled.size(); ++j) {
        num += scaled[j] * Integer(p.string.entry(static_cast<int>(j)) - 2);
    }
    if (num == 0) return "0";
    return "-" + num.str() + "/" + p.order.str();
}

std::string tuple_over_order(const SingularityProfile& p) {
    std::ostringstream os;
    os << '(';
    auto scaled = p.scaled_discrepancies();
    for (std::size_t j = 0; j < scaled.size(); ++j) {
        if (j) os << ',';
        os << scaled[j].str();
    }
    os << ")/" << p.order.str();
    return os.str();
}

json profile_to_json(const SingularityProfile& p) {
    json row;
    row["string"] = p.string.entries();
    row["order"] = p.order.str();
    json a = json::array();
    for (const auto& d : p.discrepancies) a.push_back(d.str());
    row["discrepancies"] = std::move(a);
    json scaled = json::array();
    for (const auto& x : p.scaled_discrepancies()) scaled.push_back(x.str());
    row["scaled_discrepancies"] = std::move(scaled);
    row["d_squared"] = p.d_squared.str();
    row["gamma"] = p.gamma.str();
    return row;
}

SingularityProfile profile_from_json(const json& row) {
    HJString s(row.at("string").get<std::vector<int>>());
    SingularityProfile p = profile(s);
    // Cross-validate the serialized values instead of trusting them.
    if (Integer(row.at("order").get<std::string>()) != p.order ||
        Rational::parse(row.at("d_squared").get<std::string>()) != p.d_squared ||
        Rational::parse(row.at("gamma").get<std::string>()) != p.gamma)
        throw std::invalid_argument("profile document inconsistent with its string");
    auto ser = row.at("discrepancies").get<std::vector<std::string>>();
    if (ser.size() != p.discrepancies.size())
        throw std::invalid_argument("profile document inconsistent with its string");
    for (std::size_t j = 0; j < ser.size(); ++j) {
        if (Rational::parse(ser[j]) != p.discrepancies[j])
            throw std::invalid_argument("profile document inconsistent with its string");
    }
    return p;
}

json strings_to_json(const std::vector<HJString>& strings) {
    json arr = json::array();
    for (const auto& s : strings) arr.push_back(s.entries());
    return arr;
}

std::vector<HJString> strings_from_json(const json& arr) {
    std::vector<HJString> out;
    for (const auto& e : arr) out.emplace_back(e.get<std::vector<int>>());
    return out;
}

json reason_to_json(const EliminationReason& reason) {
    json j;
    j["kind"] = reason_kind(reason);
    if (const auto* v = std::get_if<InequalityViolated>(&reason)) {
        j["lhs"] = v->lhs.str();
        j["rhs"] = v->rhs.str();
    } else if (const auto* v = std::get_if<CoprimalityFailed>(&reason)) {
        j["det_i"] = v->det_i.str();
        j["det_j"] = v->det_j.str();
        j["gcd"] = v->gcd.str();
    } else if (const auto* v = std::get_if<SquareObstruction>(&reason)) {
        j["det_R"] = v->det_r.str();
        j["fstar_ksq"] = v->fstar_ksq.str();
        j["product"] = v->product.str();
    } else if (const auto* v = std::get_if<NonpositiveCanonicalSquare>(&reason)) {
        j["fstar_ksq"] = v->fstar_ksq.str();
    }
    return j;
}

EliminationReason reason_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "inequality-violated") {
        return InequalityViolated{Rational::parse(j.at("lhs").get<std::string>()),
                                  Rational::parse(j.at("rhs").get<std::string>())};
    }
    if (kind == "coprimality-failed") {
        return CoprimalityFailed{Integer(j.at("det_i").get<std::string>()),
                                 Integer(j.at("det_j").get<std::string>()),
                                 Integer(j.at("gcd").get<std::string>())};
    }
    if (kind == "square-obstruction") {
        return SquareObstruction{Integer(j.at("det_R").get<std::string>()),
                                 Rational::parse(j.at("fstar_ksq").get<std::string>()),
                                 Rational::parse(j.at("product").get<std::string>())};
    }
    if (kind == "nonpositive-canonical-square") {
        return NonpositiveCanonicalSquare{Rational::parse(j.at("fstar_ksq").get<std::string>())};
    }
    if (kind == "survives") return Survives{};
    throw std::invalid_argument("unknown elimination reason kind '" + kind + "'");
}

json report_to_json(const CaseReport& report) {
    json j;
    j["c2"] = report.instance.numerics.c2;
    j["ksq"] = report.instance.numerics.ksq_prime;
    j["r"] = report.instance.r;
    j["partition"] = report.instance.partition;
    j["lhs"] = report.lhs.str();
    j["rhs_upper_bound"] = report.rhs_upper_bound.str();
    if (report.max_coprime_rhs) {
        json m;
        m["value"] = report.max_coprime_rhs->value.str();
        m["witness"] = strings_to_json(report.max_coprime_rhs->witness.strings());
        j["max_coprime_rhs"] = std::move(m);
    } else {
        j["max_coprime_rhs"] = nullptr;
    }
    json bounds = json::array();
    for (const auto& b : report.exhaustiveness) {
        json jb;
        jb["length"] = b.length;
        jb["threshold"] = b.threshold.str();
        jb["sum_cap"] = b.sum_cap;
        jb["candidates"] = b.candidates;
        bounds.push_back(std::move(jb));
    }
    j["exhaustiveness"] = std::move(bounds);
    json survivors = json::array();
    for (const auto& s : report.survivors) {
        json js;
        js["strings"] = strings_to_json(s.config.strings());
        js["rhs"] = s.rhs.str();
        js["det_R"] = s.det_r.str();
        js["fstar_ksq"] = s.fksq.str();
        js["reason"] = reason_to_json(s.reason);
        json audit = json::array();
        for (const auto& a : s.audit) audit.push_back(reason_to_json(a));
        js["audit"] = std::move(audit);
        survivors.push_back(std::move(js));
    }
    j["survivors"] = std::move(survivors);
    j["eliminated"] = report.eliminated;
    return j;
}

CaseReport report_from_json(const json& j) {
    CaseInstance instance(j.at("c2").get<int>(), j.at("r").get<int>(),
                          j.at("partition").get<std::vector<int>>());
    CaseReport report{instance,
                      Rational::parse(j.at("lhs").get<std::string>()),
                      Rational::parse(j.at("rhs_upper_bound").get<std::string>()),
                      {},
                      std::nullopt,
                      {},
                      j.at("eliminated").get<bool>()};
    if (!j.at("max_coprime_rhs").is_null()) {
        const auto& m = j.at("max_coprime_rhs");
        report.max_coprime_rhs =
            MaxRhsResult{Rational::parse(m.at("value").get<std::string>()),
                         Configuration(strings_from_json(m.at("witness")))};
    }
    for (const auto& jb : j.at("exhaustiveness")) {
        report.exhaustiveness.push_back({jb.at("length").get<int>(),
                                         Rational::parse(jb.at("threshold").get<std::string>()),
                                         jb.at("sum_cap").get<int>(),
                                         jb.at("candidates").get<int>()});
    }
    for (const auto& js : j.at("survivors")) {
        SurvivorRecord record{Configuration(strings_from_json(js.at("strings"))),
                              Rational::parse(js.at("rhs").get<std::string>()),
                              Integer(js.at("det_R").get<std::string>()),
                              Rational::parse(js.at("fstar_ksq").get<std::string>()),
                              reason_from_json(js.at("reason")),
                              {}};
        for (const auto& a : js.at("audit")) record.audit.push_back(reason_from_json(a));
        report.survivors.push_back(std::move(record));
    }
    return report;
}

} // namespace

const std::vector<HJString>& table_rows(int which) {
    static const auto build = [](int length, int max_sum) {
        std::vector<HJString> rows;
        if (length == 2) {
            for (int n1 = 2; n1 <= max_sum - 2; ++n1)
                for (int n2 = n1; n1 + n2 <= max_sum; ++n2) rows.emplace_back(std::vector<int>{n1, n2});
        } else {
            for (int n1 = 2; n1 <= max_sum - 4; ++n1)
                for (int n3 = n1; n1 + n3 + 2 <= max_sum; ++n3)
                    for (int n2 = 2; n1 + n2 + n3 <= max_sum; ++n2)
                        rows.emplace_back(std::vector<int>{n1, n2, n3});
        }
        std::sort(rows.begin(), rows.end(), [](const HJString& a, const HJString& b) {
            Integer ka = continuant(a), kb = continuant(b);
            if (ka != kb) return ka < kb;
            if (a.sum() != b.sum()) return a.sum() < b.sum();
            return a.entries() < b.entries();
        });
        return rows;
    };
    static const std::vector<HJString> table1 = build(3, 9);
    static const std::vector<HJString> table2 = build(2, 7);
    if (which == 1) return table1;
    if (which == 2) return table2;
    throw std::invalid_argument("table_rows: table index must be 1 or 2");
}

ReportDocument render_table(int which, DocFormat format) {
    const auto& rows = table_rows(which);
    std::vector<SingularityProfile> profiles;
    profiles.reserve(rows.size());
    for (const auto& s : rows) profiles.push_back(profile(s));

    if (format == DocFormat::Structured) {
        json j;
        j["kind"] = "table";
        j["which"] = which;
        json arr = json::array();
        for (const auto& p : profiles) arr.push_back(profile_to_json(p));
        j["rows"] = std::move(arr);
        return {DocKind::Table, format, j.dump(2) + "\n"};
    }

    const int length = which == 1 ? 3 : 2;
    std::ostringstream os;
    std::string head_string = length == 3 ? "(n1,n2,n3)" : "(n1,n2)";
    std::string head_tuple = length == 3 ? "(a1,a2,a3)" : "(a1,a2)";
    os << pad(head_string, 12) << pad("|G_p|", 7) << pad(head_tuple, 16) << pad("D_p^2", 9)
       << "1/|G_p|+D_p^2/3" << "\n";
    for (const auto& p : profiles) {
        os << pad("(" + p.string.str() + ")", 12) << pad(p.order.str(), 7)
           << pad(tuple_over_order(p), 16) << pad(d2_over_order(p), 9) << p.gamma.str() << "\n";
    }
    return {DocKind::Table, format, os.str()};
}

std::vector<SingularityProfile> parse_table(const std::string& structured_body) {
    json j = json::parse(structured_body);
    if (j.at("kind").get<std::string>() != "table")
        throw std::invalid_argument("parse_table: not a table document");
    std::vector<SingularityProfile> out;
    for (const auto& row : j.at("rows")) out.push_back(profile_from_json(row));
    return out;
}

ReportDocument render_profile(const SingularityProfile& p, DocFormat format) {
    if (format == DocFormat::Structured) {
        json j = profile_to_json(p);
        j["kind"] = "profile";
        return {DocKind::Profile, format, j.dump(2) + "\n"};
    }
    std::ostringstream os;
    os << "string: (" << p.string.str() << ")\n"
       << "order: " << p.order.str() << "\n"
       << "discrepancies: " << tuple_over_order(p) << "\n"
       << "D^2: " << p.d_squared.str() << "\n"
       << "gamma: " << p.gamma.str() << "\n";
    return {DocKind::Profile, format, os.str()};
}

SingularityProfile parse_profile(const std::string& structured_body) {
    return profile_from_json(json::parse(structured_body));
}

std::string reason_text(const EliminationReason& reason) {
    std::ostringstream os;
    if (const auto* v = std::get_if<InequalityViolated>(&reason)) {
        os << "inequality violated: RHS " << v->rhs.str() << " < LHS " << v->lhs.str();
    } else if (const auto* v = std::get_if<CoprimalityFailed>(&reason)) {
        os << "coprimality failed: det " << v->det_i.str() << " and det " << v->det_j.str()
           << " share gcd " << v->gcd.str();
    } else if (const auto* v = std::get_if<SquareObstruction>(&reason)) {
        os << "square obstruction: " << v->det_r.str() << " * " << v->fstar_ksq.str() << " = "
           << v->product.str() << " is not a perfect square";
    } else if (const auto* v = std::get_if<NonpositiveCanonicalSquare>(&reason)) {
        os << "nonpositive canonical square: (f*K)^2 = " << v->fstar_ksq.str();
    } else {
        os << "survives every test";
    }
    return os.str();
}

namespace {

void render_report_text(std::ostream& os, const CaseReport& report) {
    const auto& inst = report.instance;
    os << "  r = " << inst.r << ", partition (";
    for (std::size_t i = 0; i < inst.partition.size(); ++i) {
        if (i) os << ',';
        os << inst.partition[i];
    }
    os << "): LHS = " << report.lhs.str() << ", slot-max RHS bound = "
       << report.rhs_upper_bound.str() << "\n";
    os << "    generation: ";
    for (std::size_t i = 0; i < report.exhaustiveness.size(); ++i) {
        const auto& b = report.exhaustiveness[i];
        if (i) os << "; ";
        os << "len " << b.length << ": gamma >= " << b.threshold.str() << ", sum(n) <= "
           << b.sum_cap << ", " << b.candidates << " candidates";
    }
    os << "\n";
    if (report.survivors.empty()) {
        os << "    inequality survivors: none\n";
    } else {
        os << "    inequality survivors: " << report.survivors.size() << "\n";
        for (const auto& s : report.survivors) {
            os << "      " << s.config.str() << "  RHS = " << s.rhs.str() << ", det_R = "
               << s.det_r.str() << ", (f*K)^2 = " << s.fksq.str() << "\n"
               << "        -> " << reason_text(s.reason) << "\n";
            if (s.audit.size() > 1) {
                os << "        audit:";
                for (const auto& a : s.audit) os << " [" << reason_text(a) << "]";
                os << "\n";
            }
        }
    }
    if (report.max_coprime_rhs) {
        os << "    max coprime RHS = " << report.max_coprime_rhs->value.str() << " at "
           << report.max_coprime_rhs->witness.str() << "\n";
    }
    os << "    eliminated: " << (report.eliminated ? "yes" : "NO") << "\n";
}

} // namespace

ReportDocument render_case_reports(const std::vector<CaseReport>& reports, DocFormat format) {
    if (format == DocFormat::Structured) {
        json j;
        j["kind"] = "case";
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        j["reports"] = std::move(arr);
        return {DocKind::Case, format, j.dump(2) + "\n"};
    }
    std::ostringstream os;
    int last_c2 = -1;
    for (const auto& report : reports) {
        if (report.instance.numerics.c2 != last_c2) {
            last_c2 = report.instance.numerics.c2;
            os << "c2 = " << last_c2 << " (K'^2 = " << report.instance.numerics.ksq_prime
               << ", curve budget " << curve_budget(last_c2) << ")\n";
        }
        render_report_text(os, report);
    }
    return {DocKind::Case, format, os.str()};
}

std::vector<CaseReport> parse_case_reports(const std::string& structured_body) {
    json j = json::parse(structured_body);
    if (j.at("kind").get<std::string>() != "case")
        throw std::invalid_argument("parse_case_reports: not a case document");
    std::vector<CaseReport> out;
    for (const auto& r : j.at("reports")) out.push_back(report_from_json(r));
    return out;
}

std::string serialize_certificate(const Certificate& cert) {
    json j;
    j["kind"] = "certificate";
    j["version"] = cert.version;
    j["options"] = {{"positivity_filter", cert.positivity_filter}};
    json axioms = json::array();
    for (const auto& a : cert.axioms) axioms.push_back({{"id", a.id}, {"statement", a.statement}});
    j["axioms"] = std::move(axioms);
    j["scan"] = {{"c2_min", cert.c2_min},
                 {"c2_max", cert.c2_max},
                 {"max_points", cert.max_points},
                 {"rationale", cert.scan_rationale}};
    j["prime_reciprocal_recheck"] = {{"r_min", cert.prime_recheck_r_min},
                                     {"r_max", cert.prime_recheck_r_max},
                                     {"holds", cert.prime_recheck_ok}};
    json cases = json::array();
    for (const auto& report : cert.cases) cases.push_back(report_to_json(report));
    j["cases"] = std::move(cases);
    j["verdict"] = cert.verdict;
    return j.dump(2) + "\n";
}

Certificate parse_certificate(const std::string& body) {
    json j = json::parse(body);
    if (j.at("kind").get<std::string>() != "certificate")
        throw std::invalid_argument("parse_certificate: not a certificate document");
    Certificate cert;
    cert.version = j.at("version").get<std::string>();
    cert.positivity_filter = j.at("options").at("positivity_filter").get<bool>();
    for (const auto& a : j.at("axioms")) {
        cert.axioms.push_back({a.at("id").get<std::string>(), a.at("statement").get<std::string>()});
    }
    cert.c2_min = j.at("scan").at("c2_min").get<int>();
    cert.c2_max = j.at("scan").at("c2_max").get<int>();
    cert.max_points = j.at("scan").at("max_points").get<int>();
    cert.scan_rationale = j.at("scan").at("rationale").get<std::string>();
    cert.prime_recheck_r_min = j.at("prime_reciprocal_recheck").at("r_min").get<int>();
    cert.prime_recheck_r_max = j.at("prime_reciprocal_recheck").at("r_max").get<int>();
    cert.prime_recheck_ok = j.at("prime_reciprocal_recheck").at("holds").get<bool>();
    for (const auto& c : j.at("cases")) cert.cases.push_back(report_from_json(c));
    cert.verdict = j.at("verdict").get<bool>();
    return cert;
}

std::vector<std::string> recheck_certificate(const Certificate& cert) {
    std::vector<std::string> problems;
    auto flag = [&problems](const std::string& message) { problems.push_back(message); };

    if (cert.version != "hjcert/1") flag("unknown version '" + cert.version + "'");
    if (cert.axioms.size() != 3) flag("expected 3 axioms");
    if (cert.c2_min < kC2Min || cert.c2_max > kC2Max || cert.c2_min > cert.c2_max)
        flag("scan bounds outside [4, 15]");
    if (cert.max_points != kMaxSingularPoints) flag("singular point cap is not 4");

    bool prime_ok = true;
    for (int r = cert.prime_recheck_r_min; r <= cert.prime_recheck_r_max; ++r) {
        if (r < 5 || !reciprocal_prime_bound(r).second) prime_ok = false;
    }
    if (prime_ok != cert.prime_recheck_ok) flag("prime reciprocal recheck flag wrong");

    // coverage: the reports must be exactly the admissible case instances
    // of the declared range, in canonical order
    std::vector<CaseInstance> expected;
    for (int c2 = cert.c2_min; c2 <= cert.c2_max; ++c2) {
        auto group = case_instances_for(c2);
        expected.insert(expected.end(), group.begin(), group.end());
    }
    if (cert.cases.size() != expected.size()) {
        flag("expected " + std::to_string(expected.size()) + " case instances, found " +
             std::to_string(cert.cases.size()));
    }

    bool all_eliminated = true;
    EliminationOptions options{cert.positivity_filter};
    for (std::size_t i = 0; i < cert.cases.size(); ++i) {
        const auto& report = cert.cases[i];
        const auto& inst = report.instance;
        std::string where = "case c2=" + std::to_string(inst.numerics.c2) +
                            " r=" + std::to_string(inst.r) + ": ";
        if (i < expected.size() && !(inst == expected[i])) flag(where + "out of canonical order");
        if (report.lhs != lhs_value(inst.numerics.c2, inst.r)) flag(where + "LHS wrong");

        Rational upper;
        for (int part : inst.partition) upper += max_gamma_for_length(part);
        if (report.rhs_upper_bound != upper) flag(where + "slot-max RHS bound wrong");

        auto fresh = enumerate_survivors(inst);
        if (fresh.size() != report.survivors.size()) {
            flag(where + "survivor list incomplete: " + std::to_string(report.survivors.size()) +
                 " listed, " + std::to_string(fresh.size()) + " found");
        }
        for (std::size_t k = 0; k < report.survivors.size(); ++k) {
            const auto& s = report.survivors[k];
            if (k < fresh.size() && !(fresh[k].first == s.config && fresh[k].second == s.rhs)) {
                flag(where + "survivor " + s.config.str() + " disagrees with fresh enumeration");
            }
            if (s.rhs != rhs_value(s.config.strings())) flag(where + "RHS wrong");
            Integer det_r = 1;
            for (const auto& d : determinants(s.config)) det_r *= d;
            if (s.det_r != det_r) flag(where + "det_R wrong");
            if (s.fksq != fstar_ksq(inst.numerics.ksq_prime, s.config))
                flag(where + "(f*K)^2 wrong");
            auto outcome = eliminate(inst, s.config, options);
            if (!(outcome.reason == s.reason) || !(outcome.audit == s.audit))
                flag(where + "elimination outcome for " + s.config.str() + " does not re-derive");
            if (is_survives(s.reason)) all_eliminated = false;
        }
        bool has_survivor = false;
        for (const auto& s : report.survivors) has_survivor |= is_survives(s.reason);
        if (report.eliminated == has_survivor) flag(where + "eliminated flag inconsistent");

        if (report.max_coprime_rhs) {
            const auto& m = *report.max_coprime_rhs;
            if (m.value != rhs_value(m.witness.strings()))
                flag(where + "coprime maximum value does not match its witness");
            if (pairwise_coprime(determinants(m.witness)))
                flag(where + "coprime maximum witness not coprime");
            auto independent = max_coprime_rhs_for_partition(inst.partition);
            if (!independent || !(independent->value == m.value))
                flag(where + "coprime maximum does not re-derive");
        }
    }
    if (cert.verdict != (all_eliminated && prime_ok)) flag("verdict inconsistent with contents");
    return problems;
}

ReportDocument render_certificate(const Certificate& cert, DocFormat format) {
    if (format == DocFormat::Structured) {
        return {DocKind::Certificate, format, serialize_certificate(cert)};
    }
    std::ostringstream os;
    os << "certificate " << cert.version << " (positivity filter "
       << (cert.positivity_filter ? "on" : "off") << ")\n";
    os << "axioms:\n";
    for (const auto& a : cert.axioms) os << "  - " << a.id << ": " << a.statement << "\n";
    os << "scan: c2 = " << cert.c2_min << ".." << cert.c2_max << ", at most " << cert.max_points
       << " singular points\n  " << cert.scan_rationale << "\n";
    os << "prime reciprocal recheck r = " << cert.prime_recheck_r_min << ".."
       << cert.prime_recheck_r_max << ": " << (cert.prime_recheck_ok ? "holds" : "FAILS") << "\n";
    os << "\n";
    ReportDocument body = render_case_reports(cert.cases, DocFormat::Text);
    os << body.body;
    os << "\nverdict: " << (cert.verdict ? "every case eliminated" : "SURVIVOR FOUND") << "\n";
    return {DocKind::Certificate, format, os.str()};
}

ReportDocument render_rdp(const RdpReport& report, DocFormat format) {
    std::vector<int> missing;
    for (int ksq = 1; ksq <= 8; ++ksq) {
        bool found = std::any_of(report.checks.begin(), report.checks.end(),
                                 [ksq](const RdpCrossCheck& c) { return c.candidate.ksq == ksq; });
        if (!found) missing.push_back(ksq);
    }

    if (format == DocFormat::Structured) {
        json j;
        j["kind"] = "rdp";
        json arr = json::array();
        for (const auto& check : report.checks) {
            json jc;
            jc["ksq"] = check.candidate.ksq;
            jc["lattice"] = check.candidate.sum.name();
            jc["det"] = check.candidate.sum.det().str();
            jc["m"] = check.candidate.m.str();
            jc["ruled_out"] = check.ruled_out;
            if (check.reason) jc["reason"] = reason_to_json(*check.reason);
            if (!check.note.empty()) jc["note"] = check.note;
            if (check.config) jc["strings"] = strings_to_json(check.config->strings());
            if (check.instance) jc["c2"] = check.instance->numerics.c2;
            arr.push_back(std::move(jc));
        }
        j["candidates"] = std::move(arr);
        j["no_candidates_for_ksq"] = missing;
        return {DocKind::Rdp, format, j.dump(2) + "\n"};
    }

    std::ostringstream os;
    os << "rational-double-point candidates (rank R = 9 - K'^2, K'^2 = m^2 |det R|, coprime "
          "summands):\n";
    for (const auto& check : report.checks) {
        os << "  K'^2 = " << check.candidate.ksq << "  R = " << pad(check.candidate.sum.name(), 7)
           << " det " << pad(check.candidate.sum.det().str(), 3) << " m = "
           << check.candidate.m.str() << "  ";
        if (check.ruled_out) {
            os << "RULED OUT";
            if (check.instance) {
                os << " via c2 = " << check.instance->numerics.c2 << ", "
                   << check.config->str() << ": " << reason_text(*check.reason);
            }
        } else {
            os << "open";
            if (!check.note.empty()) os << " (" << check.note << ")";
        }
        os << "\n";
    }
    for (int ksq : missing) os << "  K'^2 = " << ksq << "  no candidates\n";
    return {DocKind::Rdp, format, os.str()};
}

FixtureReport make_fixture(const std::string& name) {
    FixtureReport fixture;
    fixture.name = name;
    if (name == "ishida") {
        fixture.types = {{3, 2}, {3, 2}, {3, 2}, {7, 3}};
    } else if (name == "keum") {
        fixture.types = {{7, 3}, {7, 3}, {7, 3}};
    } else {
        throw std::invalid_argument("unknown fixture '" + name + "' (expected ishida or keum)");
    }
    for (auto [n, q] : fixture.types) {
        HJString s = canonical_string(hj_expansion(n, q));
        fixture.profiles.push_back(profile(s));
        fixture.strings.push_back(std::move(s));
    }
    fixture.dets = determinants(fixture.strings);
    fixture.coprime_failure = pairwise_coprime(fixture.dets);
    return fixture;
}

ReportDocument render_fixture(const FixtureReport& fixture, DocFormat format) {
    if (format == DocFormat::Structured) {
        json j;
        j["kind"] = "fixture";
        j["name"] = fixture.name;
        json types = json::array();
        for (auto [n, q] : fixture.types) types.push_back({{"n", n}, {"q", q}});
        j["types"] = std::move(types);
        j["strings"] = strings_to_json(fixture.strings);
        json dets = json::array();
        for (const auto& d : fixture.dets) dets.push_back(d.str());
        j["determinants"] = std::move(dets);
        if (fixture.coprime_failure) {
            j["coprimality"] = reason_to_json(EliminationReason(*fixture.coprime_failure));
        } else {
            j["coprimality"] = nullptr;
        }
        json profiles = json::array();
        for (const auto& p : fixture.profiles) profiles.push_back(profile_to_json(p));
        j["profiles"] = std::move(profiles);
        return {DocKind::Fixture, format, j.dump(2) + "\n"};
    }

    std::ostringstream os;
    os << "fixture: " << fixture.name << "\n";
    os << "singularity types:";
    for (auto [n, q] : fixture.types) os << " 1/" << n << "(1," << q << ")";
    os << "\nstrings:";
    for (const auto& s : fixture.strings) os << " (" << s.str() << ")";
    os << "\ndeterminants:";
    for (const auto& d : fixture.dets) os << " " << d.str();
    os << "\n";
    if (fixture.coprime_failure) {
        os << "obstruction: " << reason_text(EliminationReason(*fixture.coprime_failure)) << "\n";
    } else {
        os << "obstruction: none (determinants pairwise coprime)\n";
    }
    os << "profiles:\n";
    for (const auto& p : fixture.profiles) {
        os << "  (" << p.string.str() << "): order " << p.order.str() << ", discrepancies "
           << tuple_over_order(p) << ", D^2 = " << p.d_squared.str() << ", gamma = "
           << p.gamma.str() << "\n";
    }
    return {DocKind::Fixture, format, os.str()};
}

} // namespace hjcert
