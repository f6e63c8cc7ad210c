#include "cli/report.hpp"

#include "cdgamma/sampling.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>

namespace cdgamma::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string shortest(double x) {
    if (std::isnan(x)) return "nan";
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join_coords(const std::vector<double>& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += shortest(v[i]);
    }
    return s;
}

void write_json(const Report& r, std::ostream& out) {
    Json j;
    j["tool"] = "cdgamma";
    j["command"] = r.command;
    j["subject"] = r.subject;
    j["prng"] = Sampler::algorithm;
    j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
    Json cfg = Json::object();
    for (const auto& [k, v] : r.config) cfg[k] = v;
    j["config"] = cfg;
    j["config_hash"] = r.config_hash();
    Json recs = Json::array();
    for (std::size_t i = 0; i < r.records.size(); ++i) {
        const Record& rec = r.records[i];
        Json e;
        e["index"] = i;
        e["suite"] = rec.suite;
        e["input"] = rec.input;
        e["method"] = rec.method;
        Json val = Json::array();
        for (double x : rec.value) val.push_back(number_or_null(x));
        e["value"] = val;
        e["residual"] = number_or_null(rec.residual);
        e["tolerance"] = number_or_null(rec.tolerance);
        e["error_estimate"] = number_or_null(rec.error_estimate);
        e["asserted"] = rec.asserted;
        e["passed"] = rec.passed;
        if (!rec.note.empty()) e["note"] = rec.note;
        if (!rec.diagnostics.empty()) {
            Json d = Json::object();
            for (const auto& [k, v] : rec.diagnostics) d[k] = number_or_null(v);
            e["diagnostics"] = d;
        }
        e["config_hash"] = rec.config_hash;
        if (rec.seconds) e["seconds"] = *rec.seconds;
        recs.push_back(std::move(e));
    }
    j["records"] = recs;
    j["summary"] = {{"records", r.records.size()},
                    {"asserted", r.asserted_count()},
                    {"failures", r.failures()},
                    {"max_asserted_residual", number_or_null(r.max_asserted_residual())},
                    {"status", r.failures() == 0 ? "pass" : "fail"}};
    out << j.dump(2) << '\n';
}

void write_csv(const Report& r, std::ostream& out) {
    out << "index,suite,input,method,value,residual,tolerance,error_estimate,asserted,passed,note,config_hash\n";
    for (std::size_t i = 0; i < r.records.size(); ++i) {
        const Record& rec = r.records[i];
        out << i << ',' << csv_field(rec.suite) << ',' << csv_field(rec.input) << ',' << csv_field(rec.method) << ','
            << join_coords(rec.value, ';') << ',' << shortest(rec.residual) << ',' << shortest(rec.tolerance) << ','
            << shortest(rec.error_estimate) << ',' << (rec.asserted ? "true" : "false") << ','
            << (rec.passed ? "true" : "false") << ',' << csv_field(rec.note) << ',' << rec.config_hash << '\n';
    }
}

void write_text(const Report& r, std::ostream& out) {
    out << r.command << ' ' << r.subject;
    if (r.seed) out << " (seed " << *r.seed << ")";
    out << "  config " << r.config_hash() << '\n';
    for (std::size_t i = 0; i < r.records.size(); ++i) {
        const Record& rec = r.records[i];
        out << std::setw(4) << i << "  " << (rec.asserted ? (rec.passed ? "PASS " : "FAIL ") : "info ") << rec.suite
            << "  " << rec.method << "  " << rec.input << "\n      value [" << join_coords(rec.value, ' ') << "]";
        if (!std::isnan(rec.residual)) out << "  residual " << shortest(rec.residual);
        if (!std::isnan(rec.tolerance)) out << " (tol " << shortest(rec.tolerance) << ")";
        out << "  err " << shortest(rec.error_estimate);
        for (const auto& [k, v] : rec.diagnostics) out << "  " << k << '=' << shortest(v);
        if (!rec.note.empty()) out << "  # " << rec.note;
        out << '\n';
    }
    out << "summary: " << r.records.size() << " records, " << r.asserted_count() << " asserted, " << r.failures()
        << " failed, max asserted residual " << shortest(r.max_asserted_residual()) << '\n';
}

} // namespace

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    static const char* digits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i, h >>= 4) buf[i] = digits[h & 0xf];
    buf[16] = '\0';
    return buf;
}

std::string Report::config_hash() const {
    std::string canon = command + '\n' + subject + '\n';
    for (const auto& [k, v] : config) canon += k + '=' + v + '\n';
    return fnv1a_hex(canon);
}

int Report::failures() const {
    int n = 0;
    for (const Record& r : records) n += (r.asserted && !r.passed);
    return n;
}

int Report::asserted_count() const {
    int n = 0;
    for (const Record& r : records) n += r.asserted;
    return n;
}

double Report::max_asserted_residual() const {
    double m = std::numeric_limits<double>::quiet_NaN();
    for (const Record& r : records) {
        if (r.asserted && !std::isnan(r.residual) && !(r.residual <= m)) m = r.residual;
    }
    return m;
}

std::vector<double> coords_of(const CDNumber& z) { return {z.coords().begin(), z.coords().end()}; }

void write_report(const Report& report, OutputFormat format, std::ostream& out) {
    switch (format) {
    case OutputFormat::json: write_json(report, out); break;
    case OutputFormat::csv: write_csv(report, out); break;
    case OutputFormat::text: write_text(report, out); break;
    }
}

} // namespace cdgamma::cli
