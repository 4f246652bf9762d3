#include "gbesov/report_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace gbesov {

std::string format_double(double v) {
    if (std::isnan(v)) return "\"nan\"";
    if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void JsonWriter::comma() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!needs_comma_.empty()) {
        if (needs_comma_.back()) out_ += ',';
        needs_comma_.back() = true;
    }
}

JsonWriter& JsonWriter::begin_object() {
    comma();
    out_ += '{';
    needs_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    needs_comma_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    comma();
    out_ += '[';
    needs_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    needs_comma_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
    comma();
    out_ += '"';
    out_ += k;
    out_ += "\":";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    comma();
    out_ += format_double(v);
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
    comma();
    out_ += '"';
    for (char c : v) {
        if (c == '"' || c == '\\') out_ += '\\';
        out_ += c;
    }
    out_ += '"';
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    comma();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value_int(long long v) {
    comma();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::raw(const std::string& text) {
    comma();
    out_ += text;
    return *this;
}

std::string params_hash(const VerificationReport& report) {
    std::string canon = report.name + ";";
    for (const auto& [k, v] : report.params) {
        canon += k;
        canon += '=';
        canon += format_double(v);
        canon += ';';
    }
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

void report_to_json(JsonWriter& w, const VerificationReport& r) {
    w.begin_object();
    w.key("check").value(r.name);
    w.key("params_hash").value(params_hash(r));
    w.key("params").begin_object();
    for (const auto& [k, v] : r.params) w.key(k).value(v);
    w.end_object();
    w.key("ratio").value(r.ratio);
    if (r.finite_stable)
        w.key("bound").value(std::string("finite+stable"));
    else
        w.key("bound").value(r.bound);
    w.key("stability_delta").value(r.stability_delta);
    w.key("slack").value(r.slack);
    w.key("vacuous").value(r.vacuous);
    w.key("pass").value(r.pass);
    w.key("witness").value(r.witness);
    w.key("note").value(r.note);
    w.end_object();
}

}  // namespace

std::string reports_to_json(const std::string& defaults_json,
                            const std::vector<VerificationReport>& reports) {
    JsonWriter w;
    w.begin_object();
    w.key("defaults").raw(defaults_json);
    w.key("reports").begin_array();
    for (const auto& r : reports) report_to_json(w, r);
    w.end_array();
    w.end_object();
    return w.str() + "\n";
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
    std::string out = "check,params_hash,ratio,bound,pass,stability_delta\n";
    for (const auto& r : reports) {
        out += r.name;
        out += ',';
        out += params_hash(r);
        out += ',';
        out += format_double(r.ratio);
        out += ',';
        out += r.finite_stable ? std::string("finite+stable") : format_double(r.bound);
        out += ',';
        out += r.pass ? "true" : "false";
        out += ',';
        out += format_double(r.stability_delta);
        out += '\n';
    }
    return out;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << contents;
}

}  // namespace gbesov
