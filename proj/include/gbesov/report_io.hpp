#pragma once

#include <string>
#include <vector>

#include "gbesov/verify.hpp"

namespace gbesov {

/// Shortest fixed-width float formatting used in every output file: 17
/// significant digits round-trip doubles exactly, so identical runs emit
/// byte-identical files.
std::string format_double(double v);

/// Tiny append-only JSON writer with insertion-ordered keys. Input configs go
/// through a real parser; outputs go through this so the byte layout is fully
/// under our control.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(double v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(bool v);
    JsonWriter& value_int(long long v);
    JsonWriter& raw(const std::string& text);

    const std::string& str() const { return out_; }

private:
    void comma();
    std::string out_;
    std::vector<bool> needs_comma_;
    bool pending_key_ = false;
};

/// FNV-1a hash of the canonical "k=v;" parameter string, hex-encoded.
std::string params_hash(const VerificationReport& report);

/// One JSON object per report, inside {"defaults": <header>, "reports": [...]}.
std::string reports_to_json(const std::string& defaults_json,
                            const std::vector<VerificationReport>& reports);

/// CSV summary: check,params_hash,ratio,bound,pass,stability_delta.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

void write_file(const std::string& path, const std::string& contents);

}  // namespace gbesov
