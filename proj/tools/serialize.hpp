#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "umb/dyadic.hpp"
#include "umb/numeric.hpp"
#include "umb/padic.hpp"

namespace umbcli {

// Insertion-ordered so documents read top-down like the reports they mirror;
// emission order is fixed, which keeps output byte-identical across runs.
using Json = nlohmann::ordered_json;

// Shortest decimal form that round-trips; shared by JSON and CSV cells.
std::string format_double(double v);

std::string rational_str(const umb::BigRational& x);
double rational_double(const umb::BigRational& x);

// Exact values are serialized twice: key holds the authoritative symbolic
// form ("2^-19", "3/2"), key_decimal a double for plotting.
void put_exact(Json& obj, const std::string& key, const umb::Dyadic& v);
void put_exact(Json& obj, const std::string& key, const umb::PAdicNorm& v);
void put_exact(Json& obj, const std::string& key, const umb::BigRational& v);

// RFC-4180-style quoting: fields containing comma, quote or newline are
// wrapped in double quotes with embedded quotes doubled.
std::string csv_field(const std::string& s);

class CsvWriter {
public:
    void row(const std::vector<std::string>& cells);
    const std::string& str() const { return out_; }

private:
    std::string out_;
};

// The one-document-per-run JSON envelope: config echo plus report body.
std::string json_document(const Json& config, const Json& report);

}  // namespace umbcli
