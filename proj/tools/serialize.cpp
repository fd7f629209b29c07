#include "serialize.hpp"

namespace umbcli {

std::string format_double(double v) { return Json(v).dump(); }

std::string rational_str(const umb::BigRational& x) { return x.str(); }

double rational_double(const umb::BigRational& x) { return x.convert_to<double>(); }

void put_exact(Json& obj, const std::string& key, const umb::Dyadic& v) {
    obj[key] = v.str();
    obj[key + "_decimal"] = v.to_double();
}

void put_exact(Json& obj, const std::string& key, const umb::PAdicNorm& v) {
    obj[key] = v.str();
    obj[key + "_decimal"] = v.to_double();
}

void put_exact(Json& obj, const std::string& key, const umb::BigRational& v) {
    obj[key] = rational_str(v);
    obj[key + "_decimal"] = rational_double(v);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out;
    out.reserve(s.size() + 2);
    out += '"';
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ += ',';
        out_ += csv_field(cells[i]);
    }
    out_ += '\n';
}

std::string json_document(const Json& config, const Json& report) {
    Json doc;
    doc["config"] = config;
    doc["report"] = report;
    return doc.dump(2) + "\n";
}

}  // namespace umbcli
