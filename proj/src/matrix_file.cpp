#include "mlt/matrix_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mlt/errors.hpp"

namespace mlt {

namespace {

using nlohmann::json;

void put_number(std::string& out, double x) {
    // A bare "-0" would come back from the JSON parser as integer zero.
    if (x == 0.0 && std::signbit(x)) {
        out += "-0.0";
        return;
    }
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    out.append(buf, res.ptr);
}

void put_pair(std::string& out, Complex z) {
    out += '[';
    put_number(out, z.real());
    out += ", ";
    put_number(out, z.imag());
    out += ']';
}

const json& field(const json& obj, const char* name) {
    const auto it = obj.find(name);
    if (it == obj.end()) {
        throw FormatError(std::string("missing field \"") + name + "\"");
    }
    return *it;
}

std::size_t positive_size(const json& v, const char* what) {
    if (!v.is_number_integer() || v.get<std::int64_t>() <= 0) {
        throw FormatError(std::string(what) + " must be a positive integer");
    }
    return v.get<std::size_t>();
}

Complex parse_pair(const json& v) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw FormatError("complex values must be [re, im] number pairs");
    }
    const Complex z{v[0].get<double>(), v[1].get<double>()};
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw FormatError("complex values must be finite");
    }
    return z;
}

ComplexMatrix parse_dense(const json& doc) {
    const std::size_t rows = positive_size(field(doc, "rows"), "rows");
    const std::size_t cols = positive_size(field(doc, "cols"), "cols");
    const json& data = field(doc, "data");
    if (!data.is_array() || data.size() != rows * cols) {
        throw FormatError("data must hold rows*cols = " + std::to_string(rows * cols) + " entries");
    }
    std::vector<Complex> values;
    values.reserve(data.size());
    for (const auto& v : data) values.push_back(parse_pair(v));
    return ComplexMatrix(rows, cols, std::move(values));
}

MultilevelToeplitz parse_mltoeplitz(const json& doc) {
    const json& dims_json = field(doc, "dims");
    if (!dims_json.is_array() || dims_json.empty()) {
        throw FormatError("dims must be a non-empty array");
    }
    std::vector<std::size_t> dims;
    for (const auto& d : dims_json) dims.push_back(positive_size(d, "dims entries"));
    MultilevelToeplitz t{LevelDims(std::move(dims))};

    const json& coeffs = field(doc, "coeffs");
    if (!coeffs.is_array() || coeffs.size() != t.shape().coeff_count()) {
        throw FormatError("coeffs must hold exactly " + std::to_string(t.shape().coeff_count()) + " records");
    }
    std::vector<bool> seen(t.shape().coeff_count(), false);
    for (const auto& rec : coeffs) {
        if (!rec.is_object()) throw FormatError("coefficient records must be objects");
        const json& off = field(rec, "offset");
        if (!off.is_array()) throw FormatError("offset must be an array");
        std::vector<int> offset;
        for (const auto& k : off) {
            if (!k.is_number_integer()) throw FormatError("offset components must be integers");
            offset.push_back(k.get<int>());
        }
        std::size_t index = 0;
        try {
            index = t.index_of(offset);
        } catch (const std::out_of_range& e) {
            throw FormatError(std::string("bad offset: ") + e.what());
        }
        if (seen[index]) throw FormatError("duplicate offset in coeffs");
        seen[index] = true;
        t.coeffs()[index] = parse_pair(field(rec, "value"));
    }
    return t;
}

}  // namespace

std::string serialize(const ComplexMatrix& a) {
    std::string out = "{\n  \"kind\": \"dense\",\n  \"rows\": " + std::to_string(a.rows()) +
                      ",\n  \"cols\": " + std::to_string(a.cols()) + ",\n  \"data\": [";
    for (std::size_t r = 0; r < a.rows(); ++r) {
        out += "\n    ";
        for (std::size_t c = 0; c < a.cols(); ++c) {
            put_pair(out, a(r, c));
            if (r + 1 < a.rows() || c + 1 < a.cols()) out += c + 1 < a.cols() ? ", " : ",";
        }
    }
    out += "\n  ]\n}\n";
    return out;
}

std::string serialize(const MultilevelToeplitz& t) {
    std::string out = "{\n  \"kind\": \"mltoeplitz\",\n  \"dims\": [";
    const auto& dims = t.shape().dims();
    for (std::size_t i = 0; i < dims.size(); ++i) {
        out += (i ? ", " : "") + std::to_string(dims[i]);
    }
    out += "],\n  \"coeffs\": [";
    const auto coeffs = t.coeffs();
    for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
        out += idx ? ",\n    " : "\n    ";
        out += "{\"offset\": [";
        const Offset offset = t.offset_of(idx);
        for (std::size_t i = 0; i < offset.size(); ++i) {
            out += (i ? ", " : "") + std::to_string(offset[i]);
        }
        out += "], \"value\": ";
        put_pair(out, coeffs[idx]);
        out += '}';
    }
    out += "\n  ]\n}\n";
    return out;
}

std::string serialize(const MatrixFile& f) {
    return std::visit([](const auto& m) { return serialize(m); }, f);
}

MatrixFile parse_matrix_file(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("matrix file must be a JSON object");
    const json& kind = field(doc, "kind");
    if (!kind.is_string()) throw FormatError("kind must be a string");
    const auto k = kind.get<std::string>();
    try {
        if (k == "dense") return parse_dense(doc);
        if (k == "mltoeplitz") return parse_mltoeplitz(doc);
    } catch (const json::exception& e) {
        throw FormatError(e.what());
    }
    throw FormatError("unknown kind \"" + k + "\"");
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error reading " + path.string());
    return parse_matrix_file(buf.str());
}

void write_matrix_file(const std::filesystem::path& path, const MatrixFile& f) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << serialize(f);
    out.flush();
    if (!out) throw IoError("error writing " + path.string());
}

}  // namespace mlt
