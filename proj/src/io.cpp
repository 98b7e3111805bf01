#include "hmx/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hmx/errors.hpp"

namespace hmx {

using nlohmann::json;

namespace {

std::string number_text(double v) {
    if (!std::isfinite(v)) throw DomainError("serialize: non-finite entry");
    return json(v).dump();
}

std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

[[noreturn]] void structure_error(const std::string& what) {
    throw ParseError("invalid hypermatrix file: " + what, 0, 0);
}

const json& field(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) structure_error(std::string("missing field '") + key + "'");
    return *it;
}

double finite_number(const json& v, std::size_t entry) {
    if (!v.is_number())
        structure_error("entry " + std::to_string(entry) + " is not a pair of numbers");
    const double d = v.get<double>();
    if (!std::isfinite(d))
        throw DomainError("entry " + std::to_string(entry) + " is not finite");
    return d;
}

}  // namespace

std::string serialize(const Hypermatrix& h, const Metadata& meta) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"format\": " << json(std::string(kFormatName)).dump() << ",\n";
    out << "  \"version\": " << json(std::string(kFormatVersion)).dump() << ",\n";
    out << "  \"order\": " << h.order() << ",\n";
    out << "  \"shape\": [";
    for (std::size_t a = 0; a < h.order(); ++a) out << (a ? ", " : "") << h.extent(a);
    out << "],\n";
    if (meta.seed || !meta.description.empty()) {
        json m = json::object();
        if (meta.seed) m["seed"] = *meta.seed;
        if (!meta.description.empty()) m["description"] = meta.description;
        out << "  \"metadata\": " << m.dump() << ",\n";
    }
    out << "  \"entries\": [";
    const auto e = h.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        out << (i ? ",\n    " : "\n    ") << '[' << number_text(e[i].real()) << ", "
            << number_text(e[i].imag()) << ']';
    }
    out << (e.empty() ? "]\n" : "\n  ]\n");
    out << "}\n";
    return out.str();
}

HypermatrixFile parse_file(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, column] = locate(text, e.byte);
        throw ParseError("malformed JSON", line, column);
    }
    if (!doc.is_object()) structure_error("top level is not an object");

    HypermatrixFile f;
    const json& format = field(doc, "format");
    if (!format.is_string() || format.get<std::string>() != kFormatName)
        structure_error("unexpected format tag");
    const json& version = field(doc, "version");
    if (!version.is_string()) structure_error("version must be a string");
    f.version = version.get<std::string>();
    if (f.version != kFormatVersion) structure_error("unsupported version " + f.version);

    const json& order = field(doc, "order");
    const json& shape_j = field(doc, "shape");
    if (!order.is_number_unsigned() || !shape_j.is_array())
        structure_error("order must be a non-negative integer and shape a list");
    Shape shape;
    for (const json& s : shape_j) {
        if (!s.is_number_unsigned()) structure_error("shape entries must be non-negative integers");
        shape.push_back(s.get<std::size_t>());
    }
    if (shape.size() != order.get<std::size_t>())
        throw ShapeError("order " + std::to_string(order.get<std::size_t>()) +
                         " does not match shape of length " + std::to_string(shape.size()));

    const json& entries = field(doc, "entries");
    if (!entries.is_array()) structure_error("entries must be a list");
    const std::size_t expected = shape_product(shape);
    if (entries.size() != expected)
        throw ShapeError("entry count mismatch: expected " + std::to_string(expected) +
                         ", found " + std::to_string(entries.size()));
    std::vector<Complex> values;
    values.reserve(expected);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const json& p = entries[i];
        if (!p.is_array() || p.size() != 2)
            structure_error("entry " + std::to_string(i) + " is not a [re, im] pair");
        values.emplace_back(finite_number(p[0], i), finite_number(p[1], i));
    }
    f.value = Hypermatrix(std::move(shape), std::move(values));

    if (auto it = doc.find("metadata"); it != doc.end()) {
        if (!it->is_object()) structure_error("metadata must be an object");
        if (auto s = it->find("seed"); s != it->end()) {
            if (!s->is_number_unsigned()) structure_error("metadata seed must be an integer");
            f.metadata.seed = s->get<std::uint64_t>();
        }
        if (auto d = it->find("description"); d != it->end()) {
            if (!d->is_string()) structure_error("metadata description must be a string");
            f.metadata.description = d->get<std::string>();
        }
    }
    return f;
}

Hypermatrix parse(std::string_view text) { return parse_file(text).value; }

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw Error("write failed for " + path.string());
}

HypermatrixFile read_hypermatrix_file(const std::filesystem::path& path) {
    const std::string text = read_text(path);
    try {
        return parse_file(text);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), e.line(), e.offset());
    }
}

Hypermatrix read_hypermatrix(const std::filesystem::path& path) {
    return read_hypermatrix_file(path).value;
}

void write_hypermatrix(const std::filesystem::path& path, const Hypermatrix& h,
                       const Metadata& meta) {
    write_text(path, serialize(h, meta));
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_complex(Complex z) {
    return format_double(z.real()) + (std::signbit(z.imag()) ? "-" : "+") +
           format_double(std::abs(z.imag())) + "i";
}

void ReportFile::add(const ResidualReport& r) {
    for (const auto& item : r.items())
        add(item.name, item.value,
            std::isinf(item.tolerance) ? std::nullopt : std::optional<double>(item.tolerance));
}

void ReportFile::add(std::string name, double value, std::optional<double> tolerance) {
    values.push_back({std::move(name), value, tolerance});
}

void ReportFile::note(std::string name, std::string text) {
    results.emplace_back(std::move(name), std::move(text));
}

bool ReportFile::all_pass() const {
    for (const auto& v : values)
        if (!v.pass()) return false;
    return true;
}

std::string ReportFile::to_json(bool with_timing) const {
    json doc = json::object();
    doc["command"] = command;
    json in = json::array();
    for (const auto& [path, digest] : inputs) in.push_back({{"path", path}, {"fnv1a", digest}});
    doc["inputs"] = in;
    json vals = json::array();
    for (const auto& v : values) {
        json e = {{"name", v.name}, {"value", format_double(v.value)}};
        if (v.tolerance) {
            e["tolerance"] = format_double(*v.tolerance);
            e["pass"] = v.pass();
        }
        vals.push_back(e);
    }
    doc["values"] = vals;
    json res = json::object();
    for (const auto& [k, t] : results) res[k] = t;
    doc["results"] = res;
    doc["pass"] = all_pass();
    if (with_timing) doc["wall_time"] = format_double(wall_time);
    return doc.dump(2) + "\n";
}

}  // namespace hmx
