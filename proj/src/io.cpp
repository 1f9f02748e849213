#include "heislab/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace heislab {

namespace {

void atomic_write(const std::string& path, const std::string& bytes) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed: " + path);
}

void append_pairs(std::string& bytes, const std::vector<cd>& values) {
    static_assert(sizeof(double) == 8);
    const std::size_t base = bytes.size();
    bytes.resize(base + values.size() * 16);
    char* dst = bytes.data() + base;
    for (const cd& v : values) {
        double re = v.real(), im = v.imag();
        std::memcpy(dst, &re, 8);
        std::memcpy(dst + 8, &im, 8);
        dst += 16;
    }
}

std::vector<cd> read_pairs(std::istream& in, std::size_t count) {
    std::vector<cd> values(count);
    std::vector<char> buf(count * 16);
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (static_cast<std::size_t>(in.gcount()) != buf.size())
        throw std::runtime_error("truncated data section");
    for (std::size_t i = 0; i < count; ++i) {
        double re, im;
        std::memcpy(&re, buf.data() + i * 16, 8);
        std::memcpy(&im, buf.data() + i * 16 + 8, 8);
        values[i] = cd(re, im);
    }
    return values;
}

json read_header_line(std::istream& in, const std::string& path) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("missing header: " + path);
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) throw std::runtime_error("bad header: " + path);
    return j;
}

void format_double(std::string& out, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

void escape_string(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

// indent > 0: pretty multi-line; indent == 0: compact single line
void dump_rec(std::string& out, const json& j, int indent, int depth) {
    const bool pretty = indent > 0;
    const std::string pad(pretty ? static_cast<std::size_t>(indent) * depth : 0, ' ');
    const std::string pad_in(pretty ? static_cast<std::size_t>(indent) * (depth + 1) : 0, ' ');
    const char* open_sep = pretty ? "\n" : "";
    const char* item_sep = pretty ? ",\n" : ", ";
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{";
            out += open_sep;
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) { // std::map: sorted
                if (!first) out += item_sep;
                first = false;
                out += pad_in;
                escape_string(out, it.key());
                out += ": ";
                dump_rec(out, it.value(), indent, depth + 1);
            }
            out += open_sep + pad + "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[";
            out += open_sep;
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += item_sep;
                out += pad_in;
                dump_rec(out, j[i], indent, depth + 1);
            }
            out += open_sep + pad + "]";
            return;
        }
        case json::value_t::number_float:
            format_double(out, j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

} // namespace

void write_signal(const std::string& path, const SampledSignal& s) {
    json header = {{"L", s.L}, {"N", s.N()}};
    std::string bytes = dump_json(header, 0);
    bytes += '\n';
    append_pairs(bytes, s.values);
    atomic_write(path, bytes);
}

SampledSignal read_signal(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    json h = read_header_line(in, path);
    SampledSignal s;
    s.L = h.at("L").get<double>();
    const int n = h.at("N").get<int>();
    if (n < 1) throw std::runtime_error("bad header: " + path);
    s.values = read_pairs(in, static_cast<std::size_t>(n));
    return s;
}

void write_field(const std::string& path, const HeisenbergField& F) {
    const GridParams& g = F.grid;
    json header = {{"M", g.M},   {"Nx", g.Nx},   {"Ny", g.Ny},
                   {"dx", g.dx()}, {"dy", g.dy()}, {"layout", "k-major"}};
    std::string bytes = dump_json(header, 0);
    bytes += '\n';
    for (const auto& fib : F.fibers) append_pairs(bytes, fib);
    atomic_write(path, bytes);
}

HeisenbergField read_field(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    json h = read_header_line(in, path);
    if (h.value("layout", "") != std::string("k-major"))
        throw std::runtime_error("unsupported field layout: " + path);
    GridParams g;
    g.M = h.at("M").get<int>();
    g.Ny = h.at("Ny").get<int>();
    g.Nx = h.at("Nx").get<int>();
    const double dx = h.at("dx").get<double>();
    const double dy = h.at("dy").get<double>();
    if (!(dx > 0.0) || !(dy > 0.0)) throw std::runtime_error("bad header: " + path);
    g.L = 1.0 / dy;
    g.N = static_cast<int>(std::llround(g.L / dx));
    g.validate();
    HeisenbergField F = zero_field(g);
    for (auto& fib : F.fibers)
        fib = read_pairs(in, static_cast<std::size_t>(g.Ny) * g.Nx);
    return F;
}

std::string dump_json(const json& j, int indent) {
    std::string out;
    dump_rec(out, j, indent, 0);
    return out;
}

void write_report(const std::string& path, const json& report) {
    atomic_write(path, dump_json(report) + "\n");
}

std::map<std::string, std::string> parse_config(const std::string& text) {
    std::map<std::string, std::string> cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto notspace = [](unsigned char c) { return !std::isspace(c); };
        line.erase(line.begin(), std::find_if(line.begin(), line.end(), notspace));
        line.erase(std::find_if(line.rbegin(), line.rend(), notspace).base(), line.end());
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        key.erase(std::find_if(key.rbegin(), key.rend(), notspace).base(), key.end());
        val.erase(val.begin(), std::find_if(val.begin(), val.end(), notspace));
        if (key.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": empty key");
        cfg[key] = val;
    }
    return cfg;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string config_to_string(const std::map<std::string, std::string>& cfg) {
    std::string out;
    for (const auto& [k, v] : cfg) out += k + "=" + v + "\n";
    return out;
}

void write_edgar_csv(const std::string& path, double R, double h,
                     const QuadratureRule& rule) {
    if (!(R > 0.0) || !(h > 0.0)) throw std::invalid_argument("R and h must be positive");
    std::string out = "y,x,re,im,abs\n";
    const long long cells = static_cast<long long>(std::ceil(2.0 * R / h));
    char buf[160];
    for (long long jy = 0; jy <= cells; ++jy) {
        double yv = -R + jy * h;
        for (long long jx = 0; jx <= cells; ++jx) {
            double xv = -R + jx * h;
            cd v = edgar_eval(yv, xv, rule);
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g\n", yv, xv,
                          v.real(), v.imag(), std::abs(v));
            out += buf;
        }
    }
    atomic_write(path, out);
}

} // namespace heislab
