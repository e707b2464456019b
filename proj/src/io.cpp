#include "dts/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dts::io {

namespace {

std::vector<Value> parse_int_line(const std::string& line, std::size_t expected, const char* what) {
    std::istringstream in(line);
    std::vector<Value> out;
    Value v;
    while (in >> v) out.push_back(v);
    std::string leftover;
    if (in.bad() || (in.clear(), in >> leftover))
        throw std::invalid_argument(std::string(what) + ": non-integer token in line '" + line + "'");
    if (expected != 0 && out.size() != expected)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) +
                                    " integers, got " + std::to_string(out.size()));
    return out;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

}  // namespace

std::string emit_dts(const TriangleSet& t) {
    std::ostringstream out;
    out << t.n() << ' ' << t.k() << ' ' << t.scope() << '\n';
    for (const Block& b : t.blocks) {
        for (std::size_t j = 0; j < b.size(); ++j) out << (j ? " " : "") << b[j];
        out << '\n';
    }
    return out.str();
}

TriangleSet parse_dts(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty()) throw std::invalid_argument("parse_dts: empty input");

    const std::vector<Value> header = parse_int_line(lines[0], 3, "parse_dts header");
    const Value n = header[0], k = header[1], scope = header[2];
    if (n < 1 || k < 0) throw std::invalid_argument("parse_dts: bad header");
    if (static_cast<Value>(lines.size()) < n + 1)
        throw std::invalid_argument("parse_dts: expected " + std::to_string(n) + " block lines");

    TriangleSet t;
    for (Value i = 0; i < n; ++i)
        t.blocks.push_back(parse_int_line(lines[static_cast<std::size_t>(i) + 1],
                                          static_cast<std::size_t>(k) + 1, "parse_dts block"));
    if (t.scope() != scope)
        throw std::invalid_argument("parse_dts: header scope " + std::to_string(scope) +
                                    " does not match blocks (" + std::to_string(t.scope()) + ")");
    return t;
}

std::string emit_dts_json(const DtsDocument& doc) {
    nlohmann::json j;
    j["n"] = doc.set.n();
    j["k"] = doc.set.k();
    j["scope"] = doc.set.scope();
    j["blocks"] = doc.set.blocks;
    j["algorithm"] = doc.algorithm;
    j["seed"] = doc.seed;
    return j.dump(2) + "\n";
}

DtsDocument parse_dts_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    DtsDocument doc;
    doc.set.blocks = j.at("blocks").get<std::vector<Block>>();
    doc.algorithm = j.value("algorithm", "");
    doc.seed = j.value("seed", std::uint64_t{0});
    if (j.at("n").get<int>() != doc.set.n() || j.at("k").get<int>() != doc.set.k() ||
        j.at("scope").get<Value>() != doc.set.scope())
        throw std::invalid_argument("parse_dts_json: header fields do not match blocks");
    return doc;
}

std::string emit_packing(const Packing& p) {
    std::ostringstream out;
    out << p.modulus << ' ' << p.n() << ' ' << p.k() << '\n';
    for (const auto& b : p.blocks) {
        for (std::size_t j = 0; j < b.size(); ++j) out << (j ? " " : "") << b[j];
        out << '\n';
    }
    return out.str();
}

Packing parse_packing(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty()) throw std::invalid_argument("parse_packing: empty input");

    const std::vector<Value> header = parse_int_line(lines[0], 3, "parse_packing header");
    const Value v = header[0], n = header[1], k = header[2];
    if (v < 1 || n < 1 || k < 1) throw std::invalid_argument("parse_packing: bad header");
    if (static_cast<Value>(lines.size()) < n + 1)
        throw std::invalid_argument("parse_packing: expected " + std::to_string(n) + " block lines");

    Packing p;
    p.modulus = v;
    for (Value i = 0; i < n; ++i)
        p.blocks.push_back(parse_int_line(lines[static_cast<std::size_t>(i) + 1],
                                          static_cast<std::size_t>(k), "parse_packing block"));
    return p;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << contents;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string emit_manifest(const RunManifest& m) {
    nlohmann::json j;
    j["command"] = m.command;
    j["parameters"] = m.parameters;
    j["seed"] = m.seed;
    j["artifacts"] = m.artifact_hashes;
    j["wall_time_ms"] = m.wall_time_ms;
    return j.dump(2) + "\n";
}

RunManifest parse_manifest(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.parameters = j.at("parameters").get<std::vector<std::string>>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.artifact_hashes = j.at("artifacts").get<std::map<std::string, std::string>>();
    m.wall_time_ms = j.at("wall_time_ms").get<double>();
    return m;
}

}  // namespace dts::io
