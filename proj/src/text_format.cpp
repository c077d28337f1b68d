#include "gcfluct/text_format.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gcfluct/errors.hpp"

namespace gcfluct {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

double parse_double(const std::string& token) {
    const std::string t = trim(token);
    double v = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (!t.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (t.empty() || ec != std::errc() || ptr != last) {
        throw ParseError("not a number: '" + token + "'");
    }
    return v;
}

long long parse_int(const std::string& token) {
    const std::string t = trim(token);
    long long v = 0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (!t.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (t.empty() || ec != std::errc() || ptr != last) {
        throw ParseError("not an integer: '" + token + "'");
    }
    return v;
}

std::vector<double> parse_doubles(const std::string& text) {
    std::string s = text;
    for (auto& ch : s) {
        if (ch == ',') ch = ' ';
    }
    std::istringstream is(s);
    std::vector<double> out;
    std::string tok;
    while (is >> tok) out.push_back(parse_double(tok));
    return out;
}

KeyValueDoc KeyValueDoc::parse(std::istream& in) {
    KeyValueDoc doc;
    std::string line;
    std::string last_key;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t.front() == '[' || t.front() == '{' || t.front() == '}') {
            throw ParseError("line " + std::to_string(lineno) +
                             ": nested or sectioned formats are not supported");
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            if (last_key.empty()) {
                throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value'");
            }
            doc.entries_[last_key] += " " + t;
            continue;
        }
        const std::string key = trim(t.substr(0, eq));
        if (key.empty() || key.find_first_of(" \t") != std::string::npos) {
            throw ParseError("line " + std::to_string(lineno) + ": malformed key '" + key + "'");
        }
        if (doc.entries_.count(key)) {
            throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        }
        doc.entries_[key] = trim(t.substr(eq + 1));
        last_key = key;
    }
    return doc;
}

KeyValueDoc KeyValueDoc::parse_string(const std::string& text) {
    std::istringstream is(text);
    return parse(is);
}

KeyValueDoc KeyValueDoc::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse(in);
}

const std::string& KeyValueDoc::get_string(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) throw ParseError("missing key '" + key + "'");
    return it->second;
}

double KeyValueDoc::get_double(const std::string& key) const {
    try {
        return parse_double(get_string(key));
    } catch (const ParseError& e) {
        throw ParseError("key '" + key + "': " + e.what());
    }
}

double KeyValueDoc::get_double(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

long long KeyValueDoc::get_int(const std::string& key) const {
    try {
        return parse_int(get_string(key));
    } catch (const ParseError& e) {
        throw ParseError("key '" + key + "': " + e.what());
    }
}

long long KeyValueDoc::get_int(const std::string& key, long long fallback) const {
    return has(key) ? get_int(key) : fallback;
}

std::vector<double> KeyValueDoc::get_doubles(const std::string& key) const {
    try {
        return parse_doubles(get_string(key));
    } catch (const ParseError& e) {
        throw ParseError("key '" + key + "': " + e.what());
    }
}

void KeyValueDoc::require_known_keys(const std::set<std::string>& allowed) const {
    for (const auto& [k, v] : entries_) {
        if (!allowed.count(k)) throw ParseError("unknown key '" + k + "'");
    }
}

std::string to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::Gcs: return "gcs";
        case MatrixKind::Omega: return "omega";
        case MatrixKind::ComplexJ: return "J";
        case MatrixKind::BField: return "B";
    }
    return "gcs";
}

MatrixDocument parse_matrix_document(std::istream& in) {
    const KeyValueDoc kv = KeyValueDoc::parse(in);
    kv.require_known_keys({"n", "kind", "matrix"});

    MatrixDocument doc;
    const long long n = kv.get_int("n");
    if (n < 1 || n > 64) throw ParseError("matrix document: n must be in [1, 64]");
    doc.n = static_cast<int>(n);

    const std::string kind = kv.has("kind") ? kv.get_string("kind") : "gcs";
    if (kind == "gcs") doc.kind = MatrixKind::Gcs;
    else if (kind == "omega") doc.kind = MatrixKind::Omega;
    else if (kind == "J") doc.kind = MatrixKind::ComplexJ;
    else if (kind == "B") doc.kind = MatrixKind::BField;
    else throw ParseError("matrix document: unknown kind '" + kind + "'");

    const std::vector<double> values = kv.get_doubles("matrix");
    const int dim = doc.kind == MatrixKind::Gcs ? 4 * doc.n : 2 * doc.n;
    if (values.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
        std::ostringstream os;
        os << "matrix document: expected " << dim * dim << " entries for a " << dim << "x" << dim
           << " matrix, got " << values.size();
        throw ParseError(os.str());
    }
    doc.matrix.resize(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) doc.matrix(i, j) = values[static_cast<std::size_t>(i * dim + j)];
    }
    return doc;
}

MatrixDocument load_matrix_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_matrix_document(in);
}

void write_matrix_document(std::ostream& out, const MatrixDocument& doc) {
    out << "n = " << doc.n << "\n";
    out << "kind = " << to_string(doc.kind) << "\n";
    out << "matrix =\n";
    for (Eigen::Index i = 0; i < doc.matrix.rows(); ++i) {
        out << " ";
        for (Eigen::Index j = 0; j < doc.matrix.cols(); ++j) {
            out << " " << format_double(doc.matrix(i, j));
        }
        out << "\n";
    }
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace gcfluct
