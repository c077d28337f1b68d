#pragma once

// Flat key-value text documents:
//
//   # comment
//   key = value
//   matrix = 0 1
//            -1 0        <- lines without '=' continue the previous value
//
// Sections, braces and duplicate keys are rejected.

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "gcfluct/gcs_linalg.hpp"

namespace gcfluct {

class KeyValueDoc {
public:
    static KeyValueDoc parse(std::istream& in);
    static KeyValueDoc parse_string(const std::string& text);
    static KeyValueDoc load(const std::string& path);

    bool has(const std::string& key) const { return entries_.count(key) != 0; }
    const std::string& get_string(const std::string& key) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    long long get_int(const std::string& key) const;
    long long get_int(const std::string& key, long long fallback) const;
    std::vector<double> get_doubles(const std::string& key) const;

    /// Throws ParseError naming the first key not in `allowed`.
    void require_known_keys(const std::set<std::string>& allowed) const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

private:
    std::map<std::string, std::string> entries_;
};

/// Strict number parsing: the whole token must be consumed.
double parse_double(const std::string& token);
long long parse_int(const std::string& token);
/// Whitespace or comma separated list of numbers.
std::vector<double> parse_doubles(const std::string& text);

enum class MatrixKind { Gcs, Omega, ComplexJ, BField };

std::string to_string(MatrixKind kind);

/// Matrix exchange document: `n`, optional `kind` (gcs | omega | J | B,
/// default gcs) and `matrix`, row major, 4n x 4n for gcs and 2n x 2n
/// otherwise.
struct MatrixDocument {
    int n = 1;
    MatrixKind kind = MatrixKind::Gcs;
    Matrix matrix;
};

MatrixDocument parse_matrix_document(std::istream& in);
MatrixDocument load_matrix_document(const std::string& path);
void write_matrix_document(std::ostream& out, const MatrixDocument& doc);

/// 17 significant digits ("%.17g"), enough to round-trip any double.
std::string format_double(double v);

}  // namespace gcfluct
