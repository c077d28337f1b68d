#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "gcfluct/errors.hpp"
#include "gcfluct/text_format.hpp"

using namespace gcfluct;

TEST_CASE("key value documents") {
    const KeyValueDoc doc = KeyValueDoc::parse_string(
        "# header\n"
        "T = 2.5\n"
        "  points=11   # trailing comment\n"
        "list = 1, 2\n"
        "       3\n"
        "\n"
        "name = tensor-grid\n");
    CHECK(doc.get_double("T") == 2.5);
    CHECK(doc.get_int("points") == 11);
    CHECK(doc.get_doubles("list") == std::vector<double>{1, 2, 3});
    CHECK(doc.get_string("name") == "tensor-grid");
    CHECK(doc.get_double("missing", -1.0) == -1.0);
    CHECK_THROWS_AS(doc.get_double("missing"), ParseError);
    CHECK_THROWS_AS(doc.get_int("T"), ParseError);
    CHECK_NOTHROW(doc.require_known_keys({"T", "points", "list", "name"}));
    CHECK_THROWS_AS(doc.require_known_keys({"T"}), ParseError);
}

TEST_CASE("rejected documents") {
    CHECK_THROWS_AS(KeyValueDoc::parse_string("a = 1\na = 2\n"), ParseError);
    CHECK_THROWS_AS(KeyValueDoc::parse_string("[section]\na = 1\n"), ParseError);
    CHECK_THROWS_AS(KeyValueDoc::parse_string("a {\n"), ParseError);
    CHECK_THROWS_AS(KeyValueDoc::parse_string("orphan\n"), ParseError);
    CHECK_THROWS_AS(KeyValueDoc::parse_string(" = 3\n"), ParseError);
    CHECK_THROWS_AS(KeyValueDoc::load("/nonexistent/path.cfg"), ParseError);
}

TEST_CASE("strict numbers") {
    CHECK(parse_double("-1.5e-3") == -1.5e-3);
    CHECK(parse_int("42") == 42);
    CHECK_THROWS_AS(parse_double("1.0x"), ParseError);
    CHECK_THROWS_AS(parse_double(""), ParseError);
    CHECK_THROWS_AS(parse_int("4.2"), ParseError);
    CHECK(parse_doubles("1 2,3\t4") == std::vector<double>{1, 2, 3, 4});
}

TEST_CASE("matrix documents round trip") {
    std::istringstream in("n = 1\nkind = omega\nmatrix = 0 1\n -1 0\n");
    const MatrixDocument doc = parse_matrix_document(in);
    CHECK(doc.n == 1);
    CHECK(doc.kind == MatrixKind::Omega);
    CHECK(doc.matrix(0, 1) == 1.0);
    CHECK(doc.matrix(1, 0) == -1.0);

    MatrixDocument g;
    g.n = 1;
    g.kind = MatrixKind::Gcs;
    g.matrix = Matrix::Identity(4, 4) * (1.0 / 3.0);
    g.matrix(0, 3) = std::nextafter(0.1, 1.0);
    std::ostringstream out;
    write_matrix_document(out, g);
    std::istringstream back(out.str());
    const MatrixDocument r = parse_matrix_document(back);
    CHECK(r.kind == MatrixKind::Gcs);
    CHECK(r.matrix == g.matrix);
}

TEST_CASE("malformed matrix documents") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_matrix_document(in);
    };
    CHECK_THROWS_AS(parse("n = 1\nmatrix = 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse("matrix = 1 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("n = 0\nmatrix = 1\n"), ParseError);
    CHECK_THROWS_AS(parse("n = 1\nkind = spinor\nmatrix = 1 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("n = 1\nkind = J\nmatrix = 1 0 0 1\nextra = 2\n"), ParseError);
}

TEST_CASE("format_double round trips") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    for (double v : {1.0 / 3.0, -4.0 * std::acos(-1.0) * std::acos(-1.0) / 3.0, 1e-300,
                     std::numeric_limits<double>::max()}) {
        CHECK(parse_double(format_double(v)) == v);
    }
}
