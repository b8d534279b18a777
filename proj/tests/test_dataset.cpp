#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "cy/dataset.hpp"
#include "cy/errors.hpp"
#include "cy/frobenius.hpp"

using namespace cy;

#ifndef CY_DATASET_PATH
#define CY_DATASET_PATH "data/aesz.cydb"
#endif

static const char* quintic_text =
    "cyop 1\n"
    "id 1\n"
    "order 4\n"
    "terms 2\n"
    "P0: 0 0 0 0 1\n"
    "P1: -120 -1250 -4375 -6250 -3125\n";

TEST_CASE("parse a quintic .cyop file") {
    CyopParsed p = parse_cyop(quintic_text);
    CHECK(p.id == "1");
    CHECK(p.op.order() == 4);
    CHECK(p.op.k() == 1);
    PowerSeries A = holomorphic_coeffs(p.op, 4);
    CHECK(A.coeff(1) == 120);
    CHECK(A.coeff(3) == 168168000);
}

TEST_CASE("serialize canonical round trip") {
    CyopParsed p = parse_cyop(quintic_text);
    std::string s = serialize_cyop(p.op, p.id);
    CHECK(s == quintic_text);
    // idempotence: parse(serialize(x)) == x byte-for-byte
    CyopParsed q = parse_cyop(s);
    CHECK(serialize_cyop(q.op, q.id) == s);
}

TEST_CASE("comments, blanks and rationals are accepted") {
    std::string text =
        "# header comment\n"
        "cyop 1\n"
        "\n"
        "order 2\n"
        "terms 2\n"
        "P0: 0 0 1  # theta^2\n"
        "P1: 1/2 -3 0\n";
    CyopParsed p = parse_cyop(text);
    CHECK(p.id.empty());
    CHECK(p.op.term(1).coeff(0) == rat(1, 2));
}

TEST_CASE("malformed files raise SyntaxError") {
    CHECK_THROWS_AS(parse_cyop("cyop 2\norder 1\nterms 1\nP0: 0 1\n"), SyntaxError);
    CHECK_THROWS_AS(parse_cyop("cyop 1\norder 4\nterms 2\nP0: 0 0 0 0 1\n"),
                    SyntaxError); // missing P1
    CHECK_THROWS_AS(parse_cyop("cyop 1\norder 4\nterms 1\nP0: 0 0 1\n"),
                    SyntaxError); // count mismatch
    CHECK_THROWS_AS(parse_cyop("cyop 1\norder 1\nterms 1\nP0: 0 x\n"), SyntaxError);
    // zero boundary term is a structural error
    CHECK_THROWS_AS(parse_cyop("cyop 1\norder 1\nterms 2\nP0: 0 1\nP1: 0 0\n"),
                    ZeroBoundaryTerm);
}

TEST_CASE("dataset text with metadata blocks") {
    std::string text = std::string(quintic_text) +
                       "formula: fact(5*n)/fact(n)^5\n"
                       "base 0 1\n"
                       "note same-kq-as:79\n"
                       "---\n"
                       "cyop 1\n"
                       "id t2\n"
                       "order 1\n"
                       "terms 2\n"
                       "P0: 0 1\n"
                       "P1: -3 -3\n";
    auto db = parse_dataset(text);
    REQUIRE(db.size() == 2);
    CHECK(db[0].id == "1");
    REQUIRE(db[0].formula.has_value());
    CHECK(*db[0].formula == "fact(5*n)/fact(n)^5");
    REQUIRE(db[0].base_cases.size() == 1);
    CHECK(db[0].base_cases[0] == std::pair<long, Rat>{0, rat(1)});
    CHECK(db[0].has_note("same-kq-as:79"));
    CHECK(db[0].note_value("same-kq-as:") == std::string("79"));
    CHECK(db[1].id == "t2");
    CHECK(!db[1].formula.has_value());
}

TEST_CASE("bundled dataset loads and is well-formed") {
    auto db = load_dataset(CY_DATASET_PATH);
    CHECK(db.size() >= 25);
    std::set<std::string> ids;
    for (const auto& r : db) {
        CHECK(ids.insert(r.id).second); // unique ids
        CHECK(r.op.order() == 4);
    }
    for (const char* want :
         {"1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "12", "13", "14",
          "15", "16", "17", "18", "22", "25", "29", "45", "55", "99", "193", "198",
          "246", "248"})
        CHECK(ids.count(want));
    CHECK(find_record(db, "198").note_value("reflection-of:") == std::string("193"));
    CHECK(find_record(db, "79").note_value("same-kq-as:") == std::string("1"));
    CHECK(find_record(db, "86").note_value("same-kq-as:") == std::string("85"));
    // at least two harmonic-sum formulas
    int harmonic = 0;
    for (const auto& r : db)
        if (r.formula && r.formula->find("H(") != std::string::npos) ++harmonic;
    CHECK(harmonic >= 2);
    CHECK_THROWS_AS(find_record(db, "no-such-id"), IOError);
    CHECK_THROWS_AS(load_dataset("no/such/file.cydb"), IOError);
}

TEST_CASE("bundled dataset round trips through the serializer") {
    auto db = load_dataset(CY_DATASET_PATH);
    for (const auto& r : db) {
        CyopParsed p = parse_cyop(serialize_cyop(r.op, r.id));
        CHECK(p.op == r.op);
        CHECK(p.id == r.id);
    }
}
