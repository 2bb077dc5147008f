#include <doctest.h>

#include <random>
#include <sstream>

#include "journalnet/bib.hpp"
#include "journalnet/errors.hpp"

using namespace journalnet;

TEST_CASE("parse_records reads a well-formed TSV row") {
    std::istringstream in(
        "id\tyear\tsource\tcited\n"
        "W1\t2015\tSCIENTOMETRICS\tSmith, 2010, J INFORMETR, V4, P1; Lee, 2009, SCIENTOMETRICS, "
        "V80, P3\n");
    const auto result = parse_records(in);
    REQUIRE(result.records.size() == 1);
    CHECK(result.skipped.empty());
    const auto& rec = result.records[0];
    CHECK(rec.record_id == "W1");
    CHECK(rec.pub_year == 2015);
    CHECK(rec.source_journal == "SCIENTOMETRICS");
    REQUIRE(rec.cited_refs.size() == 2);
    CHECK(rec.cited_refs[0] == "Smith, 2010, J INFORMETR, V4, P1");
    CHECK(rec.cited_refs[1] == "Lee, 2009, SCIENTOMETRICS, V80, P3");
}

TEST_CASE("parse_records keeps an empty cited cell as no references") {
    std::istringstream in("id\tyear\tsource\tcited\nW1\t2015\tX\t\n");
    const auto result = parse_records(in);
    REQUIRE(result.records.size() == 1);
    CHECK(result.records[0].cited_refs.empty());
}

TEST_CASE("parse_records skips and reports a bad year") {
    std::istringstream in(
        "id\tyear\tsource\tcited\n"
        "W1\t2015\tA\tx, 1, B\n"
        "W2\tn/a\tB\tx, 1, C\n"
        "W3\t2014\tC\tx, 1, D\n");
    const auto result = parse_records(in);
    REQUIRE(result.records.size() == 2);
    CHECK(result.records[0].record_id == "W1");
    CHECK(result.records[1].record_id == "W3");
    REQUIRE(result.skipped.size() == 1);
    CHECK(result.skipped[0].line_no == 3);
    CHECK(result.skipped[0].reason.find("n/a") != std::string::npos);
}

TEST_CASE("parse_records reports out-of-range years and duplicate ids") {
    std::istringstream in(
        "id\tyear\tsource\tcited\n"
        "W1\t1832\tA\t\n"
        "W2\t2015\tB\t\n"
        "W2\t2015\tB\t\n");
    const auto result = parse_records(in);
    CHECK(result.records.size() == 1);
    REQUIRE(result.skipped.size() == 2);
    CHECK(result.skipped[0].reason.find("1900..2100") != std::string::npos);
    CHECK(result.skipped[1].reason.find("duplicate") != std::string::npos);
}

TEST_CASE("parse_records respects a custom column mapping") {
    std::istringstream in("UT\tPY\tSO\tCR\nX\t2011\tJ\ta, 1, B\n");
    FormatConfig cfg;
    cfg.id_col = "UT";
    cfg.year_col = "PY";
    cfg.source_col = "SO";
    cfg.cited_col = "CR";
    const auto result = parse_records(in, cfg);
    REQUIRE(result.records.size() == 1);
    CHECK(result.records[0].record_id == "X");
}

TEST_CASE("parse_records error cases") {
    SUBCASE("missing mapped column") {
        std::istringstream in("id\tyear\tsource\nW1\t2015\tX\n");
        CHECK_THROWS_AS(parse_records(in), MissingColumn);
    }
    SUBCASE("empty stream") {
        std::istringstream in("");
        CHECK_THROWS_AS(parse_records(in), EmptyInput);
    }
    SUBCASE("header only") {
        std::istringstream in("id\tyear\tsource\tcited\n");
        CHECK_THROWS_AS(parse_records(in), EmptyInput);
    }
}

TEST_CASE("extract_cited_journal follows the third-segment convention") {
    CHECK(extract_cited_journal("Smith, 2010, J INFORMETR, V4, P1") == "J INFORMETR");
    CHECK_FALSE(extract_cited_journal("Anonymous, 1999").has_value());
    CHECK_FALSE(extract_cited_journal("Doe J, 2001, 12345, V1").has_value());
}

TEST_CASE("extract_cited_journal over a hand-checked reference list") {
    // Realistically shaped reference strings and their expected journal
    // segment, checked by hand against the comma convention.
    const std::vector<std::pair<std::string, std::optional<std::string>>> fixture = {
        {"Small H, 1973, J AM SOC INF SCI, V24, P265", std::string("J AM SOC INF SCI")},
        {"Price DJD, 1965, SCIENCE, V149, P510", std::string("SCIENCE")},
        {"Hirsch JE, 2005, P NATL ACAD SCI USA, V102, P16569",
         std::string("P NATL ACAD SCI USA")},
        {"White HD, 1998, J AM SOC INF SCI, V49, P327", std::string("J AM SOC INF SCI")},
        {"Kessler MM, 1963, AM DOC, V14, P10", std::string("AM DOC")},
        {"Bornmann L, 2008, J DOC, V64, P45", std::string("J DOC")},
        {"Waltman L, 2012, J INFORMETR, V6, P700", std::string("J INFORMETR")},
        {"Egghe L, 2006, SCIENTOMETRICS, V69, P131", std::string("SCIENTOMETRICS")},
        {"Anon, 2001,  J DOC , V57, P354", std::string("J DOC")},  // padded segment trims
        {"Smith, 2010, 2010, V1, P1", std::nullopt},               // numeric-only journal
        {"Smith, 2010", std::nullopt},                             // too short
        {"", std::nullopt},
        {",,", std::nullopt},                                      // empty third segment
        {", , J INFORMETR", std::string("J INFORMETR")},
        {"a,b,c", std::string("c")},
        {"Cronin B, 2001, J INFORM SCI, V27, P1", std::string("J INFORM SCI")},
        {"Merton RK, 1968, SCIENCE, V159, P56", std::string("SCIENCE")},
        {"*ISI, 2015, WEB SCI DAT", std::string("WEB SCI DAT")},
        {"Sanchez-Gil D, 2010, PROF INFORM, V19, P675", std::string("PROF INFORM")},
        {"Andersen A, 2015, 42, V1, P1", std::nullopt},            // numeric-only again
    };
    for (const auto& [ref, expected] : fixture) {
        CAPTURE(ref);
        CHECK(extract_cited_journal(ref) == expected);
    }
}

TEST_CASE("extract_cited_journal never throws on arbitrary bytes") {
    std::mt19937 rng(20150923);
    std::uniform_int_distribution<int> len(0, 40);
    std::uniform_int_distribution<int> byte(1, 255);
    for (int i = 0; i < 2000; ++i) {
        std::string s;
        const int n = len(rng);
        for (int k = 0; k < n; ++k) s.push_back(static_cast<char>(byte(rng)));
        CHECK_NOTHROW((void)extract_cited_journal(s));
    }
}

TEST_CASE("normalize_name uppercases, collapses whitespace, strips edge punctuation") {
    CHECK(normalize_name("  scientometrics. ") == "SCIENTOMETRICS");
    CHECK(normalize_name("J  Informetr") == "J INFORMETR");
    CHECK(normalize_name("\tLibr   Quart\t") == "LIBR QUART");
    CHECK(normalize_name("(aslib proc)") == "ASLIB PROC");
    CHECK(normalize_name("E-JASL") == "E-JASL");  // internal punctuation survives
    CHECK(normalize_name("...") == "");
    CHECK(normalize_name("") == "");
}

TEST_CASE("normalize_name is idempotent") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> len(0, 30);
    std::uniform_int_distribution<int> byte(32, 126);
    for (int i = 0; i < 2000; ++i) {
        std::string s;
        const int n = len(rng);
        for (int k = 0; k < n; ++k) s.push_back(static_cast<char>(byte(rng)));
        const auto once = normalize_name(s);
        CHECK(normalize_name(once) == once);
    }
}

TEST_CASE("alias lookup maps renamed journals to their canonical name") {
    AliasTable aliases;
    aliases.add("ASLIB Journal of Information Management", "ASLIB PROC");
    aliases.finalize();
    CHECK(canonical_name("ASLIB Journal of Information Management", aliases) == "ASLIB PROC");
    CHECK(canonical_name("  scientometrics. ", aliases) == "SCIENTOMETRICS");
    CHECK(canonical_name("J INFORMETR", AliasTable{}) == "J INFORMETR");
}

TEST_CASE("alias chains collapse to fixed points") {
    AliasTable aliases;
    aliases.add("a old", "a mid");
    aliases.add("a mid", "a new");
    aliases.finalize();
    CHECK(aliases.resolve("A OLD") == "A NEW");
    CHECK(aliases.resolve("A MID") == "A NEW");
    // canonical names resolve to themselves
    CHECK(aliases.resolve("A NEW") == "A NEW");
    CHECK(canonical_name(canonical_name("a old", aliases), aliases) ==
          canonical_name("a old", aliases));
}

TEST_CASE("alias cycles are rejected") {
    AliasTable aliases;
    aliases.add("x", "y");
    aliases.add("y", "x");
    CHECK_THROWS_AS(aliases.finalize(), DataError);
}

TEST_CASE("parsing preserves the per-row cited reference count") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> nrefs(0, 12);
    std::ostringstream in;
    in << "id\tyear\tsource\tcited\n";
    std::vector<std::size_t> expected;
    for (int row = 0; row < 50; ++row) {
        const int n = nrefs(rng);
        expected.push_back(static_cast<std::size_t>(n));
        in << "R" << row << "\t2015\tSRC\t";
        for (int k = 0; k < n; ++k) {
            if (k) in << "; ";
            in << "Author" << k << ", 2010, JOURNAL " << k << ", V1, P" << k;
        }
        in << "\n";
    }
    std::istringstream stream(in.str());
    const auto result = parse_records(stream);
    REQUIRE(result.records.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(result.records[i].cited_refs.size() == expected[i]);
}
