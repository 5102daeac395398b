#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "minknot/catalog.hpp"

using namespace minknot;

namespace {

KnotParams canon(int N, int p, int q) { return validate(N, p, q, canonical_phase(N, p, q)); }

const Catalog& cat() {
    static const Catalog c = default_catalog();
    return c;
}

bool has_candidate(const Identification& id, const std::string& name) {
    for (auto& c : id.candidates)
        if (c.name == name) return true;
    return false;
}

}  // namespace

TEST_CASE("default catalog contents and flags") {
    const CatalogEntry* e817 = cat().find("8_17");
    REQUIRE(e817 != nullptr);
    CHECK(e817->symmetry == KnotSymmetry::negative_amphicheiral);

    const CatalogEntry* e932 = cat().find("9_32");
    REQUIRE(e932 != nullptr);
    CHECK(e932->symmetry == KnotSymmetry::chiral);

    const CatalogEntry* e14 = cat().find("14N27120");
    REQUIRE(e14 != nullptr);
    CHECK(e14->alexander == RolfsenCoeffs{7, -5, 3, -1});

    for (auto name : {"unknot", "3_1", "4_1", "6_2", "7_7", "9_46", "10_155", "14N11995",
                      "15N166131", "T(2,3)", "T(2,13)", "T(3,4)", "T(3,5)", "T(3,7)", "T(4,5)"})
        CHECK(cat().find(name) != nullptr);

    for (const CatalogEntry& e : cat().entries) {
        BigInt v = rolfsen_encode(e.alexander).eval_one();
        CHECK((v == 1 || v == -1));
        CHECK(!e.provenance.empty());
    }
    // names unique
    for (std::size_t i = 0; i < cat().entries.size(); ++i)
        for (std::size_t j = i + 1; j < cat().entries.size(); ++j)
            CHECK(cat().entries[i].name != cat().entries[j].name);
}

TEST_CASE("identify lists every entry against its own alexander value") {
    for (const CatalogEntry& e : cat().entries) {
        Identification id = identify(cat(), e.alexander_poly(), std::nullopt, 0);
        INFO("entry " << e.name);
        CHECK(has_candidate(id, e.name));
    }
}

TEST_CASE("identification of the standard examples") {
    {
        KnotParams kp = canon(3, 10, 4);
        BraidWord w = braid_word(kp);
        Identification id = identify(cat(), alexander(w), jones(w), writhe(w));
        REQUIRE(has_candidate(id, "4_1"));
        for (auto& c : id.candidates)
            if (c.name == "4_1") CHECK(c.strength == MatchStrength::alexander_and_jones);
    }
    {
        KnotParams kp = canon(3, 5, 4);
        BraidWord w = braid_word(kp);
        Identification id = identify(cat(), alexander(w), jones(w), writhe(w));
        CHECK(has_candidate(id, "3_1 # m(3_1)"));
        CHECK(!has_candidate(id, "3_1 # 3_1"));  // granny excluded by Jones
    }
    {
        Identification id = identify(cat(), LaurentPoly::one(), LaurentPoly::one(), 0);
        CHECK(has_candidate(id, "unknot"));
    }
    {
        KnotParams kp = canon(5, 22, 6);
        BraidWord w = braid_word(kp);
        Identification id = identify(cat(), alexander(w), jones(w), writhe(w));
        CHECK(has_candidate(id, "7_7"));
    }
}

TEST_CASE("alexander-only sums are listed without chirality markers") {
    LaurentPoly d62 = cat().find("6_2")->alexander_poly();
    Identification id = identify(cat(), normalize_alexander(d62 * d62), std::nullopt, 0);
    CHECK(has_candidate(id, "6_2 # 6_2"));
}

TEST_CASE("jones fingerprints exclude false sums for the weave words") {
    // Delta of K(3,10,5) equals Delta(6_2)^2, but the Jones value refutes the
    // connected-sum reading: the closure of (s1 s2^-1)^5 is a prime weave.
    KnotParams kp = canon(3, 10, 5);
    BraidWord w = braid_word(kp);
    LaurentPoly a = alexander(w);
    LaurentPoly d62 = cat().find("6_2")->alexander_poly();
    REQUIRE(a == normalize_alexander(d62 * d62));
    Identification with_jones = identify(cat(), a, jones(w), writhe(w));
    CHECK(with_jones.candidates.empty());
    Identification without_jones = identify(cat(), a, std::nullopt, writhe(w));
    CHECK(has_candidate(without_jones, "6_2 # 6_2"));
}

TEST_CASE("identification is order-insensitive in the factors") {
    LaurentPoly a = cat().find("3_1")->alexander_poly() * cat().find("4_1")->alexander_poly();
    Identification id = identify(cat(), normalize_alexander(a), std::nullopt, 0);
    CHECK(has_candidate(id, "3_1 # 4_1"));
}

TEST_CASE("obstruction note fires when every candidate is flagged") {
    Identification id = identify(cat(), cat().find("8_17")->alexander_poly(), std::nullopt, 0);
    REQUIRE(has_candidate(id, "8_17"));
    if (id.candidates.size() == 1) CHECK(id.obstruction_note.has_value());
    Identification clean = identify(cat(), cat().find("4_1")->alexander_poly(), std::nullopt, 0);
    CHECK(!clean.obstruction_note.has_value());
}

TEST_CASE("user catalog merge overrides by name and validates the schema") {
    std::string path = "test_catalog_tmp.json";
    {
        std::ofstream out(path);
        out << R"({"version":"v1","entries":[
            {"name":"3_1","alexander":[-1,1],"symmetry":"chiral","provenance":"override"},
            {"name":"my_knot","alexander":[9,-4],"fibered":false}
        ]})";
    }
    Catalog merged = load_catalog(path);
    CHECK(merged.find("3_1")->symmetry == KnotSymmetry::chiral);
    CHECK(merged.find("3_1")->provenance == "override");
    REQUIRE(merged.find("my_knot") != nullptr);
    CHECK(merged.find("my_knot")->alexander == RolfsenCoeffs{9, -4});
    CHECK(merged.find("my_knot")->fibered == false);
    std::remove(path.c_str());

    {
        std::ofstream out(path);
        out << R"({"version":"v1","entries":[{"name":"x","alexander":[2]}]})";  // 2 at t=1
    }
    CHECK_THROWS_AS(load_catalog(path), schema_error);
    {
        std::ofstream out(path);
        out << R"({"version":"v2","entries":[]})";
    }
    CHECK_THROWS_AS(load_catalog(path), schema_error);
    {
        std::ofstream out(path);
        out << R"([{"name":"bare_array_ok","alexander":[1]}])";
    }
    CHECK(load_catalog(path).find("bare_array_ok") != nullptr);
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(load_catalog(path), schema_error);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_catalog(std::string("definitely_missing.json")), schema_error);
}

TEST_CASE("no box knot identifies exclusively to obstructed entries") {
    for (int N = 2; N <= 5; ++N)
        for (int p = N + 1; p <= 9; ++p)
            for (int q = N + 1; q <= 9; ++q) {
                if (std::gcd(N, p) != 1 || std::gcd(N, q) != 1) continue;
                BraidWord w = braid_word(canon(N, p, q));
                Identification id = identify(cat(), alexander(w), jones(w), writhe(w));
                CHECK(!id.obstruction_note.has_value());
            }
}
