#include <doctest.h>

#include <filesystem>

#include "latmat/json_io.hpp"
#include "latmat/oracle.hpp"

#include "helpers.hpp"

using namespace latmat;
using namespace latmat::testutil;

TEST_CASE("matrix files round-trip") {
    RingKind z = RingKind::Integers;
    Mat m = mat(z, {{"1", "-2"}, {"1/2", "0"}});
    CHECK(mat_from_json(mat_to_json(m)) == m);

    RingKind q = RingKind::QuadraticSqrt2;
    Mat mq = mat(q, {{"1+1*s2", "(1+2*s2)/3"}, {"-1", "s2"}});
    CHECK(mat_from_json(mat_to_json(mq)) == mq);

    for (RingKind kind : all_rings()) {
        SeededStream s(246, static_cast<std::uint64_t>(kind));
        for (int i = 0; i < 50; ++i) {
            Mat r = random_ring_matrix(s, kind, 1 + s.below(4), 20);
            CHECK(mat_from_json(mat_to_json(r)) == r);
        }
    }
}

TEST_CASE("cone files round-trip and validate on load") {
    RingKind z = RingKind::Integers;
    ConeA p = ConeA::validate(mat(z, {{"1", "1"}, {"1", "0"}}));
    ConeA back = cone_from_json(cone_to_json(p));
    CHECK(back.matrix() == p.matrix());

    // a stored generator that fails validation is rejected at parse time
    std::string bad = R"({"cone_A": {"ring": "int", "n": 2,
                          "rows": [["1", "-1"], ["0", "1"]]}})";
    CHECK(thrown_code([&] { cone_from_json(bad); }) == Errc::NegativeEntry);
    std::string notunit = R"({"cone_A": {"ring": "int", "n": 2,
                              "rows": [["1", "0"], ["0", "2"]]}})";
    CHECK(thrown_code([&] { cone_from_json(notunit); }) == Errc::NotAUnit);
}

TEST_CASE("structure files round-trip") {
    for (RingKind kind : all_rings()) {
        GenSpec spec{kind, 3, 98765, 6, {}};
        StructureData s = gen_structure_data(spec);
        StructureData back = structure_from_json(structure_to_json(s));
        CHECK(back.ring == s.ring);
        CHECK(back.n == s.n);
        CHECK(back.h == s.h);
        CHECK(back.d == s.d);
        CHECK(back.q == s.q);
    }
}

TEST_CASE("parse diagnostics name the line or field") {
    auto err_message = [](auto f) -> std::string {
        try {
            f();
        } catch (const Error& e) {
            return e.what();
        }
        return "";
    };

    // malformed JSON reports a line number
    std::string msg = err_message([] { mat_from_json("{\n  \"ring\": \"int\",\n  oops\n}"); });
    CHECK(msg.find("line 3") != std::string::npos);

    CHECK(thrown_code([] { mat_from_json("[1, 2]"); }) == Errc::ParseError);
    CHECK(err_message([] { mat_from_json(R"({"ring": "int", "n": 2})"); })
              .find("'rows'") != std::string::npos);
    CHECK(err_message([] {
              mat_from_json(R"({"ring": "int", "n": 2, "rows": [["1", "2"]]})");
          }).find("'rows'") != std::string::npos);
    CHECK(err_message([] {
              mat_from_json(R"({"ring": "int", "n": 2, "rows": [["1", "2"], ["3"]]})");
          }).find("row 2") != std::string::npos);
    CHECK(err_message([] {
              mat_from_json(R"({"ring": "int", "n": 2, "rows": [["1", "2"], ["3", 4]]})");
          }).find("(2,2)") != std::string::npos);
    CHECK(thrown_code([] {
        mat_from_json(R"({"ring": "int", "n": 2, "rows": [["1", "2"], ["3", "x"]]})");
    }) == Errc::ParseError);
    CHECK(thrown_code([] {
        mat_from_json(R"({"ring": "octonions", "n": 1, "rows": [["1"]]})");
    }) == Errc::ParseError);
    CHECK(thrown_code([] {
        mat_from_json(R"({"ring": "int", "n": 0, "rows": []})");
    }) == Errc::ParseError);
    CHECK(thrown_code([] {
        structure_from_json(R"({"ring": "int", "n": 1, "H": [["1"]], "D": [["1"]]})");
    }) == Errc::ParseError);   // missing Q
    CHECK(thrown_code([] { cone_from_json(R"({"ring": "int"})"); }) == Errc::ParseError);
}

TEST_CASE("file helpers") {
    auto dir = fresh_temp_dir("json");
    auto path = dir / "m.json";
    RingKind q = RingKind::QuadraticSqrt2;
    Mat m = mat(q, {{"1", "(1+1*s2)/2"}, {"2", "1"}});
    write_file(path, mat_to_json(m));
    CHECK(load_mat(path) == m);
    CHECK(thrown_code([&] { read_file(dir / "missing.json"); }) == Errc::UsageError);

    GenSpec spec{RingKind::Rationals, 2, 31415, 5, {}};
    StructureData s = gen_structure_data(spec);
    auto spath = dir / "s.json";
    write_file(spath, structure_to_json(s));
    StructureData sback = load_structure(spath);
    CHECK(sback.q == s.q);

    ConeA cone = gen_cone(spec);
    auto cpath = dir / "c.json";
    write_file(cpath, cone_to_json(cone));
    CHECK(load_cone(cpath).matrix() == cone.matrix());

    std::filesystem::remove_all(dir);
}
