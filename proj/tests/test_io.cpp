#include "qtetra/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>

#include "generators.hpp"

using namespace qtetra;
using RF = RationalFunction;
using M = Matrix<RF>;

namespace {

const auto ctx = symbolic_field();
const RF q = RF::q();

}  // namespace

TEST(ModuleFile, Layout) {
    const auto ev = evaluation_module(1, q, ctx);
    const Json j = module_to_json(ev, FieldMode::symbolic());
    EXPECT_EQ(j.at("schema_version"), schema_version);
    EXPECT_EQ(j.at("algebra"), "LOOP_EQ");
    EXPECT_EQ(j.at("dimension"), 2);
    EXPECT_EQ(j.at("field").at("mode"), "symbolic");
    EXPECT_EQ(j.at("generators").at("y1"), Json::parse(R"j([["(1)/(q)", "0"], ["1", "q"]])j"));
    EXPECT_EQ(j.at("generators").at("y0")[0][1], "(1)/(q)");
    EXPECT_EQ(j.at("provenance").at("label"), "Ev(1,q)");
}

TEST(ModuleFile, RoundTripIsByteIdentical) {
    for (const auto& rep : {evaluation_module(2, q + RF(1), ctx),
                            boxq_of_loop(evaluation_module(2, q, ctx), ctx),
                            uqsl2_equitable_module(3, ctx)}) {
        const std::string text = serialize(module_to_json(rep, FieldMode::symbolic()));
        const auto back = module_from_json(parse_json_text(text), ctx);
        EXPECT_EQ(back, rep);
        EXPECT_EQ(back.provenance, rep.provenance);
        EXPECT_EQ(serialize(module_to_json(back, FieldMode::symbolic())), text);
    }
}

TEST(ModuleFile, RandomMatricesRoundTrip) {
    testgen::Source src(21);
    for (int k = 0; k < 20; ++k) {
        MatrixRep<RF> rep{AlgebraId::Aq, 3, {{"x", src.matrix(3, 3)}, {"y", src.matrix(3, 3)}}, {}};
        const std::string text = serialize(module_to_json(rep, FieldMode::symbolic()));
        const auto back = module_from_json(parse_json_text(text), ctx);
        EXPECT_EQ(back, rep);
        EXPECT_EQ(serialize(module_to_json(back, FieldMode::symbolic())), text);
    }
}

TEST(ModuleFile, SpecializedMode) {
    const auto at2 = specialized_field(Rational(2));
    const auto mode = FieldMode::at(Rational(2));
    const auto ev = evaluation_module(1, Rational(3), at2);
    const Json j = module_to_json(ev, mode);
    EXPECT_EQ(j.at("field").at("mode"), "specialized");
    EXPECT_EQ(j.at("field").at("q"), "2");
    EXPECT_EQ(field_mode_of(j), mode);
    EXPECT_EQ(module_from_json(j, at2), ev);
    EXPECT_EQ(j.at("generators").at("x1")[0][0], "2");
    EXPECT_EQ(j.at("generators").at("x1")[1][1], "1/2");
}

TEST(ModuleFile, SpecializeRep) {
    const auto at2 = specialized_field(Rational(2));
    const auto sym = evaluation_module(2, RF(3), ctx);
    EXPECT_EQ(specialize_rep(sym, at2), evaluation_module(2, Rational(3), at2));
}

TEST(ModuleFile, MalformedInputsRejected) {
    const Json good = module_to_json(evaluation_module(1, q, ctx), FieldMode::symbolic());
    auto without = [&](const char* key) {
        Json j = good;
        j.erase(key);
        return j;
    };
    EXPECT_THROW(module_from_json(without("generators"), ctx), FormatError);
    EXPECT_THROW(module_from_json(without("algebra"), ctx), FormatError);
    Json bad_algebra = good;
    bad_algebra["algebra"] = "NOPE";
    EXPECT_THROW(module_from_json(bad_algebra, ctx), FormatError);
    Json bad_scalar = good;
    bad_scalar["generators"]["x0"][0][0] = "q +";
    EXPECT_THROW(module_from_json(bad_scalar, ctx), FormatError);
    Json bad_shape = good;
    bad_shape["generators"]["x0"] = Json::parse(R"([["1"]])");
    EXPECT_THROW(module_from_json(bad_shape, ctx), FormatError);
    Json missing_gen = good;
    missing_gen["generators"].erase("z1");
    EXPECT_THROW(module_from_json(missing_gen, ctx), FormatError);
    Json version = good;
    version["schema_version"] = 99;
    EXPECT_THROW(module_from_json(version, ctx), FormatError);
    EXPECT_THROW(parse_json_text("{"), FormatError);
    Json mode = good;
    mode["field"] = Json{{"mode", "specialized"}, {"q", "1"}};
    EXPECT_THROW(field_mode_of(mode), FormatError);
}

TEST(Files, AtomicWriteAndRead) {
    const auto dir = std::filesystem::temp_directory_path() / "qtetra_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "m.json";
    const auto text = serialize(module_to_json(evaluation_module(1, RF(1), ctx), FieldMode::symbolic()));
    write_file_atomic(path, text);
    EXPECT_FALSE(std::filesystem::exists(dir / "m.json.tmp"));
    EXPECT_EQ(serialize(read_json_file(path)), text);
    EXPECT_THROW(read_json_file(dir / "missing.json"), FormatError);
    std::filesystem::remove_all(dir);
}

TEST(Reports, Serialize) {
    const auto box = boxq_of_loop(evaluation_module(1, q, ctx), ctx);
    const Json c = check_report_to_json(check_representation(box, ctx));
    EXPECT_EQ(c.at("passed"), true);
    EXPECT_EQ(c.at("relations").size(), 20u);
    const Json t = table_report_to_json(check_action_tables(box, ctx));
    EXPECT_EQ(t.at("containments_checked"), 96);
    const Json f = bilinear_form_to_json(omega_form(box));
    EXPECT_EQ(f.at("solution_space_dim"), 1);
    const Json e = eightfold_to_json(eightfold_comparison(box));
    EXPECT_EQ(e.at("isomorphic").size(), 8u);
    EXPECT_EQ(e.at("structures")[4], "V*.rho0");
}
