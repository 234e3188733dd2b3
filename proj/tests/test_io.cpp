#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sigma2/io.hpp"

using namespace sigma2;

TEST_CASE("dense tensor round trip") {
    json j = json::parse(R"({"shape":[2,2],"entries":["1","0","-1/2","3"]})");
    Tensor<Rat> t = tensor_from_json(j);
    CHECK(t.at({1, 0}) == Rat(-1, 2));
    CHECK(tensor_from_json(tensor_to_json(t)) == t);
}

TEST_CASE("sparse tensor parsing") {
    json j = json::parse(
        R"({"shape":[2,2,2],"coords":[[1,0,0],[0,1,0],[0,0,1]],"values":["1","1","1"]})");
    Tensor<Rat> w = tensor_from_json(j);
    CHECK(w.at({1, 0, 0}) == Rat(1));
    CHECK(w.at({0, 0, 0}) == Rat(0));

    CHECK_THROWS_AS(tensor_from_json(json::parse(
                        R"({"shape":[2,2],"coords":[[0,0],[0,0]],"values":["1","2"]})")),
                    Error);
    CHECK_THROWS_AS(tensor_from_json(json::parse(
                        R"({"shape":[2,2],"coords":[[0,2]],"values":["1"]})")),
                    Error);
    CHECK_THROWS_AS(tensor_from_json(json::parse(
                        R"({"shape":[2,2],"coords":[[0]],"values":["1"]})")),
                    Error);
    CHECK_THROWS_AS(tensor_from_json(json::parse(
                        R"({"shape":[2,2],"coords":[[0,0]],"values":["1","2"]})")),
                    Error);
}

TEST_CASE("tensor rejects malformed input") {
    CHECK_THROWS_AS(tensor_from_json(json::parse(R"({"shape":[2,2],"entries":["1"]})")), Error);
    CHECK_THROWS_AS(tensor_from_json(json::parse(R"({"shape":[],"entries":[]})")), Error);
    CHECK_THROWS_AS(tensor_from_json(json::parse(R"({"shape":[2,0],"entries":[]})")), Error);
    CHECK_THROWS_AS(tensor_from_json(json::parse(R"({"shape":[2]})")), Error);
    CHECK_THROWS_AS(tensor_from_json(json::parse(R"({"shape":[2],"entries":["1/0","1"]})")),
                    Error);
    CHECK_THROWS_AS(tensor_from_json(json::parse("[1,2]")), Error);
}

TEST_CASE("polynomial round trip and validation") {
    json j = json::parse(
        R"({"n_vars":2,"degree":3,"terms":[{"exponents":[2,1],"coeff":"1"},{"exponents":[0,3],"coeff":"-2/3"}]})");
    HomPoly f = poly_from_json(j);
    CHECK(f.coeffs.at({2, 1}) == Rat(1));
    CHECK(f.coeffs.at({0, 3}) == Rat(-2, 3));
    HomPoly back = poly_from_json(poly_to_json(f));
    CHECK(back.coeffs == f.coeffs);

    CHECK_THROWS_AS(poly_from_json(json::parse(
                        R"({"n_vars":2,"degree":3,"terms":[{"exponents":[1,1],"coeff":"1"}]})")),
                    Error);
    CHECK_THROWS_AS(
        poly_from_json(json::parse(
            R"({"n_vars":2,"degree":2,"terms":[{"exponents":[1,1],"coeff":"1"},{"exponents":[1,1],"coeff":"2"}]})")),
        Error);
}

TEST_CASE("decomposition round trip over the rationals") {
    Tensor<Rat> w{Shape({2, 2, 2})};
    w.at({1, 0, 0}) = Rat(1);
    w.at({0, 1, 0}) = Rat(1);
    w.at({0, 0, 1}) = Rat(1);
    Decomposition dec = decompose(w);
    json j = decomposition_to_json(dec);
    CHECK(j.at("field").at("delta").is_null());
    Decomposition back = decomposition_from_json(j);
    CHECK(back.canonical_key() == dec.canonical_key());
    CHECK(verify(back, w));
}

TEST_CASE("decomposition round trip over an extension") {
    Tensor<QuadExt> acc{Shape({2, 2, 2})};
    std::vector<QuadExt> u{QuadExt(Rat(1)), QuadExt(Rat(0), Rat(1), 2)};
    std::vector<QuadExt> uc{QuadExt(Rat(1)), QuadExt(Rat(0), Rat(-1), 2)};
    accumulate_outer(acc, QuadExt(Rat(1)), VecPerMode<QuadExt>{u, u, u});
    accumulate_outer(acc, QuadExt(Rat(1)), VecPerMode<QuadExt>{uc, uc, uc});
    Tensor<Rat> t{Shape({2, 2, 2})};
    for (std::size_t i = 0; i < t.size(); ++i) {
        REQUIRE(acc[i].is_rational());
        t[i] = acc[i].rational_part();
    }

    Decomposition dec = decompose(t);
    REQUIRE(dec.delta == 2);
    json j = decomposition_to_json(dec);
    CHECK(j.at("field").at("delta") == json(2));
    Decomposition back = decomposition_from_json(j);
    CHECK(verify(back, t));
    CHECK(back.canonical_key() == dec.canonical_key());
}

TEST_CASE("decomposition validation") {
    CHECK_THROWS_AS(decomposition_from_json(json::parse(
                        R"({"claimed_rank":2,"terms":[],"field":{"delta":null}})")),
                    Error);
    CHECK_THROWS_AS(
        decomposition_from_json(json::parse(
            R"({"claimed_rank":1,"terms":[{"coeff":{"a":"1","b":"1","delta":3},"vectors":[["1","0"]]}],"field":{"delta":5}})")),
        Error);
}

TEST_CASE("classify report fields") {
    Tensor<Rat> w{Shape({2, 2, 2})};
    w.at({1, 0, 0}) = Rat(1);
    w.at({0, 1, 0}) = Rat(1);
    w.at({0, 0, 1}) = Rat(1);
    json r = classify_report(w);
    CHECK(r.at("stratum") == "tangent");
    CHECK(r.at("rank") == 3);
    CHECK(r.at("border_rank") == 2);
    CHECK(r.at("eta") == 3);
    CHECK(r.at("multilinear_ranks") == json::parse("[2,2,2]"));

    Tensor<Rat> d3{Shape({3, 3, 3})};
    for (int i = 0; i < 3; ++i) d3.at({i, i, i}) = Rat(1);
    json rb = classify_report(d3);
    CHECK(rb.at("stratum") == "beyond_sigma2");
    CHECK(rb.at("rank").is_null());
    CHECK(rb.at("eta").is_null());
}
