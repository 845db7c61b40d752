#include <doctest.h>

#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "vvmf/serialize.hpp"

using namespace vvmf;
using nlohmann::json;

TEST_CASE("rationals serialize as exact strings") {
    QSeries s(rat(4, 7), {rat(1), rat(-153, 14)});
    json j = to_json(s);
    CHECK(j["offset"] == "4/7");
    CHECK(j["coeffs"][1] == "-153/14");
}

TEST_CASE("qseries JSON round trip on random series") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 999);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> c(12);
        for (auto& r : c) r = rat(num(rng), den(rng));
        QSeries s(rat(den(rng) % 7, 7), std::move(c));
        // dump/parse through text, as the CLI does
        json reparsed = json::parse(to_json(s).dump());
        CHECK(qseries_from_json(reparsed) == s);
    }
}

TEST_CASE("classification report round trip") {
    ClassificationReport r = check_constraints(derive_params(4, 3, 7));
    json j = json::parse(to_json(r).dump(2));
    ClassificationReport back = classification_from_json(j);
    CHECK(back.modular == r.modular);
    CHECK(back.excluded == r.excluded);
    CHECK(back.q_primes == r.q_primes);
    REQUIRE(back.lemma_checks.size() == r.lemma_checks.size());
    for (size_t i = 0; i < r.lemma_checks.size(); ++i) {
        CHECK(back.lemma_checks[i].name == r.lemma_checks[i].name);
        CHECK(back.lemma_checks[i].pass == r.lemma_checks[i].pass);
    }
    CHECK(back.params.M == 7);
    CHECK(j["lemma_checks"][0]["constraint"] == "Lemma3.3a");
    CHECK(j["lemma_checks"][0]["statement"] == "N | 6(a+b)");
}

TEST_CASE("vvmf form round trip") {
    ReprParams p = derive_params(4, 3, 7);
    VvmfForm f = minimal_form(p, 8);
    VvmfForm back = vvmf_form_from_json(json::parse(to_json(f).dump()));
    CHECK(back.weight == f.weight);
    CHECK(back.comp1 == f.comp1);
    CHECK(back.comp2 == f.comp2);
}

TEST_CASE("valuation CSV is exact decimal text") {
    ReprParams p = derive_params(4, 3, 7);
    QSeries f1 = f0_direct(p, 1, 3);
    ValuationTable t = valuation_table(7, f1, p, 1);
    std::string csv = to_csv(t, f1);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,numerator,denominator,nu_actual,nu_predicted,match");
    std::getline(lines, line);
    CHECK(line == "0,1,1,0,0,true");
    std::getline(lines, line);
    CHECK(line == "1,-153,14,-1,-1,true");
}
