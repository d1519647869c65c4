#include <cmath>
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "kms/enumerator.hpp"
#include "kms/error.hpp"
#include "kms/harness.hpp"

using namespace kms;
using doctest::Approx;

namespace {

int exception_index(const TheoremReport& r) {
    for (std::size_t i = 0; i < r.rows.size(); ++i)
        if (r.rows[i].exception) return static_cast<int>(i);
    return -1;
}

RunOptions workers(int w) {
    RunOptions o;
    o.workers = w;
    return o;
}

}  // namespace

TEST_CASE("theorem cells validate") {
    CHECK_NOTHROW(validate({TheoremId::T1, 6, 3, 0}));
    CHECK_THROWS_AS(validate({TheoremId::T1, 6, 2, 0}), Error);
    CHECK_THROWS_AS(validate({TheoremId::T1, 7, 3, 0}), Error);
    CHECK_THROWS_AS(validate({TheoremId::T2, 5, 3, 2}), Error);
    CHECK_THROWS_AS(validate({TheoremId::T2, 5, 3, 3}), Error);
    CHECK_THROWS_AS(validate({TheoremId::T3, 6, 3, 0}), Error);
    CHECK_THROWS_AS(validate({TheoremId::T4, 5, 3, 0}), Error);
    CHECK_THROWS_AS(validate({TheoremId::T5, 6, 3, 0}), Error);
    CHECK(theorem_from_string("T4") == TheoremId::T4);
    CHECK_THROWS_AS(theorem_from_string("T6"), Error);
    CHECK(branch_of({TheoremId::T1, 8, 3, 0}) == "i");
    CHECK(branch_of({TheoremId::T1, 10, 3, 0}) == "ii");
    CHECK(branch_of({TheoremId::T5, 6, 2, 0}) == "ii");
    CHECK(branch_of({TheoremId::T5, 7, 2, 0}) == "i");
}

TEST_CASE("thresholds") {
    const auto t1 = threshold_for({TheoremId::T1, 6, 3, 0});
    CHECK(are_isomorphic(t1.exceptional, split_star(6, 2)));
    CHECK(t1.value == Approx(distance_spectral_radius(split_star(6, 2)).lambda1).epsilon(1e-10));
    const auto t3 = threshold_for({TheoremId::T3, 7, 3, 0});
    CHECK(t3.value == Approx(theta(7)).epsilon(1e-12));
    CHECK(are_isomorphic(t3.exceptional, join(complete_graph(1), disjoint_union(complete_graph(5), complete_graph(1)))));
    const auto t4 = threshold_for({TheoremId::T4, 6, 3, 0});
    CHECK(t4.value == Approx(3 + std::sqrt(10.0)).epsilon(1e-12));
    CHECK(are_isomorphic(t4.exceptional, split_star(6, 3)));
    const auto t1b = threshold_for({TheoremId::T1, 10, 3, 0});
    CHECK(are_isomorphic(t1b.exceptional, join(complete_graph(1), disjoint_union(complete_graph(7), empty_graph(2)))));
}

TEST_CASE("exhaustive verification examples") {
    const auto r1 = verify_theorem({TheoremId::T1, 6, 3, 0}, enumerated_source(6));
    CHECK(r1.rows.size() == 112);
    CHECK(r1.violations == 0);
    CHECK(r1.exceptions == 1);
    CHECK(r1.passed());
    CHECK(r1.exhaustive);
    CHECK(are_isomorphic(parse_graph6(r1.rows[exception_index(r1)].graph6), split_star(6, 2)));

    const auto r3 = verify_theorem({TheoremId::T3, 7, 3, 0}, enumerated_source(7));
    CHECK(r3.rows.size() == 853);
    CHECK(r3.passed());

    const auto r5 = verify_theorem({TheoremId::T5, 8, 2, 0}, enumerated_source(8));
    CHECK(r5.passed());
    CHECK(are_isomorphic(parse_graph6(r5.rows[exception_index(r5)].graph6), split_star(8, 4)));
    CHECK(r5.rows[exception_index(r5)].cmp == Comparison::equal);
}

TEST_CASE("rows are sorted and independent of the worker count") {
    const auto src = enumerated_source(7);
    const auto one = to_csv(verify_theorem({TheoremId::T2, 7, 5, 3}, src, workers(1)));
    const auto four = to_csv(verify_theorem({TheoremId::T2, 7, 5, 3}, src, workers(4)));
    CHECK(one == four);
    const auto r = verify_theorem({TheoremId::T2, 5, 3, 1}, enumerated_source(5), workers(3));
    for (std::size_t i = 1; i < r.rows.size(); ++i)
        CHECK(canonical_form(parse_graph6(r.rows[i - 1].graph6)) < canonical_form(parse_graph6(r.rows[i].graph6)));
}

TEST_CASE("sources") {
    const char* path = "harness_source_test.g6";
    {
        std::ofstream out(path);
        out << "Bw\nCF\n";
    }
    CHECK_THROWS_AS(file_source(path, 3), Error);
    try {
        file_source(path, 3);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::source_order_mismatch);
    }
    std::remove(path);
    CHECK_THROWS_AS(verify_theorem({TheoremId::T1, 6, 3, 0}, enumerated_source(5)), Error);

    const auto s = sampled_source(10, 30, 1);
    CHECK_FALSE(s.exhaustive);
    for (std::size_t i = 0; i < s.graphs.size(); ++i)
        for (std::size_t j = i + 1; j < s.graphs.size(); ++j) CHECK_FALSE(are_isomorphic(s.graphs[i], s.graphs[j]));
    const auto r = verify_theorem({TheoremId::T1, 10, 3, 0}, s);
    CHECK(r.passed());
    CHECK(r.note.find("non-exhaustive") != std::string::npos);
}

TEST_CASE("sharpness examples") {
    const auto a = sharpness_check({TheoremId::T1, 8, 3, 0});
    CHECK(a.ok());
    CHECK(a.checks[0].witness == VertexSet::range(3));

    const auto b = sharpness_check({TheoremId::T5, 7, 2, 0});
    CHECK(b.ok());
    bool saw_split_star = false;
    for (const auto& c : b.checks)
        if (are_isomorphic(c.graph, split_star(7, 3))) {
            saw_split_star = true;
            CHECK(c.witness == VertexSet::range(3));
        }
    CHECK(saw_split_star);

    const auto c = sharpness_check({TheoremId::T2, 5, 3, 1});
    CHECK(c.ok());
    CHECK(c.checks[0].witness == VertexSet{0});
    CHECK(are_isomorphic(c.checks[0].graph, join(complete_graph(1), disjoint_union(complete_graph(3), complete_graph(1)))));
    CHECK_THROWS_AS(sharpness_check({TheoremId::T3, 6, 3, 0}), Error);
}

TEST_CASE("minimizer examples") {
    const auto a = minimizer_search({Property::perfect_k_matching, 3, 0}, enumerated_source(6));
    CHECK(are_isomorphic(a.graph, split_star(6, 2)));
    const auto b = minimizer_search({Property::gfc, 3, 0}, enumerated_source(7));
    CHECK(are_isomorphic(b.graph, join(complete_graph(1), disjoint_union(complete_graph(5), complete_graph(1)))));
    const auto c = minimizer_search({Property::gbc, 2, 0}, enumerated_source(6));
    CHECK(are_isomorphic(c.graph, split_star(6, 3)));
    GraphSource only_complete{{complete_graph(4)}, "K4", false};
    CHECK_THROWS_AS(minimizer_search({Property::perfect_k_matching, 3, 0}, only_complete), Error);
}

TEST_CASE("lemma sweeps") {
    for (LemmaId id : {LemmaId::L2_6, LemmaId::L2_7, LemmaId::L2_8}) {
        const auto r = lemma_numeric_check(id);
        CHECK(r.failures == 0);
        CHECK_FALSE(r.instances.empty());
        CHECK(lemma_from_string(to_string(id)) == id);
    }
    const auto l8 = lemma_numeric_check(LemmaId::L2_8);
    int equalities = 0;
    for (const auto& i : l8.instances) {
        if (i.clause == "ii" && i.cmp == Comparison::equal) CHECK(i.params.rfind("n=3 ", 0) == 0);
        if (i.clause == "iv" && i.cmp == Comparison::equal) CHECK(i.params.rfind("n=2 ", 0) == 0);
        equalities += i.cmp == Comparison::equal;
    }
    CHECK(equalities > 0);
    CHECK_THROWS_AS(lemma_from_string("L2.9"), Error);
}

TEST_CASE("report formats") {
    CHECK(format_number(5.37228132326901) == "5.372281323");
    CHECK(format_number(2.0) == "2");
    const auto r = verify_theorem({TheoremId::T1, 6, 3, 0}, enumerated_source(6));
    const std::string csv = to_csv(r);
    CHECK(csv.rfind("graph6,n,k,d,lambda1,threshold,cmp,property,verdict,exception,violation\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 113);

    const auto doc = nlohmann::json::parse(to_json(r));
    CHECK(doc["metadata"]["spec"]["theorem"] == "T1");
    CHECK(doc["metadata"]["exhaustive"] == true);
    CHECK(doc["metadata"]["eps"] == 1e-9);
    CHECK(doc["rows"].size() == 112);
    CHECK(doc["rows"][0].contains("violation"));

    const auto l = nlohmann::json::parse(to_json(lemma_numeric_check(LemmaId::L2_7)));
    CHECK(l["metadata"]["failures"] == 0);
}
