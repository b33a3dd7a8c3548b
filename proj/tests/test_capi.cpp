// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "wigfluct/wigfluct.h"

namespace {

std::string momentText(std::initializer_list<int> orders) {
    const std::vector<int> v(orders);
    wf_poly* p = nullptr;
    REQUIRE(wf_moment(v.data(), v.size(), 1, &p) == WF_OK);
    std::string s = wf_poly_text(p);
    wf_poly_free(p);
    return s;
}

}  // namespace

TEST_CASE("version") { CHECK(std::string(wf_version()) == "1.0.0"); }

TEST_CASE("polynomial handles") {
    wf_poly* p = nullptr;
    REQUIRE(wf_poly_parse("24*b4^2 + 8*b8", &p) == WF_OK);
    CHECK(std::string(wf_poly_text(p)) == "8*b8 + 24*b4^2");
    CHECK(wf_poly_term_count(p) == 2);
    const char* coeff = nullptr;
    const int* idx = nullptr;
    size_t degree = 0;
    REQUIRE(wf_poly_term(p, 1, &coeff, &idx, &degree) == WF_OK);
    CHECK(std::string(coeff) == "24");
    REQUIRE(degree == 2);
    CHECK(idx[0] == 4);
    CHECK(idx[1] == 4);
    CHECK(wf_poly_term(p, 2, &coeff, &idx, &degree) == WF_ERR_INVALID_ARGUMENT);
    CHECK(std::string(wf_poly_gue_text(p)) == "0");

    const int keys[] = {4, 8};
    const double vals[] = {1.0, 0.0};
    double out = 0;
    REQUIRE(wf_poly_evaluate(p, keys, vals, 2, &out) == WF_OK);
    CHECK(out == doctest::Approx(24.0));
    CHECK(wf_poly_evaluate(p, keys, vals, 1, &out) == WF_ERR_INVALID_ARGUMENT);
    CHECK(std::string(wf_last_error()).find("8") != std::string::npos);

    wf_poly* q = nullptr;
    REQUIRE(wf_poly_parse("8*b8 + 24*b4^2", &q) == WF_OK);
    CHECK(wf_poly_equal(p, q));
    wf_poly_free(q);
    wf_poly_free(p);

    CHECK(wf_poly_parse("b3", &p) == WF_ERR_INVALID_ARGUMENT);
    CHECK(std::string(wf_last_error()).size() > 0);
    CHECK(wf_poly_parse("b2", nullptr) == WF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("moments and oracle") {
    CHECK(momentText({2}) == "b2");
    CHECK(momentText({3}) == "0");
    CHECK(momentText({2, 2}) == "2*b4 + 2*b2^2");

    const int idx[] = {1, 1, 2};
    wf_poly *a = nullptr, *b = nullptr;
    REQUIRE(wf_moment(idx, 3, 2, &a) == WF_OK);
    REQUIRE(wf_moment_oracle(idx, 3, 8, 2, &b) == WF_OK);
    CHECK(wf_poly_equal(a, b));
    wf_poly_free(a);
    wf_poly_free(b);

    const int big[] = {2, 2, 2, 2, 2};
    CHECK(wf_moment_oracle(big, 5, 8, 1, &a) == WF_ERR_CAPABILITY);
    CHECK(wf_moment(nullptr, 0, 1, &a) == WF_ERR_INVALID_ARGUMENT);
    const int bad[] = {2, 0};
    CHECK(wf_moment(bad, 2, 1, &a) == WF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("finite N") {
    const int idx[] = {2, 2};
    wf_poly* p = nullptr;
    REQUIRE(wf_finite_n(idx, 2, 10, 8, &p) == WF_OK);
    CHECK(std::string(wf_poly_text(p)) == "9/5*b4 + 2*b2^2");
    wf_poly_free(p);
    CHECK(wf_finite_n(idx, 2, 0, 8, &p) == WF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("cumulant table") {
    wf_table* t = nullptr;
    REQUIRE(wf_cumulants(4, 4, &t) == WF_OK);
    REQUIRE(wf_table_size(t) > 3);
    const int* orders = nullptr;
    size_t r = 0;
    const wf_poly* value = nullptr;
    REQUIRE(wf_table_entry(t, 1, &orders, &r, &value) == WF_OK);
    CHECK(r == 1);
    CHECK(orders[0] == 2);
    CHECK(std::string(wf_poly_text(value)) == "b2");
    CHECK(wf_table_entry(t, wf_table_size(t), &orders, &r, &value) == WF_ERR_INVALID_ARGUMENT);
    wf_table_free(t);
    CHECK(wf_cumulants(5, 8, &t) == WF_ERR_CAPABILITY);
}

TEST_CASE("enumeration") {
    wf_list* l = nullptr;
    REQUIRE(wf_enumerate(WF_ENUM_AN, nullptr, 0, 4, &l) == WF_OK);
    CHECK(wf_list_size(l) == 3);
    CHECK(std::string(wf_list_item(l, 0)) == "{1,3,6,8}{2,4,5,7}");
    CHECK(wf_list_item(l, 3) == nullptr);
    wf_list_free(l);

    const int six[] = {6};
    REQUIRE(wf_enumerate(WF_ENUM_NC2, six, 1, 0, &l) == WF_OK);
    CHECK(wf_list_size(l) == 5);
    wf_list_free(l);

    const int four[] = {4};
    REQUIRE(wf_enumerate(WF_ENUM_NC, four, 1, 0, &l) == WF_OK);
    CHECK(wf_list_size(l) == 14);
    wf_list_free(l);

    const int two[] = {2, 2};
    REQUIRE(wf_enumerate(WF_ENUM_PSNC2LF, two, 2, 0, &l) == WF_OK);
    CHECK(wf_list_size(l) == 3);
    wf_list_free(l);

    CHECK(wf_enumerate(WF_ENUM_AN, nullptr, 0, 6, &l) == WF_ERR_CAPABILITY);
    CHECK(wf_enumerate(static_cast<wf_enum_kind>(9), two, 2, 0, &l) == WF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("graph export") {
    const int shape[] = {2};
    const std::string path = "capi_t_graph.txt";
    REQUIRE(wf_dump_t_graph(shape, 1, path.c_str()) == WF_OK);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "digraph\n1 2 1\n2 1 2\n");
    std::remove(path.c_str());

    const int two[] = {2, 2};
    const std::string gpath = "capi_gamma_graphs.txt";
    REQUIRE(wf_dump_gamma_graphs(two, 2, gpath.c_str()) == WF_OK);
    std::ifstream gin(gpath);
    int headers = 0;
    for (std::string line; std::getline(gin, line);) headers += (line == "digraph");
    CHECK(headers == 3);
    std::remove(gpath.c_str());

    CHECK(wf_dump_t_graph(shape, 1, "/nonexistent-dir/x.txt") == WF_ERR_IO);
}

TEST_CASE("laws and Monte Carlo") {
    wf_law* law = nullptr;
    REQUIRE(wf_law_parse("fixed-modulus:1", &law) == WF_OK);
    double b = 0;
    REQUIRE(wf_law_beta(law, 2, &b) == WF_OK);
    CHECK(b == doctest::Approx(-1.0));

    wf_poly* p = nullptr;
    REQUIRE(wf_poly_parse("2*b4 + 2*b2^2", &p) == WF_OK);
    double v = 1;
    REQUIRE(wf_law_evaluate(law, p, &v) == WF_OK);
    CHECK(v == doctest::Approx(0.0));
    wf_poly_free(p);
    REQUIRE(wf_poly_parse("b10", &p) == WF_OK);
    CHECK(wf_law_evaluate(law, p, &v) == WF_ERR_CAPABILITY);
    wf_poly_free(p);

    const int idx[] = {2};
    wf_mc_result r1{}, r2{};
    REQUIRE(wf_mc(law, 8, idx, 1, 400, 5, 2, &r1) == WF_OK);
    REQUIRE(wf_mc(law, 8, idx, 1, 400, 5, 1, &r2) == WF_OK);
    CHECK(r1.estimate == r2.estimate);
    CHECK(r1.batches == 20);
    CHECK(wf_mc(law, 8, idx, 1, 50, 5, 1, &r1) == WF_ERR_INVALID_ARGUMENT);
    wf_law_free(law);

    CHECK(wf_law_parse("cauchy", &law) == WF_ERR_INVALID_ARGUMENT);
}
