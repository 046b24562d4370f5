#include <doctest.h>

#include "ptb/report.hpp"

using namespace ptb;

TEST_SUITE("report") {

TEST_CASE("bundle report for a hyperbolic n") {
    ordered_json r = bundle_report(7);
    CHECK(r["n"] == 7);
    CHECK(r["hyperbolic"] == true);
    CHECK(r["genus"] == 2);
    CHECK(r["trace_field"]["degree"] == 6);
    CHECK(r["trace_field"]["certified"] == true);
    CHECK(r["dilatation"]["d"] == 6);
    CHECK(r["dilatation"]["d_equals_2g_plus_alpha"] == true);
    CHECK(r["reducible_components"].size() == 5);
    CHECK(!r["discrete_faithful"].empty());
    CHECK(r["extra_line"]["present"] == false);
}

TEST_CASE("bundle report for non-hyperbolic n") {
    ordered_json r = bundle_report(0);
    CHECK(r["hyperbolic"] == false);
    CHECK(!r.contains("genus"));
    CHECK(!r.contains("dilatation"));
    CHECK(r.contains("nonhyperbolic_components"));
    CHECK(r["nonhyperbolic_components"].size() == 4);
}

TEST_CASE("reduced report for n = -2") {
    ordered_json r = bundle_report(-2);
    CHECK(r["hyperbolic"] == false);
    CHECK(r["reducible_components"].size() == 1);
    CHECK(r["reducible_components"][0]["kind"] == "reducible-surface");
    // unsupported sections report the reason instead of aborting
    CHECK(r["intersection_lattice"].contains("skipped"));
}

TEST_CASE("extra line section for n = 6") {
    ordered_json r = bundle_report(6);
    CHECK(r["extra_line"]["present"] == true);
    double z0 = r["extra_line"]["z0"]["re"].get<double>();
    CHECK(std::abs(z0 - 1.1547005383792515) < 1e-10);
}

TEST_CASE("reports are deterministic") {
    std::string a = bundle_report(6).dump();
    std::string b = bundle_report(6).dump();
    CHECK(a == b);
    std::string c = bundle_report(-5).dump(2);
    std::string d = bundle_report(-5).dump(2);
    CHECK(c == d);
}

TEST_CASE("exact polynomials round trip through the report") {
    ordered_json r = bundle_report(9);
    IntPoly model = hyperelliptic_model(9);
    ordered_json arr = r["hyperelliptic_model"]["rhs"];
    REQUIRE(arr.size() == static_cast<size_t>(model.degree()) + 1);
    for (int k = 0; k <= model.degree(); ++k)
        CHECK(arr[static_cast<size_t>(k)].get<std::string>() == model.coeff(k).get_str());
}

TEST_CASE("point cloud csv") {
    std::string csv = point_cloud_csv(7);
    CHECK(csv.substr(0, 34) == "tag,x_re,x_im,y_re,y_im,z_re,z_im\n");
    CHECK(csv.find("multiplicity") != std::string::npos);
    CHECK(csv.find("discrete-faithful") != std::string::npos);
    CHECK(csv.find("filling") != std::string::npos);
}

TEST_CASE("verify runner") {
    auto res = run_verify(-6, 6, {"identities", "no-such-suite"});
    REQUIRE(res.size() == 2);
    CHECK(res[0].failures == 0);
    CHECK(res[0].checks == 13);
    CHECK(res[1].failures == 1);

    ordered_json j = verify_results_json(res);
    CHECK(j[0]["suite"] == "identities");
    CHECK(j[0]["failures"] == 0);
}

}  // TEST_SUITE
