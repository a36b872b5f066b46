#include <cmath>

#include "doctest.h"
#include "qcones/report.hpp"

using namespace qcones;

TEST_CASE("bound checks") {
  CHECK(make_check("CP_2^base", "vrad", 0.85, 0.01, "cp base vrad bound", 0.5, 1.0).pass);
  CHECK_FALSE(make_check("x", "vrad", 1.2, 0.01, "r", 0.5, 1.0).pass);
  CHECK(make_check("x", "vrad", 1.02, 0.01, "r", 0.5, 1.0).pass);
  CHECK_FALSE(make_check("x", "vrad", NAN, 0.01, "r", 0.5, 1.0).pass);
}

TEST_CASE("empty report is header only") {
  GeometryReport r;
  CHECK(r.to_csv() == "body,quantity,value,stderr,bound,lower,upper,pass\r\n");
  CHECK(r.all_pass());
}

TEST_CASE("csv quoting and pending rows") {
  GeometryReport r;
  r.rows.push_back(make_check("a,b", "say \"hi\"", 1.0, 0.0, "ref", -INFINITY, 2.0));
  r.rows.push_back(pending_check("SP_2^base", "vrad", "superpositive base vrad bound", 0.1, 2.8));
  const std::string csv = r.to_csv();
  CHECK(csv.find("\"a,b\",\"say \"\"hi\"\"\",1,0,ref,,2,true\r\n") != std::string::npos);
  CHECK(csv.find("SP_2^base,vrad,,,superpositive base vrad bound,0.10000000000000001,2.7999999999999998,pending\r\n") !=
        std::string::npos);
  CHECK(r.all_pass());
  const std::string json = r.to_json();
  CHECK(json.find("\"pending\"") != std::string::npos);
  CHECK(json.find("\"version\"") != std::string::npos);
}

TEST_CASE("base bounds") {
  const Interval cp = base_vrad_bounds(ConeId::CP, 2, 0.856);
  CHECK(cp.lo == 0.5);
  CHECK(cp.hi == 1.0);
  const Interval sp = base_vrad_bounds(ConeId::SP, 2, 0.856);
  CHECK(sp.lo == doctest::Approx(1.0 / (6.0 * std::sqrt(2.0))));
  CHECK(sp.hi == doctest::Approx(4.0 / std::sqrt(2.0)));
  CHECK(base_vrad_bounds(ConeId::T, 2, 0.8).hi == 0.8);
  CHECK(base_width_bounds(ConeId::SP, 2)->hi == doctest::Approx(2.0 * std::sqrt(2.0)));
  CHECK_FALSE(base_width_bounds(ConeId::P, 2).has_value());
  CHECK(vrad_cp_base_exact(2) == doctest::Approx(0.85596115043130808).epsilon(1e-13));
  for (ConeId c : kAllCones) CHECK(base_vrad_bound_ref(c).find("bound") != std::string::npos);
}
