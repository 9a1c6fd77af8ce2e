#include <sstream>

#include "aperiodica/io.hpp"
#include "aperiodica/svg.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace aperiodica;
using testing::vec;

TEST_CASE("point files round trip") {
  auto fib = model_set_points(builtin_scheme("fibonacci"), 40.0);
  std::ostringstream os;
  write_points(os, fib);
  const std::string text = os.str();
  CHECK(text.find("dim 1; region ball 40\n") != std::string::npos);
  std::istringstream is(text);
  auto back = read_points(is);
  REQUIRE(back.size() == fib.size());
  CHECK(back.points() == fib.points());
  CHECK(back.labels() == fib.labels());
  CHECK(back.meta() == fib.meta());

  Mat pts(2, 2);
  pts << 0.1, -0.3, 1.0 / 3.0, 2.0;
  PointSet box(pts, Region::box(vec({1.0, 1.0}), vec({1.5, 2.5})));
  std::ostringstream o2;
  write_points(o2, box);
  std::istringstream i2(o2.str());
  auto b2 = read_points(i2);
  CHECK(b2.points() == box.points());
  CHECK(b2.region().shape == Region::Shape::Box);
  CHECK(b2.region().center == box.region().center);
  CHECK_FALSE(b2.has_labels());
}

TEST_CASE("point file errors") {
  auto parse = [](const std::string& s) {
    std::istringstream is(s);
    return read_points(is);
  };
  CHECK_THROWS_AS(parse("0.5\n"), Error);
  CHECK_THROWS_AS(parse("dim 1; region ball 2\n0.5 0.2\n"), Error);
  CHECK_THROWS_AS(parse("dim 1; region ball 2\nabc\n"), Error);
  CHECK_THROWS_AS(parse("dim 1; region ball 2\n0 | 1\n1\n"), Error);
  CHECK_THROWS_AS(parse("dim 1; region ball 2\n5\n"), Error);
  CHECK_THROWS_AS(parse("dim 1; region cone 2\n"), Error);
  CHECK(parse("# hi\ndim 1; region ball 2 center 1\n0.5\n2.5\n").size() == 2);
}

TEST_CASE("scheme JSON") {
  const std::string golden_window_json =
      R"({"phys_dim":1,"int_dim":1,"basis":[[1,1.6180339887],[1,-0.6180339887]],)"
      R"("window":{"type":"interval","a":-0.3819660113,"b":0.6180339887,"regular":true}})";
  auto s = scheme_from_json(golden_window_json);
  CHECK(s.covolume() == doctest::Approx(std::sqrt(5.0)).epsilon(1e-9));
  CHECK(s.window().volume() == doctest::Approx(1.0));

  for (const char* name : {"fibonacci", "octagonal"}) {
    auto b = builtin_scheme(name);
    auto back = scheme_from_json(scheme_to_json(b));
    CHECK(back.basis() == b.basis());
    CHECK(back.window().volume() == doctest::Approx(b.window().volume()));
    CHECK(back.window().kind() == b.window().kind());
  }
  CHECK_THROWS_AS(scheme_from_json("{"), Error);
  CHECK_THROWS_AS(scheme_from_json(R"({"phys_dim":1,"int_dim":1,"basis":[[1,0],[0,1]],"window":{"type":"star"}})"),
                  Error);
  auto box = scheme_from_json(
      R"({"phys_dim":1,"int_dim":2,"basis":[[1,1.4142135623730951,1.7320508075688772],[1,-1,0.5],[0,1,-2]],)"
      R"("window":{"type":"box","lo":[0,0],"hi":[1,1]}})");
  CHECK(box.window().kind() == Window::Kind::Box);
  auto ball = scheme_from_json(
      R"({"phys_dim":1,"int_dim":2,"basis":[[1,1.4142135623730951,1.7320508075688772],[1,-1,0.5],[0,1,-2]],)"
      R"("window":{"type":"ball","radius":0.5,"regular":false}})");
  CHECK_FALSE(ball.window().regular());
}

TEST_CASE("terms JSON") {
  auto f = terms_from_json(R"([{"q":[1,0],"re":1.0,"im":0.0},{"q":[0,-2],"re":0.5,"im":-0.25}])");
  REQUIRE(f.size() == 2);
  CHECK(f.terms[1].q[1] == -2);
  CHECK(f.terms[1].coeff == Complex(0.5, -0.25));
  CHECK_THROWS_AS(terms_from_json(R"([{"re":1}])"), Error);
}

TEST_CASE("csv writers") {
  std::ostringstream h;
  write_csv_header(h, {{"command", "gen"}}, true);
  CHECK(h.str() == "# aperiodica " + version() + "\n# command = gen\n");
  std::ostringstream ht;
  write_csv_header(ht, {}, false);
  CHECK(ht.str().find("# generated ") != std::string::npos);

  PeakList pl;
  pl.s_used = 10.0;
  Peak a;
  a.xi = vec({1.5});
  a.intensity_bt = 0.25;
  pl.entries.push_back(a);
  Peak b = a;
  b.intensity_closed = 0.125;
  b.q_label = (IVec(2) << 3, -1).finished();
  pl.entries.push_back(b);
  std::ostringstream os;
  write_peaks_csv(os, pl, 1);
  CHECK(os.str() == "xi_1,s,intensity_bt,intensity_closed,q_label\n1.5,10,0.25,,\n1.5,10,0.25,0.125,3 -1\n");

  std::ostringstream ew;
  write_entropy_csv(ew, {{5.0, 7, 0.25}});
  CHECK(ew.str() == "S,N,entropy_density\n5,7,0.25\n");
  std::ostringstream ww;
  write_ww_csv(ww, {{10.0, 0.5}});
  CHECK(ww.str() == "n,sup_dev\n10,0.5\n");
  CHECK(format_number(0.1) == "0.10000000000000001");
}

TEST_CASE("svg plots") {
  PeakList pl;
  for (int i = 0; i < 5; ++i) {
    Peak p;
    p.xi = vec({double(i), double(-i)});
    p.intensity_bt = 1.0 / (1 + i);
    pl.entries.push_back(p);
  }
  auto s2 = peaks_svg(pl, 2);
  CHECK(s2.rfind("<svg", 0) == 0);
  CHECK(s2.find("<circle") != std::string::npos);
  for (auto& p : pl.entries) p.xi = vec({p.xi[0]});
  auto s1 = peaks_svg(pl, 1);
  CHECK(s1.find("<line") != std::string::npos);
  CHECK(s1.find("ξ") != std::string::npos);
  CHECK_THROWS_AS(peaks_svg(pl, 3), Error);
}
