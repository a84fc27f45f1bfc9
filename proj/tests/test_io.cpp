#include <doctest.h>

#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "jetfront/front.hpp"
#include "jetfront/front_io.hpp"
#include "jetfront/moves.hpp"
#include "jetfront/render.hpp"

using namespace jetfront;

TEST_CASE("parsing the trivial front") {
  FrontDiagram d = parse_front("front v1\nstrands 1\nevents\n");
  CHECK(d == lambda_front(1));
}

TEST_CASE("parsing the meridian eye") {
  const char* text =
      "front v1\n"
      "strands 1\n"
      "events\n"
      "L 2\n"
      "X 1\n"
      "X 1\n"
      "R 2\n";
  CHECK(parse_front(text) == meridian_eye_front());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_front("front v1\nstrands -1\nevents\n"), ParseError);
  try {
    parse_front("front v1\nstrands -1\nevents\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_front(""), ParseError);
  CHECK_THROWS_AS(parse_front("front v2\nstrands 1\nevents\n"), ParseError);
  CHECK_THROWS_AS(parse_front("front v1\nstrands 1\nevents\nQ 1\n"), ParseError);
  CHECK_THROWS_AS(parse_front("front v1\nstrands 1\nevents\nX x\n"), ParseError);
}

TEST_CASE("orientation and order lines") {
  const char* text =
      "front v1\n"
      "strands 2\n"
      "events\n"
      "orient 1 -\n"
      "order 1 0\n";
  FrontDiagram d = parse_front(text);
  REQUIRE(validate(d).ok);
  CHECK(d.orientations == std::vector<std::int8_t>{1, -1});
  CHECK(d.order == std::vector<int>{1, 0});
  CHECK(parse_front(serialize_front(d)) == d);
}

TEST_CASE("serialization round trips on the generators") {
  for (FrontDiagram d : {lambda_front(1), lambda_front(3), meridian_eye_front(),
                          torus_braid_front(2, 3), cable_link_front(2, 3)}) {
    CHECK(parse_front(serialize_front(d)) == d);
  }
  FrontDiagram s = stabilize(meridian_eye_front(), 1, -1);
  CHECK(parse_front(serialize_front(s)) == s);
}

TEST_CASE("svg rendering is deterministic and structured") {
  FrontDiagram d = torus_braid_front(2, 3);
  std::string a = render_svg(d);
  std::string b = render_svg(d);
  CHECK(a == b);
  // one path per component
  size_t paths = 0;
  for (size_t at = a.find("<path"); at != std::string::npos; at = a.find("<path", at + 1))
    ++paths;
  CHECK(paths == 1);

  std::string eye = render_svg(meridian_eye_front());
  paths = 0;
  for (size_t at = eye.find("<path"); at != std::string::npos; at = eye.find("<path", at + 1))
    ++paths;
  CHECK(paths == 2);
  CHECK(eye.find("Q") != std::string::npos);  // cusp arcs present

  std::string zig = render_svg(stabilize(lambda_front(1), 0, 1));
  CHECK(zig.find("Q") != std::string::npos);
}

TEST_CASE("svg coordinates stay inside the view box") {
  for (FrontDiagram d : {meridian_eye_front(), torus_braid_front(3, 4),
                          cable_link_front(2, 3), stabilize(meridian_eye_front(), 1, 1)}) {
    std::string svg = render_svg(d);
    double width = 0, height = 0;
    std::sscanf(svg.c_str(), "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%lf\" height=\"%lf\"",
                &width, &height);
    REQUIRE(width > 0);
    REQUIRE(height > 0);
    // scan every number in path data
    for (size_t at = svg.find("d=\""); at != std::string::npos; at = svg.find("d=\"", at + 1)) {
      size_t end = svg.find('"', at + 3);
      std::string body = svg.substr(at + 3, end - at - 3);
      const char* p = body.c_str();
      char* stop = nullptr;
      bool x_coord = true;
      for (; *p; ++p) {
        if (!isdigit(*p) && *p != '-' && *p != '.') { continue; }
        double v = std::strtod(p, &stop);
        CHECK(v >= 0.0);
        CHECK(v <= (x_coord ? width : height) + 0.5);
        x_coord = !x_coord;
        p = stop - 1;
      }
    }
  }
}
