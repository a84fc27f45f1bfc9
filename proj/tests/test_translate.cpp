#include <doctest.h>

#include <numeric>

#include "jetfront/classify.hpp"
#include "jetfront/translate.hpp"

using namespace jetfront;

TEST_CASE("cable type dictionary") {
  auto t = cable_type_to_s3(2, 3);
  CHECK(t.p_prime == -3);
  CHECK(t.q_prime == 1);
  auto helix = cable_type_to_s3(0, 1);
  CHECK(helix.p_prime == -1);
  CHECK(helix.q_prime == 1);
  for (int q = 2; q <= 6; ++q) {
    auto f = cable_type_to_s3(-1, q);
    CHECK(f.p_prime == -q);
    CHECK(f.q_prime == q + 1);
    CHECK(std::gcd(std::abs(f.p_prime), std::abs(f.q_prime)) == 1);
  }
  CHECK_THROWS(cable_type_to_s3(2, 4));
}

TEST_CASE("tb dictionary") {
  CHECK(tb_to_s3(4, 3) == -5);
  CHECK(tb_to_s3(7, 0) == 7);
  CHECK(tb_to_s3(0, 1) == -1);  // the core maps to a Hopf-link component
}

TEST_CASE("m dictionary and consistency") {
  CHECK(m_to_s3(0) == 1);
  CHECK(m_to_s3(2) == 3);
  CHECK_THROWS(m_to_s3(-1));
  for (int m = 0; m <= 6; ++m) CHECK(tb_to_s3(-m, 1) == -m_to_s3(m));
}

TEST_CASE("orientation reversal") {
  auto r = reverse_orientation({3, -2, 3, 1});
  CHECK(r.p == -3);
  CHECK(r.q == 2);
  CHECK(r.tb == 3);
  CHECK(r.rot == -1);
  auto rr = reverse_orientation(r);
  CHECK(rr.p == 3);
  CHECK(rr.q == -2);
  CHECK(rr.rot == 1);
  auto n = reverse_orientation({0, -1, 0, 0});
  CHECK(n.q == 1);
}

TEST_CASE("destabilization gap outside the image") {
  CHECK(cor_noimage_gap(2, 5) == 2);
  CHECK(cor_noimage_gap(1, 3) == 1);
  for (int q = 3; q <= 10; ++q)
    for (int p = 1; p < q - 1; ++p) CHECK(cor_noimage_gap(p, q) == p);
  CHECK_THROWS(cor_noimage_gap(3, 4));
  CHECK_THROWS(cor_noimage_gap(0, 5));
}

TEST_CASE("positive torus knot ceiling") {
  CHECK(s3_positive_torus_tb_max(-2, -1) == -1);
  CHECK(s3_positive_torus_tb_max(-1, 0) == -1);
  CHECK(s3_positive_torus_tb_max(-3, -2) == 1);
  CHECK_THROWS(s3_positive_torus_tb_max(1, -2));
  CHECK_THROWS(s3_positive_torus_tb_max(-2, 0));
}

TEST_CASE("round trip through the sphere reproduces the cable ceiling") {
  for (int p = 1; p <= 8; ++p)
    for (int q = 1; q <= p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto t = cable_type_to_s3(p, q);
      CHECK(tb_max(p, q, 0) == s3_positive_torus_tb_max(t.p_prime, t.q_prime) + q * q);
    }
}

TEST_CASE("linking consistency of the unwound two-copy") {
  // For the q-fold unwinding case the core has tb = -m = -q and the image
  // cable class has meridian coefficient p' = -q, so linking = tb.
  for (int q = 2; q <= 6; ++q) {
    auto t = cable_type_to_s3(-1, q);
    int m = q;
    CHECK(t.p_prime == -m);
    CHECK(tb_to_s3(0, 0) == 0);  // reversal bookkeeping leaves tb alone
  }
}
