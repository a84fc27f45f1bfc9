#include "jetfront/translate.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace jetfront {

S3CableType cable_type_to_s3(int p, int q) {
  if (q < 0) throw std::invalid_argument("expects a normalized class (q >= 0)");
  if (std::gcd(std::abs(p), std::abs(q)) != 1)
    throw std::invalid_argument("cable class must be coprime");
  return {-q, q - p};
}

int tb_to_s3(int tb_jet, int q) { return tb_jet - q * q; }

int m_to_s3(int m) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  return m + 1;
}

OrientedClassInvariants reverse_orientation(OrientedClassInvariants v) {
  return {-v.p, -v.q, v.tb, -v.rot};
}

int cor_noimage_gap(int p, int q) {
  if (p <= 0) throw std::invalid_argument("requires 0 < p");
  if (p >= q - 1) throw std::invalid_argument("requires p < q - 1");
  int free_max = p * q - q * q;               // p'q' for (p',q') = (-q, q-p)
  int image_max = p * (q - 1) - q * q;        // tb_max in the jet space, shifted
  return free_max - image_max;
}

int s3_positive_torus_tb_max(int p_prime, int q_prime) {
  if (q_prime == 0) {
    if (p_prime != -1) throw std::invalid_argument("q' = 0 requires p' = -1");
  } else if (p_prime > -1 || q_prime > -1) {
    throw std::invalid_argument("(-p', -q') must be a positive torus knot type");
  }
  return p_prime * q_prime + p_prime + q_prime;
}

}  // namespace jetfront
