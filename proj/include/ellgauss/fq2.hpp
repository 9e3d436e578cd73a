#pragma once

// F_{q^2} realised as F_q[x]/(x^2 + x + 1) for q = 2 mod 3, x playing rho.

#include <cstdint>

#include "ellgauss/modarith.hpp"

namespace ellgauss {

struct Fq2 {
  std::uint64_t c0 = 0;  // c0 + c1 x
  std::uint64_t c1 = 0;
};

class Fq2Field {
 public:
  explicit Fq2Field(std::uint64_t q) : q_(q) {}

  std::uint64_t q() const { return q_; }
  std::uint64_t size() const { return q_ * q_; }

  Fq2 make(long long a, long long b) const {
    return {modp::reduce(a, q_), modp::reduce(b, q_)};
  }
  Fq2 from_index(std::uint64_t i) const { return {i % q_, i / q_}; }
  std::uint64_t index(Fq2 z) const { return z.c0 + q_ * z.c1; }

  Fq2 add(Fq2 x, Fq2 y) const {
    return {modp::add(x.c0, y.c0, q_), modp::add(x.c1, y.c1, q_)};
  }
  Fq2 sub(Fq2 x, Fq2 y) const {
    return {modp::sub(x.c0, y.c0, q_), modp::sub(x.c1, y.c1, q_)};
  }
  // x^2 = -1 - x
  Fq2 mul(Fq2 x, Fq2 y) const {
    std::uint64_t ac = modp::mul(x.c0, y.c0, q_);
    std::uint64_t bd = modp::mul(x.c1, y.c1, q_);
    std::uint64_t cross = modp::add(modp::mul(x.c0, y.c1, q_), modp::mul(x.c1, y.c0, q_), q_);
    return {modp::sub(ac, bd, q_), modp::sub(cross, bd, q_)};
  }
  Fq2 pow(Fq2 x, std::uint64_t e) const {
    Fq2 r{1 % q_, 0};
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }
  bool is_zero(Fq2 x) const { return x.c0 == 0 && x.c1 == 0; }
  bool equal(Fq2 x, Fq2 y) const { return x.c0 == y.c0 && x.c1 == y.c1; }

 private:
  std::uint64_t q_;
};

}  // namespace ellgauss
