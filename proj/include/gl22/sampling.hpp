#pragma once

// Deterministic sampling of admissible kinematic points: an annulus in |x|
// with a safety margin around the branch points and the representation poles.

#include "gl22/params.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace gl22 {

class Sampler {
 public:
  explicit Sampler(unsigned long long seed) : rng_(seed) {}

  cplx x(const GlobalParams& gp) {
    std::uniform_real_distribution<double> radius(1.2, 5.0);
    std::uniform_real_distribution<double> angle(0.0, 1.0);
    const cplx bad[] = {cplx(1.0), cplx(-1.0), cplx(0, 1) * gp.h / gp.hp,
                        -cplx(0, 1) * gp.hp / gp.h};
    for (;;) {
      const double r = radius(rng_);
      const double th = 2.0 * std::numbers::pi * angle(rng_);
      const cplx cand = r * std::exp(cplx(0.0, th));
      bool ok = true;
      for (const cplx& b : bad)
        if (std::abs(cand - b) <= 0.1) ok = false;
      if (ok) return cand;
    }
  }

  cplx gamma() {
    std::uniform_real_distribution<double> radius(0.5, 2.0);
    std::uniform_real_distribution<double> angle(0.0, 1.0);
    const double r = radius(rng_);
    const double th = 2.0 * std::numbers::pi * angle(rng_);
    return r * std::exp(cplx(0.0, th));
  }

  Kinematics kin(const GlobalParams& gp) { return derive_kinematics(gp, x(gp), gamma()); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gl22
