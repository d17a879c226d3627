#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qdist/distances.hpp"

using namespace qdist;

namespace {

const QubitState kUp = from_bloch({0, 0, 1});
const QubitState kDown = from_bloch({0, 0, -1});
const QubitState kMixed = from_bloch({0, 0, 0});

BlochVector rotate(const BlochVector& r, double angle, int axis) {
  const double c = std::cos(angle), s = std::sin(angle);
  switch (axis) {
    case 0: return {r.x, c * r.y - s * r.z, s * r.y + c * r.z};
    case 1: return {c * r.x + s * r.z, r.y, -s * r.x + c * r.z};
    default: return {c * r.x - s * r.y, s * r.x + c * r.y, r.z};
  }
}

}  // namespace

TEST_SUITE("distances") {
  TEST_CASE("identical states") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
      const QubitState s = oracle::random_state(rng);
      const auto rec = all_distances(s, s);
      for (double v : rec.values()) CHECK(v == 0.0);
      CHECK(fidelity(s, s) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(affinity(s, s) == doctest::Approx(1.0).epsilon(1e-14));
    }
  }

  TEST_CASE("orthogonal pure states") {
    CHECK(trace_distance(kUp, kDown) == doctest::Approx(1.0));
    CHECK(hs_distance(kUp, kDown) == doctest::Approx(std::numbers::sqrt2));
    CHECK(fidelity(kUp, kDown) == doctest::Approx(0.0));
    CHECK(bures_distance(kUp, kDown) == doctest::Approx(std::numbers::sqrt2));
    CHECK(affinity(kUp, kDown) == doctest::Approx(0.0));
    CHECK(hellinger_distance(kUp, kDown) == doctest::Approx(std::numbers::sqrt2));
    CHECK(js_distance(kUp, kDown) == doctest::Approx(0.832555).epsilon(1e-6));
    CHECK(js_distance(kUp, kDown) == doctest::Approx(std::sqrt(std::numbers::ln2)));
    const auto rec = all_distances(kUp, kDown);
    CHECK(rec.d_t == doctest::Approx(1.0));
    CHECK(rec.d_hs == doctest::Approx(std::numbers::sqrt2));
    CHECK(rec.d_b == doctest::Approx(std::numbers::sqrt2));
    CHECK(rec.d_h == doctest::Approx(std::numbers::sqrt2));
    CHECK(rec.d_js == doctest::Approx(std::sqrt(std::numbers::ln2)));
  }

  TEST_CASE("two maximally mixed states") {
    CHECK(fidelity(kMixed, kMixed) == 1.0);
    CHECK(affinity(kMixed, kMixed) == 1.0);
    for (double v : all_distances(kMixed, kMixed).values()) CHECK(v == 0.0);
  }

  TEST_CASE("closed forms agree with spectral oracles") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 1000; ++i) {
      const QubitState a = oracle::random_state(rng);
      const QubitState b = oracle::random_state(rng);
      CHECK(std::abs(trace_distance(a, b) - oracle::trace_distance(a, b)) <= 1e-12);
      CHECK(std::abs(hs_distance(a, b) - oracle::hs_distance(a, b)) <= 1e-12);
      CHECK(std::abs(hs_distance(a, b) - std::numbers::sqrt2 * trace_distance(a, b)) <= 1e-12);
      CHECK(std::abs(fidelity(a, b) - oracle::fidelity(a, b)) <= 1e-10);
      CHECK(std::abs(bures_distance(a, b) - oracle::bures_distance(a, b)) <= 1e-10);
      CHECK(std::abs(affinity(a, b) - oracle::affinity(a, b)) <= 1e-10);
      CHECK(std::abs(hellinger_distance(a, b) - oracle::hellinger_distance(a, b)) <= 1e-10);
      CHECK(std::abs(js_distance(a, b) - oracle::js_distance(a, b)) <= 1e-10);
    }
  }

  TEST_CASE("Hellinger and Bures are consistent with their defining relations") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 1000; ++i) {
      const QubitState a = oracle::random_state(rng);
      const QubitState b = oracle::random_state(rng);
      const double dh = hellinger_distance(a, b);
      CHECK(std::abs(dh * dh - 2.0 * (1.0 - affinity(a, b))) <= 1e-12);
      const double db = bures_distance(a, b);
      CHECK(std::abs(db * db - 2.0 * (1.0 - std::sqrt(fidelity(a, b)))) <= 1e-12);
    }
  }

  TEST_CASE("unitary invariance") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < 1000; ++i) {
      BlochVector r1 = oracle::random_bloch(rng), r2 = oracle::random_bloch(rng);
      const auto before = bloch::all_distances(r1, r2).values();
      for (int axis = 0; axis < 3; ++axis) {
        const double th = angle(rng);
        r1 = rotate(r1, th, axis);
        r2 = rotate(r2, th, axis);
      }
      const auto after = bloch::all_distances(r1, r2).values();
      for (std::size_t k = 0; k < 5; ++k) CHECK(std::abs(after[k] - before[k]) <= 1e-10);
    }
  }
}
