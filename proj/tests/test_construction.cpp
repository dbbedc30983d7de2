#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>

#include "polar/construction.hpp"
#include "test_support.hpp"

using namespace polar;

TEST_CASE("reliability profile shape and polarization sanity") {
  for (int n : {1, 3, 6, 10}) {
    for (double snr : {0.0, 2.0, 5.0}) {
      const auto profile = gaussian_approx_reliabilities(n, snr);
      REQUIRE(profile.pe.size() == std::size_t(1) << n);
      for (double p : profile.pe) {
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
      }
      CHECK(profile.pe.back() <= profile.pe.front());
    }
  }
}

TEST_CASE("n=1: the second bit is the better one") {
  for (double snr : {-2.0, 0.0, 2.0, 6.0}) {
    const auto profile = gaussian_approx_reliabilities(1, snr);
    CHECK(profile.pe[1] <= profile.pe[0]);
  }
}

TEST_CASE("n=2 at 2dB follows the universal partial order") {
  const auto profile = gaussian_approx_reliabilities(2, 2.0);
  CHECK(profile.pe[0] >= profile.pe[1]);
  CHECK(profile.pe[1] >= profile.pe[3]);
  CHECK(profile.pe[0] >= profile.pe[2]);
  CHECK(profile.pe[2] >= profile.pe[3]);
}

TEST_CASE("n=3 at 0dB matches the genie-aided Monte-Carlo estimate within 3x") {
  const auto profile = gaussian_approx_reliabilities(3, 0.0);
  const auto mc = testsup::mc_genie_pe(3, 0.0, 1000000, 20240811);
  for (int i = 0; i < 8; ++i) {
    INFO("bit ", i, ": ga=", profile.pe[i], " mc=", mc[i]);
    REQUIRE(mc[i] > 0.0);
    const double ratio = profile.pe[i] / mc[i];
    CHECK(ratio <= 3.0);
    CHECK(ratio >= 1.0 / 3.0);
  }
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(gaussian_approx_reliabilities(0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_approx_reliabilities(21, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_approx_reliabilities(4, std::nan("")), std::invalid_argument);
  const auto profile = gaussian_approx_reliabilities(3, 2.0);
  CHECK_THROWS_AS(build_code_spec(profile, 9, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_code_spec(profile, 4, 4), std::invalid_argument);
}

TEST_CASE("rate-1 code keeps every position") {
  const auto profile = gaussian_approx_reliabilities(4, 2.0);
  const auto spec = build_code_spec(profile, 16, 0);
  REQUIRE(spec.info_set.size() == 16);
  for (int i = 0; i < 16; ++i) {
    CHECK(spec.info_set[i] == i);
    CHECK(spec.frozen[i] == 0);
  }
}

TEST_CASE("Table II dimensions give effective rate 0.494") {
  const auto profile = gaussian_approx_reliabilities(12, 2.0);
  const auto spec = build_code_spec(profile, 2048, 24);
  CHECK(spec.rate() == doctest::Approx(0.494).epsilon(1e-3));
  CHECK(spec.rate() == (2048.0 - 24.0) / 4096.0);
}

TEST_CASE("N=8 K=4 at 2dB selects {3,5,6,7}, agreeing with the MC oracle") {
  const auto profile = gaussian_approx_reliabilities(3, 2.0);
  const auto spec = build_code_spec(profile, 4, 0);
  CHECK(spec.info_set == std::vector<int>{3, 5, 6, 7});

  const auto mc = testsup::mc_genie_pe(3, 2.0, 1000000, 99);
  std::vector<int> order{0, 1, 2, 3, 4, 5, 6, 7};
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return mc[a] < mc[b]; });
  std::set<int> mc_best(order.begin(), order.begin() + 4);
  CHECK(mc_best == std::set<int>{3, 5, 6, 7});
}

TEST_CASE("info sets are nested as K grows") {
  for (double snr : {0.0, 2.0}) {
    const auto profile = gaussian_approx_reliabilities(5, snr);
    std::set<int> previous;
    for (int K = 1; K <= 32; ++K) {
      const auto spec = build_code_spec(profile, K, 0);
      std::set<int> current(spec.info_set.begin(), spec.info_set.end());
      CHECK(std::includes(current.begin(), current.end(), previous.begin(), previous.end()));
      previous = std::move(current);
    }
  }
}

TEST_CASE("selective-expansion partition") {
  const auto profile = gaussian_approx_reliabilities(5, 2.0);
  const auto spec = build_code_spec(profile, 16, 0);

  SUBCASE("eta=0 expands everything") {
    const auto part = partition_selective_expansion(spec, profile, 0.0);
    CHECK(part.unreliable_set == spec.info_set);
    CHECK(part.reliable_set.empty());
  }
  SUBCASE("eta=1 keeps only the argmax-pe bits") {
    const auto part = partition_selective_expansion(spec, profile, 1.0);
    double max_pe = 0.0;
    for (int i : spec.info_set) max_pe = std::max(max_pe, profile.pe[i]);
    REQUIRE(!part.unreliable_set.empty());
    for (int i : part.unreliable_set) CHECK(profile.pe[i] == max_pe);
    for (int i : part.reliable_set) CHECK(profile.pe[i] < max_pe);
  }
  SUBCASE("eta=0.3 equals the brute-force threshold cut") {
    const auto part = partition_selective_expansion(spec, profile, 0.3);
    double max_pe = 0.0;
    for (int i : spec.info_set) max_pe = std::max(max_pe, profile.pe[i]);
    for (int i : spec.info_set) {
      const bool expect_u = profile.pe[i] >= 0.3 * max_pe;
      CHECK(part.is_unreliable[i] == (expect_u ? 1 : 0));
    }
    CHECK(part.unreliable_set.size() + part.reliable_set.size() == spec.info_set.size());
  }
  SUBCASE("partition is a reliability cut and brackets monotonically") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> pick(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
      double e1 = pick(gen), e2 = pick(gen);
      if (e1 > e2) std::swap(e1, e2);
      const auto loose = partition_selective_expansion(spec, profile, e1);
      const auto tight = partition_selective_expansion(spec, profile, e2);
      for (int i : tight.unreliable_set) CHECK(loose.is_unreliable[i] == 1);
      double min_u = 1.0, max_r = 0.0;
      for (int i : tight.unreliable_set) min_u = std::min(min_u, profile.pe[i]);
      for (int i : tight.reliable_set) max_r = std::max(max_r, profile.pe[i]);
      if (!tight.unreliable_set.empty() && !tight.reliable_set.empty()) {
        CHECK(min_u >= max_r);
      }
    }
  }
}

TEST_CASE("subtree profiles") {
  const auto profile = gaussian_approx_reliabilities(3, 2.0);
  const auto spec = build_code_spec(profile, 4, 0);
  REQUIRE(spec.info_set == std::vector<int>{3, 5, 6, 7});
  SePartition part;
  part.eta = 0.5;
  part.unreliable_set = {3, 5};
  part.reliable_set = {6, 7};
  part.is_unreliable.assign(8, 0);
  part.is_unreliable[3] = part.is_unreliable[5] = 1;

  SUBCASE("worked N=8 m=2 example") {
    const auto blocks = subtree_profile(spec, part, 2);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].size == 4);
    CHECK(blocks[0].unreliable == 1);
    CHECK(blocks[0].reliable == 0);
    CHECK(blocks[0].frozen == 3);
    CHECK(blocks[1].size == 4);
    CHECK(blocks[1].unreliable == 1);
    CHECK(blocks[1].reliable == 2);
    CHECK(blocks[1].frozen == 1);
  }
  SUBCASE("m=0 blocks are single leaves") {
    const auto blocks = subtree_profile(spec, part, 0);
    REQUIRE(blocks.size() == 8);
    for (const auto& b : blocks) {
      CHECK(b.size == 1);
      CHECK(b.unreliable + b.reliable + b.frozen == 1);
    }
  }
  SUBCASE("counts always sum to M and M_u totals |A_u|") {
    for (int m = 0; m <= 3; ++m) {
      const auto blocks = subtree_profile(spec, part, m);
      int total_u = 0;
      for (const auto& b : blocks) {
        CHECK(b.unreliable + b.reliable + b.frozen == b.size);
        total_u += b.unreliable;
      }
      CHECK(total_u == 2);
    }
  }
  SUBCASE("an all-frozen block is (M, 0, 0, M)") {
    const auto all_frozen = build_code_spec(profile, 1, 0);  // only bit 7 carries info
    SePartition p2;
    p2.is_unreliable.assign(8, 0);
    const auto blocks = subtree_profile(all_frozen, p2, 2);
    CHECK(blocks[0].frozen == 4);
    CHECK(blocks[0].unreliable == 0);
    CHECK(blocks[0].reliable == 0);
  }
}

TEST_CASE("code spec file round-trips") {
  const auto profile = gaussian_approx_reliabilities(6, 1.5);
  const auto spec = build_code_spec(profile, 40, 24);
  const std::string path = "spec_roundtrip.tmp";
  write_code_spec_file(spec, 0.3, path);
  double eta = 0.0;
  const auto loaded = read_code_spec_file(path, &eta);
  CHECK(loaded.n == spec.n);
  CHECK(loaded.info_count == spec.info_count);
  CHECK(loaded.crc_bits == spec.crc_bits);
  CHECK(loaded.design_snr_db == doctest::Approx(spec.design_snr_db));
  CHECK(loaded.info_set == spec.info_set);
  CHECK(loaded.frozen == spec.frozen);
  CHECK(eta == doctest::Approx(0.3));
  std::remove(path.c_str());
}
