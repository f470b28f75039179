#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "graphfp/cumulant.hpp"
#include "graphfp/error.hpp"
#include "graphfp/nc_partition.hpp"

using namespace graphfp;

namespace {

using Blocks = std::vector<std::vector<int>>;

// All set partitions of {0..n-1} via restricted growth strings.
std::vector<Blocks> all_set_partitions(int n) {
  std::vector<Blocks> out;
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int i, int max_label) {
    if (i == n) {
      Blocks b(max_label + 1);
      for (int k = 0; k < n; ++k) b[rgs[k]].push_back(k);
      out.push_back(b);
      return;
    }
    for (int label = 0; label <= max_label + 1; ++label) {
      rgs[i] = label;
      rec(i + 1, std::max(max_label, label));
    }
  };
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

bool crosses(const Blocks& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (x == y) continue;
      for (int a : p[x])
        for (int c : p[x])
          for (int b : p[y])
            for (int d : p[y])
              if (a < b && b < c && c < d) return true;
    }
  return false;
}

std::int64_t catalan_by_recursion(int n) {
  std::vector<std::int64_t> c(n + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
  return c[n];
}

}  // namespace

TEST_CASE("NC(n) matches the crossing filter over all set partitions") {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> expected;
    for (const auto& p : all_set_partitions(n))
      if (!crosses(p)) expected.insert(NoncrossingPartition(n, p).to_string());
    std::set<std::string> listed;
    for (const auto& p : enumerate_nc(n)) listed.insert(p.to_string());
    CHECK(listed == expected);
    CHECK(enumerate_nc(n).size() == expected.size());
  }
  CHECK(enumerate_nc(1).size() == 1);
  CHECK(enumerate_nc(3).size() == 5);
  CHECK(enumerate_nc(4).size() == 14);
}

TEST_CASE("|NC(n)| is Catalan") {
  for (int n = 1; n <= 9; ++n) {
    CHECK(static_cast<std::int64_t>(enumerate_nc(n).size()) == catalan_by_recursion(n));
    CHECK(catalan(n) == catalan_by_recursion(n));
  }
  CHECK_THROWS_AS(enumerate_nc(0), Error);
  CHECK_THROWS_AS(enumerate_nc(kMaxNcSize + 1), Error);
}

TEST_CASE("crossing partitions are rejected") {
  CHECK_THROWS_AS(NoncrossingPartition(4, {{0, 2}, {1, 3}}), Error);
  CHECK_THROWS_AS(NoncrossingPartition(3, {{0, 1}}), Error);
  CHECK_THROWS_AS(NoncrossingPartition(2, {{0, 1}, {1}}), Error);
}

TEST_CASE("Moebius function matches the defining recursion") {
  for (int n = 1; n <= 8; ++n) {
    auto parts = enumerate_nc(n);
    // mu(1_n, 1_n) = 1; mu(pi, 1_n) = -sum_{pi < sigma <= 1_n} mu(sigma, 1_n),
    // processed from coarse to fine.
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.block_count() < b.block_count(); });
    std::map<std::string, std::int64_t> mu;
    for (const auto& pi : parts) {
      std::int64_t sum = 0;
      bool top = pi.block_count() == 1;
      for (const auto& sigma : parts)
        if (sigma.block_count() < pi.block_count() && refines(pi, sigma))
          sum += mu.at(sigma.to_string());
      mu[pi.to_string()] = top ? 1 : -sum;
    }
    std::int64_t total = 0;
    for (const auto& pi : parts) {
      CHECK(moebius_to_top(pi) == mu.at(pi.to_string()));
      total += moebius_to_top(pi);
    }
    if (n >= 2) CHECK(total == 0);
    std::int64_t sign = (n - 1) % 2 == 0 ? 1 : -1;
    CHECK(moebius_to_top(NoncrossingPartition::zero(n)) == sign * catalan(n - 1));
  }
  CHECK(moebius_to_top(NoncrossingPartition::one(5)) == 1);
  CHECK(moebius_to_top(NoncrossingPartition::zero(2)) == -1);
  CHECK(moebius_to_top(NoncrossingPartition::zero(4)) == -5);
}

TEST_CASE("cached table agrees with enumeration") {
  for (int n = 1; n <= 6; ++n) {
    const auto& t = nc_table(n);
    REQUIRE(t.partitions.size() == t.moebius.size());
    for (std::size_t i = 0; i < t.partitions.size(); ++i)
      CHECK(t.moebius[i] == moebius_to_top(t.partitions[i]));
  }
}

TEST_CASE("interval blocks") {
  auto pi = NoncrossingPartition(3, {{0, 2}, {1}});
  CHECK(pi.blocks()[interval_block(pi)] == std::vector<int>{1});
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : enumerate_nc(n)) {
      const auto& b = p.blocks()[interval_block(p)];
      CHECK(b.back() - b.front() + 1 == static_cast<int>(b.size()));
    }
}

TEST_CASE("Kreweras complement") {
  CHECK(kreweras_complement(NoncrossingPartition::one(4)).to_string() ==
        NoncrossingPartition::zero(4).to_string());
  CHECK(kreweras_complement(NoncrossingPartition(3, {{0, 1}, {2}})).to_string() == "{1}{2,3}");
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : enumerate_nc(n))
      CHECK(kreweras_complement(p).block_count() == n + 1 - p.block_count());
}
