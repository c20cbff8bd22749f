#include <doctest.h>

#include <atomic>
#include <stdexcept>

#include "egc/parallel.hpp"
#include "egc/verify.hpp"

using namespace egc;

TEST_SUITE("parallel") {

TEST_CASE("map_indices keeps index order") {
  for (auto policy : {Execution::kSerial, Execution::kParallel}) {
    const auto v = map_indices<long>(1000, policy, [](std::size_t i) {
      return static_cast<long>(i * i);
    });
    REQUIRE(v.size() == 1000);
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == static_cast<long>(i * i));
  }
  CHECK(map_indices<int>(0, Execution::kParallel, [](std::size_t) { return 1; }).empty());
}

TEST_CASE("for_each_index visits every index once") {
  std::vector<std::atomic<int>> hits(500);
  for_each_index(500, Execution::kParallel, [&](std::size_t i) { ++hits[i]; });
  for (auto& h : hits) CHECK(h.load() == 1);
}

TEST_CASE("the lowest failing index is reported") {
  auto body = [](std::size_t i) {
    if (i % 7 == 3) throw std::runtime_error("index " + std::to_string(i));
  };
  for (auto policy : {Execution::kSerial, Execution::kParallel}) {
    try {
      for_each_index(100, policy, body);
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "index 3");
    }
  }
}

TEST_CASE("numeric grid is bit-identical across thread counts") {
  const PrecisionContext ctx(25);
  const int before = max_threads();
  set_threads(1);
  const auto one = recurrence_grid(ctx, 1, Execution::kParallel);
  set_threads(std::max(4, before));
  const auto many = recurrence_grid(ctx, 1, Execution::kParallel);
  const auto serial = recurrence_grid(ctx, 1, Execution::kSerial);
  set_threads(before);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    const auto& a = std::get<BigFloat>(*one[i].residual);
    CHECK(a == std::get<BigFloat>(*many[i].residual));
    CHECK(a == std::get<BigFloat>(*serial[i].residual));
  }
}

}  // TEST_SUITE
