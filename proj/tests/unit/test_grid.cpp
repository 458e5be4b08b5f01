#include <doctest.h>

#include "legknot/error.hpp"
#include "legknot/grid.hpp"

using namespace legknot;

TEST_CASE("grid: validation") {
  CHECK(make_grid({2, 1}, {1, 2}).components() == 1);
  auto code = [](std::vector<int> x, std::vector<int> o) {
    try {
      make_grid(x, o);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::UsageError;
  };
  CHECK(code({1, 2}, {1, 2}) == Errc::MarkerCollision);
  CHECK(code({1}, {1}) == Errc::TooSmall);
  CHECK(code({1, 1}, {2, 2}) == Errc::NotAPermutation);
  CHECK(code({2, 3}, {1, 2}) == Errc::NotAPermutation);
  CHECK(code({2, 1, 3}, {1, 2}) == Errc::NotAPermutation);
}

TEST_CASE("grid: components") {
  CHECK(grid_components(make_grid({2, 1}, {1, 2})) == 1);
  CHECK(grid_components(make_grid({2, 1, 4, 3}, {1, 2, 3, 4})) == 2);
  CHECK(grid_components(make_grid({3, 4, 5, 1, 2}, {1, 2, 3, 4, 5})) == 1);
}

TEST_CASE("grid: unknot invariants") {
  auto inv = grid_invariants(make_grid({2, 1}, {1, 2}));
  CHECK(inv == GridInvariants{0, 1, 1, -1, -1, 0});
}

TEST_CASE("grid: trefoil invariants") {
  auto inv = grid_invariants(make_grid({3, 4, 5, 1, 2}, {1, 2, 3, 4, 5}));
  CHECK(inv.w == -3);
  CHECK(inv.c == 3);
  CHECK(inv.c_down == 4);
  CHECK(inv.tb == -6);
  CHECK(inv.sl == -7);
  CHECK(inv.r == 1);
}

TEST_CASE("grid: two component link") {
  auto inv = grid_invariants(make_grid({2, 1, 4, 3}, {1, 2, 3, 4}));
  CHECK(inv.w == 0);
  CHECK(inv.c == 2);
  CHECK(inv.tb == -2);
}

TEST_CASE("grid: rotations") {
  auto u = make_grid({2, 1}, {1, 2});
  CHECK(grid_invariants(u).tb + grid_invariants(rotate_mirror(u)).tb == -2);
  CHECK(rotate_mirror(u).components() == 1);

  auto t = make_grid({3, 4, 5, 1, 2}, {1, 2, 3, 4, 5});
  CHECK(grid_invariants(rotate_mirror(t)).tb == 1);
  CHECK(rotate_mirror(rotate_mirror(t)) == rotate_half(t));
  auto half = grid_invariants(rotate_half(t));
  CHECK(half.tb == -6);
  CHECK(half.w == -3);
  CHECK(half.r == -1);
  CHECK(half.sl == -5);
  CHECK(grid_invariants(reverse_orientation(rotate_half(t))) == grid_invariants(t));

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    auto g = random_grid(n, seed);
    CHECK(grid_invariants(g).tb + grid_invariants(rotate_mirror(g)).tb == -n);
    const auto inv = grid_invariants(g);
    const auto half = grid_invariants(rotate_half(g));
    CHECK(half.tb == inv.tb);
    CHECK(half.c == inv.c);
    CHECK(half.r == -inv.r);
    CHECK(grid_invariants(reverse_orientation(rotate_half(g))) == inv);
  }
}

TEST_CASE("grid: link diagram conversion") {
  auto u = grid_to_link_diagram(make_grid({2, 1}, {1, 2}));
  CHECK(u.crossing_count() == 0);
  CHECK(u.free_loops() == 1);

  auto two = grid_to_link_diagram(make_grid({2, 1, 4, 3}, {1, 2, 3, 4}));
  CHECK(two.crossing_count() == 0);
  CHECK(two.free_loops() == 2);

  auto t = grid_to_link_diagram(make_grid({3, 4, 5, 1, 2}, {1, 2, 3, 4, 5}));
  CHECK(t.crossing_count() == 3);
  CHECK(t.writhe() == -3);
  CHECK(t.components() == 1);

  for (std::uint64_t seed = 1; seed < 200; ++seed) {
    auto g = random_grid(2 + static_cast<int>(seed % 9), seed * 7919);
    auto d = grid_to_link_diagram(g);
    CHECK(d.writhe() == grid_invariants(g).w);
    CHECK(d.components() == grid_components(g));
  }
}

TEST_CASE("grid: random generator") {
  auto a = random_grid(2, 5);
  CHECK((a == make_grid({2, 1}, {1, 2}) || a == make_grid({1, 2}, {2, 1})));
  CHECK(random_grid(10, 42) == random_grid(10, 42));
  CHECK(random_grid(10, 42).size() == 10);
}

TEST_CASE("grid: text formats") {
  auto g = parse_grid("x:3,4,5,1,2 o:1,2,3,4,5");
  CHECK(g == make_grid({3, 4, 5, 1, 2}, {1, 2, 3, 4, 5}));
  CHECK(parse_grid(grid_to_string(g)) == g);
  CHECK(parse_grid(R"({"name": "3_1", "x": [3,4,5,1,2], "o": [1,2,3,4,5]})") == g);
  CHECK_THROWS_AS(parse_grid("x:1,2"), Error);
  CHECK_THROWS_AS(parse_grid("{\"x\": [1]"), Error);
}
