#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "vspace/error.hpp"
#include "vspace/instances.hpp"
#include "vspace/io.hpp"

using namespace vspace;
using namespace vspace::testing;
using nlohmann::json;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected vspace::Error");
  return ErrorKind::InvalidArgument;
}

// Example 1, written by hand with entries in scrambled order.
json example1_document() {
  return json::parse(R"({
    "ground_set": ["1", "2", "3"],
    "kind": "phi",
    "map": [
      {"x": ["1", "2", "3"], "y": ["1", "2", "3"]},
      {"x": ["3"], "y": ["2", "3"]},
      {"x": [], "y": []},
      {"x": ["1"], "y": ["1"]},
      {"x": ["2"], "y": ["3", "2"]},
      {"x": ["3", "1"], "y": ["1", "2", "3"]},
      {"x": ["2", "3"], "y": ["2", "3"]},
      {"x": ["1", "2"], "y": ["1", "2", "3"]}
    ]
  })");
}

}  // namespace

TEST_CASE("encode_subset is positional") {
  const GroundSet e = GroundSet::numbered(3);
  CHECK(e.encode({"1", "3"}) == SubsetMask(0b101));
  CHECK(e.encode({}) == SubsetMask(0));
  CHECK(GroundSet::numbered(2).encode({"2", "2"}) == SubsetMask(0b010));
  CHECK(kind_of([&] { (void)e.encode({"4"}); }) == ErrorKind::UnknownLabel);
}

TEST_CASE("ground set limits") {
  CHECK(GroundSet::numbered(20).full() == SubsetMask((1U << 20) - 1));
  CHECK(kind_of([] { (void)GroundSet::numbered(21); }) == ErrorKind::GroundSetTooLarge);
  CHECK(kind_of([] { (void)GroundSet({"a", "b", "a"}); }) == ErrorKind::InvalidArgument);
  CHECK(GroundSet().full() == SubsetMask(0));
  CHECK(GroundSet().subset_count() == 1);
}

TEST_CASE("encode and decode are inverse on random label sets") {
  std::mt19937_64 rng(7);
  const GroundSet e({"p", "q", "r", "s", "t", "u", "v"});
  for (int trial = 0; trial < 200; ++trial) {
    const SubsetMask x(static_cast<std::uint32_t>(rng() % e.subset_count()));
    auto labels = e.decode(x);
    std::shuffle(labels.begin(), labels.end(), rng);
    CHECK(e.encode(labels) == x);
  }
}

TEST_CASE("submask enumeration is ascending and complete") {
  std::vector<SubsetMask> seen;
  for_each_between(SubsetMask(0b0010), SubsetMask(0b1011), [&](SubsetMask y) { seen.push_back(y); });
  CHECK(seen == std::vector<SubsetMask>{SubsetMask(0b0010), SubsetMask(0b0011), SubsetMask(0b1010),
                                        SubsetMask(0b1011)});
  int count = 0;
  for_each_submask(SubsetMask(0), [&](SubsetMask) { ++count; });
  CHECK(count == 1);
}

TEST_CASE("load_operator reads Example 1") {
  const auto t = load_operator(example1_document());
  CHECK(t.kind() == OperatorKind::phi);
  CHECK(t(m({2})) == m({2, 3}));
  CHECK(t(m({1, 3})) == m({1, 2, 3}));
  CHECK(t == example_space("example1"));
}

TEST_CASE("load_operator rejects malformed tables") {
  SUBCASE("missing entry") {
    auto doc = example1_document();
    doc["map"].erase(doc["map"].begin() + 3);
    CHECK(kind_of([&] { (void)load_operator(doc); }) == ErrorKind::MissingEntry);
  }
  SUBCASE("duplicate entry") {
    auto doc = example1_document();
    doc["map"].push_back({{"x", {"1"}}, {"y", {"1"}}});
    CHECK(kind_of([&] { (void)load_operator(doc); }) == ErrorKind::DuplicateEntry);
  }
  SUBCASE("unknown label") {
    auto doc = example1_document();
    doc["map"][0]["y"] = {"1", "9"};
    CHECK(kind_of([&] { (void)load_operator(doc); }) == ErrorKind::UnknownLabel);
  }
  SUBCASE("ground set too large") {
    json doc{{"ground_set", json::array()}, {"kind", "phi"}, {"map", json::array()}};
    for (int i = 0; i < 21; ++i) doc["ground_set"].push_back("e" + std::to_string(i));
    CHECK(kind_of([&] { (void)load_operator(doc); }) == ErrorKind::GroundSetTooLarge);
  }
  SUBCASE("bad kind and shape") {
    auto doc = example1_document();
    doc["kind"] = "closure";
    CHECK(kind_of([&] { (void)load_operator(doc); }) == ErrorKind::MalformedDocument);
    CHECK(kind_of([&] { (void)load_operator(json::array()); }) == ErrorKind::MalformedDocument);
  }
}

TEST_CASE("identity document on a single element") {
  const auto t = load_operator(json::parse(R"({"ground_set": ["a"], "kind": "nu",
      "map": [{"x": [], "y": []}, {"x": ["a"], "y": ["a"]}]})"));
  CHECK(t.kind() == OperatorKind::nu);
  CHECK(t == OperatorTable::identity(GroundSet({"a"}), OperatorKind::nu));
}

TEST_CASE("save_operator emits ascending entries and round trips") {
  const auto e1 = example_space("example1");
  const auto doc = save_operator(e1);
  CHECK(doc["map"].size() == 8);
  CHECK(doc["map"][2]["x"] == json{"2"});
  CHECK(doc["map"][2]["y"] == json{"2", "3"});
  CHECK(load_operator(doc) == e1);
  // Through text as well.
  CHECK(load_operator(json::parse(doc.dump())) == e1);

  const auto empty = OperatorTable::identity(GroundSet());
  const auto doc0 = save_operator(empty);
  CHECK(doc0["map"].size() == 1);
  CHECK(load_operator(doc0) == empty);

  CHECK(save_operator(example_space("example2"))["map"].size() == 64);
}

TEST_CASE("save/load round trip is the identity on random tables") {
  std::mt19937_64 rng(11);
  for (unsigned n = 0; n <= 6; ++n) {
    for (auto kind : {OperatorKind::phi, OperatorKind::nu, OperatorKind::choice}) {
      const auto t = random_table(n, rng, kind);
      CHECK(load_operator(save_operator(t)) == t);
    }
  }
}

TEST_CASE("table construction enforces totality") {
  CHECK(kind_of([] {
          (void)OperatorTable(GroundSet::numbered(2), OperatorKind::phi, std::vector<SubsetMask>(3));
        }) == ErrorKind::MissingEntry);
  CHECK(kind_of([] {
          (void)OperatorTable(GroundSet::numbered(1), OperatorKind::phi, {SubsetMask(0), SubsetMask(2)});
        }) == ErrorKind::InvalidArgument);
}
