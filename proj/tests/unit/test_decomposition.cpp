#include "doctest.h"

#include <set>

#include "../oracles.hpp"
#include "hraag/decomposition.hpp"
#include "hraag/errors.hpp"

using namespace hraag;

namespace {

// Case (6) on S0,8: an S0,4 bridging two S0,4 sides.
Decomposition case6() { return {{0, 8}, {0, 1, 3}, {0, 1, 3}, {{0, 1, 1, 2}}}; }

std::set<std::string> key_strings(const std::vector<CatalogEntry>& catalog) {
  std::set<std::string> out;
  for (const auto& e : catalog) out.insert(e.key.to_string());
  return out;
}

bool sides_are_s04(const Decomposition& d) {
  for (const auto* s : {&d.s1, &d.s2})
    if (complexity(s->type()) == 1 && s->type() != SurfaceType{0, 4}) return false;
  return true;
}

}  // namespace

TEST_CASE("alpha and the xi identity") {
  auto d = case6();
  CHECK_FALSE(validate(d));
  CHECK(alpha(d) == 2);
  CHECK(attachment_betti(d) == 0);
  CHECK(verify_xi_identity(d));

  // Two annuli joining the sides raise the genus by one.
  Decomposition two{{1, 5}, {0, 2, 2}, {0, 2, 3}, {{0, 1, 1, 0}, {0, 1, 1, 0}}};
  CHECK_FALSE(validate(two));
  CHECK(attachment_betti(two) == 1);
  CHECK(alpha(two) == 2);
  CHECK(verify_xi_identity(two));

  // An annulus with both ends on S1 counts as one circle class.
  Decomposition loop{{1, 5}, {0, 3, 1}, {0, 1, 3}, {{0, 1, 1, 1}, {0, 2, 0, 0}}};
  CHECK_FALSE(validate(loop));
  CHECK(alpha(loop) == 3);
}

TEST_CASE("validate rejects broken decompositions") {
  auto d = case6();
  d.s1.circles = 2;
  CHECK(validate(d)->find("S1") != std::string::npos);

  d = case6();
  d.s0.push_back({0, 0, 0, 0});
  CHECK(validate(d)->find("not attached") != std::string::npos);

  d = case6();
  d.ambient = {0, 9};
  CHECK(validate(d)->find("marked points") != std::string::npos);

  d = case6();
  d.ambient = {1, 8};
  CHECK(validate(d)->find("genus") != std::string::npos);

  Decomposition one_sided{{0, 8}, {0, 2, 3}, {0, 0, 3}, {{0, 2, 0, 2}}};
  CHECK(validate(one_sided)->find("disconnected") != std::string::npos);

  Decomposition disk{{0, 8}, {0, 2, 3}, {0, 1, 3}, {{0, 1, 1, 0}, {0, 1, 0, 1}}};
  CHECK(validate(disk)->find("disk") != std::string::npos);
}

TEST_CASE("swap normalization") {
  Decomposition d{{1, 5}, {0, 3, 1}, {0, 1, 3}, {{0, 1, 1, 1}, {0, 2, 0, 0}}};
  auto s = swapped(d);
  CHECK(s.s1 == d.s2);
  CHECK(swapped(s) == d);
  CHECK(canonical(d) == canonical(s));
  CHECK(case_key(d) == case_key(s));
  CHECK(case_key(d).to_string() == "S0,2:0/2 + S0,3:1/1");
}

TEST_CASE("case keys parse back") {
  for (const char* text : {"S0,2:1/1", "S0,2:0/2 + S0,3:1/1", "S0,2:1/1 + S1,1:0/1"}) {
    CHECK(parse_case_key(text).to_string() == text);
  }
  CHECK(parse_case_key("S0,3:0/2 + S0,2:1/1") == parse_case_key("S0,2:1/1 + S0,3:2/0"));
  CHECK_THROWS_AS(parse_case_key("S0,2"), InputError);
  CHECK_THROWS_AS(parse_case_key("T0,2:1/1"), InputError);
}

TEST_CASE("enumeration agrees with the budget oracle") {
  for (int xi = 3; xi <= 5; ++xi) {
    for (auto mode : {Mode::HANDLEBODY, Mode::SURFACE}) {
      for (auto ambient : surfaces_with_complexity(xi, (xi + 3) / 3)) {
        CAPTURE(to_string(ambient));
        CAPTURE(to_string(mode));
        auto found = enumerate_decompositions(ambient, mode, 1);
        const std::set<Decomposition> got(found.begin(), found.end());
        CHECK(got.size() == found.size());
        CHECK(got == oracle::decompositions_by_budget(ambient, mode));
        for (const auto& d : found) {
          CHECK(canonical(d) == d);
          CHECK_FALSE(validate(d));
          CHECK(verify_xi_identity(d));
        }
      }
    }
  }
}

TEST_CASE("enumeration is empty below complexity three") {
  for (auto ambient : {SurfaceType{0, 5}, SurfaceType{1, 2}, SurfaceType{0, 4}}) {
    CHECK(enumerate_decompositions(ambient, Mode::SURFACE).empty());
  }
  CHECK_THROWS_AS(case_catalog(2, Mode::HANDLEBODY), PreconditionError);
}

TEST_CASE("enumeration is independent of worker count") {
  for (auto ambient : {SurfaceType{0, 8}, SurfaceType{1, 5}}) {
    CHECK(enumerate_decompositions(ambient, Mode::HANDLEBODY, 1) ==
          enumerate_decompositions(ambient, Mode::HANDLEBODY, 3));
  }
}

TEST_CASE("case (6) is realized only on S0,8") {
  auto six = keys_for_label("(6)", 5);
  REQUIRE(six.size() == 1);
  for (auto ambient : surfaces_with_complexity(5, 2)) {
    bool seen = false;
    for (const auto& d : enumerate_decompositions(ambient, Mode::HANDLEBODY)) seen = seen || case_key(d) == six[0];
    CHECK(seen == (ambient == SurfaceType{0, 8}));
  }
  const auto all = enumerate_decompositions({0, 8}, Mode::HANDLEBODY);
  CHECK(std::find(all.begin(), all.end(), canonical(case6())) != all.end());
}

TEST_CASE("labels") {
  CHECK(case_label(parse_case_key("S0,2:1/1"), 5) == std::optional<std::string>("(1)"));
  CHECK(case_label(parse_case_key("S0,2:1/1"), 4) == std::optional<std::string>("(1)'"));
  CHECK(case_label(parse_case_key("S0,3:2/1"), 5) == std::optional<std::string>("(8)"));
  CHECK(case_label(parse_case_key("S0,3:1/1 + S0,2:2/0"), 5) == std::optional<std::string>("(11)"));
  CHECK_FALSE(case_label(parse_case_key("S0,3:1/1 + S0,3:0/1"), 5));
  CHECK(case_labels(5).size() == 17);
  CHECK(case_labels(4).size() == 5);
  CHECK(case_labels(3).empty());
  CHECK(keys_for_label("(7)", 5).size() == 2);
  CHECK(keys_for_label("(16)", 5).size() == 2);
  CHECK(keys_for_label("(2)", 5).size() == 1);
}

TEST_CASE("catalog key counts are frozen") {
  auto five = case_catalog(5, Mode::HANDLEBODY);
  CHECK(five.size() == 21);
  std::size_t unlabeled = 0;
  std::set<std::string> labels;
  for (const auto& e : five) {
    if (e.label) labels.insert(*e.label);
    else ++unlabeled;
  }
  CHECK(unlabeled == 1);
  CHECK(labels.size() == 17);

  auto four = case_catalog(4, Mode::HANDLEBODY);
  CHECK(four.size() == 5);
  for (const auto& e : four) CHECK(e.label);

  auto three = case_catalog(3, Mode::HANDLEBODY);
  REQUIRE(three.size() == 1);
  CHECK(three[0].key.to_string() == "S0,2:1/1");
  CHECK(three[0].ambients == std::vector<SurfaceType>{{0, 6}});
}

TEST_CASE("genus one components appear only in case (7)") {
  for (const auto& e : case_catalog(5, Mode::HANDLEBODY)) {
    bool torus = false;
    for (const auto& p : e.key.parts) torus = torus || (p.genus == 1 && p.marks == 1);
    if (torus) CHECK(e.label == std::optional<std::string>("(7)"));
  }
}

TEST_CASE("handlebody decompositions are surface decompositions") {
  for (int xi = 3; xi <= 5; ++xi) {
    std::size_t strict = 0;
    for (auto ambient : surfaces_with_complexity(xi, (xi + 3) / 3)) {
      auto h = enumerate_decompositions(ambient, Mode::HANDLEBODY);
      auto s = enumerate_decompositions(ambient, Mode::SURFACE);
      const std::set<Decomposition> hs(h.begin(), h.end());
      std::set<Decomposition> filtered;
      for (const auto& d : s)
        if (sides_are_s04(d)) filtered.insert(d);
      CHECK(std::includes(s.begin(), s.end(), h.begin(), h.end()));
      CHECK(filtered == hs);
      strict += s.size() - h.size();
    }
    if (xi >= 4) CHECK(strict > 0);
  }

  auto hk = key_strings(case_catalog(4, Mode::HANDLEBODY));
  auto sk = key_strings(case_catalog(4, Mode::SURFACE));
  CHECK(std::includes(sk.begin(), sk.end(), hk.begin(), hk.end()));
}
