#include "doctest.h"

#include <random>

#include "../oracles.hpp"
#include "hraag/errors.hpp"
#include "hraag/json_io.hpp"
#include "hraag/raag.hpp"

using namespace hraag;

namespace {

RaagPresentation c4() { return RaagPresentation(cycle4_graph()); }
RaagPresentation g0() { return RaagPresentation(gamma0_graph()); }
RaagPresentation g1() { return RaagPresentation(gamma1_graph()); }

std::map<std::string, RaagWord> identity_images(const RaagPresentation& source, const RaagPresentation& target) {
  std::map<std::string, RaagWord> out;
  for (const auto& v : source.graph().vertices())
    if (target.graph().contains(v)) out[v] = parse_word(target, v);
  return out;
}

RaagHom phi() {
  auto s = g0(), t = g1();
  auto images = identity_images(s, t);
  images["q"] = parse_word(t, "e f");
  auto v = verify_hom(s, t, images);
  REQUIRE(v.valid());
  return *v.hom;
}

}  // namespace

TEST_CASE("word syntax round trips") {
  auto p = g1();
  auto w = parse_word(p, "a e^-1 h");
  CHECK(w.length() == 3);
  CHECK(w.letters[1].inverse);
  CHECK(format_word(p, w) == "a e^-1 h");
  CHECK(parse_word(p, "").letters.empty());
  CHECK(parse_word(p, "1").letters.empty());
  CHECK_THROWS_WITH_AS(parse_word(p, "a q"), doctest::Contains("'q'"), InputError);
}

TEST_CASE("normal form examples") {
  CHECK(normal_form(c4(), parse_word(c4(), "a a^-1")).empty());
  CHECK(normal_form(g1(), parse_word(g1(), "e f e^-1 f^-1")).empty());
  auto ghgh = normal_form(g0(), parse_word(g0(), "g h g^-1 h^-1"));
  CHECK(ghgh.length() == 4);
  CHECK_FALSE(oracle::is_trivial(gamma0_graph(), parse_word(g0(), "g h g^-1 h^-1").letters));
  // a and b commute in C4, so "b a" sorts to "a b".
  CHECK(format_word(c4(), normal_form(c4(), parse_word(c4(), "b a")).letters) == "a b");
  CHECK(format_word(c4(), normal_form(c4(), parse_word(c4(), "c a")).letters) == "c a");
  // Cancellation through a commuting letter.
  CHECK(format_word(c4(), normal_form(c4(), parse_word(c4(), "a b a^-1")).letters) == "b");
}

TEST_CASE("identity examples") {
  CHECK(is_identity(c4(), parse_word(c4(), "b b^-1 a a^-1")));
  CHECK_FALSE(is_identity(c4(), parse_word(c4(), "a c a^-1 c^-1")));
  CHECK(is_identity(c4(), parse_word(c4(), "a b a^-1 b^-1")));
}

TEST_CASE("is_identity agrees with the closure oracle") {
  for (const auto& g : {cycle4_graph(), gamma0_graph()}) {
    RaagPresentation p(g);
    for (std::size_t len = 0; len <= 4; len += 2) {
      for (const auto& w : oracle::all_words(g.order(), len)) {
        CHECK(is_identity(p, {w}) == oracle::is_trivial(g, w));
      }
    }
  }
}

TEST_CASE("normal form properties") {
  std::mt19937_64 rng(3);
  for (const auto& g : {cycle4_graph(), gamma0_graph(), gamma1_graph()}) {
    RaagPresentation p(g);
    for (int trial = 0; trial < 400; ++trial) {
      RaagWord w{oracle::random_word(rng, g.order(), 5)};
      auto nf = normal_form(p, w);
      CHECK(normal_form(p, nf.word()) == nf);
      CHECK(is_normal_form(p, nf.letters));
      CHECK(normal_form(p, concat(w, inverse(w))).empty());
      CHECK(nf.length() <= w.length());
    }
  }
}

TEST_CASE("normal forms coincide exactly for equal elements") {
  std::mt19937_64 rng(8);
  const auto g = gamma0_graph();
  RaagPresentation p(g);
  for (int trial = 0; trial < 1500; ++trial) {
    RaagWord u{oracle::random_word(rng, g.order(), 3)};
    RaagWord v{oracle::random_word(rng, g.order(), 3)};
    if (trial % 3 == 0) {
      // Force some equal pairs: shuffle commuting neighbours of u.
      v = u;
      for (std::size_t i = 0; i + 1 < v.letters.size(); ++i) {
        if (p.commute(v.letters[i].gen, v.letters[i + 1].gen)) std::swap(v.letters[i], v.letters[i + 1]);
      }
    }
    const bool same = oracle::is_trivial(g, concat(u, inverse(v)).letters);
    CHECK((normal_form(p, u) == normal_form(p, v)) == same);
  }
}

TEST_CASE("homomorphisms") {
  auto h = phi();
  auto s = h.source;
  CHECK(format_word(h.target, apply_hom(h, parse_word(s, "q"))) == "e f");
  CHECK(format_word(h.target, apply_hom(h, parse_word(s, "q^-1"))) == "f^-1 e^-1");
  CHECK(format_word(h.target, apply_hom(h, parse_word(s, "a q"))) == "a e f");

  auto id = verify_hom(c4(), c4(), identity_images(c4(), c4()));
  CHECK(id.valid());

  RaagPresentation free4(empty_graph(4));
  std::map<std::string, RaagWord> naive;
  const char* names[] = {"a", "b", "c", "d"};
  for (int i = 0; i < 4; ++i) naive[names[i]] = RaagWord{{{static_cast<std::uint32_t>(i), false}}};
  auto bad = verify_hom(c4(), free4, naive);
  CHECK_FALSE(bad.valid());
  CHECK(*bad.failed_relator == LabelPair{"a", "b"});

  std::map<std::string, RaagWord> partial{{"a", parse_word(c4(), "a")}};
  CHECK_THROWS_AS(verify_hom(c4(), c4(), partial), InputError);
}

TEST_CASE("broken phi fails on [q,b]") {
  auto s = g0(), t = g1();
  auto images = identity_images(s, t);
  images["q"] = parse_word(t, "e g");
  auto v = verify_hom(s, t, images);
  CHECK_FALSE(v.valid());
  CHECK(*v.failed_relator == LabelPair{"q", "b"});
}

TEST_CASE("apply_hom is a homomorphism on words") {
  auto h = phi();
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    RaagWord u{oracle::random_word(rng, 7, 4)};
    RaagWord v{oracle::random_word(rng, 7, 4)};
    CHECK(normal_form(h.target, apply_hom(h, concat(u, v))) ==
          normal_form(h.target, concat(apply_hom(h, u), apply_hom(h, v))));
  }
}

TEST_CASE("kernel ball search") {
  CHECK_FALSE(kernel_ball_search(phi(), 4).witness);

  auto id = verify_hom(c4(), c4(), identity_images(c4(), c4()));
  CHECK_FALSE(kernel_ball_search(*id.hom, 3).witness);

  RaagPresentation one(build_graph({"z"}, {}));
  std::map<std::string, RaagWord> collapse;
  for (const char* v : {"a", "b", "c", "d"}) collapse[v] = parse_word(one, "z");
  auto col = verify_hom(c4(), one, collapse);
  REQUIRE(col.valid());
  auto r = kernel_ball_search(*col.hom, 2);
  REQUIRE(r.witness);
  CHECK(format_word(c4(), *r.witness) == "a b^-1");

  CHECK_THROWS_AS(kernel_ball_search(*col.hom, 0), PreconditionError);
  CHECK_THROWS_AS(kernel_ball_search(phi(), 4, {50, 1}), BudgetExceeded);
}

TEST_CASE("kernel search result does not depend on worker count") {
  RaagPresentation one(build_graph({"z", "y"}, {}));
  std::map<std::string, RaagWord> images;
  images["a"] = parse_word(one, "z y");
  images["b"] = parse_word(one, "1");
  images["c"] = parse_word(one, "z y");
  images["d"] = parse_word(one, "1");
  auto h = verify_hom(c4(), one, images);
  REQUIRE(h.valid());
  auto serial = kernel_ball_search(*h.hom, 3, {0, 1});
  auto wide = kernel_ball_search(*h.hom, 3, {0, 4});
  REQUIRE(serial.witness);
  CHECK(format_word(c4(), *serial.witness) == "b");
  CHECK(*serial.witness == *wide.witness);
  CHECK(serial.normal_forms_checked == wide.normal_forms_checked);
}

TEST_CASE("kernel search enumerates each normal form once") {
  // Count normal forms of length <= 3 over A(C4) by brute force.
  auto p = c4();
  std::set<std::vector<std::uint32_t>> forms;
  for (std::size_t len = 1; len <= 3; ++len) {
    for (const auto& w : oracle::all_words(4, len)) {
      auto nf = normal_form(p, {w});
      if (nf.length() != len) continue;
      std::vector<std::uint32_t> k;
      for (auto l : nf.letters) k.push_back(l.code());
      forms.insert(k);
    }
  }
  auto id = verify_hom(c4(), c4(), identity_images(c4(), c4()));
  CHECK(kernel_ball_search(*id.hom, 3).normal_forms_checked == forms.size());
}

TEST_CASE("homomorphism JSON") {
  auto j = parse_json(R"({"source": {"vertices": ["a","b"], "edges": [["a","b"]]},
                          "target": {"vertices": ["x"], "edges": []},
                          "images": {"a": "x", "b": "x^-1"}})",
                      "inline");
  auto spec = hom_from_json(j);
  auto v = verify_hom(spec.source, spec.target, spec.images);
  CHECK(v.valid());
  CHECK_THROWS_AS(hom_from_json(parse_json(R"({"source": {"vertices": [], "edges": []}})", "x")), InputError);
}
