#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "nullguard/constraints.hpp"

using namespace nullguard;
using nullguard::test::PersonsFixture;

TEST_CASE("classify maps the flag triples of the subtype table") {
  CHECK(classify(false, false, true) == Subtype::existence);
  CHECK(classify(false, true, true) == Subtype::non_existence);
  CHECK(classify(false, true, false) == Subtype::cons_non_existence);
  CHECK(classify(true, false, true) == Subtype::inexistence);
  CHECK(classify(true, false, false) == Subtype::cons_inexistence);
  CHECK(classify(true, true, true) == Subtype::anti_existence);
  CHECK(classify(true, true, false) == Subtype::cons_anti_existence);
  // the one ill-formed combination: "|- g" with Inexist? false
  CHECK_FALSE(classify(false, false, false).has_value());
}

TEST_CASE("classify is a bijection over the admissible triples") {
  std::set<Subtype> seen;
  int admissible = 0;
  for (bool inexist : {false, true})
    for (bool negation : {false, true})
      for (bool has_left : {false, true})
        if (auto s = classify(inexist, negation, has_left)) {
          ++admissible;
          CHECK(seen.insert(*s).second);
        }
  CHECK(admissible == 7);
  CHECK(seen.size() == 7);
}

TEST_CASE("subtype codes match the encoding table") {
  auto codes = [](Subtype s) {
    auto c = subtype_codes(s);
    return std::pair(c.value, c.min_value);
  };
  CHECK(codes(Subtype::existence) == std::pair<std::string, std::string>("0102", "2"));
  CHECK(codes(Subtype::non_existence) == std::pair<std::string, std::string>("0112", "12"));
  CHECK(codes(Subtype::cons_non_existence) == std::pair<std::string, std::string>("0013", "13"));
  CHECK(codes(Subtype::inexistence) == std::pair<std::string, std::string>("1102", "102"));
  CHECK(codes(Subtype::cons_inexistence) == std::pair<std::string, std::string>("1003", "103"));
  CHECK(codes(Subtype::anti_existence) == std::pair<std::string, std::string>("1112", "112"));
  CHECK(codes(Subtype::cons_anti_existence) == std::pair<std::string, std::string>("1013", "113"));
}

TEST_CASE("full and minimal codes are pairwise distinct") {
  std::set<std::string> values;
  std::set<std::string> min_values;
  for (Subtype s : kAllSubtypes) {
    const auto codes = subtype_codes(s);
    CHECK(values.insert(codes.value).second);
    CHECK(min_values.insert(codes.min_value).second);
  }
  CHECK(min_values == std::set<std::string>{"2", "12", "13", "102", "103", "112", "113"});
}

TEST_CASE("dropping any code component creates collisions") {
  auto has_pair = [](const std::vector<std::pair<Subtype, Subtype>>& pairs, Subtype a, Subtype b) {
    return std::any_of(pairs.begin(), pairs.end(), [&](const auto& p) {
      return (p.first == a && p.second == b) || (p.first == b && p.second == a);
    });
  };

  const auto no_inexist = colliding_pairs_without(CodeComponent::inexist_flag);
  CHECK(has_pair(no_inexist, Subtype::existence, Subtype::inexistence));
  CHECK_FALSE(no_inexist.empty());

  const auto no_negation = colliding_pairs_without(CodeComponent::negation_flag);
  CHECK(has_pair(no_negation, Subtype::existence, Subtype::non_existence));
  CHECK_FALSE(no_negation.empty());

  const auto no_right = colliding_pairs_without(CodeComponent::right_code);
  CHECK(no_right.size() == 3);
  CHECK(has_pair(no_right, Subtype::non_existence, Subtype::cons_non_existence));
  CHECK(has_pair(no_right, Subtype::inexistence, Subtype::cons_inexistence));
  CHECK(has_pair(no_right, Subtype::anti_existence, Subtype::cons_anti_existence));
}

TEST_CASE("formula_eval implements the propositional table") {
  CHECK_FALSE(formula_eval(Subtype::existence, false, true));
  CHECK(formula_eval(Subtype::cons_anti_existence, true, true));
  CHECK_FALSE(formula_eval(Subtype::inexistence, true, true));
  CHECK_FALSE(formula_eval(Subtype::non_existence, false, false));
  // the single and consolidated variants share one formula
  for (bool f : {false, true})
    for (bool g : {false, true}) {
      CHECK(formula_eval(Subtype::non_existence, f, g) ==
            formula_eval(Subtype::cons_non_existence, f, g));
      CHECK(formula_eval(Subtype::inexistence, f, g) ==
            formula_eval(Subtype::cons_inexistence, f, g));
    }
}

TEST_CASE("family_representative collapses the equivalent forms") {
  CHECK(family_representative(Subtype::non_existence) == Subtype::cons_non_existence);
  CHECK(family_representative(Subtype::inexistence) == Subtype::cons_inexistence);
  CHECK(family_representative(Subtype::existence) == Subtype::existence);
  CHECK(family_representative(Subtype::anti_existence) == Subtype::anti_existence);
  CHECK(family_representative(Subtype::cons_anti_existence) == Subtype::cons_anti_existence);
}

TEST_CASE("render_syntax produces the canonical ASCII forms") {
  PersonsFixture fx;
  const FuncId names = fx.catalog.define_product("names", {fx.first_name, fx.last_name});

  CHECK(render_syntax(fx.make("ec", false, fx.email, false, names), fx.catalog) ==
        "email |- FirstName*LastName");
  CHECK(render_syntax(fx.make("iec", true, std::nullopt, false, fx.email_phone), fx.catalog) ==
        "|- email*PhoneNo");
  CHECK(render_syntax(fx.make("aec", true, fx.passed_away, true, fx.killed_by), fx.catalog) ==
        "!PassedAwayYear !|- KilledBy");
  CHECK(render_syntax(fx.make("nec", false, fx.email, true, fx.phone), fx.catalog) ==
        "email !|- PhoneNo");
  const FuncId pk = fx.catalog.define_product("pk", {fx.passed_away, fx.killed_by});
  CHECK(render_syntax(fx.make("aec2", true, std::nullopt, true, pk), fx.catalog) ==
        "!!|- PassedAwayYear*KilledBy");
  CHECK(render_syntax(fx.make("nec2", false, std::nullopt, true, pk), fx.catalog) ==
        "!|- PassedAwayYear*KilledBy");
}

TEST_CASE("render_side writes composites as dotted chains") {
  test::CountriesFixture fx;
  CHECK(render_side(fx.capital_city_name, fx.catalog) == "Capital.CityName");
  const FuncId prod =
      fx.catalog.define_product("p", {fx.capital_city_name, fx.currency});
  CHECK(render_side(prod, fx.catalog) == "Capital.CityName*Currency");
}

TEST_CASE("subtype() throws on ill-formed flags") {
  PersonsFixture fx;
  ExistenceConstraint bad = fx.make("bad", false, std::nullopt, false, fx.email_phone);
  CHECK_THROWS_AS(bad.subtype(), std::logic_error);
}
