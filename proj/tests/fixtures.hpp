#pragma once

#include "nullguard/catalog.hpp"
#include "nullguard/constraints.hpp"
#include "nullguard/registry.hpp"

namespace nullguard::test {

/// The PERSONS schema used throughout: partial email/PhoneNo/PassedAwayYear/
/// KilledBy columns, a total Name column, and the email*PhoneNo product.
struct PersonsFixture {
  Catalog catalog;
  Registry registry{catalog};
  SetId persons = 0;
  int ascii255 = -1;
  int nat4 = -1;
  FuncId email = 0;
  FuncId phone = 0;
  FuncId name_fn = 0;
  FuncId first_name = 0;
  FuncId last_name = 0;
  FuncId passed_away = 0;
  FuncId killed_by = 0;
  FuncId email_phone = 0;

  PersonsFixture() {
    persons = catalog.define_set("PERSONS");
    ascii255 = catalog.define_value_domain(ValueDomain::text(255));
    nat4 = catalog.define_value_domain(ValueDomain::naturals(9999));
    email = catalog.define_function("email", persons, Codomain::of_domain(ascii255), false);
    phone = catalog.define_function("PhoneNo", persons, Codomain::of_domain(ascii255), false);
    name_fn = catalog.define_function("Name", persons, Codomain::of_domain(ascii255), true);
    first_name =
        catalog.define_function("FirstName", persons, Codomain::of_domain(ascii255), false);
    last_name = catalog.define_function("LastName", persons, Codomain::of_domain(ascii255), false);
    passed_away =
        catalog.define_function("PassedAwayYear", persons, Codomain::of_domain(nat4), false);
    killed_by = catalog.define_function("KilledBy", persons, Codomain::of_set(persons), false);
    email_phone = catalog.define_product("email*PhoneNo", {email, phone});
  }

  ExistenceConstraint make(std::string name, bool inexist, std::optional<FuncId> left,
                           bool negation, FuncId right) const {
    ExistenceConstraint ec;
    ec.name = std::move(name);
    ec.inexist = inexist;
    ec.negation = negation;
    ec.left = left;
    ec.right = right;
    ec.set = catalog.function(right).domain;
    return ec;
  }
};

/// COUNTRIES -> CITIES schema exercising composites: Capital is partial,
/// CityName total, so Capital.CityName is partial.
struct CountriesFixture {
  Catalog catalog;
  Registry registry{catalog};
  SetId countries = 0;
  SetId cities = 0;
  int ascii255 = -1;
  FuncId capital = 0;
  FuncId city_name = 0;
  FuncId currency = 0;
  FuncId capital_city_name = 0;

  CountriesFixture() {
    countries = catalog.define_set("COUNTRIES");
    cities = catalog.define_set("CITIES");
    ascii255 = catalog.define_value_domain(ValueDomain::text(255));
    capital = catalog.define_function("Capital", countries, Codomain::of_set(cities), false);
    city_name = catalog.define_function("CityName", cities, Codomain::of_domain(ascii255), true);
    currency = catalog.define_function("Currency", countries, Codomain::of_domain(ascii255), false);
    capital_city_name = catalog.define_composite("CapitalCityName", {capital, city_name});
  }
};

}  // namespace nullguard::test
