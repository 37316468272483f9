#include "nullguard/messages.hpp"

namespace nullguard::msg {

std::string unknown_constraint(const std::string& cn) {
  return "Request rejected: " + cn + " is not a known constraint name!";
}

std::string duplicate_name(const std::string& cn) {
  return "Request rejected: " + cn +
         " is the name of another constraint of this db! Please choose a unique constraint name "
         "instead!";
}

std::string already_stored(const std::string& existing) {
  return "Request rejected: this constraint is already stored in this db schema under the name " +
         existing;
}

std::string missing_right_side() {
  return "Request rejected: any existence constraint must have a right-side!";
}

std::string right_side_must_be_product() {
  return "Request rejected: as the left-side is null, the right-side must be a function product!";
}

std::string incompatible_domains(const std::string& f, const std::string& g) {
  return "Request rejected: " + f + " and " + g + " do not have compatible domains!";
}

std::string left_side_mandatory() {
  return "Request rejected: the left-side of an existence constraint is mandatory!";
}

std::string negation_mandatory() {
  return "Request rejected: Negation? is mandatory for non-existence constraints!";
}

std::string totally_defined(const std::vector<std::string>& names) {
  std::string joined;
  for (const std::string& n : names) {
    if (!joined.empty()) joined += ',';
    joined += n;
  }
  return "Request rejected: member function(s) " + joined + " is/are totally defined!";
}

std::string member_of_both(const std::string& name, const std::string& f, const std::string& g) {
  return "Request rejected: " + name + " is a member function of both " + f + " and " + g + "!";
}

std::string identical_sides(const std::string& f, const std::string& g) {
  return "Request rejected: " + f + " = " + g + "!";
}

std::string incoherent() {
  return "Request rejected: constraint set would become incoherent!";
}

std::string violates(int x, const std::string& cn) {
  return "Request rejected: " + std::to_string(x) + " violates " + cn + "!";
}

std::string implied_by(const std::string& existing) {
  return "Request rejected: this constraint is implied by enforced constraint " + existing + "!";
}

std::string implies(const std::string& existing, const std::string& cn) {
  return "Request rejected: enforced constraint " + existing + " implies " + cn + "!";
}

std::string replaced_for_minimality(const std::string& old_name, const std::string& old_render,
                                    const std::string& new_name) {
  return "Enforced constraint " + old_name + ": " + old_render + " is replaced by " + new_name +
         " for minimality reasons!";
}

std::string replaced_two_for_minimality(const std::string& old1, const std::string& render1,
                                        const std::string& old2, const std::string& render2,
                                        const std::string& new_name) {
  return "Enforced constraints " + old1 + ": " + render1 + " and " + old2 + ": " + render2 +
         " are replaced by " + new_name + " for minimality reasons!";
}

std::string fused_for_minimality(const std::string& cn, const std::string& old_name,
                                 const std::string& fused_render) {
  return "Constraint accepted. Consequently, " + cn + " and enforced constraint " + old_name +
         "'s body were replaced by " + fused_render + " for minimality reasons!";
}

std::string canonicalized(const std::string& cn, const std::string& render) {
  return "Constraint " + cn + " is stored in its consolidated form " + render + ".";
}

std::string delete_prompt(const std::string& cn, const std::string& render) {
  return "Are you sure you want to delete constraint " + cn + ": " + render + "?";
}

std::string deleted(const std::string& cn) {
  return "Constraint " + cn + " deleted.";
}

std::string inexist_consolidated(const std::string& cn, const std::string& g) {
  return "Saving these values is rejected: according to inexistence constraint " + cn +
         ", at least a column of " + g + " must have a not null value!";
}

std::string inexist_single(const std::string& cn, const std::string& g) {
  return "Saving these values is rejected: according to inexistence constraint " + cn +
         ", all columns of " + g + " must have not null values!";
}

std::string anti_exist_consolidated(const std::string& cn, const std::string& g) {
  return "Saving these values is rejected: according to anti-existence constraint " + cn +
         ", all columns of " + g + " must have either null or not null values!";
}

std::string anti_exist_single(const std::string& cn, const std::string& g) {
  return "Saving these values is rejected: according to anti-existence constraint " + cn +
         ", all columns of " + g + " must have null values!";
}

std::string exist_single(const std::string& cn, const std::string& g) {
  return "Saving these values is rejected: according to existence constraint " + cn +
         ", all columns of " + g + " must have not null values!";
}

std::string non_exist_single(const std::string& cn, const std::string& g) {
  return "Saving these values is rejected: according to non-existence constraint " + cn +
         ", all columns of " + g + " must have null values!";
}

std::string non_exist_consolidated(const std::string& cn, const std::string& g) {
  return "Saving these values is rejected: according to non-existence constraint " + cn +
         ", at most a column of " + g + " may have a not null value!";
}

}  // namespace nullguard::msg
