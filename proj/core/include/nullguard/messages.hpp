#pragma once

#include <string>
#include <vector>

namespace nullguard::msg {

// Admission pipeline. Placeholders render function sides in the ASCII
// constraint syntax ("email*PhoneNo").
std::string unknown_constraint(const std::string& cn);
std::string duplicate_name(const std::string& cn);
std::string already_stored(const std::string& existing);
std::string missing_right_side();
std::string right_side_must_be_product();
std::string incompatible_domains(const std::string& f, const std::string& g);
std::string left_side_mandatory();
std::string negation_mandatory();
std::string totally_defined(const std::vector<std::string>& names);
std::string member_of_both(const std::string& name, const std::string& f, const std::string& g);
std::string identical_sides(const std::string& f, const std::string& g);
std::string incoherent();
std::string violates(int x, const std::string& cn);
std::string implied_by(const std::string& existing);
std::string implies(const std::string& existing, const std::string& cn);
std::string replaced_for_minimality(const std::string& old_name, const std::string& old_render,
                                    const std::string& new_name);
std::string replaced_two_for_minimality(const std::string& old1, const std::string& render1,
                                        const std::string& old2, const std::string& render2,
                                        const std::string& new_name);
std::string fused_for_minimality(const std::string& cn, const std::string& old_name,
                                 const std::string& fused_render);
std::string canonicalized(const std::string& cn, const std::string& render);
std::string delete_prompt(const std::string& cn, const std::string& render);
std::string deleted(const std::string& cn);

// Row-level enforcement.
std::string inexist_consolidated(const std::string& cn, const std::string& g);
std::string inexist_single(const std::string& cn, const std::string& g);
std::string anti_exist_consolidated(const std::string& cn, const std::string& g);
std::string anti_exist_single(const std::string& cn, const std::string& g);
// Existence/non-existence have no stated templates; these mirror the other
// two families and are not treated as golden output.
std::string exist_single(const std::string& cn, const std::string& g);
std::string non_exist_single(const std::string& cn, const std::string& g);
std::string non_exist_consolidated(const std::string& cn, const std::string& g);

}  // namespace nullguard::msg
