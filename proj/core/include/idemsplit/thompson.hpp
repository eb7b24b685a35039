#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>

#include "idemsplit/plmap.hpp"
#include "idemsplit/word.hpp"

namespace idemsplit {

// A word in the group F on generators a_0, a_1, ... subject to
// a_i^-1 a_j a_i = a_{j+1} for all i < j. The carried word is freely
// reduced; equality in F is decided by the operations below, never assumed.
struct FWord {
  Word word;

  bool operator==(const FWord&) const = default;
  auto operator<=>(const FWord&) const = default;
};

// The decomposition a_i^n * s^{i+1}(b) with n != 0 and i in {0, 1},
// where s is the index shift.
struct StandardForm {
  std::uint32_t i = 0;
  std::int64_t n = 0;
  FWord b;

  bool operator==(const StandardForm&) const = default;
};

// Index shift a_t -> a_{t+k}; an injective endomorphism of F.
FWord shift(const FWord& w, std::uint32_t k);

// The unique canonical representative of w's class in F: a positive block
// with non-decreasing indices followed by a negative block with
// non-increasing indices, freely reduced, subject to the occurrence
// condition that whenever a_t and a_t^-1 both occur, a_{t+1} or a_{t+1}^-1
// occurs too. normal_form(u) == normal_form(v) iff u and v are equal in F.
FWord normal_form(const FWord& w);

// Image of w under the faithful representation into dyadic PL
// homeomorphisms of [0,1]. The representation sends a_n to
// PLMap::generator(n) and products to composites, outermost factor first:
// rho(u v) = rho(u) o rho(v). A one-time self-check asserts that this
// composition convention realizes the defining relations.
PLMap to_pl(const FWord& w);

// Word problem for F, decided twice: by normal-form equality and by the
// PL representation. The two deciders must agree; disagreement throws
// std::logic_error.
bool words_equal(const FWord& u, const FWord& v);

// Checks rho(a_i^-1 a_j a_i) == rho(a_{j+1}) exactly, for all
// 0 <= i < j <= depth.
bool verify_presentation(std::uint32_t depth);

// With c_i = a_{3i}^-1 a_{3i+1}: checks that the c_i for i <= i_max
// commute pairwise and that every product c_0^{k_0} ... c_{i_max}^{k_imax}
// with all |k_t| <= exp_bound and not all k_t zero is nontrivial in F.
bool commuting_family_check(std::uint32_t i_max, std::uint32_t exp_bound);

// Literal decomposition of the reduced word w as a leading block a_i^n
// (i in {0,1}, n != 0) followed by a tail whose indices are all >= i+1;
// the tail is returned unshifted as b. No conjugation is attempted.
std::optional<StandardForm> standard_form_check(const FWord& w);

// Reassembles a_i^n * s^{i+1}(b).
FWord render(const StandardForm& form);

// Bounded conjugacy search: tries conjugators g of length <= radius over
// generators a_0..a_radius (applied after cyclic reduction of w) until
// normal_form(g^-1 w g) passes standard_form_check. Empty means "not
// found within radius", never "does not exist". Every returned pair is
// certified through words_equal. Requires w nontrivial in F.
std::optional<std::pair<FWord, StandardForm>> standard_form_search(
    const FWord& w, std::uint32_t radius);

}  // namespace idemsplit
