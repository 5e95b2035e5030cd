#pragma once

// Real subtype classification of simple (modality 0) germs: complex main
// type from corank, mu and the cubic shape, then the sign-refinement for
// A_k, D_4, D_k and E6.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "realclass/polyring.hpp"

namespace realclass {

enum class Family { A, D, E };

struct MainType {
  Family family = Family::A;
  int index = 1;

  static MainType A(int k) { return {Family::A, k}; }
  static MainType D(int k) { return {Family::D, k}; }
  static MainType E(int k) { return {Family::E, k}; }

  // Number of residual variables a germ of this type has.
  int corank() const;
  // Milnor number of the type.
  int milnor() const { return index; }
  // Whether the type splits into +/- real subtypes.
  bool has_sign() const;

  friend bool operator==(const MainType&, const MainType&) = default;
};

enum class Sign { None, Plus, Minus };

struct RealType {
  MainType main;
  Sign sign = Sign::None;

  friend bool operator==(const RealType&, const RealType&) = default;
};

std::string to_string(const MainType& t);
// "A4", "D5-", "E6+", "E7".
std::string to_string(const RealType& t);
// Inverse of to_string; nullopt on malformed or invalid (e.g. "A4+", "D3").
std::optional<RealType> parse_real_type(std::string_view text);

struct Step {
  std::string label;
  CoordChange change;
};

struct Report {
  RealType real_type;
  long mu = 0;
  int corank = 0;
  int inertia = 0;
  int determinacy = 0;
  Poly residual;     // in the first `corank` variables
  Poly normal_form;  // stabilized, in all variables
  std::vector<Step> change_log;
};

// The errors below are ClassificationError with the matching kind.
// CorankTooLarge for c >= 3, NotSimple outside the ADE list, Internal when
// shape and mu disagree.
MainType complex_type(const Poly& g, int c, long mu);

RealType classify_Ak(const Poly& g, int c);
// g is a residual in two variables. Optional logs receive the coordinate
// changes applied along the way.
RealType classify_D4(const Poly& g, std::vector<Step>* log = nullptr);
RealType classify_Dk(const Poly& g, int k, std::vector<Step>* log = nullptr);
RealType classify_E6(const Poly& g, std::vector<Step>* log = nullptr);

Report classify(const Poly& f);

// Normal form of `t` in vars[0..c) plus -x^2 for the next `lambda` variables
// and +x^2 for the rest. Throws std::invalid_argument when c does not match
// the type or lambda + c exceeds the number of variables.
Poly normal_form(const RealType& t, int lambda, const std::vector<std::string>& vars, int c);

}  // namespace realclass
