// The syntactic flattening of a formula, F rewrites, and the translation of
// the F case into a first-order formula over the team's relation.

#ifndef FLATTEAM_FLATTENING_HPP
#define FLATTEAM_FLATTENING_HPP

#include <string>
#include <vector>

#include "flatteam/analysis.hpp"
#include "flatteam/formula.hpp"
#include "flatteam/report.hpp"

namespace flatteam {

enum class ExclusionFlattening { Top, Inequality };

// Team atoms become TOP (exc may become the tuple inequality instead),
// literals and NE stay, F p becomes flatten(p), every other connective is
// kept with flattened children. Throws FormulaError on neg, vv and some.
Formula flatten(const Formula& f, ExclusionFlattening exc = ExclusionFlattening::Top);

// Pushes F through conjunctions and resolves it on atoms, first-order
// formulas and nested F. Leaves F in front of |, =>, E, A untouched.
Formula simplify_F(const Formula& f);

// Axiom 1: f entails candidate; axiom 2: candidate is flat; axiom 3:
// candidate has the connective skeleton of flatten(f) with each team atom
// replaced by some first-order formula. Counterexample on the first failure.
PropertyReport verify_flattening_axioms(const Formula& f, const Formula& candidate,
                                        const Universe& u, const CheckOptions& opts = {});

// A ys (!R(ys) | theta) where theta is psi_star with every s_name(ts)
// replaced by ys = ts. Throws FormulaError on arity mismatch or when a
// variable of ys already occurs in psi_star.
Formula translate_F_case(const Formula& psi_star, const std::vector<std::string>& xs,
                         const std::string& r_name, const std::vector<std::string>& ys,
                         const std::string& s_name = "S");

// Compares eval(X, F psi) with the Tarskian truth of translate_F_case at
// every row of X, with R interpreted as the projection of X on xs.
PropertyReport check_translation_biconditional(const Structure& s, const Team& x,
                                               const Formula& psi, const Formula& psi_star,
                                               const std::vector<std::string>& xs,
                                               const CheckOptions& opts = {});

}  // namespace flatteam

#endif  // FLATTEAM_FLATTENING_HPP
