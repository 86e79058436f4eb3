// Concrete syntax for team-logic formulas.
//
//   atoms     R(t,..)  !R(t,..)  t=t  t!=t  TOP  BOT  NE
//             dep(t,..;t)  const(t)  anon(t,..;t)  nonconst(t)
//             inc(t,..;t,..)  exc(t,..;t,..)  ind(t,..;t,..;t,..)
//   prefixes  F  neg  some  !           (tightest)
//   infix     &  |  =>  vv              (tight to loose; => is right-assoc)
//   binders   E x. body   A x. body     (body extends as far right as possible)
//
// Terms are variables (bare identifiers) or constants (#name).

#ifndef FLATTEAM_PARSER_HPP
#define FLATTEAM_PARSER_HPP

#include <string>
#include <string_view>

#include "flatteam/formula.hpp"

namespace flatteam {

class ParseError : public FormulaError {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Formula parse_formula(std::string_view text);

std::string render(const Formula& f);
std::string render(const Term& t);

}  // namespace flatteam

#endif  // FLATTEAM_PARSER_HPP
