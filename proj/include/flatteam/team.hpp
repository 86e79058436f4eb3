// Assignments and teams over a finite structure, plus the team algebra.

#ifndef FLATTEAM_TEAM_HPP
#define FLATTEAM_TEAM_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "flatteam/structure.hpp"

namespace flatteam {

class TeamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Assignment = std::map<std::string, ElemId>;
using Row = std::vector<ElemId>;

// A set of assignments over an ordered variable list. Rows are kept sorted
// and unique, so two teams with the same vars compare equal iff they hold the
// same assignments.
class Team {
 public:
  Team() = default;
  explicit Team(std::vector<std::string> vars, std::vector<Row> rows = {});

  // {∅}: the team holding only the empty assignment.
  static Team unit();

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  std::optional<std::size_t> var_index(const std::string& v) const;
  bool contains(const Row& r) const;
  Assignment assignment(std::size_t i) const;
  Team subteam(std::uint64_t mask) const;  // rows selected by bit i

  friend bool operator==(const Team&, const Team&) = default;
  friend auto operator<=>(const Team&, const Team&) = default;

 private:
  std::vector<std::string> vars_;
  std::vector<Row> rows_;
};

// { s[m/v] : s in X, m in M }. v is appended to the variable list if new.
Team duplicate(const Team& x, const std::string& v, const Structure& s);

// { s[m/v] : s in X, m in H(s) }. Every row needs a non-empty entry in h.
Team supplement(const Team& x, const std::string& v,
                const std::map<Assignment, std::set<ElemId>>& h);

std::set<ElemTuple> project_relation(const Team& x, const std::vector<std::string>& vars);

// { f o s : s in X, f in maps }
Team team_closure(const Team& x, const std::vector<Permutation>& maps);

// Every row over `vars`, in lexicographic order.
std::vector<Row> all_rows(const Structure& s, std::size_t nvars);

// Deterministic enumeration of the subsets of the full assignment space,
// in increasing bitmask order over all_rows().
class TeamEnumerator {
 public:
  static constexpr std::size_t kDefaultMaxRows = 12;

  TeamEnumerator(const Structure& s, std::vector<std::string> vars,
                 std::optional<std::size_t> size_cap = std::nullopt,
                 std::size_t max_rows = kDefaultMaxRows);

  std::size_t row_count() const { return rows_.size(); }
  // Fills `out` with the next team; false when exhausted.
  bool next(Team& out);

 private:
  std::vector<std::string> vars_;
  std::vector<Row> rows_;
  std::optional<std::size_t> size_cap_;
  std::uint64_t mask_ = 0;
  bool done_ = false;
};

std::vector<Team> enumerate_teams(const Structure& s, const std::vector<std::string>& vars,
                                  std::optional<std::size_t> size_cap = std::nullopt,
                                  std::size_t max_rows = TeamEnumerator::kDefaultMaxRows);

// Team file:  "vars: x y" then one "row: a b" line per assignment.
Team parse_team(std::istream& in, const Structure& s);
Team parse_team_text(const std::string& text, const Structure& s);
Team load_team(const std::string& path, const Structure& s);
std::string write_team(const Team& x, const Structure& s);

std::string describe_team(const Team& x, const Structure& s);

}  // namespace flatteam

#endif  // FLATTEAM_TEAM_HPP
