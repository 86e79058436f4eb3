// Finite relational structures, the cycle-graph families and automorphisms.

#ifndef FLATTEAM_STRUCTURE_HPP
#define FLATTEAM_STRUCTURE_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatteam {

struct PropertyReport;

using ElemId = std::uint16_t;
using ElemTuple = std::vector<ElemId>;

class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Relation {
 public:
  Relation(std::size_t arity, std::size_t domain_size);

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return tuples_.size(); }
  const std::vector<ElemTuple>& tuples() const { return tuples_; }  // sorted

  bool contains(std::span<const ElemId> t) const;
  void insert(const ElemTuple& t);

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.arity_ == b.arity_ && a.tuples_ == b.tuples_;
  }

 private:
  std::size_t index(std::span<const ElemId> t) const;

  std::size_t arity_;
  std::size_t domain_size_;
  std::vector<ElemTuple> tuples_;
  std::vector<bool> table_;  // dense membership, |M|^arity bits
};

class Structure {
 public:
  explicit Structure(std::vector<std::string> domain);

  std::size_t size() const { return domain_.size(); }
  const std::vector<std::string>& domain() const { return domain_; }
  const std::string& element_name(ElemId e) const { return domain_.at(e); }
  std::optional<ElemId> element(const std::string& name) const;

  void add_relation(const std::string& name, std::size_t arity,
                    const std::vector<ElemTuple>& tuples = {});
  void add_tuple(const std::string& name, const ElemTuple& t);
  void set_constant(const std::string& name, ElemId e);

  const Relation* relation(const std::string& name) const;
  const std::map<std::string, Relation>& relations() const { return relations_; }
  std::optional<ElemId> constant(const std::string& name) const;
  const std::map<std::string, ElemId>& constants() const { return constants_; }

  friend bool operator==(const Structure&, const Structure&) = default;

 private:
  std::vector<std::string> domain_;
  std::map<std::string, ElemId> index_;
  std::map<std::string, Relation> relations_;
  std::map<std::string, ElemId> constants_;
};

// Model file format, line oriented:
//   domain: a b c
//   rel E/2: (a,b) (b,a)
//   const c0 = a
// Blank lines and '#' comments are ignored.
Structure parse_model(std::istream& in);
Structure parse_model_text(const std::string& text);
Structure load_model(const std::string& path);
std::string write_model(const Structure& s);

// Domain v0..v(L-1) with E = {(vi, vi+1 mod L)}, plus reversed edges when
// symmetric.
Structure gen_cycle(std::size_t length, bool symmetric);
// Two disjoint symmetric cycles of length 2^(n+1).
Structure gen_A(unsigned n);
// One symmetric cycle of length 2^(n+2).
Structure gen_B(unsigned n);

// Undirected reachability over a binary relation spans the domain.
bool is_connected(const Structure& s, const std::string& rel);

struct Permutation {
  std::vector<ElemId> image;

  static Permutation identity(std::size_t n);
  std::size_t size() const { return image.size(); }
  ElemId operator()(ElemId e) const { return image[e]; }
  bool is_identity() const;
  // (a.then(b))(e) == b(a(e))
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

bool is_automorphism(const Structure& s, const Permutation& p);

// All automorphisms in lexicographic order of their image vectors. Throws
// when the domain exceeds max_domain (the search is factorial).
std::vector<Permutation> automorphisms(const Structure& s, std::size_t max_domain = 8);

// Holds iff `maps` is closed under composition, contains the identity, and
// for every ordered pair m1 != m2 some member fixes m1 and moves m2. Throws
// StructureError if a member is not an automorphism of s.
PropertyReport check_magma_hypothesis(const Structure& s,
                                      const std::vector<Permutation>& maps);

}  // namespace flatteam

#endif  // FLATTEAM_STRUCTURE_HPP
