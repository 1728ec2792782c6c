#pragma once

#include "dgakit/cochain.hpp"
#include "dgakit/cylinder.hpp"
#include "dgakit/graded.hpp"
#include "dgakit/morphism.hpp"
#include "dgakit/obstruction.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dgakit {

// Diagnostics only: locations never take part in AST equality.
struct SourceLocation {
  int line = 1;
  int column = 1;
  bool operator==(const SourceLocation&) const { return true; }
};

struct Factor {
  std::string name;  // a generator, or the cylinder symbols t and dt
  unsigned power = 1;
  bool operator==(const Factor&) const = default;
};

struct Term {
  Rational coefficient;
  std::vector<Factor> factors;  // in written order
  bool operator==(const Term&) const = default;
};

struct Expr {
  std::vector<Term> terms;  // empty for 0
  bool operator==(const Expr&) const = default;
};

struct GeneratorDecl {
  std::string name;
  int degree = 0;
  std::optional<int> weight;
  SourceLocation location;
  bool operator==(const GeneratorDecl&) const = default;
};

struct Assignment {
  std::string generator;
  Expr value;
  SourceLocation location;
  bool operator==(const Assignment&) const = default;
};

struct DgaDecl {
  std::string name;
  std::vector<GeneratorDecl> generators;
  std::optional<int> top;
  std::vector<Assignment> differentials;
  SourceLocation location;
  bool operator==(const DgaDecl&) const = default;
};

struct MorphismDecl {
  std::string name;
  std::string source;
  std::string target;
  std::vector<Assignment> images;
  SourceLocation location;
  bool operator==(const MorphismDecl&) const = default;
};

struct HomotopyDecl {
  std::string name;
  std::string source;
  std::string target;
  std::optional<std::string> from;  // morphism at t = 0
  std::optional<std::string> to;    // morphism at t = 1
  std::vector<Assignment> images;
  SourceLocation location;
  bool operator==(const HomotopyDecl&) const = default;
};

struct LedgerDecl {
  std::string name;
  std::string algebra;
  std::vector<std::pair<std::string, Rational>> weights;
  std::optional<Rational> theta;
  SourceLocation location;
  bool operator==(const LedgerDecl&) const = default;
};

struct ComplexDecl {
  std::string name;
  std::vector<Simplex> simplices;
  std::vector<Simplex> subcomplex;
  SourceLocation location;
  bool operator==(const ComplexDecl&) const = default;
};

using Declaration = std::variant<DgaDecl, MorphismDecl, HomotopyDecl, LedgerDecl, ComplexDecl>;

struct Presentation {
  std::vector<Declaration> declarations;
  bool operator==(const Presentation&) const = default;
};

// Throws SyntaxError with "line:column: expected ..., found ...".
Presentation parse_presentation(const std::string& source);
std::string print_presentation(const Presentation& p);
std::string print_declaration(const Declaration& d);
std::string print_expr(const Expr& e);

// Objects built from a presentation, by declaration name.
struct Workspace {
  std::map<std::string, FreeCDGA> algebras;
  std::map<std::string, Morphism> morphisms;
  std::map<std::string, Homotopy> homotopies;
  std::map<std::string, std::pair<std::optional<std::string>, std::optional<std::string>>> endpoints;
  std::map<std::string, WeightLedger> ledgers;
  std::map<std::string, std::string> ledger_algebra;
  std::map<std::string, SimplicialPair> complexes;
  std::vector<std::pair<std::string, std::string>> order;  // (kind, name) in declaration order

  const FreeCDGA& algebra(const std::string& name) const;
  const Morphism& morphism(const std::string& name) const;
  const Homotopy& homotopy(const std::string& name) const;
  const WeightLedger& ledger(const std::string& name) const;
  const SimplicialPair& complex(const std::string& name) const;
};

// Throws SemanticError for unknown or duplicate names and degree mismatches;
// algebraic failures (NonSquareZero, ...) keep their kind.
Workspace build_workspace(const Presentation& p);

Element evaluate(const FreeCDGA& A, const Expr& e);
CylinderElement evaluate_cylinder(const FreeCDGA& A, const Expr& e);

// AST of an existing algebra / element (canonical order).
DgaDecl describe_algebra(const std::string& name, const FreeCDGA& A);
Expr describe_element(const FreeCDGA& A, const Element& a);

}  // namespace dgakit
