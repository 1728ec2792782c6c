#include "dgakit/presentation.hpp"

#include "dgakit/errors.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace dgakit {

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  SourceLocation at;
};

const std::set<std::string> kReserved = {"d", "t", "dt", "gen", "top", "weight", "theta", "A"};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    SourceLocation at{line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
        ++j;
      out.push_back({Tok::Ident, src.substr(i, j - i), at});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, src.substr(i, j - i), at});
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Punct, "->", at});
      advance(2);
      continue;
    }
    if (std::string("{};:=+-*^/").find(c) != std::string::npos) {
      out.push_back({Tok::Punct, std::string(1, c), at});
      advance(1);
      continue;
    }
    fail("SyntaxError", std::to_string(line) + ":" + std::to_string(col) + ": unexpected character '" +
                            std::string(1, c) + "'");
  }
  out.push_back({Tok::End, "end of input", {line, col}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Presentation parse() {
    Presentation p;
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (is_word("dga")) {
        p.declarations.emplace_back(dga());
      } else if (is_word("morphism")) {
        p.declarations.emplace_back(morphism());
      } else if (is_word("homotopy")) {
        p.declarations.emplace_back(homotopy());
      } else if (is_word("ledger")) {
        p.declarations.emplace_back(ledger());
      } else if (is_word("complex")) {
        p.declarations.emplace_back(complex());
      } else {
        error(t, {"dga", "morphism", "homotopy", "ledger", "complex"});
      }
    }
    return p;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  bool is_punct(const std::string& p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Punct && peek(ahead).text == p;
  }
  bool is_word(const std::string& w) const { return peek().kind == Tok::Ident && peek().text == w; }

  [[noreturn]] void error(const Token& t, const std::vector<std::string>& expected) const {
    std::string list;
    for (std::size_t i = 0; i < expected.size(); ++i) list += (i ? ", '" : "'") + expected[i] + "'";
    const std::string found = t.kind == Tok::End ? t.text : "'" + t.text + "'";
    fail("SyntaxError", std::to_string(t.at.line) + ":" + std::to_string(t.at.column) + ": expected " +
                            (expected.size() > 1 ? "one of " : "") + list + ", found " + found);
  }

  void expect(const std::string& p) {
    if (!is_punct(p)) error(peek(), {p});
    next();
  }
  void expect_word(const std::string& w) {
    if (!is_word(w)) error(peek(), {w});
    next();
  }
  std::string ident() {
    if (peek().kind != Tok::Ident) error(peek(), {"identifier"});
    return next().text;
  }
  std::string name() {
    const Token& t = peek();
    std::string s = ident();
    if (kReserved.count(s))
      fail("SyntaxError", std::to_string(t.at.line) + ":" + std::to_string(t.at.column) + ": '" + s +
                              "' is reserved and cannot name a generator or declaration");
    return s;
  }
  long integer() {
    bool negative = false;
    if (is_punct("-")) {
      next();
      negative = true;
    }
    if (peek().kind != Tok::Number) error(peek(), {"integer"});
    const Token& t = next();
    if (t.text.size() > 9)
      fail("SyntaxError", std::to_string(t.at.line) + ":" + std::to_string(t.at.column) + ": integer too large");
    long v = std::stol(t.text);
    return negative ? -v : v;
  }
  Rational rational() {
    bool negative = false;
    if (is_punct("-")) {
      next();
      negative = true;
    }
    if (peek().kind != Tok::Number) error(peek(), {"number"});
    std::string text = next().text;
    if (is_punct("/")) {
      next();
      if (peek().kind != Tok::Number) error(peek(), {"denominator"});
      const Token& den = next();
      text += "/" + den.text;
      if (den.text.find_first_not_of('0') == std::string::npos)
        fail("SyntaxError", std::to_string(den.at.line) + ":" + std::to_string(den.at.column) + ": zero denominator");
    }
    Rational q = parse_rational(text);
    return negative ? Rational(-q) : q;
  }

  Factor factor() {
    Factor f{ident(), 1};
    if (is_punct("^") && peek(1).kind == Tok::Number) {
      next();
      long p = integer();
      if (p < 1) fail("SyntaxError", "exponent must be positive");
      f.power = static_cast<unsigned>(p);
    }
    return f;
  }

  Term term(bool negative) {
    Term t{Rational(negative ? -1 : 1), {}};
    if (peek().kind == Tok::Number) {
      t.coefficient *= rational();
      if (!is_punct("*")) return t;
      next();
    }
    t.factors.push_back(factor());
    while (is_punct("*") || is_punct("^")) {
      next();
      t.factors.push_back(factor());
    }
    return t;
  }

  Expr expr() {
    Expr e;
    bool negative = false;
    if (is_punct("-") || is_punct("+")) negative = next().text == "-";
    e.terms.push_back(term(negative));
    while (is_punct("+") || is_punct("-")) {
      negative = next().text == "-";
      e.terms.push_back(term(negative));
    }
    if (e.terms.size() == 1 && e.terms[0].factors.empty() && sgn(e.terms[0].coefficient) == 0) e.terms.clear();
    return e;
  }

  Assignment assignment() {
    Assignment a;
    a.location = peek().at;
    a.generator = name();
    expect("=");
    a.value = expr();
    expect(";");
    return a;
  }

  DgaDecl dga() {
    DgaDecl d;
    d.location = peek().at;
    expect_word("dga");
    d.name = name();
    expect("{");
    while (!is_punct("}")) {
      if (is_word("gen")) {
        next();
        GeneratorDecl g;
        g.location = peek().at;
        g.name = name();
        expect(":");
        g.degree = static_cast<int>(integer());
        if (is_word("weight")) {
          next();
          g.weight = static_cast<int>(integer());
        }
        expect(";");
        d.generators.push_back(std::move(g));
      } else if (is_word("top")) {
        next();
        d.top = static_cast<int>(integer());
        expect(";");
      } else if (is_word("d")) {
        next();
        d.differentials.push_back(assignment());
      } else {
        error(peek(), {"gen", "d", "top", "}"});
      }
    }
    expect("}");
    return d;
  }

  void arrow_signature(std::string& source, std::string& target) {
    expect(":");
    source = name();
    expect("->");
    target = name();
  }

  MorphismDecl morphism() {
    MorphismDecl m;
    m.location = peek().at;
    expect_word("morphism");
    m.name = name();
    arrow_signature(m.source, m.target);
    expect("{");
    while (!is_punct("}")) m.images.push_back(assignment());
    expect("}");
    return m;
  }

  HomotopyDecl homotopy() {
    HomotopyDecl h;
    h.location = peek().at;
    expect_word("homotopy");
    h.name = name();
    arrow_signature(h.source, h.target);
    if (is_word("from")) {
      next();
      h.from = name();
      expect_word("to");
      h.to = name();
    }
    expect("{");
    while (!is_punct("}")) h.images.push_back(assignment());
    expect("}");
    return h;
  }

  LedgerDecl ledger() {
    LedgerDecl l;
    l.location = peek().at;
    expect_word("ledger");
    l.name = name();
    expect(":");
    l.algebra = name();
    expect("{");
    while (!is_punct("}")) {
      if (is_word("theta")) {
        next();
        l.theta = rational();
        expect(";");
        continue;
      }
      std::string atom = name();
      expect("=");
      l.weights.emplace_back(atom, rational());
      expect(";");
    }
    expect("}");
    return l;
  }

  Simplex simplex() {
    Simplex s;
    while (peek().kind == Tok::Number) {
      long v = integer();
      s.push_back(static_cast<std::uint32_t>(v));
    }
    if (s.empty()) error(peek(), {"vertex index"});
    expect(";");
    return s;
  }

  ComplexDecl complex() {
    ComplexDecl c;
    c.location = peek().at;
    expect_word("complex");
    c.name = name();
    expect("{");
    while (!is_punct("}")) {
      if (is_word("A")) {
        next();
        expect("{");
        while (!is_punct("}")) c.subcomplex.push_back(simplex());
        expect("}");
        continue;
      }
      c.simplices.push_back(simplex());
    }
    expect("}");
    return c;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string loc(const SourceLocation& at) { return std::to_string(at.line) + ":" + std::to_string(at.column) + ": "; }

[[noreturn]] void semantic(const SourceLocation& at, const std::string& msg) { fail("SemanticError", loc(at) + msg); }

void print_simplex(std::ostringstream& out, const Simplex& s) {
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
  out << ";";
}

}  // namespace

Presentation parse_presentation(const std::string& source) { return Parser(lex(source)).parse(); }

std::string print_expr(const Expr& e) {
  if (e.terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    const Term& t = e.terms[i];
    const bool negative = sgn(t.coefficient) < 0;
    if (i == 0) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += to_string(abs(t.coefficient));
    for (std::size_t j = 0; j < t.factors.size(); ++j) {
      out += j == 0 ? " * " : " ^ ";
      out += t.factors[j].name;
      if (t.factors[j].power != 1) out += "^" + std::to_string(t.factors[j].power);
    }
  }
  return out;
}

std::string print_declaration(const Declaration& decl) {
  std::ostringstream out;
  std::visit(
      [&](const auto& d) {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, DgaDecl>) {
          out << "dga " << d.name << " {\n";
          for (const auto& g : d.generators) {
            out << "  gen " << g.name << " : " << g.degree;
            if (g.weight) out << " weight " << *g.weight;
            out << ";\n";
          }
          if (d.top) out << "  top " << *d.top << ";\n";
          for (const auto& a : d.differentials) out << "  d " << a.generator << " = " << print_expr(a.value) << ";\n";
          out << "}\n";
        } else if constexpr (std::is_same_v<D, MorphismDecl>) {
          out << "morphism " << d.name << " : " << d.source << " -> " << d.target << " {\n";
          for (const auto& a : d.images) out << "  " << a.generator << " = " << print_expr(a.value) << ";\n";
          out << "}\n";
        } else if constexpr (std::is_same_v<D, HomotopyDecl>) {
          out << "homotopy " << d.name << " : " << d.source << " -> " << d.target;
          if (d.from) out << " from " << *d.from << " to " << *d.to;
          out << " {\n";
          for (const auto& a : d.images) out << "  " << a.generator << " = " << print_expr(a.value) << ";\n";
          out << "}\n";
        } else if constexpr (std::is_same_v<D, LedgerDecl>) {
          out << "ledger " << d.name << " : " << d.algebra << " {\n";
          for (const auto& [atom, w] : d.weights) out << "  " << atom << " = " << to_string(w) << ";\n";
          if (d.theta) out << "  theta " << to_string(*d.theta) << ";\n";
          out << "}\n";
        } else {
          out << "complex " << d.name << " {\n";
          for (const auto& s : d.simplices) {
            out << "  ";
            print_simplex(out, s);
            out << "\n";
          }
          if (!d.subcomplex.empty()) {
            out << "  A {\n";
            for (const auto& s : d.subcomplex) {
              out << "    ";
              print_simplex(out, s);
              out << "\n";
            }
            out << "  }\n";
          }
          out << "}\n";
        }
      },
      decl);
  return out.str();
}

std::string print_presentation(const Presentation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.declarations.size(); ++i) {
    if (i) out += "\n";
    out += print_declaration(p.declarations[i]);
  }
  return out;
}

Element evaluate(const FreeCDGA& A, const Expr& e) {
  Element out;
  for (const auto& t : e.terms) {
    Element term = Element::constant(t.coefficient);
    for (const auto& f : t.factors) {
      auto index = A.index_of(f.name);
      if (!index) fail("UnknownGenerator", "'" + f.name + "' is not a generator");
      term = A.multiply(term, A.power(A.gen(*index), f.power));
    }
    out += term;
  }
  return out;
}

CylinderElement evaluate_cylinder(const FreeCDGA& A, const Expr& e) {
  CylinderElement out;
  for (const auto& t : e.terms) {
    CylinderElement term = CylinderElement::constant(Element::constant(t.coefficient));
    for (const auto& f : t.factors) {
      CylinderElement factor;
      if (f.name == "t") {
        factor = CylinderElement::term(Element::constant(1), f.power, false);
      } else if (f.name == "dt") {
        if (f.power > 1) {
          term = CylinderElement();
          break;
        }
        factor = CylinderElement::term(Element::constant(1), 0, true);
      } else {
        auto index = A.index_of(f.name);
        if (!index) fail("UnknownGenerator", "'" + f.name + "' is not a generator");
        factor = CylinderElement::constant(A.power(A.gen(*index), f.power));
      }
      term = cyl_multiply(A, term, factor);
    }
    out += term;
  }
  return out;
}

namespace {

template <class T>
const T& lookup(const std::map<std::string, T>& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) fail("SemanticError", std::string("no ") + what + " named '" + name + "'");
  return it->second;
}

// Evaluates with unknown names and inhomogeneous degrees reported at `at`.
template <class F>
decltype(auto) at_location(const SourceLocation& at, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    if (e.kind() == "UnknownGenerator" || e.kind() == "NotHomogeneous" || e.kind() == "DegreeMismatch" ||
        e.kind() == "InvalidGenerator" || e.kind() == "AlgebraMismatch")
      semantic(at, e.what());
    fail(e.kind(), loc(at) + e.detail());
  }
  __builtin_unreachable();
}

std::vector<std::uint32_t> assignment_indices(const FreeCDGA& S, const std::vector<Assignment>& images,
                                              const std::string& what) {
  std::vector<std::uint32_t> idx;
  std::set<std::uint32_t> seen;
  for (const auto& a : images) {
    auto i = S.index_of(a.generator);
    if (!i) semantic(a.location, "'" + a.generator + "' is not a generator of the source of " + what);
    if (!seen.insert(*i).second) semantic(a.location, "'" + a.generator + "' assigned twice in " + what);
    idx.push_back(*i);
  }
  for (std::uint32_t k = 0; k < idx.size(); ++k)
    if (!seen.count(k))
      semantic(images.empty() ? SourceLocation{} : images.back().location,
               what + " must assign the first " + std::to_string(idx.size()) + " source generators");
  return idx;
}

}  // namespace

const FreeCDGA& Workspace::algebra(const std::string& name) const { return lookup(algebras, name, "dga"); }
const Morphism& Workspace::morphism(const std::string& name) const { return lookup(morphisms, name, "morphism"); }
const Homotopy& Workspace::homotopy(const std::string& name) const { return lookup(homotopies, name, "homotopy"); }
const WeightLedger& Workspace::ledger(const std::string& name) const { return lookup(ledgers, name, "ledger"); }
const SimplicialPair& Workspace::complex(const std::string& name) const {
  return lookup(complexes, name, "complex");
}

Workspace build_workspace(const Presentation& p) {
  Workspace ws;
  std::set<std::string> names;
  auto declare = [&](const std::string& kind, const std::string& name, const SourceLocation& at) {
    if (!names.insert(name).second) semantic(at, "'" + name + "' is declared twice");
    ws.order.emplace_back(kind, name);
  };
  for (const auto& decl : p.declarations) {
    if (const auto* d = std::get_if<DgaDecl>(&decl)) {
      declare("dga", d->name, d->location);
      std::vector<Generator> gens;
      std::set<std::string> seen;
      for (const auto& g : d->generators) {
        if (!seen.insert(g.name).second) semantic(g.location, "generator '" + g.name + "' declared twice");
        if (g.degree < 0) semantic(g.location, "negative degree for '" + g.name + "'");
        gens.push_back({g.name, g.degree, g.weight});
      }
      AlgebraOptions opts;
      opts.top_degree = d->top;
      const FreeCDGA bare = at_location(d->location, [&] {
        return FreeCDGA::make(gens, std::vector<Element>(gens.size()), opts);
      });
      std::vector<Element> diffs(gens.size());
      std::set<std::string> assigned;
      for (const auto& a : d->differentials) {
        auto i = bare.index_of(a.generator);
        if (!i) semantic(a.location, "d of undeclared generator '" + a.generator + "'");
        if (!assigned.insert(a.generator).second) semantic(a.location, "d " + a.generator + " given twice");
        diffs[*i] = at_location(a.location, [&] { return evaluate(bare, a.value); });
        auto deg = at_location(a.location, [&] { return bare.degree(diffs[*i]); });
        if (deg && *deg != gens[*i].degree + 1)
          semantic(a.location, "d " + a.generator + " has degree " + std::to_string(*deg) + ", expected " +
                                   std::to_string(gens[*i].degree + 1));
      }
      ws.algebras.emplace(d->name, at_location(d->location, [&] { return FreeCDGA::make(gens, diffs, opts); }));
    } else if (const auto* m = std::get_if<MorphismDecl>(&decl)) {
      declare("morphism", m->name, m->location);
      const FreeCDGA& S = at_location(m->location, [&]() -> const FreeCDGA& { return ws.algebra(m->source); });
      const FreeCDGA& T = at_location(m->location, [&]() -> const FreeCDGA& { return ws.algebra(m->target); });
      auto idx = assignment_indices(S, m->images, "morphism " + m->name);
      std::vector<Element> images(idx.size());
      for (std::size_t k = 0; k < idx.size(); ++k) {
        const auto& a = m->images[k];
        Element e = at_location(a.location, [&] { return evaluate(T, a.value); });
        auto deg = at_location(a.location, [&] { return T.degree(e); });
        if (deg && *deg != S.degree(idx[k]))
          semantic(a.location, "image of " + a.generator + " has degree " + std::to_string(*deg) + ", expected " +
                                   std::to_string(S.degree(idx[k])));
        images[idx[k]] = std::move(e);
      }
      ws.morphisms.emplace(m->name, at_location(m->location, [&] { return Morphism::make(S, T, images); }));
    } else if (const auto* h = std::get_if<HomotopyDecl>(&decl)) {
      declare("homotopy", h->name, h->location);
      const FreeCDGA& S = at_location(h->location, [&]() -> const FreeCDGA& { return ws.algebra(h->source); });
      const FreeCDGA& T = at_location(h->location, [&]() -> const FreeCDGA& { return ws.algebra(h->target); });
      for (const auto& end : {h->from, h->to})
        if (end) {
          const Morphism& f = at_location(h->location, [&]() -> const Morphism& { return ws.morphism(*end); });
          if (!f.source().same_presentation(S) || !f.target().same_presentation(T))
            semantic(h->location, "endpoint '" + *end + "' has a different source or target");
        }
      auto idx = assignment_indices(S, h->images, "homotopy " + h->name);
      std::vector<CylinderElement> images(idx.size());
      for (std::size_t k = 0; k < idx.size(); ++k) {
        const auto& a = h->images[k];
        CylinderElement u = at_location(a.location, [&] { return evaluate_cylinder(T, a.value); });
        auto deg = at_location(a.location, [&] { return cyl_degree(T, u); });
        if (deg && *deg != S.degree(idx[k]))
          semantic(a.location, "image of " + a.generator + " has degree " + std::to_string(*deg) + ", expected " +
                                   std::to_string(S.degree(idx[k])));
        images[idx[k]] = std::move(u);
      }
      ws.homotopies.emplace(h->name, at_location(h->location, [&] { return Homotopy::make(S, T, images); }));
      ws.endpoints[h->name] = {h->from, h->to};
    } else if (const auto* l = std::get_if<LedgerDecl>(&decl)) {
      declare("ledger", l->name, l->location);
      const FreeCDGA& T = at_location(l->location, [&]() -> const FreeCDGA& { return ws.algebra(l->algebra); });
      std::map<std::string, Rational> weights;
      for (const auto& g : T.generators())
        if (g.weight) weights[g.name] = Rational(*g.weight);
      for (const auto& [atom, w] : l->weights) {
        if (!T.index_of(atom)) semantic(l->location, "'" + atom + "' is not a generator of " + l->algebra);
        weights[atom] = w;
      }
      ws.ledgers.emplace(l->name, WeightLedger(weights, l->theta.value_or(Rational(0))));
      ws.ledger_algebra[l->name] = l->algebra;
    } else if (const auto* c = std::get_if<ComplexDecl>(&decl)) {
      declare("complex", c->name, c->location);
      ws.complexes.emplace(c->name, at_location(c->location, [&] {
                             try {
                               return SimplicialPair::make(c->simplices, c->subcomplex);
                             } catch (const DomainError& e) {
                               semantic(c->location, e.what());
                             }
                           }));
    }
  }
  return ws;
}

Expr describe_element(const FreeCDGA& A, const Element& a) {
  Expr e;
  for (const auto& [m, c] : a.terms()) {
    Term t{c, {}};
    for (const auto& [g, p] : m.factors()) t.factors.push_back({A.generators()[g].name, p});
    e.terms.push_back(std::move(t));
  }
  return e;
}

DgaDecl describe_algebra(const std::string& name, const FreeCDGA& A) {
  DgaDecl d;
  d.name = name;
  for (const auto& g : A.generators()) d.generators.push_back({g.name, g.degree, g.weight, {}});
  d.top = A.options().top_degree;
  for (std::uint32_t i = 0; i < A.size(); ++i)
    if (!A.d_of(i).is_zero()) d.differentials.push_back({A.generators()[i].name, describe_element(A, A.d_of(i)), {}});
  return d;
}

}  // namespace dgakit
