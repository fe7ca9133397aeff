#pragma once

// Parsing and classification of textual JSJ descriptions of knot exteriors.
//
// DSL:
//   file := 'knot' STRING '{' stmt* '}'
//   stmt := 'piece' ID '=' kind ';' | 'glue' ID '--' ID ';' | 'root' ID ';'
//   kind := 'torus_knot(' INT ',' INT ')' | 'cable(' INT ',' INT ')'
//         | 'composing(' INT ')' | 'hyperbolic(' STRING ')' | 'torus_i'
// Comments run from '#' to end of line.  Exactly one root statement is
// required.  The description is validated structurally (tree shape,
// parameter ranges); realizability as an actual knot exterior is not
// checked.

#include <string>
#include <string_view>
#include <vector>

#include "knotgt/torsion.hpp"

namespace knotgt::jsj {

enum class PieceType { TorusKnot, Cable, Composing, Hyperbolic, TorusI };

struct PieceKind {
  PieceType type;
  Int p;                // torus_knot, cable
  Int q;
  Int strands;          // composing
  std::string label;    // hyperbolic

  static PieceKind torus_knot(Int p, Int q);
  static PieceKind cable(Int p, Int q);
  static PieceKind composing(Int strands);
  static PieceKind hyperbolic(std::string label);
  static PieceKind torus_i();

  friend bool operator==(const PieceKind&, const PieceKind&) = default;
};

struct JsjTree {
  std::string name;
  std::vector<std::pair<std::string, PieceKind>> nodes;  // (id, kind)
  std::vector<std::pair<std::string, std::string>> edges;
  std::string root;
};

// Structural validation: unique ids, known endpoints, connected, acyclic,
// existing root.  Throws InvalidArgument on violations.
void validate(const JsjTree& tree);

JsjTree parse_jsj(std::string_view text);
std::string print_jsj(const JsjTree& tree);

// Torus knot space: p or q even.  Cable space: p even.  Throws on other kinds.
bool even_type(const PieceKind& piece);

enum class GtKnowledge { Yes, Unknown };

struct PieceWitness {
  std::string piece;
  torsion::OrderTwo certificate;  // re-verified before inclusion
};

// Truth table backed by the classification theorems for knot exteriors:
// unique roots hold iff no torus knot or cable piece occurs; that class
// coincides with the normalizer-equals-centralizer class; an order-two
// generalized torsion element exists iff some Seifert piece is of even type.
struct Classification {
  bool is_R = false;
  bool is_Rbar = false;
  bool has_order_two_gt = false;
  GtKnowledge has_any_gt = GtKnowledge::Unknown;
  std::vector<PieceWitness> witnesses;
};

Classification classify(const JsjTree& tree);

// Canonical JSON rendering of a classification (elements printed in the
// generator-word grammar); byte-stable for golden comparisons.
std::string classification_json(const JsjTree& tree, const Classification& c);

}  // namespace knotgt::jsj
