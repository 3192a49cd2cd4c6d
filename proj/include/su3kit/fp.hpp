#pragma once
// Finitely presented groups: words over named generators, relator checking
// against matrix assignments, and Todd-Coxeter coset enumeration certifying
// the order of a presented group.
//
// Text format for presentations (whitespace-separated tokens, sections split
// by ';'):
//
//   presentation := gens-section (';' rel-section)* [';']
//   gens-section := 'gens:' name+
//   rel-section  := 'rel:' term+
//   term         := name ['^' signed-int]
//
// Example: "gens: h1 h3; rel: h1^2; rel: h3^3; rel: h1 h3 h1 h3"

#include <map>
#include <string>
#include <vector>

#include "su3kit/mat3.hpp"

namespace su3kit::fp {

// A word is a flat sequence of signed 1-based generator letters: +j is
// generator j-1, -j its inverse, composed left to right.
using Word = std::vector<int>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

// Matrix images keyed by generator name.
using GenAssignment = std::map<std::string, Mat3>;

Presentation parse_presentation(const std::string& text);

// Parse a standalone word ("h3 c18 h3^-1") over p's generators.
Word parse_word(const Presentation& p, const std::string& text);

// Render a word back to text, run-length compressed ("c18^-6 c6").
std::string format_word(const Presentation& p, const Word& w);

// Ordered product of letter images; throws usage_error on an unassigned
// generator.
Mat3 eval_word(const Presentation& p, const GenAssignment& a, const Word& w);

// All relators that do not evaluate to the identity (empty means the
// assignment satisfies the presentation).
std::vector<Word> check_presentation(const Presentation& p,
                                     const GenAssignment& a);

bool verify_identity(const Presentation& p, const GenAssignment& a,
                     const Word& lhs, const Word& rhs);
bool verify_identity(const Presentation& p, const GenAssignment& a,
                     const std::string& lhs, const std::string& rhs);

// Order of the presented group by HLT coset enumeration over the trivial
// subgroup, with immediate coincidence handling and lowest-index filling.
// Throws cap_exceeded when the live-coset count passes `cap` (the
// presentation may then define a larger or infinite group; a successful
// enumeration may need a cap well above the final order).
int todd_coxeter(const Presentation& p, int cap = 5000);

// The bundled presentations with their catalog matrix assignments.
Presentation fr162x4_presentation();  // C6, C18, H1, H3 -- order 648
GenAssignment fr162x4_assignment();
Presentation d_action_presentation();  // F, F', F'', E, Btilde -- order 648
GenAssignment d_action_assignment();
Presentation fr162_presentation();  // A, B, H1, H3 (corrected) -- order 162
GenAssignment fr162_assignment();

}  // namespace su3kit::fp
