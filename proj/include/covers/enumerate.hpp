// Copyright 2026 The covers Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exhaustive enumeration of index-n subgroups of the G3 and G5 groups.
//
// A finite-index subgroup D is determined by its essential triple
// (a, H, nu): a is the least positive z-exponent occurring in D, H is
// D intersected with Gamma = <x, y>, and nu is the coset of Gamma/H holding
// the Gamma-part of any element h z^a of D. Conversely every triple with
// a | n, [Gamma:H] = n/a, and H invariant under the z-action whenever
// 3 does not divide a, comes from exactly one subgroup. Conjugation acts
// on triples by closed formulas; conjugacy classes are its orbits.

#ifndef COVERS_ENUMERATE_HPP_
#define COVERS_ENUMERATE_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "covers/lattice.hpp"
#include "covers/words.hpp"

namespace covers {

// Isomorphism type of a subgroup (equivalently of the covering space).
enum class CoveringType { Z3, G2, G3, G5 };

std::string to_string(CoveringType t);
CoveringType ambient_type(GroupId g);
// G3 ambient admits {G3, Z3}; G5 admits all four.
bool is_admissible(GroupId g, CoveringType t);
std::vector<CoveringType> admissible_types(GroupId g);
void require_admissible(GroupId g, CoveringType t);

struct EssentialTriple {
  i64 a = 1;
  SublatticeHNF2 h;
  Vec2 nu;

  i64 index() const { return a * h.index(); }
  friend auto operator<=>(const EssentialTriple&, const EssentialTriple&) = default;
};

std::string to_string(const EssentialTriple& t);

// InvalidArgument unless t is an n-essential triple for g.
void validate(GroupId g, i64 n, const EssentialTriple& t);

// All n-essential triples, sorted by (a, H, nu).
std::vector<EssentialTriple> essential_triples(GroupId g, i64 n);

CoveringType classify(GroupId g, const EssentialTriple& t);

struct Generators {
  Word x;  // x^a            (first basis vector of H)
  Word y;  // x^mu y^b       (second basis vector of H)
  Word z;  // nu z^a
};

Generators reconstruct_generators(GroupId g, const EssentialTriple& t);

// Recovers (a, H, nu) from any finite generating set of a finite-index
// subgroup, using only word arithmetic. PreconditionError if the subgroup
// has infinite index.
EssentialTriple extract_triple(GroupId g, std::span<const Word> gens);

// Conjugation by one of x^{+-1}, y^{+-1}, z^{+-1} through the closed action
// formulas. InvalidArgument for any other word.
EssentialTriple conjugate_triple(GroupId g, const EssentialTriple& t, const Word& gen);

// Conjugation by an arbitrary word u = x^i y^j z^c in one closed step:
// H -> psi^c(H), nu -> psi^c(nu) + (I - psi^a)(i, j).
EssentialTriple conjugate_triple_by(GroupId g, const EssentialTriple& t, const Word& u);

// Conjugation by an arbitrary word, applied as a sequence of generator
// steps (z-steps first, then y, then x).
EssentialTriple conjugate_triple_stepwise(GroupId g, const EssentialTriple& t, const Word& u);

// Reference path: reconstruct generators, conjugate them as words, and
// re-extract the triple.
EssentialTriple conjugate_triple_slow(GroupId g, const EssentialTriple& t, const Word& u);

// Counts keyed by every admissible type of the ambient group (zeros kept).
using TypeCounts = std::map<CoveringType, i64>;

TypeCounts subgroup_counts(GroupId g, i64 n);

struct ConjugacyClass {
  CoveringType type;
  std::size_t representative;  // index of the smallest triple in the class
  std::size_t size;
};

struct OrbitDecomposition {
  GroupId group;
  i64 n;
  std::vector<EssentialTriple> triples;
  std::vector<std::size_t> class_of;  // parallel to triples
  std::vector<ConjugacyClass> classes;

  TypeCounts counts() const;
};

// Orbits of the conjugation action, explored by BFS with the generator
// order x, x^-1, y, y^-1, z, z^-1.
OrbitDecomposition conjugacy_classes(GroupId g, i64 n);
TypeCounts conjugacy_class_counts(GroupId g, i64 n);

// Subgroups of type t fixed by conjugation with u.
i64 fixed_triple_count(GroupId g, i64 n, const Word& u, CoveringType t);

// Orbits of type t under Lambda = <x, y, z^lambda_step> (the intermediate
// classes), and how many of them conjugation by u maps to themselves.
i64 partial_class_count(GroupId g, i64 n, CoveringType t, i64 lambda_step);
i64 fixed_partial_class_count(GroupId g, i64 n, const Word& u, CoveringType t,
                              i64 lambda_step);

// Orbit count of type t by Burnside's lemma over the finite quotient
// pi / <x^n, y^n, z^6>, which acts on index-n triples. InternalError if the
// average is not an integer.
i64 burnside_class_count(GroupId g, i64 n, CoveringType t);

}  // namespace covers

#endif  // COVERS_ENUMERATE_HPP_
