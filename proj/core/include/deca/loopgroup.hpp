#pragma once

#include "deca/chains.hpp"
#include "deca/sgroup.hpp"
#include "deca/sset.hpp"

namespace deca {

// Word in a free group: signed, 1-based generator indices.
struct Word {
  std::vector<int> letters;
  bool operator==(const Word& o) const { return letters == o.letters; }
};

Word free_reduce(const Word& w);
Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);
std::string show_word(const Word& w, const std::vector<std::string>& gens);

struct FpGroup {
  std::vector<std::string> gens;
  std::vector<Word> rels;
};

ValidationReport validate(const FpGroup& F);
AbelianGroup abelianization(const FpGroup& F);
// number of homomorphisms into H by exhaustive assignment
long hom_count(const FpGroup& F, const FiniteGroup& H, long guard = 50000000);

// Edge-path presentation of a one-vertex object: a generator per
// nondegenerate edge, a relator d_2 * d_0 * d_1^{-1} per nondegenerate
// 2-simplex. Requires truncation >= 2.
FpGroup fundamental_group(const SimplicialSet& X);

// Simplicial object in presented groups; structure maps send generators to
// words one level over.
struct PresentedSimplicialGroup {
  int truncation = -1;
  std::vector<FpGroup> level;
  std::vector<std::vector<std::vector<Word>>> face;  // face[n][i][gen]
  std::vector<std::vector<std::vector<Word>>> deg;
};

// Shape plus soundness of the simplicial identities on generators and of
// relator images. Word problems that do not resolve by free reduction or
// relator matching fall back to an abelianized membership test and are
// reported as notes ("inconclusive"), not failures.
ValidationReport validate(const PresentedSimplicialGroup& G);

// Loop construction through the shifted object: level n is the edge-path
// group of row n of the collapsed shift, with vertical maps inducing the
// group structure maps. Needs truncation >= 3; output truncation N - 3.
PresentedSimplicialGroup loop_group(const SimplicialSet& X);

// Classical free model on a reduced object: level n free on the
// nondegenerate part of X_{n+1}, with d_0[x] = [d_1 x][d_0 x]^{-1}.
// Output truncation N - 1.
PresentedSimplicialGroup free_loop_group(const SimplicialSet& X);

// coequalizer of the two bottom faces, as a presentation on level-0 gens
FpGroup pi0_sgroup(const PresentedSimplicialGroup& G);

// Normalized abelianized complex: basis gens not hit by a degeneracy,
// boundary the alternating sum of abelianized face words.
ChainComplex abelianized_moore(const PresentedSimplicialGroup& G);

}  // namespace deca
