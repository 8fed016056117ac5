#ifndef CROSSRES_PEIFFER_HPP
#define CROSSRES_PEIFFER_HPP

#include <array>

#include "crossres/rng.hpp"
#include "crossres/skeleton.hpp"

namespace crossres {

// Adjacent Peiffer pairing of two level-n Moore words, landing one level up:
//   F(x, y) = [s_n x, s_{n-1} y] [s_n y, s_n x]
// Its last face satisfies the boundary identity
//   d_{n+1} F(x, y) = [x, s_{n-1} d_n y] [y, x]
// exactly as reduced words; the companion returns that right-hand side.
Word pairing_adjacent(const Skeleton& sk, int n, const Word& x, const Word& y);
Word pairing_adjacent_boundary_formula(const Skeleton& sk, int n, const Word& x,
                                       const Word& y);

// Tower pairing of x in the level-m Moore kernel with y in the level-n one
// (1 <= m <= n), landing at level n+1: with S = s_n s_{n-1} ... s_m,
//   F(x, y) = prod_{k=0}^{n-m+1} [S x, s_{m-1+k} y]^{(-1)^k}
// (the final factor is [S x, s_n y]).  Its last face is, with
// S' = s_{n-1} ... s_m,
//   d_{n+1} F(x, y) = prod_{k=0}^{n-m} [S' x, s_{m-1+k} d_n y]^{(-1)^k}
//                     [S' x, y]^{(-1)^{n-m+1}}
// again exactly; the companion returns that product.
Word pairing_tower(const Skeleton& sk, int n, int m, const Word& x, const Word& y);
Word pairing_tower_boundary_formula(const Skeleton& sk, int n, int m, const Word& x,
                                    const Word& y);

// Generator [s_1 x^-1 s_0 x, s_1 y] of the degenerate part of the level-2
// Moore kernel, for x, y level-1 Moore words.  Always a level-2 Moore word.
Word q2_generator(const Skeleton& sk, const Word& x, const Word& y);

// Generator [u, v] of the first-dimensional Peiffer subgroup, for level-1
// words with d_0 u = 1 and d_1 v = 1.
Word p1_generator(const Skeleton& sk, const Word& u, const Word& v);

// The six generator families of the second-dimensional Peiffer subgroup, for
// x in the level-1 Moore kernel and y1, y2 in the level-2 one.  Each output
// is a level-2 Moore word.
std::array<Word, 6> p2_families(const Skeleton& sk, const Word& x, const Word& y1,
                                const Word& y2);

// Seeded samplers of Moore-kernel words.  Level 1 draws products of
// conjugated relator letters; level 2 draws products of conjugated identity
// letters, q2 generators, and adjacent pairings of level-1 samples.
Word sample_moore_word(const Skeleton& sk, int level, Rng& rng);
// Level-1 words in Ker d_1: products of conjugates of y_r s_0(d_1 y_r)^-1.
Word sample_kernel_d1_word(const Skeleton& sk, Rng& rng);

}  // namespace crossres

#endif
