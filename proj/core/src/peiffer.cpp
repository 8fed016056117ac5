#include "crossres/peiffer.hpp"

namespace crossres {

namespace {

void require_moore(const Skeleton& sk, const Word& w, int level, const char* role) {
    if (w.level != level)
        throw ValidationError(std::string(role) + " must be a level-" + std::to_string(level) +
                              " word, got level " + std::to_string(w.level));
    if (!sk.moore_member(w))
        throw ValidationError(std::string(role) + " is not a level-" + std::to_string(level) +
                              " Moore word: " + render_word(w));
}

// s_hi s_{hi-1} ... s_lo applied to w (s_lo first); identity when lo > hi.
Word degeneracy_run(const Skeleton& sk, int lo, int hi, const Word& w) {
    Word out = w;
    for (int i = lo; i <= hi; ++i) out = sk.degeneracy(i, out);
    return out;
}

}  // namespace

Word pairing_adjacent(const Skeleton& sk, int n, const Word& x, const Word& y) {
    if (n < 1 || n + 1 > sk.max_level())
        throw ValidationError("pairing_adjacent: level " + std::to_string(n + 1) +
                              " out of range");
    require_moore(sk, x, n, "pairing_adjacent: x");
    require_moore(sk, y, n, "pairing_adjacent: y");
    Word sx = sk.degeneracy(n, x);
    Word sy = sk.degeneracy(n, y);
    Word sy_low = sk.degeneracy(n - 1, y);
    return multiply(commutator(sx, sy_low), commutator(sy, sx));
}

Word pairing_adjacent_boundary_formula(const Skeleton& sk, int n, const Word& x,
                                       const Word& y) {
    Word s_dy = sk.degeneracy(n - 1, sk.face(n, y));
    return multiply(commutator(x, s_dy), commutator(y, x));
}

Word pairing_tower(const Skeleton& sk, int n, int m, const Word& x, const Word& y) {
    if (m < 1 || n < m || n + 1 > sk.max_level())
        throw ValidationError("pairing_tower: needs 1 <= m <= n and n+1 <= max_level");
    require_moore(sk, x, m, "pairing_tower: x");
    require_moore(sk, y, n, "pairing_tower: y");
    Word lift = degeneracy_run(sk, m, n, x);  // level n+1
    Word out = Word::identity(n + 1);
    for (int k = 0; k <= n - m + 1; ++k) {
        Word factor = commutator(lift, sk.degeneracy(m - 1 + k, y));
        out = multiply(out, k % 2 == 0 ? factor : invert(factor));
    }
    return out;
}

Word pairing_tower_boundary_formula(const Skeleton& sk, int n, int m, const Word& x,
                                    const Word& y) {
    Word lift = degeneracy_run(sk, m, n - 1, x);  // level n
    Word dy = sk.face(n, y);
    Word out = Word::identity(n);
    for (int k = 0; k <= n - m; ++k) {
        Word factor = commutator(lift, sk.degeneracy(m - 1 + k, dy));
        out = multiply(out, k % 2 == 0 ? factor : invert(factor));
    }
    Word last = commutator(lift, y);
    return multiply(out, (n - m + 1) % 2 == 0 ? last : invert(last));
}

Word q2_generator(const Skeleton& sk, const Word& x, const Word& y) {
    require_moore(sk, x, 1, "q2_generator: x");
    require_moore(sk, y, 1, "q2_generator: y");
    Word left = multiply(invert(sk.degeneracy(1, x)), sk.degeneracy(0, x));
    return commutator(left, sk.degeneracy(1, y));
}

Word p1_generator(const Skeleton& sk, const Word& u, const Word& v) {
    if (u.level != 1 || v.level != 1)
        throw ValidationError("p1_generator: inputs must be level-1 words");
    if (!sk.face(0, u).empty())
        throw ValidationError("p1_generator: u is not in Ker d0: " + render_word(u));
    if (!sk.face(1, v).empty())
        throw ValidationError("p1_generator: v is not in Ker d1: " + render_word(v));
    return commutator(u, v);
}

std::array<Word, 6> p2_families(const Skeleton& sk, const Word& x, const Word& y1,
                                const Word& y2) {
    require_moore(sk, x, 1, "p2_families: x");
    require_moore(sk, y1, 2, "p2_families: y1");
    require_moore(sk, y2, 2, "p2_families: y2");

    Word s0x = sk.degeneracy(0, x);
    Word s1x = sk.degeneracy(1, x);
    Word d1x = sk.face(1, x);
    Word d2y1 = sk.face(2, y1);
    Word d2y2 = sk.face(2, y2);

    // y s_1(d_2 y)^-1 s_0(d_2 y): kills both d_1 and d_2.
    Word twisted_y1 = multiply(multiply(y1, invert(sk.degeneracy(1, d2y1))),
                               sk.degeneracy(0, d2y1));
    Word peeled_y1 = multiply(sk.degeneracy(1, d2y1), invert(y1));
    Word peeled_y2 = multiply(sk.degeneracy(1, d2y2), invert(y2));

    std::array<Word, 6> out = {
        commutator(multiply(invert(s0x), sk.degeneracy(1, sk.degeneracy(0, d1x))), y1),
        commutator(multiply(invert(s1x), s0x), peeled_y1),
        commutator(twisted_y1, s1x),
        commutator(multiply(invert(y1), sk.degeneracy(1, d2y1)), y2),
        commutator(twisted_y1, y2),
        commutator(twisted_y1, peeled_y2),
    };
    for (std::size_t f = 0; f < out.size(); ++f)
        if (!sk.moore_member(out[f]))
            throw StructuralError("p2_families: family " + std::to_string(f + 1) +
                                  " left the Moore kernel");
    return out;
}

Word sample_moore_word(const Skeleton& sk, int level, Rng& rng) {
    if (level == 1) {
        const auto& relators = sk.data().presentation.relators;
        if (relators.empty()) return Word::identity(1);
        int terms = 1 + rng.geometric(3, 2);
        Word out = Word::identity(1);
        for (int t = 0; t < terms; ++t) {
            Word conj = sk.sample_word(1, rng, 4);
            Word y = sk.generator(relators[static_cast<std::size_t>(
                                                rng.below(static_cast<int>(relators.size())))]
                                      .first);
            if (rng.coin()) y = invert(y);
            out = multiply(out, conjugate(conj, y));
        }
        return out;
    }
    if (level == 2) {
        const auto& identities = sk.data().identities;
        int terms = 1 + rng.geometric(3, 1);
        Word out = Word::identity(2);
        for (int t = 0; t < terms; ++t) {
            Word conj = sk.sample_word(2, rng, 3);
            Word term;
            int kind = rng.below(identities.empty() ? 2 : 3);
            if (kind == 0) {
                term = q2_generator(sk, sample_moore_word(sk, 1, rng),
                                    sample_moore_word(sk, 1, rng));
            } else if (kind == 1) {
                term = pairing_adjacent(sk, 1, sample_moore_word(sk, 1, rng),
                                        sample_moore_word(sk, 1, rng));
            } else {
                Word y = sk.generator(identities[static_cast<std::size_t>(rng.below(
                                                     static_cast<int>(identities.size())))]
                                          .first);
                if (rng.coin()) y = invert(y);
                term = y;
            }
            out = multiply(out, conjugate(conj, term));
        }
        return out;
    }
    throw StructuralError("sample_moore_word: only levels 1 and 2 are supported");
}

Word sample_kernel_d1_word(const Skeleton& sk, Rng& rng) {
    const auto& relators = sk.data().presentation.relators;
    if (relators.empty()) return Word::identity(1);
    int terms = 1 + rng.geometric(3, 2);
    Word out = Word::identity(1);
    for (int t = 0; t < terms; ++t) {
        const auto& [name, relator] = relators[static_cast<std::size_t>(
            rng.below(static_cast<int>(relators.size())))];
        Word y = sk.generator(name);
        Word gen = multiply(y, invert(sk.degeneracy(0, relator)));
        if (rng.coin()) gen = invert(gen);
        out = multiply(out, conjugate(sk.sample_word(1, rng, 4), gen));
    }
    return out;
}

}  // namespace crossres
