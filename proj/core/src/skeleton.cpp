#include "crossres/skeleton.hpp"

#include <algorithm>
#include <set>

namespace crossres {

namespace {

void check_presentation(const Presentation& p) {
    std::set<std::string> names;
    for (const auto& g : p.generators) {
        if (g.empty()) throw ValidationError("empty generator name");
        if (!names.insert(g).second)
            throw ValidationError("duplicate generator name '" + g + "'");
    }
    std::set<std::string> rnames;
    for (const auto& [name, word] : p.relators) {
        if (!rnames.insert(name).second)
            throw ValidationError("duplicate relator name '" + name + "'");
        if (word.level != 0)
            throw ValidationError("relator '" + name + "' is not a level-0 word");
        for (const Letter& l : word.letters) {
            if (l.symbol.birth_level != 0 || !names.count(l.symbol.basis_id))
                throw ValidationError("relator '" + name + "' uses unknown generator '" +
                                      l.symbol.basis_id + "'");
        }
    }
}

}  // namespace

Skeleton Skeleton::build(ConstructionData data, int max_level) {
    if (max_level < 0 || max_level > kMaxSupportedLevel)
        throw ValidationError("max_level must be between 0 and " +
                              std::to_string(kMaxSupportedLevel));
    check_presentation(data.presentation);

    Skeleton sk;
    sk.data_ = std::move(data);
    sk.max_level_ = max_level;
    for (const auto& [name, word] : sk.data_.presentation.relators)
        sk.relator_words_.emplace(name, word);

    // Identity words are validated below once level-1 faces are available;
    // their letters are checked first.
    std::set<std::string> inames;
    for (const auto& [name, word] : sk.data_.identities) {
        if (!inames.insert(name).second)
            throw ValidationError("duplicate identity name '" + name + "'");
        if (word.level != 1)
            throw ValidationError("identity '" + name + "' is not a level-1 word");
        for (const Letter& l : word.letters) {
            if (l.symbol.birth_level == 0) {
                bool known = std::count(sk.data_.presentation.generators.begin(),
                                        sk.data_.presentation.generators.end(),
                                        l.symbol.basis_id) > 0;
                if (!known)
                    throw ValidationError("identity '" + name + "' uses unknown generator '" +
                                          l.symbol.basis_id + "'");
            } else if (l.symbol.birth_level == 1) {
                if (!sk.relator_words_.count(l.symbol.basis_id))
                    throw ValidationError("identity '" + name + "' uses unknown relator '" +
                                          l.symbol.basis_id + "'");
            } else {
                throw ValidationError("identity '" + name + "' has a letter above level 1");
            }
        }
        sk.identity_words_.emplace(name, word);
    }

    // Basis tables: all (birth element, history) pairs with history an
    // increasing surjection from the level onto the birth level.
    sk.tables_.resize(static_cast<std::size_t>(max_level) + 1);
    for (int n = 0; n <= max_level; ++n) {
        auto& table = sk.tables_[static_cast<std::size_t>(n)];
        for (const auto& g : sk.data_.presentation.generators)
            for (auto& t : enumerate_surjections(n, 0))
                table.push_back(GeneratorSymbol{g, 0, t});
        if (n >= 1)
            for (const auto& [name, word] : sk.data_.presentation.relators)
                for (auto& t : enumerate_surjections(n, 1))
                    table.push_back(GeneratorSymbol{name, 1, t});
        if (n >= 2)
            for (const auto& [name, word] : sk.data_.identities)
                for (auto& t : enumerate_surjections(n, 2))
                    table.push_back(GeneratorSymbol{name, 2, t});
    }

    // Both faces of every identity word must vanish, whatever the cap.
    for (const auto& [name, word] : sk.data_.identities) {
        for (int i = 0; i <= 1; ++i) {
            Word img = sk.face_impl(i, word);
            if (!img.empty())
                throw ValidationError("identity '" + name + "' has nontrivial face d" +
                                      std::to_string(i) + " = " + render_word(img));
        }
    }
    return sk;
}

std::span<const GeneratorSymbol> Skeleton::basis(int level) const {
    if (level < 0 || level > max_level_)
        throw StructuralError("basis: level " + std::to_string(level) + " out of range");
    return tables_[static_cast<std::size_t>(level)];
}

bool Skeleton::in_basis(const GeneratorSymbol& s) const {
    int n = s.level();
    if (n < 0 || n > max_level_) return false;
    const auto& table = tables_[static_cast<std::size_t>(n)];
    return std::find(table.begin(), table.end(), s) != table.end();
}

const Word* Skeleton::attached_word(int birth_level, const std::string& basis_id) const {
    const std::map<std::string, Word>* m = nullptr;
    if (birth_level == 1)
        m = &relator_words_;
    else if (birth_level == 2)
        m = &identity_words_;
    else
        return nullptr;
    auto it = m->find(basis_id);
    return it == m->end() ? nullptr : &it->second;
}

Word Skeleton::generator(const std::string& basis_id) const {
    int birth = -1;
    for (const auto& g : data_.presentation.generators)
        if (g == basis_id) birth = 0;
    if (birth < 0 && relator_words_.count(basis_id)) birth = 1;
    if (birth < 0 && identity_words_.count(basis_id)) birth = 2;
    if (birth < 0) throw StructuralError("unknown basis element '" + basis_id + "'");
    GeneratorSymbol s{basis_id, birth, MonotoneSurjection::identity(birth)};
    return Word{birth, {Letter{std::move(s), 1}}};
}

Word Skeleton::face(int i, const Word& w) const {
    if (w.level > max_level_)
        throw StructuralError("face: no faces at level " + std::to_string(w.level));
    return face_impl(i, w);
}

Word Skeleton::face_impl(int i, const Word& w) const {
    int n = w.level;
    if (n < 1) throw StructuralError("face: no faces at level " + std::to_string(n));
    if (i < 0 || i > n) throw StructuralError("face: index out of range");

    std::vector<Letter> out;
    for (const Letter& l : w.letters) {
        FaceClassification c = compose_delta(l.symbol.history, i);
        switch (c.kind) {
            case FaceClassification::Kind::Surjective:
                out.push_back(Letter{GeneratorSymbol{l.symbol.basis_id, l.symbol.birth_level,
                                                     std::move(c.map)},
                                     l.exponent});
                break;
            case FaceClassification::Kind::LastCoface: {
                const Word* theta = attached_word(l.symbol.birth_level, l.symbol.basis_id);
                if (!theta)
                    throw StructuralError("face: no attached word for '" + l.symbol.basis_id +
                                          "'");
                Word img = apply_surjection(c.map, *theta);
                if (l.exponent == -1) img = invert(img);
                out.insert(out.end(), img.letters.begin(), img.letters.end());
                break;
            }
            case FaceClassification::Kind::OtherCoface:
                break;  // the letter dies
        }
    }
    return reduce(n - 1, std::move(out));
}

Word Skeleton::degeneracy(int i, const Word& w) const {
    int n = w.level;
    if (n + 1 > max_level_)
        throw StructuralError("degeneracy: level " + std::to_string(n + 1) +
                              " exceeds max_level " + std::to_string(max_level_));
    if (i < 0 || i > n) throw StructuralError("degeneracy: index out of range");
    return apply_surjection(MonotoneSurjection::codegeneracy(n, i), w);
}

Word Skeleton::apply_surjection(const MonotoneSurjection& t, const Word& w) const {
    if (t.codomain() != w.level)
        throw StructuralError("apply_surjection: codomain does not match word level");
    int target = t.domain_size() - 1;
    if (target > max_level_)
        throw StructuralError("apply_surjection: target level exceeds max_level");
    std::vector<Letter> out;
    out.reserve(w.size());
    for (const Letter& l : w.letters) {
        MonotoneSurjection h;
        h.values.reserve(t.values.size());
        for (int x = 0; x < t.domain_size(); ++x) h.values.push_back(l.symbol.history(t(x)));
        out.push_back(
            Letter{GeneratorSymbol{l.symbol.basis_id, l.symbol.birth_level, std::move(h)},
                   l.exponent});
    }
    return reduce(target, std::move(out));
}

bool Skeleton::moore_member(const Word& w) const {
    if (w.level < 1) throw StructuralError("moore_member: level must be >= 1");
    for (int i = 0; i < w.level; ++i)
        if (!face(i, w).empty()) return false;
    return true;
}

Word Skeleton::moore_boundary(const Word& w) const { return face(w.level, w); }

bool Skeleton::verify_identity(const Word& w) const {
    if (w.level != 1) throw StructuralError("verify_identity: expects a level-1 word");
    return face(0, w).empty() && face(1, w).empty();
}

Word Skeleton::sample_word(int level, Rng& rng, int max_len) const {
    auto table = basis(level);
    if (table.empty()) return Word::identity(level);
    int len = rng.geometric(8, max_len);
    std::vector<Letter> raw;
    raw.reserve(static_cast<std::size_t>(len));
    for (int k = 0; k < len; ++k) {
        const GeneratorSymbol& s = table[static_cast<std::size_t>(rng.below(
            static_cast<int>(table.size())))];
        raw.push_back(Letter{s, rng.coin() ? 1 : -1});
    }
    return reduce(level, std::move(raw));
}

CwBasisReport cw_basis_check(const Skeleton& sk) {
    std::vector<std::vector<GeneratorSymbol>> tables;
    for (int n = 0; n <= sk.max_level(); ++n) {
        auto span = sk.basis(n);
        tables.emplace_back(span.begin(), span.end());
    }
    return cw_basis_check_tables(sk, tables);
}

CwBasisReport cw_basis_check_tables(const Skeleton& sk,
                                    const std::vector<std::vector<GeneratorSymbol>>& tables) {
    CwBasisReport report;
    for (std::size_t n = 0; n < tables.size(); ++n) {
        const auto& table = tables[n];
        report.symbols_checked += static_cast<int>(table.size());

        // (a) free generation: no duplicate symbols.
        std::set<GeneratorSymbol> seen;
        for (const auto& s : table)
            if (!seen.insert(s).second)
                report.violations.push_back("(a) duplicate symbol " + render_symbol(s) +
                                            " at level " + std::to_string(n));

        // (b) closure under degeneracies.
        if (n + 1 < tables.size()) {
            const auto& above = tables[n + 1];
            for (const auto& s : table) {
                for (int i = 0; i <= static_cast<int>(n); ++i) {
                    GeneratorSymbol d{s.basis_id, s.birth_level,
                                      compose_alpha(s.history, i)};
                    if (std::find(above.begin(), above.end(), d) == above.end())
                        report.violations.push_back(
                            "(b) missing degeneracy " + render_symbol(d) + " of " +
                            render_symbol(s) + " at level " + std::to_string(n + 1));
                }
            }
        }

        // (c) non-degenerate elements above level 0 have all faces except the
        // last trivial; in particular they lie in the Moore complex.
        for (const auto& s : table) {
            if (n == 0 || s.degenerate()) continue;
            Word w{static_cast<int>(n), {Letter{s, 1}}};
            for (int i = 0; i < static_cast<int>(n); ++i) {
                Word img = sk.face(i, w);
                if (!img.empty())
                    report.violations.push_back("(c) face d" + std::to_string(i) + " of " +
                                                render_symbol(s) + " = " + render_word(img));
            }
        }
    }
    return report;
}

namespace {

void record(IdentitySuiteReport& r, bool ok, const std::string& what) {
    ++r.checks;
    if (!ok) {
        ++r.failures;
        if (r.witnesses.size() < 5) r.witnesses.push_back(what);
    }
}

void check_identities_on(const Skeleton& sk, const Word& w, IdentitySuiteReport& r) {
    int n = w.level;
    int max = sk.max_level();

    // d_i d_j = d_{j-1} d_i for i < j.
    if (n >= 2)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                record(r, sk.face(i, sk.face(j, w)) == sk.face(j - 1, sk.face(i, w)),
                       "d" + std::to_string(i) + " d" + std::to_string(j) + " at level " +
                           std::to_string(n) + " on " + render_word(w));

    if (n + 1 <= max) {
        for (int j = 0; j <= n; ++j) {
            Word sj = sk.degeneracy(j, w);
            // d_j s_j = id = d_{j+1} s_j.
            record(r, sk.face(j, sj) == w,
                   "d" + std::to_string(j) + " s" + std::to_string(j) + " at level " +
                       std::to_string(n) + " on " + render_word(w));
            record(r, sk.face(j + 1, sj) == w,
                   "d" + std::to_string(j + 1) + " s" + std::to_string(j) + " at level " +
                       std::to_string(n) + " on " + render_word(w));
            // d_i s_j = s_{j-1} d_i for i < j.
            if (n >= 1)
                for (int i = 0; i < j; ++i)
                    record(r, sk.face(i, sj) == sk.degeneracy(j - 1, sk.face(i, w)),
                           "d" + std::to_string(i) + " s" + std::to_string(j) + " at level " +
                               std::to_string(n) + " on " + render_word(w));
            // d_i s_j = s_j d_{i-1} for i > j + 1.
            if (n >= 1)
                for (int i = j + 2; i <= n + 1; ++i)
                    record(r, sk.face(i, sj) == sk.degeneracy(j, sk.face(i - 1, w)),
                           "d" + std::to_string(i) + " s" + std::to_string(j) + " at level " +
                               std::to_string(n) + " on " + render_word(w));
        }
    }

    // s_i s_j = s_{j+1} s_i for i <= j.
    if (n + 2 <= max)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                record(r, sk.degeneracy(i, sk.degeneracy(j, w)) ==
                              sk.degeneracy(j + 1, sk.degeneracy(i, w)),
                       "s" + std::to_string(i) + " s" + std::to_string(j) + " at level " +
                           std::to_string(n) + " on " + render_word(w));
}

}  // namespace

IdentitySuiteReport simplicial_identity_suite(const Skeleton& sk, int trials,
                                              std::uint64_t seed) {
    IdentitySuiteReport report;
    Rng rng(seed);
    for (int n = 0; n <= sk.max_level(); ++n) {
        for (const auto& s : sk.basis(n))
            check_identities_on(sk, Word{n, {Letter{s, 1}}}, report);
        for (int t = 0; t < trials; ++t)
            check_identities_on(sk, sk.sample_word(n, rng), report);
    }
    return report;
}

}  // namespace crossres
