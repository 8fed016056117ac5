#include "crossres/coset_table.hpp"

#include <algorithm>
#include <deque>

namespace crossres {

namespace {

// Working state of the enumeration: 0-based cosets, columns 2g (generator g)
// and 2g+1 (its inverse), -1 for undefined.  Dead cosets point through the
// union-find `parent`.
struct Enumerator {
    int n_gens;
    int max_cosets;
    std::vector<std::vector<int>> table;
    std::vector<int> parent;
    int live = 0;

    explicit Enumerator(int gens, int bound) : n_gens(gens), max_cosets(bound) {
        new_coset();
    }

    static int inv(int col) { return col ^ 1; }

    int new_coset() {
        if (live + 1 > max_cosets) throw CosetOverflow(max_cosets);
        table.emplace_back(static_cast<std::size_t>(2 * n_gens), -1);
        parent.push_back(static_cast<int>(table.size()) - 1);
        ++live;
        return static_cast<int>(table.size()) - 1;
    }

    int rep(int c) {
        while (parent[c] != c) {
            parent[c] = parent[parent[c]];
            c = parent[c];
        }
        return c;
    }

    bool alive(int c) { return rep(c) == c; }

    void merge(int a, int b, std::deque<int>& queue) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        --live;
        queue.push_back(b);
    }

    void coincidence(int a, int b) {
        std::deque<int> queue;
        merge(a, b, queue);
        while (!queue.empty()) {
            int dead = queue.front();
            queue.pop_front();
            for (int col = 0; col < 2 * n_gens; ++col) {
                int delta = table[dead][col];
                if (delta < 0) continue;
                table[delta][inv(col)] = -1;
                int mu = rep(dead);
                int nu = rep(delta);
                if (table[mu][col] >= 0)
                    merge(nu, table[mu][col], queue);
                else if (table[nu][inv(col)] >= 0)
                    merge(mu, table[nu][inv(col)], queue);
                else {
                    table[mu][col] = nu;
                    table[nu][inv(col)] = mu;
                }
            }
        }
    }

    void define(int from, int col) {
        int fresh = new_coset();
        table[from][col] = fresh;
        table[fresh][inv(col)] = from;
    }

    // Scan relator `rel` (a sequence of columns) from coset `start`, filling
    // gaps with new cosets so the scan always closes.
    void scan_and_fill(int start, const std::vector<int>& rel) {
        if (rel.empty()) return;
        int f = start, b = start;
        int i = 0, j = static_cast<int>(rel.size()) - 1;
        for (;;) {
            while (i <= j && table[f][rel[static_cast<std::size_t>(i)]] >= 0) {
                f = table[f][rel[static_cast<std::size_t>(i)]];
                ++i;
            }
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && table[b][inv(rel[static_cast<std::size_t>(j)])] >= 0) {
                b = table[b][inv(rel[static_cast<std::size_t>(j)])];
                --j;
            }
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (j == i) {
                table[f][rel[static_cast<std::size_t>(i)]] = b;
                table[b][inv(rel[static_cast<std::size_t>(i)])] = f;
                return;
            }
            define(f, rel[static_cast<std::size_t>(i)]);
            f = table[f][rel[static_cast<std::size_t>(i)]];
            ++i;
        }
    }
};

}  // namespace

CosetTable CosetTable::enumerate(const Presentation& pres, int max_cosets) {
    if (max_cosets < 1) throw StructuralError("enumerate: max_cosets must be >= 1");
    const int n_gens = static_cast<int>(pres.generators.size());
    std::map<std::string, int> gen_index;
    for (int g = 0; g < n_gens; ++g) gen_index.emplace(pres.generators[static_cast<std::size_t>(g)], g);

    std::vector<std::vector<int>> relator_cols;
    for (const auto& [name, word] : pres.relators) {
        std::vector<int> cols;
        cols.reserve(word.size());
        for (const Letter& l : word.letters)
            cols.push_back(2 * gen_index.at(l.symbol.basis_id) + (l.exponent == 1 ? 0 : 1));
        relator_cols.push_back(std::move(cols));
    }

    Enumerator en(n_gens, max_cosets);
    for (int c = 0; c < static_cast<int>(en.table.size()); ++c) {
        if (!en.alive(c)) continue;
        for (const auto& rel : relator_cols) {
            en.scan_and_fill(c, rel);
            if (!en.alive(c)) break;
        }
        if (!en.alive(c)) continue;
        for (int col = 0; col < 2 * n_gens; ++col)
            if (en.table[c][col] < 0) en.define(c, col);
    }

    // Breadth-first renumbering from the identity coset; the tree edges give
    // canonical representative words.
    CosetTable out;
    out.n_gens_ = n_gens;
    for (int g = 0; g < n_gens; ++g) {
        out.gen_names_.push_back(pres.generators[static_cast<std::size_t>(g)]);
        out.gen_names_.push_back(pres.generators[static_cast<std::size_t>(g)] + "^-1");
    }

    std::vector<int> number(en.table.size(), 0);  // old (live rep) -> new 1-based
    std::vector<int> order;                       // new order of old indices
    std::deque<int> frontier;
    int start = en.rep(0);
    number[static_cast<std::size_t>(start)] = 1;
    order.push_back(start);
    out.reps_.push_back(Word::identity(0));
    frontier.push_back(start);
    while (!frontier.empty()) {
        int c = frontier.front();
        frontier.pop_front();
        for (int col = 0; col < 2 * n_gens; ++col) {
            int d = en.table[c][col];
            if (d < 0) throw StructuralError("enumerate: incomplete table after closure");
            d = en.rep(d);
            if (number[static_cast<std::size_t>(d)] != 0) continue;
            number[static_cast<std::size_t>(d)] = static_cast<int>(order.size()) + 1;
            order.push_back(d);
            GeneratorSymbol s{pres.generators[static_cast<std::size_t>(col / 2)], 0,
                              MonotoneSurjection::identity(0)};
            Word step{0, {Letter{s, col % 2 == 0 ? 1 : -1}}};
            out.reps_.push_back(
                multiply(out.reps_[static_cast<std::size_t>(number[static_cast<std::size_t>(c)]) - 1],
                         step));
            frontier.push_back(d);
        }
    }

    out.rows_.resize(order.size());
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
        auto& row = out.rows_[idx];
        row.resize(2 * static_cast<std::size_t>(n_gens));
        for (int col = 0; col < 2 * n_gens; ++col)
            row[static_cast<std::size_t>(col)] =
                number[static_cast<std::size_t>(en.rep(en.table[order[idx]][col]))];
    }
    return out;
}

int CosetTable::apply(int coset, int gen_index, int sign) const {
    if (coset < 1 || coset > size()) throw StructuralError("apply: coset index out of range");
    if (gen_index < 0 || gen_index >= n_gens_)
        throw StructuralError("apply: generator index out of range");
    int col = 2 * gen_index + (sign == 1 ? 0 : 1);
    return rows_[static_cast<std::size_t>(coset) - 1][static_cast<std::size_t>(col)];
}

int CosetTable::class_of(const Word& w) const {
    int c = 1;
    for (const Letter& l : w.letters) {
        if (l.symbol.birth_level != 0)
            throw StructuralError("class_of: letter '" + l.symbol.basis_id +
                                  "' is not a level-0 generator");
        auto it = std::find(gen_names_.begin(), gen_names_.end(), l.symbol.basis_id);
        if (it == gen_names_.end() || (it - gen_names_.begin()) % 2 != 0)
            throw StructuralError("class_of: unknown generator '" + l.symbol.basis_id + "'");
        c = apply(c, static_cast<int>(it - gen_names_.begin()) / 2, l.exponent);
    }
    return c;
}

int CosetTable::compose(int g, int h) const {
    const Word& w = representative(h);
    int c = g;
    for (const Letter& l : w.letters) {
        auto it = std::find(gen_names_.begin(), gen_names_.end(), l.symbol.basis_id);
        c = apply(c, static_cast<int>(it - gen_names_.begin()) / 2, l.exponent);
    }
    return c;
}

const Word& CosetTable::representative(int coset) const {
    if (coset < 1 || coset > size())
        throw StructuralError("representative: coset index out of range");
    return reps_[static_cast<std::size_t>(coset) - 1];
}

std::string CosetTable::dump() const {
    std::string out;
    for (std::size_t i = 0; i < gen_names_.size(); ++i) {
        if (i) out += '\t';
        out += gen_names_[i];
    }
    out += '\n';
    for (int c = 1; c <= size(); ++c) {
        const auto& row = rows_[static_cast<std::size_t>(c) - 1];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += '\t';
            out += std::to_string(row[i]);
        }
        out += '\n';
    }
    return out;
}

GroupRingElement GroupRingElement::unit(std::string basis_tag, int coset, int coeff) {
    GroupRingElement e{std::move(basis_tag), {}};
    if (coeff != 0) e.coeffs.emplace(coset, coeff);
    return e;
}

GroupRingElement ring_add(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.basis != b.basis)
        throw StructuralError("ring_add: basis tags '" + a.basis + "' and '" + b.basis +
                              "' differ");
    GroupRingElement out = a;
    for (const auto& [coset, coeff] : b.coeffs) {
        int c = (out.coeffs[coset] += coeff);
        if (c == 0) out.coeffs.erase(coset);
    }
    return out;
}

GroupRingElement ring_negate(const GroupRingElement& a) {
    GroupRingElement out{a.basis, {}};
    for (const auto& [coset, coeff] : a.coeffs) out.coeffs.emplace(coset, -coeff);
    return out;
}

GroupRingElement ring_act(const CosetTable& table, int g, const GroupRingElement& a) {
    GroupRingElement out{a.basis, {}};
    for (const auto& [coset, coeff] : a.coeffs) {
        int image = table.compose(g, coset);
        int c = (out.coeffs[image] += coeff);
        if (c == 0) out.coeffs.erase(image);
    }
    return out;
}

std::string render_ring_element(const CosetTable& table, const GroupRingElement& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [coset, coeff] : a.coeffs) {
        if (first)
            out += coeff < 0 ? "-" : "";
        else
            out += coeff < 0 ? " - " : " + ";
        int mag = coeff < 0 ? -coeff : coeff;
        if (mag != 1) out += std::to_string(mag) + "*";
        out += "[" + render_word(table.representative(coset)) + "]";
        first = false;
    }
    return out;
}

}  // namespace crossres
