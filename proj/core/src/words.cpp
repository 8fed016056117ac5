#include "crossres/words.hpp"

#include <cstdlib>

namespace crossres {

Word reduce(int level, std::vector<Letter> raw) {
    std::vector<Letter> stack;
    stack.reserve(raw.size());
    for (Letter& l : raw) {
        if (l.symbol.level() != level)
            throw StructuralError("reduce: letter '" + l.symbol.basis_id + "' at level " +
                                  std::to_string(l.symbol.level()) + ", expected " +
                                  std::to_string(level));
        if (l.exponent != 1 && l.exponent != -1)
            throw StructuralError("reduce: letter exponent must be +1 or -1");
        if (!stack.empty() && stack.back().symbol == l.symbol &&
            stack.back().exponent == -l.exponent) {
            stack.pop_back();
        } else {
            stack.push_back(std::move(l));
        }
    }
    return Word{level, std::move(stack)};
}

Word multiply(const Word& u, const Word& v) {
    if (u.level != v.level)
        throw StructuralError("multiply: words at levels " + std::to_string(u.level) + " and " +
                              std::to_string(v.level));
    std::vector<Letter> cat = u.letters;
    cat.insert(cat.end(), v.letters.begin(), v.letters.end());
    return reduce(u.level, std::move(cat));
}

Word invert(const Word& u) {
    Word out;
    out.level = u.level;
    out.letters.reserve(u.size());
    for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
        out.letters.push_back(Letter{it->symbol, -it->exponent});
    return out;
}

Word conjugate(const Word& g, const Word& f) {
    return multiply(multiply(g, f), invert(g));
}

Word commutator(const Word& u, const Word& v) {
    return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

Word power(const Word& u, int n) {
    Word base = n < 0 ? invert(u) : u;
    Word acc = Word::identity(u.level);
    for (int k = std::abs(n); k > 0; --k) acc = multiply(acc, base);
    return acc;
}

std::string render_symbol(const GeneratorSymbol& s) {
    std::string out;
    std::vector<int> ops = decompose_to_degeneracies(s.history);
    for (int i : ops) {
        out += 's';
        out += std::to_string(i);
        out += '(';
    }
    out += s.basis_id;
    out.append(ops.size(), ')');
    return out;
}

std::string render_word(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    std::size_t p = 0;
    while (p < w.size()) {
        std::size_t q = p;
        while (q + 1 < w.size() && w.letters[q + 1] == w.letters[p]) ++q;
        int exp = w.letters[p].exponent * static_cast<int>(q - p + 1);
        if (!out.empty()) out += ' ';
        out += render_symbol(w.letters[p].symbol);
        if (exp != 1) out += "^" + std::to_string(exp);
        p = q + 1;
    }
    return out;
}

}  // namespace crossres
