#include "crossres/simplicial_maps.hpp"

#include <numeric>

#include "crossres/errors.hpp"

namespace crossres {

MonotoneSurjection MonotoneSurjection::identity(int n) {
    if (n < 0) throw StructuralError("identity surjection needs n >= 0");
    MonotoneSurjection t;
    t.values.resize(static_cast<std::size_t>(n) + 1);
    std::iota(t.values.begin(), t.values.end(), 0);
    return t;
}

MonotoneSurjection MonotoneSurjection::codegeneracy(int n, int i) {
    if (n < 0 || i < 0 || i > n)
        throw StructuralError("codegeneracy alpha_i^n needs 0 <= i <= n");
    MonotoneSurjection t;
    t.values.reserve(static_cast<std::size_t>(n) + 2);
    for (int x = 0; x <= n + 1; ++x) t.values.push_back(x <= i ? x : x - 1);
    return t;
}

bool MonotoneSurjection::well_formed() const {
    if (values.empty()) return false;
    if (values.front() != 0) return false;
    for (std::size_t p = 1; p < values.size(); ++p) {
        int step = values[p] - values[p - 1];
        if (step != 0 && step != 1) return false;
    }
    return true;
}

std::vector<MonotoneSurjection> enumerate_surjections(int m, int n) {
    if (m < 0 || n < 0) throw StructuralError("enumerate_surjections needs m, n >= 0");
    std::vector<MonotoneSurjection> out;
    if (m < n) return out;
    // A surjection [m] -> [n] is a choice of n unit steps among the m gaps.
    // Recurse on the step pattern to emit value sequences lexicographically.
    MonotoneSurjection cur;
    cur.values.assign(1, 0);
    auto rec = [&](auto&& self, int pos, int val) -> void {
        if (pos == m) {
            if (val == n) out.push_back(cur);
            return;
        }
        int remaining = m - pos;
        // step 0 keeps val; step 1 increments.  Prune when n is unreachable.
        if (n - val <= remaining - 1) {
            cur.values.push_back(val);
            self(self, pos + 1, val);
            cur.values.pop_back();
        }
        if (val + 1 <= n) {
            cur.values.push_back(val + 1);
            self(self, pos + 1, val + 1);
            cur.values.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

FaceClassification compose_delta(const MonotoneSurjection& t, int i) {
    int n = t.domain_size() - 1;
    int k = t.codomain();
    if (n < 1) throw StructuralError("compose_delta: domain must be [n] with n >= 1");
    if (i < 0 || i > n) throw StructuralError("compose_delta: face index out of range");

    MonotoneSurjection u;
    u.values.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x <= n - 1; ++x) u.values.push_back(t(x < i ? x : x + 1));

    // u can miss at most one value of [k]; find it.
    int missed = -1;
    int prev = -1;
    for (int v : u.values) {
        if (v > prev + 1) missed = prev + 1;
        prev = v;
    }
    if (prev < k) missed = k;

    if (missed < 0)
        return {FaceClassification::Kind::Surjective, -1, std::move(u)};

    MonotoneSurjection tp;
    tp.values.reserve(u.values.size());
    for (int v : u.values) tp.values.push_back(v < missed ? v : v - 1);
    auto kind = (missed == k) ? FaceClassification::Kind::LastCoface
                              : FaceClassification::Kind::OtherCoface;
    return {kind, missed, std::move(tp)};
}

MonotoneSurjection compose_alpha(const MonotoneSurjection& t, int i) {
    int n = t.domain_size() - 1;
    if (i < 0 || i > n) throw StructuralError("compose_alpha: degeneracy index out of range");
    MonotoneSurjection u;
    u.values.reserve(static_cast<std::size_t>(n) + 2);
    for (int x = 0; x <= n + 1; ++x) u.values.push_back(t(x <= i ? x : x - 1));
    return u;
}

std::vector<int> decompose_to_degeneracies(const MonotoneSurjection& t) {
    std::vector<int> word;
    for (int x = t.domain_size() - 2; x >= 0; --x)
        if (t(x) == t(x + 1)) word.push_back(x);
    return word;
}

}  // namespace crossres
