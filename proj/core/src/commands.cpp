#include "crossres/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "crossres/crossed.hpp"
#include "crossres/parser.hpp"
#include "crossres/peiffer.hpp"

namespace crossres {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string pass_line(const std::string& label, int ok, int total) {
    return label + ": " + (ok == total ? "pass" : "FAIL") + " (" + std::to_string(ok) + "/" +
           std::to_string(total) + ")\n";
}

int cmd_validate(const Skeleton& sk, std::ostream& out) {
    const auto& data = sk.data();
    out << "generators:";
    for (const auto& g : data.presentation.generators) out << ' ' << g;
    out << "\nrelators:";
    for (const auto& [name, w] : data.presentation.relators) out << ' ' << name;
    out << "\nidentities:";
    for (const auto& [name, w] : data.identities) out << ' ' << name;
    out << '\n';
    for (const auto& [name, w] : data.identities)
        out << "identity " << name << ": ok (d0 = 1, d1 = 1)\n";
    CwBasisReport cw = cw_basis_check(sk);
    if (cw.passed()) {
        out << "cw-basis: pass (symbols: " << cw.symbols_checked << ", levels 0.."
            << sk.max_level() << ")\n";
    } else {
        out << "cw-basis: FAIL\n";
        for (const auto& v : cw.violations) out << "  " << v << '\n';
    }
    out << "pi1-generation: unchecked hypothesis (identities verified as members only)\n";
    out << "status: " << (cw.passed() ? "ok" : "fail") << '\n';
    return cw.passed() ? 0 : 1;
}

int cmd_skeleton(const Skeleton& sk, const CommandOptions& opts, std::ostream& out) {
    for (int n = 0; n <= sk.max_level(); ++n) {
        out << "level " << n << ":";
        for (const auto& s : sk.basis(n)) out << ' ' << render_symbol(s);
        out << '\n';
    }
    IdentitySuiteReport suite = simplicial_identity_suite(sk, opts.suite_trials, opts.seed);
    out << "simplicial-identities: " << (suite.passed() ? "pass" : "FAIL")
        << " (checks: " << suite.checks << ", failures: " << suite.failures
        << ", trials: " << opts.suite_trials << ", seed: " << opts.seed << ")\n";
    for (const auto& w : suite.witnesses) out << "  counterexample: " << w << '\n';
    out << "status: " << (suite.passed() ? "ok" : "fail") << '\n';
    return suite.passed() ? 0 : 1;
}

int cmd_moore(const Skeleton& sk, const CommandOptions& opts, std::ostream& out) {
    if (opts.level < 1 || opts.level > sk.max_level())
        throw ValidationError("moore needs --level between 1 and " +
                              std::to_string(sk.max_level()));
    Word w = parse_word(opts.word, opts.level, sk.data());
    out << "word: " << render_word(w) << '\n';
    out << "level: " << opts.level << '\n';
    bool member = sk.moore_member(w);
    out << "moore-member: " << (member ? "yes" : "no") << '\n';
    if (member) {
        out << "boundary: " << render_word(sk.moore_boundary(w)) << '\n';
    } else {
        for (int i = 0; i < opts.level; ++i) {
            Word img = sk.face(i, w);
            if (!img.empty()) {
                out << "first-nontrivial-face: d" << i << " = " << render_word(img) << '\n';
                break;
            }
        }
    }
    out << "status: ok\n";
    return 0;
}

int cmd_peiffer(const Skeleton& sk, const CommandOptions& opts, std::ostream& out) {
    if (opts.dim != 1 && opts.dim != 2) throw ValidationError("peiffer needs --dim 1 or 2");
    out << "dim: " << opts.dim << '\n';
    out << "samples: " << opts.samples << " (seed " << opts.seed << ")\n";
    Rng rng(opts.seed);
    bool all_ok = true;

    if (opts.dim == 1) {
        int pre_ok = 0, bd_ok = 0;
        for (int k = 0; k < opts.samples; ++k) {
            Word u = sample_moore_word(sk, 1, rng);
            Word v = sample_kernel_d1_word(sk, rng);
            Word p = p1_generator(sk, u, v);  // validates the kernel preconditions
            ++pre_ok;
            if (sk.face(1, p).empty()) ++bd_ok;
        }
        out << pass_line("p1-kernel-preconditions", pre_ok, opts.samples);
        out << pass_line("p1-boundary-trivial", bd_ok, opts.samples);
        all_ok = pre_ok == opts.samples && bd_ok == opts.samples;
        out << "status: " << (all_ok ? "ok" : "fail") << '\n';
        return all_ok ? 0 : 1;
    }

    for (int n = 1; n <= 2; ++n) {
        int ok = 0;
        for (int k = 0; k < opts.samples; ++k) {
            Word x = sample_moore_word(sk, n, rng);
            Word y = sample_moore_word(sk, n, rng);
            Word f = pairing_adjacent(sk, n, x, y);
            if (sk.face(n + 1, f) == pairing_adjacent_boundary_formula(sk, n, x, y)) ++ok;
        }
        out << pass_line("adjacent-boundary n=" + std::to_string(n), ok, opts.samples);
        all_ok = all_ok && ok == opts.samples;
    }
    {
        int ok = 0;
        for (int k = 0; k < opts.samples; ++k) {
            Word x = sample_moore_word(sk, 1, rng);
            Word y = sample_moore_word(sk, 2, rng);
            Word f = pairing_tower(sk, 2, 1, x, y);
            if (sk.face(3, f) == pairing_tower_boundary_formula(sk, 2, 1, x, y)) ++ok;
        }
        out << pass_line("tower-boundary n=2 m=1", ok, opts.samples);
        all_ok = all_ok && ok == opts.samples;
    }

    const CosetTable* table = nullptr;
    CosetTable stored;
    try {
        stored = CosetTable::enumerate(sk.data().presentation, opts.max_cosets);
        table = &stored;
    } catch (const CosetOverflow&) {
    }
    std::string skipped = ": skipped (coset enumeration overflowed at " +
                          std::to_string(opts.max_cosets) + ")\n";
    {
        int member_ok = 0, zero_ok = 0;
        for (int k = 0; k < opts.samples; ++k) {
            Word q = q2_generator(sk, sample_moore_word(sk, 1, rng),
                                  sample_moore_word(sk, 1, rng));
            if (sk.moore_member(q)) ++member_ok;
            if (table && c2_normal_form(sk, *table, q).is_zero()) ++zero_ok;
        }
        out << pass_line("q2-moore-membership", member_ok, opts.samples);
        if (table)
            out << pass_line("q2-normal-form-zero", zero_ok, opts.samples);
        else
            out << "q2-normal-form-zero" << skipped;
        all_ok = all_ok && member_ok == opts.samples && (!table || zero_ok == opts.samples);
    }
    {
        int member_ok = 0, zero_ok = 0;
        int total = 0;
        for (int k = 0; k < opts.samples; ++k) {
            auto fams = p2_families(sk, sample_moore_word(sk, 1, rng),
                                    sample_moore_word(sk, 2, rng),
                                    sample_moore_word(sk, 2, rng));
            for (const Word& f : fams) {
                ++total;
                if (sk.moore_member(f)) ++member_ok;
                if (table && c2_normal_form(sk, *table, f).is_zero()) ++zero_ok;
            }
        }
        out << pass_line("p2-moore-membership", member_ok, total);
        if (table)
            out << pass_line("p2-normal-form-zero", zero_ok, total);
        else
            out << "p2-normal-form-zero" << skipped;
        all_ok = all_ok && member_ok == total && (!table || zero_ok == total);
    }
    out << "status: " << (all_ok ? "ok" : "fail") << '\n';
    return all_ok ? 0 : 1;
}

int cmd_cosets(const Skeleton& sk, const CommandOptions& opts, std::ostream& out) {
    CosetTable table = CosetTable::enumerate(sk.data().presentation, opts.max_cosets);
    out << "cosets: " << table.size() << '\n';
    if (opts.dump) out << table.dump();
    out << "status: ok\n";
    return 0;
}

int cmd_crossed_complex(const Skeleton& sk, const CommandOptions& opts, std::ostream& out) {
    const CosetTable* table = nullptr;
    CosetTable stored;
    try {
        stored = CosetTable::enumerate(sk.data().presentation, opts.max_cosets);
        table = &stored;
    } catch (const CosetOverflow&) {
    }
    CrossedComplexReport report =
        crossed_complex(sk, table, opts.samples, opts.seed, opts.max_cosets);

    out << "C0: free group on:";
    for (const auto& g : report.c0_basis) out << ' ' << g;
    out << "\nC1: free crossed module on:";
    for (const auto& r : report.c1_basis) out << ' ' << r;
    out << '\n';
    if (report.c2_basis.empty()) {
        out << "C2: (none - no construction data)\n";
    } else {
        out << "C2: free G-module on:";
        for (const auto& i : report.c2_basis) out << ' ' << i;
        out << '\n';
    }
    for (const auto& [name, word] : report.d1_table) out << "d1 " << name << " = " << word << '\n';
    for (const auto& [name, word] : report.d2_table) out << "d2 " << name << " = " << word << '\n';
    if (!report.c2_basis.empty())
        out << "d1.d2-trivial: " << (report.d1_d2_trivial ? "yes" : "NO") << '\n';
    if (report.has_table)
        out << "G-order: " << report.group_order << '\n';
    else
        out << "G-order: unavailable (coset enumeration overflowed at " << report.overflow_bound
            << ")\n";
    out << pass_line("CM1", report.cm1.checked - static_cast<int>(report.cm1.failures.size()),
                     report.cm1.checked);
    out << pass_line("CM2", report.cm2.checked - static_cast<int>(report.cm2.failures.size()),
                     report.cm2.checked);
    if (report.cm2_partial) out << "note: CM2 compared boundaries only (no coset table)\n";
    out << "status: " << (report.passed() ? "ok" : "fail") << '\n';
    return report.passed() ? 0 : 1;
}

}  // namespace

int run_command(const CommandOptions& opts, std::ostream& out) {
    try {
        if (opts.input_path.empty()) {
            out << "ERROR USAGE: --input is required\n";
            return 2;
        }
        InputDocument doc = parse_document(read_file(opts.input_path));
        int max_level = Skeleton::kMaxSupportedLevel;
        if (opts.command == "skeleton") {
            if (opts.level < 0 || opts.level > Skeleton::kMaxSupportedLevel)
                throw ValidationError("skeleton needs --level between 0 and " +
                                      std::to_string(Skeleton::kMaxSupportedLevel));
            max_level = opts.level;
        }
        Skeleton sk = Skeleton::build(doc.to_construction_data(), max_level);

        if (opts.command == "validate") return cmd_validate(sk, out);
        if (opts.command == "skeleton") return cmd_skeleton(sk, opts, out);
        if (opts.command == "moore") return cmd_moore(sk, opts, out);
        if (opts.command == "peiffer") return cmd_peiffer(sk, opts, out);
        if (opts.command == "cosets") return cmd_cosets(sk, opts, out);
        if (opts.command == "crossed-complex") return cmd_crossed_complex(sk, opts, out);
        if (opts.command == "word-system") {
            out << export_word_system(sk);
            return 0;
        }
        out << "ERROR USAGE: unknown command '" << opts.command << "'\n";
        return 2;
    } catch (const ParseError& e) {
        out << "ERROR PARSE: " << e.what() << '\n';
        return 2;
    } catch (const CosetOverflow& e) {
        out << "ERROR OVERFLOW: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        out << "ERROR VALIDATE: " << e.what() << '\n';
        return 2;
    } catch (const StructuralError& e) {
        out << "ERROR STRUCTURE: " << e.what() << '\n';
        return 2;
    } catch (const std::ios_base::failure& e) {
        out << "ERROR IO: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace crossres
