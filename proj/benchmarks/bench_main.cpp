#include <benchmark/benchmark.h>

#include "crossres/coset_table.hpp"
#include "crossres/crossed.hpp"
#include "crossres/parser.hpp"
#include "crossres/peiffer.hpp"

namespace {

using namespace crossres;

const char* kS3 =
    "[generators]\n"
    "a b\n"
    "[relators]\n"
    "r: a a\n"
    "s: b b b\n"
    "t: a b a b\n"
    "[identities]\n"
    "i1: r^-1 (a>r)\n";

Skeleton make_skeleton() {
    return Skeleton::build(parse_document(kS3).to_construction_data(), 3);
}

void BM_Reduce(benchmark::State& state) {
    Skeleton sk = make_skeleton();
    Rng rng(7);
    Word u = sk.sample_word(1, rng, 30);
    Word v = sk.sample_word(1, rng, 30);
    for (auto _ : state) benchmark::DoNotOptimize(multiply(u, v));
}
BENCHMARK(BM_Reduce);

void BM_FaceLevel2(benchmark::State& state) {
    Skeleton sk = make_skeleton();
    Rng rng(7);
    Word w = sk.sample_word(2, rng, 30);
    for (auto _ : state) benchmark::DoNotOptimize(sk.face(2, w));
}
BENCHMARK(BM_FaceLevel2);

void BM_PairingAdjacent(benchmark::State& state) {
    Skeleton sk = make_skeleton();
    Rng rng(7);
    Word x = sample_moore_word(sk, 1, rng);
    Word y = sample_moore_word(sk, 1, rng);
    for (auto _ : state) benchmark::DoNotOptimize(pairing_adjacent(sk, 1, x, y));
}
BENCHMARK(BM_PairingAdjacent);

void BM_CosetEnumeration(benchmark::State& state) {
    Skeleton sk = make_skeleton();
    for (auto _ : state)
        benchmark::DoNotOptimize(CosetTable::enumerate(sk.data().presentation, 100000));
}
BENCHMARK(BM_CosetEnumeration);

void BM_C2NormalForm(benchmark::State& state) {
    Skeleton sk = make_skeleton();
    CosetTable table = CosetTable::enumerate(sk.data().presentation, 100000);
    Rng rng(7);
    Word w = sample_moore_word(sk, 2, rng);
    for (auto _ : state) benchmark::DoNotOptimize(c2_normal_form(sk, table, w));
}
BENCHMARK(BM_C2NormalForm);

}  // namespace

BENCHMARK_MAIN();
