#include "hjcert/enumerate.hpp"
#include "hjcert/profile.hpp"
#include "hjcert/rdp.hpp"
#include "hjcert/report.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_Continuant(benchmark::State& state) {
    hjcert::HJString s({3, 2, 4});
    for (auto _ : state) {
        benchmark::DoNotOptimize(hjcert::continuant(s));
    }
}
BENCHMARK(BM_Continuant);

void BM_Profile(benchmark::State& state) {
    hjcert::HJString s({2, 3, 4});
    for (auto _ : state) {
        benchmark::DoNotOptimize(hjcert::profile(s));
    }
}
BENCHMARK(BM_Profile);

void BM_StringGeneration(benchmark::State& state) {
    hjcert::Rational t(-3, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hjcert::strings_with_contribution_at_least(t, 3));
    }
}
BENCHMARK(BM_StringGeneration);

void BM_MaxRhs3(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(hjcert::max_rhs(3));
    }
}
BENCHMARK(BM_MaxRhs3);

void BM_VerifyCase11(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(hjcert::verify_case(11));
    }
}
BENCHMARK(BM_VerifyCase11);

void BM_VerifyTheorem(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(hjcert::verify_theorem());
    }
}
BENCHMARK(BM_VerifyTheorem)->Unit(benchmark::kMillisecond);

void BM_SerializeCertificate(benchmark::State& state) {
    auto cert = hjcert::verify_theorem();
    for (auto _ : state) {
        benchmark::DoNotOptimize(hjcert::serialize_certificate(cert));
    }
}
BENCHMARK(BM_SerializeCertificate);

void BM_RdpScan(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(hjcert::cross_eliminate());
    }
}
BENCHMARK(BM_RdpScan);

} // namespace

BENCHMARK_MAIN();
