#include <benchmark/benchmark.h>

// The distribution's benchmark_main archive carries stale LTO bytecode, so the
// entry point lives here.
BENCHMARK_MAIN();
