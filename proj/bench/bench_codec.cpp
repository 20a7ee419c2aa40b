// Serial-vs-parallel benchmark for the data-parallel kernels: framed-stream
// decoding and overlap-vector counting. The parallel kernels must agree with
// the serial reference bit for bit; this binary times both and reports the
// speedup.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>

#include "udooc/codec.hpp"
#include "udooc/uw.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double time_seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void bench_decode(std::size_t messages) {
  udooc::EncoderContext ctx(udooc::UniqueWord::parse("0001"));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> dist(1, 5'000'000);
  std::vector<mpz_class> indices;
  indices.reserve(messages);
  for (std::size_t i = 0; i < messages; ++i)
    indices.emplace_back(static_cast<unsigned long>(dist(rng)));
  const auto stream = udooc::encode_stream(ctx, indices);

  std::vector<mpz_class> serial_out, parallel_out;
  // warm the shared tables once so both runs measure pure decoding
  parallel_out = udooc::decode_stream(ctx, stream, 1);
  const double serial = time_seconds([&] { serial_out = udooc::decode_stream_serial(ctx, stream); });
  const double parallel = time_seconds([&] { parallel_out = udooc::decode_stream(ctx, stream, 0); });
  const bool same = serial_out == parallel_out && serial_out == indices;
  std::printf("decode %zu messages (%zu payload bits): serial %.3fs, parallel %.3fs, "
              "speedup %.2fx, results %s\n",
              messages, stream.payload.size(), serial, parallel, serial / parallel,
              same ? "identical" : "DIFFER");
  if (!same) std::exit(1);
}

void bench_overlap(int L) {
  std::uint64_t serial_n = 0, parallel_n = 0;
  const double serial = time_seconds([&] { serial_n = udooc::count_overlap_vectors_serial(L); });
  const double parallel = time_seconds([&] { parallel_n = udooc::count_overlap_vectors(L); });
  std::printf("N_%d over %llu words: serial %.3fs, parallel %.3fs, speedup %.2fx, "
              "N = %llu, results %s\n",
              L, 1ull << L, serial, parallel, serial / parallel,
              static_cast<unsigned long long>(parallel_n),
              serial_n == parallel_n ? "identical" : "DIFFER");
  if (serial_n != parallel_n) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t messages = 200'000;
  int overlap_len = 21;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--messages") == 0 && i + 1 < argc)
      messages = static_cast<std::size_t>(std::atoll(argv[++i]));
    else if (std::strcmp(argv[i], "--overlap-len") == 0 && i + 1 < argc)
      overlap_len = std::atoi(argv[++i]);
  }
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif
  bench_decode(messages);
  bench_overlap(overlap_len);
  return 0;
}
