#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ospc {

// splitmix64 step; advances state and returns the next value.
uint64_t splitmix64(uint64_t& state);

// Derives an independent child seed from (seed, salt). Used to give every
// sample/background its own RNG stream so generation order and parallelism
// cannot change the output.
uint64_t mix_seed(uint64_t seed, uint64_t salt);

// Deterministic RNG with fixed cross-platform draw semantics. std::*
// distributions are implementation-defined, so all draws are hand-rolled.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() { return splitmix64(state_); }

    // Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi);

    // Uniform double in [0, 1).
    double uniform01();

private:
    uint64_t state_;
};

uint64_t fnv1a64(const void* data, size_t len, uint64_t seed = 0xcbf29ce484222325ULL);
uint64_t hash_str(std::string_view s, uint64_t seed = 0xcbf29ce484222325ULL);

std::string to_hex(uint64_t v);
uint64_t parse_hex_u64(std::string_view s);  // throws precondition on bad input

// Lenient UTF-8 decoding: malformed sequences become U+FFFD and decoding
// resynchronizes at the next byte.
std::vector<char32_t> utf8_decode(std::string_view text);

std::string base64_encode(std::string_view bytes);
std::string base64_decode(std::string_view text);  // throws precondition on bad input

std::string read_file(const std::string& path);    // throws io_error
void write_file(const std::string& path, std::string_view content);

std::string lower_ascii(std::string_view s);
bool contains_ci(std::string_view haystack, std::string_view needle);

// One CSV record; honors double-quoted fields with "" escapes.
std::vector<std::string> split_csv_line(std::string_view line);
std::string csv_escape(std::string_view field);

// Probability formatting for prediction files: fixed six decimal places.
std::string format_probability(double p);

}  // namespace ospc
